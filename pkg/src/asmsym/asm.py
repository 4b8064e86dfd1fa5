"""Alternating sign matrices, their symmetry classes and weight statistics.

A matrix is a tuple of row tuples over {-1, 0, 1}. Validity is the
prefix-sum characterization: every row-prefix and column-prefix partial sum
lies in {0, 1} and every full row and column sums to 1. Rows and columns
are indexed from 0 to n-1.

Eight symmetry classes are keyed 1..8; each carries the invariance
predicate and the parity rule deciding for which sizes the class is
nonempty. Class mnemonics: all, flip, half-turn, transpose, quarter-turn,
plus, diagonals, full.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

Matrix = tuple[tuple[int, ...], ...]


class OrbitCountError(ValueError):
    """A symmetry-restricted statistic met an impossible -1 count."""


def is_asm(matrix: Matrix) -> bool:
    """Full validity check (entries, alternation, row/column sums)."""
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        return False
    col = [0] * n
    for row in matrix:
        rp = 0
        for j, e in enumerate(row):
            if e not in (-1, 0, 1):
                return False
            rp += e
            if rp < 0 or rp > 1:
                return False
            col[j] += e
            if col[j] < 0 or col[j] > 1:
                return False
        if rp != 1:
            return False
    return all(c == 1 for c in col)


def minus_ones(matrix: Matrix) -> int:
    """Number of -1 entries."""
    return sum(row.count(-1) for row in matrix)


def top_row_one(matrix: Matrix) -> int:
    """The unique column s with a 1 in the top row."""
    return matrix[0].index(1)


def halfturn_orbits(matrix: Matrix) -> int:
    """Orbits of -1s under the half-turn group.

    Half the -1 count, except when n is odd and the central entry is -1,
    in which case the count is 2l+1 and the result is l+1.
    """
    n = len(matrix)
    total = minus_ones(matrix)
    if n % 2 and matrix[n // 2][n // 2] == -1:
        if total % 2 == 0:
            raise OrbitCountError(f"central -1 with even -1 count {total}")
        return (total - 1) // 2 + 1
    if total % 2:
        raise OrbitCountError(f"odd -1 count {total} without central -1")
    return total // 2


def quarterturn_orbits(matrix: Matrix) -> int:
    """Orbits of -1s under the quarter-turn group.

    One fourth of the -1 count when it is divisible by 4; l+1 when the
    count is 4l+1 (the only other possibility for a quarter-turn
    invariant matrix).
    """
    total = minus_ones(matrix)
    rem = total % 4
    if rem == 0:
        return total // 4
    if rem == 1:
        return (total - 1) // 4 + 1
    raise OrbitCountError(f"-1 count {total} is not 0 or 1 mod 4")


def flip_left_minus(matrix: Matrix) -> int:
    """Number of -1s strictly left of the middle column (flip class, odd n).

    Also validates the forced middle column, which alternates +1/-1 from
    the top.
    """
    n = len(matrix)
    if n % 2 == 0:
        raise ValueError("flip-symmetric matrices have odd size")
    m = n // 2
    for i in range(n):
        if matrix[i][m] != (1 if i % 2 == 0 else -1):
            raise ValueError("middle column does not alternate")
    return sum(row[:m].count(-1) for row in matrix)


def quadrant_minus(matrix: Matrix) -> int:
    """Number of -1s in the open top-left quadrant (plus class, odd n).

    Validates the forced middle cross: both the middle row and the middle
    column alternate +1/-1.
    """
    n = len(matrix)
    if n % 2 == 0:
        raise ValueError("plus-symmetric matrices have odd size")
    m = n // 2
    for i in range(n):
        expect = 1 if i % 2 == 0 else -1
        if matrix[i][m] != expect or matrix[m][i] != expect:
            raise ValueError("middle cross does not alternate")
    return sum(matrix[i][:m].count(-1) for i in range(m))


# ----------------------------------------------------------------------
# symmetry classes


def _pred_all(a: Matrix) -> bool:
    return True


def _pred_flip(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == a[i][n - 1 - j] for i in range(n) for j in range(n))


def _pred_halfturn(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == a[n - 1 - i][n - 1 - j] for i in range(n) for j in range(n))


def _pred_transpose(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(n))


def _pred_quarterturn(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][n - 1 - i] for i in range(n) for j in range(n))


def _pred_plus(a: Matrix) -> bool:
    n = len(a)
    return all(
        a[i][j] == a[i][n - 1 - j] == a[n - 1 - i][j] for i in range(n) for j in range(n)
    )


def _pred_diagonals(a: Matrix) -> bool:
    n = len(a)
    return all(
        a[i][j] == a[j][i] == a[n - 1 - j][n - 1 - i] for i in range(n) for j in range(n)
    )


def _pred_full(a: Matrix) -> bool:
    return _pred_transpose(a) and _pred_flip(a)


@dataclass(frozen=True)
class SymmetryClass:
    """One of the eight invariance classes, with its existence parity rule."""

    id: int
    mnemonic: str
    label: str
    predicate: Callable[[Matrix], bool]
    exists: Callable[[int], bool]


CLASSES: dict[int, SymmetryClass] = {
    1: SymmetryClass(1, "all", "no conditions", _pred_all, lambda n: True),
    2: SymmetryClass(2, "flip", "vertical axis", _pred_flip, lambda n: n % 2 == 1),
    3: SymmetryClass(3, "half-turn", "half turn", _pred_halfturn, lambda n: True),
    4: SymmetryClass(4, "transpose", "diagonal", _pred_transpose, lambda n: True),
    5: SymmetryClass(
        5, "quarter-turn", "quarter turn", _pred_quarterturn, lambda n: n % 4 != 2
    ),
    6: SymmetryClass(
        6, "plus", "horizontal and vertical", _pred_plus, lambda n: n % 2 == 1
    ),
    7: SymmetryClass(7, "diagonals", "both diagonals", _pred_diagonals, lambda n: True),
    8: SymmetryClass(8, "full", "all symmetries", _pred_full, lambda n: n % 2 == 1),
}

_BY_MNEMONIC = {c.mnemonic: c for c in CLASSES.values()}


def symmetry_class(key: "int | str") -> SymmetryClass:
    """Look up a class by id (1-8, possibly as a string) or mnemonic."""
    if isinstance(key, int):
        if key in CLASSES:
            return CLASSES[key]
        raise KeyError(f"no symmetry class {key}")
    text = key.strip().lower()
    if text in _BY_MNEMONIC:
        return _BY_MNEMONIC[text]
    if text.isdigit() and int(text) in CLASSES:
        return CLASSES[int(text)]
    raise KeyError(f"no symmetry class {key!r}")
