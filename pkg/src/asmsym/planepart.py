"""Three plane-partition families with special-part weight statistics.

These enumerators are fully independent of the determinant builders and of
the matrix searches; they provide the combinatorial second route to the
same polynomials.

* Shifted plane partitions with the diagonal head rule (row i starts at
  a_ii = row length + 2*mu): weight x^r y^s with r the number of special
  parts (mu < a_ij <= j-i+mu) and s the number of first-row parts equal
  to n + 2*mu.
* Triangular arrays with weakly decreasing rows and columns and the first
  column capped at n-i+1+mu; a part is special when a_ij <= j.
* Self-complementary cyclically symmetric plane partitions in the cube of
  side 2m, weighted by special parts: i <= a_ij < j in 1-based indices,
  counted on the fundamental domain of the point-complementation (cells
  with i + j <= 2m + 1). Counting the whole array instead would tally each
  excess special twice; the restricted count is the one that matches the
  quarter-turn factor polynomials at every checkable size.

A plane partition in a cube is represented by its height array; cyclic
symmetry of the 3-dimensional Ferrers solid is equivalent to every column
of the height array being the conjugate of the matching row, and
self-complementarity to a_ij + a(2m+1-i, 2m+1-j) = 2m pointwise.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .bipoly import BiPoly


def enum_shifted_pp(n: int, mu: int) -> BiPoly:
    """Weight sum over shifted plane partitions with row lengths <= n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    counts: dict[tuple[int, int], int] = {}
    top = n + 2 * mu

    def bump(specials: int, ytop: int) -> None:
        key = (specials, ytop)
        counts[key] = counts.get(key, 0) + 1

    def extend(i: int, max_lam: int, prev: dict[int, int], specials: int, ytop: int):
        bump(specials, ytop)
        for lam in range(i, max_lam + 1):
            head = lam - i + 1 + 2 * mu
            if i > 1 and head >= prev[i]:
                break  # head grows with lam; the strict column fails for all larger lam
            # the diagonal head is never special: head > mu while the window ends at mu
            fill(i, lam, i + 1, prev, {i: head}, specials, ytop + (1 if i == 1 and head == top else 0))

    def fill(i, lam, j, prev, cur, specials, ytop):
        if j > lam:
            # lam may repeat: column strictness alone separates the rows
            extend(i + 1, lam, cur, specials, ytop)
            return
        hi = cur[j - 1]
        if i > 1:
            hi = min(hi, prev[j] - 1)
        for v in range(1, hi + 1):
            cur[j] = v
            fill(
                i,
                lam,
                j + 1,
                prev,
                cur,
                specials + (1 if mu < v <= j - i + mu else 0),
                ytop + (1 if i == 1 and v == top else 0),
            )
        cur.pop(j, None)

    if n == 0:
        bump(0, 0)
    else:
        extend(1, n, {}, 0, 0)
    return BiPoly({(r, s): c for (r, s), c in counts.items()})


def enum_tri_array(n: int, mu: int) -> BiPoly:
    """Weight sum over triangular arrays with rows i = 1..n-1 of length n-i."""
    if n < 1:
        raise ValueError("n must be >= 1")
    counts: dict[int, int] = {}

    def bump(specials: int) -> None:
        counts[specials] = counts.get(specials, 0) + 1

    def fill(i: int, j: int, prev: list[int], cur: list[int], specials: int):
        width = n - i
        if j > width:
            if i == n - 1:
                bump(specials)
            else:
                fill(i + 1, 1, cur, [], specials)
            return
        hi = n - i + 1 + mu if j == 1 else cur[j - 2]
        if i > 1:
            hi = min(hi, prev[j - 1])
        for v in range(1, hi + 1):
            cur.append(v)
            fill(i, j + 1, prev, cur, specials + (1 if v <= j else 0))
            cur.pop()

    if n == 1:
        bump(0)
    else:
        fill(1, 1, [], [], 0)
    return BiPoly({(r, 0): c for r, c in counts.items()})


def cyclic_plane_partitions(size: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield all cyclically symmetric plane partitions in the size^3 cube.

    Height arrays are built row by row; completing row j fixes column j as
    its conjugate, which is checked against the rows already placed and
    forces the matching prefix cells of the rows below.
    """
    forced: dict[tuple[int, int], int] = {}
    rows: list[tuple[int, ...]] = []
    results: list[tuple[tuple[int, ...], ...]] = []

    def conjugate(row: tuple[int, ...], level: int) -> int:
        # number of entries >= level+1 (levels are 1-based heights)
        return sum(1 for v in row if v > level)

    def place(i: int) -> None:
        if i == size:
            results.append(tuple(rows))
            return
        prefix = [forced[(i, j)] for j in range(i)]
        for j in range(1, i):
            if prefix[j] > prefix[j - 1]:
                return
        if i > 0 and any(prefix[j] > rows[i - 1][j] for j in range(i)):
            return
        cur = prefix + [0] * (size - i)

        def cell(j: int) -> None:
            if j == size:
                row = tuple(cur)
                stored: list[tuple[int, int]] = []
                ok = True
                for t in range(size):
                    c = conjugate(row, t)
                    if t < i:
                        if rows[t][i] != c:
                            ok = False
                            break
                    elif t == i:
                        if row[i] != c:
                            ok = False
                            break
                    else:
                        forced[(t, i)] = c
                        stored.append((t, i))
                if ok:
                    rows.append(row)
                    place(i + 1)
                    rows.pop()
                for key in stored:
                    del forced[key]
                return
            hi = size if j == i else cur[j - 1]
            if i > 0:
                hi = min(hi, rows[i - 1][j])
            for v in range(hi, -1, -1):
                cur[j] = v
                cell(j + 1)
            cur[j] = 0

        cell(i)

    place(0)
    yield from results


def enum_sccpp(m: int) -> BiPoly:
    """Special-part weight sum over self-complementary cyclically symmetric
    plane partitions in the cube of side 2m."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return BiPoly.one()
    size = 2 * m
    counts: dict[int, int] = {}
    for heights in cyclic_plane_partitions(size):
        if not all(
            heights[i][j] + heights[size - 1 - i][size - 1 - j] == size
            for i in range(size)
            for j in range(size)
        ):
            continue
        k = sum(
            1
            for i in range(size)
            for j in range(size)
            if i + 1 <= heights[i][j] <= j and i + j + 2 <= size + 1
        )
        counts[k] = counts.get(k, 0) + 1
    return BiPoly({(r, 0): c for r, c in counts.items()})
