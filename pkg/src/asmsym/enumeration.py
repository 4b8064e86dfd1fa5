"""Enumeration engines for the eight symmetry classes.

The search state is the vector of column prefix sums after the rows placed
so far, encoded as an n-bit mask. Placing a row is a transition between
two masks whose difference is a valid alternating row of sum 1; this
encodes the defining axioms exactly, with no post-filtering.

Two kinds of engine share those transitions:

* backtracking scans over a fundamental domain of each class (rows for the
  chain-structured classes, wedges for the diagonal classes, concentric
  rings for the quarter-turn class), which drive the visitor API and serve
  as the independent oracle at small sizes;
* transfer-matrix dynamic programs that aggregate weight statistics per
  state, used by the generating-function API where the class structure is
  Markov in the mask (classes 1, 2, 3, 6) or in a shrinking column window
  (class 5). They make double-digit sizes practical.

Visitation order is a pure function of (n, class). Weighted results are
sums of per-leaf monomials, so any partition of the search (for instance
by the top row's 1-position, as used by the parallel helpers) merges to
the identical polynomial.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from .asm import CLASSES, Matrix, SymmetryClass, symmetry_class
from .bipoly import BiPoly

Visitor = Callable[[Matrix], None]

# ----------------------------------------------------------------------
# row transitions

_SUCC: dict[tuple[int, int], tuple] = {}


def _successors(n: int, mask: int):
    """All (new_mask, row, minus_count) reachable from a column-state mask."""
    key = (n, mask)
    hit = _SUCC.get(key)
    if hit is not None:
        return hit
    out: list[tuple[int, tuple[int, ...], int]] = []
    row = [0] * n

    def walk(j: int, m: int, rp: int, minus: int) -> None:
        if j == n:
            if rp == 1:
                out.append((m, tuple(row), minus))
            return
        bit = (m >> j) & 1
        row[j] = 0
        walk(j + 1, m, rp, minus)
        if rp == 0 and not bit:
            row[j] = 1
            walk(j + 1, m | (1 << j), 1, minus)
            row[j] = 0
        elif rp == 1 and bit:
            row[j] = -1
            walk(j + 1, m & ~(1 << j), 0, minus + 1)
            row[j] = 0

    walk(0, mask, 0, 0)
    res = tuple(out)
    _SUCC[key] = res
    return res


_PAL_SUCC: dict[tuple[int, int, int], tuple] = {}


def _pal_successors(m: int, mask: int, parity: int):
    """Palindromic-row transitions on the left-half state (odd-size rows).

    Returns (new_left_mask, left_row, center, minus_left). The center entry
    is forced by the row sum; `parity` is the center column's prefix state,
    which the forced entry must keep in {0, 1}. Validity of the mirrored
    right half follows from the left walk.
    """
    key = (m, mask, parity)
    hit = _PAL_SUCC.get(key)
    if hit is not None:
        return hit
    out: list[tuple[int, tuple[int, ...], int, int]] = []
    row = [0] * m

    def walk(j: int, mk: int, rp: int, minus: int) -> None:
        if j == m:
            center = 1 - 2 * rp
            if 0 <= parity + center <= 1:
                out.append((mk, tuple(row), center, minus))
            return
        bit = (mk >> j) & 1
        row[j] = 0
        walk(j + 1, mk, rp, minus)
        if rp == 0 and not bit:
            row[j] = 1
            walk(j + 1, mk | (1 << j), 1, minus)
            row[j] = 0
        elif rp == 1 and bit:
            row[j] = -1
            walk(j + 1, mk & ~(1 << j), 0, minus + 1)
            row[j] = 0

    walk(0, mask, 0, 0)
    res = tuple(out)
    _PAL_SUCC[key] = res
    return res


def _forced_middle_row(n: int, mask: int) -> tuple[int, ...] | None:
    """The half-turn-forced middle row for odd n, or None if invalid."""
    row = tuple(
        1 - ((mask >> j) & 1) - ((mask >> (n - 1 - j)) & 1) for j in range(n)
    )
    rp = 0
    for e in row:
        rp += e
        if rp < 0 or rp > 1:
            return None
    return row


def _antipalindromic(n: int, mask: int) -> bool:
    return all(((mask >> j) & 1) + ((mask >> (n - 1 - j)) & 1) == 1 for j in range(n))


# ----------------------------------------------------------------------
# transfer-matrix generating functions (classes 1, 2, 3, 6)

Stats = dict[tuple[int, int], int]  # (x-exponent, y-exponent) -> count


def _advance(states, n, depth):
    """One DP step over full-width masks; depth 0 records the 1-position."""
    new_states: dict[int, Stats] = {}
    for mask, val in states.items():
        for new_mask, row, minus in _successors(n, mask):
            if depth == 0:
                shift = (0, row.index(1))
            else:
                shift = (minus, 0)
            tgt = new_states.setdefault(new_mask, {})
            for (ex, ey), c in val.items():
                k = (ex + shift[0], ey + shift[1])
                tgt[k] = tgt.get(k, 0) + c
    return new_states


def _gf_all_stats(n: int) -> Stats:
    states: dict[int, Stats] = {0: {(0, 0): 1}}
    for depth in range(n):
        states = _advance(states, n, depth)
    return states.get((1 << n) - 1, {})


def _gf_halfturn_stats(n: int) -> Stats:
    if n == 1:
        return {(0, 0): 1}
    m = n // 2
    states: dict[int, Stats] = {0: {(0, 0): 1}}
    for depth in range(m):
        states = _advance(states, n, depth)
    total: Stats = {}
    if n % 2 == 0:
        for mask, val in states.items():
            if _antipalindromic(n, mask):
                for k, c in val.items():
                    total[k] = total.get(k, 0) + c
    else:
        for mask, val in states.items():
            row = _forced_middle_row(n, mask)
            if row is None:
                continue
            extra = sum(1 for j in range(m) if row[j] == -1)
            if row[m] == -1:
                extra += 1
            for (ex, ey), c in val.items():
                k = (ex + extra, ey)
                total[k] = total.get(k, 0) + c
    return total


def _advance_pal(states, m, depth):
    parity = depth & 1
    new_states: dict[int, dict[int, int]] = {}
    for mask, val in states.items():
        for new_mask, _row, _center, minus in _pal_successors(m, mask, parity):
            tgt = new_states.setdefault(new_mask, {})
            for ex, c in val.items():
                tgt[ex + minus] = tgt.get(ex + minus, 0) + c
    return new_states


def _gf_flip_stats(n: int) -> Stats:
    m = n // 2
    states: dict[int, dict[int, int]] = {0: {0: 1}}
    for depth in range(n):
        states = _advance_pal(states, m, depth)
    final = states.get((1 << m) - 1, {})
    return {(ex, 0): c for ex, c in final.items()}


def _gf_plus_stats(n: int) -> Stats:
    m = n // 2
    states: dict[int, dict[int, int]] = {0: {0: 1}}
    for depth in range(m):
        states = _advance_pal(states, m, depth)
    target = sum(1 << j for j in range(1, m, 2))
    final = states.get(target, {})
    return {(ex, 0): c for ex, c in final.items()}


# ----------------------------------------------------------------------
# quarter-turn class: windowed ring DP and materializing scan
#
# The quarter-turn orbit of cell (i, j) is {(i,j), (j,n-1-i),
# (n-1-i,n-1-j), (n-1-j,i)}; a fundamental domain is the family of ring
# segments (r, j) for j = r..n-2-r, whose last column n-1-r carries a copy
# of the corner value. All row/column constraints of the full matrix
# reduce to the prefix states of the shrinking middle column window, so
# ring-to-ring transitions depend only on the window width and mask.


@lru_cache(maxsize=None)
def _qt_ring_transitions(width: int, mask: int):
    """Aggregated ring transitions: ((new_mask, dminus) -> multiplicity)."""
    out: dict[tuple[int, int], int] = {}
    s0 = mask & 1
    p0 = (mask >> (width - 1)) & 1
    window_mask = (1 << max(width - 2, 0)) - 1

    def cell(idx: int, rp: int, mk: int, dm: int, first: int) -> None:
        if idx == width - 1:
            rp2 = rp + first
            if 0 <= rp2 <= 1 and rp2 + s0 == 1:
                key = ((mk >> 1) & window_mask, dm)
                out[key] = out.get(key, 0) + 1
            return
        if idx == 0:
            cell(1, rp, mk, dm, 0)
            if rp == 0:
                cell(1, 1, mk, dm, 1)
            elif rp == 1:
                cell(1, 0, mk, dm + 1, -1)
            return
        bit = (mk >> idx) & 1
        cell(idx + 1, rp, mk, dm, first)
        if rp == 0 and not bit:
            cell(idx + 1, 1, mk | (1 << idx), dm, first)
        elif rp == 1 and bit:
            cell(idx + 1, 0, mk & ~(1 << idx), dm + 1, first)

    cell(0, p0, mask, 0, 0)
    return tuple(sorted(out.items()))


def _gf_quarterturn_stats(n: int) -> Stats:
    if n == 1:
        return {(0, 0): 1}
    m = n // 2
    # ring 0: the top row is a lone 1 at s in 1..n-2
    states: dict[int, Stats] = {}
    for s in range(1, n - 1):
        states.setdefault(1 << (s - 1), {})[(0, s)] = 1
    width = n - 2
    for _r in range(1, m):
        new_states: dict[int, Stats] = {}
        for mask, val in states.items():
            for (new_mask, dm), mult in _qt_ring_transitions(width, mask):
                tgt = new_states.setdefault(new_mask, {})
                for (ex, ey), c in val.items():
                    k = (ex + dm, ey)
                    tgt[k] = tgt.get(k, 0) + c * mult
        states = new_states
        width -= 2
    total: Stats = {}
    for mask, val in states.items():
        center = mask & 1 if n % 2 else 0
        for (ex, ey), c in val.items():
            k = (ex + center, ey)
            total[k] = total.get(k, 0) + c
    return total


def _scan_quarterturn(n: int, visit: Visitor, s_filter: int | None = None) -> None:
    """Materializing DFS over the quarter-turn ring domain."""
    m = n // 2
    if n == 1:
        if s_filter in (None, 0):
            visit(((1,),))
        return
    colpref = [0] * n
    segs = [[0] * (n - 1 - 2 * r) for r in range(m)]

    def emit() -> None:
        a = [[0] * n for _ in range(n)]
        for r in range(m):
            for idx, e in enumerate(segs[r]):
                j = r + idx
                a[r][j] = e
                a[j][n - 1 - r] = e
                a[n - 1 - r][n - 1 - j] = e
                a[n - 1 - j][r] = e
        if n % 2:
            a[m][m] = 1 - 2 * colpref[m]
        visit(tuple(tuple(row) for row in a))

    def ring(r: int) -> None:
        if r == m:
            emit()
            return
        seg = segs[r]
        lo, hi = r, n - 2 - r
        p0 = colpref[n - 1 - r]
        s0 = colpref[r]

        def cell(j: int, rp: int) -> None:
            if j > hi:
                rp2 = rp + seg[0]
                if 0 <= rp2 <= 1 and rp2 + s0 == 1:
                    ring(r + 1)
                return
            if r == 0 and s_filter is not None:
                choices: tuple[int, ...] = (1,) if j == s_filter else (0,)
            else:
                choices = (-1, 0, 1)
            mid = j > lo
            saved = colpref[j]
            for e in choices:
                rp2 = rp + e
                if rp2 < 0 or rp2 > 1:
                    continue
                if mid:
                    c2 = saved + e
                    if c2 < 0 or c2 > 1:
                        continue
                    colpref[j] = c2
                seg[j - lo] = e
                cell(j + 1, rp2)
            if mid:
                colpref[j] = saved

        cell(lo, p0)

    ring(0)


# ----------------------------------------------------------------------
# chain-structured scans (classes 1, 2, 3, 6)


def _scan_all(n: int, visit: Visitor, s_filter: int | None = None) -> None:
    rows: list[tuple[int, ...]] = []

    def place(mask: int, depth: int) -> None:
        if depth == n:
            visit(tuple(rows))
            return
        for new_mask, row, _minus in _successors(n, mask):
            if depth == 0 and s_filter is not None and row[s_filter] != 1:
                continue
            rows.append(row)
            place(new_mask, depth + 1)
            rows.pop()

    place(0, 0)


def _scan_halfturn(n: int, visit: Visitor) -> None:
    if n == 1:
        visit(((1,),))
        return
    m = n // 2
    rows: list[tuple[int, ...]] = []

    def emit(middle: tuple[int, ...] | None) -> None:
        full = list(rows)
        if middle is not None:
            full.append(middle)
        for i in range(m - 1, -1, -1):
            full.append(tuple(reversed(rows[i])))
        visit(tuple(full))

    def place(mask: int, depth: int) -> None:
        if depth == m:
            if n % 2:
                row = _forced_middle_row(n, mask)
                if row is not None:
                    emit(row)
            elif _antipalindromic(n, mask):
                emit(None)
            return
        for new_mask, row, _minus in _successors(n, mask):
            rows.append(row)
            place(new_mask, depth + 1)
            rows.pop()

    place(0, 0)


def _scan_flip(n: int, visit: Visitor) -> None:
    m = n // 2
    rows: list[tuple[int, ...]] = []

    def place(mask: int, depth: int) -> None:
        if depth == n:
            if mask == (1 << m) - 1:
                visit(tuple(rows))
            return
        for new_mask, left, center, _minus in _pal_successors(m, mask, depth & 1):
            rows.append(left + (center,) + tuple(reversed(left)))
            place(new_mask, depth + 1)
            rows.pop()

    place(0, 0)


def _scan_plus(n: int, visit: Visitor) -> None:
    m = n // 2
    target = sum(1 << j for j in range(1, m, 2))
    middle = tuple(1 if j % 2 == 0 else -1 for j in range(n))
    rows: list[tuple[int, ...]] = []

    def emit() -> None:
        full = list(rows)
        full.append(middle)
        for i in range(m - 1, -1, -1):
            full.append(rows[i])
        visit(tuple(full))

    def place(mask: int, depth: int) -> None:
        if depth == m:
            if mask == target:
                emit()
            return
        for new_mask, left, center, _minus in _pal_successors(m, mask, depth & 1):
            rows.append(left + (center,) + tuple(reversed(left)))
            place(new_mask, depth + 1)
            rows.pop()

    place(0, 0)


# ----------------------------------------------------------------------
# diagonal-symmetry scans (classes 4, 7, 8)


def _scan_transpose(n: int, visit: Visitor, s_filter: int | None = None) -> None:
    colstate = [0] * n
    rows: list[tuple[int, ...]] = []

    def place(i: int) -> None:
        if i == n:
            visit(tuple(rows))
            return
        cur = [rows[c][i] for c in range(i)] + [0] * (n - i)

        def cell(j: int, rp: int) -> None:
            if j == n:
                if rp == 1:
                    rows.append(tuple(cur))
                    place(i + 1)
                    rows.pop()
                return
            if i == 0 and s_filter is not None:
                choices: tuple[int, ...] = (1,) if j == s_filter else (0,)
            else:
                choices = (-1, 0, 1)
            saved = colstate[j]
            for e in choices:
                rp2 = rp + e
                if rp2 < 0 or rp2 > 1:
                    continue
                c2 = saved + e
                if c2 < 0 or c2 > 1:
                    continue
                colstate[j] = c2
                cur[j] = e
                cell(j + 1, rp2)
                cur[j] = 0
            colstate[j] = saved

        cell(i, colstate[i])

    place(0)


def _scan_diagonals(
    n: int,
    visit: Visitor | None,
    count: list[int] | None = None,
    s_filter: int | None = None,
) -> None:
    """DFS for the both-diagonals class over rows 0..ceil(n/2)-1.

    The group contains the half-turn, so the bottom half mirrors the top;
    forced prefixes come from the transpose, forced suffixes from the
    anti-transpose. With `count` given, leaves are tallied without
    materializing matrices.
    """
    m, odd = divmod(n, 2)
    colstate = [0] * n
    rows: list[tuple[int, ...]] = []

    def leaf(middle: tuple[int, ...] | None) -> None:
        if count is not None:
            count[0] += 1
            return
        full = list(rows)
        if middle is not None:
            full.append(middle)
        for i in range(m - 1, -1, -1):
            full.append(tuple(reversed(rows[i])))
        visit(tuple(full))

    def place(i: int) -> None:
        if i == m:
            if odd:
                row = _forced_middle_row(n, colstate_mask())
                if row is None:
                    return
                for j in range(m):
                    if row[j] != rows[j][m]:
                        return
                leaf(row)
            elif all(colstate[j] + colstate[n - 1 - j] == 1 for j in range(n)):
                leaf(None)
            return
        lo, hi = i, n - 1 - i
        prefix = [rows[c][i] for c in range(i)]
        suffix = [rows[n - 1 - c][n - 1 - i] for c in range(hi + 1, n)]
        for c, e in enumerate(prefix):
            colstate[c] += e
        cur = prefix + [0] * (hi - lo + 1) + suffix

        def tail(rp: int) -> None:
            rpp = rp
            applied = 0
            ok = True
            for off, e in enumerate(suffix):
                rpp += e
                c2 = colstate[hi + 1 + off] + e
                if rpp < 0 or rpp > 1 or c2 < 0 or c2 > 1:
                    ok = False
                    break
                colstate[hi + 1 + off] = c2
                applied += 1
            if ok and rpp == 1:
                rows.append(tuple(cur))
                place(i + 1)
                rows.pop()
            for off in range(applied - 1, -1, -1):
                colstate[hi + 1 + off] -= suffix[off]

        def cell(j: int, rp: int) -> None:
            if j > hi:
                tail(rp)
                return
            if i == 0 and s_filter is not None:
                choices: tuple[int, ...] = (1,) if j == s_filter else (0,)
            else:
                choices = (-1, 0, 1)
            saved = colstate[j]
            for e in choices:
                rp2 = rp + e
                if rp2 < 0 or rp2 > 1:
                    continue
                c2 = saved + e
                if c2 < 0 or c2 > 1:
                    continue
                colstate[j] = c2
                cur[j] = e
                cell(j + 1, rp2)
                cur[j] = 0
            colstate[j] = saved

        cell(lo, colstate[i])
        for c, e in enumerate(prefix):
            colstate[c] -= e

    def colstate_mask() -> int:
        return sum(1 << j for j in range(n) if colstate[j])

    place(0)


def _scan_full(n: int, visit: Visitor, s_filter: int | None = None) -> None:
    """DFS for the fully symmetric class (odd n): octant cells are free."""
    m = n // 2
    if s_filter is not None and s_filter != m:
        return
    colstate = [0] * n
    rows: list[tuple[int, ...]] = []

    def leaf(middle: tuple[int, ...]) -> None:
        full = list(rows)
        full.append(middle)
        for i in range(m - 1, -1, -1):
            full.append(rows[i])
        visit(tuple(full))

    def place(i: int) -> None:
        if i == m:
            mask = sum(1 << j for j in range(n) if colstate[j])
            row = _forced_middle_row(n, mask)
            if row is None:
                return
            for j in range(m):
                if row[j] != rows[j][m]:
                    return
            leaf(row)
            return
        prefix = [rows[c][i] for c in range(i)]
        for c, e in enumerate(prefix):
            colstate[c] += e
        cur = prefix + [0] * (n - i)

        def tail(rp: int) -> None:
            # mirrored right half: cur[c] = cur[n-1-c] for c > m
            rpp = rp
            applied = 0
            ok = True
            for c in range(m + 1, n):
                e = cur[n - 1 - c]
                rpp += e
                c2 = colstate[c] + e
                if rpp < 0 or rpp > 1 or c2 < 0 or c2 > 1:
                    ok = False
                    break
                colstate[c] = c2
                cur[c] = e
                applied += 1
            if ok and rpp == 1:
                rows.append(tuple(cur))
                place(i + 1)
                rows.pop()
            for c in range(m + applied, m, -1):
                colstate[c] -= cur[c]
                cur[c] = 0

        def cell(j: int, rp: int) -> None:
            if j > m:
                tail(rp)
                return
            saved = colstate[j]
            for e in (-1, 0, 1):
                rp2 = rp + e
                if rp2 < 0 or rp2 > 1:
                    continue
                c2 = saved + e
                if c2 < 0 or c2 > 1:
                    continue
                colstate[j] = c2
                cur[j] = e
                cell(j + 1, rp2)
                cur[j] = 0
            colstate[j] = saved

        cell(i, colstate[i])
        for c, e in enumerate(prefix):
            colstate[c] -= e

    place(0)


# ----------------------------------------------------------------------
# public API


@dataclass(frozen=True)
class WeightedGF:
    """A symmetry class's weighted generating function at one size."""

    class_id: int
    n: int
    poly: BiPoly
    count: int


def _stats_to_poly(stats: Stats) -> BiPoly:
    return BiPoly({k: v for k, v in stats.items()})


def _count_leaves(scan, n: int, s_filter: int | None = None) -> int:
    box = [0]

    def bump(_m: Matrix) -> None:
        box[0] += 1

    if scan is _scan_diagonals:
        _scan_diagonals(n, None, count=box, s_filter=s_filter)
    elif s_filter is None:
        scan(n, bump)
    else:
        scan(n, bump, s_filter)
    return box[0]


@lru_cache(maxsize=None)
def genfun(n: int, class_id: int) -> WeightedGF:
    """Weighted generating function for one class and size.

    Classes 1, 3 and 5 are weighted x^r y^s, classes 2 and 6 x^k; classes
    4, 7 and 8 carry no weight statistic and yield their raw count as a
    constant polynomial. Parity-empty combinations yield the zero
    polynomial.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    cls = CLASSES[class_id]
    if not cls.exists(n):
        return WeightedGF(class_id, n, BiPoly.zero(), 0)
    if class_id == 1:
        stats = _gf_all_stats(n)
    elif class_id == 2:
        stats = _gf_flip_stats(n)
    elif class_id == 3:
        stats = _gf_halfturn_stats(n)
    elif class_id == 5:
        stats = _gf_quarterturn_stats(n)
    elif class_id == 6:
        stats = _gf_plus_stats(n)
    elif class_id == 4:
        total = _count_leaves(_scan_transpose, n)
        stats = {(0, 0): total} if total else {}
    elif class_id == 7:
        total = _count_leaves(_scan_diagonals, n)
        stats = {(0, 0): total} if total else {}
    elif class_id == 8:
        total = _count_leaves(_scan_full, n)
        stats = {(0, 0): total} if total else {}
    else:
        raise KeyError(f"no symmetry class {class_id}")
    poly = _stats_to_poly(stats)
    return WeightedGF(class_id, n, poly, sum(stats.values()))


def count(n: int, class_key: "int | str") -> int:
    """Number of matrices of size n in the class."""
    return genfun(n, symmetry_class(class_key).id).count


def enumerate_asms(n: int, class_key: "int | str", visitor: Visitor) -> int:
    """Invoke `visitor` once per matrix of size n in the class.

    Visitation order is deterministic for fixed (n, class). Returns the
    number of visits. Parity-empty combinations visit nothing.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    cls = symmetry_class(class_key)
    if not cls.exists(n):
        return 0
    calls = [0]

    def wrapped(m: Matrix) -> None:
        calls[0] += 1
        visitor(m)

    scan = {
        1: _scan_all,
        2: _scan_flip,
        3: _scan_halfturn,
        4: _scan_transpose,
        5: _scan_quarterturn,
        6: _scan_plus,
        7: _scan_diagonals,
        8: _scan_full,
    }[cls.id]
    scan(n, wrapped)
    return calls[0]


# ----------------------------------------------------------------------
# deterministic parallel counting for the scan-based classes

_SCAN_BY_CLASS = {4: _scan_transpose, 7: _scan_diagonals, 8: _scan_full}


def _branch_count(args: tuple[int, int, int]) -> int:
    class_id, n, s = args
    return _count_leaves(_SCAN_BY_CLASS[class_id], n, s_filter=s)


def genfun_parallel(n: int, class_key: "int | str", threads: int = 1) -> WeightedGF:
    """genfun with the scan-based classes split by top-row 1-position.

    The per-branch results are merged in branch order, so the output is
    identical to the sequential path for any thread count.
    """
    cls = symmetry_class(class_key)
    if threads <= 1 or cls.id not in _SCAN_BY_CLASS or not cls.exists(n) or n == 1:
        return genfun(n, cls.id)
    jobs = [(cls.id, n, s) for s in range(n)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        totals = list(pool.map(_branch_count, jobs))
    total = sum(totals)
    stats: Stats = {(0, 0): total} if total else {}
    return WeightedGF(cls.id, n, _stats_to_poly(stats), total)


def weight_poly(matrix: Matrix, class_id: int) -> BiPoly:
    """The weight monomial of one matrix under its class statistic."""
    from . import asm

    if class_id == 1:
        return BiPoly.monomial(1, asm.minus_ones(matrix), asm.top_row_one(matrix))
    if class_id == 2:
        return BiPoly.monomial(1, asm.flip_left_minus(matrix), 0)
    if class_id == 3:
        return BiPoly.monomial(1, asm.halfturn_orbits(matrix), asm.top_row_one(matrix))
    if class_id == 5:
        return BiPoly.monomial(
            1, asm.quarterturn_orbits(matrix), asm.top_row_one(matrix)
        )
    if class_id == 6:
        return BiPoly.monomial(1, asm.quadrant_minus(matrix), 0)
    return BiPoly.one()


def genfun_by_enumeration(n: int, class_key: "int | str") -> WeightedGF:
    """Independent route: enumerate matrices and sum their weight monomials."""
    cls = symmetry_class(class_key)
    acc = [BiPoly.zero(), 0]

    def visitor(m: Matrix) -> None:
        acc[0] = acc[0] + weight_poly(m, cls.id)
        acc[1] += 1

    enumerate_asms(n, cls.id, visitor)
    return WeightedGF(cls.id, n, acc[0], acc[1])
