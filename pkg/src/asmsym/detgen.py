"""Determinant generating functions Z_n(x,y,mu), T_n(x,mu), R_n(x,mu).

Matrices are built entry-by-entry from their defining double/triple binomial
sums, then reduced by fraction-free (Bareiss) elimination over Z[x,y].
Every division performed during elimination is exact in the ring; a
cofactor expansion is kept as an independent test oracle and as the
fallback when a pivot column is entirely zero.

Summation bounds are taken literally from the defining sums; out-of-range
binomials vanish under the generalized-binomial convention, and any term
whose x-exponent would be negative is skipped explicitly.
"""

from __future__ import annotations

from functools import lru_cache

from .bipoly import ONE, BiPoly
from .exact import binom

PolyMatrix = tuple[tuple[BiPoly, ...], ...]


def y_coef(i: int, t: int, mu: int) -> int:
    """Y(i,t,mu) = C(i+mu, 2i+1+mu-t) + C(i+1+mu, 2i+1+mu-t)."""
    b = 2 * i + 1 + mu - t
    return binom(i + mu, b) + binom(i + 1 + mu, b)


def build_z_matrix(n: int, mu: int) -> PolyMatrix:
    """The n x n matrix (delta_ij + z_ij) whose determinant is Z_n(x,y,mu).

    Rows 0..n-2 use the (t,k) double sum in x only; row n-1 uses the
    (t,k,l) triple sum carrying y^(l+1).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            terms: dict[tuple[int, int], int] = {}
            if i < n - 1:
                for t in range(n):
                    bi = binom(i + mu, t)
                    if not bi:
                        continue
                    for k in range(t, n):
                        bk = binom(k, t)
                        bj = binom(j - k + mu - 1, j - k)
                        if not bk or not bj:
                            continue
                        e = (k - t, 0)
                        terms[e] = terms.get(e, 0) + bi * bk * bj
            else:
                for t in range(n):
                    for k in range(t, n):
                        bk = binom(k, t)
                        bj = binom(j - k + mu - 1, j - k)
                        if not bk or not bj:
                            continue
                        prod = bk * bj
                        for ell in range(n):
                            bl = binom(n - 2 + mu - ell, t - ell)
                            if not bl:
                                continue
                            e = (k - t, ell + 1)
                            terms[e] = terms.get(e, 0) + bl * prod
            if i == j:
                terms[(0, 0)] = terms.get((0, 0), 0) + 1
            row.append(BiPoly(terms))
        rows.append(tuple(row))
    return tuple(rows)


def build_t_matrix(n: int, mu: int) -> PolyMatrix:
    """The n x n matrix of sums C(i+mu, t-i) C(j, 2j-t) x^(2j-t), t = 0..2n-2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            terms: dict[tuple[int, int], int] = {}
            for t in range(2 * n - 1):
                e = 2 * j - t
                if e < 0:
                    continue
                c = binom(i + mu, t - i) * binom(j, e)
                if c:
                    terms[(e, 0)] = terms.get((e, 0), 0) + c
            row.append(BiPoly(terms))
        rows.append(tuple(row))
    return tuple(rows)


def build_r_matrix(n: int, mu: int) -> PolyMatrix:
    """The n x n matrix of sums Y(i,t,mu) Y(j,t,0) x^(2j+1-t), t = 0..2n-1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            terms: dict[tuple[int, int], int] = {}
            for t in range(2 * n):
                e = 2 * j + 1 - t
                if e < 0:
                    continue
                c = y_coef(i, t, mu) * y_coef(j, t, 0)
                if c:
                    terms[(e, 0)] = terms.get((e, 0), 0) + c
            row.append(BiPoly(terms))
        rows.append(tuple(row))
    return tuple(rows)


def det_cofactor(matrix: PolyMatrix) -> BiPoly:
    """Cofactor-expansion determinant (test oracle; fine for n <= 7)."""
    n = len(matrix)
    memo: dict[tuple[int, ...], BiPoly] = {}

    def minor(cols: tuple[int, ...]) -> BiPoly:
        if not cols:
            return ONE
        cached = memo.get(cols)
        if cached is not None:
            return cached
        i = n - len(cols)
        total = BiPoly.zero()
        for pos, j in enumerate(cols):
            entry = matrix[i][j]
            if not entry:
                continue
            sub = minor(cols[:pos] + cols[pos + 1 :])
            term = entry * sub
            total = total + (term if pos % 2 == 0 else -term)
        memo[cols] = total
        return total

    return minor(tuple(range(n)))


def det_bareiss(matrix: PolyMatrix) -> BiPoly:
    """Fraction-free determinant over Z[x,y].

    Pivots are chosen as the first nonzero entry in column order; an
    all-zero pivot column aborts to the cofactor oracle.
    """
    n = len(matrix)
    if n == 0:
        return ONE
    a = [list(row) for row in matrix]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        pivot_row = None
        for i in range(k, n):
            if a[i][k]:
                pivot_row = i
                break
        if pivot_row is None:
            return det_cofactor(matrix)
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (pk * a[i][j] - aik * a[k][j]).divexact(prev)
            a[i][k] = BiPoly.zero()
        prev = pk
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def det(matrix: PolyMatrix) -> BiPoly:
    """Exact determinant of a square polynomial matrix."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    return det_bareiss(matrix)


@lru_cache(maxsize=None)
def z_poly(n: int, mu: int) -> BiPoly:
    """Z_n(x,y,mu); Z_0 is the conventional 1."""
    if n == 0:
        return ONE
    return det(build_z_matrix(n, mu))


@lru_cache(maxsize=None)
def t_poly(n: int, mu: int) -> BiPoly:
    """T_n(x,mu); T_0 is the empty determinant 1."""
    if n == 0:
        return ONE
    return det(build_t_matrix(n, mu))


@lru_cache(maxsize=None)
def r_poly(n: int, mu: int) -> BiPoly:
    """R_n(x,mu); R_0 is defined to be 1 without building a matrix."""
    if n == 0:
        return ONE
    return det(build_r_matrix(n, mu))
