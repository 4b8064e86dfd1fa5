"""Exact bivariate polynomials in x and y over arbitrary-precision integers.

A polynomial is stored as a sparse map from exponent pairs (ex, ey) to
nonzero integer coefficients. Zero coefficients are never stored, so two
polynomials are equal iff their maps are equal. Instances are immutable;
every operation returns a fresh value, which makes them safe to share
across threads and to memoize.

The canonical term order is graded lexicographic: ascending total degree,
ties broken by ascending y-exponent. The text rendering lists terms in that
order (``2 + x*y + 2*y^2``) and the JSON rendering is the matching array of
``[ex, ey, coefficient-as-decimal-string]`` triples. Both are bit-exact
across runs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Union

Scalar = Union[int, Fraction]


class ExactDivisionError(ArithmeticError):
    """Polynomial division left a remainder (or the divisor was zero)."""


def _order_key(exps: tuple[int, int]) -> tuple[int, int]:
    ex, ey = exps
    return (ex + ey, ey)


class BiPoly:
    """An element of Z[x, y] with a canonical sparse representation."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[tuple[int, int], int] | None = None):
        pruned: dict[tuple[int, int], int] = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff:
                    ex, ey = exps
                    if ex < 0 or ey < 0:
                        raise ValueError(f"negative exponent in term {exps}")
                    pruned[(ex, ey)] = coeff
        self._terms = pruned

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, c: int) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, coeff: int, ex: int, ey: int) -> "BiPoly":
        return cls({(ex, ey): coeff})

    @classmethod
    def x(cls, power: int = 1) -> "BiPoly":
        return cls({(power, 0): 1})

    @classmethod
    def y(cls, power: int = 1) -> "BiPoly":
        return cls({(0, power): 1})

    # ------------------------------------------------------------------
    # basic queries

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, ex: int, ey: int) -> int:
        return self._terms.get((ex, ey), 0)

    def terms(self) -> Iterator[tuple[int, int, int]]:
        """Yield (ex, ey, coeff) in canonical order."""
        for exps in sorted(self._terms, key=_order_key):
            yield exps[0], exps[1], self._terms[exps]

    @property
    def deg_x(self) -> int:
        """Max x-exponent; -1 for the zero polynomial."""
        return max((e[0] for e in self._terms), default=-1)

    @property
    def deg_y(self) -> int:
        return max((e[1] for e in self._terms), default=-1)

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"BiPoly({self.text()!r})"

    # ------------------------------------------------------------------
    # ring operations

    def __add__(self, other: "BiPoly | int") -> "BiPoly":
        if isinstance(other, int):
            other = BiPoly.const(other)
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            s = out.get(exps, 0) + coeff
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        res = BiPoly.__new__(BiPoly)
        res._terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        res = BiPoly.__new__(BiPoly)
        res._terms = {e: -c for e, c in self._terms.items()}
        return res

    def __sub__(self, other: "BiPoly | int") -> "BiPoly":
        if isinstance(other, int):
            other = BiPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "BiPoly":
        return BiPoly.const(other) - self

    def __mul__(self, other: "BiPoly | int") -> "BiPoly":
        if isinstance(other, int):
            if not other:
                return BiPoly.zero()
            res = BiPoly.__new__(BiPoly)
            res._terms = {e: c * other for e, c in self._terms.items()}
            return res
        out: dict[tuple[int, int], int] = {}
        for (ax, ay), ac in self._terms.items():
            for (bx, by), bc in other._terms.items():
                e = (ax + bx, ay + by)
                s = out.get(e, 0) + ac * bc
                if s:
                    out[e] = s
                else:
                    del out[e]
        res = BiPoly.__new__(BiPoly)
        res._terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "BiPoly":
        if power < 0:
            raise ValueError("negative power")
        result = BiPoly.one()
        for _ in range(power):
            result = result * self
        return result

    def shift(self, dx: int, dy: int) -> "BiPoly":
        """Multiply by the monomial x^dx * y^dy."""
        res = BiPoly.__new__(BiPoly)
        res._terms = {(ex + dx, ey + dy): c for (ex, ey), c in self._terms.items()}
        return res

    def divexact(self, den: "BiPoly") -> "BiPoly":
        """Exact quotient self/den, or raise ExactDivisionError.

        Leading-term elimination in the canonical graded order; any step
        where the leading term fails to divide (exponent-wise or over the
        integers), and any nonzero final remainder, raises.
        """
        if not den:
            raise ExactDivisionError("division by zero polynomial")
        if not self:
            return BiPoly.zero()
        den_lead = max(den._terms, key=_order_key)
        den_coeff = den._terms[den_lead]
        rem = dict(self._terms)
        quot: dict[tuple[int, int], int] = {}
        while rem:
            lead = max(rem, key=_order_key)
            dx = lead[0] - den_lead[0]
            dy = lead[1] - den_lead[1]
            c = rem[lead]
            if dx < 0 or dy < 0 or c % den_coeff:
                raise ExactDivisionError("inexact polynomial division")
            qc = c // den_coeff
            quot[(dx, dy)] = qc
            for (bx, by), bc in den._terms.items():
                e = (bx + dx, by + dy)
                s = rem.get(e, 0) - qc * bc
                if s:
                    rem[e] = s
                else:
                    rem.pop(e, None)
        res = BiPoly.__new__(BiPoly)
        res._terms = quot
        return res

    # ------------------------------------------------------------------
    # evaluation and substitution

    def eval(self, x0: Scalar, y0: Scalar) -> Fraction:
        """Exact value at a rational point."""
        x0 = Fraction(x0)
        y0 = Fraction(y0)
        total = Fraction(0)
        for (ex, ey), c in self._terms.items():
            total += c * x0**ex * y0**ey
        return total

    def at_x(self, value: int) -> "BiPoly":
        """Substitute an integer for x, leaving a polynomial in y."""
        out: dict[tuple[int, int], int] = {}
        for (ex, ey), c in self._terms.items():
            e = (0, ey)
            s = out.get(e, 0) + c * value**ex
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = BiPoly.__new__(BiPoly)
        res._terms = out
        return res

    def at_y(self, value: int) -> "BiPoly":
        """Substitute an integer for y, leaving a polynomial in x."""
        out: dict[tuple[int, int], int] = {}
        for (ex, ey), c in self._terms.items():
            e = (ex, 0)
            s = out.get(e, 0) + c * value**ey
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = BiPoly.__new__(BiPoly)
        res._terms = out
        return res

    def y_coefficient(self, s: int) -> "BiPoly":
        """The coefficient of y^s, as a polynomial in x."""
        res = BiPoly.__new__(BiPoly)
        res._terms = {(ex, 0): c for (ex, ey), c in self._terms.items() if ey == s}
        return res

    def is_palindromic_in_y(self) -> bool:
        """Whether coeff(y^s) == coeff(y^(deg_y - s)) for all s."""
        d = self.deg_y
        if d < 0:
            return True
        return all(
            self.y_coefficient(s) == self.y_coefficient(d - s) for s in range(d // 2 + 1)
        )

    def divisible_by_y(self) -> bool:
        return bool(self) and all(ey > 0 for (_, ey) in self._terms)

    # ------------------------------------------------------------------
    # canonical renderings

    def text(self) -> str:
        """Canonical text form, e.g. ``2 + x*y + 2*y^2``."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for ex, ey, c in self.terms():
            factors = []
            if ex == 1:
                factors.append("x")
            elif ex > 1:
                factors.append(f"x^{ex}")
            if ey == 1:
                factors.append("y")
            elif ey > 1:
                factors.append(f"y^{ey}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def json_terms(self) -> list[list]:
        """Canonical JSON form: [ex, ey, coeff-as-decimal-string] triples."""
        return [[ex, ey, str(c)] for ex, ey, c in self.terms()]

    @classmethod
    def from_json_terms(cls, triples: Iterable[Iterable]) -> "BiPoly":
        terms: dict[tuple[int, int], int] = {}
        for ex, ey, c in triples:
            terms[(int(ex), int(ey))] = terms.get((int(ex), int(ey)), 0) + int(c)
        return cls(terms)


ZERO = BiPoly.zero()
ONE = BiPoly.one()
X = BiPoly.x()
Y = BiPoly.y()
