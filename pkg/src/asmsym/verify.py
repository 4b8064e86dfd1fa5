"""Identity verification harness.

Every identity the toolkit knows is checked as an exact polynomial or
rational equality and reported as a VerdictReport. Conjecture inequality
is a first-class result (reported, never raised); theorem inequality
signals an implementation bug and drives the CLI's nonzero exit.

Identity ids: Thm1-even, Thm1-odd, Thm2, Thm3, Thm4-odd, Thm4-ratio-i,
Thm4-ratio-ii, C3.1.1, C3.2.1, C3.3.1, C3.3.2-i, C3.3.2-ii, C3.3.3,
C3.5.1-4n, C3.5.1-4n+1, C3.5.1-4n-1, C3.5.2-w, C3.5.2-v, C3.6.1-4n+1,
C3.6.1-4n-1, ratios-4.2 (families A, F, H, Q, P, X).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .bipoly import BiPoly, ExactDivisionError, X, Y
from .config import DEFAULT_CUTOFFS
from .detgen import r_poly, t_poly, z_poly
from .enumeration import genfun
from .exact import binom, delta_even_product, delta_product

Value = Union[BiPoly, Fraction, int]

EQUAL = "equal"
UNEQUAL = "unequal"
EXTRACTED = "extracted"


@dataclass(frozen=True)
class VerdictReport:
    """Outcome of one identity instance."""

    identity: str
    params: dict
    lhs: Value
    rhs: Value
    verdict: str
    quotient: BiPoly | None = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.verdict in (EQUAL, EXTRACTED)

    @property
    def is_theorem(self) -> bool:
        return self.identity.startswith("Thm")

    def to_json(self) -> dict:
        doc = {
            "id": self.identity,
            "params": dict(sorted(self.params.items())),
            "verdict": self.verdict,
            "lhs": _value_json(self.lhs),
            "rhs": _value_json(self.rhs),
        }
        if self.quotient is not None:
            doc["quotient"] = self.quotient.json_terms()
        if self.note:
            doc["note"] = self.note
        return doc


def _value_json(value: Value):
    if isinstance(value, BiPoly):
        return value.json_terms()
    return str(value)


def value_text(value: Value) -> str:
    return value.text() if isinstance(value, BiPoly) else str(value)


def _report(identity, params, lhs, rhs, note="") -> VerdictReport:
    verdict = EQUAL if lhs == rhs else UNEQUAL
    return VerdictReport(identity, params, lhs, rhs, verdict, note=note)


# ----------------------------------------------------------------------
# enumerated family accessors


def a_poly(n: int) -> BiPoly:
    return genfun(n, 1).poly


def f_poly(n: int) -> BiPoly:
    return genfun(n, 2).poly


def h_poly(n: int) -> BiPoly:
    return genfun(n, 3).poly


def q_poly(n: int) -> BiPoly:
    return genfun(n, 5).poly


def p_poly(n: int) -> BiPoly:
    return genfun(n, 6).poly


def x_count(n: int) -> int:
    return genfun(n, 7).count


# ----------------------------------------------------------------------
# theorems


def check_theorem1(n: int, mu: int) -> list[VerdictReport]:
    """Even/odd factorizations of the y=1 specialization of Z."""
    even = _report(
        "Thm1-even",
        {"n": n, "mu": mu},
        z_poly(2 * n, mu).at_y(1),
        t_poly(n, mu) * r_poly(n, mu),
    )
    odd = _report(
        "Thm1-odd",
        {"n": n, "mu": mu},
        z_poly(2 * n + 1, mu).at_y(1),
        2 * (t_poly(n + 1, mu) * r_poly(n, mu)),
    )
    return [even, odd]


def check_theorem2(n: int, mu: int) -> VerdictReport:
    """Z_n(1,1,mu) equals the product of the first n delta factors at 2*mu."""
    return _report(
        "Thm2",
        {"n": n, "mu": mu},
        z_poly(n, mu).eval(1, 1),
        delta_product(n, 2 * mu),
    )


def check_theorem3(n: int, mu: int) -> VerdictReport:
    """T_n(1,mu) equals the halved product of even-index delta factors."""
    return _report(
        "Thm3",
        {"n": n, "mu": mu},
        t_poly(n, mu).eval(1, 1),
        delta_even_product(n, 2 * mu),
    )


def check_theorem4(max_size: int = 10) -> list[VerdictReport]:
    """The three x=2 relations for half-turn generating functions."""
    reports = []
    h2 = {k: h_poly(k).eval(2, 1) for k in range(1, max_size + 1)}
    n = 1
    while 2 * n + 1 <= max_size:
        reports.append(
            _report("Thm4-odd", {"n": n}, h2[2 * n + 1], 2**n * h2[2 * n])
        )
        n += 1
    n = 1
    while 4 * n <= max_size:
        rhs = Fraction(2 ** (2 * n - 1) * binom(4 * n, 2 * n), binom(2 * n, n))
        reports.append(
            _report("Thm4-ratio-i", {"n": n}, h2[4 * n] / h2[4 * n - 2], rhs)
        )
        n += 1
    n = 1
    while 4 * n + 2 <= max_size:
        rhs = Fraction(2 ** (2 * n + 1) * binom(4 * n, 2 * n), binom(2 * n, n))
        reports.append(
            _report("Thm4-ratio-ii", {"n": n}, h2[4 * n + 2] / h2[4 * n], rhs)
        )
        n += 1
    return reports


# ----------------------------------------------------------------------
# extractions


def extract_S(k: int) -> BiPoly:
    """Residual factor of H_k(x,1) after dividing out its R and T factors.

    k must be odd; an inexact division raises ExactDivisionError, which is
    the failure mode of the factorization conjecture.
    """
    if k < 1 or k % 2 == 0:
        raise ValueError("S is indexed by odd integers")
    h = h_poly(k).at_y(1)
    if k % 4 == 1:
        n = (k - 1) // 4
        den = r_poly(n, 0) * t_poly(n, 1)
    else:
        n = (k + 1) // 4
        den = r_poly(n - 1, 1) * t_poly(n, 0)
    return h.divexact(den)


def extract_w_sequence(max_index: int = 8) -> list[BiPoly]:
    """w_0..w_max by successive exact division of quarter-turn odd sizes.

    Seeds w_0 = w_1 = 1; each Q_{2n+1}(x,1) then determines w_{n+1}, with
    an extra factor x divided out when n is odd.
    """
    w = [BiPoly.one(), BiPoly.one()]
    for n in range(1, max_index):
        q = q_poly(2 * n + 1).at_y(1)
        den = w[n] if n % 2 == 0 else w[n] * X
        w.append(q.divexact(den))
    return w[: max_index + 1]


def extract_v_sequence(max_index: int = 4, w: list[BiPoly] | None = None) -> list[BiPoly]:
    """v_1..v_max from Q_{4n}(x,1) = v_n(x) w_{2n}(x)."""
    if w is None:
        w = extract_w_sequence(2 * max_index)
    out = []
    for n in range(1, max_index + 1):
        out.append(q_poly(4 * n).at_y(1).divexact(w[2 * n]))
    return out


def extract_w_v(
    max_w: int = 8, max_v: int = 4
) -> tuple[list[BiPoly], list[BiPoly]]:
    """Both factor sequences at once: (w_0..w_max_w, v_1..v_max_v)."""
    w = extract_w_sequence(max_w)
    v = extract_v_sequence(min(max_v, max_w // 2), w)
    return w, v


def _extraction_report(identity, params, num: BiPoly, den: BiPoly) -> VerdictReport:
    try:
        quotient = num.divexact(den)
    except ExactDivisionError:
        return VerdictReport(
            identity, params, num, den, UNEQUAL, note="inexact division"
        )
    return VerdictReport(identity, params, num, den * quotient, EXTRACTED, quotient)


# ----------------------------------------------------------------------
# conjectures


def check_conjecture(identity: str, **params) -> VerdictReport:
    """Check a single conjecture instance; see module docstring for ids."""
    n = params.get("n")
    p = dict(params)
    if identity == "C3.1.1":
        return _report(identity, p, a_poly(n), z_poly(n - 1, 1))
    if identity == "C3.2.1":
        return _report(identity, p, f_poly(2 * n + 1), t_poly(n, 1))
    if identity == "C3.3.1":
        return _report(identity, p, h_poly(2 * n), z_poly(n, 0) * z_poly(n - 1, 1))
    if identity == "C3.3.2-i":
        return _extraction_report(
            identity, p, h_poly(4 * n + 1).at_y(1), r_poly(n, 0) * t_poly(n, 1)
        )
    if identity == "C3.3.2-ii":
        return _extraction_report(
            identity, p, h_poly(4 * n - 1).at_y(1), r_poly(n - 1, 1) * t_poly(n, 0)
        )
    if identity == "C3.3.3":
        a = a_poly(n)
        lhs = a.eval(3, 1)
        rhs = Fraction(3) ** a.at_y(1).deg_x * h_poly(n).eval(1, 1)
        return _report(identity, p, lhs, rhs)
    if identity == "C3.5.1-4n":
        lhs = q_poly(4 * n).at_x(1)
        rhs = Y * h_poly(2 * n).at_x(1) * a_poly(n).at_x(1) ** 2
        return _report(identity, p, lhs, rhs, note="middle factor read as H(1,y)")
    if identity == "C3.5.1-4n+1":
        lhs = q_poly(4 * n + 1).at_x(1)
        rhs = Y * h_poly(2 * n + 1).at_x(1) * a_poly(n).at_x(1) ** 2
        return _report(identity, p, lhs, rhs)
    if identity == "C3.5.1-4n-1":
        lhs = q_poly(4 * n - 1).at_x(1)
        rhs = Y * h_poly(2 * n - 1).at_x(1) * a_poly(n).at_x(1) ** 2
        return _report(identity, p, lhs, rhs)
    if identity == "C3.5.2-w":
        w = extract_w_sequence(n + 1)
        lhs = q_poly(2 * n + 1).at_y(1)
        den = w[n] if n % 2 == 0 else w[n] * X
        rep = _extraction_report(identity, p, lhs, den)
        return rep
    if identity == "C3.5.2-v":
        w = extract_w_sequence(2 * n)
        return _extraction_report(identity, p, q_poly(4 * n).at_y(1), w[2 * n])
    if identity == "C3.6.1-4n+1":
        return _report(identity, p, p_poly(4 * n + 1), t_poly(n, 1) * t_poly(n, 0))
    if identity == "C3.6.1-4n-1":
        return _report(identity, p, p_poly(4 * n - 1), t_poly(n - 1, 1) * t_poly(n, 0))
    raise KeyError(f"unknown identity {identity!r}")


def check_ratio(family: str, n: int) -> VerdictReport:
    """One ratio/product identity between consecutive enumerated counts."""
    fam = family.upper()
    p = {"family": fam, "n": n}
    if fam == "A":
        lhs = Fraction(genfun(n + 1, 1).count, genfun(n, 1).count)
        rhs = Fraction(binom(3 * n + 1, n), binom(2 * n, n))
        return _report("ratios-4.2", p, lhs, rhs)
    if fam == "F":
        lhs = Fraction(genfun(2 * n + 1, 2).count, genfun(2 * n - 1, 2).count)
        rhs = Fraction(binom(6 * n - 2, 2 * n), 2 * binom(4 * n - 1, 2 * n))
        return _report("ratios-4.2", p, lhs, rhs)
    if fam == "H":
        # two interleaved ratios; n indexes the odd/even pair boundary
        if n % 2:
            k = (n + 1) // 2
            lhs = Fraction(genfun(2 * k + 1, 3).count, genfun(2 * k, 3).count)
            rhs = Fraction(binom(3 * k, k), binom(2 * k, k))
        else:
            k = n // 2
            lhs = Fraction(genfun(2 * k, 3).count, genfun(2 * k - 1, 3).count)
            rhs = Fraction(4 * binom(3 * k, k), 3 * binom(2 * k, k))
        return _report("ratios-4.2", p, lhs, rhs)
    if fam == "Q":
        r = n % 3
        k = n // 3 + 1
        if r == 0:
            size, hsize = 4 * k, 2 * k
        elif r == 1:
            size, hsize = 4 * k + 1, 2 * k + 1
        else:
            size, hsize = 4 * k - 1, 2 * k - 1
        lhs = Fraction(genfun(size, 5).count)
        rhs = Fraction(genfun(hsize, 3).count * genfun(k, 1).count ** 2)
        p["size"] = size
        return _report("ratios-4.2", p, lhs, rhs)
    if fam == "P":
        if n % 2:
            k = (n + 1) // 2
            lhs = Fraction(genfun(4 * k + 1, 6).count, genfun(4 * k - 1, 6).count)
            rhs = Fraction(
                (3 * k - 1) * binom(6 * k - 3, 2 * k - 1),
                (4 * k - 1) * binom(4 * k - 2, 2 * k - 1),
            )
        else:
            k = n // 2
            lhs = Fraction(genfun(4 * k + 3, 6).count, genfun(4 * k + 1, 6).count)
            rhs = Fraction(
                (3 * k + 1) * binom(6 * k, 2 * k), (4 * k + 1) * binom(4 * k, 2 * k)
            )
        return _report("ratios-4.2", p, lhs, rhs)
    if fam == "X":
        lhs = Fraction(genfun(2 * n + 1, 7).count, genfun(2 * n - 1, 7).count)
        rhs = Fraction(binom(3 * n, n), binom(2 * n - 1, n))
        return _report("ratios-4.2", p, lhs, rhs)
    raise KeyError(f"unknown ratio family {family!r}")


def ratio_instances(family: str, cutoffs: dict[int, int]) -> list[int]:
    """Ratio indices checkable within the given per-class size cutoffs."""
    fam = family.upper()
    if fam == "A":
        return list(range(1, cutoffs[1]))
    if fam == "F":
        return [n for n in range(1, 9) if 2 * n + 1 <= cutoffs[2]]
    if fam == "H":
        return [n for n in range(1, 2 * cutoffs[3]) if _h_sizes_ok(n, cutoffs[3])]
    if fam == "Q":
        out = []
        for n in range(0, 12):
            r, k = n % 3, n // 3 + 1
            size = {0: 4 * k, 1: 4 * k + 1, 2: 4 * k - 1}[r]
            hsize = {0: 2 * k, 1: 2 * k + 1, 2: 2 * k - 1}[r]
            if size <= cutoffs[5] and hsize <= cutoffs[3] and k <= cutoffs[1]:
                out.append(n)
        return out
    if fam == "P":
        out = []
        for n in range(1, 9):
            if n % 2:
                k = (n + 1) // 2
                if 4 * k + 1 <= cutoffs[6]:
                    out.append(n)
            else:
                k = n // 2
                if 4 * k + 3 <= cutoffs[6]:
                    out.append(n)
        return out
    if fam == "X":
        return [n for n in range(1, 9) if 2 * n + 1 <= cutoffs[7]]
    raise KeyError(f"unknown ratio family {family!r}")


def _h_sizes_ok(n: int, cutoff: int) -> bool:
    if n % 2:
        k = (n + 1) // 2
        return 2 * k + 1 <= cutoff
    k = n // 2
    return 2 * k <= cutoff


RATIO_FAMILIES = ("A", "F", "H", "Q", "P", "X")


# ----------------------------------------------------------------------
# smoothness factorization


@dataclass(frozen=True)
class FactorReport:
    """Trial-division factorization up to a bound."""

    value: int
    factors: tuple[tuple[int, int], ...]
    remainder: int
    bound: int
    complete: bool

    def text(self) -> str:
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors]
        body = "*".join(parts) if parts else "1"
        if self.remainder != 1:
            body = f"{body}*[{self.remainder}]" if parts else f"[{self.remainder}]"
        return body

    def to_json(self) -> dict:
        return {
            "value": str(self.value),
            "factors": [[str(p), e] for p, e in self.factors],
            "remainder": str(self.remainder),
            "bound": self.bound,
            "complete": self.complete,
        }


def factor_smooth(value: int, bound: int = 1000) -> FactorReport:
    """Factor by trial division with primes up to the bound.

    A remainder below bound^2 is itself prime and is folded into the
    factor list; larger remainders are reported unresolved.
    """
    if value < 1:
        raise ValueError("value must be >= 1")
    rest = value
    factors: list[tuple[int, int]] = []
    d = 2
    while d <= bound and d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if 1 < rest <= bound:
        factors.append((rest, 1))
        rest = 1
    elif rest > 1 and rest <= bound * bound:
        factors.append((rest, 1))
        rest = 1
    return FactorReport(value, tuple(factors), rest, bound, rest == 1)


# ----------------------------------------------------------------------
# the default suite


def default_suite(cutoffs: dict[int, int] | None = None) -> list[VerdictReport]:
    """Every identity at its standard verification scale, cutoff-aware."""
    c = dict(DEFAULT_CUTOFFS)
    if cutoffs:
        c.update(cutoffs)
    reports: list[VerdictReport] = []
    for n in range(0, 4):
        for mu in range(3):
            reports.extend(check_theorem1(n, mu))
    for n in range(1, 8):
        for mu in range(3):
            reports.append(check_theorem2(n, mu))
    for n in range(1, 6):
        for mu in range(3):
            reports.append(check_theorem3(n, mu))
    reports.extend(check_theorem4(min(10, c[3])))
    for n in range(1, min(7, c[1] - 1) + 1):
        reports.append(check_conjecture("C3.1.1", n=n))
    for n in range(1, 4):
        if 2 * n + 1 <= c[2]:
            reports.append(check_conjecture("C3.2.1", n=n))
    for n in range(1, 5):
        if 2 * n <= c[3]:
            reports.append(check_conjecture("C3.3.1", n=n))
    for n in range(0, 3):
        if 4 * n + 1 <= c[3]:
            reports.append(check_conjecture("C3.3.2-i", n=n))
    for n in range(1, 3):
        if 4 * n - 1 <= c[3]:
            reports.append(check_conjecture("C3.3.2-ii", n=n))
    for n in range(1, 7):
        if n <= c[1] and n <= c[3]:
            reports.append(check_conjecture("C3.3.3", n=n))
    for n in range(1, 5):
        if 4 * n <= c[5] and 2 * n <= c[3] and n <= c[1]:
            reports.append(check_conjecture("C3.5.1-4n", n=n))
        if 4 * n + 1 <= c[5] and 2 * n + 1 <= c[3] and n <= c[1]:
            reports.append(check_conjecture("C3.5.1-4n+1", n=n))
        if 4 * n - 1 <= c[5] and 2 * n - 1 <= c[3] and n <= c[1]:
            reports.append(check_conjecture("C3.5.1-4n-1", n=n))
    for n in range(0, 8):
        if 2 * n + 1 <= c[5]:
            reports.append(check_conjecture("C3.5.2-w", n=n))
    for n in range(1, 5):
        if 4 * n <= c[5]:
            reports.append(check_conjecture("C3.5.2-v", n=n))
    for n in range(1, 5):
        if 4 * n + 1 <= c[6]:
            reports.append(check_conjecture("C3.6.1-4n+1", n=n))
        if 4 * n - 1 <= c[6]:
            reports.append(check_conjecture("C3.6.1-4n-1", n=n))
    for family in RATIO_FAMILIES:
        for n in ratio_instances(family, c):
            reports.append(check_ratio(family, n))
    return reports


def run_identity(
    identity: str, params: dict | None = None, cutoffs: dict[int, int] | None = None
) -> list[VerdictReport]:
    """Run one identity (all default instances unless params pin one)."""
    c = dict(DEFAULT_CUTOFFS)
    if cutoffs:
        c.update(cutoffs)
    params = params or {}
    ident = identity
    if ident in ("Thm1", "Thm1-even", "Thm1-odd"):
        n = params.get("n")
        mus = [params["mu"]] if "mu" in params else [0, 1, 2]
        ns = [n] if n is not None else list(range(0, 4))
        out = []
        for nn in ns:
            for mu in mus:
                pair = check_theorem1(nn, mu)
                if ident == "Thm1-even":
                    out.append(pair[0])
                elif ident == "Thm1-odd":
                    out.append(pair[1])
                else:
                    out.extend(pair)
        return out
    if ident in ("Thm2", "Thm3"):
        fn = check_theorem2 if ident == "Thm2" else check_theorem3
        top = 7 if ident == "Thm2" else 5
        ns = [params["n"]] if "n" in params else list(range(1, top + 1))
        mus = [params["mu"]] if "mu" in params else [0, 1, 2]
        return [fn(nn, mu) for nn in ns for mu in mus]
    if ident.startswith("Thm4"):
        reports = check_theorem4(min(10, c[3]))
        if ident != "Thm4":
            reports = [r for r in reports if r.identity == ident]
        if "n" in params:
            reports = [r for r in reports if r.params.get("n") == params["n"]]
        return reports
    if ident == "ratios-4.2":
        fams = [params["family"].upper()] if params.get("family") else RATIO_FAMILIES
        out = []
        for fam in fams:
            ns = [params["n"]] if "n" in params else ratio_instances(fam, c)
            out.extend(check_ratio(fam, nn) for nn in ns)
        return out
    defaults = {
        "C3.1.1": range(1, min(7, c[1] - 1) + 1),
        "C3.2.1": range(1, 4),
        "C3.3.1": range(1, 5),
        "C3.3.2-i": range(0, 3),
        "C3.3.2-ii": range(1, 3),
        "C3.3.3": range(1, 7),
        "C3.5.1-4n": range(1, 5),
        "C3.5.1-4n+1": range(1, 5),
        "C3.5.1-4n-1": range(1, 5),
        "C3.5.2-w": range(0, 8),
        "C3.5.2-v": range(1, 5),
        "C3.6.1-4n+1": range(1, 5),
        "C3.6.1-4n-1": range(1, 5),
    }
    if ident in defaults:
        ns = [params["n"]] if "n" in params else list(defaults[ident])
        return [check_conjecture(ident, n=nn) for nn in ns]
    raise KeyError(f"unknown identity {identity!r}")
