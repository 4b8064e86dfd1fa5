from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from asmsym.bipoly import BiPoly, ExactDivisionError, ONE, X, Y, ZERO


def p(terms):
    return BiPoly(terms)


small_polys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)),
    st.integers(-9, 9),
    max_size=6,
).map(BiPoly)

nonzero_polys = small_polys.filter(bool)


class TestArithmetic:
    def test_add_examples(self):
        a = p({(0, 0): 1, (0, 1): 1})  # 1 + y
        b = p({(0, 0): 2, (1, 1): 1, (0, 2): 2})  # 2 + xy + 2y^2
        assert (a + b).text() == "3 + y + x*y + 2*y^2"
        assert a + ZERO == a
        assert X + p({(1, 0): -1}) == ZERO

    def test_mul_examples(self):
        assert (ONE * (4 + X)).text() == "4 + x"
        assert ((2 + X) * ONE).text() == "2 + x"
        assert ((1 + X) * (4 + X)).text() == "4 + 5*x + x^2"

    def test_divexact_examples(self):
        q = p({(0, 0): 4, (1, 0): 5, (2, 0): 1}).divexact(1 + X)
        assert q.text() == "4 + x"
        r = p({(1, 2): 3, (0, 1): 7})
        assert r.divexact(r) == ONE
        with pytest.raises(ExactDivisionError):
            (2 + X).divexact(1 + X)
        with pytest.raises(ExactDivisionError):
            ONE.divexact(ZERO)

    def test_eval(self):
        z2 = p({(0, 0): 2, (1, 1): 1, (0, 2): 2})
        assert z2.eval(1, 1) == 5
        assert p({(3, 2): 7, (0, 0): 4}).eval(0, 0) == 4
        a3 = p({(0, 0): 6, (1, 0): 1})
        assert a3.eval(3, 1) == 9
        assert z2.eval(Fraction(1, 2), 2) == 2 + 1 + 8

    def test_substitution(self):
        z2 = p({(0, 0): 2, (1, 1): 1, (0, 2): 2})
        assert z2.at_y(1).text() == "4 + x"
        assert z2.at_x(1).text() == "2 + y + 2*y^2"
        assert z2.y_coefficient(1) == X

    def test_power_and_shift(self):
        assert ((1 + X) ** 2).text() == "1 + 2*x + x^2"
        assert X.shift(1, 2) == p({(2, 2): 1})


class TestProperties:
    @given(small_polys, small_polys, small_polys)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(small_polys, nonzero_polys)
    def test_divexact_roundtrip(self, a, b):
        assert (a * b).divexact(b) == a

    @given(small_polys, small_polys)
    def test_degree_additivity(self, a, b):
        if a and b:
            assert (a * b).deg_x == a.deg_x + b.deg_x

    @given(small_polys)
    def test_json_roundtrip(self, a):
        assert BiPoly.from_json_terms(a.json_terms()) == a


class TestRendering:
    def test_canonical_text(self):
        assert ZERO.text() == "0"
        assert p({(0, 0): 2, (1, 1): 1, (0, 2): 2}).text() == "2 + x*y + 2*y^2"
        assert p({(1, 0): -1, (0, 0): 3}).text() == "3 - x"
        assert p({(2, 3): -4}).text() == "-4*x^2*y^3"

    def test_json_terms_order(self):
        poly = p({(0, 2): 2, (1, 1): 1, (0, 0): 2})
        assert poly.json_terms() == [[0, 0, "2"], [1, 1, "1"], [0, 2, "2"]]

    def test_palindromic_and_y_divisibility(self):
        z3 = p({(0, 0): 4, (1, 0): 1, (1, 1): 4, (2, 1): 1, (1, 2): 4, (2, 2): 1, (0, 3): 4, (1, 3): 1})
        assert z3.is_palindromic_in_y()
        assert not z3.divisible_by_y()
        assert (Y * z3).divisible_by_y()

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            BiPoly({(-1, 0): 1})
