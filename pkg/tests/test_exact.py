from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from asmsym.exact import binom, delta, delta_even_product, delta_product, pochhammer


class TestBinom:
    def test_examples(self):
        assert binom(-1, 0) == 1
        assert binom(5, 2) == 10
        assert binom(-2, 3) == -4
        assert binom(3, -1) == 0
        assert binom(3, 5) == 0

    @given(st.integers(-20, 20), st.integers(1, 12))
    def test_pascal(self, a, b):
        assert binom(a, b) == binom(a - 1, b) + binom(a - 1, b - 1)


class TestPochhammer:
    def test_examples(self):
        assert pochhammer(7, 0) == 1
        assert pochhammer(2, 3) == 24
        assert pochhammer(Fraction(3, 2), 2) == Fraction(15, 4)

    @given(
        st.fractions(min_value=-5, max_value=5, max_denominator=4),
        st.integers(0, 8),
    )
    def test_recurrence(self, x, j):
        assert pochhammer(x, j + 1) == pochhammer(x, j) * (x + j)


class TestDelta:
    def test_base_case(self):
        for mu in (0, 1, Fraction(7, 2)):
            assert delta(0, mu) == 2

    def test_small_values(self):
        assert delta(1, 0) == Fraction(5, 2)
        assert delta(2, 0) == 4
        assert delta(3, 0) == Fraction(33, 5)
        assert delta(2, 2) == 6

    def test_products(self):
        # products recover the full-grid totals: 2, 5, 20, 132 at argument 0
        assert [delta_product(n, 0) for n in range(1, 5)] == [2, 5, 20, 132]
        # halved even-index products recover 1, 2, 11 at argument 0
        assert [delta_even_product(n, 0) for n in range(1, 4)] == [1, 2, 11]

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            delta(-1, 0)
        with pytest.raises(ValueError):
            pochhammer(1, -1)
