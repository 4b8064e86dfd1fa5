import random

import pytest

from asmsym.bipoly import BiPoly, ONE, ZERO
from asmsym.detgen import (
    build_r_matrix,
    build_t_matrix,
    build_z_matrix,
    det,
    det_bareiss,
    det_cofactor,
    r_poly,
    t_poly,
    y_coef,
    z_poly,
)

from published import R_POLYS, T_POLYS, Z_POLYS, poly_from_x_coeffs, poly_from_y_rows


class TestBuilders:
    def test_z_small(self):
        assert z_poly(1, 0).text() == "1 + y"
        assert z_poly(2, 1).text() == "2 + 2*y + x*y + 2*y^2"
        assert z_poly(0, 3) == ONE

    @pytest.mark.parametrize("key", sorted(Z_POLYS))
    def test_z_table(self, key):
        assert z_poly(*key) == poly_from_y_rows(Z_POLYS[key])

    @pytest.mark.parametrize("key", sorted(T_POLYS))
    def test_t_table(self, key):
        assert t_poly(*key) == poly_from_x_coeffs(T_POLYS[key])

    @pytest.mark.parametrize("key", sorted(R_POLYS))
    def test_r_table(self, key):
        assert r_poly(*key) == poly_from_x_coeffs(R_POLYS[key])

    def test_conventions(self):
        assert t_poly(0, 0) == ONE
        assert r_poly(0, 5) == ONE

    def test_y_coef(self):
        assert y_coef(0, 1, 0) == 2
        assert y_coef(0, 0, 0) == 1

    def test_palindromic_in_y(self):
        for n in range(1, 7):
            for mu in (0, 1):
                assert z_poly(n, mu).is_palindromic_in_y(), (n, mu)


class TestDeterminant:
    def test_tiny(self):
        assert det(((BiPoly({(1, 0): 2}),),)).text() == "2*x"
        ident = ((ONE, ZERO), (ZERO, ONE))
        assert det(ident) == ONE
        assert det(()) == ONE

    def test_repeated_row_is_zero(self):
        row = (1 + BiPoly.x(), BiPoly.y())
        assert det((row, row)) == ZERO

    def test_block_diagonal_multiplicative(self):
        a = ((2 + BiPoly.x(), BiPoly.y()), (ONE, 1 + BiPoly.y()))
        b = ((BiPoly.x(), ONE), (3 + BiPoly.y(), BiPoly.x(2)))
        blocks = [[ZERO] * 4 for _ in range(4)]
        for i in range(2):
            for j in range(2):
                blocks[i][j] = a[i][j]
                blocks[i + 2][j + 2] = b[i][j]
        assert det(tuple(map(tuple, blocks))) == det(a) * det(b)

    def test_zero_pivot_column_falls_back(self):
        m = ((ZERO, ONE), (ZERO, BiPoly.y()))
        assert det(m) == ZERO

    def test_pivot_swap(self):
        m = ((ZERO, ONE), (ONE, ZERO))
        assert det(m) == BiPoly.const(-1)

    @pytest.mark.parametrize("n,mu", [(n, mu) for n in (2, 3, 4, 5, 6) for mu in (0, 1)])
    def test_bareiss_matches_cofactor(self, n, mu):
        for build in (build_z_matrix, build_t_matrix, build_r_matrix):
            m = build(n, mu)
            assert det_bareiss(m) == det_cofactor(m), (build.__name__, n, mu)

    def test_random_integer_matrices(self):
        rng = random.Random(7)
        for _ in range(25):
            n = rng.randint(1, 4)
            m = tuple(
                tuple(BiPoly.const(rng.randint(-4, 4)) for _ in range(n))
                for _ in range(n)
            )
            assert det_bareiss(m) == det_cofactor(m)

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            det(((ONE, ZERO),))


class TestTheorem1Instances:
    @pytest.mark.parametrize("n", range(0, 4))
    @pytest.mark.parametrize("mu", range(0, 3))
    def test_even_and_odd(self, n, mu):
        assert z_poly(2 * n, mu).at_y(1) == t_poly(n, mu) * r_poly(n, mu)
        assert z_poly(2 * n + 1, mu).at_y(1) == 2 * (t_poly(n + 1, mu) * r_poly(n, mu))
