from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flowcat.closedform import (
    GammaHalfValue,
    catalan,
    catalan_polytope_volume,
    cry_product,
    gamma_half,
    morris_closed,
    morris_polytope_volume,
    syt_staircase,
    tesler_family_volume,
    tesler_unit_volume,
)


class TestGammaHalf:
    def test_integer_arguments(self):
        assert gamma_half(2).to_rational() == 1
        assert gamma_half(8).to_rational() == 6
        assert gamma_half(10).to_rational() == 24

    def test_half_integer_arguments(self):
        root = gamma_half(1)
        assert not root.is_rational
        with pytest.raises(ArithmeticError):
            root.to_rational()
        assert gamma_half(3) == GammaHalfValue(Fraction(1, 2), 1)
        assert gamma_half(5) == GammaHalfValue(Fraction(3, 4), 1)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            gamma_half(0)

    @given(st.integers(1, 20))
    def test_functional_equation(self, two_j):
        # Gamma(z + 1) = z Gamma(z) with z = two_j / 2
        left = gamma_half(two_j + 2)
        right = GammaHalfValue(Fraction(two_j, 2)) * gamma_half(two_j)
        assert left == right

    def test_sqrt_pi_bookkeeping(self):
        # Gamma(1/2)^2 = pi stays symbolic; dividing cancels it
        sq = gamma_half(1) * gamma_half(1)
        assert sq.e == 2
        assert (sq / sq).to_rational() == 1


class TestCatalan:
    @given(st.integers(1, 10))
    def test_recurrence(self, i):
        assert catalan(i) == sum(
            catalan(k) * catalan(i - 1 - k) for k in range(i)
        )

    def test_small_values(self):
        assert [catalan(i) for i in range(6)] == [1, 1, 2, 5, 14, 42]

    def test_cry_product_values(self):
        assert [cry_product(n) for n in range(2, 8)] == [1, 1, 2, 10, 140, 5880]


class TestMorrisClosed:
    def test_one_variable_is_binomial(self):
        for a in range(4):
            for b in range(1, 5):
                for m in (1, 2, 3):
                    assert morris_closed(1, a, b, m) == comb(a + b - 1, a)

    def test_rationality_across_parities(self):
        # odd m exercises the sqrt(pi) cancellation
        for n in (2, 3):
            for m in (1, 2, 3):
                value = morris_closed(n, 1, 1, m)
                assert isinstance(value, Fraction)

    def test_known_value(self):
        assert morris_closed(1, 2, 3, 1) == 6


class TestVolumeFormulas:
    def test_catalan_polytope_values(self):
        assert [catalan_polytope_volume(n) for n in (2, 3, 4, 5)] == [
            1, 4, 64, 5120
        ]

    def test_morris_volume_unit_parameters_give_cry(self):
        for n in range(2, 7):
            assert morris_polytope_volume(n, 1, 1, 1) == cry_product(n)

    def test_tesler_volume_unit_case(self):
        for n in (2, 3, 4):
            assert tesler_family_volume(n, 1, 1) == tesler_unit_volume(n)

    def test_tesler_volume_rejects_b_zero(self):
        with pytest.raises(ValueError):
            tesler_family_volume(3, 1, 0)

    def test_tesler_unit_values(self):
        assert [tesler_unit_volume(n) for n in (2, 3, 4)] == [1, 4, 160]


class TestSytStaircase:
    def test_small_shapes(self):
        assert syt_staircase(2) == 1
        assert syt_staircase(3) == 2
        assert syt_staircase(4) == 16
        assert syt_staircase(5) == 768

    def test_brute_force_count(self):
        # linear extensions of the staircase poset (2, 1), counted directly
        from itertools import permutations

        cells = [(0, 0), (0, 1), (1, 0)]
        count = 0
        for perm in permutations(range(1, 4)):
            grid = dict(zip(cells, perm))
            if grid[(0, 0)] < grid[(0, 1)] and grid[(0, 0)] < grid[(1, 0)]:
                count += 1
        assert syt_staircase(3) == count
