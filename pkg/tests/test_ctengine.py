from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flowcat.ctengine import (
    BijectionReport,
    CTIntegrand,
    MatrixGrid,
    catalan_polytope_ct,
    constant_term,
    morris_ct,
    reduction_identity_sides,
    staircase_matrices,
    tesler_ct,
    verify_reduction_bijection,
)


def series_ct(f: CTIntegrand, bound: int) -> int:
    """Truncated Laurent-series oracle for the constant term.

    Multiplies out every factor as an explicit exponent-vector dict with the
    same 1/(x_j - x_i) = x_j^{-1} sum (x_i/x_j)^k convention, truncating each
    geometric series at `bound` terms, and reads off the zero coefficient.
    Correct whenever bound is large enough; callers check stability.
    """
    n = f.n_vars

    def mul(h1, h2):
        out = {}
        for e1, c1 in h1.items():
            for e2, c2 in h2.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return out

    acc = {}
    for c, exps in f.numerator:
        e = tuple(a - p for a, p in zip(exps, f.x_pole))
        acc[e] = acc.get(e, 0) + c
    for i, b in enumerate(f.one_minus_pole):
        for _ in range(b):
            term = {}
            for r in range(bound + 1):
                e = [0] * n
                e[i] = r
                term[tuple(e)] = 1
            acc = mul(acc, term)
    for i in range(n):
        for j in range(i + 1, n):
            for _ in range(f.vandermonde_power):
                term = {}
                for k in range(bound + 1):
                    e = [0] * n
                    e[i] = k
                    e[j] = -k - 1
                    term[tuple(e)] = 1
                acc = mul(acc, term)
    return acc.get((0,) * n, 0)


class TestConstantTerm:
    def test_single_variable_by_hand(self):
        # CT x^-2 (1-x)^-3 = coeff of x^2 in (1-x)^-3 = C(4,2)
        f = CTIntegrand(1, ((1, (0,)),), x_pole=(2,), one_minus_pole=(3,))
        assert constant_term(f) == 6

    def test_pure_numerator(self):
        f = CTIntegrand(2, ((5, (0, 0)), (7, (1, 0))))
        assert constant_term(f) == 5

    @settings(max_examples=40, deadline=None)
    @given(
        st.integers(1, 3),
        st.integers(0, 2),
        st.integers(0, 2),
        st.integers(0, 2),
    )
    def test_matches_series_oracle(self, n, a, b, m):
        f = CTIntegrand(
            n,
            ((1, (0,) * n),),
            x_pole=(a,) * n,
            one_minus_pole=(b,) * n,
            vandermonde_power=m,
        )
        bound = 3 * (a + 1) * n
        lo = series_ct(f, bound)
        hi = series_ct(f, bound + 2)
        assert lo == hi, "series truncation not stable"
        assert constant_term(f) == lo

    def test_mixed_numerator_against_series(self):
        f = CTIntegrand(
            2,
            ((1, (2, 0)), (-3, (0, 1)), (2, (1, 1))),
            x_pole=(1, 0),
            one_minus_pole=(1, 2),
            vandermonde_power=1,
        )
        assert series_ct(f, 12) == series_ct(f, 14)
        assert constant_term(f) == series_ct(f, 12)

    def test_json_round_trip(self):
        f = CTIntegrand(
            2, ((1, (1, -2)),), x_pole=(0, 3), one_minus_pole=(2, 0),
            vandermonde_power=2,
        )
        assert CTIntegrand.from_json_dict(f.to_json_dict()) == f

    def test_validation(self):
        with pytest.raises(ValueError):
            CTIntegrand(2, ((1, (0,)),))
        with pytest.raises(ValueError):
            CTIntegrand(1, ((1, (0,)),), one_minus_pole=(-1,))
        with pytest.raises(ValueError):
            CTIntegrand(1, ((1, (0,)),), vandermonde_power=-1)


class TestNamedIntegrands:
    def test_catalan_polytope_values(self):
        assert [catalan_polytope_ct(n) for n in (2, 3, 4, 5)] == [1, 4, 64, 5120]

    def test_morris_small_values(self):
        # n = 1 cases reduce to a one-variable binomial coefficient
        assert morris_ct(1, 2, 3, 1) == 6
        assert morris_ct(1, 0, 2, 1) == 1
        # two variables, checked against the series oracle
        f = CTIntegrand(
            2, ((1, (0, 0)),), x_pole=(0, 0), one_minus_pole=(2, 2),
            vandermonde_power=1,
        )
        assert morris_ct(2, 0, 2, 1) == series_ct(f, 16) == 2

    def test_tesler_small_values(self):
        assert tesler_ct(2, 1, 1) == 1
        assert tesler_ct(3, 1, 1) == 4


class TestMatrixGrid:
    def test_row_and_hook_sums(self):
        A = MatrixGrid(
            4, 4, ((4, 2, 5, 7), (0, 1, 2, 3), (0, 0, 1, 8), (0, 0, 0, 3))
        )
        assert A.row_sum(2) == 6
        assert A.row_sum(3) == 9
        assert A.hook_sum(2) == 2
        assert A.hook_sum(3) == 0

    def test_validation(self):
        with pytest.raises(ValueError):
            MatrixGrid(2, 2, ((1,), (0, 0)))
        with pytest.raises(ValueError):
            MatrixGrid(2, 2, ((0, 0), (1, 0)), upper_triangular=True)
        with pytest.raises(ValueError):
            MatrixGrid(2, 2, ((0, 0), (0, 0)), staircase_diagonal=True)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(2, 4), st.data())
    def test_hook_sum_conservation(self, n, data):
        """For square staircase-diagonal matrices the hook sums always total
        -C(n,2): every free entry cancels and the diagonal survives."""
        entries = [[0] * n for _ in range(n)]
        for i in range(n):
            entries[i][i] = i
            for j in range(i + 1, n):
                entries[i][j] = data.draw(st.integers(0, 5))
        A = MatrixGrid(n, n, tuple(tuple(r) for r in entries),
                       upper_triangular=True, staircase_diagonal=True)
        assert sum(A.hook_sum(k) for k in range(1, n + 1)) == -comb(n, 2)


class TestStaircaseEnumeration:
    def test_matches_filter(self):
        n = 3
        targets = (2, 0, -5)
        got = {M.entries for M in staircase_matrices(n, n, targets)}
        expected = set()
        for v01, v02, v12 in product(range(6), repeat=3):
            grid = ((0, v01, v02), (0, 1, v12), (0, 0, 2))
            M = MatrixGrid(n, n, grid, upper_triangular=True,
                           staircase_diagonal=True)
            if tuple(M.hook_sum(k) for k in range(1, n + 1)) == targets:
                expected.add(grid)
        assert got == expected


class TestReductionIdentity:
    def test_sides_small(self):
        assert reduction_identity_sides(2, (0, 0)) == (2, 2)
        lhs, rhs = reduction_identity_sides(3, (1, 1, 1))
        assert lhs == rhs
        lhs, rhs = reduction_identity_sides(4, (0, 1, 0, 2))
        assert lhs == rhs

    def test_negative_exponent_gives_zero(self):
        assert reduction_identity_sides(2, (2, 2)) == (0, 0)

    def test_bijection_reports(self):
        rep = verify_reduction_bijection(3, (1, 0, 1))
        assert isinstance(rep, BijectionReport)
        assert rep.ok
        assert rep.x_size + rep.x_prime_size == rep.y_size * (rep.upper + 1)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(2, 4), st.data())
    def test_bijection_random_vectors(self, n, data):
        a_vec = tuple(data.draw(st.integers(-1, 2)) for _ in range(n))
        rep = verify_reduction_bijection(n, a_vec)
        assert rep.ok, rep.failures
