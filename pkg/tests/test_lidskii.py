from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flowcat.core import complete_graph, kostant, morris_graph, tesler_graph
from flowcat.lidskii import (
    EhrhartPolynomial,
    NotFullDimensionalError,
    ehrhart_polynomial,
    has_interior_flow,
    lidskii_points,
    lidskii_volume,
    ps_volume,
)


class TestVolume:
    def test_known_small_values(self):
        assert lidskii_volume(complete_graph(3), (1, 1, -2)) == 1
        assert lidskii_volume(complete_graph(4), (1, 1, 0, -2)) == 4
        assert lidskii_volume(complete_graph(4), (1, 0, 0, -1)) == 1

    def test_prune_flag_is_cosmetic(self):
        G = complete_graph(5)
        a = (2, 0, 1, 0, -3)
        assert lidskii_volume(G, a, prune=True) == lidskii_volume(G, a, prune=False)

    def test_rejects_bad_netflow(self):
        G = complete_graph(4)
        with pytest.raises(ValueError):
            lidskii_volume(G, (1, 1, -2))
        with pytest.raises(ValueError):
            lidskii_volume(G, (1, 1, 1, -2))
        with pytest.raises(ValueError):
            lidskii_volume(G, (1, -1, 1, -1))

    @settings(max_examples=15, deadline=None)
    @given(st.lists(st.integers(0, 2), min_size=3, max_size=3))
    def test_scaling_degree(self, prefix):
        """vol is invariant under dilation once divided out of the Ehrhart
        leading term; check vol(2a) = 2^dim vol(a) for full-dimensional a."""
        G = complete_graph(4)
        a = tuple(prefix) + (-sum(prefix),)
        if not has_interior_flow(G, a):
            return
        dim = G.edge_count - 3
        doubled = tuple(2 * x for x in a)
        assert lidskii_volume(G, doubled) == 2**dim * lidskii_volume(G, a)


class TestPoints:
    def test_equals_kostant(self):
        cases = [
            (complete_graph(4), (1, 1, 0, -2)),
            (complete_graph(5), (2, 0, 1, 0, -3)),
            (morris_graph(4, 2, 1, 1), (1, 0, 0, -1)),
            (tesler_graph(4, 1, 2), (1, 1, 1, -3)),
        ]
        for G, a in cases:
            assert lidskii_points(G, a) == kostant(G, a)


class TestPsVolume:
    def test_cry_values(self):
        expected = {3: 1, 4: 2, 5: 10, 6: 140}
        for n, v in expected.items():
            assert ps_volume(complete_graph(n + 1)) == v

    def test_agrees_with_composition_sum(self):
        for n in range(3, 6):
            G = complete_graph(n + 1)
            a = (1,) + (0,) * (n - 1) + (-1,)
            assert ps_volume(G) == lidskii_volume(G, a)


class TestEhrhart:
    def test_polynomial_shape(self):
        G = complete_graph(4)
        p = ehrhart_polynomial(G, (1, 1, 0, -2))
        assert p.degree == G.edge_count - 3
        assert p(0) == 1
        assert p(1) == kostant(G, (1, 1, 0, -2))
        assert p.normalized_volume == 4

    def test_evaluation_matches_kostant_everywhere(self):
        G = tesler_graph(4, 1, 1)
        a = (1, 1, 1, -3)
        p = ehrhart_polynomial(G, a)
        for t in range(8):
            assert p(t) == kostant(G, tuple(t * x for x in a))

    def test_not_full_dimensional_raises(self):
        # no positive supply reaches vertex 1, so edge (1,2) is frozen at 0
        G = complete_graph(4)
        assert not has_interior_flow(G, (0, 1, 0, -1))
        with pytest.raises(NotFullDimensionalError):
            ehrhart_polynomial(G, (0, 1, 0, -1))

    def test_interior_flow_positive_case(self):
        assert has_interior_flow(complete_graph(4), (1, 0, 0, -1))

    def test_horner_evaluation(self):
        p = EhrhartPolynomial((Fraction(1), Fraction(3, 2), Fraction(1, 2)))
        assert p(3) == 1 + Fraction(9, 2) + Fraction(9, 2)
        assert p.normalized_volume == 1
