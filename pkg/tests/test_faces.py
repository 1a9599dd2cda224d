import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flowcat.faces import (
    DecreasingForest,
    TeslerTableau,
    catalan_polytope_vertices,
    enumerate_tableaux,
    f_vector,
    forest_to_tableau,
    tableau_dimension,
    tableau_to_forest,
    vertex_count_formula,
    vertex_tableaux,
)


def brute_enumerate(a):
    """Oracle: generate every (0,1)-filling and filter by the validity
    predicate, ignoring the row-local dichotomy shortcut."""
    n = len(a)
    shapes = [n - i for i in range(n)]
    total = sum(shapes)
    out = []
    for mask in range(1 << total):
        bits = [(mask >> k) & 1 for k in range(total)]
        rows, pos = [], 0
        for w in shapes:
            rows.append(tuple(bits[pos : pos + w]))
            pos += w
        T = TeslerTableau(n, tuple(rows))
        if T.is_valid(a):
            out.append(T)
    return out


class TestTableau:
    def test_cell_addressing(self):
        T = TeslerTableau(3, ((1, 0, 1), (0, 1), (1,)))
        assert T.cell(1, 1) == 1
        assert T.cell(1, 3) == 1
        assert T.cell(2, 3) == 1
        assert T.cell(3, 3) == 1
        assert T.ones() == 4

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            TeslerTableau(2, ((1, 0),))
        with pytest.raises(ValueError):
            TeslerTableau(2, ((2, 0), (0,)))

    def test_dimension(self):
        T = TeslerTableau(3, ((1, 1, 0), (0, 1), (1,)))
        assert tableau_dimension(T) == 4 - 3


class TestEnumeration:
    @settings(max_examples=25, deadline=None)
    @given(st.lists(st.integers(0, 2), min_size=1, max_size=4))
    def test_matches_brute_force(self, a):
        fast = {T.rows for T, _ in enumerate_tableaux(a)}
        slow = {T.rows for T in brute_enumerate(a)}
        assert fast == slow

    def test_zero_netflow_single_tableau(self):
        pairs = enumerate_tableaux((0, 0, 0))
        assert len(pairs) == 1
        assert pairs[0][0].ones() == 0

    def test_rejects_negative_entries(self):
        with pytest.raises(ValueError):
            enumerate_tableaux((1, -1))

    def test_size_bound(self):
        with pytest.raises(ValueError):
            enumerate_tableaux((1,) * 9)


class TestFVector:
    def test_segment(self):
        assert f_vector((1, 1)) == [2, 1]

    def test_top_dimension_for_positive_netflow(self):
        # all entries positive: the polytope has full dimension C(n+1,2) - n
        for n in (2, 3, 4):
            fv = f_vector((1,) * n)
            assert len(fv) - 1 == (n + 1) * n // 2 - n
            assert fv[-1] == 1

    @settings(max_examples=20, deadline=None)
    @given(st.lists(st.integers(0, 2), min_size=1, max_size=4))
    def test_euler_characteristic(self, a):
        if sum(a) == 0:
            return
        fv = f_vector(a)
        assert sum((-1) ** d * c for d, c in enumerate(fv)) == 1


class TestForests:
    def test_decreasing_constraint(self):
        with pytest.raises(ValueError):
            DecreasingForest(frozenset({1, 2}), {2: 1})
        with pytest.raises(ValueError):
            DecreasingForest(frozenset({2}), {2: 3})

    def test_roots_and_leaves(self):
        F = DecreasingForest(frozenset({1, 2, 3, 5}), {1: 3, 2: 3})
        assert F.roots == {3, 5}
        assert F.leaves == {1, 2, 5}
        assert F.parent_array(5) == [3, 3, 0, None, 0]

    @settings(max_examples=20, deadline=None)
    @given(st.lists(st.integers(0, 1), min_size=2, max_size=5))
    def test_round_trip(self, a):
        n = len(a)
        for T in vertex_tableaux(a):
            F = tableau_to_forest(T)
            assert forest_to_tableau(F, n).rows == T.rows
            # vertices with a 1 on the diagonal are exactly the roots
            diag = {i for i in range(1, n + 1) if T.cell(i, i) == 1}
            assert F.roots == diag

    def test_leaves_lie_in_support(self):
        a = (1, 0, 1, 0)
        support = {i + 1 for i, x in enumerate(a) if x > 0}
        for T in vertex_tableaux(a):
            F = tableau_to_forest(T)
            assert F.leaves <= support


class TestVertexCounts:
    def test_formula_values(self):
        assert vertex_count_formula(0, 0) == 2
        assert vertex_count_formula(1, 2) == 36
        assert catalan_polytope_vertices(4) == 18

    def test_formula_matches_enumeration(self):
        for r in range(3):
            for s in range(3):
                a = (1,) + (0,) * r + (1,) + (0,) * s
                assert len(vertex_tableaux(a)) == vertex_count_formula(r, s)

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            vertex_count_formula(-1, 0)
        with pytest.raises(ValueError):
            catalan_polytope_vertices(1)
