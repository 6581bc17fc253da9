import pytest
from hypothesis import given, settings

from wellcovered import (
    build_graph,
    enumerate_mis,
    find_unequal_maximal_sets,
    independence_summary,
    is_extendable,
    is_one_well_covered,
    is_well_covered,
    isolatable,
    isolatable_vertices,
    named_graph,
    random_maximal_independent_set,
    strong_support_vertices,
)
from wellcovered.errors import EnumerationTooLarge, NotWellCovered, VertexOutOfRange

from conftest import graphs
from oracles import brute_force_mis, naive_isolatable


def as_sets(stream):
    return {frozenset(m) for m in stream}


class TestEnumerateMis:
    def test_k3_singletons(self):
        assert as_sets(enumerate_mis(named_graph("complete", 3))) == {
            frozenset([0]),
            frozenset([1]),
            frozenset([2]),
        }

    def test_c5_five_pairs(self):
        sets = list(enumerate_mis(named_graph("cycle", 5)))
        assert len(sets) == 5 and all(len(m) == 2 for m in sets)
        assert as_sets(sets) == brute_force_mis(named_graph("cycle", 5))

    def test_p3(self):
        assert as_sets(enumerate_mis(named_graph("path", 3))) == {
            frozenset([1]),
            frozenset([0, 2]),
        }

    def test_empty_graph(self):
        assert as_sets(enumerate_mis(build_graph(0, []))) == {frozenset()}

    @given(graphs(max_order=9))
    @settings(max_examples=200, deadline=None)
    def test_matches_subset_filter(self, g):
        assert as_sets(enumerate_mis(g)) == brute_force_mis(g)

    def test_matches_subset_filter_orders_11_and_12(self):
        from wellcovered import cartesian_product

        grid_3x4, _ = cartesian_product(named_graph("path", 3), named_graph("path", 4))
        c11 = named_graph("cycle", 11)
        wheelish = build_graph(
            11, [(i, (i + 1) % 10) for i in range(10)] + [(10, 0), (10, 4), (10, 7)]
        )
        for g in (named_graph("cycle", 12), grid_3x4, c11, wheelish):
            assert as_sets(enumerate_mis(g)) == brute_force_mis(g)

    @given(graphs(max_order=8))
    @settings(max_examples=100, deadline=None)
    def test_every_set_dominates(self, g):
        for m in enumerate_mis(g):
            assert g.closed_neighborhood(m).mask == g.full_mask

    @given(graphs(max_order=7))
    @settings(max_examples=50, deadline=None)
    def test_deterministic_stream(self, g):
        first = [tuple(sorted(m)) for m in enumerate_mis(g)]
        second = [tuple(sorted(m)) for m in enumerate_mis(g)]
        assert first == second

    def test_guardrail(self):
        big = build_graph(31, [(i, i + 1) for i in range(30)])
        with pytest.raises(EnumerationTooLarge):
            list(enumerate_mis(big))
        assert any(enumerate_mis(big, allow_large=True))


class TestSummary:
    def test_c5(self):
        s = independence_summary(named_graph("cycle", 5))
        assert (s.alpha, s.idom, s.well_covered, s.witness) == (2, 2, True, None)

    def test_p3_witness(self):
        s = independence_summary(named_graph("path", 3))
        assert (s.alpha, s.idom, s.well_covered) == (2, 1, False)
        assert {frozenset(s.witness[0]), frozenset(s.witness[1])} == {
            frozenset([1]),
            frozenset([0, 2]),
        }

    def test_c4(self):
        s = independence_summary(named_graph("cycle", 4))
        assert (s.alpha, s.idom, s.well_covered) == (2, 2, True)

    def test_c7_well_covered(self):
        s = independence_summary(named_graph("cycle", 7))
        assert (s.alpha, s.idom, s.well_covered) == (3, 3, True)

    @given(graphs(max_order=8))
    @settings(max_examples=100, deadline=None)
    def test_alpha_idom_extremes_of_stream(self, g):
        sizes = [len(m) for m in enumerate_mis(g)]
        s = independence_summary(g)
        assert s.alpha == max(sizes) and s.idom == min(sizes)
        assert s.well_covered == (s.alpha == s.idom)
        assert (s.witness is not None) == (not s.well_covered)
        if s.witness is not None:
            m1, m2 = s.witness
            assert len(m1) != len(m2)
            for m in (m1, m2):
                assert g.is_independent(m)
                assert g.closed_neighborhood(m).mask == g.full_mask

    @given(graphs(max_order=8))
    @settings(max_examples=100, deadline=None)
    def test_short_circuit_agrees(self, g):
        assert is_well_covered(g) == independence_summary(g).well_covered
        pair = find_unequal_maximal_sets(g)
        assert (pair is None) == independence_summary(g).well_covered


class TestIsolatable:
    def test_p3_leaf(self):
        assert sorted(isolatable(named_graph("path", 3), 0)) == [2]

    def test_c5_absent(self):
        c5 = named_graph("cycle", 5)
        assert all(isolatable(c5, w) is None for w in range(5))

    def test_c7_witness(self):
        j = isolatable(named_graph("cycle", 7), 0)
        assert sorted(j) == [2, 5]

    def test_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            isolatable(named_graph("cycle", 5), 5)

    @given(graphs(min_order=1, max_order=10))
    @settings(max_examples=150, deadline=None)
    def test_agrees_with_naive_search(self, g):
        for w in range(g.order):
            assert (isolatable(g, w) is not None) == naive_isolatable(g, w)

    @given(graphs(min_order=1, max_order=8))
    @settings(max_examples=80, deadline=None)
    def test_witness_isolates_exactly(self, g):
        for w in range(g.order):
            j = isolatable(g, w)
            if j is None:
                continue
            assert g.is_independent(j)
            assert w not in g.closed_neighborhood(j)
            assert g.closed_neighborhood(j).complement().mask == 1 << w

    def test_vertices_examples(self):
        assert len(isolatable_vertices(named_graph("cycle", 5))) == 0
        assert sorted(isolatable_vertices(named_graph("cycle", 7))) == list(range(7))
        assert len(isolatable_vertices(named_graph("complete", 2))) == 0
        # single vertex: the empty set isolates it
        assert sorted(isolatable_vertices(build_graph(1, []))) == [0]
        assert sorted(isolatable_vertices(named_graph("cycle", 4))) == [0, 1, 2, 3]


class TestExtendable:
    def test_c5_all_extendable(self):
        c5 = named_graph("cycle", 5)
        assert all(is_extendable(c5, x) for x in range(5))

    def test_not_well_covered_rejected(self):
        with pytest.raises(NotWellCovered):
            is_extendable(named_graph("path", 3), 0)

    def test_k2(self):
        assert is_extendable(named_graph("complete", 2), 0)
        assert is_extendable(named_graph("complete", 2), 1)

    def test_c7_nothing_extendable(self):
        c7 = named_graph("cycle", 7)
        assert not any(is_extendable(c7, x) for x in range(7))


class TestOneWellCovered:
    def test_examples(self):
        assert is_one_well_covered(named_graph("cycle", 5))
        assert is_one_well_covered(named_graph("complete", 2))
        assert not is_one_well_covered(named_graph("path", 4))
        assert not is_one_well_covered(named_graph("cycle", 7))
        assert is_one_well_covered(named_graph("wl8"))

    @given(graphs(max_order=7))
    @settings(max_examples=60, deadline=None)
    def test_both_routes_agree(self, g):
        # the routes are compared internally; a disagreement raises
        result = is_one_well_covered(g)
        if result:
            assert independence_summary(g).well_covered
            assert len(isolatable_vertices(g)) == 0


class TestExtendableVsIsolatable:
    @given(graphs(max_order=7))
    @settings(max_examples=80, deadline=None)
    def test_cross_check(self, g):
        if not independence_summary(g).well_covered:
            return
        for x in range(g.order):
            assert is_extendable(g, x) == (isolatable(g, x) is None)


class TestStrongSupportShortcut:
    @given(graphs(max_order=8))
    @settings(max_examples=100, deadline=None)
    def test_strong_support_forces_not_well_covered(self, g):
        if len(strong_support_vertices(g)) > 0:
            assert not independence_summary(g).well_covered


class TestRandomMaximalSet:
    def test_k3_singleton(self):
        m = random_maximal_independent_set(named_graph("complete", 3), 1)
        assert len(m) == 1

    def test_c5_pairs(self):
        for seed in range(20):
            m = random_maximal_independent_set(named_graph("cycle", 5), seed)
            assert len(m) == 2

    def test_empty_graph(self):
        assert len(random_maximal_independent_set(build_graph(0, []), 3)) == 0

    def test_deterministic(self):
        g = named_graph("wl8")
        for seed in range(10):
            a = random_maximal_independent_set(g, seed)
            b = random_maximal_independent_set(g, seed)
            assert a == b

    @given(graphs(max_order=9))
    @settings(max_examples=80, deadline=None)
    def test_always_maximal_independent(self, g):
        for seed in (0, 1, 7):
            m = random_maximal_independent_set(g, seed)
            assert g.is_independent(m)
            assert g.closed_neighborhood(m).mask == g.full_mask
