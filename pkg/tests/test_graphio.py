import math
from itertools import permutations

import pytest
from hypothesis import given, settings

from wellcovered import (
    EnumFilter,
    build_graph,
    canonical_form,
    enumerate_connected_graphs,
    girth,
    has_four_cycle,
    is_connected,
    named_graph,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from wellcovered.errors import (
    BadHeader,
    EndpointOutOfRange,
    InvalidParameter,
    MalformedLine,
    NonCanonicalPadding,
    OrderTooLarge,
    OrderTooLargeForGenerator,
    TrailingGarbage,
    TruncatedPayload,
)

from conftest import graphs
from oracles import girth_oracle, graph6_encode_oracle, is_isomorphic_small, labeled_classes


class TestGraph6:
    def test_pinned_k2(self):
        k2 = named_graph("complete", 2)
        assert graph6_encode_oracle(k2) == "A_"
        assert write_graph6(k2) == "A_"
        assert parse_graph6("A_") == k2

    def test_pinned_k3(self):
        k3 = named_graph("complete", 3)
        assert graph6_encode_oracle(k3) == "Bw"
        assert write_graph6(k3) == "Bw"
        assert parse_graph6("Bw") == k3

    def test_pinned_single_vertex(self):
        k1 = build_graph(1, [])
        assert graph6_encode_oracle(k1) == "@"
        assert write_graph6(k1) == "@"
        assert parse_graph6("@") == k1

    def test_order_zero(self):
        g = build_graph(0, [])
        assert write_graph6(g) == "?"
        assert parse_graph6("?") == g

    @given(graphs(max_order=10))
    @settings(max_examples=200, deadline=None)
    def test_round_trip_and_oracle_agreement(self, g):
        line = write_graph6(g)
        assert line == graph6_encode_oracle(g)
        assert parse_graph6(line) == g

    def test_newline_tolerated(self):
        assert parse_graph6("A_\n") == named_graph("complete", 2)

    def test_truncated(self):
        with pytest.raises(TruncatedPayload):
            parse_graph6("A")

    def test_trailing_garbage(self):
        with pytest.raises(TrailingGarbage):
            parse_graph6("A__")

    def test_bad_header(self):
        with pytest.raises(BadHeader):
            parse_graph6("")
        with pytest.raises(BadHeader):
            parse_graph6(" A_")
        with pytest.raises(BadHeader):
            parse_graph6("~~~A_")  # long form unsupported

    def test_bad_payload_character(self):
        with pytest.raises(TruncatedPayload):
            parse_graph6("A" + chr(40))

    def test_noncanonical_padding(self):
        # K2's payload is 100000; any nonzero pad bit is rejected
        assert chr(63 + 0b100001) == "`"
        with pytest.raises(NonCanonicalPadding):
            parse_graph6("A`")

    def test_order_too_large_to_write(self):
        g = build_graph(63, [])
        with pytest.raises(OrderTooLarge):
            write_graph6(g)


class TestEdgeList:
    def test_k2(self):
        assert parse_edge_list("2 1\n0 1\n") == named_graph("complete", 2)

    def test_c5(self):
        text = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n"
        assert parse_edge_list(text) == named_graph("cycle", 5)

    def test_out_of_range(self):
        with pytest.raises(EndpointOutOfRange):
            parse_edge_list("3 1\n0 3\n")

    def test_malformed(self):
        with pytest.raises(MalformedLine):
            parse_edge_list("")
        with pytest.raises(MalformedLine):
            parse_edge_list("3\n")
        with pytest.raises(MalformedLine):
            parse_edge_list("3 2\n0 1\n")
        with pytest.raises(MalformedLine):
            parse_edge_list("3 1\n0 1 2\n")
        with pytest.raises(MalformedLine):
            parse_edge_list("3 1\nzero one\n")

    @given(graphs(max_order=9))
    @settings(max_examples=100, deadline=None)
    def test_round_trip(self, g):
        assert parse_edge_list(write_edge_list(g)) == g

    def test_edges_sorted(self):
        g = build_graph(4, [(3, 2), (1, 0), (3, 0)])
        assert write_edge_list(g) == "4 3\n0 1\n0 3\n2 3\n"


class TestCanonicalForm:
    @given(graphs(max_order=7))
    @settings(max_examples=150, deadline=None)
    def test_invariant_under_relabeling(self, g):
        import random

        rng = random.Random(g.order * 1000 + g.num_edges)
        perm = list(range(g.order))
        rng.shuffle(perm)
        relabeled = build_graph(
            g.order, [(perm[u], perm[v]) for u, v in g.edges()]
        )
        assert canonical_form(g) == canonical_form(relabeled)

    def test_distinguishes_nonisomorphic(self):
        p4 = named_graph("path", 4)
        star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
        assert canonical_form(p4) != canonical_form(star)

    def test_canonical_graph_is_isomorphic_to_input(self):
        g = named_graph("wl8")
        from wellcovered import Graph

        canon = Graph(8, canonical_form(g))
        assert sorted(canon.degrees()) == sorted(g.degrees())
        assert girth(canon) == girth(g)


class TestEnumerator:
    def test_connected_counts(self):
        # 1, 1, 2, 6, 21, 112, 853 connected graphs on 1..7 vertices
        expected = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
        for n, count in expected.items():
            got = sum(1 for _ in enumerate_connected_graphs(EnumFilter(order=n)))
            assert got == count, n

    def test_order3_exactly_p3_k3(self):
        got = list(enumerate_connected_graphs(EnumFilter(order=3)))
        assert len(got) == 2
        shapes = {g.num_edges for g in got}
        assert shapes == {2, 3}

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_matches_labeled_oracle(self, n):
        ours = list(enumerate_connected_graphs(EnumFilter(order=n, connected=False)))
        oracle = labeled_classes(n)
        assert len(ours) == len(oracle)
        ours_keys = {
            min(
                tuple(
                    sorted(
                        (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
                        for u, v in g.edges()
                    )
                )
                for perm in permutations(range(n))
            )
            for g in ours
        }
        assert ours_keys == {tuple(sorted(c)) for c in oracle}

    def test_connected_matches_labeled_oracle(self):
        oracle = labeled_classes(5, predicate=is_connected)
        got = sum(1 for _ in enumerate_connected_graphs(EnumFilter(order=5)))
        assert got == len(oracle) == 21

    def test_girth5_order5(self):
        got = list(enumerate_connected_graphs(EnumFilter(order=5, min_girth=5)))
        assert len(got) == 4  # three trees and the 5-cycle
        cycles = [g for g in got if girth(g) == 5]
        assert len(cycles) == 1
        assert is_isomorphic_small(cycles[0], named_graph("cycle", 5))

    def test_triangle_free_counts(self):
        # 6, 19, 59 connected triangle-free graphs on 5..7 vertices, confirmed
        # by the labeled-enumeration oracle (<=6) and the atlas (7)
        for n, count in {5: 6, 6: 19, 7: 59}.items():
            got = sum(
                1
                for _ in enumerate_connected_graphs(
                    EnumFilter(order=n, triangle_free=True)
                )
            )
            assert got == count, n

    def test_order7_against_atlas(self):
        import networkx as nx
        from networkx.generators.atlas import graph_atlas_g

        atlas = [
            g
            for g in graph_atlas_g()
            if g.number_of_nodes() == 7 and nx.is_connected(g)
        ]
        ours = list(enumerate_connected_graphs(EnumFilter(order=7)))
        assert len(ours) == len(atlas) == 853
        tf_atlas = sum(1 for g in atlas if sum(nx.triangles(g).values()) == 0)
        tf_ours = sum(
            1
            for _ in enumerate_connected_graphs(EnumFilter(order=7, triangle_free=True))
        )
        assert tf_ours == tf_atlas == 59

    def test_filters_hold_on_emission(self):
        filt = EnumFilter(
            order=6, min_girth=4, min_degree=2, must_contain_c4=True
        )
        got = list(enumerate_connected_graphs(filt))
        assert got
        for g in got:
            assert is_connected(g)
            assert girth_oracle(g) >= 4
            assert min(g.degrees()) >= 2
            assert has_four_cycle(g)

    def test_infinite_girth_filter_yields_forests(self):
        got = list(
            enumerate_connected_graphs(EnumFilter(order=6, min_girth=math.inf))
        )
        assert len(got) == 6  # trees on six vertices
        assert all(girth(g) == math.inf for g in got)

    def test_no_isomorphic_duplicates_small(self):
        for n in (4, 5):
            got = list(enumerate_connected_graphs(EnumFilter(order=n)))
            for i, g in enumerate(got):
                for h in got[i + 1 :]:
                    assert not is_isomorphic_small(g, h)

    def test_deterministic_emission(self):
        a = [write_graph6(g) for g in enumerate_connected_graphs(EnumFilter(order=6))]
        b = [write_graph6(g) for g in enumerate_connected_graphs(EnumFilter(order=6))]
        assert a == b

    def test_generator_cap(self):
        with pytest.raises(OrderTooLargeForGenerator):
            list(enumerate_connected_graphs(EnumFilter(order=10)))

    def test_bad_filter(self):
        with pytest.raises(InvalidParameter):
            EnumFilter(order=0)
        with pytest.raises(InvalidParameter):
            EnumFilter(order=4, min_girth=2)
