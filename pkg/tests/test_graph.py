import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from qindex.graph import (
    Graph,
    Graph6Error,
    GraphError,
    canonical_form,
    complete_graph,
    complete_to_maximal,
    connected_components,
    cycle_graph,
    decode_graph6,
    degeneracy,
    degeneracy_ordering,
    degree_profile,
    DegreeProfile,
    empty_graph,
    encode_graph6,
    format_edge_list,
    from_edge_list,
    from_mask,
    is_isomorphic,
    is_k_degenerate,
    make_snk,
    max_degenerate_edges,
    parse_edge_list,
    path_graph,
    star_graph,
)

from conftest import all_graphs, brute_degeneracy


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return from_mask(n, mask)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


class TestConstruction:
    def test_path(self):
        g = from_edge_list(3, [(0, 1), (1, 2)])
        assert g.m == 2 and g.edges() == [(0, 1), (1, 2)]

    def test_single_vertex(self):
        g = from_edge_list(1, [])
        assert g.n == 1 and g.m == 0

    def test_snk_by_edges(self):
        g = from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        assert g.m == 5
        assert canonical_form(g) == canonical_form(make_snk(4, 2))

    def test_duplicates_collapse(self):
        g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
        assert g.m == 1

    @pytest.mark.parametrize("n, edges", [(3, [(0, 3)]), (3, [(-1, 0)]), (3, [(1, 1)]), (0, []), (65, [])])
    def test_errors(self, n, edges):
        with pytest.raises(GraphError):
            from_edge_list(n, edges)

    def test_invariants_enforced(self):
        with pytest.raises(GraphError):
            Graph(2, (0b10, 0))  # asymmetric
        with pytest.raises(GraphError):
            Graph(2, (0b01, 0))  # loop
        with pytest.raises(GraphError):
            Graph(2, (0b100, 0))  # bit beyond n-1

    def test_64_vertices(self):
        g = complete_graph(64)
        assert g.m == 64 * 63 // 2

    @given(graphs())
    def test_mask_round_trip(self, g):
        assert from_mask(g.n, g.upper_mask()) == g


class TestDegreeProfile:
    def test_p3(self, zoo):
        p = degree_profile(zoo["P3"])
        assert (p.n, p.m, p.delta, p.Delta, p.degrees) == (3, 2, 1, 2, (1, 2, 1))

    def test_k4(self, zoo):
        p = degree_profile(zoo["K4"])
        assert (p.n, p.m, p.delta, p.Delta) == (4, 6, 3, 3)

    def test_s52(self, zoo):
        p = degree_profile(zoo["S52"])
        assert (p.n, p.m, p.delta, p.Delta) == (5, 7, 2, 4)
        assert sorted(p.degrees) == [2, 2, 2, 4, 4]

    @given(graphs())
    def test_invariants(self, g):
        p = degree_profile(g)
        assert sum(p.degrees) == 2 * p.m
        assert 0 <= p.delta <= p.Delta <= p.n - 1

    def test_from_params(self):
        p = DegreeProfile.from_params(6, 7, 1, 4)
        assert sum(p.degrees) == 14 and min(p.degrees) == 1 and max(p.degrees) == 4
        with pytest.raises(ValueError):
            DegreeProfile.from_params(3, 3, 0, 2)


class TestDegeneracy:
    def test_trees(self):
        rng = random.Random(3)
        for n in range(2, 20):
            tree = from_edge_list(n, [(v, rng.randrange(v)) for v in range(1, n)])
            assert degeneracy(tree) == 1

    def test_c5(self, zoo):
        assert degeneracy(zoo["C5"]) == 2
        assert brute_degeneracy(zoo["C5"]) == 2

    def test_k5(self, zoo):
        assert degeneracy(zoo["K5"]) == 4

    def test_s73(self, zoo):
        assert degeneracy(zoo["S73"]) == 3
        assert brute_degeneracy(zoo["S73"]) == 3

    def test_edgeless(self):
        assert degeneracy(empty_graph(5)) == 0
        assert degeneracy(empty_graph(1)) == 0

    def test_is_k_degenerate_examples(self, zoo):
        assert is_k_degenerate(zoo["P4"], 1)
        assert not is_k_degenerate(zoo["C4"], 1)
        assert is_k_degenerate(zoo["C4"], 2)
        assert is_k_degenerate(zoo["S62"], 2)
        assert not is_k_degenerate(zoo["S62"], 1)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_definition_exhaustive(self, n):
        for g in all_graphs(n):
            d = degeneracy(g)
            assert d == brute_degeneracy(g), g.edges()
            assert is_k_degenerate(g, d) and (d == 0 or not is_k_degenerate(g, d - 1))

    def test_matches_definition_sampled_n7(self):
        rng = random.Random(7)
        for _ in range(300):
            g = from_mask(7, rng.getrandbits(21))
            assert degeneracy(g) == brute_degeneracy(g)

    def test_tie_break_lowest_index(self):
        o = degeneracy_ordering(path_graph(4))
        assert o.order[0] == 0
        o = degeneracy_ordering(cycle_graph(5))
        assert o.order == (0, 1, 2, 3, 4)

    @given(graphs(), st.randoms(use_true_random=False))
    @settings(max_examples=200)
    def test_value_independent_of_labelling(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert degeneracy(g.permute(perm)) == degeneracy(g)

    @given(graphs())
    def test_ordering_structure(self, g):
        o = degeneracy_ordering(g)
        assert sorted(o.order) == list(range(g.n))
        pos = {v: i for i, v in enumerate(o.order)}
        for v in range(g.n):
            later = sum(1 for u in g.neighbors(v) if pos[u] > pos[v])
            assert o.back_degrees[v] == later
        assert o.degeneracy == max(o.back_degrees)
        assert o.degeneracy <= degree_profile(g).Delta


class TestSnk:
    def test_star(self):
        g = make_snk(5, 1)
        assert g.m == 4 and canonical_form(g) == canonical_form(star_graph(5))

    def test_k4_minus_edge(self):
        g = make_snk(4, 2)
        assert g.m == 5 and not g.has_edge(2, 3)

    def test_complete(self):
        assert make_snk(4, 4) == complete_graph(4)

    @pytest.mark.parametrize("n, k", [(3, 4), (3, 0), (3, -1)])
    def test_errors(self, n, k):
        with pytest.raises(GraphError):
            make_snk(n, k)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_edge_count_and_degrees(self, n):
        for k in range(1, n + 1):
            g = make_snk(n, k)
            assert g.m == max_degenerate_edges(n, k)
            assert is_k_degenerate(g, k)
            assert set(g.degrees()) <= {k, n - 1}


class TestEdgeBound:
    def test_examples(self):
        assert max_degenerate_edges(5, 2) == 7
        assert max_degenerate_edges(6, 0) == 0
        assert max_degenerate_edges(7, 3) == 15

    def test_errors(self):
        with pytest.raises(ValueError):
            max_degenerate_edges(2, 3)
        with pytest.raises(ValueError):
            max_degenerate_edges(3, -1)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_exhaustive(self, n):
        for g in all_graphs(n):
            d = degeneracy(g)
            for k in range(d, n + 1):
                assert g.m <= max_degenerate_edges(n, k)


class TestCompletion:
    def test_empty_n5_k2(self):
        g = complete_to_maximal(empty_graph(5), 2)
        assert g.m == 7 and is_k_degenerate(g, 2)

    @pytest.mark.parametrize("n, k", [(5, 1), (5, 2), (6, 3), (7, 2)])
    def test_snk_is_maximal(self, n, k):
        s = make_snk(n, k)
        assert complete_to_maximal(s, k) == s
        for u in range(n):
            for v in range(u + 1, n):
                if not s.has_edge(u, v):
                    assert not is_k_degenerate(s.with_edge(u, v), k)

    def test_k1(self):
        assert complete_to_maximal(empty_graph(1), 0) == empty_graph(1)

    def test_rejects_non_degenerate(self, zoo):
        with pytest.raises(GraphError):
            complete_to_maximal(zoo["K4"], 2)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_exhaustive(self, n):
        for g in all_graphs(n):
            for k in range(degeneracy(g), n):
                h = complete_to_maximal(g, k)
                assert set(g.edges()) <= set(h.edges())
                assert is_k_degenerate(h, k)
                assert h.m == max_degenerate_edges(n, k)
                if n >= k + 1:
                    assert min(h.degrees()) == k
                for u in range(n):
                    for v in range(u + 1, n):
                        if not h.has_edge(u, v):
                            assert not is_k_degenerate(h.with_edge(u, v), k)


class TestGraph6:
    def test_k3(self, zoo):
        assert encode_graph6(zoo["K3"]) == "Bw"
        assert decode_graph6("Bw") == zoo["K3"]

    def test_k1(self, zoo):
        assert encode_graph6(zoo["K1"]) == "@"
        assert decode_graph6("@") == zoo["K1"]

    def test_s42(self, zoo):
        assert encode_graph6(zoo["S42"]) == "C}"
        assert decode_graph6("C}") == zoo["S42"]

    def test_header_and_newline(self):
        assert decode_graph6(">>graph6<<Bw\n") == complete_graph(3)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_round_trip_exhaustive(self, n):
        for g in all_graphs(n):
            assert decode_graph6(encode_graph6(g)) == g

    @given(graphs(max_n=20) | st.builds(lambda n, s: from_edge_list(
        n, [(i, j) for j in range(n) for i in range(j) if random.Random(s * 131 + i * 7 + j).random() < .4]),
        st.integers(2, 62), st.integers(0, 10 ** 6)))
    @settings(max_examples=150)
    def test_matches_networkx(self, g):
        expected = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert encode_graph6(g) == expected

    @pytest.mark.parametrize("line", ["", "A", "B", "Bww", "B~~", "C\x7f", "~??"])
    def test_decode_errors(self, line):
        with pytest.raises(Graph6Error):
            decode_graph6(line)

    def test_decode_rejects_zero_order(self):
        with pytest.raises(Graph6Error):
            decode_graph6("?")

    def test_encode_limit(self):
        with pytest.raises(GraphError):
            encode_graph6(empty_graph(63))


class TestEdgeListText:
    def test_round_trip(self, zoo):
        for g in zoo.values():
            assert parse_edge_list(format_edge_list(g)) == g

    def test_format(self, zoo):
        assert format_edge_list(zoo["P3"]) == "3 2\n0 1\n1 2\n"

    @pytest.mark.parametrize("text, line", [
        ("", 1), ("3\n", 1), ("3 1\n0 x\n", 2), ("3 2\n0 1\n", 1), ("3 1\n0 3\n", 2), ("3 1\n\n1 1\n", 3),
    ])
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(GraphError, match=f"line {line}"):
            parse_edge_list(text)


class TestComponents:
    def test_two_triangles(self, zoo):
        blocks = connected_components(zoo["K3+K3"])
        assert sorted(map(len, blocks)) == [3, 3]

    def test_path(self, zoo):
        assert connected_components(zoo["P5"]) == [[0, 1, 2, 3, 4]]

    def test_edgeless(self, zoo):
        assert connected_components(zoo["E4"]) == [[0], [1], [2], [3]]

    @given(graphs(max_n=12) | st.builds(lambda n, s: from_mask(n, s % (1 << (n * (n - 1) // 2))),
                                        st.integers(9, 14), st.integers(0, 1 << 60)))
    def test_matches_networkx(self, g):
        ours = sorted(sorted(b) for b in connected_components(g))
        theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
        assert ours == theirs


class TestCanonicalForm:
    def test_p3_labelings(self):
        a = from_edge_list(3, [(0, 1), (1, 2)])
        b = from_edge_list(3, [(1, 0), (0, 2)])
        assert canonical_form(a) == canonical_form(b)

    def test_c4_vs_p4(self, zoo):
        assert canonical_form(zoo["C4"]) != canonical_form(zoo["P4"])

    def test_distinct_forms_n5(self):
        assert len({canonical_form(g) for g in all_graphs(5)}) == 34

    @pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 4), (4, 11), (6, 156)])
    def test_distinct_forms(self, n, count):
        assert len({canonical_form(g) for g in all_graphs(n)}) == count

    @given(graphs(), st.randoms(use_true_random=False))
    @settings(max_examples=300)
    def test_permutation_invariant(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert canonical_form(g.permute(perm)) == canonical_form(g)

    @given(graphs(max_n=7), graphs(max_n=7))
    @settings(max_examples=300)
    def test_agrees_with_networkx(self, g, h):
        if g.n == h.n:
            assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))

    def test_regular_n8(self):
        assert canonical_form(cycle_graph(8)) != canonical_form(
            from_edge_list(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]))

    def test_too_large(self):
        with pytest.raises(GraphError):
            canonical_form(path_graph(9))
