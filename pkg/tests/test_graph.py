import itertools
from math import prod

import networkx as nx
import pytest
from helpers import all_graphs
from hypothesis import given, settings
from hypothesis import strategies as st

from tgk.enumeration import enumerate_bruteforce
from tgk.errors import ParseError
from tgk.graph import (
    Graph,
    build_multipartite,
    classify_family,
    has_travel_groupoid,
    maximal_cliques,
    parse_graph,
    recognize_multipartite,
)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


def edge_condition_holds(G):
    # vw an edge  =>  u adjacent to v or to w, pairwise distinct u, v, w
    for u, v, w in itertools.permutations(range(G.n), 3):
        if G.has_edge(v, w) and not (G.has_edge(u, v) or G.has_edge(u, w)):
            return False
    return True


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


def test_build_k23():
    G, part = build_multipartite([2, 3])
    assert len(G.edges) == 6
    assert part.parts == ((0, 1), (2, 3, 4))


def test_build_special_cases():
    assert build_multipartite([1, 1, 1])[0] == Graph.complete(3)
    edgeless, part = build_multipartite([4])
    assert edgeless.edges == frozenset() and part.sizes == (4,)
    with pytest.raises(ValueError):
        build_multipartite([])


def test_recognize_c4():
    rec = recognize_multipartite(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    assert rec.ok and rec.partition.parts == ((0, 2), (1, 3))


def test_recognize_p4_witness():
    rec = recognize_multipartite(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))
    assert not rec.ok
    u, v, w = rec.witness
    assert (u, v, w) == (0, 2, 3)


def test_recognize_edgeless():
    rec = recognize_multipartite(Graph(5))
    assert rec.partition.sizes == (5,)


def test_canonical_order():
    G, _ = build_multipartite([3, 1, 2])
    assert recognize_multipartite(G).partition.parts == ((3,), (4, 5), (0, 1, 2))


@settings(max_examples=60)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=5).filter(lambda s: sum(s) <= 12))
def test_recognize_inverts_build(sizes):
    G, _ = build_multipartite(sizes)
    assert sorted(recognize_multipartite(G).partition.sizes) == sorted(sizes)


def _check_recognition(G):
    rec = recognize_multipartite(G)
    assert rec.ok == edge_condition_holds(G)
    # complement components are exactly the parts
    comps = sorted(tuple(sorted(c)) for c in nx.connected_components(nx.complement(to_nx(G))))
    cliques_of_comps = all(
        not G.has_edge(a, b) for c in comps for a, b in itertools.combinations(c, 2))
    assert rec.ok == cliques_of_comps
    if rec.ok:
        assert sorted(rec.partition.parts) == comps
    else:
        u, v, w = rec.witness
        assert G.has_edge(v, w) and not G.has_edge(u, v) and not G.has_edge(u, w)


def test_recognition_exhaustive_small():
    for n in range(1, 6):
        for G in all_graphs(n):
            _check_recognition(G)


@settings(max_examples=200)
@given(graphs())
def test_recognition_random_up_to_seven(G):
    _check_recognition(G)


def test_classify_family():
    assert classify_family(build_multipartite([2, 3])[0]) == "complete_bipartite"
    assert classify_family(build_multipartite([1, 3])[0]) == "star"
    assert classify_family(build_multipartite([1, 1, 1])[0]) == "complete"
    assert classify_family(build_multipartite([2, 2, 2])[0]) == "complete_multipartite"
    diamond = Graph.from_edges(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
    assert classify_family(diamond) == "not_multipartite"


def test_has_travel_groupoid_examples():
    assert has_travel_groupoid(Graph(1))
    assert not has_travel_groupoid(Graph(3))
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert has_travel_groupoid(two_triangles)
    assert not has_travel_groupoid(Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)]))


def test_has_travel_groupoid_matches_search():
    for n in range(1, 6):
        for G in all_graphs(n):
            exists = next(enumerate_bruteforce(G), None) is not None
            assert has_travel_groupoid(G) == exists, G.edge_list()


def test_has_travel_groupoid_disconnected_order_six():
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert next(enumerate_bruteforce(two_triangles), None) is not None


def test_maximal_cliques_examples():
    assert maximal_cliques(build_multipartite([2, 3])[0]) == [
        (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
    assert maximal_cliques(Graph.complete(4)) == [(0, 1, 2, 3)]
    assert len(maximal_cliques(build_multipartite([2, 2, 2])[0])) == 8
    assert maximal_cliques(Graph(1)) == [(0,)]


@settings(max_examples=200)
@given(graphs(max_n=9))
def test_maximal_cliques_match_networkx(G):
    expected = sorted(tuple(sorted(c)) for c in nx.find_cliques(to_nx(G)))
    assert maximal_cliques(G) == expected


@settings(max_examples=40)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=4))
def test_multipartite_cliques_pick_one_per_part(sizes):
    G, part = build_multipartite(sizes)
    cliques = maximal_cliques(G)
    assert len(cliques) == prod(sizes)
    for c in cliques:
        assert sorted(part.part_of(x) for x in c) == list(range(len(sizes)))


class TestGraphFormat:
    def test_round_trip(self):
        G, _ = build_multipartite([2, 3])
        assert parse_graph(G.to_text()) == G

    def test_fixture(self, fixtures_dir):
        G = parse_graph((fixtures_dir / "k23.graph").read_text())
        assert G == build_multipartite([2, 3])[0]

    @pytest.mark.parametrize("text", [
        "", "3\n", "3 1\n0 3\n", "3 1\n0 0\n", "3 2\n0 1\n", "3 2\n0 1\n1 0\n", "2 1\n0 a\n",
    ])
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_graph(text)

    def test_error_position(self):
        with pytest.raises(ParseError) as exc:
            parse_graph("3 1\n0 x\n")
        assert (exc.value.line, exc.value.column) == (2, 3)

    def test_rejects_loops_in_constructor(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(1, 1)])
