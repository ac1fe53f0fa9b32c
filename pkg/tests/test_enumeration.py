from itertools import islice

import pytest

from tgk.counting import count_simple_travel_groupoids, count_travel_groupoids
from tgk.enumeration import (
    census_size,
    enumerate_bruteforce,
    enumerate_nonconfusing,
    filter_enumeration,
    parallel_census,
    split_ranges,
)
from tgk.errors import CensusTooLarge, DisconnectedGraphError
from tgk.graph import Graph, build_multipartite
from tgk.groupoid import (
    Groupoid,
    associated_graph,
    confusing_pairs,
    is_semi_smooth,
    is_smooth,
    is_travel,
    iterate,
    parse_table,
)


def K(*sizes):
    return build_multipartite(sizes)[0]


def test_single_edge():
    assert list(enumerate_nonconfusing(K(1, 1))) == [Groupoid(((0, 1), (0, 1)))]


def test_k23_contains_example(k23_table):
    census = list(enumerate_nonconfusing(K(2, 3)))
    assert len(census) == 576
    assert k23_table in census


def test_k22_all_smooth():
    census = list(enumerate_nonconfusing(K(2, 2)))
    assert len(census) == 16 and all(is_smooth(g) for g in census)


@pytest.mark.parametrize("sizes", [(1, 3), (2, 2), (2, 3), (1, 2, 2), (2, 2, 2)])
def test_stream_invariants(sizes):
    G = K(*sizes)
    census = list(enumerate_nonconfusing(G))
    assert len(census) == len(set(census)) == count_travel_groupoids(sizes)
    simple = list(filter_enumeration(census, "simple"))
    assert len(simple) == count_simple_travel_groupoids(sizes)
    for g in census:
        assert is_travel(g) and associated_graph(g) == G
        assert not confusing_pairs(g) and is_semi_smooth(g)
        assert all(iterate(g, u, v, 2) == v for u in range(G.n) for v in range(G.n))


def test_bruteforce_examples(fixtures_dir, diamond_table):
    assert list(enumerate_bruteforce(Graph.complete(3))) == [Groupoid.right_projection(3)]
    assert set(enumerate_bruteforce(K(2, 3))) == set(enumerate_nonconfusing(K(2, 3)))
    diamond = associated_graph(diamond_table)
    assert diamond_table in set(enumerate_bruteforce(diamond))


def test_bruteforce_finds_confusing_groupoids(fixtures_dir):
    g = parse_table((fixtures_dir / "confusing.table").read_text())
    G = associated_graph(g)
    brute = set(enumerate_bruteforce(G))
    nonconf = set(enumerate_nonconfusing(G))
    assert g in brute and g not in nonconf
    assert nonconf == {h for h in brute if not confusing_pairs(h)}


def test_bruteforce_guard():
    with pytest.raises(ValueError):
        next(enumerate_bruteforce(Graph.complete(7)))


def test_filters():
    G = K(2, 3)
    assert sum(1 for _ in filter_enumeration(enumerate_nonconfusing(G), "simple")) == 24
    assert next(filter_enumeration(enumerate_nonconfusing(G), "simple", "smooth"), None) is not None
    assert len(list(filter_enumeration(enumerate_nonconfusing(Graph.complete(3)), "associative"))) == 1
    star = list(filter_enumeration(enumerate_nonconfusing(K(1, 3)), "tcb", "has_left_unit"))
    assert len(star) == 1
    with pytest.raises(ValueError):
        list(filter_enumeration([], "bogus"))


def test_deterministic_order():
    a = next(enumerate_nonconfusing(K(2, 3)))
    b = next(enumerate_nonconfusing(K(2, 3)))
    assert a == b


def test_slices_partition_the_census():
    G = K(2, 3)
    full = list(enumerate_nonconfusing(G))
    pieces = []
    for r in split_ranges(len(full), 7):
        pieces += list(enumerate_nonconfusing(G, start=r.start, stop=r.stop))
    assert pieces == full


def test_split_ranges():
    rs = split_ranges(10, 3)
    assert [len(r) for r in rs] == [4, 3, 3]
    assert split_ranges(2, 5) == [range(0, 1), range(1, 2)]
    assert split_ranges(0, 4) == [range(0, 0)]


def test_parallel_matches_serial():
    G = K(2, 3)
    serial = [(i, g.table) for i, g in enumerate(enumerate_nonconfusing(G)) if
              next(filter_enumeration([g], "simple"), None) is not None]
    assert parallel_census(G, ["simple"], workers=3) == serial


def test_ceiling(monkeypatch):
    G = K(3, 3)
    assert census_size(G) == 531441
    with pytest.raises(CensusTooLarge):
        next(enumerate_nonconfusing(G, ceiling=1000))
    assert next(enumerate_nonconfusing(G, ceiling=1000, force=True)) is not None
    monkeypatch.setenv("TGK_MAX_CENSUS", "10")
    with pytest.raises(CensusTooLarge):
        next(enumerate_nonconfusing(K(2, 2)))
    monkeypatch.setenv("TGK_MAX_CENSUS", "16")
    assert len(list(islice(enumerate_nonconfusing(K(2, 2)), 100))) == 16


def test_disconnected():
    with pytest.raises(DisconnectedGraphError):
        next(enumerate_nonconfusing(Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])))
