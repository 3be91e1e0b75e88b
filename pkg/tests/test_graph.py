import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from spectough.codecs import parse_graph, write_graph
from spectough.errors import InvalidArgument, ParseError
from spectough.families import SplitFamilyParams, build_split
from spectough.graph import (
    Graph,
    build_complete,
    build_cycle,
    components_after_removal,
    disjoint_union,
    join,
    min_degree,
)


@pytest.mark.parametrize("n, edges", [(1, 0), (4, 6), (12, 66)])
def test_build_complete(n, edges):
    g = build_complete(n)
    assert g.num_edges == edges == n * (n - 1) // 2
    assert all(g.degree(v) == n - 1 for v in range(n))


def test_build_complete_rejects_zero():
    with pytest.raises(InvalidArgument):
        build_complete(0)


def test_disjoint_union_examples():
    g = disjoint_union(build_complete(1), build_complete(1))
    assert (g.n, g.num_edges) == (2, 0)
    g = disjoint_union(build_complete(3), build_complete(2))
    assert (g.n, g.num_edges) == (5, 4)
    assert g.has_edge(3, 4) and not g.has_edge(2, 3)
    g = disjoint_union(disjoint_union(build_complete(12), build_complete(1)), build_complete(1))
    assert (g.n, g.num_edges) == (14, 66)


def test_join_examples(p3):
    g = join(build_complete(1), disjoint_union(build_complete(1), build_complete(1)))
    assert g == p3.__class__(3, [(0, 1), (0, 2)])
    assert g.num_edges == 2
    body = disjoint_union(disjoint_union(build_complete(12), build_complete(1)), build_complete(1))
    g = join(build_complete(2), body)
    assert (g.n, g.num_edges) == (16, 95)
    assert join(build_complete(3), build_complete(4)) == build_complete(7)


@given(graphs(max_n=7), graphs(max_n=7))
def test_join_counts(g1, g2):
    g = join(g1, g2)
    assert g.n == g1.n + g2.n
    assert g.num_edges == g1.num_edges + g2.num_edges + g1.n * g2.n
    assert all(g.has_edge(u, g1.n + v) for u in range(g1.n) for v in range(g2.n))


def test_min_degree(p3):
    assert min_degree(build_complete(5)) == 4
    assert min_degree(build_split(SplitFamilyParams(2, (12, 1, 1)))) == 2
    assert min_degree(p3) == 1


@pytest.mark.parametrize("s, parts", [(1, (1, 1)), (2, (12, 1, 1)), (3, (3, 3, 3)), (2, (5, 3, 2)), (1, (4,))])
def test_min_degree_of_split(s, parts):
    assert min_degree(build_split(SplitFamilyParams(s, parts))) == s + parts[-1] - 1


def test_components_after_removal(p3):
    g = build_split(SplitFamilyParams(2, (12, 1, 1)))
    count, parts = components_after_removal(g, {0, 1})
    assert count == 3
    assert sorted(map(len, parts)) == [1, 1, 12]
    assert components_after_removal(build_complete(6), {0, 3, 4})[0] == 1
    assert components_after_removal(p3, {1})[0] == 2
    with pytest.raises(InvalidArgument):
        components_after_removal(p3, {0, 1, 2})


@given(graphs(max_n=9))
def test_components_empty_removal_matches_networkx(g):
    count, parts = components_after_removal(g, set())
    assert count == nx.number_connected_components(to_nx(g))
    assert (count == 1) == g.is_connected()
    assert sorted(v for p in parts for v in p) == list(range(g.n))


def test_graph_invariants():
    with pytest.raises(InvalidArgument):
        Graph(3, [(0, 0)])
    with pytest.raises(InvalidArgument):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(InvalidArgument):
        Graph(0)
    g = Graph(4, [(2, 1), (3, 0)])
    assert g.has_edge(1, 2) and g.has_edge(2, 1)
    assert list(g.edges()) == [(0, 3), (1, 2)]


# -- codecs --------------------------------------------------------------------

def test_parse_edge_list(p3):
    assert parse_graph(b"3 2\n0 1\n1 2", "edge-list") == p3


@pytest.mark.parametrize("text, line", [
    (b"2 1\n0 0", 2),
    (b"3 2\n0 1\n1 0", 3),
    (b"3 1\n0 5", 2),
    (b"three 1\n0 1", 1),
    (b"3 2\n0 1", 2),
    (b"3 1\n0 1\n1 2", 3),
    (b"3 1\n0 1 2", 2),
])
def test_parse_edge_list_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text, "edge-list")
    assert info.value.line == line


def test_write_edge_list():
    assert write_graph(build_complete(1), "edge-list") == b"1 0\n"


def test_graph6_known_strings():
    assert write_graph(build_complete(3), "graph6") == b"Bw"
    g = parse_graph(b"D?{", "graph6")
    assert g == nx_to_graph(nx.from_graph6_bytes(b"D?{"))
    assert g.n == 5 and g.num_edges == 4
    assert write_graph(g, "graph6") == b"D?{"


def nx_to_graph(h: nx.Graph) -> Graph:
    return Graph(h.number_of_nodes(), [tuple(sorted(e)) for e in h.edges()])


@pytest.mark.parametrize("n", [1, 2, 5, 62, 63, 64, 100])
def test_graph6_matches_networkx(n):
    rng = random.Random(n)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3]
    g = Graph(n, edges)
    ours = write_graph(g, "graph6")
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).strip()
    assert ours == theirs
    assert parse_graph(ours, "graph6") == g


def test_graph6_errors():
    with pytest.raises(ParseError):
        parse_graph(b"Bww", "graph6")
    with pytest.raises(ParseError):
        parse_graph(b"B\x01", "graph6")
    with pytest.raises(ParseError):
        parse_graph(b"", "graph6")


def test_round_trip_100_random_graphs():
    rng = random.Random(2024)
    for _ in range(100):
        n = rng.randint(1, 20)
        p = rng.random()
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        for fmt in ("graph6", "edge-list"):
            assert parse_graph(write_graph(g, fmt), fmt) == g


@settings(max_examples=50)
@given(graphs(max_n=15))
def test_round_trip_property(g):
    for fmt in ("graph6", "edge-list"):
        assert parse_graph(write_graph(g, fmt), fmt) == g


def test_cycle():
    c = build_cycle(6)
    assert c.num_edges == 6 and all(c.degree(v) == 2 for v in range(6))
