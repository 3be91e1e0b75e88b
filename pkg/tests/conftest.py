import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from spectough.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def graphs(draw, min_n=1, max_n=10, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if connected and n > 1:
        # random spanning tree first, then extra edges
        order = draw(st.permutations(range(n)))
        tree = [
            tuple(sorted((order[i], order[draw(st.integers(0, i - 1))])))
            for i in range(1, n)
        ]
        extra = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
        return Graph(n, sorted(set(tree) | extra))
    chosen = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Graph(n, sorted(chosen))


@pytest.fixture
def p3():
    return Graph(3, [(0, 1), (1, 2)])
