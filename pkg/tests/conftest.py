import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from strongparity.graph import Graph


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, chosen) if keep])


@pytest.fixture
def C3():
    return Graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def C4():
    return Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def K2():
    return Graph(2, [(0, 1)])


@pytest.fixture
def P3():
    return Graph(3, [(0, 1), (1, 2)])
