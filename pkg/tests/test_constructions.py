import itertools

import networkx as nx
import pytest

from conftest import to_nx
from strongparity.constructions import (
    attach_clique,
    build_counterexample,
    circular_ladder,
    complete_graph,
    path_graph,
    random_3_edge_connected,
    subdivide_all,
)
from strongparity.errors import GraphInputError
from strongparity.graph import Graph, components_excluding, edge_connectivity
from strongparity.strong import (
    Verdict,
    certify_no_factor,
    deficiency,
    extract_violating_X,
    has_spp_by_characterization,
)


def test_complete_graph():
    assert complete_graph(1).m == 0
    K4 = complete_graph(4)
    assert K4.m == 6 and set(K4.degrees()) == {3}
    with pytest.raises(GraphInputError):
        complete_graph(0)


@pytest.mark.parametrize("k", [3, 4, 5, 6, 7])
def test_circular_ladder(k):
    G = circular_ladder(k)
    assert G.n == 2 * k and G.m == 3 * k and set(G.degrees()) == {3}
    assert edge_connectivity(G) == 3
    assert nx.node_connectivity(to_nx(G)) == 3


def test_circular_ladder_small_cases():
    assert nx.is_isomorphic(to_nx(circular_ladder(4)), nx.hypercube_graph(3))
    with pytest.raises(GraphInputError):
        circular_ladder(2)


def test_subdivide_examples():
    P, fresh = subdivide_all(complete_graph(2))
    assert P == Graph(3, [(0, 2), (2, 1)]) and fresh == {2}
    H, B = subdivide_all(complete_graph(4))
    deg = H.degrees()
    assert len(B) == 6 and all(deg[b] == 2 for b in B) and all(deg[a] == 3 for a in range(4))
    assert nx.is_bipartite(to_nx(H))
    C6, _ = subdivide_all(Graph(3, itertools.combinations(range(3), 2)))
    assert nx.is_isomorphic(to_nx(C6), nx.cycle_graph(6))


def test_attach_clique_examples():
    assert attach_clique(Graph(1), 0, 4) == complete_graph(4)
    assert attach_clique(path_graph(3), 1, 3).degrees()[1] == 4
    H, B = subdivide_all(complete_graph(4))
    for b in sorted(B):
        H = attach_clique(H, b, 4)
    assert all(H.degrees()[b] == 5 for b in B)
    with pytest.raises(GraphInputError):
        attach_clique(Graph(1), 0, 1)


def test_counterexample_p4_layout():
    ce = build_counterexample(4)
    G = ce.graph
    assert G.n == 4 + 6 + 6 * 3 == 28
    assert ce.A == set(range(4)) and ce.B == set(range(4, 10))
    assert all(len(b) == 4 for b in ce.clique_blocks)
    assert [min(b) for b in ce.clique_blocks] == sorted(ce.B)
    assert ce.names[4].startswith("u1")


@pytest.mark.parametrize("p", [4, 6, 8, 10])
def test_counterexample_invariants(p):
    ce = build_counterexample(p)
    G = ce.graph
    assert G.min_degree() == 3
    assert edge_connectivity(G) == 2
    assert len(components_excluding(G, ce.A)) == 3 * p // 2
    assert deficiency(G, ce.A) == -p // 2
    cert = has_spp_by_characterization(G)
    assert cert.verdict is Verdict.LACKS_PROPERTY
    assert certify_no_factor(G, ce.A, extract_violating_X(G, ce.A)) <= -1


def test_counterexample_rejects_bad_p():
    for p in (2, 5, 7, 0):
        with pytest.raises(GraphInputError):
            build_counterexample(p)


def test_counterexample_custom_base():
    petersen = Graph(10, nx.petersen_graph().edges)
    ce = build_counterexample(10, base=petersen)
    assert deficiency(ce.graph, ce.A) == -5
    with pytest.raises(GraphInputError):
        build_counterexample(6, base=complete_graph(6))


def test_random_3_edge_connected():
    import random
    rng = random.Random(0)
    for _ in range(10):
        G = random_3_edge_connected(rng.randint(6, 10), rng)
        assert G.min_degree() >= 3 and nx.edge_connectivity(to_nx(G)) >= 3
