"""Graph families: named graphs, random samplers, and the counterexample builder."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .errors import ContractError, GraphInputError
from .graph import Graph, VertexSet, edge_connectivity, is_connected


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphInputError("complete_graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("cycle_graph needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def circular_ladder(k: int) -> Graph:
    """Prism: outer cycle ``0..k-1``, inner cycle ``k..2k-1``, rungs ``i -- k+i``."""
    if k < 3:
        raise GraphInputError("circular_ladder needs k >= 3")
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges += [(i, j), (k + i, k + j), (i, k + i)]
    return Graph(2 * k, edges)


def subdivide_all(G: Graph) -> tuple[Graph, VertexSet]:
    """Replace every edge ``uv`` by ``u - w - v``; fresh ``w`` numbered from ``n`` in sorted edge order."""
    edges = []
    fresh = []
    for i, (u, v) in enumerate(G.sorted_edges()):
        w = G.n + i
        fresh.append(w)
        edges += [(u, w), (w, v)]
    return Graph(G.n + G.m, edges), frozenset(fresh)


def attach_clique(G: Graph, v: int, p: int) -> Graph:
    """Glue a ``K_p`` onto ``G`` whose only old vertex is ``v``; adds ``p - 1`` vertices."""
    if p < 2:
        raise GraphInputError("attach_clique needs p >= 2")
    if not 0 <= v < G.n:
        raise GraphInputError(f"vertex {v} out of range")
    block = [v, *range(G.n, G.n + p - 1)]
    return Graph(G.n + p - 1, [*G.edges, *combinations(block, 2)])


@dataclass
class CounterexampleLayout:
    graph: Graph
    p: int
    A: VertexSet
    B: VertexSet
    clique_blocks: list[VertexSet]
    names: dict[int, str] = field(default_factory=dict)

    def check(self) -> None:
        G = self.graph
        deg = G.degrees()
        if len(self.A) != self.p or len(self.B) != 3 * self.p // 2:
            raise ContractError("counterexample has wrong |A| or |B|")
        if any(deg[a] != 3 for a in self.A):
            raise ContractError("branch vertex without degree 3")
        if any(G.has_edge(u, v) for u, v in combinations(sorted(self.B), 2)):
            raise ContractError("subdivision vertices are not independent")
        if not is_connected(G):
            raise ContractError("counterexample is disconnected")


def _check_base(base: Graph, p: int) -> None:
    if base.n != p or any(d != 3 for d in base.degrees()):
        raise GraphInputError(f"base graph must be 3-regular of order {p}")
    if edge_connectivity(base) != 3:
        raise GraphInputError("base graph must have edge connectivity 3")


def build_counterexample(p: int, base: Graph | None = None) -> CounterexampleLayout:
    """2-edge-connected graph with minimum degree 3 lacking the strong parity property.

    Subdivide a 3-regular, 3-edge-connected graph of even order ``p`` (``K_4``
    for ``p = 4``, the prism on ``p`` vertices otherwise) and glue a ``K_p`` at
    every subdivision vertex.  Vertex numbering: base vertices, then subdivision
    vertices in sorted edge order, then clique blocks one after another.
    """
    if not isinstance(p, int) or p < 4 or p % 2:
        raise GraphInputError(f"p must be an even integer >= 4, got {p!r}")
    if base is None:
        base = complete_graph(4) if p == 4 else circular_ladder(p // 2)
    _check_base(base, p)
    base_edges = base.sorted_edges()
    G, B = subdivide_all(base)
    names = {v: f"a{v}" for v in range(p)}
    blocks = []
    for i, u in enumerate(sorted(B)):
        a, b = base_edges[i]
        names[u] = f"u{i + 1}[{a}-{b}]"
        start = G.n
        G = attach_clique(G, u, p)
        blocks.append(frozenset([u, *range(start, G.n)]))
        for j, w in enumerate(range(start, G.n), start=1):
            names[w] = f"F{i + 1}.{j}"
    layout = CounterexampleLayout(G, p, frozenset(range(p)), B, blocks, names)
    layout.check()
    return layout


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2**C(n,2)`` graphs on ``0..n-1``; bit ``i`` of the index selects the ``i``-th pair."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


def random_graph(n: int, prob: float, rng: random.Random) -> Graph:
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < prob])


def random_graph_max_edges(n: int, max_edges: int, rng: random.Random) -> Graph:
    pairs = list(combinations(range(n), 2))
    m = rng.randint(0, min(max_edges, len(pairs)))
    return Graph(n, rng.sample(pairs, m))


def random_connected_graph(n: int, prob: float, rng: random.Random) -> Graph:
    """Random spanning tree (random attachment) plus independent extra edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    edges |= {e for e in combinations(range(n), 2) if rng.random() < prob}
    return Graph(n, edges)


def random_3_edge_connected(n: int, rng: random.Random, prob: float = 0.55, max_tries: int = 10_000) -> Graph:
    """Rejection sampling: minimum degree >= 3 and edge connectivity >= 3."""
    if n < 4:
        raise GraphInputError("3-edge-connected simple graphs need n >= 4")
    for _ in range(max_tries):
        G = random_graph(n, prob, rng)
        if G.min_degree() >= 3 and edge_connectivity(G) >= 3:
            return G
    raise ContractError(f"no 3-edge-connected sample found in {max_tries} tries")
