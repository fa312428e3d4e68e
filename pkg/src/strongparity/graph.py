"""Immutable simple undirected graphs on vertices ``0..n-1``.

Vertex sets are passed around as ``frozenset``/``set`` of ints at the public
surface; internally every query works on Python-int bitmasks (bit ``v`` set
iff vertex ``v`` is a member), which keeps subset enumeration cheap.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .errors import GraphInputError

Edge = tuple[int, int]
VertexSet = frozenset[int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph with a fixed vertex count.

    Edges are stored as sorted pairs ``(u, v)`` with ``u < v``.  Instances
    are hashable and compare by ``(n, edges)``.
    """

    __slots__ = ("_n", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise GraphInputError(f"vertex count must be a nonnegative int, got {n!r}")
        es = set()
        adj = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge {(u, v)} has an endpoint outside [0, {n})")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            es.add(_norm_edge(u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._edges = frozenset(es)
        self._adj = tuple(adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmask of every vertex."""
        return self._adj

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def vertices(self) -> range:
        return range(self._n)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and 0 <= v < self._n and bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(iter_bits(self._adj[v]))

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self._adj]

    def min_degree(self) -> int:
        """Minimum degree; 0 for the empty vertex set."""
        return min(self.degrees(), default=0)

    def with_edges(self, extra: Iterable[Edge]) -> "Graph":
        return Graph(self._n, [*self._edges, *extra])

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self._n:
            raise GraphInputError(f"vertex {v!r} out of range [0, {self._n})")

    def mask_of(self, vs: Iterable[int]) -> int:
        """Bitmask of a vertex collection, range-checked."""
        mask = 0
        for v in vs:
            self._check_vertex(v)
            mask |= 1 << v
        return mask

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.sorted_edges()})"


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_to_set(mask: int) -> VertexSet:
    return frozenset(iter_bits(mask))


def component_masks(adj: tuple[int, ...], alive: int) -> list[int]:
    """Components of the subgraph induced by ``alive``, ordered by minimum vertex."""
    comps = []
    while alive:
        comp = frontier = alive & -alive
        while frontier:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= adj[low.bit_length() - 1]
                f ^= low
            frontier = reach & alive & ~comp
            comp |= frontier
        comps.append(comp)
        alive &= ~comp
    return comps


def count_components(adj: tuple[int, ...], alive: int) -> int:
    return len(component_masks(adj, alive))


def degree(G: Graph, v: int) -> int:
    G._check_vertex(v)
    return G.adj[v].bit_count()


def components_excluding(G: Graph, T: Iterable[int]) -> list[VertexSet]:
    """Connected components of ``G - T``, ordered by minimum member."""
    tmask = G.mask_of(T)
    return [mask_to_set(c) for c in component_masks(G.adj, G.full_mask & ~tmask)]


def num_components(G: Graph) -> int:
    return count_components(G.adj, G.full_mask)


def is_connected(G: Graph) -> bool:
    return num_components(G) <= 1


def cut_size_mask(adj: tuple[int, ...], a: int, b: int) -> int:
    return sum((adj[v] & b).bit_count() for v in iter_bits(a))


def cut_size(G: Graph, A: Iterable[int], B: Iterable[int]) -> int:
    """Number of edges with one end in ``A`` and the other in ``B``."""
    a, b = G.mask_of(A), G.mask_of(B)
    if a & b:
        raise GraphInputError("cut_size requires disjoint vertex sets")
    return cut_size_mask(G.adj, a, b)


def _unit_max_flow(G: Graph, s: int, t: int, cap_limit: int) -> int:
    # Each undirected edge becomes a pair of opposite unit arcs.
    flow: dict[Edge, int] = {}
    value = 0
    adj = [G.neighbors(v) for v in G.vertices()]
    while value < cap_limit:
        parent = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for w in adj[u]:
                if w not in parent and flow.get((u, w), 0) < 1:
                    parent[w] = u
                    queue.append(w)
        if t not in parent:
            break
        w = t
        while w != s:
            u = parent[w]
            flow[(u, w)] = flow.get((u, w), 0) + 1
            flow[(w, u)] = flow.get((w, u), 0) - 1
            w = u
        value += 1
    return value


def edge_connectivity(G: Graph) -> int:
    """Minimum number of edges whose removal disconnects ``G``.

    Unit-capacity max-flow from vertex 0 to every other vertex.
    """
    if G.n < 2:
        raise GraphInputError("edge connectivity needs at least 2 vertices")
    best = G.min_degree()
    for t in range(1, G.n):
        if best == 0:
            break
        best = min(best, _unit_max_flow(G, 0, t, best))
    return best
