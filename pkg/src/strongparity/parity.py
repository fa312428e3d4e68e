"""(g,f)-parity factors: the Lovász deficiency, two existence deciders, Guan subgraphs.

A ``(g,f)``-parity factor of ``G`` is a spanning subgraph ``F`` with
``g(v) <= d_F(v) <= f(v)`` and ``d_F(v) = f(v) (mod 2)`` at every vertex.
Existence is decided two independent ways:

* :func:`exists_parity_factor_lovasz` checks ``eta(S, T) >= 0`` over all
  disjoint pairs ``(S, T)``;
* :func:`exists_parity_factor_bruteforce` tries every edge subset.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import CapacityError, GraphInputError, ParityError, StructureError
from .graph import (
    Edge,
    Graph,
    VertexSet,
    component_masks,
    cut_size_mask,
    is_connected,
    iter_bits,
    mask_to_set,
)

EdgeSubset = frozenset[Edge]

DEFAULT_EDGE_CAP = 20
DEFAULT_LOVASZ_MAX_N = 12

# digit values in the base-3 assignment counter
NEITHER, IN_S, IN_T = 0, 1, 2


@dataclass(frozen=True)
class DegreeBounds:
    """Per-vertex degree window ``g(v) <= d(v) <= f(v)``, ``g = f (mod 2)``.

    ``g`` may be negative; ``g(v) = -1`` with odd ``f(v)`` means "odd, at least 1".
    """

    g: tuple[int, ...]
    f: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "g", tuple(int(x) for x in self.g))
        object.__setattr__(self, "f", tuple(int(x) for x in self.f))
        if len(self.g) != len(self.f):
            raise GraphInputError("g and f must have the same length")
        for v, (lo, hi) in enumerate(zip(self.g, self.f)):
            if lo > hi:
                raise GraphInputError(f"g({v}) = {lo} exceeds f({v}) = {hi}")
            if (hi - lo) % 2:
                raise ParityError(f"g({v}) = {lo} and f({v}) = {hi} differ in parity")

    @classmethod
    def constant(cls, n: int, g: int, f: int) -> "DegreeBounds":
        return cls((g,) * n, (f,) * n)

    @property
    def n(self) -> int:
        return len(self.g)

    def odd_g_mask(self) -> int:
        return sum(1 << v for v, x in enumerate(self.g) if x % 2)

    def check_graph(self, G: Graph) -> None:
        if self.n != G.n:
            raise GraphInputError(f"bounds cover {self.n} vertices, graph has {G.n}")


def as_edge_subset(G: Graph, F: Iterable[Iterable[int]]) -> EdgeSubset:
    """Normalise ``F`` to sorted pairs and reject non-edges of ``G``."""
    out = set()
    for e in F:
        u, v = sorted(e)
        if not G.has_edge(u, v):
            raise GraphInputError(f"{(u, v)} is not an edge of the graph")
        out.add((u, v))
    return frozenset(out)


def subgraph_degrees(G: Graph, F: Iterable[Edge]) -> list[int]:
    deg = [0] * G.n
    for u, v in F:
        deg[u] += 1
        deg[v] += 1
    return deg


def is_parity_factor(G: Graph, B: DegreeBounds, F: Iterable[Iterable[int]]) -> bool:
    B.check_graph(G)
    deg = subgraph_degrees(G, as_edge_subset(G, F))
    return all(
        lo <= d <= hi and (d - hi) % 2 == 0 for d, lo, hi in zip(deg, B.g, B.f)
    )


def eta(G: Graph, B: DegreeBounds, S: Iterable[int], T: Iterable[int]) -> int:
    """``f(S) - g(T) + sum_{x in T} d_{G-S}(x) - q(S, T)``.

    ``q`` counts components ``C`` of ``G - S - T`` with ``g(V(C)) + e(C, T)`` odd.
    """
    B.check_graph(G)
    s, t = G.mask_of(S), G.mask_of(T)
    if s & t:
        raise GraphInputError("eta requires disjoint S and T")
    adj = G.adj
    value = sum(B.f[v] for v in iter_bits(s)) - sum(B.g[v] for v in iter_bits(t))
    value += sum((adj[x] & ~s).bit_count() for x in iter_bits(t))
    for comp in component_masks(adj, G.full_mask & ~(s | t)):
        if (sum(B.g[v] for v in iter_bits(comp)) + cut_size_mask(adj, comp, t)) % 2:
            value -= 1
    return value


@lru_cache(maxsize=16)
def _assignments(n: int) -> tuple[np.ndarray, np.ndarray]:
    """S and T membership (``3**n x n`` bool) in base-3 counter order, vertex 0 least significant."""
    idx = np.arange(3**n, dtype=np.int64)
    digits = (idx[:, None] // (3 ** np.arange(n, dtype=np.int64))) % 3
    s_bits = digits == IN_S
    t_bits = digits == IN_T
    s_bits.setflags(write=False)
    t_bits.setflags(write=False)
    return s_bits, t_bits


def _to_masks(bits: np.ndarray) -> np.ndarray:
    weights = np.left_shift(np.int64(1), np.arange(bits.shape[1], dtype=np.int64))
    return (bits.astype(np.int64) * weights).sum(axis=1)


class LovaszTable:
    """Bounds-independent part of ``eta`` for every disjoint pair ``(S, T)`` of one graph.

    Rows follow the base-3 assignment counter (digit 0 neither, 1 in S, 2 in T;
    vertex 0 least significant), so row ``i`` is the ``i``-th pair in the
    deterministic enumeration order.  ``eta_batch`` then evaluates any number of
    bounds objects with a few array operations each.
    """

    def __init__(self, G: Graph, max_n: int = DEFAULT_LOVASZ_MAX_N):
        if G.n > max_n:
            raise CapacityError(f"Lovász enumeration is capped at n = {max_n} (3^n pairs), got n = {G.n}")
        self.graph = G
        n = G.n
        self.s_bits, self.t_bits = _assignments(n)
        self.s_mask = _to_masks(self.s_bits)
        self.t_mask = _to_masks(self.t_bits)
        adj = np.array(G.adj, dtype=np.int64) if n else np.zeros(0, dtype=np.int64)

        full = G.full_mask
        comp_table = np.zeros((1 << n, max(n, 1)), dtype=np.int64)
        for r in range(1 << n):
            comps = component_masks(G.adj, full & ~r)
            comp_table[r, : len(comps)] = comps
        self.comps = comp_table[self.s_mask | self.t_mask]

        rows = len(self.s_mask)
        self.d_t = np.zeros(rows, dtype=np.int64)
        e_ct = np.zeros(self.comps.shape, dtype=np.int64)
        for v in range(n):
            self.d_t += np.where(self.t_bits[:, v], np.bitwise_count(adj[v] & ~self.s_mask), 0)
            deg_into_t = np.bitwise_count(adj[v] & self.t_mask).astype(np.int64)
            e_ct += ((self.comps >> v) & 1) * deg_into_t[:, None]
        self.e_parity = (e_ct & 1).astype(bool)
        self.present = self.comps != 0

    def eta_batch(self, bounds: Sequence[DegreeBounds]) -> np.ndarray:
        """``eta`` values, shape ``(len(bounds), 3**n)``."""
        for b in bounds:
            b.check_graph(self.graph)
        if not bounds:
            return np.zeros((0, len(self.s_mask)), dtype=np.int64)
        g = np.array([b.g for b in bounds], dtype=np.int64).reshape(len(bounds), -1)
        f = np.array([b.f for b in bounds], dtype=np.int64).reshape(len(bounds), -1)
        f_s = self.s_bits.astype(np.int64) @ f.T
        g_t = self.t_bits.astype(np.int64) @ g.T
        out = (f_s - g_t + self.d_t[:, None]).T
        for k, b in enumerate(bounds):
            gp = np.int64(b.odd_g_mask())
            odd = (np.bitwise_count(self.comps & gp) & 1).astype(bool) ^ self.e_parity
            out[k] -= (odd & self.present).sum(axis=1)
        return out

    def pair(self, row: int) -> tuple[VertexSet, VertexSet]:
        return mask_to_set(int(self.s_mask[row])), mask_to_set(int(self.t_mask[row]))


class LovaszDecision(NamedTuple):
    exists: bool
    S: VertexSet | None = None
    T: VertexSet | None = None
    eta: int | None = None


class BruteForceDecision(NamedTuple):
    exists: bool
    factor: EdgeSubset | None = None


def first_violation(table: LovaszTable, etas: np.ndarray) -> LovaszDecision:
    bad = np.flatnonzero(etas < 0)
    if bad.size == 0:
        return LovaszDecision(True)
    row = int(bad[0])
    S, T = table.pair(row)
    return LovaszDecision(False, S, T, int(etas[row]))


def exists_parity_factor_lovasz(
    G: Graph, B: DegreeBounds, max_n: int = DEFAULT_LOVASZ_MAX_N
) -> LovaszDecision:
    """Decide existence by the ``eta >= 0`` criterion; report the first violating pair."""
    table = LovaszTable(G, max_n=max_n)
    return first_violation(table, table.eta_batch([B])[0])


def exists_parity_factor_bruteforce(
    G: Graph, B: DegreeBounds, edge_cap: int = DEFAULT_EDGE_CAP, chunk: int = 1 << 16
) -> BruteForceDecision:
    """Try all ``2**m`` edge subsets in increasing binary order.

    Bit ``i`` of the subset index selects the ``i``-th edge of ``G.sorted_edges()``.
    """
    B.check_graph(G)
    m = G.m
    if m > edge_cap:
        raise CapacityError(f"brute force is capped at {edge_cap} edges, graph has {m}")
    edges = G.sorted_edges()
    inc = np.zeros((m, G.n), dtype=np.int64)
    for i, (u, v) in enumerate(edges):
        inc[i, u] = inc[i, v] = 1
    g = np.array(B.g, dtype=np.int64)
    f = np.array(B.f, dtype=np.int64)
    shifts = np.arange(m, dtype=np.int64)
    total = 1 << m
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        bits = (idx[:, None] >> shifts) & 1
        deg = bits @ inc
        ok = ((deg >= g) & (deg <= f) & ((f - deg) % 2 == 0)).all(axis=1)
        hits = np.flatnonzero(ok)
        if hits.size:
            sel = int(idx[hits[0]])
            return BruteForceDecision(True, frozenset(e for i, e in enumerate(edges) if sel >> i & 1))
    return BruteForceDecision(False)


def bfs_tree(G: Graph, root: int = 0) -> tuple[list[int], list[int]]:
    """Parent and depth arrays of a breadth-first tree (the root is its own parent)."""
    parent = [-1] * G.n
    depth = [0] * G.n
    parent[root] = root
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in G.neighbors(u):
            if parent[w] < 0:
                parent[w] = u
                depth[w] = depth[u] + 1
                queue.append(w)
    return parent, depth


def _tree_path(parent: list[int], depth: list[int], u: int, v: int) -> list[Edge]:
    path = []
    while u != v:
        if depth[u] < depth[v]:
            u, v = v, u
        p = parent[u]
        path.append((min(u, p), max(u, p)))
        u = p
    return path


def guan_parity_subgraph(G: Graph, X: Iterable[int]) -> EdgeSubset:
    """Spanning subgraph of connected ``G`` whose odd-degree vertices are exactly ``X``.

    Pairs the sorted members of ``X`` consecutively and takes the symmetric
    difference of their paths in a BFS tree rooted at 0.
    """
    xs = sorted(set(X))
    G.mask_of(xs)
    if len(xs) % 2:
        raise ParityError(f"|X| = {len(xs)} is odd; no subgraph has odd degree exactly on X")
    if not is_connected(G):
        raise StructureError("graph is disconnected")
    if not xs:
        return frozenset()
    parent, depth = bfs_tree(G)
    F: set[Edge] = set()
    for a, b in zip(xs[::2], xs[1::2]):
        F.symmetric_difference_update(_tree_path(parent, depth, a, b))
    return frozenset(F)

