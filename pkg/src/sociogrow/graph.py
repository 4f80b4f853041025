"""Undirected simple graph and BFS level decomposition."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

import numpy as np


class GraphError(ValueError):
    """Invalid node id or forbidden edge."""


class Graph:
    """Undirected simple graph on dense integer ids ``0..node_count-1``.

    Adjacency is kept as one set per node; the CSR view used by the
    compiled kernels is built lazily and dropped on every mutation.
    """

    def __init__(self, node_count: int = 0):
        if node_count < 0:
            raise GraphError("node_count must be non-negative")
        self._adj: list[set[int]] = [set() for _ in range(node_count)]
        self._edge_count = 0
        self._csr: tuple[np.ndarray, np.ndarray] | None = None

    @property
    def node_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def __len__(self) -> int:
        return len(self._adj)

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"

    def _check(self, i: int) -> None:
        if not 0 <= i < len(self._adj):
            raise GraphError(f"unknown node id {i}")

    def add_node(self) -> int:
        self._adj.append(set())
        self._csr = None
        return len(self._adj) - 1

    def add_edge(self, i: int, j: int) -> bool:
        """Add the edge ``{i, j}``. Returns False if it was already present."""
        self._check(i)
        self._check(j)
        if i == j:
            raise GraphError(f"self-loop on node {i}")
        if j in self._adj[i]:
            return False
        self._adj[i].add(j)
        self._adj[j].add(i)
        self._edge_count += 1
        self._csr = None
        return True

    def has_edge(self, i: int, j: int) -> bool:
        self._check(i)
        self._check(j)
        return j in self._adj[i]

    def degree(self, i: int) -> int:
        self._check(i)
        return len(self._adj[i])

    def degrees(self) -> np.ndarray:
        return np.fromiter((len(a) for a in self._adj), dtype=np.int64, count=len(self._adj))

    def neighbors(self, i: int) -> list[int]:
        """Sorted neighbor ids of ``i``."""
        self._check(i)
        return sorted(self._adj[i])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(i, j)`` with ``i < j``, in id order."""
        for i, nbrs in enumerate(self._adj):
            for j in sorted(nbrs):
                if i < j:
                    yield i, j

    def edge_set(self) -> set[frozenset[int]]:
        return {frozenset(e) for e in self.edges()}

    def copy(self) -> Graph:
        g = Graph()
        g._adj = [set(a) for a in self._adj]
        g._edge_count = self._edge_count
        return g

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` int64 arrays with sorted neighbor runs."""
        if self._csr is None:
            n = len(self._adj)
            indptr = np.zeros(n + 1, dtype=np.int64)
            indptr[1:] = np.cumsum([len(a) for a in self._adj])
            indices = np.empty(indptr[-1], dtype=np.int64)
            for i, nbrs in enumerate(self._adj):
                indices[indptr[i]:indptr[i + 1]] = sorted(nbrs)
            self._csr = (indptr, indices)
        return self._csr

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 float adjacency matrix."""
        n = len(self._adj)
        a = np.zeros((n, n))
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1.0
        return a

    def subgraph(self, nodes) -> Graph:
        """Induced subgraph, relabelled densely in ascending order of ``nodes``."""
        keep = sorted(set(nodes))
        for v in keep:
            self._check(v)
        remap = {v: k for k, v in enumerate(keep)}
        g = Graph(len(keep))
        for v in keep:
            for w in self._adj[v]:
                if w in remap and v < w:
                    g.add_edge(remap[v], remap[w])
        return g


def complete_graph(n: int) -> Graph:
    """Clique on ``n >= 1`` nodes."""
    if n < 1:
        raise GraphError("complete graph needs at least one node")
    g = Graph(n)
    for i in range(n):
        for j in range(i + 1, n):
            g.add_edge(i, j)
    return g


def path_graph(n: int) -> Graph:
    g = Graph(n)
    for i in range(n - 1):
        g.add_edge(i, i + 1)
    return g


def star_graph(n: int) -> Graph:
    """Hub 0 joined to leaves ``1..n-1``."""
    g = Graph(n)
    for i in range(1, n):
        g.add_edge(0, i)
    return g


@dataclass(frozen=True)
class LevelDecomposition:
    """Rings of nodes around ``anchor``; ``levels[x-1]`` holds distance ``x``."""

    anchor: int
    levels: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.levels)

    def level(self, x: int) -> tuple[int, ...]:
        """Nodes at distance ``x`` (1-based)."""
        if x < 1:
            raise IndexError("levels are numbered from 1")
        return self.levels[x - 1]

    def distance_map(self) -> dict[int, int]:
        out = {self.anchor: 0}
        for x, ring in enumerate(self.levels, start=1):
            for v in ring:
                out[v] = x
        return out


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    g._check(source)
    adj = g._adj
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if v not in dist:
                dist[v] = du
                queue.append(v)
    return dist


def bfs_levels(g: Graph, anchor: int) -> LevelDecomposition:
    """Level decomposition of the component containing ``anchor``.

    Nodes inside a level are sorted by id, so downstream sampling consumes
    random numbers in a fixed order.
    """
    dist = bfs_distances(g, anchor)
    rings: list[list[int]] = [[] for _ in range(max(dist.values()))]
    for v, d in dist.items():
        if d:
            rings[d - 1].append(v)
    return LevelDecomposition(anchor, tuple(tuple(sorted(r)) for r in rings))


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted id lists, largest first (ties by smallest id)."""
    seen = np.zeros(g.node_count, dtype=bool)
    comps = []
    for s in range(g.node_count):
        if not seen[s]:
            comp = sorted(bfs_distances(g, s))
            seen[comp] = True
            comps.append(comp)
    comps.sort(key=lambda c: (-len(c), c[0]))
    return comps


def is_connected(g: Graph) -> bool:
    return g.node_count <= 1 or len(bfs_distances(g, 0)) == g.node_count
