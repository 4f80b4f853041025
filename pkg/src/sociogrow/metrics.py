"""Validation statistics: clustering, path lengths, degree distributions."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .graph import Graph, connected_components


def local_clustering(g: Graph) -> np.ndarray:
    """Per-node clustering; nodes of degree < 2 get 0."""
    indptr, indices = g.csr()
    tri = kernels.triangle_counts(indptr, indices).astype(float)
    k = np.diff(indptr).astype(float)
    pairs = k * (k - 1) / 2
    out = np.zeros(g.node_count)
    np.divide(tri, pairs, out=out, where=pairs > 0)
    return out


def clustering_coefficient(g: Graph) -> float:
    """Mean local clustering coefficient over all nodes."""
    if g.node_count == 0:
        return 0.0
    return float(local_clustering(g).mean())


@dataclass(frozen=True)
class PathStats:
    avg_path_length: float
    diameter: int
    component_size: int
    connected: bool  # False: computed on the largest component only


def path_stats(g: Graph) -> PathStats:
    """Average shortest path and diameter over the largest connected component."""
    if g.node_count == 0:
        return PathStats(0.0, 0, 0, True)
    comps = connected_components(g)
    lcc = np.asarray(comps[0], dtype=np.int64)
    indptr, indices = g.csr()
    total, pairs, far = kernels.path_length_stats(indptr, indices, lcc)
    avg = total / pairs if pairs else 0.0
    return PathStats(float(avg), int(far), len(lcc), len(comps) == 1)


def avg_path_length(g: Graph) -> float:
    return path_stats(g).avg_path_length


def diameter(g: Graph) -> int:
    return path_stats(g).diameter


@dataclass(frozen=True)
class NetworkStats:
    node_count: int
    edge_count: int
    mean_degree: float
    clustering: float
    avg_path_length: float
    diameter: int
    component_size: int
    connected: bool

    def as_dict(self) -> dict:
        return {
            "nodes": self.node_count,
            "edges": self.edge_count,
            "mean_degree": self.mean_degree,
            "C": self.clustering,
            "l": self.avg_path_length,
            "d": self.diameter,
            "lcc_nodes": self.component_size,
            "connected": self.connected,
        }


def network_stats(g: Graph) -> NetworkStats:
    ps = path_stats(g)
    n = g.node_count
    return NetworkStats(
        node_count=n,
        edge_count=g.edge_count,
        mean_degree=2.0 * g.edge_count / n if n else 0.0,
        clustering=clustering_coefficient(g),
        avg_path_length=ps.avg_path_length,
        diameter=ps.diameter,
        component_size=ps.component_size,
        connected=ps.connected,
    )


def density_series(trace) -> list[tuple[int, int, float]]:
    """``(t, nodes, mean degree)`` after the seed and after each arrival."""
    return [(t, n, 2.0 * e / n) for t, n, e in trace.sizes]


@dataclass(frozen=True)
class DegreeDistribution:
    """Degree counts plus the survival curve ``F(k) = P(degree >= k)``.

    ``points`` lists ``(k, F(k))`` at each supported degree in ascending order.
    Counts may be fractional for averaged distributions.
    """

    counts: dict[int, float]
    points: tuple[tuple[int, float], ...]

    @property
    def support(self) -> list[int]:
        return [k for k, _ in self.points]

    def survival(self, k: float) -> float:
        """Fraction of nodes with degree >= ``k``, as a step function of ``k``."""
        ks = self.support
        pos = bisect_left(ks, k)
        return self.points[pos][1] if pos < len(ks) else 0.0


def degree_distribution_from_degrees(degrees: Iterable[int]) -> DegreeDistribution:
    deg = np.asarray(list(degrees), dtype=np.int64)
    if deg.size == 0:
        return DegreeDistribution({}, ())
    ks, counts = np.unique(deg, return_counts=True)
    tail = np.cumsum(counts[::-1])[::-1] / deg.size
    return DegreeDistribution(
        dict(zip(ks.tolist(), counts.tolist())),
        tuple(zip(ks.tolist(), tail.tolist())),
    )


def cumulative_degree_distribution(g: Graph) -> DegreeDistribution:
    return degree_distribution_from_degrees(g.degrees())


def average_distributions(dists: Sequence[DegreeDistribution]) -> DegreeDistribution:
    """Pointwise mean of survival curves over the union of degree supports."""
    if not dists:
        raise ValueError("nothing to average")
    support = sorted(set().union(*(d.support for d in dists)))
    points = tuple((k, float(np.mean([d.survival(k) for d in dists]))) for k in support)
    counts = {k: float(np.mean([d.counts.get(k, 0) for d in dists])) for k in support}
    return DegreeDistribution(counts, points)


def ks_distance(a: DegreeDistribution, b: DegreeDistribution) -> float:
    """Largest gap between two survival curves over their joint support."""
    support = set(a.support) | set(b.support)
    if not support:
        return 0.0
    return max(abs(a.survival(k) - b.survival(k)) for k in support)
