"""Replicate runs, averaging and parameter sweeps."""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .graph import Graph
from .growth import GrowthConfig, GrowthResult, grow
from .metrics import (
    DegreeDistribution,
    NetworkStats,
    average_distributions,
    cumulative_degree_distribution,
    density_series,
    ks_distance,
    network_stats,
)

STAT_FIELDS = ("node_count", "edge_count", "mean_degree", "clustering", "avg_path_length", "diameter")


def worker_count(jobs: int) -> int:
    cap = os.environ.get("SOCIOGROW_THREADS")
    limit = int(cap) if cap else (os.cpu_count() or 1)
    return max(1, min(limit, jobs))


@dataclass
class Replicate:
    seed: int
    graph: Graph
    stats: NetworkStats
    distribution: DegreeDistribution
    density: list[tuple[int, int, float]]
    unconverged: int
    refreshes: int


def _run_one(cfg: GrowthConfig) -> Replicate:
    res: GrowthResult = grow(cfg)
    return Replicate(
        seed=cfg.seed,
        graph=res.graph,
        stats=network_stats(res.graph),
        distribution=cumulative_degree_distribution(res.graph),
        density=density_series(res.trace),
        unconverged=res.trace.unconverged,
        refreshes=len(res.trace.refreshes),
    )


def _map(fn, items: list):
    workers = worker_count(len(items))
    if workers == 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def run_replicates(cfg: GrowthConfig) -> list[Replicate]:
    """``cfg.replicates`` runs with seeds ``seed, seed + 1, ...``, sorted by seed."""
    cfgs = [cfg.with_seed(cfg.seed + r) for r in range(cfg.replicates)]
    reps = _map(_run_one, cfgs)
    return sorted(reps, key=lambda r: r.seed)


@dataclass
class Summary:
    replicates: list[Replicate]
    mean: dict[str, float]
    std: dict[str, float]
    distribution: DegreeDistribution
    density: list[tuple[int, int, float]]

    @property
    def unconverged(self) -> int:
        return sum(r.unconverged for r in self.replicates)


def summarize(reps: Sequence[Replicate]) -> Summary:
    values = {f: np.array([float(getattr(r.stats, f)) for r in reps]) for f in STAT_FIELDS}
    mean = {f: float(v.mean()) for f, v in values.items()}
    std = {f: float(v.std()) for f, v in values.items()}
    density = []
    for rows in zip(*(r.density for r in reps)):
        t, n, _ = rows[0]
        density.append((t, n, float(np.mean([k for *_, k in rows]))))
    return Summary(list(reps), mean, std, average_distributions([r.distribution for r in reps]), density)


@dataclass(frozen=True)
class Target:
    """Reference network profile for comparisons and sweeps."""

    node_count: int
    clustering: float
    avg_path_length: float
    diameter: float | None = None
    distribution: DegreeDistribution | None = None

    @classmethod
    def from_graph(cls, g: Graph) -> Target:
        s = network_stats(g)
        return cls(s.node_count, s.clustering, s.avg_path_length, s.diameter,
                   cumulative_degree_distribution(g))


def score(summary: Summary, target: Target) -> tuple[float, float | None]:
    """Composite fit ``|dC| + |dl| / l_target + ks``; ks counts 0 without a target curve."""
    ks = None
    if target.distribution is not None:
        ks = ks_distance(summary.distribution, target.distribution)
    total = abs(summary.mean["clustering"] - target.clustering)
    total += abs(summary.mean["avg_path_length"] - target.avg_path_length) / target.avg_path_length
    return total + (ks or 0.0), ks


@dataclass
class SweepPoint:
    beta: float
    memory: float
    alpha: float
    summary: Summary
    score: float
    ks: float | None


def sweep(
    base: GrowthConfig,
    target: Target,
    betas: Sequence[float],
    memories: Sequence[float],
    alphas: Sequence[float],
) -> list[SweepPoint]:
    """Evaluate the full grid at ``target_n = target.node_count``; best score first."""
    grid = []
    for b, m, a in itertools.product(betas, memories, alphas):
        dyn = replace(base.dynamics, memory=m, alpha=a)
        grid.append(replace(base, beta=b, dynamics=dyn, target_n=target.node_count))
    # replicates inside a grid point run serially; grid points are the parallel unit
    results = _map(_sweep_serial, grid)
    points = []
    for (b, m, a), summ in results:
        total, ks = score(summ, target)
        points.append(SweepPoint(b, m, a, summ, total, ks))
    points.sort(key=lambda p: (p.score, p.beta, p.memory, p.alpha))
    return points


def _sweep_serial(cfg: GrowthConfig):
    reps = sorted((_run_one(cfg.with_seed(cfg.seed + r)) for r in range(cfg.replicates)),
                  key=lambda r: r.seed)
    return (cfg.beta, cfg.dynamics.memory, cfg.dynamics.alpha), summarize(reps)

