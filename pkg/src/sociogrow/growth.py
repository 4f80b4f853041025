"""Network growth by level discovery and information-dynamics attachment.

Each arrival contacts a uniformly random anchor, links to it, and then
tries every other node reachable from the anchor: a node at BFS level ``x``
is linked with probability ``level_probability(x, beta) * g_j``, where
``g_j`` is its knowledge score within that level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from .dynamics import DynamicsParams, LevelScores, level_scores, run_to_convergence
from .graph import Graph, bfs_levels, complete_graph


def level_probability(x: int, beta: float) -> float:
    """Normalized geometric weight of level ``x``: ``(1 - e^-beta) e^(-beta (x - 1))``."""
    if x < 1:
        raise ValueError(f"level index must be >= 1, got {x}")
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta}")
    return -math.expm1(-beta) * math.exp(-beta * (x - 1))


@dataclass(frozen=True)
class GrowthConfig:
    beta: float = 1.0
    n0: int = 3
    target_n: int = 1490
    dynamics: DynamicsParams = field(default_factory=DynamicsParams)
    seed: int = 0
    always_link_anchor: bool = True
    recompute_stride: int = 1
    replicates: int = 10

    def __post_init__(self):
        if not self.beta > 0:
            raise ValueError(f"beta must be positive, got {self.beta}")
        if self.n0 < 1:
            raise ValueError(f"n0 must be >= 1, got {self.n0}")
        if self.target_n < self.n0:
            raise ValueError(f"target_n ({self.target_n}) must be >= n0 ({self.n0})")
        if self.recompute_stride < 1:
            raise ValueError("recompute_stride must be >= 1")
        if self.replicates < 1:
            raise ValueError("replicates must be >= 1")

    def with_seed(self, seed: int) -> GrowthConfig:
        return replace(self, seed=seed)


@dataclass(frozen=True)
class ArrivalRecord:
    t: int
    anchor: int
    n_levels: int
    links: tuple[tuple[int, int], ...]  # (node, level); the anchor edge has level 0


@dataclass
class GrowthTrace:
    arrivals: list[ArrivalRecord] = field(default_factory=list)
    # (time, nodes, edges) after the seed clique and after every arrival
    sizes: list[tuple[int, int, int]] = field(default_factory=list)
    # (time, iterations, converged) for every knowledge refresh
    refreshes: list[tuple[int, int, bool]] = field(default_factory=list)

    @property
    def unconverged(self) -> int:
        return sum(1 for *_, ok in self.refreshes if not ok)


@dataclass
class GrowthResult:
    graph: Graph
    trace: GrowthTrace
    config: GrowthConfig


def _scores(S: np.ndarray, level: tuple[int, ...]) -> LevelScores:
    # nodes newer than the last knowledge refresh carry and receive no mass
    known = S.shape[0]
    if level[-1] < known:
        return level_scores(S, level)
    idx = [v for v in level if v < known]
    mass = np.zeros(len(level))
    if idx:
        sub = level_scores(S, idx)
        if not sub.uniform_fallback:
            mass[: len(idx)] = sub.scores
            return LevelScores(level, mass, False)
    return LevelScores(level, np.full(len(level), 1.0 / len(level)), True)


def attachment_probabilities(
    g: Graph, S: np.ndarray, anchor: int, beta: float
) -> dict[int, tuple[int, float]]:
    """``node -> (level, link probability)`` for every node reachable from ``anchor``."""
    out = {}
    for x, ring in enumerate(bfs_levels(g, anchor).levels, start=1):
        p = level_probability(x, beta)
        for v, s in zip(ring, _scores(S, ring).scores.tolist()):
            out[v] = (x, p * s)
    return out


def arrival_step(
    g: Graph,
    S: np.ndarray,
    cfg: GrowthConfig,
    rng: np.random.Generator,
    anchor: int | None = None,
) -> ArrivalRecord:
    """Add one node to ``g`` in place and link it.

    ``S`` is the knowledge matrix of the pre-arrival graph (or of an older,
    smaller snapshot of it). The anchor is drawn uniformly unless given.
    """
    n = g.node_count
    if n < 1:
        raise ValueError("cannot grow an empty graph")
    if anchor is None:
        anchor = int(rng.integers(n))
    decomposition = bfs_levels(g, anchor)
    links: list[tuple[int, int]] = []
    if cfg.always_link_anchor:
        links.append((anchor, 0))
    for x, ring in enumerate(decomposition.levels, start=1):
        p = level_probability(x, cfg.beta)
        prob = p * _scores(S, ring).scores
        hits = rng.random(len(ring)) < prob
        links.extend((ring[k], x) for k in np.flatnonzero(hits).tolist())
    new = g.add_node()
    for v, _ in links:
        g.add_edge(new, v)
    return ArrivalRecord(new, anchor, len(decomposition), tuple(links))


def grow(
    cfg: GrowthConfig,
    on_dynamics_step: Callable[[int, np.ndarray], None] | None = None,
) -> GrowthResult:
    """Grow a network from a seed clique of ``n0`` nodes up to ``target_n``.

    The knowledge matrix is recomputed from scratch on the current graph
    every ``recompute_stride`` arrivals. Output is a pure function of ``cfg``.
    """
    rng = np.random.default_rng(cfg.seed)
    g = complete_graph(cfg.n0)
    trace = GrowthTrace()
    trace.sizes.append((cfg.n0 - 1, g.node_count, g.edge_count))
    S = None
    for k, t in enumerate(range(cfg.n0, cfg.target_n)):
        if k % cfg.recompute_stride == 0:
            res = run_to_convergence(g, cfg.dynamics, on_step=on_dynamics_step)
            S = res.knowledge
            trace.refreshes.append((t, res.iterations, res.converged))
        trace.arrivals.append(arrival_step(g, S, cfg, rng))
        trace.sizes.append((t, g.node_count, g.edge_count))
    return GrowthResult(g, trace, cfg)
