"""Knowledge-matrix dynamics: diffusion with memory, then competition.

Row ``i`` of the knowledge matrix is node ``i``'s probability distribution
over community leaders. One update is a communication half-step,

    H = m * S + (1 - m) * A @ S

followed by row-wise competition ``S'_ij = H_ij**alpha / sum_k H_ik**alpha``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
import scipy.sparse as sp

from . import kernels
from .graph import Graph


class DegenerateKnowledgeError(ArithmeticError):
    """A knowledge row carries no positive mass and cannot be renormalized."""


@dataclass(frozen=True)
class DynamicsParams:
    memory: float = 0.5
    alpha: float = 1.1
    max_iterations: int = 100
    epsilon: float = 1e-6

    def __post_init__(self):
        if not 0.0 <= self.memory <= 1.0:
            raise ValueError(f"memory must lie in [0, 1], got {self.memory}")
        if not self.alpha >= 1.0:
            raise ValueError(f"alpha must be >= 1, got {self.alpha}")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")
        if not self.epsilon > 0.0:
            raise ValueError("epsilon must be positive")


def init_knowledge(n: int) -> np.ndarray:
    """Every node knows only about itself."""
    if n < 1:
        raise ValueError("knowledge matrix needs at least one node")
    return np.eye(n)


def _adjacency(g: Graph) -> sp.csr_matrix:
    indptr, indices = g.csr()
    n = g.node_count
    return sp.csr_matrix((np.ones(len(indices)), indices, indptr), shape=(n, n))


def _check_shape(S: np.ndarray, g: Graph) -> None:
    if S.shape != (g.node_count, g.node_count):
        raise ValueError(
            f"knowledge matrix shape {S.shape} does not match graph with {g.node_count} nodes"
        )


def communicate(S: np.ndarray, g: Graph, m: float) -> np.ndarray:
    """Diffusion half-step. Rows are left unnormalized."""
    _check_shape(S, g)
    return m * S + (1.0 - m) * (_adjacency(g) @ S)


def compete(H: np.ndarray, alpha: float) -> np.ndarray:
    """Raise entries to ``alpha`` and renormalize each row."""
    H = np.asarray(H, dtype=float)
    P = H if alpha == 1.0 else np.power(H, alpha)
    total = P.sum(axis=-1, keepdims=True)
    bad = np.flatnonzero(~(total > 0.0))
    if bad.size:
        raise DegenerateKnowledgeError(f"row {bad[0]} has no positive mass")
    return P / total


def step(S: np.ndarray, g: Graph, params: DynamicsParams, out: np.ndarray | None = None):
    """One full update; returns ``(S_next, max_abs_change)``.

    Runs on the selected kernel backend. ``out`` may be supplied to reuse a
    buffer but must not alias ``S``.
    """
    _check_shape(S, g)
    S = np.ascontiguousarray(S, dtype=float)
    if out is None:
        out = np.empty_like(S)
    indptr, indices = g.csr()
    change = kernels.knowledge_step(S, indptr, indices, params.memory, params.alpha, out)
    if change < 0:
        raise DegenerateKnowledgeError(f"row {int(-change) - 1} has no positive mass")
    return out, change


@dataclass
class DynamicsResult:
    knowledge: np.ndarray
    iterations: int
    converged: bool
    max_change: float


def run_to_convergence(
    g: Graph,
    params: DynamicsParams,
    on_step: Callable[[int, np.ndarray], None] | None = None,
) -> DynamicsResult:
    """Iterate from the identity until the largest entry change drops below epsilon.

    Hitting ``max_iterations`` is reported through ``converged=False``.
    ``on_step(iteration, S)`` is called after every full update.
    """
    if g.node_count < 1:
        raise ValueError("dynamics need a nonempty graph")
    S = init_knowledge(g.node_count)
    spare = np.empty_like(S)
    change = np.inf
    for it in range(1, params.max_iterations + 1):
        nxt, change = step(S, g, params, out=spare)
        spare, S = S, nxt
        if on_step is not None:
            on_step(it, S)
        if change < params.epsilon:
            return DynamicsResult(S, it, True, change)
    return DynamicsResult(S, params.max_iterations, False, change)


@dataclass(frozen=True)
class LevelScores:
    nodes: tuple[int, ...]
    scores: np.ndarray
    uniform_fallback: bool

    def as_dict(self) -> dict[int, float]:
        return dict(zip(self.nodes, self.scores.tolist()))

    def winner(self) -> int:
        """Highest-scoring node; ties go to the lowest id."""
        best = self.scores.max()
        return min(v for v, s in zip(self.nodes, self.scores) if s == best)

    def is_strict_winner(self, node: int) -> bool:
        k = self.nodes.index(node)
        others = np.delete(self.scores, k)
        return bool(others.size == 0 or self.scores[k] > others.max())


def level_scores(S: np.ndarray, level: Sequence[int]) -> LevelScores:
    """Knowledge mass each level member receives from the level, renormalized.

    ``score(j) = sum_{i in level} S_ij / sum_{i, k in level} S_ik``. When the
    level holds no mass on its own members the scores fall back to uniform.
    """
    nodes = tuple(level)
    if not nodes:
        raise ValueError("empty level")
    idx = np.asarray(nodes, dtype=np.intp)
    if idx.min() < 0 or idx.max() >= S.shape[0]:
        raise IndexError("level refers to nodes outside the knowledge matrix")
    mass = S[np.ix_(idx, idx)].sum(axis=0)
    total = mass.sum()
    if total > 0.0:
        return LevelScores(nodes, mass / total, False)
    return LevelScores(nodes, np.full(len(nodes), 1.0 / len(nodes)), True)
