"""Brute-force reference computations, independent of the package kernels."""

import itertools

import numpy as np


def floyd_warshall(adj: np.ndarray) -> np.ndarray:
    n = len(adj)
    d = np.where(adj > 0, 1.0, np.inf)
    np.fill_diagonal(d, 0.0)
    for k in range(n):
        d = np.minimum(d, d[:, [k]] + d[[k], :])
    return d


def path_oracle(adj: np.ndarray):
    """(avg path length, diameter) over the largest component, via Floyd-Warshall."""
    d = floyd_warshall(adj)
    n = len(adj)
    if n == 0:
        return 0.0, 0
    # largest component: most reachable nodes, ties to the lowest id
    reach = np.isfinite(d).sum(axis=1)
    best = max(range(n), key=lambda i: (reach[i], -i))
    comp = np.flatnonzero(np.isfinite(d[best]))
    sub = d[np.ix_(comp, comp)]
    iu = np.triu_indices(len(comp), k=1)
    if len(iu[0]) == 0:
        return 0.0, 0
    return float(sub[iu].mean()), int(sub[iu].max())


def clustering_oracle(adj: np.ndarray) -> float:
    """Mean local clustering by enumerating every neighbor pair."""
    n = len(adj)
    if n == 0:
        return 0.0
    total = 0.0
    for v in range(n):
        nb = np.flatnonzero(adj[v])
        if len(nb) < 2:
            continue
        pairs = list(itertools.combinations(nb, 2))
        closed = sum(1 for a, b in pairs if adj[a, b])
        total += closed / len(pairs)
    return total / n


def survival(degrees, k) -> float:
    degrees = list(degrees)
    return sum(1 for x in degrees if x >= k) / len(degrees)


def ks_oracle(deg_a, deg_b) -> float:
    hi = max(max(deg_a), max(deg_b)) + 2
    return max(abs(survival(deg_a, k) - survival(deg_b, k)) for k in range(-1, hi))


def random_adjacency(rng: np.random.Generator, n: int, p: float) -> np.ndarray:
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return (upper | upper.T).astype(float)
