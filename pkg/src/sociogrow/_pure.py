"""Reference implementations of the compiled kernels (NumPy/SciPy + Python)."""

from collections import deque

import numpy as np
import scipy.sparse as sp


def knowledge_step(S, indptr, indices, m, alpha, out):
    n = S.shape[0]
    adj = sp.csr_matrix((np.ones(len(indices)), indices, indptr), shape=(n, n))
    h = m * S + (1.0 - m) * (adj @ S)
    if alpha != 1.0:
        np.power(h, alpha, out=h)
    total = h.sum(axis=1)
    bad = np.flatnonzero(~(total > 0.0))
    if bad.size:
        return -(bad[0] + 1.0)
    np.divide(h, total[:, None], out=out)
    return float(np.abs(out - S).max()) if n else 0.0


def path_length_stats(indptr, indices, nodes):
    indptr = indptr.tolist()
    indices = indices.tolist()
    total = pairs = far = 0
    for s in nodes.tolist():
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for w in indices[indptr[u]:indptr[u + 1]]:
                if w not in dist:
                    dist[w] = du
                    queue.append(w)
                    total += du
                    pairs += 1
                    if du > far:
                        far = du
    return total, pairs, far


def triangle_counts(indptr, indices):
    n = len(indptr) - 1
    nbrs = [set(indices[indptr[u]:indptr[u + 1]].tolist()) for u in range(n)]
    tri = np.zeros(n, dtype=np.int64)
    for u in range(n):
        tri[u] = sum(len(nbrs[u] & nbrs[v]) for v in nbrs[u]) // 2
    return tri
