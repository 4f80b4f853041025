# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot loops: fused knowledge update, all-pairs BFS, triangle counts."""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs
from libc.stdlib cimport malloc, free

cnp.import_array()

cdef extern from "_simd.h" nogil:
    int sg_simd_level()
    double sg_pow_row(double *x, Py_ssize_t n, double alpha, int allow_simd)


def simd_enabled():
    """True when the vectorized power loop is compiled in and the CPU supports it."""
    return sg_simd_level() == 1


def knowledge_step(const double[:, ::1] S, const long long[::1] indptr,
                   const long long[::1] indices, double m, double alpha,
                   double[:, ::1] out, bint simd=True):
    """One communicate+compete update of ``S`` into ``out``.

    Returns the largest absolute entry change, or ``-(i + 1)`` when row ``i``
    has no positive mass after communication.
    """
    cdef Py_ssize_t n = S.shape[0]
    cdef Py_ssize_t i, j, p
    cdef double total, v, diff, worst = 0.0
    cdef double keep = m, spread = 1.0 - m
    cdef bint square = alpha == 2.0
    cdef bint linear = alpha == 1.0
    cdef Py_ssize_t bad = -1
    cdef double *row
    cdef const double *src
    if n == 0:
        return 0.0
    with nogil:
        for i in range(n):
            row = &out[i, 0]
            src = &S[i, 0]
            for j in range(n):
                row[j] = keep * src[j]
            for p in range(indptr[i], indptr[i + 1]):
                src = &S[indices[p], 0]
                for j in range(n):
                    row[j] += spread * src[j]
            total = 0.0
            if linear:
                for j in range(n):
                    total += row[j]
            elif square:
                for j in range(n):
                    row[j] = row[j] * row[j]
                    total += row[j]
            else:
                total = sg_pow_row(row, n, alpha, simd)
            if not total > 0.0:
                bad = i
                break
            v = 1.0 / total
            src = &S[i, 0]
            for j in range(n):
                row[j] *= v
                diff = fabs(row[j] - src[j])
                if diff > worst:
                    worst = diff
    if bad >= 0:
        return -(bad + 1.0)
    return worst


def path_length_stats(const long long[::1] indptr, const long long[::1] indices,
                      const long long[::1] nodes):
    """BFS from every node in ``nodes``; returns (distance sum, ordered pairs, max distance).

    ``nodes`` must be closed under adjacency (a union of components).
    """
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef Py_ssize_t count = nodes.shape[0]
    cdef long long *dist = <long long *> malloc(n * sizeof(long long))
    cdef long long *queue = <long long *> malloc(n * sizeof(long long))
    cdef long long total = 0, pairs = 0, far = 0
    cdef Py_ssize_t s, head, tail, p, idx
    cdef long long u, w, du
    if dist == NULL or queue == NULL:
        free(dist)
        free(queue)
        raise MemoryError()
    try:
        with nogil:
            for idx in range(n):
                dist[idx] = -1
            for idx in range(count):
                s = nodes[idx]
                dist[s] = 0
                queue[0] = s
                head = 0
                tail = 1
                while head < tail:
                    u = queue[head]
                    head += 1
                    du = dist[u] + 1
                    for p in range(indptr[u], indptr[u + 1]):
                        w = indices[p]
                        if dist[w] < 0:
                            dist[w] = du
                            queue[tail] = w
                            tail += 1
                            total += du
                            pairs += 1
                            if du > far:
                                far = du
                for p in range(tail):
                    dist[queue[p]] = -1
    finally:
        free(dist)
        free(queue)
    return total, pairs, far


def triangle_counts(const long long[::1] indptr, const long long[::1] indices):
    """Number of triangles through each node."""
    cdef Py_ssize_t n = indptr.shape[0] - 1
    tri_arr = np.zeros(n, dtype=np.int64)
    cdef long long[::1] tri = tri_arr
    mark_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] mark = mark_arr
    cdef Py_ssize_t u, p, q
    cdef long long v, w, c
    with nogil:
        for u in range(n):
            for p in range(indptr[u], indptr[u + 1]):
                mark[indices[p]] = 1
            c = 0
            for p in range(indptr[u], indptr[u + 1]):
                v = indices[p]
                for q in range(indptr[v], indptr[v + 1]):
                    w = indices[q]
                    if mark[w]:
                        c += 1
            tri[u] = c // 2
            for p in range(indptr[u], indptr[u + 1]):
                mark[indices[p]] = 0
    return tri_arr
