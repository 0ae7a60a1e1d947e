# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled BFS and preferential-attachment kernels.

Semantics match ``_pykernels`` exactly, including how uniforms are consumed.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64


def bfs_distances(const i64[::1] indptr, const i64[::1] indices, Py_ssize_t source):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    dist_arr = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] dist = dist_arr
    cdef i64[::1] queue = np.empty(max(n, 1), dtype=np.int64)
    _bfs(indptr, indices, source, dist, queue)
    return dist_arr


cdef Py_ssize_t _bfs(const i64[::1] indptr, const i64[::1] indices, Py_ssize_t source,
                     i64[::1] dist, i64[::1] queue) nogil:
    cdef Py_ssize_t head = 0, tail = 1, u, w, j
    cdef i64 du
    dist[source] = 0
    queue[0] = source
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for j in range(indptr[u], indptr[u + 1]):
            w = indices[j]
            if dist[w] < 0:
                dist[w] = du
                queue[tail] = w
                tail += 1
    return tail


def bfs_distance_totals(const i64[::1] indptr, const i64[::1] indices, const i64[::1] sources):
    """Per source: sum of hop distances to reachable nodes and reachable count."""
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef Py_ssize_t s, i, reached
    cdef i64 total
    totals_arr = np.zeros(sources.shape[0], dtype=np.int64)
    reached_arr = np.zeros(sources.shape[0], dtype=np.int64)
    cdef i64[::1] totals = totals_arr
    cdef i64[::1] reach = reached_arr
    cdef i64[::1] dist = np.empty(max(n, 1), dtype=np.int64)
    cdef i64[::1] queue = np.empty(max(n, 1), dtype=np.int64)
    with nogil:
        for s in range(sources.shape[0]):
            dist[:] = -1
            reached = _bfs(indptr, indices, sources[s], dist, queue)
            total = 0
            for i in range(reached):
                total += dist[queue[i]]
            totals[s] = total
            reach[s] = reached
    return totals_arr, reached_arr


def ba_attach(Py_ssize_t n, Py_ssize_t m, const double[::1] uniforms):
    """Preferential-attachment edge list seeded by an (m+1)-clique.

    Returns ``(edges, consumed)``; ``consumed`` is -1 when ``uniforms`` ran out.
    """
    cdef Py_ssize_t n_edges = m * (m + 1) // 2 + (n - m - 1) * m
    edges_arr = np.empty((n_edges, 2), dtype=np.int64)
    cdef i64[:, ::1] edges = edges_arr
    cdef i64[::1] ends = np.empty(2 * n_edges, dtype=np.int64)
    cdef i64[::1] chosen = np.empty(max(m, 1), dtype=np.int64)
    cdef Py_ssize_t e = 0, n_ends = 0, pos = 0, n_u = uniforms.shape[0]
    cdef Py_ssize_t i, j, v, cnt, idx, t
    cdef bint dup
    for i in range(m + 1):
        for j in range(i + 1, m + 1):
            edges[e, 0] = i
            edges[e, 1] = j
            e += 1
            ends[n_ends] = i
            ends[n_ends + 1] = j
            n_ends += 2
    for v in range(m + 1, n):
        cnt = 0
        while cnt < m:
            if pos >= n_u:
                return None, -1
            idx = <Py_ssize_t>(uniforms[pos] * n_ends)
            pos += 1
            if idx >= n_ends:
                idx = n_ends - 1
            t = ends[idx]
            dup = False
            for j in range(cnt):
                if chosen[j] == t:
                    dup = True
                    break
            if not dup:
                chosen[cnt] = t
                cnt += 1
        for j in range(m):
            edges[e, 0] = chosen[j]
            edges[e, 1] = v
            e += 1
            ends[n_ends] = chosen[j]
            ends[n_ends + 1] = v
            n_ends += 2
    return edges_arr, pos
