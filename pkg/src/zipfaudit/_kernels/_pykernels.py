"""Pure-Python kernels; same contracts and outputs as the compiled ones."""
from collections import deque

import numpy as np


def bfs_distances(indptr, indices, source):
    n = len(indptr) - 1
    ptr = indptr.tolist() if hasattr(indptr, "tolist") else list(indptr)
    nbr = indices.tolist() if hasattr(indices, "tolist") else list(indices)
    dist = _bfs(ptr, nbr, n, int(source))
    return np.array(dist, dtype=np.int64)


def _bfs(ptr, nbr, n, source):
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    pop, push = queue.popleft, queue.append
    while queue:
        u = pop()
        du = dist[u] + 1
        for w in nbr[ptr[u]:ptr[u + 1]]:
            if dist[w] < 0:
                dist[w] = du
                push(w)
    return dist


def bfs_distance_totals(indptr, indices, sources):
    n = len(indptr) - 1
    ptr = indptr.tolist()
    nbr = indices.tolist()
    totals = []
    reached = []
    for s in np.asarray(sources).tolist():
        reach = [d for d in _bfs(ptr, nbr, n, s) if d >= 0]
        totals.append(sum(reach))
        reached.append(len(reach))
    return np.array(totals, dtype=np.int64), np.array(reached, dtype=np.int64)


def ba_attach(n, m, uniforms):
    n_edges = m * (m + 1) // 2 + (n - m - 1) * m
    edges = []
    ends = []
    for i in range(m + 1):
        for j in range(i + 1, m + 1):
            edges.append((i, j))
            ends += (i, j)
    u = uniforms.tolist() if hasattr(uniforms, "tolist") else list(uniforms)
    n_u = len(u)
    pos = 0
    for v in range(m + 1, n):
        chosen = []
        n_ends = len(ends)
        while len(chosen) < m:
            if pos >= n_u:
                return None, -1
            idx = int(u[pos] * n_ends)
            pos += 1
            if idx >= n_ends:
                idx = n_ends - 1
            t = ends[idx]
            if t not in chosen:
                chosen.append(t)
        for t in chosen:
            edges.append((t, v))
            ends += (t, v)
    out = np.array(edges, dtype=np.int64).reshape(n_edges, 2)
    return out, pos
