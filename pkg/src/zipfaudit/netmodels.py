"""Synthetic networks used as oracles for the fitter.

Preferential-attachment graphs give a heavy-tailed degree distribution;
ring lattices with random rewiring give mean path lengths growing like
log N. Both generators are deterministic for a fixed seed, independent of
which kernel backend is active.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, TextIO

import numpy as np

from . import _kernels
from .dataset import RankedSeries
from .errors import ConnectivityError, InsufficientDataError, ParameterError
from .zipf import ZipfModel, zipf_series

EXHAUSTIVE_LIMIT = 2000


@dataclass(frozen=True)
class SyntheticGraph:
    node_count: int
    edges: np.ndarray  # (E, 2) int64, u < v, unique
    seed: int | None = None

    def __post_init__(self) -> None:
        edges = np.array(self.edges, dtype=np.int64).reshape(-1, 2)
        if self.node_count < 1:
            raise ParameterError("graph needs at least one node")
        if edges.size:
            lo = np.minimum(edges[:, 0], edges[:, 1])
            hi = np.maximum(edges[:, 0], edges[:, 1])
            if lo.min() < 0 or hi.max() >= self.node_count:
                raise ParameterError("edge endpoint outside 0..node_count-1")
            if np.any(lo == hi):
                raise ParameterError("self-loops are not allowed")
            edges = np.column_stack([lo, hi])
            if len(np.unique(edges, axis=0)) != len(edges):
                raise ParameterError("duplicate edges are not allowed")
        edges.setflags(write=False)
        object.__setattr__(self, "edges", edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.bincount(self.edges.ravel(), minlength=self.node_count)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency as (indptr, indices), neighbours sorted ascending."""
        both = np.concatenate([self.edges, self.edges[:, ::-1]])
        order = np.lexsort((both[:, 1], both[:, 0]))
        both = both[order]
        indptr = np.zeros(self.node_count + 1, dtype=np.int64)
        np.cumsum(np.bincount(both[:, 0], minlength=self.node_count), out=indptr[1:])
        return indptr, np.ascontiguousarray(both[:, 1])

    def is_connected(self) -> bool:
        if self.node_count == 1:
            return True
        indptr, indices = self.csr
        return bool(np.all(_kernels.bfs_distances(indptr, indices, 0) >= 0))

    def write_edgelist(self, fh: TextIO) -> None:
        for u, v in self.edges.tolist():
            fh.write(f"{u} {v}\n")


@dataclass(frozen=True)
class PathLengthSample:
    node_count: int
    mean_path_length: float
    pairs_sampled: int


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def gen_preferential_attachment(n: int, m: int, seed: int | None = 0) -> SyntheticGraph:
    """Grow a graph from an (m+1)-clique; each new node links to m distinct
    existing nodes chosen with probability proportional to degree."""
    if m < 1 or n <= m:
        raise ParameterError(f"preferential attachment needs n > m >= 1, got n={n}, m={m}")
    pool = 2 * m * n + 64
    while True:
        # same seed, longer prefix: a retry only extends the uniform stream
        uniforms = _rng(seed).random(pool)
        edges, consumed = _kernels.ba_attach(n, m, uniforms)
        if consumed >= 0:
            return SyntheticGraph(n, edges, seed)
        pool *= 2


def ring_lattice_edges(n: int, k_ring: int) -> list[tuple[int, int]]:
    return [(u, (u + j) % n) for j in range(1, k_ring // 2 + 1) for u in range(n)]


def gen_small_world(n: int, k_ring: int, beta: float, seed: int | None = 0) -> SyntheticGraph:
    """Ring lattice where each lattice edge is rewired with probability beta.

    A rewired edge keeps its first endpoint and gets a uniformly drawn new
    partner, redrawn until it is neither the node itself nor a neighbour.
    """
    if k_ring < 2 or k_ring % 2 or n <= k_ring:
        raise ParameterError(f"small-world needs n > k_ring >= 2 with k_ring even, got n={n}, k_ring={k_ring}")
    if not 0.0 <= beta <= 1.0:
        raise ParameterError(f"rewiring probability must lie in [0, 1], got {beta}")
    rng = _rng(seed)
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in ring_lattice_edges(n, k_ring):
        adj[u].add(v)
        adj[v].add(u)
    for j in range(1, k_ring // 2 + 1):
        coins = rng.random(n)
        for u in range(n):
            v = (u + j) % n
            if coins[u] >= beta or v not in adj[u] or len(adj[u]) >= n - 1:
                continue
            w = int(rng.integers(n))
            while w == u or w in adj[u]:
                w = int(rng.integers(n))
            adj[u].discard(v)
            adj[v].discard(u)
            adj[u].add(w)
            adj[w].add(u)
    edges = sorted((u, v) for u in range(n) for v in adj[u] if u < v)
    return SyntheticGraph(n, np.array(edges, dtype=np.int64).reshape(-1, 2), seed)


def degree_distribution(g: SyntheticGraph) -> RankedSeries:
    """Degree histogram as (degree, frequency) pairs, most frequent first.

    Zero-frequency degrees are omitted; ties in frequency are ordered by
    ascending degree. Degree 0 (isolated nodes) is kept in the listing.
    """
    counts = Counter(g.degrees.tolist())
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return RankedSeries(
        ranks=tuple(d for d, _ in ordered),
        values=tuple(c for _, c in ordered),
        metric="degree_frequency",
    )


def degree_exponent(g: SyntheticGraph):
    """Power-law fit of frequency against degree, over positive degrees."""
    from .powerlaw import fit_power_law

    dist = degree_distribution(g)
    pairs = sorted((d, c) for d, c in dist.pairs() if d > 0)
    return fit_power_law(RankedSeries(tuple(d for d, _ in pairs), tuple(c for _, c in pairs)))


def mean_path_length(g: SyntheticGraph, pairs_sampled: int = 0, seed: int | None = 0) -> PathLengthSample:
    """Mean shortest-path hop count over unordered node pairs.

    Graphs with at most 2000 nodes, or ``pairs_sampled == 0``, are measured
    over all pairs. Otherwise ``pairs_sampled`` distinct-endpoint pairs are
    drawn uniformly with replacement and one BFS is run per distinct source.
    """
    n = g.node_count
    if pairs_sampled < 0:
        raise ParameterError("pairs_sampled must be >= 0")
    if n < 2:
        raise InsufficientDataError("path length needs at least two nodes")
    indptr, indices = g.csr
    if pairs_sampled == 0 or n <= EXHAUSTIVE_LIMIT:
        totals, reached = _kernels.bfs_distance_totals(indptr, indices, np.arange(n, dtype=np.int64))
        if np.any(reached != n):
            raise ConnectivityError("graph is disconnected; mean path length is undefined")
        n_pairs = n * (n - 1) // 2
        return PathLengthSample(n, int(totals.sum()) / (2 * n_pairs), n_pairs)

    if not g.is_connected():
        raise ConnectivityError("graph is disconnected; mean path length is undefined")
    rng = _rng(seed)
    src = rng.integers(n, size=pairs_sampled)
    dst = rng.integers(n - 1, size=pairs_sampled)
    dst = dst + (dst >= src)
    total = 0
    for s in np.unique(src).tolist():
        dist = _kernels.bfs_distances(indptr, indices, s)
        total += int(dist[dst[src == s]].sum())
    return PathLengthSample(n, total / pairs_sampled, pairs_sampled)


@dataclass(frozen=True)
class ScalingResult:
    points: tuple[PathLengthSample, ...]
    correlation: float

    @property
    def sizes(self) -> list[int]:
        return [p.node_count for p in self.points]

    @property
    def lengths(self) -> list[float]:
        return [p.mean_path_length for p in self.points]


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        raise InsufficientDataError("correlation is undefined for a zero-variance input")
    return float(dx @ dy) / math.sqrt(sxx * syy)


def small_world_scaling(
    sizes: Iterable[int],
    k_ring: int,
    beta: float,
    seed: int | None = 0,
    pairs_sampled: int = 1000,
) -> ScalingResult:
    """Mean path length for each size and its Pearson correlation with ln N."""
    sizes = list(sizes)
    if len(sizes) < 3:
        raise InsufficientDataError("scaling needs at least three sizes")
    if len(set(sizes)) < 2:
        raise InsufficientDataError("correlation is undefined: all sizes are equal")
    points = []
    for n in sizes:
        g = gen_small_world(n, k_ring, beta, seed)
        points.append(mean_path_length(g, pairs_sampled, seed))
    corr = pearson([math.log(p.node_count) for p in points], [p.mean_path_length for p in points])
    return ScalingResult(tuple(points), corr)


def gen_zipf_dataset(F: float, count: int, seed: int | None = 0, noise: float = 0.0) -> RankedSeries:
    """Zipf series ``F / n`` with optional multiplicative uniform noise.

    With ``noise == 0`` the values are exact rationals equal to
    :func:`~zipfaudit.zipf.zipf_series`. Noisy values are re-sorted descending.
    """
    if not F > 0:
        raise ParameterError(f"rank-1 value must be > 0, got {F}")
    if isinstance(count, bool) or int(count) != count or count < 1:
        raise ParameterError(f"count must be a positive integer, got {count}")
    if not 0.0 <= noise < 1.0:
        raise ParameterError(f"noise amplitude must lie in [0, 1), got {noise}")
    exact = zipf_series(ZipfModel(F, int(count)))
    if noise == 0:
        return exact
    eps = _rng(seed).uniform(-noise, noise, size=int(count))
    values = sorted((float(v) * (1.0 + e) for v, e in zip(exact.values, eps)), reverse=True)
    return RankedSeries.from_values(values, metric="zipf")
