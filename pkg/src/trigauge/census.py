"""Triangle and wedge census, clustering coefficients, and the trace oracle.

Exact counting uses the degree-ordered forward algorithm: edges are
oriented from lower- to higher-degree endpoints (ties broken by index) and
the sorted out-neighborhoods of each oriented edge's ends are intersected
by a two-pointer merge.  Each triangle is found exactly once and credited
to all three corners.  The kernel is JIT-compiled with numba when
available and falls back to the identical pure-Python loop otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, UndefinedCoefficientError, UndefinedStatisticError
from .graph import Graph

DEFAULT_DENSE_CAP = 2000


@dataclass(frozen=True)
class TriangleCensus:
    per_node: np.ndarray       # triangles at each corner, int64
    total_triangles: int       # == per_node.sum() / 3
    wedge_count: int           # == sum over nodes of C(k, 2)


@dataclass(frozen=True)
class WedgeSampleEstimate:
    estimate: float            # estimated total triangle count
    std_error: float           # binomial standard error of the estimate
    closure_rate: float
    closed: int
    sample_size: int


def _forward_merge_count(indptr, indices, per_node):
    # Oriented CSR: row u holds out-neighbors of u, sorted ascending.
    # Triangles u < v < w (in degree order) appear exactly once as
    # w in out(u) ∩ out(v) with v in out(u).
    total = 0
    n = indptr.shape[0] - 1
    for u in range(n):
        row_start = indptr[u]
        row_end = indptr[u + 1]
        for i in range(row_start, row_end):
            v = indices[i]
            a = row_start
            b = indptr[v]
            end_a = row_end
            end_b = indptr[v + 1]
            while a < end_a and b < end_b:
                wa = indices[a]
                wb = indices[b]
                if wa == wb:
                    total += 1
                    per_node[u] += 1
                    per_node[v] += 1
                    per_node[wa] += 1
                    a += 1
                    b += 1
                elif wa < wb:
                    a += 1
                else:
                    b += 1
    return total


try:  # pragma: no cover - exercised implicitly everywhere
    import numba

    _forward_kernel = numba.njit(cache=True)(_forward_merge_count)
except ImportError:  # pragma: no cover
    _forward_kernel = _forward_merge_count


def _undirected_edge_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    # Each undirected edge once, as (u, v) with u < v.
    row = np.repeat(np.arange(g.node_count, dtype=np.int64), g.degrees)
    keep = g.indices > row
    return row[keep], g.indices[keep]


def wedge_count(degrees) -> int:
    """Number of adjacent edge pairs, exact in arbitrary-precision ints."""
    return sum(int(k) * (int(k) - 1) for k in degrees) // 2


def triangle_census(g: Graph, kernel=None) -> TriangleCensus:
    """Exact per-node and total triangle counts plus the wedge count.

    ``kernel`` exists for testing: pass ``_forward_merge_count`` to force
    the pure-Python path.
    """
    count = _forward_kernel if kernel is None else kernel
    n = g.node_count
    deg = g.degrees
    wedges = wedge_count(deg)
    per_node = np.zeros(n, dtype=np.int64)
    if g.edge_count == 0:
        return TriangleCensus(per_node, 0, wedges)

    order = np.lexsort((np.arange(n), deg))   # ascending degree, ties by index
    pos = np.empty(n, dtype=np.int64)
    pos[order] = np.arange(n)
    eu, ev = _undirected_edge_arrays(g)
    a, b = pos[eu], pos[ev]
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    perm = np.lexsort((hi, lo))
    lo, hi = lo[perm], np.ascontiguousarray(hi[perm])
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(lo, minlength=n), out=indptr[1:])

    per_relabeled = np.zeros(n, dtype=np.int64)
    total = int(count(indptr, hi, per_relabeled))
    per_node[order] = per_relabeled
    return TriangleCensus(per_node, total, wedges)


def approx_triangle_count(g: Graph, sample_size: int, seed: int) -> WedgeSampleEstimate:
    """Estimate the triangle count by uniform wedge sampling.

    Draws ``sample_size`` wedges i.i.d. uniformly (center chosen with
    probability proportional to C(k, 2), then an unordered neighbor pair
    uniformly), tests closure, and scales the closure rate by
    wedge_count / 3.  The estimator is unbiased; the reported standard
    error is the binomial one.
    """
    if sample_size < 1:
        raise ValueError(f"sample_size must be >= 1, got {sample_size}")
    deg = g.degrees.astype(np.int64)
    per_node_wedges = deg * (deg - 1) // 2
    cum = np.cumsum(per_node_wedges)
    total_wedges = int(cum[-1]) if cum.size else 0
    if total_wedges == 0:
        raise UndefinedCoefficientError("graph has no wedges to sample")

    rng = np.random.default_rng(seed)
    draws = rng.integers(0, total_wedges, size=sample_size)
    centers = np.searchsorted(cum, draws, side="right")
    k = deg[centers]
    first = rng.integers(0, k)
    second = rng.integers(0, k - 1)
    second = second + (second >= first)
    starts = g.indptr[centers]
    m = g.indices[starts + first]
    n_ = g.indices[starts + second]

    eu, ev = _undirected_edge_arrays(g)
    edge_keys = np.sort(eu * np.int64(g.node_count) + ev)
    q = np.minimum(m, n_) * np.int64(g.node_count) + np.maximum(m, n_)
    idx = np.searchsorted(edge_keys, q)
    idx = np.minimum(idx, edge_keys.size - 1)
    closed = int((edge_keys[idx] == q).sum())

    rate = closed / sample_size
    scale = total_wedges / 3.0
    return WedgeSampleEstimate(
        estimate=rate * scale,
        std_error=float(np.sqrt(rate * (1.0 - rate) / sample_size)) * scale,
        closure_rate=rate,
        closed=closed,
        sample_size=sample_size,
    )


def local_clustering(g: Graph, census: TriangleCensus) -> np.ndarray:
    """Per-node clustering: triangles at the node over C(k, 2).

    Nodes of degree < 2 have no wedges; their coefficient is defined as 0.
    """
    deg = g.degrees
    out = np.zeros(g.node_count, dtype=np.float64)
    mask = deg >= 2
    pairs = deg[mask].astype(np.float64)
    out[mask] = census.per_node[mask] / (pairs * (pairs - 1.0) / 2.0)
    return out


def mean_local_clustering(values) -> float:
    values = np.asarray(values, dtype=np.float64)
    if values.size == 0:
        raise UndefinedStatisticError("mean local clustering of an empty sequence")
    return float(values.mean())


def global_clustering(census: TriangleCensus) -> float:
    """Transitivity: 3 * triangles / wedges, always in [0, 1]."""
    if census.wedge_count == 0:
        raise UndefinedCoefficientError("global clustering undefined: no adjacent edge pairs")
    return 3.0 * census.total_triangles / census.wedge_count


def spectral_gcc_oracle(g: Graph, dense_cap: int = DEFAULT_DENSE_CAP) -> float:
    """Global clustering via the trace of the cubed adjacency matrix.

    Materializes the dense adjacency and evaluates tr(A^3) / (2 * wedges),
    which must equal :func:`global_clustering` up to floating round-off.
    All intermediate products are integers well below 2^53, so the float64
    matrix products are exact.
    """
    n = g.node_count
    if n > dense_cap:
        raise CapacityError(f"N={n} exceeds dense cap {dense_cap}")
    wedges = wedge_count(g.degrees)
    if wedges == 0:
        raise UndefinedCoefficientError("trace oracle undefined: no wedges")
    dense = np.zeros((n, n), dtype=np.float64)
    rows = np.repeat(np.arange(n), g.degrees)
    dense[rows, g.indices] = 1.0
    trace_a3 = float(((dense @ dense) * dense).sum())
    return trace_a3 / (2.0 * wedges)
