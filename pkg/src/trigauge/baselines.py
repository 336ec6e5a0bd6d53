"""Closed-form clustering baselines and largest-eigenvalue machinery.

These are the reference values a measured global clustering coefficient is
compared against: the Erdős–Rényi value, the uncorrelated
(configuration-model) estimate, the Barabási–Albert growth estimate, the
Chung moment bound on the spectral radius, and the contribution of the
leading eigenvalue to the clustering coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .errors import CapacityError, ConvergenceError, UndefinedCoefficientError
from .census import DEFAULT_DENSE_CAP
from .graph import DegreeStats, Graph, component_labels


@dataclass(frozen=True)
class BaselineSet:
    c_er: float
    c_uc: float
    lambda1_chung: float
    gcc_bound_chung: float
    c_ba: float | None = None
    lambda1_exact: float | None = None
    gcc_bound_lambda1: float | None = None


def er_clustering(n: int, mean_k: float) -> float:
    """Expected clustering of an Erdős–Rényi graph: mean degree / (N - 1)."""
    if n < 2:
        raise ValueError(f"need at least 2 nodes, got {n}")
    return mean_k / (n - 1)


def uncorrelated_clustering(stats: DegreeStats) -> float:
    """Clustering estimate for uncorrelated graphs with the given degree moments."""
    if stats.mean_k <= 0:
        raise UndefinedCoefficientError("uncorrelated estimate undefined for mean degree 0")
    return (stats.mean_k2 - stats.mean_k) ** 2 / (stats.n * stats.mean_k ** 3)


def ba_clustering(n: int, m: int) -> float:
    """Clustering estimate for Barabási–Albert growth with m edges per new node.

    Uses the natural logarithm (the asymptotic result is stated up to the
    log base; natural log is the convention adopted here).
    """
    if m < 1:
        raise ValueError(f"attachment count m must be >= 1, got {m}")
    if n < 2:
        raise ValueError(f"need at least 2 nodes, got {n}")
    return (m - 1) / 8.0 * math.log(n) ** 2 / n


def chung_lambda1(stats: DegreeStats) -> float:
    """Chung-style spectral-radius approximation from degree moments.

    max(<k^2>/<k>, sqrt(k_max)), taking the asymptotic (1 + o(1)) factor
    as exactly 1.
    """
    if stats.mean_k <= 0:
        raise UndefinedCoefficientError("spectral-radius estimate undefined for mean degree 0")
    return max(stats.mean_k2 / stats.mean_k, math.sqrt(stats.k_max))


def lambda1_gcc_contribution(lambda1: float, stats: DegreeStats) -> float:
    """Contribution of the leading eigenvalue to the global clustering.

    lambda1^3 / (N * (<k^2> - <k>)); an upper bound on the measured
    coefficient whenever the rest of the spectrum has negative third moment.
    """
    if stats.mean_k2 <= stats.mean_k:
        raise UndefinedCoefficientError("contribution undefined: <k^2> <= <k> (no wedges)")
    return lambda1 ** 3 / (stats.n * (stats.mean_k2 - stats.mean_k))


def _largest_component_matrix(g: Graph) -> sp.csr_matrix:
    labels = component_labels(g)
    if labels.size == 0:
        return sp.csr_matrix((0, 0))
    keep = labels == np.argmax(np.bincount(labels))
    full = sp.csr_matrix(
        (np.ones(g.indices.shape[0], dtype=np.float64), g.indices, g.indptr),
        shape=(g.node_count, g.node_count),
    )
    idx = np.flatnonzero(keep)
    return full[idx][:, idx].tocsr()


def _iterate(a: sp.csr_matrix, x: np.ndarray, tol: float, max_iter: int):
    # Positive diagonal shift: keeps the iteration convergent even when the
    # spectrum is symmetric (bipartite components), without changing the
    # reported Rayleigh quotient of A itself.
    shift = 1.0
    rho_prev = math.inf
    rho = 0.0
    for it in range(1, max_iter + 1):
        z = a @ x
        rho = float(x @ z)
        if abs(rho - rho_prev) <= tol * max(1.0, abs(rho)):
            return rho, it, True
        rho_prev = rho
        y = z + shift * x
        norm = float(np.linalg.norm(y))
        if norm == 0.0:
            return 0.0, it, True
        x = y / norm
    return rho, max_iter, False


def power_iteration_lambda1(g: Graph, tol: float = 1e-10, max_iter: int = 5000) -> float:
    """Dominant adjacency eigenvalue of the largest connected component.

    Deterministic all-ones start; convergence is judged on the relative
    change of the Rayleigh quotient.  If the first run stalls, one restart
    with a fixed perturbed vector is attempted before raising
    :class:`ConvergenceError` carrying the last iterate.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if g.edge_count == 0:
        return 0.0
    a = _largest_component_matrix(g)
    n = a.shape[0]
    x = np.full(n, 1.0 / math.sqrt(n))
    rho, iters, converged = _iterate(a, x, tol, max_iter)
    if converged:
        return rho
    bump = np.where(np.arange(n) % 2 == 0, 1.5, 0.5)
    x = bump / np.linalg.norm(bump)
    rho, more, converged = _iterate(a, x, tol, max_iter)
    if converged:
        return rho
    raise ConvergenceError("power iteration did not converge", rho, iters + more)


def bulk_third_moment(g: Graph, n_isolated: int = 1,
                      dense_cap: int = DEFAULT_DENSE_CAP) -> float:
    """Third spectral moment after removing the largest eigenvalues.

    Excludes the ``n_isolated`` largest eigenvalues (default 1: the leading
    eigenvalue of a structureless graph) and returns the mean cubed
    eigenvalue of the remainder, from a dense symmetric eigensolve.
    """
    if n_isolated < 0:
        raise ValueError(f"n_isolated must be >= 0, got {n_isolated}")
    n = g.node_count
    if n > dense_cap:
        raise CapacityError(f"N={n} exceeds dense cap {dense_cap}")
    if n == 0:
        return 0.0
    dense = np.zeros((n, n), dtype=np.float64)
    rows = np.repeat(np.arange(n), g.degrees)
    dense[rows, g.indices] = 1.0
    evals = np.linalg.eigvalsh(dense)
    kept = evals[: max(n - n_isolated, 0)]
    return float((kept ** 3).sum() / n)


def compute_baselines(g: Graph, stats: DegreeStats, *,
                      exact_lambda1: bool = False,
                      ba_m: int | None = None,
                      power_tol: float = 1e-10,
                      power_max_iter: int = 5000) -> BaselineSet:
    """Evaluate every applicable baseline for a graph.

    ``exact_lambda1`` adds the power-iteration eigenvalue and its
    contribution bound; ``ba_m`` adds the growth-model estimate when the
    attachment parameter is known.
    """
    lam_chung = chung_lambda1(stats)
    lam_exact = bound_exact = None
    if exact_lambda1:
        lam_exact = power_iteration_lambda1(g, tol=power_tol, max_iter=power_max_iter)
        bound_exact = lambda1_gcc_contribution(lam_exact, stats)
    return BaselineSet(
        c_er=er_clustering(stats.n, stats.mean_k),
        c_uc=uncorrelated_clustering(stats),
        lambda1_chung=lam_chung,
        gcc_bound_chung=lambda1_gcc_contribution(lam_chung, stats),
        c_ba=None if ba_m is None else ba_clustering(stats.n, ba_m),
        lambda1_exact=lam_exact,
        gcc_bound_lambda1=bound_exact,
    )
