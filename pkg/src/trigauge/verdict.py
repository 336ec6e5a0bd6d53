"""Three-way detectability verdict and the assumption checklist.

The decision rule compares the measured global clustering coefficient C
against two reference values:

* the uncorrelated estimate ``c_uc`` — if C <= c_uc the graph sits where a
  structureless graph with the same degree moments would, so no detectable
  communities (conservative criterion);
* the moment-based leading-eigenvalue bound — if C is below it the excess
  clustering is within what the leading eigenvalue alone can produce, so
  the outcome is indeterminate; at or above it, some detectable structure
  must be present.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

from .baselines import BaselineSet, compute_baselines, lambda1_gcc_contribution
from .census import TriangleCensus, global_clustering, triangle_census
from .errors import UndefinedCoefficientError
from .graph import DegreeStats, Graph, degree_assortativity, degree_stats, is_bipartite


class Classification(str, enum.Enum):
    UNDETECTABLE = "undetectable"
    INDETERMINATE = "indeterminate"
    DETECTABLE = "detectable"


CHUNG = "chung"
POWER_ITERATION = "power_iteration"


@dataclass(frozen=True)
class Verdict:
    classification: Classification
    gcc: float
    c_uc: float
    detectability_bound: float
    lambda1_used: float | None = None
    lambda1_source: str | None = None    # CHUNG or POWER_ITERATION


@dataclass(frozen=True)
class AssumptionReport:
    bipartite: bool
    assumption3_holds: bool | None       # lambda1 >= <k^2>/<k> - 1; None without exact lambda1
    small_n_warning: bool
    density_warning: bool
    assortativity: float | None


@dataclass(frozen=True)
class AssessOptions:
    lambda1_source: str = CHUNG
    power_tol: float = 1e-10
    power_max_iter: int = 5000
    small_n_threshold: int = 100
    density_threshold: float = 0.1
    ba_m: int | None = None


@dataclass(frozen=True)
class Assessment:
    verdict: Verdict
    assumptions: AssumptionReport
    baselines: BaselineSet
    n: int
    e: int
    mean_k: float
    mean_k2: float
    k_max: int
    triangles: int
    wedges: int
    warnings: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "verdict": {
                "classification": self.verdict.classification.value,
                "gcc": self.verdict.gcc,
                "c_uc": self.verdict.c_uc,
                "detectability_bound": self.verdict.detectability_bound,
                "lambda1_used": self.verdict.lambda1_used,
                "lambda1_source": self.verdict.lambda1_source,
            },
            "assumptions": {
                "bipartite": self.assumptions.bipartite,
                "assumption3_holds": self.assumptions.assumption3_holds,
                "small_n_warning": self.assumptions.small_n_warning,
                "density_warning": self.assumptions.density_warning,
                "assortativity": self.assumptions.assortativity,
            },
            "baselines": {
                "c_er": self.baselines.c_er,
                "c_uc": self.baselines.c_uc,
                "c_ba": self.baselines.c_ba,
                "lambda1_chung": self.baselines.lambda1_chung,
                "lambda1_exact": self.baselines.lambda1_exact,
                "gcc_bound_lambda1": self.baselines.gcc_bound_lambda1,
                "gcc_bound_chung": self.baselines.gcc_bound_chung,
            },
            "graph": {
                "n": self.n,
                "e": self.e,
                "mean_k": self.mean_k,
                "mean_k2": self.mean_k2,
                "k_max": self.k_max,
                "triangles": self.triangles,
                "wedges": self.wedges,
                "gcc": self.verdict.gcc,
            },
            "warnings": list(self.warnings),
        }


def verdict_from_values(gcc: float, c_uc: float, bound: float) -> Verdict:
    """Pure three-way classification.

    Boundary conventions: gcc equal to c_uc is still undetectable (the
    first criterion is non-strict), gcc equal to the bound is detectable
    (the second criterion is strict).
    """
    for name, value in (("gcc", gcc), ("c_uc", c_uc), ("bound", bound)):
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")
    if bound < 0:
        raise ValueError(f"bound must be non-negative, got {bound!r}")
    if gcc <= c_uc:
        cls = Classification.UNDETECTABLE
    elif gcc < bound:
        cls = Classification.INDETERMINATE
    else:
        cls = Classification.DETECTABLE
    return Verdict(cls, gcc, c_uc, bound)


def check_assumptions(g: Graph, stats: DegreeStats, lambda1: float | None = None, *,
                      small_n_threshold: int = 100,
                      density_threshold: float = 0.1) -> AssumptionReport:
    """Evaluate the method's applicability assumptions for a graph.

    The eigenvalue condition is only decidable when a numerically computed
    lambda1 is supplied; with the moment approximation it holds by
    construction for near-Poisson degree distributions, so it is reported
    as None.
    """
    assumption3 = None
    if lambda1 is not None and stats.mean_k > 0:
        assumption3 = bool(lambda1 >= stats.mean_k2 / stats.mean_k - 1.0)
    return AssumptionReport(
        bipartite=is_bipartite(g),
        assumption3_holds=assumption3,
        small_n_warning=stats.n < small_n_threshold,
        density_warning=stats.n > 0 and stats.mean_k / stats.n > density_threshold,
        assortativity=degree_assortativity(g),
    )


def assess(g: Graph, options: AssessOptions = AssessOptions()) -> Assessment:
    """Full detectability assessment of a graph.

    Computes the triangle census, degree moments, all baselines, the
    assumption report and the three-way verdict.  Raises
    :class:`UndefinedCoefficientError` when the graph has no wedges (the
    clustering coefficient does not exist there).

    The comparison bound is capped at 1: a clustering coefficient can never
    exceed 1, so any larger bound is vacuous and would make a maximally
    clustered graph (e.g. a clique union) undecidable.
    """
    census = triangle_census(g)
    if census.wedge_count == 0:
        raise UndefinedCoefficientError("cannot assess a graph without wedges")
    stats = degree_stats(g)
    gcc = global_clustering(census)

    exact = options.lambda1_source == POWER_ITERATION
    base = compute_baselines(
        g, stats,
        exact_lambda1=exact,
        ba_m=options.ba_m,
        power_tol=options.power_tol,
        power_max_iter=options.power_max_iter,
    )
    if exact:
        lambda1, source = base.lambda1_exact, POWER_ITERATION
        raw_bound = base.gcc_bound_lambda1
    else:
        lambda1, source = base.lambda1_chung, CHUNG
        raw_bound = base.gcc_bound_chung
    bound = min(raw_bound, 1.0)

    verdict = replace(
        verdict_from_values(gcc, base.c_uc, bound),
        lambda1_used=lambda1,
        lambda1_source=source,
    )
    assumptions = check_assumptions(
        g, stats,
        lambda1 if exact else None,
        small_n_threshold=options.small_n_threshold,
        density_threshold=options.density_threshold,
    )

    warnings: list[str] = []
    if assumptions.bipartite:
        warnings.append(
            "graph is bipartite: the spectral premise (positive isolated eigenvalues) "
            "fails, verdict is unreliable"
        )
    if assumptions.small_n_warning:
        warnings.append(f"small graph (N={stats.n} < {options.small_n_threshold}): asymptotic baselines are rough")
    if assumptions.density_warning:
        warnings.append(f"dense graph (mean degree / N > {options.density_threshold}): sparse-graph baselines are rough")
    if assumptions.assumption3_holds is False:
        warnings.append("lambda1 < <k^2>/<k> - 1: the conservative ordering of the two criteria is lost")
    if bound < base.c_uc:
        warnings.append("indeterminate band is inverted (bound below c_uc): eigenvalue assumption violated")
    if raw_bound > 1.0:
        warnings.append("detectability bound saturated at 1 (degenerate dense regime)")

    return Assessment(
        verdict=verdict,
        assumptions=assumptions,
        baselines=base,
        n=stats.n,
        e=stats.e,
        mean_k=stats.mean_k,
        mean_k2=stats.mean_k2,
        k_max=stats.k_max,
        triangles=census.total_triangles,
        wedges=census.wedge_count,
        warnings=tuple(warnings),
    )
