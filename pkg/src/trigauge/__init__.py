"""Triangle-census screening for community detectability.

Given only an undirected graph's triangle count and degree moments, decide
whether it can contain detectable community structure: measure the global
clustering coefficient, compare it against the uncorrelated baseline and
the leading-eigenvalue bound, and report a three-way verdict with the
applicability assumptions checked.  Benchmark generators and an ensemble
sweep harness reproduce the validation experiments.
"""

from .baselines import (
    BaselineSet,
    ba_clustering,
    bulk_third_moment,
    chung_lambda1,
    compute_baselines,
    er_clustering,
    lambda1_gcc_contribution,
    power_iteration_lambda1,
    uncorrelated_clustering,
)
from .census import (
    TriangleCensus,
    WedgeSampleEstimate,
    approx_triangle_count,
    global_clustering,
    local_clustering,
    mean_local_clustering,
    spectral_gcc_oracle,
    triangle_census,
    wedge_count,
)
from .errors import (
    CapacityError,
    ConvergenceError,
    EdgeListParseError,
    GenerationError,
    TrigaugeError,
    UndefinedCoefficientError,
    UndefinedStatisticError,
)
from .generators import (
    GenReport,
    LfrSpec,
    NgSpec,
    gen_ba,
    gen_er,
    gen_lfr_like,
    gen_ng,
    gen_ws,
)
from .graph import (
    BuildReport,
    DegreeStats,
    EdgeList,
    Graph,
    build_graph,
    component_labels,
    degree_assortativity,
    degree_stats,
    is_bipartite,
    load_graph,
    parse_edge_list,
)
from .sweep import SweepRow, SweepSpec, emit, generate_graph, read_rows_csv, run_sweep
from .verdict import (
    CHUNG,
    POWER_ITERATION,
    AssessOptions,
    Assessment,
    AssumptionReport,
    Classification,
    Verdict,
    assess,
    check_assumptions,
    verdict_from_values,
)

__version__ = "0.1.0"
