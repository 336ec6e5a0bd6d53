"""Ensemble sweeps: generate, assess, and serialize one row per graph.

A sweep walks a parameter grid for one generator model, draws
``replicates`` graphs per grid point with per-row derived seeds, runs the
full assessment on each, and emits the rows as CSV or JSON.  Rows are
deterministic in the spec (including the base seed) and independent of the
worker count; a failed generation becomes a row with the ``error`` column
set and the sweep continues.
"""

from __future__ import annotations

import csv
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields

from .baselines import bulk_third_moment, power_iteration_lambda1
from .errors import TrigaugeError
from .generators import LfrSpec, NgSpec, gen_ba, gen_er, gen_lfr_like, gen_ng, gen_ws
from .graph import Graph
from .seeding import derive_seed
from .verdict import CHUNG, POWER_ITERATION, AssessOptions, assess

MODELS = ("er", "ba", "ws", "ng", "lfr")


@dataclass(frozen=True)
class SweepSpec:
    model: str
    parameter: str | None = None
    grid: tuple = ()
    replicates: int = 100
    base_seed: int = 0
    model_params: dict = field(default_factory=dict)
    lambda1_source: str = CHUNG
    include_lambda1_exact: bool = False
    include_bulk_third_moment: bool = False
    dense_cap: int = 2000

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}, expected one of {MODELS}")
        if self.replicates < 1:
            raise ValueError(f"replicates must be >= 1, got {self.replicates}")
        if self.parameter is not None and len(self.grid) == 0:
            raise ValueError("parameter given but grid is empty")
        object.__setattr__(self, "grid", tuple(self.grid) if self.parameter is not None else (None,))

    @classmethod
    def from_dict(cls, data: dict) -> "SweepSpec":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown sweep spec keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json_file(cls, path) -> "SweepSpec":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


@dataclass(frozen=True)
class SweepRow:
    model: str
    parameter: str | None
    value: float | None
    replicate: int
    seed: int
    n: int | None
    e: int | None
    mean_k: float | None
    mean_k2: float | None
    k_max: int | None
    triangles: int | None
    gcc: float | None
    c_uc: float | None
    detectability_bound: float | None
    lambda1_chung: float | None
    lambda1_exact: float | None
    bulk_third_moment: float | None
    classification: str | None
    warnings: str
    error: str


ROW_FIELDS = tuple(f.name for f in fields(SweepRow))
_INT_FIELDS = {"replicate", "seed", "n", "e", "k_max", "triangles"}
_FLOAT_FIELDS = {"value", "mean_k", "mean_k2", "gcc", "c_uc", "detectability_bound",
                 "lambda1_chung", "lambda1_exact", "bulk_third_moment"}


def generate_graph(model: str, params: dict, seed: int) -> Graph:
    """Instantiate one graph of the given model; params use the model's names."""
    params = dict(params)
    if model == "er":
        return gen_er(n=int(params["n"]), mean_k=float(params["mean_k"]), seed=seed)
    if model == "ba":
        return gen_ba(n=int(params["n"]), m=int(params["m"]), seed=seed)
    if model == "ws":
        return gen_ws(n=int(params["n"]), k=int(params["k"]),
                      p_rewire=float(params["p_rewire"]), seed=seed)
    if model == "ng":
        return gen_ng(NgSpec(**params, seed=seed))[0]
    if model == "lfr":
        if "community_size_range" in params:
            params["community_size_range"] = tuple(params["community_size_range"])
        return gen_lfr_like(LfrSpec(**params, seed=seed))[0]
    raise ValueError(f"unknown model {model!r}")


def _compute_row(spec: SweepSpec, param_index: int, value, replicate: int) -> SweepRow:
    seed = derive_seed(spec.base_seed, "sweep", param_index, replicate)
    base = dict(
        model=spec.model,
        parameter=spec.parameter,
        value=None if value is None else float(value),
        replicate=replicate,
        seed=seed,
    )
    empty = {name: None for name in ROW_FIELDS if name not in base and name not in ("warnings", "error")}
    params = dict(spec.model_params)
    if spec.parameter is not None:
        params[spec.parameter] = value
    try:
        graph = generate_graph(spec.model, params, seed)
        exact = spec.lambda1_source in (POWER_ITERATION, "exact")
        assessment = assess(graph, AssessOptions(
            lambda1_source=POWER_ITERATION if exact else CHUNG,
        ))
        warnings = list(assessment.warnings)
        lambda1_exact = assessment.baselines.lambda1_exact
        if spec.include_lambda1_exact and lambda1_exact is None:
            lambda1_exact = power_iteration_lambda1(graph)
        bulk = None
        if spec.include_bulk_third_moment:
            if graph.node_count <= spec.dense_cap:
                bulk = bulk_third_moment(graph, n_isolated=1, dense_cap=spec.dense_cap)
            else:
                warnings.append("bulk third moment skipped: graph above dense cap")
        return SweepRow(
            **base,
            n=assessment.n,
            e=assessment.e,
            mean_k=assessment.mean_k,
            mean_k2=assessment.mean_k2,
            k_max=assessment.k_max,
            triangles=assessment.triangles,
            gcc=assessment.verdict.gcc,
            c_uc=assessment.verdict.c_uc,
            detectability_bound=assessment.verdict.detectability_bound,
            lambda1_chung=assessment.baselines.lambda1_chung,
            lambda1_exact=lambda1_exact,
            bulk_third_moment=bulk,
            classification=assessment.verdict.classification.value,
            warnings="; ".join(warnings),
            error="",
        )
    except (TrigaugeError, ValueError) as exc:
        return SweepRow(**base, **empty, warnings="", error=str(exc))


def _row_star(task) -> SweepRow:
    return _compute_row(*task)


def run_sweep(spec: SweepSpec, workers: int = 1) -> list[SweepRow]:
    """All rows of the sweep, ordered by (grid position, replicate)."""
    tasks = [
        (spec, pi, value, rep)
        for pi, value in enumerate(spec.grid)
        for rep in range(spec.replicates)
    ]
    if workers <= 1:
        return [_row_star(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunk = max(1, len(tasks) // (8 * workers))
        return list(pool.map(_row_star, tasks, chunksize=chunk))


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def emit(rows, destination, fmt: str | None = None) -> None:
    """Write rows as CSV (fixed column order, header) or a JSON array.

    ``fmt`` defaults to the destination suffix; floats are serialized with
    17 significant digits so a CSV -> parse -> JSON round trip is exact.
    """
    if fmt is None:
        fmt = "json" if str(destination).lower().endswith(".json") else "csv"
    if fmt not in ("csv", "json"):
        raise ValueError(f"unknown output format {fmt!r}")
    with open(destination, "w", encoding="utf-8", newline="") as fh:
        if fmt == "csv":
            writer = csv.writer(fh)
            writer.writerow(ROW_FIELDS)
            for row in rows:
                writer.writerow([_cell(getattr(row, name)) for name in ROW_FIELDS])
        else:
            payload = [{name: getattr(row, name) for name in ROW_FIELDS} for row in rows]
            json.dump(payload, fh, indent=2)
            fh.write("\n")


def _coerce(name: str, text: str):
    if name in ("warnings", "error"):
        return text
    if text == "":
        return None
    if name in _INT_FIELDS:
        return int(text)
    if name in _FLOAT_FIELDS:
        return float(text)
    return text


def read_rows_csv(path) -> list[SweepRow]:
    """Parse a CSV previously written by :func:`emit` back into rows."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if tuple(header) != ROW_FIELDS:
            raise ValueError(f"unexpected CSV header: {header}")
        return [
            SweepRow(**{name: _coerce(name, cell) for name, cell in zip(header, line)})
            for line in reader
        ]
