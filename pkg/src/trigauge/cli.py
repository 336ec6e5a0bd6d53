"""Command-line interface.

Subcommands:

* ``assess``  — classify an edge-list file; exit code encodes the verdict
  (0 detectable, 1 indeterminate, 2 undetectable, >2 error).
* ``gen``     — write a generated benchmark graph as an edge list plus a
  membership sidecar (when communities exist) and a JSON generation report.
* ``sweep``   — run an ensemble sweep from a JSON spec, write CSV/JSON rows
  and optionally a figure.
* ``oracle``  — check the triangle census against the adjacency-trace
  identity and report the residual.
* ``plot``    — render the figure from previously written sweep rows.

Configuration is flags-only; no environment variables are consulted.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import TrigaugeError
from .census import global_clustering, spectral_gcc_oracle, triangle_census
from .generators import GenReport, LfrSpec, NgSpec, gen_ba, gen_er, gen_lfr_like, gen_ng, gen_ws
from .graph import degree_stats, load_graph
from .sweep import SweepSpec, emit, read_rows_csv, run_sweep
from .verdict import CHUNG, POWER_ITERATION, AssessOptions, assess

EXIT_DETECTABLE = 0
EXIT_INDETERMINATE = 1
EXIT_UNDETECTABLE = 2
EXIT_ERROR = 3
EXIT_USAGE = 4
EXIT_IDENTITY_FAILED = 5

_VERDICT_EXIT = {
    "detectable": EXIT_DETECTABLE,
    "indeterminate": EXIT_INDETERMINATE,
    "undetectable": EXIT_UNDETECTABLE,
}


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which would collide with the
    # "undetectable" verdict; route usage errors to a dedicated code.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _cmd_assess(args) -> int:
    graph, build = load_graph(args.file, node_count=args.num_nodes)
    options = AssessOptions(
        lambda1_source=POWER_ITERATION if args.lambda1 == "exact" else CHUNG,
    )
    result = assess(graph, options)
    if args.json:
        doc = result.to_dict()
        doc["input"] = {
            "path": str(args.file),
            "loops_dropped": build.loops_dropped,
            "duplicates_dropped": build.duplicates_dropped,
        }
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        v = result.verdict
        print(f"verdict:              {v.classification.value}")
        print(f"gcc:                  {v.gcc:.6g}")
        print(f"c_uc:                 {v.c_uc:.6g}")
        print(f"detectability bound:  {v.detectability_bound:.6g}")
        print(f"lambda1 ({v.lambda1_source}): {v.lambda1_used:.6g}")
        print(f"graph: N={result.n} E={result.e} triangles={result.triangles} "
              f"wedges={result.wedges} k_max={result.k_max}")
        if build.loops_dropped or build.duplicates_dropped:
            print(f"input cleaned: {build.loops_dropped} loops, "
                  f"{build.duplicates_dropped} duplicate edges dropped")
        for warning in result.warnings:
            print(f"warning: {warning}")
    return _VERDICT_EXIT[result.verdict.classification.value]


def _write_edge_list(graph, path, header: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# {header}\n")
        row = 0
        for u in range(graph.node_count):
            for v in graph.neighbors(u):
                if v > u:
                    fh.write(f"{u} {v}\n")
            row += 1


def _cmd_gen(args) -> int:
    seed = args.seed
    if args.model == "er":
        graph = gen_er(args.n, args.mean_k, seed)
        report = None
    elif args.model == "ba":
        graph = gen_ba(args.n, args.m, seed)
        report = None
    elif args.model == "ws":
        graph = gen_ws(args.n, args.k, args.p_rewire, seed)
        report = None
    elif args.model == "ng":
        graph, report = gen_ng(NgSpec(
            n=args.n, communities=args.communities, mean_k=args.mean_k,
            k_out=args.k_out, seed=seed,
        ))
    else:
        graph, report = gen_lfr_like(LfrSpec(
            n=args.n, mean_k=args.mean_k, k_max=args.k_max, gamma=args.gamma,
            gamma_c=args.gamma_c, community_size_range=(args.s_min, args.s_max),
            mu=args.mu, seed=seed,
        ))
    if report is None:
        report = GenReport(stats=degree_stats(graph), membership=None,
                           realized_mixing=None, rewiring_attempts=0)

    out = args.output
    _write_edge_list(graph, out, f"model={args.model} seed={seed} n={graph.node_count} e={graph.edge_count}")
    written = [out]
    if report.membership is not None:
        sidecar = out + ".membership"
        with open(sidecar, "w", encoding="utf-8") as fh:
            for node, comm in enumerate(report.membership):
                fh.write(f"{node} {int(comm)}\n")
        written.append(sidecar)
    report_path = out + ".genreport.json"
    with open(report_path, "w", encoding="utf-8") as fh:
        json.dump(report.to_dict(), fh, indent=2)
        fh.write("\n")
    written.append(report_path)
    print("\n".join(written))
    return 0


def _cmd_sweep(args) -> int:
    spec = SweepSpec.from_json_file(args.spec)
    rows = run_sweep(spec, workers=args.workers)
    emit(rows, args.output, fmt=args.format)
    print(args.output)
    if args.plot:
        from .plots import render_sweep_figure

        render_sweep_figure(rows, args.plot, title=f"{spec.model} sweep")
        print(args.plot)
    failed = sum(1 for r in rows if r.error)
    if failed:
        print(f"{failed} of {len(rows)} rows failed generation", file=sys.stderr)
    return 0


def _cmd_oracle(args) -> int:
    graph, _ = load_graph(args.file, node_count=args.num_nodes)
    census = triangle_census(graph)
    from_triangles = global_clustering(census)
    from_trace = spectral_gcc_oracle(graph, dense_cap=args.dense_cap)
    residual = abs(from_triangles - from_trace)
    print(f"gcc from triangles: {from_triangles:.17g}")
    print(f"gcc from trace:     {from_trace:.17g}")
    print(f"residual:           {residual:.3e}")
    return 0 if residual <= args.tol else EXIT_IDENTITY_FAILED


def _cmd_plot(args) -> int:
    from .plots import render_sweep_figure

    rows = read_rows_csv(args.rows)
    render_sweep_figure(rows, args.output)
    print(args.output)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="trigauge",
                     description="Assess community detectability from triangle counts")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_assess = sub.add_parser("assess", help="assess an edge-list file")
    p_assess.add_argument("file")
    p_assess.add_argument("--lambda1", choices=("chung", "exact"), default="chung",
                          help="leading-eigenvalue source for the upper bound")
    p_assess.add_argument("--json", action="store_true", help="emit the full JSON document")
    p_assess.add_argument("--num-nodes", type=int, default=None,
                          help="override node count (adds trailing isolated nodes)")
    p_assess.set_defaults(func=_cmd_assess)

    p_gen = sub.add_parser("gen", help="generate a benchmark graph")
    gen_sub = p_gen.add_subparsers(dest="model", required=True, parser_class=_Parser)

    def _common(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("-o", "--output", required=True)
        p.set_defaults(func=_cmd_gen)

    p = gen_sub.add_parser("er", help="Erdős–Rényi G(n, p)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mean-k", type=float, required=True)
    _common(p)
    p = gen_sub.add_parser("ba", help="preferential-attachment growth")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _common(p)
    p = gen_sub.add_parser("ws", help="rewired ring lattice")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p-rewire", type=float, required=True)
    _common(p)
    p = gen_sub.add_parser("ng", help="planted partition of equal blocks")
    p.add_argument("--n", type=int, default=256)
    p.add_argument("--communities", type=int, default=4)
    p.add_argument("--mean-k", type=float, default=16.0)
    p.add_argument("--k-out", type=float, default=4.0)
    _common(p)
    p = gen_sub.add_parser("lfr", help="power-law benchmark with communities")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--mean-k", type=float, default=20.0)
    p.add_argument("--k-max", type=int, default=50)
    p.add_argument("--gamma", type=float, default=2.0)
    p.add_argument("--gamma-c", type=float, default=1.0)
    p.add_argument("--s-min", type=int, default=20)
    p.add_argument("--s-max", type=int, default=100)
    p.add_argument("--mu", type=float, required=True)
    _common(p)

    p_sweep = sub.add_parser("sweep", help="run an ensemble sweep from a JSON spec")
    p_sweep.add_argument("--spec", required=True)
    p_sweep.add_argument("-o", "--output", required=True)
    p_sweep.add_argument("--format", choices=("csv", "json"), default=None,
                         help="default: inferred from output suffix")
    p_sweep.add_argument("--workers", type=int, default=1)
    p_sweep.add_argument("--plot", default=None, help="also render a figure to this path")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_oracle = sub.add_parser("oracle", help="triangle vs. trace identity check")
    p_oracle.add_argument("file")
    p_oracle.add_argument("--num-nodes", type=int, default=None)
    p_oracle.add_argument("--dense-cap", type=int, default=2000)
    p_oracle.add_argument("--tol", type=float, default=1e-10)
    p_oracle.set_defaults(func=_cmd_oracle)

    p_plot = sub.add_parser("plot", help="render a figure from sweep CSV rows")
    p_plot.add_argument("rows")
    p_plot.add_argument("-o", "--output", required=True)
    p_plot.set_defaults(func=_cmd_plot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TrigaugeError as exc:
        print(f"trigauge: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"trigauge: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
