"""Command line entry point: ``topoindex <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Any, Sequence

import numpy as np

from . import harness
from .degree_indices import IndexKind, IndexParams, degree_index, vertex_function
from .distance_indices import DistanceIndexKind, distance_index
from .dsl import edges_spec, parse_graph_spec
from .enumeration import (
    all_graphs,
    all_trees,
    chemical_trees,
    extremal_search,
    parse_tree_class,
    tree_degree_sequences,
    trees_with_degree_sequence,
)
from .graph import Graph, GraphError, format_edge_list, parse_degree_sequence, read_edge_list
from .random_models import (
    DEFAULT_RESAMPLE_BUDGET,
    HeterogeneousModel,
    clt_experiment,
    giant_component_experiment,
    parse_profile,
)
from .spectral import adjacency_spectrum, char_poly, sombor_spectrum, vertex_energies
from .tables import table_rows

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2

DEFAULT_INDICES = (
    "M1", "M2", "F", "SO", "Randic", "ABC", "GA", "H", "SCI", "SDD", "irr", "irr_t", "sigma", "W", "Sz", "Mostar", "Gut",
)


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# Output -----------------------------------------------------------------------


def _text_value(v: Any) -> str:
    if isinstance(v, bool) or v is None:
        return str(v)
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.6g}"
    if isinstance(v, (list, tuple)):
        return " ".join(_text_value(x) for x in v)
    return str(v)


def _json_safe(v: Any) -> Any:
    if isinstance(v, dict):
        return {str(k): _json_safe(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_json_safe(x) for x in v]
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if math.isfinite(v) else str(v)
    return v


def render(rows: list[dict], fmt: str, meta: dict | None = None) -> str:
    if fmt == "json":
        doc = {"rows": rows} if meta is None else {**meta, "rows": rows}
        return json.dumps(_json_safe(doc), indent=2, sort_keys=True) + "\n"
    if not rows:
        return ""
    fields = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: json.dumps(_json_safe(v)) if isinstance(v, (list, tuple)) else _json_safe(v) for k, v in r.items()})
        return buf.getvalue()
    cells = [[_text_value(r[k]) for k in fields] for r in rows]
    widths = [max(len(f), *(len(c[i]) for c in cells)) for i, f in enumerate(fields)]
    lines = ["  ".join(f.ljust(w) for f, w in zip(fields, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# Graph input ------------------------------------------------------------------


def _with_seed(spec: str, seed: int) -> str:
    base, sep, rest = spec.partition("|")
    name = base.split(":", 1)[0].strip().lower()
    if name in ("tree", "rcg") and "seed=" not in base:
        base = f"{base},seed={seed}"
    return base + sep + rest


def load_graph(args) -> Graph:
    if getattr(args, "input", None):
        g, _ = read_edge_list(args.input)
        return g
    if not getattr(args, "graph", None):
        raise UsageError("give a graph with --graph SPEC or --input FILE")
    return parse_graph_spec(_with_seed(args.graph, args.seed or 0))


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", help="graph spec, e.g. 'cycle:6', 'cat:3,4', 'rcg:n=10,extra=3'")
    p.add_argument("--input", help="edge-list file")


def _split(values: Sequence[str] | None) -> list[str]:
    out = []
    for v in values or []:
        out += [x.strip() for x in v.split(",") if x.strip()]
    return out


# Subcommands ------------------------------------------------------------------


def cmd_compute(args) -> int:
    g = load_graph(args)
    names = _split(args.index) or list(DEFAULT_INDICES)
    params = IndexParams(
        a=args.a, b=args.b, c=args.c, tau=args.tau, r=args.r, f=vertex_function(args.f) if args.f else None
    )
    rows = []
    for name in names:
        try:
            kind = IndexKind.parse(name)
            value = degree_index(g, kind, params)
            label = kind.value
        except KeyError:
            kind = DistanceIndexKind.parse(name)
            value = distance_index(g, kind, a=args.a if args.a is not None else 1.0, b=args.b if args.b is not None else 1.0)
            label = kind.value
        rows.append({"index": label, "value": value})
    emit(args, render(rows, args.format, {"n": g.n, "m": g.m}))
    return EXIT_OK


def cmd_generate(args) -> int:
    g = load_graph(args)
    if args.format == "text":
        emit(args, format_edge_list(g, comment=_with_seed(args.graph, args.seed or 0) if args.graph else args.input))
    else:
        rows = [{"u": u, "v": v} for u, v in g.edges]
        emit(args, render(rows, args.format, {"n": g.n, "m": g.m, "spec": edges_spec(g)}))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    what = args.what
    if what in ("labeled", "with-degrees"):
        if not args.degrees:
            raise UsageError(f"'{what}' needs --degrees")
        graphs = list(trees_with_degree_sequence(parse_degree_sequence(args.degrees), labeled=what == "labeled"))
    elif args.n is None:
        raise UsageError(f"'{what}' needs --n")
    elif what == "trees":
        graphs = list(all_trees(args.n, max_degree=args.max_degree))
    elif what == "chemical":
        graphs = list(chemical_trees(args.n))
    elif what == "graphs":
        graphs = all_graphs(args.n, connected=args.connected)
    else:
        seqs = list(tree_degree_sequences(args.n, args.max_degree))
        rows = [{"degrees": list(s)} for s in seqs]
        emit(args, render(rows if args.list else [{"count": len(seqs)}], args.format, {"count": len(seqs)}))
        return EXIT_OK
    if args.list:
        rows = [{"index": i, "degrees": sorted(g.degrees, reverse=True), "spec": edges_spec(g)} for i, g in enumerate(graphs)]
    else:
        rows = [{"count": len(graphs)}]
    emit(args, render(rows, args.format, {"count": len(graphs)}))
    return EXIT_OK


def cmd_extremal(args) -> int:
    cls = parse_tree_class(args.tree_class)
    res = extremal_search(cls, args.n, args.objective, args.direction)
    rows = [{"degrees": sorted(t.degrees, reverse=True), "spec": edges_spec(t)} for t in res.trees]
    meta = {"class": cls.label(args.n), "class_size": res.class_size, "value": res.value, "direction": args.direction}
    if args.format == "text":
        head = f"{cls.label(args.n)}  {args.direction} {args.objective} = {res.value:.6g}  over {res.class_size} trees\n"
        emit(args, head + render(rows, "text"))
    else:
        emit(args, render(rows, args.format, meta))
    return EXIT_OK


def cmd_spectra(args) -> int:
    g = load_graph(args)
    if args.matrix == "sombor":
        s = sombor_spectrum(g)
        rows = [{"i": i + 1, "eigenvalue": float(x)} for i, x in enumerate(s.mu)]
        meta = {"energy": s.sombor_energy, "spread": s.spread, "frobenius_norm": s.frobenius_norm, "forgotten": s.forgotten}
    else:
        s = adjacency_spectrum(g)
        ve = vertex_energies(g, s)
        rows = [{"i": i + 1, "eigenvalue": float(x), "vertex_energy": float(ve[i])} for i, x in enumerate(s.eigenvalues)]
        meta = {"energy": s.energy, "spread": s.spread, "sweeps": s.sweeps}
    if args.charpoly:
        meta["charpoly"] = [int(c) if float(c).is_integer() else float(c) for c in char_poly(g)]
    if args.format == "text":
        head = "  ".join(f"{k}={_text_value(v)}" for k, v in meta.items()) + "\n"
        emit(args, head + render(rows, "text"))
    else:
        emit(args, render(rows, args.format, meta))
    return EXIT_OK


def cmd_random(args) -> int:
    seed = args.seed or 0
    if args.model == "config":
        if not args.profile:
            raise UsageError("config model needs --profile, e.g. '1:0.5,3:0.5'")
        rep = giant_component_experiment(
            parse_profile(args.profile), args.n, args.trials, seed, args.budget, harness.default_workers()
        )
        summary = rep.summary()
        rows = [{"trial": i, "largest_fraction": f, "erased": e} for i, (f, e) in enumerate(zip(rep.fractions, rep.erased))]
        meta = {k: v for k, v in summary.items() if k not in ("fractions", "erased")}
    else:
        if args.beta < 1:
            model = HeterogeneousModel.random_weights(args.n, args.p, args.beta, seed)
        else:
            model = HeterogeneousModel.uniform(args.n, args.p)
        rep = clt_experiment(model, args.f, args.samples, seed)
        rows = [{"sample": i, "value": v} for i, v in enumerate(rep.values)]
        meta = {"f": args.f, "n": args.n, "p": args.p, "beta": args.beta, "seed": seed, **rep.summary()}
    if args.format == "text":
        emit(args, "\n".join(f"{k}: {_text_value(v)}" for k, v in meta.items()) + "\n")
    else:
        emit(args, render(rows, args.format, meta))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.replay:
        if not args.fingerprint:
            raise UsageError("--replay needs --fingerprint")
        params = json.loads(args.params) if args.params else {}
        outcomes = harness.replay(args.replay, args.fingerprint, params)
        rows = [{"label": o.label, "holds": o.holds, "lhs": o.lhs, "rhs": o.rhs} for o in outcomes]
        emit(args, render(rows, args.format, {"claim": args.replay, "fingerprint": args.fingerprint}))
        failed = harness.REGISTRY[args.replay].status is harness.Status.VERIFIED and not all(o.holds for o in outcomes)
        return EXIT_VERIFY if failed else EXIT_OK
    config = harness.load_config(args.config) if args.config else harness.SuiteConfig()
    if args.claims:
        config = harness.SuiteConfig(config.seed, tuple(_split(args.claims)), config.overrides)
    if args.seed is not None:
        config = harness.SuiteConfig(args.seed, config.claims, config.overrides)
    workers = args.workers if args.workers is not None else harness.default_workers()
    reports = harness.run_suite(config, workers=workers)
    if args.format == "json":
        emit(args, harness.reports_to_json(reports, config))
    elif args.format == "csv":
        emit(args, harness.reports_to_csv(reports))
    else:
        lines = [
            f"{r.claim_id:<5} {r.status.value:<11} {r.verdict:<8} items={r.corpus_size} checks={r.checks} "
            f"violations={r.violation_count} equalities={r.equality_count}"
            for r in reports
        ]
        code = harness.suite_exit_code(reports)
        lines.append(f"exit {code}: {sum(r.failed for r in reports)} verified claim(s) failed")
        emit(args, "\n".join(lines) + "\n")
    return harness.suite_exit_code(reports)


def cmd_table(args) -> int:
    degrees = None
    if args.degrees:
        # keep the given order: table 2 pairs consecutive entries
        degrees = [int(x) for x in args.degrees.replace(",", " ").split()]
    rows = [
        {"key": r.key, "expected": r.expected, "computed": r.computed, "diff": r.diff, "ok": r.ok, "note": r.note}
        for r in table_rows(args.which, degrees)
    ]
    if args.which == 2:
        rows = [{"index": r["key"], "value": r["computed"]} for r in rows]
    emit(args, render(rows, args.format, {"table": args.which}))
    return EXIT_OK


# Parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = Parser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="base random seed")
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--out", help="write output to this path instead of stdout")

    parser = Parser(prog="topoindex", description="Topological indices of graphs and verification of their bounds.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=Parser)

    p = sub.add_parser("compute", parents=[common], help="evaluate indices on a graph")
    _add_graph_args(p)
    p.add_argument("--index", action="append", help="index names, comma separated (repeatable)")
    p.add_argument("--a", type=float, default=None, help="SEI base, or Gutman distance exponent")
    p.add_argument("--b", type=float, default=None, help="Gutman degree exponent")
    p.add_argument("--c", type=float, default=1.0, help="Pi1c exponent")
    p.add_argument("--tau", type=float, default=-0.5, help="Randic exponent")
    p.add_argument("--r", type=float, default=0.0, help="IAG shift")
    p.add_argument("--f", help="vertex function for Hf: x^2, xlnx, x^p, lz:n")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("generate", parents=[common], help="build a graph and print its edge list")
    _add_graph_args(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate trees, degree sequences or small graphs")
    p.add_argument("what", choices=("trees", "chemical", "labeled", "with-degrees", "sequences", "graphs"))
    p.add_argument("--n", type=int)
    p.add_argument("--degrees", help="degree sequence for 'labeled' and 'with-degrees'")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--list", action="store_true", help="list members instead of counting")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("extremal", parents=[common], help="exhaustive optimum over a tree class")
    p.add_argument("--class", dest="tree_class", required=True, help="PT:p, ST:s, BT:b, DT:b or MT, optional ':chem'")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--objective", default="hf:x^2")
    p.add_argument("--direction", choices=("min", "max"), default="min")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("spectra", parents=[common], help="eigenvalues, energy and vertex energies")
    _add_graph_args(p)
    p.add_argument("--matrix", choices=("adjacency", "sombor"), default="adjacency")
    p.add_argument("--charpoly", action="store_true", help="also print characteristic polynomial coefficients")
    p.set_defaults(func=cmd_spectra)

    p = sub.add_parser("random", parents=[common], help="random graph experiments")
    p.add_argument("--model", choices=("config", "hetero"), required=True)
    p.add_argument("--profile", help="degree profile k:fraction,... for the configuration model")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--budget", type=int, default=DEFAULT_RESAMPLE_BUDGET, help="resampling attempts before erasing")
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--f", default="randic:-0.5", help="edge function: randic:<tau>, one, sum, product")
    p.add_argument("--samples", type=int, default=500)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("verify", parents=[common], help="run the claim verification suite")
    p.add_argument("--config", help="JSON suite config (seed, claims, overrides)")
    p.add_argument("--claims", action="append", help="claim ids, comma separated")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--replay", metavar="CLAIM", help="re-check one item of a claim")
    p.add_argument("--fingerprint", help="graph fingerprint for --replay")
    p.add_argument("--params", help="JSON object of item parameters for --replay")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common], help="reproduce the reference tables")
    p.add_argument("which", type=int, choices=(1, 2, 3))
    p.add_argument("--degrees", help="degree list for table 2, paired in the given order")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"topoindex {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
