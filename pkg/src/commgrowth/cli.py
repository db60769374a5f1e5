"""Command-line front end.

Exit codes: 0 success, 2 invalid parameters, 3 size cap or budget exceeded,
4 a computed value disagrees with its formula or an acceptance check fails.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Sequence

from . import __version__
from . import finite_groups as fg
from . import heisenberg as hz
from . import pgl2
from . import repro
from . import twin_covers as tc
from .dirichlet import TruncatedDirichletSeries, asymptotic_ratio_probe
from .errors import BudgetExceeded, SizeCapExceeded

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CAP = 3
EXIT_MISMATCH = 4


@dataclass
class RunConfig:
    subcommand: str
    params: dict = field(default_factory=dict)
    format: str = "csv"
    out: str | None = None
    seed: int = 0

    def echo(self) -> dict:
        return asdict(self)


def _float12(x: float) -> float:
    return float(f"{x:.12g}")


def _round_floats(obj):
    if isinstance(obj, float):
        return _float12(obj)
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _csv_text(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_float12(x) if isinstance(x, float) else x for x in row])
    return buf.getvalue()


def _emit(cfg: RunConfig, header: Sequence[str], rows: Sequence[Sequence], extra: dict | None = None, csv_text: str | None = None):
    if cfg.format == "json":
        payload = {
            "version": __version__,
            "config": cfg.echo(),
            "columns": list(header),
            "rows": [list(r) for r in rows],
        }
        if extra:
            payload.update(extra)
        text = json.dumps(_round_floats(payload), sort_keys=True, indent=1) + "\n"
    else:
        text = csv_text if csv_text is not None else _csv_text(header, rows)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_primes(text: str | None) -> list[int]:
    if not text:
        return []
    return [int(x) for x in text.split(",") if x.strip()]


# subcommands ----------------------------------------------------------------


def cmd_heisenberg(args, cfg: RunConfig) -> int:
    if args.series:
        series = hz.global_series(args.series)
        return _emit_series(cfg, series, args.probe)
    rows = []
    for n in range(0, args.max_n + 1) if args.include_zero else range(1, args.max_n + 1):
        rows.append([args.p, n, hz.local_count_formula(args.p, n), hz.local_count(args.p, n)])
    _emit(cfg, ["p", "n", "formula", "oracle"], rows)
    return EXIT_OK if all(r[2] == r[3] for r in rows) else EXIT_MISMATCH


def cmd_pgl2(args, cfg: RunConfig) -> int:
    ns = range(1, args.max_n + 1) if args.max_n else [args.n]
    rows = []
    for n in ns:
        formula = pgl2.cartan_index(args.p, n)
        if args.oracle:
            other = pgl2.cartan_index_oracle(args.p, n, cap=args.cap)
        else:
            other = pgl2.coset_count(args.p, n)
        rows.append([args.p, n, formula, other, formula == other])
    header = ["q", "n", "formula", "oracle" if args.oracle else "coset_count", "match"]
    rows_out = [[q, n, f, o, str(m).lower()] for q, n, f, o, m in rows]
    _emit(cfg, header, rows_out)
    return EXIT_OK if all(r[4] for r in rows) else EXIT_MISMATCH


def cmd_tree(args, cfg: RunConfig) -> int:
    if args.graph:
        Y, base = tc.DartMultigraph.from_text(Path(args.graph).read_text())
        y0 = base if base is not None else 0
    else:
        Y, y0 = tc.DartMultigraph.bouquet(args.rank), 0
    header = ["degree", "pointed_covers", "twin_covers", "minimal_classes"]
    try:
        counts = tc.count_comm_classes(
            Y,
            y0,
            args.max_degree,
            minimality=not args.no_minimality,
            max_degree=args.budget,
            max_base_vertices=args.max_base_vertices,
        )
    except BudgetExceeded as exc:
        partial = exc.partial or []
        _emit(cfg, header, [c.as_row() for c in partial], {"partial": True, "error": str(exc)})
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    extra = {"trend": [list(t) for t in tc.growth_trend(counts)]}
    _emit(cfg, header, [c.as_row() for c in counts], extra)
    return EXIT_OK


def cmd_finite(args, cfg: RunConfig) -> int:
    if args.affine:
        n, p = args.affine
        G, A = fg.build_affine_group(n, p, cap=args.cap)
    elif args.table:
        G = fg.FiniteGroupTable.from_text(Path(args.table).read_text())
        if not args.subgroup:
            raise ValueError("--table needs --subgroup")
        A = fg.SubgroupRef.from_text(G, Path(args.subgroup).read_text())
    else:
        raise ValueError("give --affine N P or --table FILE --subgroup FILE")
    if args.save_table:
        Path(args.save_table).write_text(G.to_text())
    if args.save_subgroup:
        Path(args.save_subgroup).write_text(A.to_text())
    classes = fg.comm_classes(A)
    rows = [[n, c] for n, c in classes.items()]
    extra = {"group_order": G.order, "subgroup_order": len(A)}
    _emit(cfg, ["n", "c_n"], rows, extra)
    if args.affine and classes != fg.affine_zeta_formula(*args.affine):
        return EXIT_MISMATCH
    return EXIT_OK


def _emit_series(cfg: RunConfig, series: TruncatedDirichletSeries, probe_alpha: str | None) -> int:
    extra = {"series": series.to_json_dict()}
    if probe_alpha is not None:
        extra["probe"] = asymptotic_ratio_probe(series, probe_alpha).as_dict()
    rows = [[n, str(series[n])] for n in range(1, series.limit + 1)]
    _emit(cfg, ["n", "c_n"], rows, extra, csv_text=series.to_csv())
    return EXIT_OK


def cmd_series(args, cfg: RunConfig) -> int:
    if args.identity:
        series = TruncatedDirichletSeries.identity(args.N)
    elif args.family == "heisenberg":
        series = hz.global_series(args.N)
    elif args.family == "pgl2":
        series = pgl2.global_series_pgl2(_parse_primes(args.ramified), args.N)
    elif args.family == "mobius":
        series = hz.mobius_oracle_series(args.N)
    else:
        raise ValueError("choose --identity or --family")
    return _emit_series(cfg, series, args.probe)


def cmd_repro(args, cfg: RunConfig) -> int:
    suite = cfg.subcommand.split("-", 1)[1]
    results = repro.run_suite(suite)
    for r in results:
        print(r.line(), file=sys.stderr)
    rows = [[r.number, r.name, "pass" if r.passed else "fail"] for r in results]
    extra = {"results": [{k: v for k, v in r.as_dict().items() if k != "seconds"} for r in results]}
    _emit(cfg, ["criterion", "name", "status"], rows, extra)
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


# parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="commgrowth", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("heisenberg", parents=[common], help="local Heisenberg counts")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--include-zero", action="store_true")
    p.add_argument("--series", type=int, metavar="N", help="emit the global series up to N instead")
    p.add_argument("--probe", metavar="ALPHA", help="with --series: add c_{<=n}/n^ALPHA checkpoints")
    p.set_defaults(func=cmd_heisenberg)

    p = sub.add_parser("pgl2", parents=[common], help="Cartan index table")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--max-n", type=int)
    p.add_argument("--oracle", action="store_true", help="compare with PGL_2(Z/p^n) enumeration")
    p.add_argument("--cap", type=int, default=pgl2.ORACLE_CAP)
    p.set_defaults(func=cmd_pgl2)

    p = sub.add_parser("tree", parents=[common], help="twin-cover counts over a base graph")
    p.add_argument("--graph", help="multigraph file; defaults to a bouquet of --rank loops")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--budget", type=int, default=tc.DEFAULT_MAX_DEGREE)
    p.add_argument("--max-base-vertices", type=int, default=tc.DEFAULT_MAX_BASE_VERTICES)
    p.add_argument("--no-minimality", action="store_true")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("finite", parents=[common], help="commensurizer classes in a finite group")
    p.add_argument("--affine", type=int, nargs=2, metavar=("N", "P"))
    p.add_argument("--table", help="group table file")
    p.add_argument("--subgroup", help="subgroup index-list file")
    p.add_argument("--save-table")
    p.add_argument("--save-subgroup")
    p.add_argument("--cap", type=int, default=fg.AFFINE_CAP)
    p.set_defaults(func=cmd_finite)

    p = sub.add_parser("series", parents=[common], help="global zeta series")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--identity", action="store_true")
    g.add_argument("--family", choices=("heisenberg", "pgl2", "mobius"))
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--ramified", help="comma-separated primes where the form does not split")
    p.add_argument("--probe", metavar="ALPHA")
    p.set_defaults(func=cmd_series)

    for name, text in (
        ("repro-thm1", "cubic Heisenberg growth checks"),
        ("repro-thm2", "quadratic PGL_2 growth checks"),
        ("repro-thm3", "tree-lattice twin-cover checks"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.set_defaults(func=cmd_repro)
    return parser


def _params(args) -> dict:
    skip = {"func", "subcommand", "format", "out", "seed"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(args.subcommand, _params(args), args.format, args.out, args.seed)
    try:
        return args.func(args, cfg)
    except SizeCapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
