"""Command-line interface: ``formdiv analyze|count|verify|sweep|catalog``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import counting
from .graph import export_dot
from .groups import CATALOG, GroupError, catalog, load_group
from .parser import FormulaSyntaxError, parse_formula
from .suites import SUITES, random_suite
from .verify import analyze, report_for, verify


def _vars(text: str) -> list[str]:
    return [v.strip() for v in text.split(",") if v.strip()]


def _formula(args):
    if args.formula is None and args.file is None:
        raise SystemExit("error: give --formula or --file")
    text = args.formula if args.formula is not None else Path(args.file).read_text().strip()
    consts = None if args.consts is None else _vars(args.consts)
    return parse_formula(text, _vars(args.vars), consts)


def _groups(items: list[str]):
    names = []
    for item in items:
        names.extend(p for p in item.split(",") if p)
    if names == ["all"]:
        return catalog(max_order=24)
    return [load_group(n) for n in names]


def _const_pairs(pairs: list[str]) -> dict[str, str]:
    out = {}
    for pair in pairs:
        if "=" not in pair:
            raise SystemExit(f"error: --const expects NAME=ELEMENT, got {pair!r}")
        name, value = pair.split("=", 1)
        out[name.strip()] = value.strip()
    return out


def _write_json(path: str | None, doc) -> None:
    if path:
        Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def _print_analysis(report) -> None:
    print(f"formula: {report.formula}")
    print(f"signature: {', '.join(report.signature)}")
    print(f"bound variables: {', '.join(report.vertices) or '-'}")
    for e in report.edges:
        print(f"  edge {e['tail']} -> {e['head']} {tuple(e['label'])}")
    print("matrix:")
    for row in report.matrix:
        print("  " + " ".join(f"{x:>4}" for x in row))
    if not report.matrix:
        print("  (no rows)")
    print(f"deltas: {report.deltas}")
    print(f"invariant factors: {report.invariant_factors}")
    print(f"n: {report.n}")
    print(f"isolating variables: {', '.join(report.isolating_variables) or '-'}")
    print(f"isolated constants: {', '.join(report.isolated_constants) or '-'}")
    print(f"non-isolated constants: {', '.join(report.non_isolated_constants) or '-'}")


def cmd_analyze(args) -> int:
    phi = _formula(args)
    a = analyze(phi, args.forest_seed)
    report = report_for(a)
    _print_analysis(report)
    if args.dot:
        Path(args.dot).write_text(export_dot(a.graph))
    _write_json(args.json, report.to_json())
    return 0


def cmd_count(args) -> int:
    phi = _formula(args)
    G = load_group(args.group)
    binding = _const_pairs(args.const)
    try:
        print(counting.count_solutions(
            phi, G, binding, budget=args.budget, backend=args.backend,
            workers=args.workers, chunks=args.workers,
        ))  # fmt: skip
    except counting.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def cmd_verify(args) -> int:
    phi = _formula(args)
    groups = _groups(args.group)
    bindings = None
    if args.const and not args.sweep_consts:
        fixed = _const_pairs(args.const)
        bindings = {G.name: [fixed] for G in groups}
    report = verify(
        phi, groups, bindings, seed=args.seed, budget=args.budget, backend=args.backend,
        workers=args.workers,
    )  # fmt: skip
    _print_analysis(report)
    for r in report.results:
        binding = ", ".join(f"{k}={v}" for k, v in r.binding.items()) or "-"
        print(
            f"{r.group:>10} |G|={r.order:<3} binding[{binding}] |C|={r.centralizer_order} "
            f"divisor={r.divisor} (all coefficients: {r.divisor_all}) count={r.count} {r.status}"
        )
    _write_json(args.json, report.to_json())
    if not report.ok:
        for r in report.failures():
            print(
                f"FAILED: formula {report.formula!r} vars {','.join(report.signature)} "
                f"group {r.group} binding {r.binding} seed {args.seed}: "
                f"count {r.count} not divisible by {r.divisor}",
                file=sys.stderr,
            )
        return 1
    return 0


def cmd_sweep(args) -> int:
    groups = _groups([args.groups])
    if args.suite == "random":
        results = random_suite(groups, seed=args.seed, trials=args.trials)
    else:
        results = SUITES[args.suite](groups)
    failed = [r for r in results if not r.ok]
    print(f"{args.suite}: {len(results)} cases, {len(failed)} failed")
    for r in failed:
        print(
            f"FAILED: formula {r.formula!r} group {r.group} binding {r.binding} seed {r.seed}: "
            f"count {r.count}, divisor {r.divisor}, expected {r.expected_divisor}",
            file=sys.stderr,
        )
    if args.json:
        _write_json(args.json, [r.__dict__ for r in results])
    return 1 if failed else 0


def cmd_catalog(args) -> int:
    for name in CATALOG:
        G = load_group(name)
        kind = "abelian" if G.is_abelian() else "non-abelian"
        print(f"{name:<10} order {G.order:>3}  {kind}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="formdiv", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def formula_args(p):
        p.add_argument("--vars", required=True, help="comma-separated free variables, in order")
        p.add_argument("--formula", help="formula text")
        p.add_argument("--file", help="read the formula from a file")
        p.add_argument("--consts", help="comma-separated constants (default: any other identifier)")

    def run_args(p):
        p.add_argument("--budget", type=int, default=counting.DEFAULT_BUDGET)
        p.add_argument("--backend", choices=counting.BACKENDS, default=None)
        p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("analyze", help="graph, matrix, minors and n of a formula")
    formula_args(p)
    p.add_argument("--dot", help="write the bound-variable graph as DOT")
    p.add_argument("--json", help="write the analysis report as JSON")
    p.add_argument("--forest-seed", type=int, default=0)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("count", help="exact number of solutions in one group")
    p.add_argument("--group", required=True, help="catalog name or @table.json")
    formula_args(p)
    p.add_argument("--const", action="append", default=[], metavar="NAME=ELEMENT")
    run_args(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="check the divisibility verdict in groups")
    p.add_argument("--group", action="append", required=True, help="catalog name, @file, list or 'all'")
    formula_args(p)
    p.add_argument("--const", action="append", default=[], metavar="NAME=ELEMENT")
    p.add_argument("--sweep-consts", action="store_true", help="all (or sampled) constant values")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json")
    run_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="run a theorem suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--groups", default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--json")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("catalog", help="list built-in groups")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormulaSyntaxError, GroupError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
