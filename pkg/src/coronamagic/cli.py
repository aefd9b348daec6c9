"""Command-line surface tying constructions, verification, oracle, and bounds together.

Exit codes: 0 success, 2 unsupported spec or malformed input, 3
verification failure, 4 budget exhausted, 5 sweep inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .bounds import corona_lower_bound, odd_cycle_threshold_table, threshold_table_csv
from .constructions import ConstructionResult, construct
from .graphs import (
    CoronaSpec,
    Family,
    InvalidSpecError,
    UnsupportedSpecError,
    corona,
    to_dot,
)
from .labelings import (
    DocumentError,
    labeling_to_document,
    load_document,
    verify,
    weights,
)
from .oracle import (
    BudgetExceededError,
    OracleInputError,
    SearchBudget,
    exact_chi_la,
    find_labeling,
)

EXIT_OK = 0
EXIT_UNSUPPORTED = 2
EXIT_VERIFY_FAILED = 3
EXIT_BUDGET = 4
EXIT_INCONSISTENT = 5


def _spec_from_args(args: argparse.Namespace) -> CoronaSpec:
    return CoronaSpec(Family(args.family), args.n, args.m)


def _write_output(text: str, path: str | None) -> None:
    if path and path != "-":
        with open(path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _read_input(path: str | None) -> str:
    if path and path != "-":
        with open(path) as handle:
            return handle.read()
    return sys.stdin.read()


def _construction_document(result: ConstructionResult) -> dict[str, Any]:
    cg = corona(result.spec)
    report = verify(cg.graph, result.labeling)
    return labeling_to_document(
        cg,
        result.labeling,
        metadata={
            "case": result.case.value,
            "claimed_palette_size": result.claimed_palette_size,
            "claimed_is_exact": result.claimed_is_exact,
            "palette_size": report.palette_size,
            "errata_applied": list(result.errata_applied),
            "spine_weights": list(result.spine_weights_expected),
        },
    )


def _cmd_construct(args: argparse.Namespace) -> int:
    try:
        spec = _spec_from_args(args)
        result = construct(spec)
    except (InvalidSpecError, UnsupportedSpecError) as exc:
        print(json.dumps({"error": "unsupported-spec", "reason": str(exc)}), file=sys.stderr)
        return EXIT_UNSUPPORTED
    if args.format == "dot":
        cg = corona(spec)
        w = weights(cg.graph, result.labeling)
        _write_output(to_dot(cg, labels=result.labeling.labels, weights=w.weights), args.output)
    else:
        doc = _construction_document(result)
        _write_output(json.dumps(doc, indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        text = _read_input(args.input)
        cg, labeling = load_document(text)
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except DocumentError as exc:
        print(f"malformed document: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    report = verify(cg.graph, labeling)
    if args.format == "json":
        payload = {"spec": cg.spec.label(), **report.to_json_dict()}
        _write_output(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        lines = [
            f"spec: {cg.spec.label()}",
            f"bijection: {'yes' if report.is_bijection else 'no'}",
        ]
        if report.duplicate_or_missing:
            lines.append(f"offending labels: {list(report.duplicate_or_missing)}")
        lines.append(f"local antimagic: {'yes' if report.is_local_antimagic else 'no'}")
        if report.conflicting_pairs:
            lines.append(f"conflicting pairs: {list(report.conflicting_pairs)}")
        lines.append(f"palette size: {report.palette_size}")
        _write_output("\n".join(lines) + "\n", args.output)
    return EXIT_OK if report.is_local_antimagic else EXIT_VERIFY_FAILED


def _cmd_exact(args: argparse.Namespace) -> int:
    try:
        if args.input:
            cg, _ = load_document(_read_input(args.input))
        else:
            if args.family is None or args.n is None:
                print("exact needs --family and -n (or --input)", file=sys.stderr)
                return EXIT_UNSUPPORTED
            cg = corona(_spec_from_args(args))
    except (InvalidSpecError, UnsupportedSpecError, DocumentError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED

    max_edges = args.max_edges
    if args.force and cg.graph.edge_count > max_edges:
        max_edges = cg.graph.edge_count
    budget = SearchBudget(max_edges=max_edges, max_nodes=args.max_nodes, seed=args.seed)

    try:
        if args.target is not None:
            outcome = find_labeling(cg, args.target, budget)
            payload: dict[str, Any] = {
                "mode": "find",
                "target_palette": args.target,
                "found": outcome.found,
                "exhausted": outcome.exhausted,
                "nodes_explored": outcome.nodes_explored,
            }
            if outcome.found:
                payload["certificate"] = labeling_to_document(cg, outcome.labeling)
            code = EXIT_OK if outcome.found else (
                EXIT_VERIFY_FAILED if outcome.exhausted else EXIT_BUDGET
            )
        else:
            result = exact_chi_la(cg, budget)
            payload = {
                "mode": "exact",
                "chi_la": result.chi_la,
                "exhausted": result.exhausted,
                "nodes_explored": result.nodes_explored,
            }
            if result.certificate is not None:
                payload["certificate"] = labeling_to_document(cg, result.certificate)
            code = EXIT_OK if result.exhausted else EXIT_BUDGET
    except OracleInputError as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except BudgetExceededError as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET

    if args.format == "json":
        _write_output(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        lines = [f"{cg.spec.label()}: {payload['mode']}"]
        if args.target is not None:
            lines.append(f"target {args.target}: {'found' if payload['found'] else 'not found'}")
        else:
            lines.append(f"chi_la = {payload['chi_la']}")
        lines.append(
            f"exhausted: {payload['exhausted']} (nodes explored: {payload['nodes_explored']})"
        )
        _write_output("\n".join(lines) + "\n", args.output)
    return code


_SWEEP_COLUMNS = (
    "family", "n", "m", "edges", "claimed", "achieved",
    "lower", "upper", "oracle", "errata", "status",
)


def _sweep_row(family: Family, n: int, m: int, oracle_max_edges: int, seed: int) -> dict[str, Any]:
    row: dict[str, Any] = {key: "" for key in _SWEEP_COLUMNS}
    row.update({"family": family.value, "n": n, "m": m})
    try:
        spec = CoronaSpec(family, n, m)
    except InvalidSpecError:
        row["status"] = "unsupported"
        return row
    row["edges"] = spec.edge_count
    try:
        result = construct(spec)
        bound = corona_lower_bound(spec)
    except UnsupportedSpecError:
        row["status"] = "unsupported"
        return row
    report = verify(corona(spec).graph, result.labeling)
    row["claimed"] = result.claimed_palette_size
    row["achieved"] = report.palette_size
    row["lower"] = bound.lower
    row["upper"] = bound.upper if bound.upper is not None else ""
    row["errata"] = ";".join(result.errata_applied)

    oracle_value: int | None = None
    if 0 < spec.edge_count <= oracle_max_edges:
        exact = exact_chi_la(corona(spec), SearchBudget(max_edges=oracle_max_edges, seed=seed))
        oracle_value = exact.chi_la
        row["oracle"] = oracle_value

    ok = (
        report.is_local_antimagic
        and report.palette_size == result.claimed_palette_size
        and bound.lower <= report.palette_size
        and (bound.upper is None or report.palette_size <= bound.upper)
        and (bound.exact_claimed is None or bound.exact_claimed == result.claimed_palette_size)
        and (result.claimed_is_exact == (bound.exact_claimed is not None))
    )
    if oracle_value is not None:
        if result.claimed_is_exact:
            ok = ok and oracle_value == result.claimed_palette_size
        else:
            ok = ok and bound.lower <= oracle_value <= report.palette_size
    row["status"] = "ok" if ok else "inconsistent"
    return row


def _cmd_sweep(args: argparse.Namespace) -> int:
    config: dict[str, Any] = {}
    if args.config:
        try:
            with open(args.config) as handle:
                config = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            print(f"cannot read config: {exc}", file=sys.stderr)
            return EXIT_UNSUPPORTED

    def pick(flag_value, key, default):
        if flag_value is not None:
            return flag_value
        return config.get(key, default)

    families_raw = pick(args.families, "families", "path,cycle,complete")
    try:
        families = [Family(part.strip()) for part in str(families_raw).split(",") if part.strip()]
    except ValueError as exc:
        print(f"bad families: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    n_min = pick(args.n_min, "n_min", 2)
    n_max = pick(args.n_max, "n_max", 12)
    m_min = pick(args.m_min, "m_min", 1)
    m_max = pick(args.m_max, "m_max", 3)
    oracle_max_edges = pick(args.oracle_max_edges, "oracle_max_edges", 0)
    fmt = pick(args.format, "format", "csv")
    seed = pick(args.seed, "seed", 0)
    if n_min > n_max or m_min > m_max:
        print("empty sweep range", file=sys.stderr)
        return EXIT_UNSUPPORTED

    rows = [
        _sweep_row(family, n, m, oracle_max_edges, seed)
        for family in families
        for n in range(n_min, n_max + 1)
        for m in range(m_min, m_max + 1)
    ]
    if fmt == "json":
        _write_output(json.dumps({"rows": rows}, indent=2) + "\n", args.output)
    else:
        lines = [",".join(_SWEEP_COLUMNS)]
        for row in rows:
            lines.append(",".join(str(row[key]) for key in _SWEEP_COLUMNS))
        _write_output("\n".join(lines) + "\n", args.output)
    bad = sum(1 for row in rows if row["status"] == "inconsistent")
    if bad:
        print(f"{bad} inconsistent rows", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    rows = odd_cycle_threshold_table(args.m_max)
    _write_output(threshold_table_csv(rows), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coronamagic",
        description="Local antimagic vertex colorings of corona products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_flags(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument("--family", choices=[f.value for f in Family], required=required)
        p.add_argument("-n", type=int, required=required, help="base graph order")
        p.add_argument("-m", type=int, default=1, help="leaves per spine vertex")

    p = sub.add_parser("construct", help="build and verify a labeling")
    add_spec_flags(p)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="verify an interchange document")
    p.add_argument("input", nargs="?", default="-", help="document path or - for stdin")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("exact", help="exact chromatic number by exhaustive search")
    add_spec_flags(p, required=False)
    p.add_argument("--input", default=None, help="take the instance from a document")
    p.add_argument("--target", type=int, default=None, help="search for a palette <= target instead")
    p.add_argument("--max-edges", type=int, default=SearchBudget.max_edges)
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--force", action="store_true", help="lift the edge cap for this instance")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("sweep", help="regression sweep over a spec range")
    p.add_argument("--families", default=None, help="comma-separated subset of path,cycle,complete")
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--m-min", type=int, default=None)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--oracle-max-edges", type=int, default=None,
                   help="run the oracle on rows with at most this many edges (0 disables)")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=["csv", "json"], default=None)
    p.add_argument("--config", default=None, help="JSON config file; flags override")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("table", help="odd-cycle threshold table as CSV")
    p.add_argument("--m-max", type=int, default=15)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_table)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
