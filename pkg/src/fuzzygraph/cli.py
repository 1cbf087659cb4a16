"""Command line front end.

Exit codes: 0 success, 1 replication mismatch, 2 input error, 3 partial
result (connectivity index printed but Wiener index unavailable), 4 no
counterexample witness found.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .connectivity import classify_edges
from .errors import BadParamsError, FuzzyGraphError
from .falsifier import (
    ClaimId,
    ClaimVerdict,
    search_counterexamples,
)
from .indices import IndexReport, index_report
from .model import FuzzyGraph, format_fraction, parse_graph
from .replication import replication_checks
from .structure import (
    GraphKind,
    SaturatedCycleSpec,
    make_saturated_cycle,
    maximum_spanning_tree,
)

_COROLLARY_NOTE = (
    "claim tested exactly as published; no auxiliary hypotheses assumed"
)


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected A..B or a single integer, got {text!r}"
        ) from None
    return lo, hi


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json"),
        default=argparse.SUPPRESS,
        help="output format (default text)",
    )
    common.add_argument(
        "--output",
        metavar="PATH",
        default=argparse.SUPPRESS,
        help="write the report to PATH instead of stdout",
    )
    parser = argparse.ArgumentParser(
        prog="fuzzygraph",
        description="Exact indices, edge classification and counterexample "
        "search for fuzzy graphs.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--output", metavar="PATH", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "indices", parents=[common], help="Wiener and connectivity indices"
    )
    p.add_argument("file")
    p = sub.add_parser(
        "classify", parents=[common], help="alpha/beta/delta edge classes"
    )
    p.add_argument("file")
    p = sub.add_parser(
        "mst", parents=[common], help="maximum spanning tree"
    )
    p.add_argument("file")
    p = sub.add_parser(
        "kind", parents=[common], help="structure recognition flags"
    )
    p.add_argument("file")
    sub.add_parser(
        "repro",
        parents=[common],
        help="replay the built-in counterexample computations",
    )
    p = sub.add_parser(
        "falsify", parents=[common], help="search for claim counterexamples"
    )
    p.add_argument("claim", choices=[claim.value for claim in ClaimId])
    p.add_argument("--trials", type=_positive_int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--sizes",
        type=_parse_range,
        default=None,
        help="vertex count range A..B for corollary-star trees",
    )
    p.add_argument(
        "--n",
        dest="cycle_lengths",
        type=_parse_range,
        default=None,
        help="cycle length range A..B for the theorem-star sweep",
    )
    return parser


def _base_doc() -> dict:
    return {
        "wiener": None,
        "connectivity": None,
        "pairs": [],
        "kind": None,
        "verdicts": [],
        "warnings": [],
    }


def _kind_json(kind: GraphKind) -> dict:
    return {
        "connected": kind.is_connected,
        "fuzzy_tree": kind.is_fuzzy_tree,
        "fuzzy_cycle": kind.is_fuzzy_cycle,
        "saturated_fuzzy_cycle": kind.is_saturated_fuzzy_cycle,
    }


def _kind_lines(kind: GraphKind) -> list[str]:
    flag = lambda value: "yes" if value else "no"
    return [
        f"connected: {flag(kind.is_connected)}",
        f"fuzzy tree: {flag(kind.is_fuzzy_tree)}",
        f"fuzzy cycle: {flag(kind.is_fuzzy_cycle)}",
        f"saturated fuzzy cycle: {flag(kind.is_saturated_fuzzy_cycle)}",
    ]


def _warnings_for(report: IndexReport) -> list[str]:
    if report.zero_sigma_vertices:
        names = " ".join(report.zero_sigma_vertices)
        return [f"zero-grade vertices contribute nothing: {names}"]
    return []


def _verdict_json(verdict: ClaimVerdict) -> dict:
    doc = {
        "claim": verdict.claim_id.value,
        "size": verdict.size,
        "holds": verdict.holds,
        "lhs": format_fraction(verdict.lhs),
        "rhs": format_fraction(verdict.rhs),
        "detail": {
            name: format_fraction(value)
            for name, value in verdict.detail.items()
        },
    }
    if isinstance(verdict.instance, SaturatedCycleSpec):
        spec = verdict.instance
        doc["instance"] = {
            "n": spec.n,
            "kappa": str(spec.kappa),
            "eta": str(spec.eta),
            "fzg": make_saturated_cycle(spec).serialize(),
        }
    else:
        doc["instance"] = {"fzg": verdict.instance.serialize()}
    return doc


def _verdict_lines(index: int, verdict: ClaimVerdict) -> list[str]:
    lines = [
        f"witness {index}: size {verdict.size}, holds=false, "
        f"lhs = {format_fraction(verdict.lhs)}, "
        f"rhs = {format_fraction(verdict.rhs)}"
    ]
    detail = ", ".join(
        f"{name} = {format_fraction(value)}"
        for name, value in verdict.detail.items()
    )
    lines.append(f"  {detail}")
    if isinstance(verdict.instance, SaturatedCycleSpec):
        instance = make_saturated_cycle(verdict.instance)
    else:
        instance = verdict.instance
    lines += [f"  {line}" for line in instance.serialize().splitlines()]
    return lines


def _load(path: str) -> FuzzyGraph:
    return parse_graph(Path(path).read_bytes())


def _cmd_indices(args) -> tuple[int, str]:
    g = _load(args.file)
    report = index_report(g)
    warnings = _warnings_for(report)
    code = 0 if report.wiener is not None else 3
    if args.format == "json":
        doc = _base_doc()
        doc["wiener"] = (
            None if report.wiener is None else format_fraction(report.wiener)
        )
        doc["connectivity"] = format_fraction(report.connectivity)
        doc["pairs"] = [
            {
                "u": entry.u,
                "v": entry.v,
                "conn": str(entry.conn),
                "ds": None if entry.ds is None else format_fraction(entry.ds),
            }
            for entry in report.pairs
        ]
        doc["kind"] = _kind_json(report.kind)
        doc["warnings"] = warnings
        return code, _json_text(doc)
    lines = [
        f"vertices: {g.vertex_count}",
        f"edges: {g.edge_count}",
    ]
    lines += _kind_lines(report.kind)
    lines += [f"warning: {message}" for message in warnings]
    if report.wiener is None:
        lines.append("WI = unavailable (strong subgraph disconnected)")
    else:
        lines.append(f"WI = {format_fraction(report.wiener)}")
    lines.append(f"CI = {format_fraction(report.connectivity)}")
    if report.pairs:
        lines.append("pair conn d_s")
        for entry in report.pairs:
            ds = "-" if entry.ds is None else format_fraction(entry.ds)
            lines.append(f"{entry.u} {entry.v} {entry.conn} {ds}")
    return code, "\n".join(lines) + "\n"


def _cmd_classify(args) -> tuple[int, str]:
    g = _load(args.file)
    rows = classify_edges(g)
    if args.format == "json":
        doc = _base_doc()
        doc["edges"] = [
            {
                "u": u,
                "v": v,
                "mu": str(record.grade),
                "class": record.edge_class.value,
                "residual": str(record.residual),
            }
            for (u, v), record in rows.items()
        ]
        return 0, _json_text(doc)
    lines = [
        f"{u} {v} {record.grade} {record.edge_class.value} {record.residual}"
        for (u, v), record in rows.items()
    ]
    return 0, "\n".join(lines) + ("\n" if lines else "")


def _cmd_mst(args) -> tuple[int, str]:
    g = _load(args.file)
    tree = maximum_spanning_tree(g)
    if args.format == "json":
        doc = _base_doc()
        doc["mst"] = {
            "edges": [
                {"u": u, "v": v, "mu": str(g.mu(u, v))} for u, v in tree.edges
            ],
            "total_strength": format_fraction(tree.total_strength),
        }
        return 0, _json_text(doc)
    lines = [f"{u} {v} {g.mu(u, v)}" for u, v in tree.edges]
    lines.append(f"total = {format_fraction(tree.total_strength)}")
    return 0, "\n".join(lines) + "\n"


def _cmd_kind(args) -> tuple[int, str]:
    g = _load(args.file)
    report = index_report(g)
    if args.format == "json":
        doc = _base_doc()
        doc["kind"] = _kind_json(report.kind)
        doc["warnings"] = _warnings_for(report)
        return 0, _json_text(doc)
    return 0, "\n".join(_kind_lines(report.kind)) + "\n"


def _cmd_repro(args) -> tuple[int, str]:
    checks, verdicts = replication_checks()
    passed = sum(1 for check in checks if check.passed)
    code = 0 if passed == len(checks) else 1
    if args.format == "json":
        doc = _base_doc()
        doc["checks"] = [
            {
                "label": check.label,
                "detail": check.detail,
                "passed": check.passed,
            }
            for check in checks
        ]
        doc["verdicts"] = [_verdict_json(verdict) for verdict in verdicts]
        return code, _json_text(doc)
    lines = [
        f"{check.label}: {check.detail} {'PASS' if check.passed else 'FAIL'}"
        for check in checks
    ]
    lines.append(f"result: {passed} of {len(checks)} checks passed")
    return code, "\n".join(lines) + "\n"


def _cmd_falsify(args) -> tuple[int, str]:
    claim = ClaimId(args.claim)
    if claim is ClaimId.COROLLARY_STAR:
        if args.cycle_lengths is not None:
            raise BadParamsError("--n applies to theorem-star only")
        trials = args.trials if args.trials is not None else 50
        size_range = args.sizes if args.sizes is not None else (3, 8)
        note = _COROLLARY_NOTE
    else:
        if args.sizes is not None:
            raise BadParamsError("--sizes applies to corollary-star only")
        trials = args.trials
        size_range = (
            args.cycle_lengths if args.cycle_lengths is not None else (4, 12)
        )
        note = None
    verdicts = search_counterexamples(
        claim, trials=trials, seed=args.seed, size_range=size_range
    )
    code = 0 if verdicts else 4
    if args.format == "json":
        doc = _base_doc()
        doc["verdicts"] = [_verdict_json(verdict) for verdict in verdicts]
        if note is not None:
            doc["warnings"] = [note]
        return code, _json_text(doc)
    lines = [f"claim: {claim.value}"]
    if note is not None:
        lines.append(f"note: {note}")
    lines.append(f"witnesses: {len(verdicts)}")
    for index, verdict in enumerate(verdicts, start=1):
        lines.append("")
        lines += _verdict_lines(index, verdict)
    return code, "\n".join(lines) + "\n"


def _json_text(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


_COMMANDS = {
    "indices": _cmd_indices,
    "classify": _cmd_classify,
    "mst": _cmd_mst,
    "kind": _cmd_kind,
    "repro": _cmd_repro,
    "falsify": _cmd_falsify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        code, text = _COMMANDS[args.command](args)
    except FileNotFoundError as exc:
        print(f"error: no such file: {exc.filename}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FuzzyGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.output is not None:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
