"""Command-line front end.

Subcommands: check, construct, verify-op, solve-op, emit-system,
fingerprint, iso, corpus.  Output is machine-first (JSON reports, stable
key order) with a one-line human summary on stdout.

Exit codes: 0 all pass; 1 violations or discrepancies found; 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import constructions, corpus, morphisms, operators
from .axioms import check_action, check_kind, check_multiplicative, check_representation
from .files import (
    algebra_to_dict,
    classify_file,
    read_json,
    write_json,
)
from .model import ModelError
from .poly import ParseError
from .report import PreconditionError

SQ15_CHOICES = ("literal", "symmetric")


def _dump(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def _write_report(path, data: dict) -> None:
    Path(path).write_text(_dump(data) + "\n", encoding="utf-8")


def _load_context(path):
    """Load an algebra, representation, or action file by its shape."""
    kind = classify_file(read_json(path))
    if kind == "algebra":
        return corpus.load_algebra(path)
    if kind == "representation":
        return corpus.load_representation(path)
    if kind == "action":
        return corpus.load_action(path)
    raise corpus.CorpusError(f"{path}: expected an algebra/representation/action file")


def _parse_grid(text: str, denominators: str) -> list:
    try:
        lo_text, hi_text = text.split("..")
        lo, hi = int(lo_text), int(hi_text)
        dens = [int(d) for d in denominators.split(",")] if denominators else [1]
    except ValueError as exc:
        raise corpus.CorpusError(f"bad grid specification: {exc}") from exc
    if hi < lo or any(d < 1 for d in dens):
        raise corpus.CorpusError("bad grid specification")
    values = set()
    for d in dens:
        for n in range(lo * d, hi * d + 1):
            values.add(Fraction(n, d))
    return sorted(values)


def _matrix_rows(matrix) -> list:
    return [[str(cell) for cell in row] for row in matrix.entries]


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_check(args) -> int:
    data = read_json(args.file)
    shape = classify_file(data)
    if shape == "algebra":
        bundle = corpus.load_algebra(args.file)
        report = check_kind(bundle, sq15=args.sq15)
        extra = {}
        if args.multiplicative:
            extra["multiplicative"] = check_multiplicative(bundle).to_dict()
    elif shape == "representation":
        report = check_representation(corpus.load_representation(args.file))
        extra = {}
    elif shape == "action":
        report = check_action(corpus.load_action(args.file))
        extra = {}
    else:
        raise corpus.CorpusError(f"{args.file}: operator files go through verify-op")
    payload = {"file": str(args.file), "check": report.to_dict(), **extra}
    if args.report:
        _write_report(args.report, payload)
    print(f"{args.file}: {report.status} ({len(report.entries)} violation(s))")
    if not report.ok:
        print(_dump(payload))
    return 0 if report.ok else 1


def _cmd_construct(args) -> int:
    name = args.name
    force = args.force
    try:
        if name == "sum-dias":
            out = constructions.quadri_to_diassociative(corpus.load_algebra(args.inputs[0]))
        elif name == "sum-tri":
            out = constructions.six_to_triassociative(corpus.load_algebra(args.inputs[0]))
        elif name == "dsum":
            out = constructions.direct_sum_quadri(
                corpus.load_algebra(args.inputs[0]), corpus.load_algebra(args.inputs[1])
            )
        elif name == "hemi":
            out = constructions.hemi_semidirect(
                corpus.load_representation(args.inputs[0]), force=force
            )
        elif name == "semidirect":
            out = constructions.semidirect_dendriform(
                corpus.load_action(args.inputs[0]), force=force
            )
        elif name == "quotient":
            result = constructions.quotient_dendriform(corpus.load_algebra(args.inputs[0]))
            if not result.ok:
                print("quotient refused: preconditions failed", file=sys.stderr)
                print(_dump(result.report.to_dict()), file=sys.stderr)
                return 1
            out = result.bundle
        elif name == "avg-dias":
            algebra = corpus.load_algebra(args.inputs[0])
            kind, matrix = corpus.load_operator(args.inputs[1])
            out = constructions.averaging_induced_diassociative(algebra, matrix, force=force)
        elif name == "rb-dias":
            algebra = corpus.load_algebra(args.inputs[0])
            kind, matrix = corpus.load_operator(args.inputs[1])
            out = constructions.rota_baxter_induced(algebra, matrix, force=force)
        elif name == "ravg-quadri":
            rep = corpus.load_representation(args.inputs[0])
            kind, matrix = corpus.load_operator(args.inputs[1])
            out = constructions.relative_averaging_induced_quadri(rep, matrix, force=force)
        elif name == "havg-six":
            action = corpus.load_action(args.inputs[0])
            kind, matrix = corpus.load_operator(args.inputs[1])
            out = constructions.homomorphic_averaging_induced_six(action, matrix, force=force)
        else:
            raise corpus.CorpusError(f"unknown construction {name!r}")
    except PreconditionError as exc:
        print(f"construct {name} refused: {exc}", file=sys.stderr)
        print(_dump(exc.report.to_dict()), file=sys.stderr)
        return 1
    except IndexError:
        raise corpus.CorpusError(f"construct {name}: missing input file(s)")
    header = f"construct {name} " + " ".join(str(p) for p in args.inputs)
    write_json(args.output, algebra_to_dict(out), header=header)
    print(f"wrote {args.output} ({out.kind}, dimension {out.dim})")
    return 0


def _cmd_verify_op(args) -> int:
    context = _load_context(args.context)
    kind, matrix = corpus.load_operator(args.operator)
    report = operators.verify_operator(kind, context, matrix, strict_twist=args.strict_twist)
    payload = {
        "context": str(args.context),
        "operator": str(args.operator),
        "kind": kind,
        "report": report.to_dict(),
    }
    if args.report:
        _write_report(args.report, payload)
    print(f"{kind}: {report.status} ({len(report.entries)} violation(s))")
    if not report.ok:
        print(_dump(payload))
    return 0 if report.ok else 1


def _cmd_solve_op(args) -> int:
    context = _load_context(args.context)
    grid = _parse_grid(args.grid, args.denominators)
    solutions = operators.solve_operators_grid(
        context, args.kind, grid, strict_twist=args.strict_twist
    )
    payload = {
        "context": str(args.context),
        "kind": args.kind,
        "grid": [str(g) for g in grid],
        "solutions": [_matrix_rows(m) for m in solutions],
    }
    if args.report:
        _write_report(args.report, payload)
    print(f"{len(solutions)} solution(s) over grid of {len(grid)} values")
    print(_dump(payload))
    return 0


def _cmd_emit_system(args) -> int:
    context = _load_context(args.context)
    system = operators.emit_operator_system(
        context, args.kind, unknown_prefix=args.unknown_prefix, strict_twist=args.strict_twist
    )
    payload = {
        "context": str(args.context),
        "kind": args.kind,
        "unknowns_prefix": args.unknown_prefix,
        "equations": [str(p) for p in system],
    }
    if args.report:
        _write_report(args.report, payload)
    print(_dump(payload))
    return 0


def _cmd_fingerprint(args) -> int:
    bundle = corpus.load_algebra(args.file)
    fp = morphisms.fingerprint(bundle)
    payload = {"file": str(args.file), "fingerprint": fp.to_dict()}
    if args.report:
        _write_report(args.report, payload)
    print(_dump(payload))
    return 0


def _cmd_iso(args) -> int:
    first = corpus.load_algebra(args.first)
    second = corpus.load_algebra(args.second)
    grid = _parse_grid(args.grid, args.denominators)
    if first.kind != second.kind or first.dim != second.dim:
        payload = {"verdict": "distinct", "fingerprint_fields": ["kind-or-dimension"]}
    else:
        fp_a, fp_b = morphisms.fingerprint(first), morphisms.fingerprint(second)
        if fp_a != fp_b:
            payload = {
                "verdict": "distinct",
                "fingerprint_fields": fp_a.differing_fields(fp_b),
            }
        else:
            found = morphisms.brute_force_iso_search(first, second, grid)
            if found is not None:
                payload = {"verdict": "isomorphic", "matrix": _matrix_rows(found)}
            else:
                payload = {"verdict": "unknown", "note": "no isomorphism within grid"}
    if args.report:
        _write_report(args.report, payload)
    print(_dump(payload))
    return 0


def _cmd_corpus(args) -> int:
    root = Path(args.corpus) if args.corpus else None
    if args.action == "list":
        for entry in corpus.list_entries(root):
            print(f"{entry['id']:32} {entry['type']:8} {entry['path']}")
        return 0
    report = corpus.corpus_verify_all(root=root, sq15=args.sq15)
    if args.report:
        Path(args.report).write_text(corpus.report_to_json(report), encoding="utf-8")
    if args.discrepancies:
        Path(args.discrepancies).write_text(
            corpus.discrepancies_markdown(report), encoding="utf-8"
        )
    summary = report["summary"]
    print(
        f"{summary['total']} entries: {summary['pass']} pass, {summary['fail']} fail, "
        f"{len(summary['discrepancies'])} discrepanc"
        + ("y" if len(summary["discrepancies"]) == 1 else "ies")
    )
    for eid in summary["discrepancies"]:
        print(f"  discrepancy: {eid}")
    return 0 if not summary["discrepancies"] else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homsplit",
        description="Exact symbolic verification workbench for Hom-type splitting algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_report(p):
        p.add_argument("--report", help="write the JSON report to this path")

    p = sub.add_parser("check", help="run the axiom checker matching a file's kind")
    p.add_argument("file")
    p.add_argument(
        "--multiplicative",
        action="store_true",
        help="also run the opt-in multiplicativity check (never folded into kind checks)",
    )
    p.add_argument(
        "--sq15",
        choices=SQ15_CHOICES,
        default="literal",
        help="reading of the ambiguous six-dendriform identity sq15",
    )
    add_report(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("construct", help="run a structure-producing construction")
    p.add_argument(
        "name",
        choices=[
            "sum-dias", "sum-tri", "dsum", "hemi", "semidirect",
            "quotient", "avg-dias", "rb-dias", "ravg-quadri", "havg-six",
        ],
    )
    p.add_argument("inputs", nargs="+", help="input algebra/representation/operator files")
    p.add_argument("-o", "--output", required=True, help="output algebra file")
    p.add_argument(
        "--force",
        action="store_true",
        help="build even when the precondition report fails (discrepancy hunting)",
    )
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify-op", help="verify an operator file against its context")
    p.add_argument("context", help="algebra/representation/action file")
    p.add_argument("operator", help="operator file {kind, matrix}")
    p.add_argument(
        "--strict-twist",
        action="store_true",
        help="require twist commutation even for operator kinds whose definition omits it",
    )
    add_report(p)
    p.set_defaults(func=_cmd_verify_op)

    p = sub.add_parser("solve-op", help="enumerate operator solutions over a rational grid")
    p.add_argument("context")
    p.add_argument("--kind", required=True, choices=sorted(
        {"averaging_assoc", "rota_baxter", "relative_averaging",
         "homomorphic_relative_averaging", "averaging_quadri"}
    ))
    p.add_argument("--grid", default="-2..2", help="integer range lo..hi (default -2..2)")
    p.add_argument(
        "--denominators", default="1", help="comma-separated denominators (default 1)"
    )
    p.add_argument("--strict-twist", action="store_true")
    add_report(p)
    p.set_defaults(func=_cmd_solve_op)

    p = sub.add_parser(
        "emit-system", help="emit the polynomial system cutting out an operator variety"
    )
    p.add_argument("context")
    p.add_argument("--kind", required=True)
    p.add_argument("--unknown-prefix", default="t", help="prefix of the unknown names tij")
    p.add_argument("--strict-twist", action="store_true")
    add_report(p)
    p.set_defaults(func=_cmd_emit_system)

    p = sub.add_parser("fingerprint", help="isomorphism-invariant fingerprint of an algebra")
    p.add_argument("file")
    add_report(p)
    p.set_defaults(func=_cmd_fingerprint)

    p = sub.add_parser("iso", help="bounded brute-force isomorphism search")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--grid", default="-2..2")
    p.add_argument("--denominators", default="1")
    add_report(p)
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("corpus", help="batch-verify the bundled corpus")
    p.add_argument("action", choices=["verify-all", "list"])
    p.add_argument("--corpus", help="corpus root directory (default: bundled)")
    p.add_argument("--sq15", choices=SQ15_CHOICES, default="literal")
    p.add_argument(
        "--discrepancies", help="write the discrepancy summary markdown to this path"
    )
    add_report(p)
    p.set_defaults(func=_cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (corpus.CorpusError, ModelError, ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
