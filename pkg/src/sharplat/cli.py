"""Batch front-end: validate lattice files, emit property/sharpness/
audit reports, run censuses and exemplar self-tests, and write the
built-in gallery.

All output is JSON (one document per invocation, machine-ordered);
``--pretty`` switches to indented rendering.  Exit codes: 0 success,
1 a property or identity was falsified, 2 invalid input (I/O, schema
and axiom failures carry distinct diagnostics), 3 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import enumeration, exemplars, gallery, predicates
from .core import parse_lattice, parse_poset
from .errors import (
    BadSchema,
    ClaimFalsified,
    InternalEquivalenceViolation,
    InternalValidationFailure,
    SharplatError,
)

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_INVALID_INPUT = 2
EXIT_INTERNAL = 3


def _emit(obj: dict, pretty: bool) -> None:
    if pretty:
        print(json.dumps(obj, indent=2))
    else:
        print(json.dumps(obj, separators=(",", ":")))


def _witness(exc: SharplatError):
    return list(exc.witness) if exc.witness is not None else None


def _read_document(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _InputFailure({"valid": False, "stage": "io", "detail": str(exc)})
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _InputFailure(
            {"valid": False, "stage": "schema", "detail": f"not valid JSON: {exc}"}
        )


class _InputFailure(Exception):
    def __init__(self, payload: dict):
        super().__init__(payload.get("detail", "invalid input"))
        self.payload = payload


def cmd_validate(args) -> int:
    doc = _read_document(args.path)
    try:
        lattice = parse_lattice(doc)
    except BadSchema as exc:
        _emit({"valid": False, "stage": "schema", "detail": str(exc)}, args.pretty)
        return EXIT_INVALID_INPUT
    except SharplatError as exc:
        _emit(
            {
                "valid": False,
                "stage": "axioms",
                "error": type(exc).__name__,
                "witness": _witness(exc),
                "detail": str(exc),
            },
            args.pretty,
        )
        return EXIT_INVALID_INPUT
    _emit(
        {
            "valid": True,
            "elements": list(lattice.names),
            "size": lattice.size,
        },
        args.pretty,
    )
    return EXIT_OK


def cmd_report(args) -> int:
    doc = _read_document(args.path)
    lattice = parse_lattice(doc)
    wanted_all = not (args.profile or args.sharp or args.audit)
    out: dict = {"elements": list(lattice.names)}
    if args.profile or wanted_all:
        out["profile"] = predicates.lattice_profile(lattice).to_dict()
        out["element_profiles"] = [
            predicates.element_profile(lattice, x).to_dict()
            for x in lattice.elements()
        ]
        out["principal_monoid"] = predicates.principal_monoid(lattice).to_dict()
    if args.sharp or wanted_all:
        report = predicates.sharpness_report(lattice)
        section = report.to_dict()
        if report.counterexample is not None:
            section["counterexample_names"] = [
                lattice.names[i] for i in report.counterexample
            ]
        out["sharpness"] = section
    if args.audit or wanted_all:
        audit = predicates.theorem_audit(lattice)
        out["audit"] = audit.to_dict()
    _emit(out, args.pretty)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.chain is not None:
        poset = enumeration.chain_poset(args.chain)
    else:
        poset = parse_poset(_read_document(args.poset))
    emit_dir = args.emit_representatives
    if args.census:
        result = enumeration.census(
            poset,
            keep_representatives=emit_dir is not None,
            audit_each=args.audit_each,
            distinct_up_to_auto=args.distinct,
        )
        out = result.to_dict()
        if emit_dir is not None:
            reps = out.pop("representatives")
            out["representatives_files"] = _write_representatives(emit_dir, reps)
    else:
        structures = list(enumeration.enumerate_structures(poset))
        if args.audit_each:
            for L in structures:
                try:
                    predicates.theorem_audit(L)
                except ClaimFalsified as exc:
                    exc.lattice_document = L.serialize()
                    raise
        out = {
            "poset": {
                "elements": list(poset.names),
                "leq": [[1 if v else 0 for v in row] for row in poset.leq],
            },
            "counting": "labeled",
            "total_structures": len(structures),
        }
        if emit_dir is not None:
            out["representatives_files"] = _write_representatives(
                emit_dir, [L.serialize() for L in structures]
            )
    _emit(out, args.pretty)
    return EXIT_OK


def _write_representatives(directory: str, docs) -> list[str]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    names = []
    for k, doc in enumerate(docs, start=1):
        name = f"structure_{k:03d}.json"
        (directory / name).write_text(
            json.dumps(doc, indent=2) + "\n", encoding="utf-8"
        )
        names.append(name)
    return names


def cmd_exemplars(args) -> int:
    if args.model == "zminus":
        report = exemplars.zminus_selftest(max_exponent=args.trials or 100)
        ok = report["failures"] == 0
    elif args.model == "r1":
        report = exemplars.r1_selftest(trials=args.trials or 1000, seed=args.seed)
        ok = report["failures"] == 0
    else:
        report = exemplars.nideal_selftest(
            trials=args.trials or 200, seed=args.seed
        )
        ok = report["expected_outcome_confirmed"]
    _emit(report, args.pretty)
    return EXIT_OK if ok else EXIT_FALSIFIED


def cmd_gallery(args) -> int:
    if args.out is not None:
        written = gallery.write_fixtures(args.out)
        _emit({"directory": args.out, "written": written}, args.pretty)
    else:
        _emit({"gallery": gallery.gallery_documents()}, args.pretty)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sharplat",
        description="Exact toolkit for finite multiplicative lattices",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a lattice file", allow_abbrev=False)
    p.add_argument("path")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("report", help="property/sharpness/audit report", allow_abbrev=False)
    p.add_argument("path")
    p.add_argument("--profile", action="store_true")
    p.add_argument("--sharp", action="store_true")
    p.add_argument("--audit", action="store_true")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("enumerate", help="enumerate structures on a poset", allow_abbrev=False)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--chain", type=int, metavar="N")
    source.add_argument("--poset", metavar="PATH")
    p.add_argument("--census", action="store_true")
    p.add_argument("--audit-each", action="store_true")
    p.add_argument("--distinct", action="store_true")
    p.add_argument("--emit-representatives", metavar="DIR")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("exemplars", help="run exemplar self-tests", allow_abbrev=False)
    p.add_argument("--model", choices=["zminus", "r1", "nideal"], required=True)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_exemplars)

    p = sub.add_parser("gallery", help="print or write the fixture gallery", allow_abbrev=False)
    p.add_argument("--out", metavar="DIR")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_gallery)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _InputFailure as exc:
        _emit(exc.payload, getattr(args, "pretty", False))
        return EXIT_INVALID_INPUT
    except (InternalEquivalenceViolation, InternalValidationFailure) as exc:
        _emit(
            {
                "error": type(exc).__name__,
                "witness": _witness(exc),
                "detail": str(exc),
            },
            getattr(args, "pretty", False),
        )
        return EXIT_INTERNAL
    except ClaimFalsified as exc:
        _emit(
            {
                "error": "ClaimFalsified",
                "claim": exc.claim,
                "witness": _witness(exc),
                "lattice": exc.lattice_document,
            },
            getattr(args, "pretty", False),
        )
        return EXIT_INTERNAL
    except SharplatError as exc:
        _emit(
            {
                "error": type(exc).__name__,
                "witness": _witness(exc),
                "detail": str(exc),
            },
            getattr(args, "pretty", False),
        )
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
