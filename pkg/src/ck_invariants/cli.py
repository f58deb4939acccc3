"""Command-line front end; a thin client over the service handlers.

All computation lives in the service layer and below -- this module only
parses arguments, loads the input document, invokes a handler, and renders
the report.  Exit codes: 0 success, 1 validation error, 2 size guard
exceeded, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import service
from .errors import GuardExceeded, InternalInvariantError, InvalidPresentation

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_GUARD = 2
EXIT_INTERNAL = 3


def _load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise InvalidPresentation(f"cannot read input: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidPresentation(f"input is not valid JSON: {exc}") from exc


def _emit_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _group_text(model: Optional[service.GroupModel]) -> str:
    return model.describe() if model is not None else "?"


def _cmd_kgroups(args: argparse.Namespace) -> int:
    report = service.compute_kgroups(
        _load_document(args.input),
        unital=args.unital,
        canonicalize=args.canonicalize_presentation,
    )
    if args.json:
        _emit_json(report.model_dump(exclude_none=True))
    else:
        parts = [f"K0 = {_group_text(report.k0)}", f"K1 = {_group_text(report.k1)}"]
        if args.unital:
            parts.append(f"K0~ = {_group_text(report.k0_unital)}")
            parts.append(f"K1~ = {_group_text(report.k1_unital)}")
        print(", ".join(parts))
    return EXIT_OK


def _cmd_spectrum(args: argparse.Namespace) -> int:
    report = service.compute_spectrum(
        _load_document(args.input), canonicalize=args.canonicalize_presentation
    )
    if args.json:
        _emit_json(report.model_dump())
    else:
        print(f"unital: {'yes' if report.unital else 'no'}")
        print(f"zero column at infinity: {'yes' if report.zero_at_infinity else 'no'}")
        if report.accumulation_columns:
            for col in report.accumulation_columns:
                print(f"accumulation column: {col}")
        else:
            print("accumulation columns: none")
    return EXIT_OK


def _cmd_relations(args: argparse.Namespace) -> int:
    report = service.compute_relations(
        _load_document(args.input),
        size_bound=args.size_bound,
        canonicalize=args.canonicalize_presentation,
    )
    if args.json:
        _emit_json(report.model_dump())
    else:
        for item in report.instances:
            xs = ",".join(str(v) for v in item.x)
            ys = ",".join(str(v) for v in item.y)
            support = ",".join(str(v) for v in item.support)
            verdict = "holds" if item.holds else "FAILS"
            print(f"X={{{xs}}} Y={{{ys}}} support={{{support}}} {verdict}")
        print(f"applicable instances: {len(report.instances)}")
        print(f"all hold: {'yes' if report.all_hold else 'no'}")
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    report = service.compute_oracle(
        _load_document(args.input),
        slabs=args.slabs,
        canonicalize=args.canonicalize_presentation,
    )
    if args.json:
        _emit_json(report.model_dump())
    else:
        print("slab sizes: " + ", ".join(str(n) for n in report.slab_sizes))
        print("slab kernel ranks: " + ", ".join(str(r) for r in report.slab_ranks))
        print(f"k1 slab comparison: {'agree' if report.k1_matches else 'DISAGREE'}")
        print(f"k0 relations verified: {'yes' if report.k0_relations_verified else 'NO'}")
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    report = service.compute_validate(
        _load_document(args.input), canonicalize=args.canonicalize_presentation
    )
    if args.json:
        _emit_json(report.model_dump(exclude_none=True))
    else:
        if report.format == "finite":
            print(f"ok: finite {report.n}x{report.n} matrix")
        else:
            print(f"ok: ep presentation with {report.num_patterns} patterns")
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .api import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def _parse_slabs(text: str) -> list:
    try:
        sizes = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError("slabs must be comma-separated integers") from exc
    if not sizes or any(n < 1 for n in sizes):
        raise argparse.ArgumentTypeError("slab sizes must be positive integers")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ck-invariants",
        description=(
            "Exact K-theory of Cuntz-Krieger algebras for finite 0-1 matrices "
            "and eventually periodic infinite presentations."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="path to a JSON input document")
        p.add_argument("--json", action="store_true", help="emit a machine-readable JSON report")
        p.add_argument(
            "--canonicalize-presentation",
            action="store_true",
            help="reduce duplicate/unused patterns instead of rejecting them",
        )

    p = sub.add_parser("kgroups", help="compute K0 and K1, with unital variants")
    add_common(p)
    p.add_argument(
        "--unital",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="include the unitized algebra's groups (default: on)",
    )
    p.set_defaults(func=_cmd_kgroups)

    p = sub.add_parser("spectrum", help="accumulation columns and unitality")
    add_common(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("relations", help="enumerate and verify relation instances")
    add_common(p)
    p.add_argument("--size-bound", type=int, default=None, help="bound on |X| + |Y|")
    p.set_defaults(func=_cmd_relations)

    p = sub.add_parser("oracle", help="brute-force slab cross-checks")
    add_common(p)
    p.add_argument("--slabs", type=_parse_slabs, default=None, help="slab sizes N1,N2,...")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("validate", help="parse and validate only")
    add_common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidPresentation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
