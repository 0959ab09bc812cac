"""Command-line front end.

Exit codes: 0 success / equivalent, 1 not equivalent, 2 out of scope,
3 input error, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    AlgisoError,
    CapExceeded,
    DimensionMismatch,
    FieldMismatch,
    FrameDeficient,
    NotInV0,
    ParseError,
    WrongField,
)
from .field import field_from_text
from .fileio import dump_algebra, load_algebra
from .frame import default_k_max
from .msc import act, check_trace_form_cap
from .normalize import normalize
from .oracle import DEFAULT_GL_CAP, RngSpec, brute_force_equivalent, random_algebra, random_gl
from .separate import (
    Equivalent,
    NotEquivalent,
    OutOfScope,
    compare,
    invariants,
    rough_compare,
    rough_invariants,
)

EXIT_OK = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_OUT_OF_SCOPE = 2
EXIT_INPUT_ERROR = 3
EXIT_CAP = 4


def render(obj, indent=0) -> str:
    """JSON with flat lists and dicts kept on one line, so matrices print row per line."""
    pad = "  " * indent
    if isinstance(obj, dict):
        if all(not isinstance(v, (list, tuple, dict)) for v in obj.values()):
            return json.dumps(obj)
        items = [
            f'{pad}  {json.dumps(k)}: {render(v, indent + 1)}' for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(x, (list, tuple, dict)) for x in obj):
            return json.dumps(list(obj))
        items = [pad + "  " + render(x, indent + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj)


def _emit(report) -> None:
    sys.stdout.write(render(report) + "\n")


def _out_of_scope(reason, detail):
    _emit({"status": "out_of_scope", "reason": reason, "detail": detail})
    return EXIT_OUT_OF_SCOPE


def _kmax(args, m):
    return args.kmax if args.kmax is not None else default_k_max(m)


def cmd_invariants(args) -> int:
    A = load_algebra(args.file)
    k_max = _kmax(args, A.m)
    try:
        norm = normalize(A)
        inv = invariants(A, k_max)
    except NotInV0 as exc:
        return _out_of_scope("NotInV0", str(exc))
    except FrameDeficient as exc:
        return _out_of_scope("FrameDeficient", str(exc))
    _emit(
        {
            "status": "ok",
            "dim": A.m,
            "field": A.field.to_json(),
            "kmax": k_max,
            "provenance": [list(p) for p in inv.provenance],
            "D": norm.D.tolist(),
            "J1": inv.J1.mat.tolist(),
            "J2": inv.J2.tolist(),
        }
    )
    return EXIT_OK


def cmd_compare(args) -> int:
    A = load_algebra(args.file_a)
    B = load_algebra(args.file_b)
    k_max = _kmax(args, A.m)
    verdict = compare(A, B, k_max)
    if isinstance(verdict, OutOfScope):
        return _out_of_scope(verdict.reason, verdict.detail)
    if isinstance(verdict, NotEquivalent):
        d = verdict.distinguisher
        _emit(
            {
                "verdict": "NotEquivalent",
                "invariant": d.invariant,
                "entry": [d.row, d.col],
                "A": d.left,
                "B": d.right,
            }
        )
        return EXIT_NOT_EQUIVALENT
    g = verdict.witness
    _emit(
        {
            "verdict": "Equivalent",
            "witness": g.tolist(),
            "verified": act(g, A) == B,
        }
    )
    return EXIT_OK


def _rough_report(r):
    return {
        "k": r.k,
        "rank": r.rank,
        "signature": list(r.signature) if r.signature is not None else None,
        "disc_class": r.disc_class,
    }


def cmd_rough(args) -> int:
    A = load_algebra(args.file)
    check_trace_form_cap(A.m, args.k)
    report = {"levels": [_rough_report(rough_invariants(A, k)) for k in range(1, args.k + 1)]}
    if args.other is None:
        _emit(report)
        return EXIT_OK
    B = load_algebra(args.other)
    verdict = rough_compare(A, B, args.k)
    report["other_levels"] = [
        _rough_report(rough_invariants(B, k)) for k in range(1, args.k + 1)
    ]
    report["verdict"] = verdict
    _emit(report)
    return EXIT_NOT_EQUIVALENT if verdict == "DefinitelyNotEquivalent" else EXIT_OK


def cmd_normalize(args) -> int:
    A = load_algebra(args.file)
    try:
        norm = normalize(A)
    except NotInV0 as exc:
        return _out_of_scope("NotInV0", str(exc))
    _emit({"status": "ok", "Q": norm.Q.tolist(), "D": norm.D.tolist(), "Abar": norm.Abar.mat.tolist()})
    return EXIT_OK


def cmd_brute_compare(args) -> int:
    A = load_algebra(args.file_a)
    B = load_algebra(args.file_b)
    verdict = brute_force_equivalent(A, B, cap=args.cap)
    if isinstance(verdict, Equivalent):
        _emit({"verdict": "Equivalent", "witness": verdict.witness.tolist()})
        return EXIT_OK
    _emit({"verdict": "NotEquivalent"})
    return EXIT_NOT_EQUIVALENT


def _write(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_gen_random(args) -> int:
    field = field_from_text(args.field)
    A = random_algebra(args.dim, field, RngSpec(args.seed, args.bound))
    _write(dump_algebra(A), args.output)
    return EXIT_OK


def cmd_transform(args) -> int:
    A = load_algebra(args.file)
    g = random_gl(A.m, A.field, RngSpec(args.seed, args.bound))
    _write(dump_algebra(act(g, A)), args.output)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="algiso", description="Exact isomorphism testing for generic algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", help="print the separating invariants J1, J2")
    p.add_argument("file")
    p.add_argument("--kmax", type=int)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("compare", help="decide isomorphism, with a verified witness")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--kmax", type=int)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("rough", help="rank/signature/discriminant of the trace forms")
    p.add_argument("file")
    p.add_argument("other", nargs="?")
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_rough)

    p = sub.add_parser("normalize", help="print Q, D and the normalized algebra")
    p.add_argument("file")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("brute-compare", help="exhaustive GL(m,p) search")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--cap", type=int, default=DEFAULT_GL_CAP)
    p.set_defaults(func=cmd_brute_compare)

    p = sub.add_parser("gen-random", help="write a random algebra file")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--field", default="rational", help="'rational' or 'prime:<p>'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen_random)

    p = sub.add_parser("transform", help="write act(g, A) for a random invertible g")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_transform)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError, DimensionMismatch, FieldMismatch, WrongField, ValueError) as exc:
        print(f"algiso: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except CapExceeded as exc:
        print(f"algiso: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except AlgisoError as exc:
        print(f"algiso: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
