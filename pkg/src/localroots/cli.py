"""Command-line front end.

Exit status: 0 on a decided result, 2 when the honest answer is "undecided"
or the precision ran out, 1 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from sympy import factorint

from . import cartan
from .arith import INF, InsufficientPrecision, first_primes, require_prime
from .global_rational import global_unipotent_power
from .matrices import laurent_field, matrix_slopes, padic_field
from .power_lab import (
    TowerWitness,
    build_unipotent_tower,
    cyclic_closure,
    cyclic_root,
    has_kth_root,
    is_distal,
    is_unipotent,
    roots_all_orders,
    torsion_exponent_bound,
    unipotent_power_bound,
    unipotent_power_exponent,
    verify_tower,
)
from .serialize import SchemaError, field_from_dict, matrix_from_dict, to_jsonable

EXIT_OK, EXIT_INPUT, EXIT_UNDECIDED = 0, 1, 2
DEFAULT_PRECISION = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError as exc:
        raise UsageError(f"file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from exc


def _load_matrix(path, prime=None, precision=None):
    data = _load_json(path)
    if not isinstance(data, dict):
        raise SchemaError("matrix file must hold a JSON object")
    fdata = data.get("field", {"kind": "rational"})
    fld = field_from_dict(fdata, precision)
    if prime is not None:
        if fld.kind == "rational":
            fld = padic_field(require_prime(prime), precision or DEFAULT_PRECISION)
        elif fld.prime != prime:
            raise SchemaError(f"--prime {prime} conflicts with the file's field")
    return matrix_from_dict(data, fld)


def _report(op, verdict, certificate=None, precision=None, **extra):
    out = {"op": op, "verdict": verdict, "certificate": certificate}
    if precision is not None:
        out["precision_used"] = precision
    out.update(extra)
    return to_jsonable(out)


def _field_precision(M):
    prof = getattr(M.field, "profile", None)
    return prof.precision if prof is not None else None


# ---------------------------------------------------------------- verbs


def cmd_analyze(args):
    M = _load_matrix(args.file, args.prime, args.precision)
    verdict = {"unipotent": is_unipotent(M)}
    if M.field.prime is not None:
        verdict["distal"] = is_distal(M)
        verdict["newton_polygon"] = matrix_slopes(M).to_dict()
    verdict["unipotent_power_exponent"] = unipotent_power_exponent(M)
    ra = roots_all_orders(M)
    verdict["roots_all_orders"] = ra.status
    return EXIT_OK, _report("analyze", verdict, ra.certificate, _field_precision(M), matrix=M)


def cmd_root(args):
    M = _load_matrix(args.file)
    v = has_kth_root(M, args.k)
    verdict = {"status": v.status, "reason": v.reason, "witness": v.witness}
    code = EXIT_UNDECIDED if v.status == "undecided" else EXIT_OK
    precision = None if v.precision == INF else v.precision
    return code, _report("root", verdict, None, precision, k=args.k)


def cmd_tower(args):
    M = _load_matrix(args.file)
    q = require_prime(args.q)
    if M.field.characteristic == 0 and is_unipotent(M):
        tower = build_unipotent_tower(M, q, args.depth)
        source = "unipotent"
    else:
        H = cyclic_closure(M)
        if not H.is_finite:
            verdict = {"status": "undecided", "reason": "infinite-order, non-unipotent base"}
            return EXIT_UNDECIDED, _report("tower", verdict)
        if H.order % q == 0:
            verdict = {"status": "no", "reason": "q divides the order", "order": H.order}
            return EXIT_OK, _report("tower", verdict)
        tower = TowerWitness(M, q, tuple(cyclic_root(H, q, k) for k in range(1, args.depth + 1)))
        source = "cyclic"
    verdict = {
        "status": "yes",
        "source": source,
        "verified": verify_tower(tower),
        "witnesses": list(tower.witnesses),
    }
    return EXIT_OK, _report("tower", verdict, None, None, q=q, depth=args.depth)


def cmd_density(args):
    data = _load_json(args.spec)
    try:
        spec = cartan.GroupSpec.from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(str(exc)) from exc
    if args.k < 1:
        raise UsageError("--k must be positive")
    return EXIT_OK, _report("density", cartan.density_report(spec, args.k))


def _parse_primes(text: str) -> list[int]:
    if text.startswith("first:"):
        return first_primes(int(text.split(":", 1)[1]))
    try:
        return [require_prime(int(x)) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad prime list {text!r}: {exc}") from exc


def cmd_global(args):
    M = _load_matrix(args.file)
    if M.field.kind != "rational":
        raise SchemaError("global analysis needs a rational matrix")
    report = global_unipotent_power(M, _parse_primes(args.primes))
    return EXIT_OK, _report("global", report.to_dict(), None, None, matrix=M)


def cmd_bound(args):
    if args.n < 1:
        raise UsageError("--n must be positive")
    if args.prime is not None:
        fld = padic_field(require_prime(args.prime))
    else:
        f = factorint(args.laurent)
        if len(f) != 1:
            raise UsageError("--laurent needs a prime power q")
        (p, s), = f.items()
        fld = laurent_field(int(p), int(s))
    R, profiles = unipotent_power_bound(args.n, fld)
    verdict = {
        "field": fld.describe(),
        "unipotent_power_bound": R,
        "torsion_exponent_bound": torsion_exponent_bound(args.n, fld),
        "profiles": [{"residue_degree": x.residue_degree, "ramification": x.ramification} for x in profiles],
    }
    return EXIT_OK, _report("bound", verdict)


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    parser = _Parser(prog="localroots", description="Power maps and roots in GL_n over local fields.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="distality, unipotency, roots of all orders")
    p.add_argument("--prime", type=int)
    p.add_argument("--precision", type=int, default=None)
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("root", parents=[common], help="decide whether a k-th root exists")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_root)

    p = sub.add_parser("tower", parents=[common], help="build and verify a q-power root tower")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("density", parents=[common], help="density of the k-th power map")
    p.add_argument("--spec", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("global", parents=[common], help="per-prime analysis of a rational matrix")
    p.add_argument("--primes", required=True, help="'2,3,5' or 'first:N'")
    p.add_argument("file")
    p.set_defaults(func=cmd_global)

    p = sub.add_parser("bound", parents=[common], help="unipotent-power and torsion bounds")
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--prime", type=int)
    g.add_argument("--laurent", type=int, metavar="Q")
    p.set_defaults(func=cmd_bound)
    return parser


def _render_text(report, indent=0) -> str:
    lines = []
    pad = "  " * indent
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_render_text(value, indent + 1))
        else:
            lines.append(f"{pad}{key}: {json.dumps(value, sort_keys=True)}")
    return "\n".join(line for line in lines if line)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        code, report = args.func(args)
    except (UsageError, SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InsufficientPrecision as exc:
        code, report = EXIT_UNDECIDED, _report(args.verb, {"status": "undecided", "reason": f"insufficient precision: {exc}"})
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(_render_text(report))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

