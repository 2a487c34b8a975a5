"""Command-line interface.

    hyperenc encode     --family hessian --q 5 --d 3 --t 1
    hyperenc hash       --spec curve.json --message hello
    hyperenc divisor    --family demoivre --q 17 --d 5 --a 1 --b 1 --message -
    hyperenc invariants --family genus2type2 --q 251 --lambda 1 --mu 1 --a 1 --v 2 --w 3
    hyperenc census     --family hessian --q 5 11

Field elements are lowercase hex without prefix (``0x`` is accepted), q and
degrees are decimal.  Output is JSON.  Exit codes: 0 success, 1 invalid input,
2 not encodable (including an empty divisor or exhausted hash counter),
3 a census check failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import census as census_mod
from .curves import FAMILIES, DeMoivreCurve, Genus2Type2Curve, HessianCurve, curve_from_dict
from .encoders import encode
from .exceptions import (
    CapabilityMissing,
    DegenerateCurve,
    EmptyDivisor,
    FieldError,
    FieldTooLarge,
    HashFailure,
    NotEncodable,
    Undefined,
)
from .hashing import hash_to_divisor, hash_to_point
from .invariants import hessian_j_invariant, igusa, igusa_locus_residual

EXIT_OK, EXIT_INVALID, EXIT_NOT_ENCODABLE, EXIT_CENSUS_FAILED = 0, 1, 2, 3

# curve parameter flag -> document key; degrees are decimal ints, the rest hex
_PARAM_FLAGS = ("d", "a", "b", "lambda", "mu", "v", "w")
_INT_DEGREE = {"quasiquadratic", "demoivre"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; that code means "not encodable" here.
    def error(self, message):
        raise UsageError(message)


def _add_curve_args(p, multi_q=False):
    p.add_argument("--spec", help="curve-spec JSON file")
    p.add_argument("--family", choices=FAMILIES)
    if multi_q:
        p.add_argument("--q", nargs="+", type=int, help="prime modulus (several allowed)")
    else:
        p.add_argument("--q", help="prime modulus (decimal)")
    for name in _PARAM_FLAGS:
        p.add_argument(f"--{name}", dest=f"p_{name}")


def _curve_doc(args, q=None):
    if args.spec:
        try:
            with open(args.spec) as fh:
                return json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise UsageError(f"cannot read spec {args.spec}: {e}") from None
    if not args.family:
        raise UsageError("give --spec or --family")
    q = q if q is not None else args.q
    if q is None:
        raise UsageError("--q is required")
    doc = {"family": args.family, "q": str(q)}
    for name in _PARAM_FLAGS:
        value = getattr(args, f"p_{name}")
        if value is None:
            continue
        if name == "d" and args.family in _INT_DEGREE:
            try:
                value = int(value)
            except ValueError:
                raise UsageError(f"--d must be a decimal integer for {args.family}") from None
        doc[name] = value
    return doc


def _curve(args, q=None):
    return curve_from_dict(_curve_doc(args, q))


def _message(args):
    if args.message == "-":
        return sys.stdin.buffer.read()
    return args.message.encode()


def _has_curve_params(args):
    return any(getattr(args, f"p_{n}") is not None for n in _PARAM_FLAGS)


def cmd_encode(args):
    curve = _curve(args)
    t = curve.field.from_hex(args.t)
    return EXIT_OK, encode(curve, t).to_dict()


def cmd_hash(args):
    curve = _curve(args)
    point, counter, t = hash_to_point(curve, _message(args), args.digest)
    return EXIT_OK, {"point": point.to_dict(), "counter": counter, "t": t.hex()}


def cmd_divisor(args):
    curve = _curve(args)
    div = hash_to_divisor(curve, _message(args), args.g, args.digest)
    return EXIT_OK, div.to_dict()


def cmd_invariants(args):
    curve = _curve(args)
    out = {"curve": curve.to_dict()}
    if isinstance(curve, HessianCurve):
        out["j"] = hessian_j_invariant(curve).hex()
        return EXIT_OK, out
    if isinstance(curve, DeMoivreCurve) and curve.d != 5:
        raise Undefined("Igusa invariants need a genus-2 De Moivre curve (d=5)")
    J = igusa(curve)
    out["igusa"] = {k: v.hex() for k, v in zip(("J2", "J4", "J6", "J8", "J10"), J)}
    if isinstance(curve, Genus2Type2Curve):
        out["locus_residual"] = igusa_locus_residual(J).hex()
    return EXIT_OK, out


def cmd_census(args):
    if args.spec or _has_curve_params(args):
        if args.q and len(args.q) > 1:
            raise UsageError("a single-curve census takes one --q")
        curve = _curve(args, args.q[0] if args.q else None)
        report = census_mod.image_census(curve, workers=args.workers, cap=args.cap)
        checks = census_mod.check_report(report, curve)
        doc = report.to_dict(include_image=args.show_image)
        doc["checks"] = [c.to_dict() for c in checks]
        doc["passed"] = all(c.passed for c in checks)
        return (EXIT_OK if doc["passed"] else EXIT_CENSUS_FAILED), doc
    if not args.family or not args.q:
        raise UsageError("census needs --family and --q (or a single curve)")
    summary = census_mod.verify_family(args.family, args.q, trials=args.trials, seed=args.seed,
                                       workers=args.workers, cap=args.cap)
    return (EXIT_OK if summary.passed else EXIT_CENSUS_FAILED), summary.to_dict(args.show_image)


def build_parser():
    parser = _Parser(prog="hyperenc", description="Deterministic encodings into elliptic and hyperelliptic curves.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("encode", help="encode one field element")
    _add_curve_args(p)
    p.add_argument("--t", required=True, help="field element (hex)")
    p.set_defaults(func=cmd_encode)

    for name, func, helptext in (("hash", cmd_hash, "hash a message to a point"),
                                 ("divisor", cmd_divisor, "hash a message to a reduced divisor")):
        p = sub.add_parser(name, help=helptext)
        _add_curve_args(p)
        p.add_argument("--message", required=True, help="message text, or - to read bytes from stdin")
        p.add_argument("--digest", default="sha256", help="hashlib algorithm name (default sha256)")
        if name == "divisor":
            p.add_argument("--g", type=int, help="number of points (default: the genus)")
        p.set_defaults(func=func)

    p = sub.add_parser("invariants", help="j-invariant or Igusa invariants of a curve")
    _add_curve_args(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("census", help="exhaustive image census")
    _add_curve_args(p, multi_q=True)
    p.add_argument("--trials", type=int, help="random curves per q (genus-2 and De Moivre families)")
    p.add_argument("--seed", type=int, default=0, help="PRNG seed for curve sampling")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cap", type=int, default=census_mod.DEFAULT_CAP, help="largest q allowed")
    p.add_argument("--show-image", action="store_true", help="include the image points")
    p.set_defaults(func=cmd_census)

    for p in sub.choices.values():
        p.add_argument("--output", "-o", help="write JSON here instead of stdout")
    return parser


def _emit(doc, path=None):
    text = json.dumps(doc, indent=2)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(json.dumps({"error": "usage", "message": str(e)}), file=sys.stderr)
        return EXIT_INVALID
    try:
        code, doc = args.func(args)
    except NotEncodable as e:
        code, doc = EXIT_NOT_ENCODABLE, {"error": "not_encodable", "stage": e.stage}
    except EmptyDivisor as e:
        code, doc = EXIT_NOT_ENCODABLE, {"error": "empty_divisor", "message": str(e)}
    except HashFailure as e:
        code, doc = EXIT_NOT_ENCODABLE, {"error": "hash_failure", "message": str(e)}
    except (UsageError, FieldError, DegenerateCurve, CapabilityMissing, FieldTooLarge, Undefined,
            ValueError, TypeError) as e:
        print(json.dumps({"error": type(e).__name__, "message": str(e)}), file=sys.stderr)
        return EXIT_INVALID
    _emit(doc, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
