"""Command-line front end: every library operation over built-in families
or JSON datum files, with table or machine-readable JSON output.

Exit codes: 0 success, 1 domain error (structured error object on
stdout), 2 usage error.  Integers beyond 2^53 are emitted as decimal
strings in JSON mode so consumers never lose precision.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence, Tuple

from . import hyperalg, lattice, liesuper, rootdata, steinberg
from .lattice import Weight

DOMAIN_ERRORS = (
    lattice.DimensionMismatch,
    rootdata.DatumValidationError,
    rootdata.InvalidOrderError,
    rootdata.ParameterError,
    liesuper.DecompositionError,
    steinberg.FlatnessError,
    steinberg.DecompositionFailure,
    steinberg.UnsupportedFamilyError,
    json.JSONDecodeError,
    OSError,
)

BIG = 2**53


def _jsonable(value):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) >= BIG else value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return str(value)


def emit(payload: dict, as_json: bool) -> None:
    payload = _jsonable(payload)
    if as_json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
        return
    width = max((len(str(k)) for k in payload), default=0)
    for key in sorted(payload):
        print("%-*s  %s" % (width, key, json.dumps(payload[key], sort_keys=True)))


def parse_weight(text: str) -> Weight:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise rootdata.ParameterError("cannot parse weight %r" % text) from exc


def parse_weights(text: str) -> List[Weight]:
    return [parse_weight(part) for part in text.split(";") if part]


def build_datum(args) -> rootdata.SuperRootDatum:
    family = args.family
    if family == "gl":
        if args.m is None or args.n is None:
            raise rootdata.ParameterError("--family gl needs --m and --n")
        return rootdata.build_gl(args.m, args.n)
    if family == "q":
        if args.n is None:
            raise rootdata.ParameterError("--family q needs --n")
        return rootdata.build_q(args.n)
    if family == "p":
        if args.n is None:
            raise rootdata.ParameterError("--family p needs --n")
        return rootdata.build_p(args.n)
    if family == "file":
        if not args.file:
            raise rootdata.ParameterError("--family file needs --file")
        return rootdata.load_datum(args.file)
    raise rootdata.ParameterError("unknown family %r" % family)


def get_order(args, datum: rootdata.SuperRootDatum) -> rootdata.OrderFunctional:
    if getattr(args, "order", None):
        from fractions import Fraction

        values = [Fraction(tok) for tok in args.order.split(",")]
        order = rootdata.OrderFunctional(tuple(values))
    else:
        order = rootdata.default_order(datum)
    order.validate(datum)
    return order


def default_psi_odd(datum: rootdata.SuperRootDatum) -> List[Weight]:
    label = datum.label
    if label.startswith("gl(") and "|" in label:
        m, n = (int(v) for v in label[3:-1].split("|"))
        rank = m + n
        w = [0] * rank
        w[m - 1] = 1
        w[m] = -1
        return [tuple(w)]
    if label.startswith("q("):
        n = int(label[2:-1])
        return [
            tuple((1 if k == i else 0) - (1 if k == i + 1 else 0) for k in range(n))
            for i in range(n - 1)
        ]
    if label.startswith("p("):
        n = int(label[2:-1])
        return [tuple(2 if k == n - 1 else 0 for k in range(n))]
    raise rootdata.ParameterError("no default odd base for %r; pass --psi-odd" % label)


def get_psi(args, datum, order) -> Tuple[List[Weight], List[Weight]]:
    psi_even = rootdata.simple_even_roots(datum, order)
    if getattr(args, "psi_odd", None):
        psi_odd = parse_weights(args.psi_odd)
    else:
        psi_odd = default_psi_odd(datum)
    return psi_even, psi_odd


def load_char(text: str) -> steinberg.CharacterElement:
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            return steinberg.char_from_json(json.load(fh))
    return steinberg.char_from_json(json.loads(text))


# ---------------------------------------------------------------------------
# Verb implementations.


def cmd_describe(args) -> dict:
    datum = build_datum(args)
    payload = rootdata.datum_to_json(datum)
    payload["n_even"] = datum.n_even
    payload["n_odd"] = datum.n_odd
    return payload


def cmd_unimodular(args) -> dict:
    datum = build_datum(args)
    if args.p is not None or args.r is not None:
        if args.p is None or args.r is None:
            raise rootdata.ParameterError("give both --p and --r or neither")
        report = rootdata.is_frobenius_unimodular(datum, args.p, args.r)
    else:
        report = rootdata.is_unimodular_char0(datum)
    return {
        "verdict": report.verdict,
        "odd_root_sum": list(report.odd_root_sum),
        "per_coordinate": [
            {"index": i, "value": v, "divides": ok}
            for i, v, ok in report.per_coordinate_divisibility
        ],
        "modulus": report.modulus,
    }


def cmd_frobenius(args) -> dict:
    datum = build_datum(args)
    return {
        "all_unimodular": rootdata.all_frobenius_unimodular(datum),
        "odd_root_sum": list(rootdata.odd_root_sum(datum)),
    }


def cmd_delta(args) -> dict:
    datum = build_datum(args)
    order = get_order(args, datum)
    value = rootdata.delta_r(datum, order, args.p, args.r)
    return {"delta_r": list(value), "p": args.p, "r": args.r}


def cmd_dims(args) -> dict:
    datum = build_datum(args)
    return {
        "dim_O_Gr": rootdata.dim_O_Gr(datum, args.p, args.r),
        "pbw_count": rootdata.pbw_monomial_count(datum, args.p, args.r),
        "n_even": datum.n_even,
        "n_odd": datum.n_odd,
    }


def cmd_admissible(args) -> dict:
    datum = build_datum(args)
    order = get_order(args, datum)
    L = liesuper.lie_algebra_for(datum)
    psi_even, psi_odd = get_psi(args, datum, order)
    report = liesuper.check_admissible_base(
        L, datum, order, psi_even, psi_odd, mode=args.mode
    )
    return {
        "ok": report.ok,
        "mode": report.mode,
        "conditions": {name: ok for name, ok in report.conditions},
        "failures": list(report.failures),
        "psi_even": [list(w) for w in psi_even],
        "psi_odd": [list(w) for w in sorted(set(psi_odd))],
    }


def cmd_restricted(args) -> dict:
    datum = build_datum(args)
    order = get_order(args, datum)
    L = liesuper.lie_algebra_for(datum)
    psi_even, psi_odd = get_psi(args, datum, order)
    report = steinberg.is_restricted(
        datum, L, order, psi_even, psi_odd, parse_weight(args.weight), args.p, args.r
    )
    return {
        "verdict": report.verdict,
        "weakened": report.weakened,
        "per_root": [
            {
                "root": list(c.root),
                "class": c.kind,
                "pairing": c.pairing,
                "kform_value": c.kform_value,
                "bound": c.bound,
                "ok": c.ok,
            }
            for c in report.per_root
        ],
    }


def cmd_decompose(args) -> dict:
    datum = build_datum(args)
    order = get_order(args, datum)
    L = liesuper.lie_algebra_for(datum)
    psi_even, psi_odd = get_psi(args, datum, order)
    digits = steinberg.steinberg_decompose(
        datum,
        L,
        order,
        psi_even,
        psi_odd,
        parse_weight(args.weight),
        args.p,
        radius=args.radius,
    )
    return {"digits": [list(d) for d in digits], "p": args.p}


def cmd_flatcheck(args) -> dict:
    datum = build_datum(args)
    flat = steinberg.is_flat(datum, args.p, parse_weight(args.weight))
    return {"flat": flat, "weight": list(parse_weight(args.weight)), "p": args.p}


def cmd_char(args) -> dict:
    if args.op in ("add", "mul"):
        if not args.a or not args.b:
            raise rootdata.ParameterError("char %s needs --a and --b" % args.op)
        a, b = load_char(args.a), load_char(args.b)
        fn = steinberg.char_add if args.op == "add" else steinberg.char_mul
        return steinberg.char_to_json(fn(a, b))
    if args.op == "twist":
        if not args.a or args.p is None:
            raise rootdata.ParameterError("char twist needs --a and --p")
        return steinberg.char_to_json(
            steinberg.frobenius_twist(load_char(args.a), args.p, args.r or 0)
        )
    if args.op == "steinberg":
        if not args.inputs or args.p is None:
            raise rootdata.ParameterError("char steinberg needs --inputs and --p")
        chars = [load_char(tok) for tok in args.inputs]
        return steinberg.char_to_json(steinberg.steinberg_character(chars, args.p))
    raise rootdata.ParameterError("unknown char op %r" % args.op)


def cmd_verify_commutator(args) -> dict:
    report = hyperalg.verify_commutator_formula(
        args.max_m, args.max_n, args.degree, args.p
    )
    return {
        "ok": report.ok,
        "checked": report.checked,
        "counterexample": list(report.counterexample) if report.counterexample else None,
        "detail": report.detail,
    }


# ---------------------------------------------------------------------------
# Argument wiring.


def _add_family_flags(sub) -> None:
    sub.add_argument("--family", required=True, choices=["gl", "q", "p", "file"])
    sub.add_argument("--m", type=int)
    sub.add_argument("--n", type=int)
    sub.add_argument("--file")
    sub.add_argument("--order", help="comma-separated rationals for the order functional")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superroot",
        description="Exact computations with super root data.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    subs = parser.add_subparsers(dest="verb", required=True)

    sub = subs.add_parser("describe", help="print a datum with derived counts")
    _add_family_flags(sub)
    sub.set_defaults(fn=cmd_describe)

    sub = subs.add_parser("unimodular", help="char-0 or Frobenius-kernel verdict")
    _add_family_flags(sub)
    sub.add_argument("--p", type=int)
    sub.add_argument("--r", type=int)
    sub.set_defaults(fn=cmd_unimodular)

    sub = subs.add_parser("frobenius", help="are all Frobenius kernels unimodular")
    _add_family_flags(sub)
    sub.set_defaults(fn=cmd_frobenius)

    sub = subs.add_parser("delta", help="torus weight of the ind/coind twist")
    _add_family_flags(sub)
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--r", type=int, required=True)
    sub.set_defaults(fn=cmd_delta)

    sub = subs.add_parser("dims", help="coordinate-algebra dimension and PBW count")
    _add_family_flags(sub)
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--r", type=int, required=True)
    sub.set_defaults(fn=cmd_dims)

    sub = subs.add_parser("admissible", help="check an admissible base")
    _add_family_flags(sub)
    sub.add_argument("--psi-odd", dest="psi_odd", help="odd base roots, ';'-separated")
    sub.add_argument("--mode", choices=["assisted", "strict"], default="assisted")
    sub.set_defaults(fn=cmd_admissible)

    sub = subs.add_parser("restricted", help="p^r-restriction report for a weight")
    _add_family_flags(sub)
    sub.add_argument("--psi-odd", dest="psi_odd")
    sub.add_argument("--weight", required=True)
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--r", type=int, required=True)
    sub.set_defaults(fn=cmd_restricted)

    sub = subs.add_parser("decompose", help="base-p digit decomposition of a weight")
    _add_family_flags(sub)
    sub.add_argument("--psi-odd", dest="psi_odd")
    sub.add_argument("--weight", required=True)
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--radius", type=int)
    sub.set_defaults(fn=cmd_decompose)

    sub = subs.add_parser("flatcheck", help="flat-weight membership for gl/q")
    _add_family_flags(sub)
    sub.add_argument("--weight", required=True)
    sub.add_argument("--p", type=int, required=True)
    sub.set_defaults(fn=cmd_flatcheck)

    sub = subs.add_parser("char", help="character ring operations")
    sub.add_argument("--op", required=True, choices=["add", "mul", "twist", "steinberg"])
    sub.add_argument("--a", help="character JSON (inline or @file)")
    sub.add_argument("--b")
    sub.add_argument("--inputs", nargs="*")
    sub.add_argument("--p", type=int)
    sub.add_argument("--r", type=int)
    sub.set_defaults(fn=cmd_char)

    sub = subs.add_parser(
        "verify-commutator", help="operator sweep of the reordering identity"
    )
    sub.add_argument("--max-m", dest="max_m", type=int, default=4)
    sub.add_argument("--max-n", dest="max_n", type=int, default=4)
    sub.add_argument("--degree", type=int, default=12)
    sub.add_argument("--p", type=int, default=0)
    sub.set_defaults(fn=cmd_verify_commutator)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.fn(args)
    except DOMAIN_ERRORS as exc:
        emit(
            {"error": {"type": type(exc).__name__, "message": str(exc)}},
            args.json,
        )
        return 1
    emit(payload, args.json)
    return 0


if __name__ == "__main__":
    sys.exit(main())
