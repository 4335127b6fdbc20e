"""Command-line front end.

Exit codes: 0 success or match, 1 oracle mismatch, 2 input error, 3 size cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import config, io
from .core import (
    polynomial_invariant,
    reciprocity_eval,
    takeuchi_antipode,
)
from .errors import ConsistencyError, GroundSetTooLarge, HopfError, InputError
from .formal import FormalSum, fmt_coef

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _render(fam, s: FormalSum) -> str:
    return s.render(show=fam.render)


def _emit(args, text: str, payload=None) -> None:
    if args.json and payload is not None:
        print(json.dumps(payload, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def _load(args):
    return io.load_object(args.family, io.read_source(args.input))


def _diff(fam, a: FormalSum, b: FormalSum) -> list[str]:
    lines = []
    for obj, c in (a - b):
        lines.append(f"{fmt_coef(c)}*{fam.render(obj)}")
    return lines


def cmd_antipode(args) -> int:
    fam, x = _load(args)
    if args.method == "takeuchi":
        s = takeuchi_antipode(fam, x)
    else:
        s = fam.antipode(x)
    if args.method != "both":
        _emit(args, _render(fam, s), s.to_json())
        return EXIT_OK
    t = takeuchi_antipode(fam, x)
    if s == t:
        print("MATCH")
        _emit(args, _render(fam, s), s.to_json())
        return EXIT_OK
    print("MISMATCH")
    print("formula - takeuchi:")
    for line in _diff(fam, s, t):
        print("  " + line)
    return EXIT_MISMATCH


def cmd_oracle_diff(args) -> int:
    fam, x = _load(args)
    s, t = fam.antipode(x), takeuchi_antipode(fam, x)
    diff = _diff(fam, s, t)
    if not diff:
        print(f"MATCH ({len(s)} terms)")
        return EXIT_OK
    print("MISMATCH")
    for line in diff:
        print("  " + line)
    return EXIT_MISMATCH


def _character(args):
    table = io.characters(args.family)
    if args.character not in table:
        known = ", ".join(sorted(table)) or "none"
        raise InputError(f"no character {args.character!r} for family {args.family!r}; known: {known}")
    return table[args.character]


def cmd_invariant(args) -> int:
    fam, x = _load(args)
    zeta = _character(args)
    poly = polynomial_invariant(fam, zeta, x)
    if args.poly or args.n is None:
        _emit(args, poly.render(), {"coeffs": [fmt_coef(c) for c in poly.coeffs]})
    else:
        v = poly(args.n)
        _emit(args, fmt_coef(v), {"n": args.n, "value": fmt_coef(v)})
    return EXIT_OK


def cmd_reciprocity(args) -> int:
    fam, x = _load(args)
    zeta = _character(args)
    n = args.n
    via_poly = reciprocity_eval(fam, zeta, x, n)
    sign = (-1) ** len(x.labels)
    lhs = sign * via_poly
    print(f"(-1)^|I| chi(-{n}) = {fmt_coef(lhs)}")
    counter = io.reciprocity_counter(args.family, args.character)
    if counter is None:
        print("no direct count registered for this character")
        return EXIT_OK
    direct = Fraction(counter(x, n))
    print(f"direct count = {fmt_coef(direct)}")
    if direct != lhs:
        print("MISMATCH")
        return EXIT_MISMATCH
    print("MATCH")
    return EXIT_OK


def _as_boolean_fn(family: str, x):
    from .graphs import incidence_fn
    from .hypergraphs import hypergraphic_polytope
    from .matroids import rank_fn
    from .posets import lower_fn

    name = io.resolve_family(family)
    if name == "gp":
        return x
    if name in ("graph", "simple-graph"):
        return incidence_fn(x)
    if name == "matroid":
        return rank_fn(x)
    if name == "poset":
        return lower_fn(x)
    if name in ("hypergraph", "simple-hypergraph", "building-set", "simplicial-complex"):
        return hypergraphic_polytope(x)
    if name == "ripping-sewing":
        from .buildsets import tubes

        return hypergraphic_polytope(tubes(x))
    raise InputError(f"family {family!r} has no polytope model here")


def cmd_faces(args) -> int:
    from .submodular import enumerate_faces, f_vector

    _, x = _load(args)
    z = _as_boolean_fn(args.family, x)
    faces = enumerate_faces(z, with_vertices=False)
    rows = []
    for rec in sorted(faces, key=lambda r: (-r.dim, r.face_fn.key)):
        rows.append({"dim": rec.dim, "witnesses": len(rec.witnesses), "face": rec.face_fn.render()})
    fv = f_vector(faces)
    top = max(r["dim"] for r in rows)
    word = "face" if len(faces) == 1 else "faces"
    summary = f"{len(faces)} {word}, dim {top}; f-vector: {' '.join(map(str, fv))}"
    if args.json:
        print(json.dumps({"faces": rows, "f_vector": fv}, sort_keys=True))
        return EXIT_OK
    if not args.summary:
        for r in rows:
            print(f"{r['dim']}\t{r['witnesses']}\t{r['face']}")
    print(summary)
    return EXIT_OK


def _series_from_args(args):
    from .series import ExpSeries, OrdSeries

    if args.input:
        return io.load_series(io.parse_json(io.read_source(args.input)))
    if args.coeffs is None:
        raise InputError("give --in or --coeffs")
    coeffs = [io.parse_value(c.strip()) for c in args.coeffs.split(",")]
    return ExpSeries(coeffs) if args.kind == "mult" else OrdSeries(coeffs)


def cmd_invert(args) -> int:
    from .series import ExpSeries, invert

    s = _series_from_args(args)
    want = ExpSeries if args.kind == "mult" else None
    if (want is ExpSeries) != isinstance(s, ExpSeries):
        raise InputError("mult needs an egf series, comp needs an ogf series")
    methods = ["direct", "enumerative", "polytopal"] if args.method == "all" else [args.method]
    results = []
    for m in methods:
        r = invert(s, args.kind, m)
        results.append(r)
        print(f"{m}: {' '.join(fmt_coef(c) for c in r.coeffs)}")
    if len(results) > 1 and any(r != results[0] for r in results[1:]):
        print("MISMATCH")
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_char_group_check(args) -> int:
    from .series import char_group_assoc_iso, char_group_perm_iso

    a = [io.parse_value(c.strip()) for c in args.a.split(",")]
    b = [io.parse_value(c.strip()) for c in args.b.split(",")]
    n = args.n if args.n is not None else min(len(a), len(b)) - 1
    if len(a) <= n or len(b) <= n:
        raise InputError(f"need at least {n + 1} coefficients in each series")
    check = char_group_perm_iso if args.kind == "perm" else char_group_assoc_iso
    ok = check(n, a, b)
    print("MATCH" if ok else "MISMATCH")
    return EXIT_OK if ok else EXIT_MISMATCH


def _add_object_args(p, need_family=True):
    p.add_argument("--family", required=need_family, help="family tag: " + ", ".join(io.family_names()))
    p.add_argument("--in", dest="input", required=True, help="inline JSON, or a path (optionally @path)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfcalc", description="Antipodes, invariants and polytope faces.")
    parser.add_argument("--max-n", type=int, help="cap for enumerations over set compositions")
    parser.add_argument("--config", help="JSON file with max_n / max_structure_n")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("antipode", help="antipode of an object")
    _add_object_args(p)
    p.add_argument("--method", choices=["formula", "takeuchi", "both"], default="formula")
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("oracle-diff", help="closed formula minus Takeuchi")
    _add_object_args(p)
    p.set_defaults(func=cmd_oracle_diff)

    p = sub.add_parser("invariant", help="polynomial invariant of a character")
    _add_object_args(p)
    p.add_argument("--character", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--n", type=int)
    g.add_argument("--poly", action="store_true")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("reciprocity", help="compare (-1)^|I| chi(-n) with a direct count")
    _add_object_args(p)
    p.add_argument("--character", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_reciprocity)

    p = sub.add_parser("faces", help="faces of the polytope of an object")
    _add_object_args(p)
    p.add_argument("--summary", action="store_true", help="only the summary line")
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("invert", help="invert a power series")
    p.add_argument("--kind", choices=["mult", "comp"], required=True)
    p.add_argument("--method", choices=["direct", "enumerative", "polytopal", "all"], default="direct")
    p.add_argument("--in", dest="input", help='series JSON {"kind": "egf"|"ogf", "coeffs": [...]}')
    p.add_argument("--coeffs", help="comma-separated coefficients, a_0 (or c_0) first")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("char-group-check", help="convolution of component characters vs series product/composition")
    p.add_argument("--kind", choices=["perm", "assoc"], required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_char_group_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.config:
            config.load_config(args.config)
        if args.max_n is not None:
            config.set_caps(enumeration=args.max_n)
        return args.func(args)
    except GroundSetTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ConsistencyError as exc:
        print(f"MISMATCH: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (InputError, HopfError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        config.reset_caps()


if __name__ == "__main__":
    sys.exit(main())
