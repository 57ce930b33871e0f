"""Command-line front end: ``garside <command> ...``.

Braids are read from the positional argument, from ``--input FILE`` or from
standard input (when the argument is missing or ``-``).  A braid is either a
word ``"B5: 1 2 -3"`` (or a bare word with ``--n``) or a normal-form JSON object.

Exit codes: 0 success, 1 parse error, 2 resource cap hit, 3 precondition
violated, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, TextIO

from . import simple
from .curves import (
    CONVENTION,
    coords_from_json,
    coords_of,
    invariant_round_families,
    minimal_standardizer,
    multicurve,
    parse_family,
    _PAIR,
)
from .decompose import (
    all_components,
    component,
    is_periodic,
    standardized_decomposition,
    subbraid,
)
from .errors import ParseError, PreconditionError, ResourceCapError
from .families import (
    DeltaConjugateSpec,
    WitnessSpec,
    all_delta_specs,
    build_beta,
    build_x,
    delta_conjugate,
    delta_conjugate_cycle,
    format_table,
    sc_experiment,
    sf_of_delta_conjugate,
)
from .normal_form import NormalForm, from_json, normal_form
from .sliding import (
    DEFAULT_MEMBER_CAP,
    conjugacy_test,
    cyclic_sliding,
    preferred_prefix,
    slide_to_circuit,
    sliding_circuit_set,
)
from .words import parse_word

EXIT_PARSE, EXIT_CAP, EXIT_PRECONDITION, EXIT_VERIFY = 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    """Usage errors are parse errors (exit 1), not argparse's default 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParseError(message)


# ---------------------------------------------------------------- input helpers


def _read_text(args, attr: str = "braid") -> str:
    value = getattr(args, attr, None)
    path = getattr(args, "input", None)
    if value not in (None, "-"):
        return value
    if path:
        try:
            with open(path, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc}") from None
    return sys.stdin.read()


def parse_braid(text: str, n: int | None = None) -> NormalForm:
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from None
        x = from_json(data)
        if n is not None and x.n != n:
            raise ParseError(f"normal form has {x.n} strands, {n} requested")
        return x
    return normal_form(parse_word(text, n))


def _braid(args, attr: str = "braid") -> NormalForm:
    return parse_braid(_read_text(args, attr), args.n)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise ParseError(f"expected a list of integers: {text!r}") from None


def _curve(text: str | None):
    if text is None or text.strip().lower() in ("boundary", "none", "d"):
        return None
    m = _PAIR.fullmatch(text.strip())
    if not m:
        raise ParseError(f"curve must look like (i,j) or 'boundary': {text!r}")
    return int(m.group(1)), int(m.group(2))


def _curve_name(c) -> str:
    return "boundary" if c is None else f"({c[0]},{c[1]})"


def _simple_json(s: simple.Perm) -> dict:
    return {"permutation": [v + 1 for v in s], "word": list(simple.word(s))}


def _simple_text(s: simple.Perm) -> str:
    return "(" + " ".join(map(str, simple.word(s))) + ")"


# ---------------------------------------------------------------- commands


def cmd_nf(args, out: TextIO):
    x = _braid(args)
    if args.format == "json":
        return x.to_json()
    print(f"normal form: {x}", file=out)
    print(f"inf {x.inf}  sup {x.sup}  length {x.length}", file=out)
    print(f"word: {x.word()}", file=out)


def cmd_slide(args, out: TextIO):
    x = _braid(args)
    p = preferred_prefix(x)
    y = cyclic_sliding(x)
    if args.format == "json":
        return {"input": x.to_json(), "prefix": _simple_json(p), "result": y.to_json()}
    print(f"preferred prefix: {_simple_text(p)}", file=out)
    print(f"slide: {y}", file=out)


def cmd_circuit(args, out: TextIO):
    x = _braid(args)
    t = slide_to_circuit(x)
    if args.format == "json":
        return {
            "tail": [y.to_json() for y in t.tail],
            "circuit": [y.to_json() for y in t.circuit],
            "prefixes": [_simple_json(p) for p in t.prefixes],
        }
    print(f"tail length {len(t.tail)}, period {t.period}", file=out)
    for i, y in enumerate(t.elements()):
        mark = "*" if i >= len(t.tail) else " "
        print(f"{mark} {i}: {y}", file=out)


def cmd_scset(args, out: TextIO):
    x = _braid(args)
    sc = sliding_circuit_set(x, member_cap=args.max_members, conjugators=False)
    if args.format == "json":
        return sc.to_json()
    s = sc.summary()
    print(f"size {s['size']}  inf {s['inf']}  sup {s['sup']}", file=out)
    print("circuits by period: " + ", ".join(f"{k}:{v}" for k, v in s["period_histogram"].items()), file=out)
    if args.members:
        for y in sc:
            print(f"  {y}", file=out)


def cmd_conj(args, out: TextIO):
    x = _braid(args)
    y = parse_braid(args.other, args.n)
    ok, c = conjugacy_test(x, y, member_cap=args.max_members)
    if ok and x.conjugate(c) != y:
        raise AssertionError("conjugator check failed")
    if args.format == "json":
        return {"conjugate": ok, "conjugator": c.to_json() if ok else None}
    print("conjugate" if ok else "not conjugate", file=out)
    if ok:
        print(f"conjugator c (c^-1 x c = y): {c}", file=out)
        print(f"word: {c.word()}", file=out)


def cmd_subbraid(args, out: TextIO):
    x = _braid(args)
    try:
        w = subbraid(x, _int_list(args.strands))
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    y = normal_form(w)
    if args.format == "json":
        return y.to_json()
    print(f"subbraid: {y}", file=out)
    print(f"word: {w}", file=out)


def cmd_component(args, out: TextIO):
    x = _braid(args)
    fam = parse_family(args.family, x.n)
    c = _curve(args.curve)
    y = component(x, fam, c)
    if args.format == "json":
        return {"curve": _curve_name(c), "strands": y.n, "normal_form": y.to_json()}
    print(f"component at {_curve_name(c)}: {y}", file=out)


def _print_decomposition(d, out: TextIO):
    print(f"family {d.family}", file=out)
    for c in [None, *d.family.curves]:
        print(f"  {_curve_name(c)} -> {_curve_name(d.curve_map[c])}: {d.components[c]}", file=out)


def cmd_decompose(args, out: TextIO):
    x = _braid(args)
    fam = parse_family(args.family, x.n)
    d = all_components(x, fam)
    if args.format == "json":
        data = d.to_json()
        data["periodic"] = is_periodic(x)
        return data
    _print_decomposition(d, out)
    print(f"periodic: {is_periodic(x)}", file=out)


def _multicurve(args):
    if args.coords:
        try:
            data = json.loads(args.coords)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from None
        return coords_from_json(data)
    if args.n is None:
        raise ParseError("--n is required with --family")
    fam = parse_family(args.family, args.n)
    if args.by:
        return multicurve(fam, parse_braid(args.by, args.n))
    return coords_of(fam)


def cmd_standardize(args, out: TextIO):
    if not args.coords and not args.family:
        raise ParseError("give --coords or --family")
    c = _multicurve(args)
    std = minimal_standardizer(c, max_states=args.max_states)
    result = {
        "coords": c.to_json(),
        "standardizer": std.braid.to_json(),
        "word": list(std.word.letters),
        "image": [list(x) for x in std.image.curves],
    }
    if args.braid is not None or args.input:
        x = _braid(args)
        _, d = standardized_decomposition(x, c)
        result["decomposition"] = d.to_json()
    if args.format == "json":
        return result
    print(f"minimal standardizer: {std.braid}  word: {std.word}", file=out)
    print(f"round image: {std.image}", file=out)
    if "decomposition" in result:
        _print_decomposition(d, out)


def cmd_inv_families(args, out: TextIO):
    x = _braid(args)
    fams = invariant_round_families(x, nonempty=not args.include_empty)
    if args.format == "json":
        return {"families": [[list(c) for c in f.curves] for f in fams]}
    print(f"{len(fams)} invariant round families", file=out)
    for f in fams:
        print(f"  {f}", file=out)


def cmd_family(args, out: TextIO):
    if args.kind == "beta":
        x = build_beta(args.n, args.k)
        if args.format == "json":
            return x.to_json()
        print(f"beta(n={args.n}, k={args.k}) in B{args.n + 2}: {x}", file=out)
        print(f"inf {x.inf}  length {x.length}", file=out)
        return None
    if args.kind == "x":
        spec = WitnessSpec(DeltaConjugateSpec(args.n, _int_list(args.d or "")), _int_list(args.indices or ""))
        x = build_x(spec)
        if args.format == "json":
            return x.to_json()
        print(f"x: {x}", file=out)
        print(f"inf {x.inf}  length {x.length}", file=out)
        return None
    rows = []
    for spec in all_delta_specs(args.n):
        e = delta_conjugate(spec)
        s, f = sf_of_delta_conjugate(spec)
        rows.append({
            "d": list(spec.d),
            "normal_form": e.to_json(),
            "word": list(e.word().letters),
            "cycle": list(delta_conjugate_cycle(spec)),
            "starting": sorted(s),
            "finishing": sorted(f),
        })
    if args.format == "json":
        return {"n": args.n, "count": len(rows), "conjugates": rows}
    print(f"{len(rows)} simple conjugates of delta in B{args.n}", file=out)
    for r in rows:
        print(f"  D={r['d']}  word {r['word']}  cycle {r['cycle']}  S={r['starting']}  F={r['finishing']}", file=out)
    return None


def cmd_experiment(args, out: TextIO):
    rows = [sc_experiment(args.n, k, full_sc=args.full_sc, member_cap=args.max_members) for k in args.k]
    if args.format == "json":
        return {"rows": [r.to_json() for r in rows]}
    print(format_table(rows), file=out)


def cmd_verify(args, out: TextIO):
    from .verify import SUITES, run_suites

    names = args.suite or list(SUITES)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise ParseError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    results = run_suites(names, quick=not args.full)
    if args.format == "json":
        data = {"suites": [
            {"name": r.name, "checks": r.checks, "failed": r.failed, "counts": r.counts, "failures": r.failures}
            for r in results
        ]}
        print(json.dumps(data, indent=2, sort_keys=True), file=out)
    else:
        for r in results:
            print(r.summary(), file=out)
            for f in r.failures:
                print(f"    {f}", file=out)
    return EXIT_VERIFY if any(not r.ok for r in results) else 0


# ---------------------------------------------------------------- parser


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--n", type=_positive, help="strand count for words without a 'Bn:' header")

    braid_in = _Parser(add_help=False)
    braid_in.add_argument("braid", nargs="?", help="braid word or normal-form JSON; '-' or omitted reads stdin")
    braid_in.add_argument("--input", "-i", help="read the braid from this file")

    cap = _Parser(add_help=False)
    cap.add_argument("--max-members", type=_positive, default=DEFAULT_MEMBER_CAP,
                     help="abort when a sliding circuit set grows beyond this size")

    p = _Parser(prog="garside", description="Garside calculus for braid groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func: Callable, help: str, parents=(common, braid_in)):
        sp = sub.add_parser(name, parents=list(parents), help=help)
        sp.set_defaults(func=func)
        return sp

    add("nf", cmd_nf, "left normal form")
    add("slide", cmd_slide, "one cyclic sliding step")
    add("circuit", cmd_circuit, "sliding trajectory until it cycles")
    sp = add("scset", cmd_scset, "full sliding circuit set", (common, braid_in, cap))
    sp.add_argument("--members", action="store_true", help="list every member")
    sp = add("conj", cmd_conj, "conjugacy test with a witness", (common, braid_in, cap))
    sp.add_argument("other", help="second braid")
    sp = add("subbraid", cmd_subbraid, "subbraid on chosen strands")
    sp.add_argument("--strands", required=True, help="1-based starting positions, e.g. 2,3,5")
    sp = add("component", cmd_component, "component along a round family")
    sp.add_argument("--family", required=True, help="round family, e.g. [(1,2),(3,4)]")
    sp.add_argument("--curve", default=None, help="(i,j) or 'boundary' (default)")
    sp = add("decompose", cmd_decompose, "all components along an invariant round family")
    sp.add_argument("--family", required=True)
    sp = add("standardize", cmd_standardize, "minimal standardizer of a multicurve")
    sp.add_argument("--coords", help=f"coordinate JSON ({CONVENTION})")
    sp.add_argument("--family", help="round family to move by --by")
    sp.add_argument("--by", help="braid applied to --family to produce the multicurve")
    sp.add_argument("--max-states", type=_positive, default=200_000)
    sp = add("inv-families", cmd_inv_families, "round families preserved by a braid")
    sp.add_argument("--include-empty", action="store_true")

    sp = sub.add_parser("family", parents=[common], help="braids from the exponential-SC construction")
    sp.set_defaults(func=cmd_family)
    sp.add_argument("kind", choices=("beta", "x", "delta-conj"))
    sp.add_argument("--k", type=_positive, default=1)
    sp.add_argument("--d", help="the set D for eta, e.g. 2,3 (family x)")
    sp.add_argument("--indices", help="i_1,...,i_m (family x)")

    sp = sub.add_parser("experiment", parents=[common, cap], help="SC-size experiment")
    sp.set_defaults(func=cmd_experiment)
    sp.add_argument("kind", choices=("sc",))
    sp.add_argument("--k", type=_positive, nargs="+", default=[1])
    sp.add_argument("--full-sc", action="store_true", help="also compute the whole SC(beta)")

    sp = sub.add_parser("verify", parents=[common], help="run the property suites")
    sp.set_defaults(func=cmd_verify)
    sp.add_argument("--full", action="store_true", help="full sample sizes (slower)")
    sp.add_argument("--suite", action="append", help="run only this suite (repeatable)")
    return p


def run(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command in ("family", "experiment") and args.n is None:
            raise ParseError("--n is required")
        result = args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=err)
        return EXIT_CAP
    except (PreconditionError, ValueError) as exc:
        print(f"precondition violated: {exc}", file=err)
        return EXIT_PRECONDITION
    if isinstance(result, int):
        return result
    if result is not None:
        print(json.dumps(result, sort_keys=True), file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
