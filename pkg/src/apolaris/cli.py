"""``apolaris`` command line.

Exit status: 0 on success (or when the requested check holds), 1 when a
check does not hold, 2 on usage errors or violated hypotheses, 3 when a
polynomial cannot be parsed.
"""

from __future__ import annotations

import argparse
import io
import re
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import inequalities as ineq
from .apolar import apolar_inner, apolar_norm_sq, bombieri_inner, bombieri_norm_sq
from .bargmann import inner_product_montecarlo, inner_product_quadrature
from .homogenize import homogenize_even_two_var, homogenize_many_var, homogenize_one_var
from .parsing import PolySyntaxError, parse
from .poly import Poly
from .report import JSON, TEXT, report_render
from .search import SearchConfig, search_min_ratio

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_PARSE = 3

CHECKS = ("main", "topband", "nonneg", "even", "disjoint", "power", "bombieri", "mixed",
          "monotonicity")


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--poly", action="append", default=[], help="polynomial text; repeatable")
    p.add_argument("--arity", type=int, help="number of x variables (default: inferred)")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--workers", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apolaris",
        description="Exact apolar norms and Bombieri-type inequality checks.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("ip", help="apolar and Bombieri inner products of two polynomials")
    _common(p)

    p = sub.add_parser("norm", help="squared apolar norm")
    _common(p)

    p = sub.add_parser("check", help="run one inequality checker")
    p.add_argument("theorem", choices=CHECKS)
    _common(p)
    p.add_argument("--s", type=int, default=2, help="exponent for 'power'")
    p.add_argument("--band", help="'j,i' for 'topband' (default: minimal bands)")
    p.add_argument("--t", help="rational parameter p/q for 'monotonicity'")

    p = sub.add_parser("homogenize", help="homogenize a polynomial")
    _common(p)
    p.add_argument("--kind", choices=("one", "even", "many"), default="one")
    p.add_argument("--pattern", help="comma-separated fresh variable per level, for --kind many")

    p = sub.add_parser("oracle", help="Bargmann-integral estimate of <P, Q>_a")
    _common(p)
    p.add_argument("--nodes", type=int, help="Gauss-Hermite nodes per axis")
    p.add_argument("--samples", type=int, help="use Monte Carlo with this many samples")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("powers", help="(||P^s||^2)^(1/2s) for s = 1..smax")
    _common(p)
    p.add_argument("--smax", type=int, default=8)
    p.add_argument("--growth", type=float, default=1.0)

    p = sub.add_parser("search", help="minimum product/norm ratio over a coefficient grid")
    _common(p)
    p.add_argument("--grid", default="-1,1", help="comma-separated coefficients")
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--factors", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--threshold", type=int, default=100_000)

    p = sub.add_parser("paper-examples", help="reproduce the worked examples")
    p.add_argument("--json", action="store_true")
    return parser


_X_VAR = re.compile(r"x\s*(\d+)")
_W_VAR = re.compile(r"w\s*(\d+)")


def _polys(args, need: Optional[int] = None, at_least: int = 1) -> List[Poly]:
    texts = args.poly
    if need is not None and len(texts) != need:
        raise UsageError(f"expected exactly {need} --poly argument(s), got {len(texts)}")
    if len(texts) < at_least:
        raise UsageError(f"expected at least {at_least} --poly argument(s)")
    inferred = max((int(k) for t in texts for k in _X_VAR.findall(t)), default=1)
    arity = inferred if args.arity is None else args.arity
    if arity < 1:
        raise UsageError("--arity must be positive")
    if arity < inferred:
        raise UsageError(f"--arity {arity} is smaller than the largest variable index x{inferred}")
    fresh = max((int(k) for t in texts for k in _W_VAR.findall(t)), default=0)
    return [parse(t, arity, fresh) for t in texts]


_VALUE_OPTIONS = ("--poly", "--grid", "--t", "--band", "--pattern")


def _attach_values(argv: List[str]) -> List[str]:
    """Glue ``--poly -x1 + 1`` into ``--poly=-x1 + 1`` so argparse does not
    mistake a leading minus sign for an option."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def _emit(obj, args, out) -> None:
    print(report_render(obj, JSON if args.json else TEXT), file=out)


def _cmd_ip(args, out) -> int:
    p, q = _polys(args, need=2)
    _emit({"polys": [str(p), str(q)], "apolar": str(apolar_inner(p, q)),
           "bombieri": str(bombieri_inner(p, q))}, args, out)
    return EXIT_OK


def _cmd_norm(args, out) -> int:
    (p,) = _polys(args, need=1)
    _emit({"poly": str(p), "norm_sq": str(apolar_norm_sq(p)),
           "bombieri_norm_sq": str(bombieri_norm_sq(p))}, args, out)
    return EXIT_OK


def _cmd_check(args, out) -> int:
    name = args.theorem
    if name == "monotonicity":
        if args.t is None:
            raise UsageError("'check monotonicity' needs --t p/q")
        verdict = ineq.check_monotonicity_counterexample(_fraction(args.t))
    elif name in ("main", "bombieri"):
        ps = _polys(args)
        verdict = (ineq.check_theorem_main if name == "main" else ineq.check_bombieri_homogeneous)(ps)
    elif name == "power":
        (p,) = _polys(args, need=1)
        verdict = ineq.check_power(p, args.s)
    else:
        p, q = _polys(args, need=2)
        if name == "topband":
            j = i = None
            if args.band:
                try:
                    j, i = (int(v) for v in args.band.split(","))
                except ValueError as exc:
                    raise UsageError("--band must look like 'j,i'") from exc
            verdict = ineq.check_theorem_topband(p, q, j, i)
        else:
            fn = {
                "nonneg": ineq.check_nonnegative,
                "even": ineq.check_even,
                "disjoint": ineq.check_disjoint_equality,
                "mixed": ineq.check_mixed_homogeneous,
            }[name]
            verdict = fn(p, q)
    _emit(verdict, args, out)
    return EXIT_OK if verdict.holds else EXIT_FAILS


def _cmd_homogenize(args, out) -> int:
    (p,) = _polys(args, need=1)
    if args.kind == "one":
        h = homogenize_one_var(p)
    elif args.kind == "even":
        h = homogenize_even_two_var(p)
    else:
        if args.pattern is None:
            raise UsageError("--kind many needs --pattern")
        pattern = [int(v) for v in args.pattern.split(",") if v.strip()]
        h = homogenize_many_var(p, pattern)
    _emit({"input": str(p), "kind": args.kind, "output": str(h), "arity": h.arity}, args, out)
    return EXIT_OK


def _cmd_oracle(args, out) -> int:
    ps = _polys(args)
    if len(ps) > 2:
        raise UsageError("oracle takes one or two --poly arguments")
    p, q = ps[0], ps[-1]
    if args.samples is not None:
        est = inner_product_montecarlo(p, q, args.samples, args.seed, workers=args.workers)
    else:
        est = inner_product_quadrature(p, q, args.nodes)
    exact = apolar_inner(p, q)
    payload = est.to_dict()
    payload["exact"] = str(exact)
    if args.json:
        _emit(payload, args, out)
    else:
        print(report_render(est, TEXT), file=out)
        print(f"exact: {exact}", file=out)
    return EXIT_OK


def _cmd_powers(args, out) -> int:
    (p,) = _polys(args, need=1)
    growth = ineq.power_root_sequence(p, args.smax, growth_factor=args.growth)
    if args.json:
        payload = growth.to_dict()
        payload["poly"] = str(p)
        _emit(payload, args, out)
    else:
        print(f"poly: {p}", file=out)
        print(report_render(growth, TEXT), file=out)
    return EXIT_OK


def _cmd_search(args, out) -> int:
    grid_text = [g for g in args.grid.split(",") if g.strip()]
    try:
        grid = [parse(g, 1).constant_term() for g in grid_text]
    except PolySyntaxError as exc:
        raise UsageError(f"bad --grid entry: {exc}") from exc
    config = SearchConfig(
        grid=tuple(grid),
        arity=args.arity or 1,
        degree=args.degree,
        factors=args.factors,
        seed=args.seed,
        threshold=args.threshold,
        samples=args.samples,
    )
    _emit(search_min_ratio(config, workers=args.workers), args, out)
    return EXIT_OK


def paper_examples() -> dict:
    """Recompute the worked examples and assert their stated values."""
    xm1 = parse("x1 - 1", 1)
    xp1 = parse("x1 + 1", 1)
    constant_one = ineq.check_constant_one([xm1, xp1])
    main = ineq.check_theorem_main([xm1, xp1])
    ok = (constant_one.lhs_sq == 3 and constant_one.rhs_sq == 4 and not constant_one.holds
          and main.constant == 2 and main.holds)

    c = ineq.find_equality_parameter()
    f0, g0 = ineq.equality_example_values(0)
    f1, g1 = ineq.equality_example_values(1)
    fc, gc = ineq.equality_example_values(c)
    ok = ok and (f0, f1, g0, g1) == (3, 3, 2, 4) and fc == gc and 0 < c < 1

    mono = ineq.check_monotonicity_counterexample(Fraction(1, 4))
    ok = ok and mono.holds and mono.lhs_sq == Fraction(129, 128) and mono.rhs_sq == Fraction(17, 16)
    return {
        "failure_example": {"constant_one": constant_one, "main": main},
        "equality_parameter": {
            "c": str(c), "f0": str(f0), "f1": str(f1), "g0": str(g0), "g1": str(g1),
            "f_c": str(fc), "g_c": str(gc),
        },
        "monotonicity": mono,
        "all_passed": ok,
    }


def _cmd_paper_examples(args, out) -> int:
    result = paper_examples()
    if args.json:
        _emit(result, args, out)
    else:
        fe = result["failure_example"]
        print("== (x1 - 1)(x1 + 1) = x1^2 - 1 with constant 1 ==", file=out)
        print(report_render(fe["constant_one"]), file=out)
        print("== same pair with constant (1 + 1)! ==", file=out)
        print(report_render(fe["main"]), file=out)
        print("== equality point of ||(x1 - 1)(x1 + t)||^2 and ||x1 - 1||^2 ||x1 + t||^2 ==",
              file=out)
        print(report_render(result["equality_parameter"]), file=out)
        print("== monotonicity counterexample at t = 1/4 ==", file=out)
        print(report_render(result["monotonicity"]), file=out)
        print(f"all_passed: {str(result['all_passed']).lower()}", file=out)
    return EXIT_OK if result["all_passed"] else EXIT_FAILS


COMMANDS = {
    "ip": _cmd_ip,
    "norm": _cmd_norm,
    "check": _cmd_check,
    "homogenize": _cmd_homogenize,
    "oracle": _cmd_oracle,
    "powers": _cmd_powers,
    "search": _cmd_search,
    "paper-examples": _cmd_paper_examples,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(_attach_values(sys.argv[1:] if argv is None else list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    # render into a buffer first so error paths leave stdout empty
    buf = io.StringIO()
    try:
        status = COMMANDS[args.verb](args, buf)
    except PolySyntaxError as exc:
        print(f"apolaris: parse error: {exc}", file=err)
        return EXIT_PARSE
    except (UsageError, ValueError) as exc:
        print(f"apolaris: {exc}", file=err)
        return EXIT_USAGE
    out.write(buf.getvalue())
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
