"""Command line interface.

Exit codes: 0 on success, 1 when a computation finishes but the
mathematical verdict is negative (validation fails, a frame is not
canonical/symmetric, an uncertified dual was requested), 2 for input
errors — unreadable files, parse problems with line/column positions,
dimension mismatches, violated preconditions.
"""

from __future__ import annotations

import argparse
import sys

from . import duality, ideals, metric, plot
from .errors import (
    CapExceededError,
    DimensionMismatch,
    FrameError,
    GoodsemiError,
    InclusionError,
    MetricError,
    NotCertifiedError,
    ParseError,
    PoleBoundError,
    TruncationError,
)
from .ideals import GoodSemigroup, IdealFrame, from_json, to_json, validate
from .lattice import as_point, zero
from .ringbridge import curves


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_ideal(path: str) -> IdealFrame:
    return from_json(_read(path), filename=path)


def _load_semigroup(path: str) -> GoodSemigroup:
    frame = _load_ideal(path)
    try:
        return GoodSemigroup(frame)
    except NotCertifiedError as exc:
        raise NotCertifiedError(f"{path} is not a good semigroup:\n{exc}") from exc


def _load_curve(path: str) -> curves.CurveSpec:
    return curves.parse_curve(_read(path), filename=path)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _point(text: str) -> tuple:
    try:
        return as_point(int(c.strip()) for c in text.split(","))
    except ValueError:
        raise ParseError(f"cannot read point {text!r}; expected e.g. '3,1'")


# ------------------------------------------------------------- subcommands


def _cmd_validate(args) -> int:
    E = _load_ideal(args.ideal)
    if args.ambient:
        S = _load_semigroup(args.ambient)
        report = validate(E, S)
        what = f"ideal of {args.ambient}"
    elif E.mu == zero(E.s):
        report = validate(E, E)
        what = "semigroup"
    else:
        report = validate(E)
        what = "frame (axioms only; no ambient given)"
    print(f"checking {args.ideal} as {what}")
    print(report.summary())
    return 0 if report.ok else 1


def _cmd_canonical(args) -> int:
    S = _load_semigroup(args.semigroup)
    _emit(to_json(duality.canonical_normalized(S)), args.output)
    return 0


def _cmd_dual(args) -> int:
    S = _load_semigroup(args.semigroup)
    E = _load_ideal(args.ideal)
    K = duality.CanonicalIdeal.normalized(S)
    try:
        first = duality.dualize(K, E)
        certified = True
    except NotCertifiedError:
        print("input not (E2)-certified; involution not guaranteed", file=sys.stderr)
        first = duality.difference(K.ideal, E)
        certified = False
    if not args.twice:
        _emit(to_json(first), args.output)
        return 0 if certified else 1
    second = duality.difference(K.ideal, first)
    _emit(to_json(second), args.output)
    if second == E:
        print("dual applied twice returns the input", file=sys.stderr)
        return 0 if certified else 1
    if ideals.is_subset(E, second):
        print("dual applied twice strictly contains the input", file=sys.stderr)
    else:
        print("dual applied twice differs from the input", file=sys.stderr)
    return 1


def _cmd_is_canonical(args) -> int:
    S = _load_semigroup(args.semigroup)
    K = _load_ideal(args.ideal)
    verdict, alpha = duality.is_canonical(K, S)
    print(f"canonical: {str(verdict).lower()} (shift {','.join(map(str, alpha))})")
    return 0 if verdict else 1


def _cmd_is_symmetric(args) -> int:
    S = _load_semigroup(args.semigroup)
    verdict = duality.is_symmetric(S)
    print(f"symmetric: {str(verdict).lower()}")
    return 0 if verdict else 1


def _cmd_diff(args) -> int:
    E = _load_ideal(args.left)
    F = _load_ideal(args.right)
    _emit(to_json(duality.difference(E, F)), args.output)
    return 0


def _cmd_sum(args) -> int:
    E = _load_ideal(args.left)
    F = _load_ideal(args.right)
    _emit(to_json(ideals.sum_ideals(E, F)), args.output)
    return 0


def _cmd_distance(args) -> int:
    E = _load_ideal(args.ideal)
    d = metric.distance_between(E, _point(args.start), _point(args.end))
    print(d)
    return 0


def _cmd_rel_distance(args) -> int:
    E = _load_ideal(args.smaller)
    F = _load_ideal(args.larger)
    print(metric.relative_distance(E, F))
    return 0


def _cmd_decompose(args) -> int:
    S = _load_semigroup(args.semigroup)
    dec = ideals.decompose(S)
    for block, factor in zip(dec.partition, dec.factors):
        print(f"branches {list(block)}:")
        sys.stdout.write(to_json(factor.ideal))
    return 0


def _cmd_gamma_of(args) -> int:
    E = _load_ideal(args.ideal)
    print(f"conductor: {','.join(map(str, E.conductor))}")
    print(f"capping bound: {','.join(map(str, E.gamma))}")
    return 0


def _cmd_curve_gamma(args) -> int:
    spec = _load_curve(args.curve)
    G = curves.value_ideal(spec, args.module)
    _emit(to_json(G), args.output)
    return 0


def _cmd_colon(args) -> int:
    spec = _load_curve(args.curve)
    G = curves.colon_value_ideal(spec, args.left, args.right, args.pole_bound)
    _emit(to_json(G), args.output)
    return 0


def _cmd_length(args) -> int:
    spec = _load_curve(args.curve)
    print(curves.length_quotient(spec, args.larger, args.smaller))
    return 0


def _cmd_plot(args) -> int:
    E = _load_ideal(args.ideal)
    lo = _point(args.lo) if args.lo else None
    hi = _point(args.hi) if args.hi else None
    if args.svg:
        _emit(plot.svg_lattice(E, lo, hi), args.svg)
    else:
        sys.stdout.write(plot.ascii_lattice(E, lo, hi))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="goodsemi",
        description="Good semigroups of N^s: validation, duality, distance, "
        "and value semigroups of curve singularities.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=fn)
        return sp

    sp = add("validate", _cmd_validate, "check the good-ideal axioms of a frame")
    sp.add_argument("ideal")
    sp.add_argument("--ambient", help="semigroup JSON to check the ideal property against")

    sp = add("canonical", _cmd_canonical, "normalized canonical ideal of a semigroup")
    sp.add_argument("semigroup")
    sp.add_argument("-o", "--output")

    sp = add("dual", _cmd_dual, "dualize an ideal by the canonical ideal")
    sp.add_argument("semigroup")
    sp.add_argument("ideal")
    sp.add_argument("--twice", action="store_true", help="apply the duality twice")
    sp.add_argument("-o", "--output")

    sp = add("is-canonical", _cmd_is_canonical, "is this frame a canonical ideal?")
    sp.add_argument("semigroup")
    sp.add_argument("ideal")

    sp = add("is-symmetric", _cmd_is_symmetric, "is the semigroup symmetric?")
    sp.add_argument("semigroup")

    sp = add("diff", _cmd_diff, "ideal difference E - F = {x : x + F in E}")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("-o", "--output")

    sp = add("sum", _cmd_sum, "pointwise sum of two ideals")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("-o", "--output")

    sp = add("distance", _cmd_distance, "saturated chain length between two members")
    sp.add_argument("ideal")
    sp.add_argument("start")
    sp.add_argument("end")

    sp = add("rel-distance", _cmd_rel_distance, "distance d(F \\ E) for nested ideals")
    sp.add_argument("smaller")
    sp.add_argument("larger")

    sp = add("decompose", _cmd_decompose, "split into local factors")
    sp.add_argument("semigroup")

    sp = add("gamma-of", _cmd_gamma_of, "conductor and capping bound of a frame")
    sp.add_argument("ideal")

    sp = add("curve-gamma", _cmd_curve_gamma, "value semigroup ideal of a curve module")
    sp.add_argument("curve")
    sp.add_argument("--module", default="R")
    sp.add_argument("-o", "--output")

    sp = add("colon", _cmd_colon, "value ideal of a colon module K : E")
    sp.add_argument("curve")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--pole-bound", type=int, default=None)
    sp.add_argument("-o", "--output")

    sp = add("length", _cmd_length, "Q-dimension of F/E for nested curve modules")
    sp.add_argument("curve")
    sp.add_argument("larger")
    sp.add_argument("smaller")

    sp = add("plot", _cmd_plot, "draw a 2-branch ideal (ASCII, or SVG with --svg)")
    sp.add_argument("ideal")
    sp.add_argument("--svg", help="write an SVG file instead of ASCII output")
    sp.add_argument("--lo", help="lower window corner, e.g. '0,0'")
    sp.add_argument("--hi", help="upper window corner, e.g. '8,6'")

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        FrameError,
        DimensionMismatch,
        NotCertifiedError,
        InclusionError,
        MetricError,
        CapExceededError,
        TruncationError,
        PoleBoundError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GoodsemiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
