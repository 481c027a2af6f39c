# -*- coding: utf-8 -*-
"""
JSON forms of series, points, rational subsets, rings and reports.

Rationals always travel as strings ``"a/b"`` (or ``"a"``); integers that are
not field elements (``k``, tail bounds, trial counts) are JSON integers.
``parse_*`` raise ``SchemaError`` on malformed or unexpected fields and let
domain errors from the constructors propagate.
"""
import re
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional

from adicdisc.errors import SchemaError
from adicdisc.ffield import FqContext, FqElement, P1Point
from adicdisc.huber import localize
from adicdisc.ordgroup import ConvexSubgroup, GroupValue, render
from adicdisc.points import (
    Classical,
    Disc,
    Plain,
    PointDescriptor,
    PointReport,
    PPower,
    Type5,
    gauss_point,
    x_one_minus,
    x_one_plus,
)
from adicdisc.rings import (
    FormalPowerSeries,
    Localized,
    PolyRing,
    RingDescriptor,
    TateAlgebra,
)
from adicdisc.tate import INFINITE_VALUATION, TateSeries
from adicdisc.topology import AnyPoint, RationalSubset, SpvPoint
from adicdisc.utils import render_fraction

Json = Any

_RATIONAL_RE = re.compile(r"^-?\d+(/0*[1-9]\d*)?$")
_INTEGER_RE = re.compile(r"^-?\d+$")

NAMED_POINTS: Dict[str, Callable[[int], PointDescriptor]] = {
    "gauss": gauss_point,
    "x1-": x_one_minus,
    "x1+": x_one_plus,
}

SIMPLE_RINGS = {
    "tate_algebra": TateAlgebra,
    "poly_ring": PolyRing,
    "formal_power_series": FormalPowerSeries,
}


def expect_object(obj: Json, what: str, required: Iterable[str], optional: Iterable[str] = ()):
    if not isinstance(obj, dict):
        raise SchemaError(f"{what} must be a JSON object")
    required = set(required)
    missing = required - obj.keys()
    if missing:
        raise SchemaError(f"{what} lacks {sorted(missing)}")
    unknown = obj.keys() - required - set(optional)
    if unknown:
        raise SchemaError(f"unknown fields {sorted(unknown)} in {what}")
    return obj


def expect_int(obj: Json, what: str) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise SchemaError(f"{what} must be a JSON integer")
    return obj


def parse_rational(obj: Json, what: str = "rational") -> Fraction:
    if not isinstance(obj, str) or not _RATIONAL_RE.match(obj):
        raise SchemaError(f"{what} must be a string 'a' or 'a/b', got {obj!r}")
    value = Fraction(obj)
    canonical = render_fraction(value)
    if canonical != obj:
        raise SchemaError(f"{what} {obj!r} is not in lowest terms, write {canonical!r}")
    return value


def parse_series(obj: Json, prime: int) -> TateSeries:
    expect_object(obj, "series", ["coeffs"], ["tail_vp"])
    if not isinstance(obj["coeffs"], list):
        raise SchemaError("coeffs must be a list")
    coeffs = [parse_rational(c, "coefficient") for c in obj["coeffs"]]
    tail = obj.get("tail_vp", "inf")
    tail_vp = INFINITE_VALUATION if tail == "inf" else expect_int(tail, "tail_vp")
    return TateSeries(prime, tuple(coeffs), tail_vp)


def series_to_json(f: TateSeries) -> Json:
    return {
        "coeffs": [render_fraction(c) for c in f.coeffs],
        "tail_vp": "inf" if f.is_polynomial else f.tail_vp,
    }


def _parse_lambda(obj: Json, prime: int) -> P1Point:
    if obj == "inf":
        return P1Point.infinity()
    expect_object(obj, "lambda", ["k", "value"], ["modulus"])
    k = expect_int(obj["k"], "k")
    if "modulus" in obj:
        ctx = FqContext(prime, k, tuple(expect_int(c, "modulus") for c in obj["modulus"]))
    else:
        ctx = FqContext.default(prime, k)
    value = obj["value"]
    if isinstance(value, str) and _INTEGER_RE.match(value):
        return P1Point.finite(ctx.from_int(int(value)))
    if isinstance(value, list):
        return P1Point.finite(ctx.element([expect_int(c, "coordinate") for c in value]))
    raise SchemaError("lambda value must be a string or a list of coordinates")


def _lambda_to_json(lam: P1Point) -> Json:
    if lam.value is None:
        return "inf"
    element: FqElement = lam.value
    ctx = element.ctx
    out: Dict[str, Json] = {"k": ctx.k}
    if ctx.k == 1:
        out["value"] = str(element.coordinates[0])
    else:
        out["value"] = list(element.coordinates)
    if ctx != FqContext.default(ctx.p, ctx.k):
        out["modulus"] = list(ctx.modulus)
    return out


def parse_point(obj: Json, prime: int) -> AnyPoint:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise SchemaError("a point is a JSON object with a 'kind'")
    kind = obj["kind"]
    if kind == "classical":
        expect_object(obj, "classical point", ["kind", "alpha"])
        return Classical(prime, parse_rational(obj["alpha"], "alpha"))
    if kind == "disc":
        expect_object(obj, "disc point", ["kind", "alpha"], ["q", "r"])
        alpha = parse_rational(obj["alpha"], "alpha")
        if ("q" in obj) == ("r" in obj):
            raise SchemaError("a disc point carries exactly one of 'q' and 'r'")
        if "q" in obj:
            return Disc(prime, alpha, PPower(parse_rational(obj["q"], "q")))
        return Disc(prime, alpha, Plain(parse_rational(obj["r"], "r")))
    if kind == "type5":
        expect_object(obj, "type 5 point", ["kind", "alpha", "q", "lambda"])
        return Type5(
            prime,
            parse_rational(obj["alpha"], "alpha"),
            parse_rational(obj["q"], "q"),
            _parse_lambda(obj["lambda"], prime),
        )
    if kind == "spv":
        expect_object(obj, "truncated point", ["kind", "base", "truncation"])
        base = parse_point(obj["base"], prime)
        if isinstance(base, SpvPoint):
            raise SchemaError("truncations do not nest")
        return SpvPoint(base, parse_convex_subgroup(obj["truncation"]))
    if kind == "named":
        expect_object(obj, "named point", ["kind", "name"])
        if obj["name"] not in NAMED_POINTS:
            raise SchemaError(f"unknown point name {obj['name']!r}")
        return NAMED_POINTS[obj["name"]](prime)
    raise SchemaError(f"unknown point kind {kind!r}")


def point_to_json(x: AnyPoint) -> Json:
    if isinstance(x, SpvPoint):
        return {"kind": "spv", "base": point_to_json(x.base), "truncation": x.truncation.value}
    alpha = render_fraction(x.alpha)
    if isinstance(x, Classical):
        return {"kind": "classical", "alpha": alpha}
    if isinstance(x, Type5):
        return {
            "kind": "type5",
            "alpha": alpha,
            "q": render_fraction(x.q),
            "lambda": _lambda_to_json(x.lam),
        }
    if isinstance(x.radius, PPower):
        return {"kind": "disc", "alpha": alpha, "q": render_fraction(x.radius.q)}
    return {"kind": "disc", "alpha": alpha, "r": render_fraction(x.radius.r)}


def parse_convex_subgroup(obj: Json) -> ConvexSubgroup:
    try:
        return ConvexSubgroup(obj)
    except ValueError:
        raise SchemaError(f"unknown convex subgroup {obj!r}") from None


def parse_series_list(obj: Json, prime: int, what: str) -> List[TateSeries]:
    if not isinstance(obj, list):
        raise SchemaError(f"{what} must be a list of series")
    return [parse_series(g, prime) for g in obj]


def parse_subset(obj: Json, prime: int) -> RationalSubset:
    expect_object(obj, "rational subset", ["numerators", "denominator"])
    return RationalSubset(
        tuple(parse_series_list(obj["numerators"], prime, "numerators")),
        parse_series(obj["denominator"], prime),
    )


def subset_to_json(subset: RationalSubset) -> Json:
    return {
        "numerators": [series_to_json(g) for g in subset.numerators],
        "denominator": series_to_json(subset.denominator),
    }


def parse_ring(obj: Json, prime: int) -> RingDescriptor:
    """Parse a ring; localized rings go through ``huber.localize`` and are validated."""
    if isinstance(obj, str):
        if obj not in SIMPLE_RINGS:
            raise SchemaError(f"unknown ring {obj!r}")
        return SIMPLE_RINGS[obj](prime)
    expect_object(obj, "localized ring", ["kind", "base", "numerators", "denominator"])
    if obj["kind"] != "localized":
        raise SchemaError(f"unknown ring kind {obj['kind']!r}")
    return localize(
        parse_ring(obj["base"], prime),
        parse_series_list(obj["numerators"], prime, "numerators"),
        parse_series(obj["denominator"], prime),
    )


def ring_to_json(ring: RingDescriptor) -> Json:
    if isinstance(ring, Localized):
        return {
            "kind": "localized",
            "base": ring_to_json(ring.base),
            "numerators": [series_to_json(g) for g in ring.numerators],
            "denominator": series_to_json(ring.denominator),
        }
    for name, cls in SIMPLE_RINGS.items():
        if isinstance(ring, cls):
            return name
    raise TypeError(f"not a ring descriptor: {ring!r}")


def value_to_json(value: Optional[GroupValue]) -> Json:
    return None if value is None else render(value)


def report_to_json(report: PointReport) -> Json:
    return {
        "type": report.type_tag,
        "support": report.support.value,
        "value_group": str(report.value_group),
        "residue_field": report.residue_field.value,
        "closed": report.closed,
        "in_d": report.in_d,
    }
