# -*- coding: utf-8 -*-
import random
from fractions import Fraction

import pytest

from adicdisc.errors import (
    AmbientMismatch,
    Gamma1NotContained,
    NonIntegralGenerator,
    NonPolynomialGenerator,
    PointNotInD,
    ResidueDegreeTooLarge,
)
from adicdisc.ffield import FqContext, P1Point
from adicdisc.ordgroup import ConvexSubgroup, Ordering, cmp, group_max, quotient_project
from adicdisc.points import (
    Classical,
    Disc,
    PPower,
    Type5,
    evaluate,
    gauss_point,
    x_one_minus,
    x_one_plus,
)
from adicdisc.rings import FormalPowerSeries, PolyRing, TateAlgebra
from adicdisc.sampling import random_catalog_point, random_integral_polynomial, random_polynomial
from adicdisc.tate import TateSeries
from adicdisc.topology import (
    Openness,
    RationalSubset,
    SpvPoint,
    closure_points,
    evaluate_at,
    fake_cover_members,
    horizontal_specialize,
    member,
    open_ideal,
    openness_certificate,
    polynomial_gcd,
    sampling_specialization_check,
    specializes,
    vertical_generization,
)

from .utils import poly

P = 3
W = TateSeries.w(P)
ONE = TateSeries.constant(P, 1)
PI = TateSeries.constant(P, P)


def test_member_examples():
    assert member(Classical(P, 3), RationalSubset((W,), PI))
    assert not member(Classical(P, 1), RationalSubset((W,), PI))
    # |1| <= |w| holds at the Gauss point but not at x_{1-}
    assert member(gauss_point(P), RationalSubset((ONE,), W))
    assert not member(x_one_minus(P), RationalSubset((ONE,), W))
    assert member(x_one_plus(P), RationalSubset((ONE,), W))
    # a zero denominator excludes the point
    assert not member(Classical(P, 0), RationalSubset((ONE,), W))


def test_fake_cover_misses_x_one_minus():
    assert fake_cover_members(x_one_minus(P), 30) == []
    assert fake_cover_members(gauss_point(P), 30) == []
    assert fake_cover_members(Classical(P, 9), 5) == [1, 2, 3, 4, 5]
    assert fake_cover_members(Disc(P, 0, PPower(Fraction(1, 2))), 5) == [2, 3, 4, 5]
    # yet x_{1-} has |w| < 1, so it lies in U(w/1)
    assert member(x_one_minus(P), RationalSubset((W,), ONE))


def test_member_of_truncated_points():
    x = SpvPoint(x_one_minus(P), ConvexSubgroup.SECOND_FACTOR)
    # |p| truncates to zero, so p is not a valid denominator there
    assert not member(x, RationalSubset((W,), PI))
    assert member(x, RationalSubset((W,), ONE))
    with pytest.raises(AmbientMismatch):
        SpvPoint(gauss_point(P), ConvexSubgroup.SECOND_FACTOR)


def test_polynomial_gcd():
    f = poly(P, -1, 1) * poly(P, -2, 1)
    g = poly(P, -1, 1) * poly(P, 3, 1)
    assert polynomial_gcd([f, g]) == poly(P, -1, 1)
    assert polynomial_gcd([W, poly(P, -1, 1)]) == ONE
    assert polynomial_gcd([poly(P, 0, 2)]) == W


def test_open_ideal_in_power_series():
    fps = FormalPowerSeries(P)
    assert open_ideal([W, PI], fps) is Openness.OPEN
    assert open_ideal([PI], fps) is Openness.NOT_OPEN
    assert open_ideal([W], fps) is Openness.NOT_OPEN
    assert open_ideal([poly(P, -P, 0, 1)], fps) is Openness.NOT_OPEN
    assert open_ideal([poly(P, 1, 1)], fps) is Openness.OPEN
    assert open_ideal([PI, poly(P, 0, P, 1)], fps) is Openness.OPEN
    assert open_ideal([], fps) is Openness.NOT_OPEN
    with pytest.raises(NonIntegralGenerator):
        open_ideal([TateSeries.constant(P, Fraction(1, P))], fps)


def test_openness_certificate():
    assert openness_certificate([W, PI], P) == 1
    assert openness_certificate([W**3, TateSeries.constant(P, P**2)], P) == 4
    assert openness_certificate([poly(P, 1, 1)], P) == 0
    assert openness_certificate([W, W**2], P) is None


def test_open_ideal_certificate_depth():
    fps = FormalPowerSeries(P)
    gens = [W**10, TateSeries.constant(P, P**10)]
    assert open_ideal(gens, fps, depth=16) is Openness.UNKNOWN
    assert open_ideal(gens, fps, depth=19) is Openness.OPEN


def test_open_ideal_in_tate_rings():
    tate, polys = TateAlgebra(P), PolyRing(P)
    assert open_ideal([W, poly(P, -1, 1)], tate) is Openness.OPEN
    assert open_ideal([W], tate) is Openness.NOT_OPEN
    assert open_ideal([TateSeries.zero(P)], tate) is Openness.NOT_OPEN
    # w - 1/3 has its zero outside the disc: a unit of C_p<w> but not of Q[w]
    pole = poly(P, Fraction(-1, 3), 1)
    assert open_ideal([pole], tate) is Openness.OPEN
    assert open_ideal([pole], polys) is Openness.NOT_OPEN
    assert open_ideal([W, poly(P, -1, 1)], polys) is Openness.OPEN
    with pytest.raises(NonPolynomialGenerator):
        open_ideal([TateSeries(P, (Fraction(1),), 4)], tate)


def test_validated_subsets():
    assert RationalSubset.validated([W], PI, TateAlgebra(P)).is_rational
    subset = RationalSubset.validated([W], PI, FormalPowerSeries(P))
    assert subset.validation is Openness.OPEN
    assert not RationalSubset.validated([W], W, TateAlgebra(P)).is_rational
    assert not RationalSubset((W,), PI).is_rational


def test_specializes():
    gauss = gauss_point(P)
    assert specializes(gauss, x_one_minus(P))
    assert specializes(gauss, gauss)
    assert not specializes(x_one_minus(P), gauss)
    assert not specializes(gauss, Type5(P, 0, 1, P1Point.finite(FqContext.default(P).zero)))
    disc = Disc(P, 0, PPower(1))
    assert specializes(disc, Type5(P, 3, 1, P1Point.infinity()))
    assert not specializes(disc, Type5(P, 1, 1, P1Point.infinity()))
    assert not specializes(Classical(P, 0), gauss)


def test_closure_points():
    gauss = gauss_point(P)
    closure = closure_points(gauss)
    assert len(closure) == 1 + P
    assert closure[0] == gauss
    assert x_one_plus(P) not in closure
    assert all(specializes(gauss, y) for y in closure)
    assert len(closure_points(Disc(P, 0, PPower(1)))) == 2 + P
    assert len(closure_points(gauss, k=2)) == 1 + P**2
    assert closure_points(Classical(P, 0)) == [Classical(P, 0)]
    with pytest.raises(PointNotInD):
        closure_points(x_one_plus(P))
    with pytest.raises(ResidueDegreeTooLarge):
        closure_points(gauss, k=9)


def test_sampling_agrees_with_specialization():
    for y in closure_points(gauss_point(P))[1:]:
        assert sampling_specialization_check(gauss_point(P), y, trials=500).consistent
    report = sampling_specialization_check(x_one_minus(P), gauss_point(P), trials=500)
    assert not report.consistent
    g, s = report.counterexample
    subset = RationalSubset((g,), s)
    assert member(gauss_point(P), subset)
    assert not member(x_one_minus(P), subset)


def test_sampling_is_reproducible():
    first = sampling_specialization_check(x_one_minus(P), gauss_point(P), seed=7)
    second = sampling_specialization_check(x_one_minus(P), gauss_point(P), seed=7)
    assert first == second
    with pytest.raises(ValueError):
        sampling_specialization_check(gauss_point(P), x_one_minus(P), trials=0)


def test_vertical_generization_is_compatible_with_projection():
    rng = random.Random(0)
    lambdas = list(FqContext.default(P).p1_points())
    for _ in range(200):
        q = Fraction(rng.randint(1, 4), rng.randint(1, 2))
        y = Type5(P, Fraction(rng.randint(-9, 9), 2), q, rng.choice(lambdas))
        x = vertical_generization(y)
        assert x == Disc(P, y.alpha, PPower(q))
        assert specializes(x, y)
        f = random_polynomial(rng, P, 4, -2, 3)
        assert quotient_project(evaluate(f, y), ConvexSubgroup.SECOND_FACTOR) == evaluate(f, x)
    assert vertical_generization(gauss_point(P)) == gauss_point(P)


def test_horizontal_specialization():
    with pytest.raises(Gamma1NotContained):
        horizontal_specialize(x_one_minus(P), ConvexSubgroup.SECOND_FACTOR)
    with pytest.raises(Gamma1NotContained):
        horizontal_specialize(Classical(P, 0), ConvexSubgroup.TRIVIAL)
    with pytest.raises(AmbientMismatch):
        horizontal_specialize(gauss_point(P), ConvexSubgroup.SECOND_FACTOR)
    out = horizontal_specialize(x_one_minus(P), ConvexSubgroup.FULL)
    assert out.point == SpvPoint(x_one_minus(P), ConvexSubgroup.FULL)
    assert out.is_valuation
    assert out.continuous


def _truncated_points(rng):
    lambdas = list(FqContext.default(P).p1_points())
    while True:
        q = Fraction(rng.randint(1, 4), rng.randint(1, 2))
        base = Type5(P, Fraction(rng.randint(-9, 9)), q, rng.choice(lambdas))
        yield SpvPoint(base, ConvexSubgroup.SECOND_FACTOR)
        yield SpvPoint(Classical(P, Fraction(rng.randint(-9, 9))), ConvexSubgroup.TRIVIAL)
        yield SpvPoint(x_one_minus(P), ConvexSubgroup.SECOND_FACTOR)


def test_truncated_values_are_valuations_on_integral_functions():
    rng = random.Random(1)
    points = _truncated_points(rng)
    for _ in range(500):
        x = next(points)
        f, g = random_integral_polynomial(rng, P), random_integral_polynomial(rng, P)
        fx, gx = evaluate_at(f, x), evaluate_at(g, x)
        assert evaluate_at(f * g, x) == fx * gx
        assert cmp(evaluate_at(f + g, x), group_max([fx, gx])) is not Ordering.GT


def test_specializes_agrees_with_sampling_on_a_pool():
    rng = random.Random(2)
    disc = Disc(P, 0, PPower(1))
    pool = closure_points(gauss_point(P)) + closure_points(disc) + [Classical(P, 3)]
    while len(pool) < 20:
        pool.append(random_catalog_point(rng, P))
    checked = 0
    for x in pool:
        for y in pool:
            if specializes(x, y):
                assert sampling_specialization_check(x, y, trials=500).consistent
                checked += 1
    # the diagonal and the two closures
    assert checked >= len(pool) + 3 + 4
