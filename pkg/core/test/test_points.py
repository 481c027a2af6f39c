# -*- coding: utf-8 -*-
import random
from fractions import Fraction

import pytest

from adicdisc.errors import (
    CenterOutsideDisc,
    EvaluationOfNonPolynomialAtClassicalPoint,
    InvalidRadius,
    PrimeMismatch,
    UncertainTail,
)
from adicdisc.ffield import FqContext, P1Point
from adicdisc.ordgroup import (
    ConvexSubgroup,
    GroupDescriptor,
    GroupValue,
    Ordering,
    cmp,
    group_max,
    quotient_project,
)
from adicdisc.points import (
    Classical,
    Disc,
    Plain,
    PPower,
    ResidueField,
    SupportKind,
    Type5,
    classify,
    evaluate,
    gauss_point,
    in_d,
    is_analytic,
    same_point,
    support_contains,
    value_group,
    x_one_minus,
    x_one_plus,
)
from adicdisc.sampling import (
    random_catalog_point,
    random_center,
    random_integral_polynomial,
    random_polynomial,
)
from adicdisc.tate import TateSeries

from .utils import poly

P = 3
F3 = FqContext.default(P)


def finite(value, ctx=F3):
    return P1Point.finite(ctx.from_int(value))


def test_exotic_valuations_of_p_and_w():
    x = x_one_minus(P)
    p_value = evaluate(TateSeries.constant(P, P), x)
    w_value = evaluate(TateSeries.w(P), x)
    assert p_value == GroupValue.lex2(P, -1, 0)
    assert w_value == GroupValue.lex2(P, 0, 1)
    one = GroupValue.one(GroupDescriptor.pqxhalfz(P))
    for n in range(1, 101):
        w_n = evaluate(TateSeries.w(P) ** n, x)
        assert w_n == GroupValue.lex2(P, 0, n)
        assert cmp(p_value, w_n) is Ordering.LT
        assert cmp(w_n, one) is Ordering.LT


def test_x_one_plus_lies_outside_the_disc():
    x = x_one_plus(P)
    one = GroupValue.one(GroupDescriptor.pqxhalfz(P))
    for n in range(1, 51):
        value = evaluate(TateSeries.w(P) ** n, x)
        assert value == GroupValue.lex2(P, 0, -n)
        assert cmp(value, one) is Ordering.GT
    assert not in_d(x)
    assert in_d(x_one_minus(P))
    assert in_d(Classical(P, 0))
    assert in_d(Type5(P, 0, 1, P1Point.infinity()))


def test_evaluate_examples():
    alpha = Fraction(7, 2)
    assert evaluate(poly(P, -alpha, 1), Classical(P, alpha)).is_zero
    assert evaluate(TateSeries.w(P), Disc(P, 0, Plain(Fraction(1, 2)))) == GroupValue.mixed(
        P, Fraction(1, 2), 0, 1
    )
    f = poly(P, P**3, P, 1)
    assert evaluate(f, Disc(P, 0, PPower(Fraction(1, 2)))) == GroupValue.pexp(P, -1)
    assert evaluate(poly(P, 1, 1), Classical(P, 2)) == GroupValue.pexp(P, -1)
    with pytest.raises(PrimeMismatch):
        evaluate(poly(5, 1), gauss_point(P))


def test_classical_evaluation_of_a_series_needs_a_certificate():
    f = TateSeries(P, (Fraction(1), Fraction(1)), 1)
    assert evaluate(f, Classical(P, 0)) == GroupValue.pexp(P, 0)
    with pytest.raises(EvaluationOfNonPolynomialAtClassicalPoint):
        evaluate(f, Classical(P, -1))


def test_classification_table():
    rows = {
        1: Classical(P, 1),
        2: gauss_point(P),
        3: Disc(P, 0, Plain(Fraction(1, 2))),
        5: x_one_minus(P),
    }
    expected = {
        1: (SupportKind.MAXIMAL, GroupDescriptor.pq(P), ResidueField.ALG_CLOSED_PRIME, True),
        2: (SupportKind.ZERO, GroupDescriptor.pq(P), ResidueField.RATIONAL_FUNCTION, False),
        3: (
            SupportKind.ZERO,
            GroupDescriptor.pqrz(P, Fraction(1, 2)),
            ResidueField.ALG_CLOSED_PRIME,
            True,
        ),
        5: (SupportKind.ZERO, GroupDescriptor.pqxhalfz(P), ResidueField.ALG_CLOSED_PRIME, True),
    }
    for type_tag, x in rows.items():
        report = classify(x)
        assert report.type_tag == type_tag
        assert (report.support, report.value_group, report.residue_field, report.closed) == (
            expected[type_tag]
        )
        assert report.in_d
    assert not classify(x_one_plus(P)).in_d
    assert classify(x_one_plus(P)).type_tag == 5


def test_support():
    alpha = Fraction(2, 5)
    f = poly(P, -alpha, 1) ** 2 * poly(P, 1, 1, 1)
    assert support_contains(Classical(P, alpha), f)
    assert not support_contains(Disc(P, 0, PPower(1)), TateSeries.w(P))
    for x in (Classical(P, 0), gauss_point(P), x_one_minus(P), Disc(P, 0, Plain(Fraction(2, 5)))):
        assert support_contains(x, TateSeries.zero(P))
        assert is_analytic(x)


def test_point_validation():
    with pytest.raises(CenterOutsideDisc):
        Classical(P, Fraction(1, 3))
    with pytest.raises(InvalidRadius):
        Disc(P, 0, Plain(Fraction(1, 9)))
    with pytest.raises(InvalidRadius):
        Disc(P, 0, Plain(Fraction(3, 2)))
    with pytest.raises(InvalidRadius):
        PPower(-1)
    with pytest.raises(PrimeMismatch):
        Type5(P, 0, 0, P1Point.finite(FqContext.default(5).one))


def test_value_groups():
    assert value_group(Classical(P, 0)) == GroupDescriptor.pq(P)
    assert value_group(x_one_plus(P)) == GroupDescriptor.pqxhalfz(P)
    assert value_group(Disc(P, 0, Plain(Fraction(1, 2)))).r == Fraction(1, 2)


def test_same_point():
    assert same_point(Disc(P, 0, PPower(1)), Disc(P, 3, PPower(1)))
    assert not same_point(Disc(P, 0, PPower(1)), Disc(P, 1, PPower(1)))
    assert not same_point(Disc(P, 0, PPower(1)), Disc(P, 0, PPower(2)))
    assert same_point(Disc(P, 0, Plain(Fraction(1, 2))), Disc(P, 9, Plain(Fraction(1, 2))))
    assert same_point(Type5(P, 0, 1, finite(0)), Type5(P, 3, 1, finite(2)))
    assert not same_point(Type5(P, 0, 1, finite(0)), Type5(P, 3, 1, finite(0)))
    assert same_point(Type5(P, 0, 1, P1Point.infinity()), Type5(P, 6, 1, P1Point.infinity()))
    assert same_point(Classical(P, 1), Classical(P, 1))
    assert not same_point(Classical(P, 0), gauss_point(P))


def test_equivalent_descriptors_evaluate_alike():
    rng = random.Random(0)
    pairs = [
        (Type5(P, 0, 1, finite(0)), Type5(P, 3, 1, finite(2))),
        (Type5(P, 1, 2, finite(1)), Type5(P, 10, 2, finite(0))),
        (Disc(P, 0, PPower(Fraction(3, 2))), Disc(P, 9, PPower(Fraction(3, 2)))),
    ]
    for x, y in pairs:
        assert same_point(x, y)
        for _ in range(100):
            f = random_polynomial(rng, P, 5, -2, 3)
            assert evaluate(f, x) == evaluate(f, y)


def test_type5_values_project_to_the_disc_value():
    rng = random.Random(1)
    for _ in range(100):
        f = random_polynomial(rng, P, 5, -2, 3)
        x = Type5(P, 0, 1, finite(rng.randrange(P)))
        assert quotient_project(evaluate(f, x), ConvexSubgroup.SECOND_FACTOR) == evaluate(
            f, x.disc
        )


def _random_point(rng, variant):
    alpha = random_center(rng, P)
    q = Fraction(rng.randint(0, 4), rng.randint(1, 2))
    if variant == "classical":
        return Classical(P, alpha)
    if variant == "disc":
        return Disc(P, alpha, PPower(q))
    if variant == "plain":
        return Disc(P, alpha, Plain(Fraction(rng.choice([1, 2, 4, 5, 7]), 8)))
    lam = P1Point.infinity() if variant == "type5_inf" else finite(rng.randrange(P))
    return Type5(P, alpha, q, lam)


@pytest.mark.parametrize("variant", ["classical", "disc", "plain", "type5", "type5_inf"])
def test_valuation_axioms(variant):
    rng = random.Random(variant)
    failures = 0
    for _ in range(500):
        x = _random_point(rng, variant)
        f = random_polynomial(rng, P, 4, -2, 3)
        g = random_polynomial(rng, P, 4, -2, 3)
        fx, gx = evaluate(f, x), evaluate(g, x)
        if evaluate(f * g, x) != fx * gx:
            failures += 1
        if cmp(evaluate(f + g, x), group_max([fx, gx])) is Ordering.GT:
            failures += 1
    assert failures == 0


@pytest.mark.parametrize("q", [0, 1, 2])
def test_disc_value_is_the_sup_over_the_disc(q):
    p = 7
    rng = random.Random(q)
    scale = Fraction(p) ** q
    for _ in range(50):
        f = random_polynomial(rng, p, 6, -2, 3)
        value = evaluate(f, Disc(p, 0, PPower(q)))
        # the reduction has degree < p, so some residue class is not a root
        centers = [scale * j for j in range(p)]
        while len(centers) < 200:
            u = Fraction(rng.randint(-1000, 1000), rng.choice([1, 2, 3, 4, 5, 6, 8, 9, 10]))
            centers.append(scale * u)
        samples = [evaluate(f, Classical(p, alpha)) for alpha in centers]
        for sample in samples:
            assert cmp(sample, value) is not Ordering.GT
        assert group_max(samples) == value


def test_residue_direction_in_an_extension():
    f9 = FqContext.default(P, 2)
    x = Type5(P, 0, 0, P1Point.finite(f9.element([0, 1])))
    # t^2 + 1 vanishes at the generator of F_9
    assert evaluate(poly(P, 1, 0, 1), x) == GroupValue.lex2(P, 0, 1)
    assert evaluate(TateSeries.w(P), x) == GroupValue.lex2(P, 0, 0)


def test_series_off_the_origin_need_a_strict_certificate():
    f = TateSeries(P, (Fraction(P),), 1)
    assert evaluate(f, gauss_point(P)) == GroupValue.pexp(P, -1)
    assert evaluate(f, Disc(P, 0, PPower(1))) == GroupValue.pexp(P, -1)
    # 3 + 3w and 3 - 3w differ in size near w = 1
    with pytest.raises(UncertainTail):
        evaluate(f, Disc(P, 1, PPower(1)))
    with pytest.raises(UncertainTail):
        evaluate(f, x_one_minus(P))
    g = TateSeries(P, (Fraction(1), Fraction(P)), 1)
    assert evaluate(g, Disc(P, 1, PPower(1))) == GroupValue.pexp(P, 0)


def test_integral_functions_are_bounded_on_the_disc():
    rng = random.Random(11)
    fixed = [gauss_point(P), x_one_minus(P), Disc(P, 0, Plain(Fraction(1, 2)))]
    for _ in range(200):
        f = random_integral_polynomial(rng, P)
        for x in fixed + [random_catalog_point(rng, P)]:
            assert in_d(x)
            value = evaluate(f, x)
            assert cmp(value, GroupValue.one(value.ambient)) is not Ordering.GT
    assert evaluate(TateSeries.w(P), x_one_plus(P)) > GroupValue.lex2(P, 0, 0)
