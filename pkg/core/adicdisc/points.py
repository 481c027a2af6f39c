# -*- coding: utf-8 -*-
"""
Finitely presented points of ``Cont(C_p<w>)`` and the evaluation ``f -> |f(x)|``.

The catalog covers

- classical points ``x_alpha`` (Type 1),
- disc points ``x_{alpha,r}`` with ``r`` in ``p^Q`` (Type 2) or not (Type 3),
- the points ``x_{alpha,r}^lambda`` in the closure of a Type 2 point (Type 5).

Nested-disc points (Type 4) need centers that are not rational and are not
modelled. For a Type 5 point the residue direction ``lambda`` is read in the
coordinate ``t = (w - alpha)/beta`` where ``beta`` has valuation ``q`` and
residue 1 (see ``tate.reduce_at_max``); choosing another ``beta`` rescales
``lambda``.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from adicdisc.errors import (
    CenterOutsideDisc,
    EvaluationOfNonPolynomialAtClassicalPoint,
    InvalidRadius,
    PrimeMismatch,
)
from adicdisc.ffield import FqContext, FqPoly, P1Point, ord_at
from adicdisc.ordgroup import (
    GroupDescriptor,
    GroupValue,
    Ordering,
    cmp,
    is_integer_power_of,
)
from adicdisc.tate import (
    TateSeries,
    mixed_norm,
    r_gauss_norm,
    recenter,
    reduce_at_max,
    residue_unit,
    vp,
)
from adicdisc.utils import check_prime, isinstance2, render_fraction, to_fraction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PPower:
    """The radius ``p^{-q}``."""

    q: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", to_fraction(self.q))
        if self.q < 0:
            raise InvalidRadius(f"p^{{-q}} with q = {self.q} lies outside the unit disc")


@dataclass(frozen=True)
class Plain:
    """A rational radius ``0 < r < 1`` that is not an integer power of ``p``."""

    r: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", to_fraction(self.r))
        if not 0 < self.r < 1:
            raise InvalidRadius(f"radius {self.r} must lie in (0, 1)")


Radius = Union[PPower, Plain]


def _check_center(prime: int, alpha: Fraction) -> Fraction:
    check_prime(prime)
    alpha = to_fraction(alpha)
    if vp(alpha, prime) < 0:
        raise CenterOutsideDisc(f"|{render_fraction(alpha)}|_{prime} > 1")
    return alpha


@dataclass(frozen=True)
class Classical:
    prime: int
    alpha: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", _check_center(self.prime, self.alpha))


@dataclass(frozen=True)
class Disc:
    prime: int
    alpha: Fraction
    radius: Radius

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", _check_center(self.prime, self.alpha))
        if isinstance(self.radius, Plain) and is_integer_power_of(self.radius.r, self.prime):
            raise InvalidRadius(
                f"radius {self.radius.r} is a power of p={self.prime}; use PPower"
            )


@dataclass(frozen=True)
class Type5:
    prime: int
    alpha: Fraction
    q: Fraction
    lam: P1Point

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", _check_center(self.prime, self.alpha))
        object.__setattr__(self, "q", to_fraction(self.q))
        if self.q < 0:
            raise InvalidRadius(f"p^{{-q}} with q = {self.q} lies outside the unit disc")
        if self.lam.value is not None and self.lam.value.ctx.p != self.prime:
            raise PrimeMismatch(f"lambda over {self.lam.value.ctx} for p={self.prime}")

    @property
    def disc(self) -> Disc:
        return Disc(self.prime, self.alpha, PPower(self.q))


PointDescriptor = Union[Classical, Disc, Type5]


def gauss_point(prime: int) -> Disc:
    return Disc(prime, Fraction(0), PPower(Fraction(0)))


def x_one_minus(prime: int) -> Type5:
    return Type5(prime, Fraction(0), Fraction(0), P1Point.finite(FqContext.default(prime).zero))


def x_one_plus(prime: int) -> Type5:
    return Type5(prime, Fraction(0), Fraction(0), P1Point.infinity())


class ResidueField(Enum):
    ALG_CLOSED_PRIME = "F_p-bar"
    RATIONAL_FUNCTION = "F_p-bar(t)"


class SupportKind(Enum):
    MAXIMAL = "<w - alpha>"
    ZERO = "{0}"


@dataclass(frozen=True)
class PointReport:
    type_tag: int
    support: SupportKind
    value_group: GroupDescriptor
    residue_field: ResidueField
    closed: bool
    in_d: bool


def value_group(x: PointDescriptor) -> GroupDescriptor:
    if isinstance(x, Type5):
        return GroupDescriptor.pqxhalfz(x.prime)
    if isinstance(x, Disc) and isinstance(x.radius, Plain):
        return GroupDescriptor.pqrz(x.prime, x.radius.r)
    return GroupDescriptor.pq(x.prime)


def _classical_value(f: TateSeries, alpha: Fraction) -> GroupValue:
    value = f(alpha)
    if not f.is_polynomial and vp(value, f.prime) >= f.tail_vp:
        raise EvaluationOfNonPolynomialAtClassicalPoint(
            f"f({render_fraction(alpha)}) is only known modulo p^{f.tail_vp}"
        )
    if value == 0:
        return GroupValue.zero(GroupDescriptor.pq(f.prime))
    return GroupValue.pexp(f.prime, -vp(value, f.prime))


def _type5_value(f: TateSeries, x: Type5) -> GroupValue:
    g = recenter(f, x.alpha)
    first = r_gauss_norm(g, x.q, strict=x.alpha != 0)
    if first.is_zero:
        return GroupValue.zero(GroupDescriptor.pqxhalfz(x.prime))
    reduction = reduce_at_max(g, x.q)
    one = FqPoly.constant(reduction.ctx.one)
    return GroupValue.lex2(x.prime, first.exponent, ord_at(reduction, one, x.lam))


def evaluate(f: TateSeries, x: PointDescriptor) -> GroupValue:
    """``|f(x)|`` in the value group of ``x`` (with its absorbing zero)."""
    if f.prime != x.prime:
        raise PrimeMismatch(f"series over p={f.prime} at a point over p={x.prime}")
    if isinstance(x, Classical):
        return _classical_value(f, x.alpha)
    if isinstance(x, Type5):
        return _type5_value(f, x)
    g = recenter(f, x.alpha)
    strict = x.alpha != 0
    if isinstance(x.radius, PPower):
        return r_gauss_norm(g, x.radius.q, strict)
    return mixed_norm(g, x.radius.r, strict)


def in_d(x: PointDescriptor) -> bool:
    """Whether ``|w(x)| <= 1``, i.e. ``x`` lies in ``Spa(C_p<w>, O<w>)``."""
    value = evaluate(TateSeries.w(x.prime), x)
    return cmp(value, GroupValue.one(value.ambient)) is not Ordering.GT


def support_contains(x: PointDescriptor, f: TateSeries) -> bool:
    return evaluate(f, x).is_zero


def is_analytic(x: PointDescriptor) -> bool:
    return not evaluate(TateSeries.constant(x.prime, x.prime), x).is_zero


def classify(x: PointDescriptor) -> PointReport:
    if isinstance(x, Classical):
        return PointReport(
            1, SupportKind.MAXIMAL, value_group(x), ResidueField.ALG_CLOSED_PRIME, True, in_d(x)
        )
    if isinstance(x, Type5):
        return PointReport(
            5, SupportKind.ZERO, value_group(x), ResidueField.ALG_CLOSED_PRIME, True, in_d(x)
        )
    if isinstance(x.radius, PPower):
        return PointReport(
            2, SupportKind.ZERO, value_group(x), ResidueField.RATIONAL_FUNCTION, False, in_d(x)
        )
    return PointReport(
        3, SupportKind.ZERO, value_group(x), ResidueField.ALG_CLOSED_PRIME, True, in_d(x)
    )


def _same_disc(prime: int, alpha: Fraction, beta: Fraction, q: Fraction) -> bool:
    return vp(alpha - beta, prime) >= q


def center_shift(prime: int, alpha: Fraction, beta: Fraction, q: Fraction) -> int:
    """Residue of ``(alpha - beta)/p^q``, the translation of ``t`` between centers."""
    diff = alpha - beta
    if diff == 0 or vp(diff, prime) > q:
        return 0
    return residue_unit(diff, prime)


def same_point(x: PointDescriptor, y: PointDescriptor) -> bool:
    """Whether two descriptors present the same valuation."""
    if x.prime != y.prime:
        return False
    if isinstance2(x, y, Classical):
        return x.alpha == y.alpha
    if isinstance2(x, y, Disc):
        if isinstance2(x.radius, y.radius, PPower):
            return x.radius == y.radius and _same_disc(x.prime, x.alpha, y.alpha, x.radius.q)
        if isinstance2(x.radius, y.radius, Plain):
            diff = x.alpha - y.alpha
            return x.radius == y.radius and (
                diff == 0 or Fraction(x.prime) ** (-vp(diff, x.prime)) <= x.radius.r
            )
        return False
    if isinstance2(x, y, Type5):
        if x.q != y.q or not _same_disc(x.prime, x.alpha, y.alpha, x.q):
            return False
        if x.lam.is_infinity or y.lam.is_infinity:
            return x.lam.is_infinity and y.lam.is_infinity
        shift = x.lam.value.ctx.from_int(center_shift(x.prime, x.alpha, y.alpha, x.q))
        return x.lam.shifted(shift) == y.lam
    return False
