# -*- coding: utf-8 -*-
"""
Exact scalars and truncated series of the Tate algebra ``C_p<w>``.

Scalars are rationals, viewed inside ``Q_p``; their valuations and unit
residues are exact. A ``TateSeries`` stores the exact coefficients
``a_0 .. a_d`` plus a tail certificate ``tail_vp = T``: every omitted
coefficient ``a_i`` (``i > d``) has ``vp(a_i) >= T``. A polynomial has
``T = inf``. Every norm below either returns an exact value or raises
``UncertainTail``; nothing is silently approximated.

The explicit part is a ``sympy.Poly`` over ``QQ``; only the tail bookkeeping
is done here.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from sympy import Poly, Rational, Symbol, multiplicity
from sympy.polys.domains import QQ

from adicdisc.errors import (
    CenterOutsideDisc,
    NotPolynomial,
    PrimeMismatch,
    UncertainTail,
    ZeroInput,
    ZeroPolynomial,
    ZeroSeries,
)
from adicdisc.ffield import FqContext, FqPoly
from adicdisc.ordgroup import GroupDescriptor, GroupValue, group_max
from adicdisc.utils import check_prime, render_fraction, to_fraction

logger = logging.getLogger(__name__)


PadicRational = Fraction
Valuation = Union[int, float]

INFINITE_VALUATION: float = math.inf
INFINITE_SLOPE: float = math.inf


def vp(x: Union[int, Fraction], p: int) -> Valuation:
    x = Fraction(x)
    if x == 0:
        return INFINITE_VALUATION
    return int(multiplicity(p, abs(x.numerator))) - int(multiplicity(p, x.denominator))


def residue_unit(x: Union[int, Fraction], p: int) -> int:
    """Class of ``x * p^{-vp(x)}`` in ``F_p``."""
    x = Fraction(x)
    if x == 0:
        raise ZeroInput("0 has no unit part")
    unit = x / Fraction(p) ** vp(x, p)
    return unit.numerator * pow(unit.denominator, -1, p) % p


_W = Symbol("w")


def to_sympy(coeffs: Sequence[Fraction]) -> Poly:
    return Poly(
        [Rational(c.numerator, c.denominator) for c in reversed(coeffs)] or [0], _W, domain=QQ
    )


def from_sympy(poly: Poly) -> Tuple[Fraction, ...]:
    return tuple(Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs()))


@dataclass(frozen=True)
class TateSeries:
    prime: int
    coeffs: Tuple[Fraction, ...] = ()
    tail_vp: Valuation = INFINITE_VALUATION

    def __post_init__(self) -> None:
        check_prime(self.prime)
        coeffs = [to_fraction(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))
        if self.tail_vp != INFINITE_VALUATION:
            if isinstance(self.tail_vp, float) and not self.tail_vp.is_integer():
                raise ValueError(f"tail bound must be an integer, got {self.tail_vp}")
            object.__setattr__(self, "tail_vp", int(self.tail_vp))

    @classmethod
    def polynomial(cls, prime: int, coeffs: Sequence[Union[int, str, Fraction]]) -> "TateSeries":
        return cls(prime, tuple(to_fraction(c) for c in coeffs))

    @classmethod
    def constant(cls, prime: int, c: Union[int, str, Fraction]) -> "TateSeries":
        return cls(prime, (to_fraction(c),))

    @classmethod
    def monomial(cls, prime: int, c: Union[int, str, Fraction], degree: int) -> "TateSeries":
        return cls(prime, (Fraction(0),) * degree + (to_fraction(c),))

    @classmethod
    def w(cls, prime: int) -> "TateSeries":
        return cls.monomial(prime, 1, 1)

    @classmethod
    def zero(cls, prime: int) -> "TateSeries":
        return cls(prime)

    @property
    def is_polynomial(self) -> bool:
        return self.tail_vp == INFINITE_VALUATION

    @property
    def is_zero(self) -> bool:
        return self.is_polynomial and not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def min_valuation(self) -> Valuation:
        return min((vp(c, self.prime) for c in self.coeffs if c), default=INFINITE_VALUATION)

    def _lower_valuation(self) -> Valuation:
        # lower bound for vp of every coefficient, explicit or omitted
        return min(self.min_valuation(), self.tail_vp)

    def _first_index(self) -> Valuation:
        # smallest index whose coefficient may be non-zero
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return INFINITE_VALUATION if self.is_polynomial else len(self.coeffs)

    def _check(self, other: "TateSeries") -> None:
        if self.prime != other.prime:
            raise PrimeMismatch(f"series over p={self.prime} and p={other.prime}")

    def to_poly(self) -> Poly:
        """The explicit part as a ``Poly`` in ``w`` over ``QQ``."""
        return to_sympy(self.coeffs)

    def _with_cutoff(self, explicit: Poly, cutoff: Valuation, tail: Valuation) -> "TateSeries":
        # coefficients past ``cutoff`` are not exact; fold them into the tail
        coeffs = from_sympy(explicit)
        if cutoff != INFINITE_VALUATION:
            kept = int(cutoff) + 1
            tail = min([tail] + [vp(c, self.prime) for c in coeffs[kept:] if c])
            coeffs = coeffs[:kept]
        return TateSeries(self.prime, coeffs, tail)

    def __add__(self, other: "TateSeries") -> "TateSeries":
        self._check(other)
        inexact = [f.degree for f in (self, other) if not f.is_polynomial]
        cutoff = min(inexact, default=INFINITE_VALUATION)
        tail = min(self.tail_vp, other.tail_vp)
        return self._with_cutoff(self.to_poly() + other.to_poly(), cutoff, tail)

    def __neg__(self) -> "TateSeries":
        return TateSeries(self.prime, tuple(-c for c in self.coeffs), self.tail_vp)

    def __sub__(self, other: "TateSeries") -> "TateSeries":
        return self + (-other)

    def __mul__(self, other: "TateSeries") -> "TateSeries":
        self._check(other)
        if self.is_zero or other.is_zero:
            return TateSeries.zero(self.prime)
        # an omitted a_i (i > d) first meets the other factor at index d + 1 + m
        cutoff: Valuation = INFINITE_VALUATION
        tail: Valuation = INFINITE_VALUATION
        for f, g in ((self, other), (other, self)):
            if not f.is_polynomial:
                cutoff = min(cutoff, f.degree + g._first_index())
                tail = min(tail, f.tail_vp + g._lower_valuation())
        return self._with_cutoff(self.to_poly().mul(other.to_poly()), cutoff, tail)

    def scale(self, c: Union[int, Fraction]) -> "TateSeries":
        return self * TateSeries.constant(self.prime, Fraction(c))

    def __pow__(self, n: int) -> "TateSeries":
        if n < 0:
            raise ValueError("negative powers are not series")
        result = TateSeries.constant(self.prime, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, alpha: Union[int, Fraction]) -> Fraction:
        """Exact value of the stored polynomial at ``alpha``."""
        alpha = Fraction(alpha)
        value = Rational(self.to_poly().eval(Rational(alpha.numerator, alpha.denominator)))
        return Fraction(int(value.p), int(value.q))

    def __str__(self) -> str:
        return render_series(self)


def render_series(f: TateSeries) -> str:
    terms = []
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        monomial = "" if i == 0 else ("w" if i == 1 else f"w^{i}")
        coefficient = render_fraction(c)
        if monomial and c == 1:
            terms.append(monomial)
        elif monomial:
            terms.append(f"{coefficient}*{monomial}")
        else:
            terms.append(coefficient)
    text = " + ".join(terms) if terms else "0"
    if not f.is_polynomial:
        text += f" + O(p^{f.tail_vp})"
    return text


def _weighted_minimum(f: TateSeries, q: Fraction) -> Tuple[Valuation, List[int]]:
    best: Valuation = INFINITE_VALUATION
    indices: List[int] = []
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        value = vp(c, f.prime) + q * i
        if value < best:
            best, indices = value, [i]
        elif value == best:
            indices.append(i)
    return best, indices


def _certified_minimum(
    f: TateSeries, q: Union[int, Fraction], strict: bool = False
) -> Tuple[Valuation, List[int]]:
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"radius exponent must be non-negative, got {q}")
    best, indices = _weighted_minimum(f, q)
    if f.is_polynomial:
        return best, indices
    # omitted terms have weighted valuation >= tail_vp + q*i >= tail_vp
    if best > f.tail_vp or (strict and best == f.tail_vp):
        raise UncertainTail(
            f"explicit terms reach valuation {best} but the tail is only known "
            f"modulo p^{f.tail_vp}"
        )
    return best, indices


def gauss_norm(f: TateSeries) -> GroupValue:
    return r_gauss_norm(f, 0)


def r_gauss_norm(f: TateSeries, q: Union[int, Fraction], strict: bool = False) -> GroupValue:
    """``|f|_r = max_i |a_i| r^i`` for ``r = p^{-q}``.

    The minimum may sit at the tail bound itself. With ``strict`` it must lie
    below it, as needed when every coefficient is only known modulo ``p^T``.
    """
    best, _ = _certified_minimum(f, q, strict)
    if best == INFINITE_VALUATION:
        return GroupValue.zero(GroupDescriptor.pq(f.prime))
    return GroupValue.pexp(f.prime, -Fraction(best))


def mixed_norm(f: TateSeries, r: Fraction, strict: bool = False) -> GroupValue:
    """``max_i |a_i| r^i`` for a radius ``r`` outside ``p^Q``, valued in ``p^Q r^Z``."""
    ambient = GroupDescriptor.pqrz(f.prime, r)
    terms = [
        GroupValue(ambient, -Fraction(vp(c, f.prime)), i) for i, c in enumerate(f.coeffs) if c
    ]
    if not terms:
        if f.is_polynomial:
            return GroupValue.zero(ambient)
        raise UncertainTail(f"only the tail O(p^{f.tail_vp}) is known")
    best = group_max(terms)
    if f.is_polynomial:
        return best
    if strict:
        certified = best > GroupValue(ambient, -Fraction(f.tail_vp), 0)
    else:
        # omitted terms are at most p^{-T} r^{d+1}
        certified = best >= GroupValue(ambient, -Fraction(f.tail_vp), f.degree + 1)
    if not certified:
        raise UncertainTail(f"the tail O(p^{f.tail_vp}) may dominate {best}")
    return best


def recenter(f: TateSeries, alpha: Union[int, Fraction]) -> TateSeries:
    """Coefficients of ``f`` in powers of ``w - alpha``.

    The tail bound is kept. For ``alpha != 0`` the omitted terms of ``f`` also
    move every explicit coefficient by an element of ``p^T Z_p``, so norms of
    the result are taken with ``strict=True``.
    """
    alpha = Fraction(alpha)
    if vp(alpha, f.prime) < 0:
        raise CenterOutsideDisc(f"|{render_fraction(alpha)}|_p > 1")
    shifted = f.to_poly().shift(Rational(alpha.numerator, alpha.denominator))
    return TateSeries(f.prime, from_sympy(shifted), f.tail_vp)


def reduce_at_max(f: TateSeries, q: Union[int, Fraction]) -> FqPoly:
    """Reduction in ``F_p[t]`` of ``f`` normalised at ``r = p^{-q}``.

    Only indices attaining ``min_i vp(a_i) + q*i`` survive, each with the unit
    residue of its coefficient; the scaling element of that valuation is taken
    to have residue 1. The tail must lie strictly above the minimum.
    """
    best, indices = _certified_minimum(f, q, strict=True)
    if best == INFINITE_VALUATION:
        raise ZeroSeries("the zero series has no reduction")
    ctx = FqContext.default(f.prime, 1)
    residues = [0] * (indices[-1] + 1)
    for i in indices:
        residues[i] = residue_unit(f.coeffs[i], f.prime)
    return FqPoly.from_ints(ctx, residues)


def _check_polynomial(f: TateSeries) -> None:
    if not f.is_polynomial:
        raise NotPolynomial(f"{f} is not a polynomial")
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no Newton polygon")


def newton_polygon(f: TateSeries) -> List[Tuple[Union[Fraction, float], int]]:
    """Slopes of the lower convex hull of ``(i, vp(a_i))`` with their lengths.

    A factor ``w^m`` is split off first and reported as ``(INFINITE_SLOPE, m)``.
    A root of ``f`` has valuation ``-slope``.
    """
    _check_polynomial(f)
    points = [(i, vp(c, f.prime)) for i, c in enumerate(f.coeffs) if c]
    sides: List[Tuple[Union[Fraction, float], int]] = []
    if points[0][0] > 0:
        sides.append((INFINITE_SLOPE, points[0][0]))
    hull: List[Tuple[int, Valuation]] = []
    for point in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] unless it lies strictly below the chord to point
            if (y2 - y1) * (point[0] - x1) >= (point[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(point)
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        sides.append((Fraction(y2 - y1, x2 - x1), x2 - x1))
    return sides


def root_valuations(f: TateSeries) -> List[Tuple[Valuation, int]]:
    """Valuations of the roots of ``f`` in ``C_p`` with multiplicities."""
    return [
        (INFINITE_VALUATION if slope == INFINITE_SLOPE else -slope, length)
        for slope, length in newton_polygon(f)
    ]


def weierstrass_degree(f: TateSeries) -> int:
    """Largest index at which the Gauss norm of ``f`` is attained."""
    best, indices = _certified_minimum(f, 0, strict=True)
    if best == INFINITE_VALUATION:
        raise ZeroSeries("the zero series has no Weierstrass degree")
    return indices[-1]
