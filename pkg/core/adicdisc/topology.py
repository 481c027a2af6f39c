# -*- coding: utf-8 -*-
"""
Rational subsets of ``Cont(C_p<w>)``, the open-ideal condition, and the
specialization relations among catalog points.
"""
import logging
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from typing import List, Optional, Sequence, Tuple, Union

from sympy import Poly, Rational

from adicdisc.config import get_config
from adicdisc.errors import (
    AmbientMismatch,
    Gamma1NotContained,
    NonIntegralGenerator,
    NonPolynomialGenerator,
    PointNotInD,
    PrimeMismatch,
)
from adicdisc.ffield import FqContext
from adicdisc.ordgroup import (
    ConvexSubgroup,
    GroupValue,
    Ordering,
    cmp,
    contains,
    is_convex_in,
    truncate,
)
from adicdisc.points import (
    Classical,
    Disc,
    PointDescriptor,
    PPower,
    Type5,
    evaluate,
    in_d,
    same_point,
    value_group,
)
from adicdisc.rings import (
    FormalPowerSeries,
    Localized,
    PolyRing,
    RingDescriptor,
    TateAlgebra,
    denominators,
    root_ring,
)
from adicdisc.sampling import random_integral_polynomial
from adicdisc.tate import TateSeries, from_sympy, root_valuations, vp

logger = logging.getLogger(__name__)


class Openness(Enum):
    OPEN = "Open"
    NOT_OPEN = "NotOpen"
    UNKNOWN = "Unknown"
    UNCHECKED = "Unchecked"


@dataclass(frozen=True)
class RationalSubset:
    """``U(g_1, ..., g_r / s) = {x : |g_i(x)| <= |s(x)| != 0}``.

    Membership makes sense for any data; only ``validation == OPEN`` makes the
    set a rational subset.
    """

    numerators: Tuple[TateSeries, ...]
    denominator: TateSeries
    validation: Openness = Openness.UNCHECKED

    @classmethod
    def validated(
        cls, numerators: Sequence[TateSeries], denominator: TateSeries, ring: RingDescriptor
    ) -> "RationalSubset":
        status = open_ideal(list(numerators) + [denominator], ring)
        return cls(tuple(numerators), denominator, status)

    @property
    def is_rational(self) -> bool:
        return self.validation is Openness.OPEN


@dataclass(frozen=True)
class SpvPoint:
    """The valuation ``f -> truncate(|f(base)|, truncation)``."""

    base: PointDescriptor
    truncation: ConvexSubgroup = ConvexSubgroup.FULL

    def __post_init__(self) -> None:
        if not is_convex_in(self.truncation, value_group(self.base)):
            raise AmbientMismatch(
                f"{self.truncation.value} is not convex in {value_group(self.base)}"
            )

    @property
    def prime(self) -> int:
        return self.base.prime


AnyPoint = Union[Classical, Disc, Type5, SpvPoint]


def evaluate_at(f: TateSeries, x: AnyPoint) -> GroupValue:
    if isinstance(x, SpvPoint):
        return truncate(evaluate(f, x.base), x.truncation)
    return evaluate(f, x)


def member(x: AnyPoint, subset: RationalSubset) -> bool:
    s_value = evaluate_at(subset.denominator, x)
    if s_value.is_zero:
        return False
    return all(
        cmp(evaluate_at(g, x), s_value) is not Ordering.GT for g in subset.numerators
    )


def fake_cover_members(x: AnyPoint, n_max: int) -> List[int]:
    """The ``n <= n_max`` with ``x`` in ``U(w^n / p)``."""
    p = x.prime
    s = TateSeries.constant(p, p)
    w = TateSeries.w(p)
    return [n for n in range(1, n_max + 1) if member(x, RationalSubset((w**n,), s))]


# -----------------------------------------------------------------------------
# Open ideals
# -----------------------------------------------------------------------------


def _from_sympy(poly: Poly, prime: int) -> TateSeries:
    return TateSeries(prime, from_sympy(poly))


def polynomial_gcd(gens: Sequence[TateSeries]) -> TateSeries:
    """Monic gcd over ``Q[w]``; the gcd of nothing but zeros is ``0``."""
    prime = gens[0].prime
    d = reduce(lambda a, b: a.gcd(b), (g.to_poly() for g in gens))
    return _from_sympy(d if d.is_zero else d.monic(), prime)


def _strip_factors_of(d: TateSeries, s: TateSeries) -> TateSeries:
    """Remove from ``d`` every irreducible factor it shares with ``s``."""
    dp, sp = d.to_poly(), s.to_poly()
    if sp.is_zero:
        return d
    while True:
        common = dp.gcd(sp)
        if common.degree() <= 0:
            return _from_sympy(dp, d.prime)
        dp = dp.exquo(common)


def _has_root_in_closed_disc(d: TateSeries) -> bool:
    return any(valuation >= 0 for valuation, _ in root_valuations(d))


def _has_root_in_open_disc(d: TateSeries) -> bool:
    return any(valuation > 0 for valuation, _ in root_valuations(d))


def _check_generators(gens: Sequence[TateSeries], prime: int) -> List[TateSeries]:
    for g in gens:
        if g.prime != prime:
            raise PrimeMismatch(f"generator over p={g.prime} in a ring over p={prime}")
        if not g.is_polynomial:
            raise NonPolynomialGenerator(f"{g} is not a polynomial")
    return [g for g in gens if not g.is_zero]


def _first_unit_index(f: TateSeries) -> Optional[int]:
    for i, c in enumerate(f.coeffs):
        if c and vp(c, f.prime) == 0:
            return i
    return None


def openness_certificate(gens: Sequence[TateSeries], prime: int) -> Optional[int]:
    """Some ``n`` with ``(p, w)^n`` inside the ideal of ``Z_p[[w]]`` spanned by ``gens``.

    ``p^a`` is found as a generator or as a resultant of two generators; a
    generator with first unit coefficient at index ``b`` gives ``w^{ab}`` (or
    ``w^b`` when it is a monomial) modulo ``p^a``. ``None`` if no resultant helps.
    """
    gens = [g for g in gens if not g.is_zero]
    if any(_first_unit_index(g) == 0 for g in gens):
        return 0
    scalars = [g.coeffs[0] for g in gens if g.degree == 0]
    polys = [g.to_poly() for g in gens if g.degree > 0]
    for i, f in enumerate(polys):
        for g in polys[i + 1 :]:
            res = Rational(f.resultant(g))
            if res != 0:
                scalars.append(Fraction(int(res.p), int(res.q)))
    if not scalars:
        return None
    a = min(int(vp(c, prime)) for c in scalars)
    if a == 0:
        return 0
    best: Optional[int] = None
    for g in gens:
        b = _first_unit_index(g)
        if b is None:
            continue
        is_monomial = sum(1 for c in g.coeffs if c) == 1
        n = a + b - 1 if is_monomial else a * (b + 1) - 1
        best = n if best is None else min(best, n)
    return best


def _power_series_openness(gens: List[TateSeries], depth: int) -> Openness:
    for g in gens:
        if g.min_valuation() < 0:
            raise NonIntegralGenerator(f"{g} does not lie in Z_p[[w]]")
    if not gens:
        return Openness.NOT_OPEN
    if all(g.min_valuation() >= 1 for g in gens):
        logger.debug("all generators lie in (p)")
        return Openness.NOT_OPEN
    if _has_root_in_open_disc(polynomial_gcd(gens)):
        logger.debug("generators share a zero in the open unit disc")
        return Openness.NOT_OPEN
    n = openness_certificate(gens, gens[0].prime)
    if n is not None and n <= depth:
        logger.debug("(p, w)^%d lies in the ideal", n)
        return Openness.OPEN
    logger.debug("no certificate (p, w)^n with n <= %d", depth)
    return Openness.UNKNOWN


def _localized_openness(gens: List[TateSeries], ring: Localized) -> Openness:
    root = root_ring(ring)
    if isinstance(root, FormalPowerSeries):
        return Openness.UNKNOWN
    d = polynomial_gcd(gens)
    for s in denominators(ring):
        d = _strip_factors_of(d, s)
    if d.degree == 0:
        return Openness.OPEN
    if isinstance(root, PolyRing):
        # same rule as the unlocalized Q[w] case in open_ideal
        return Openness.NOT_OPEN
    if not _has_root_in_closed_disc(d):
        return Openness.OPEN
    # whether the remaining zeros of d avoid the rational subset is not decided
    return Openness.UNKNOWN


def open_ideal(
    gens: Sequence[TateSeries], ring: RingDescriptor, depth: Optional[int] = None
) -> Openness:
    """Whether ``gens`` generate an open ideal of ``ring``."""
    depth = get_config().openness_search_depth if depth is None else depth
    gens = _check_generators(gens, ring.prime)
    if isinstance(ring, FormalPowerSeries):
        return _power_series_openness(gens, depth)
    if not gens:
        return Openness.NOT_OPEN
    if isinstance(ring, Localized):
        return _localized_openness(gens, ring)
    # a Tate ring: open ideals are exactly the unit ideal
    d = polynomial_gcd(gens)
    if d.degree == 0:
        return Openness.OPEN
    if isinstance(ring, TateAlgebra) and not _has_root_in_closed_disc(d):
        return Openness.OPEN
    # Q[w] has only constant units: a gcd without zeros in D is still a non-unit
    return Openness.NOT_OPEN


# -----------------------------------------------------------------------------
# Specialization
# -----------------------------------------------------------------------------


def specializes(x: PointDescriptor, y: PointDescriptor) -> bool:
    """Whether ``y`` lies in the closure of ``x``."""
    if same_point(x, y):
        return True
    return (
        isinstance(x, Disc)
        and isinstance(x.radius, PPower)
        and isinstance(y, Type5)
        and x.prime == y.prime
        and y.q == x.radius.q
        and vp(x.alpha - y.alpha, x.prime) >= x.radius.q
    )


def closure_points(x: PointDescriptor, k: Optional[int] = None) -> List[PointDescriptor]:
    if not in_d(x):
        raise PointNotInD("closures are taken inside D")
    if not (isinstance(x, Disc) and isinstance(x.radius, PPower)):
        return [x]
    k = get_config().residue_degree if k is None else k
    q = x.radius.q
    ctx = FqContext.default(x.prime, k)
    # at the Gauss radius lambda = inf gives |w| > 1
    return [x] + [Type5(x.prime, x.alpha, q, lam) for lam in ctx.p1_points(include_infinity=q > 0)]


@dataclass(frozen=True)
class SpecializationReport:
    consistent: bool
    trials: int
    counterexample: Optional[Tuple[TateSeries, TateSeries]] = None


def sampling_specialization_check(
    x: AnyPoint, y: AnyPoint, trials: Optional[int] = None, seed: Optional[int] = None
) -> SpecializationReport:
    """Search for ``U(g/s)`` containing ``y`` but not ``x``."""
    config = get_config()
    trials = config.sampling_trials if trials is None else trials
    seed = config.seed if seed is None else seed
    if trials < 1:
        raise ValueError("at least one trial is required")
    rng = random.Random(seed)
    p = x.prime
    for trial in range(1, trials + 1):
        g = random_integral_polynomial(rng, p)
        s = random_integral_polynomial(rng, p)
        subset = RationalSubset((g,), s)
        if member(y, subset) and not member(x, subset):
            logger.info("U((%s)/(%s)) separates the points after %d trials", g, s, trial)
            return SpecializationReport(False, trial, (g, s))
    return SpecializationReport(True, trials)


def vertical_generization(y: PointDescriptor) -> PointDescriptor:
    if isinstance(y, Type5):
        return y.disc
    return y


@dataclass(frozen=True)
class HorizontalSpecialization:
    point: SpvPoint
    is_valuation: bool
    continuous: bool


def gamma1_generators(x: AnyPoint) -> List[GroupValue]:
    """Values ``>= 1`` among ``|p^{-1}|``, ``|w|`` and unit scalars at ``x``."""
    p = x.prime
    candidates = [TateSeries.constant(p, Fraction(1, p)), TateSeries.w(p)]
    candidates += [TateSeries.constant(p, u) for u in range(1, min(p, 5))]
    out = []
    for f in candidates:
        value = evaluate_at(f, x)
        if not value.is_zero and cmp(value, GroupValue.one(value.ambient)) is not Ordering.LT:
            out.append(value)
    return out


def horizontal_specialize(x: AnyPoint, delta: ConvexSubgroup) -> HorizontalSpecialization:
    from adicdisc.huber import ContinuityVerdict, check_continuity, default_sample_set

    base = x.base if isinstance(x, SpvPoint) else x
    current = x.truncation if isinstance(x, SpvPoint) else ConvexSubgroup.FULL
    if not is_convex_in(delta, value_group(base)):
        raise AmbientMismatch(f"{delta.value} is not convex in {value_group(base)}")
    for value in gamma1_generators(x):
        if not contains(delta, value):
            raise Gamma1NotContained(f"{value} >= 1 lies outside the {delta.value} subgroup")
    point = SpvPoint(base, current.meet(delta))
    report = check_continuity(point, default_sample_set(base.prime))
    return HorizontalSpecialization(
        point, True, report.verdict is not ContinuityVerdict.NOT_CONTINUOUS
    )
