# -*- coding: utf-8 -*-
"""
Boundedness predicates on Huber rings, rational localization, the continuity
criterion for points of ``Cont(C_p<w>)`` and the adic Nullstellensatz witness.

Norm-based answers are exact. Where no closed form for the norm of a
localization is known the predicates fall back on sampling catalog points of
the rational subset, which can only refute.
"""
import logging
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from adicdisc.config import get_config
from adicdisc.errors import (
    EmptySampleSet,
    EvaluationOfNonPolynomialAtClassicalPoint,
    NotOpenIdeal,
    PrimeMismatch,
    SampleNotIntegral,
    UncertainTail,
    UnknownOpenness,
    ZeroDenominator,
)
from adicdisc.ordgroup import (
    ConvexSubgroup,
    GroupDescriptor,
    GroupValue,
    Ordering,
    cmp,
    inv,
    is_cofinal,
)
from adicdisc.points import PointDescriptor, evaluate, gauss_point, in_d
from adicdisc.rings import (
    FormalPowerSeries,
    Localized,
    PolyRing,
    RingDescriptor,
    TateAlgebra,
    pair_of_definition,
)
from adicdisc.sampling import random_catalog_point, random_integral_polynomial
from adicdisc.tate import INFINITE_VALUATION, TateSeries, gauss_norm, r_gauss_norm, vp
from adicdisc.topology import (
    AnyPoint,
    Openness,
    RationalSubset,
    SpvPoint,
    evaluate_at,
    member,
    open_ideal,
)

logger = logging.getLogger(__name__)


class Ternary(Enum):
    TRUE = "True"
    FALSE = "False"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class BoundedVerdict:
    status: Ternary
    # the exact norm for decided answers, the offending value for sampled refutations
    certificate: Optional[GroupValue] = None
    witness: Optional[PointDescriptor] = None


def _check_prime(f: TateSeries, ring: RingDescriptor) -> None:
    if f.prime != ring.prime:
        raise PrimeMismatch(f"series over p={f.prime} in a ring over p={ring.prime}")


# -----------------------------------------------------------------------------
# Localization
# -----------------------------------------------------------------------------


def _monomial_shape(g: TateSeries) -> Optional[Tuple[Fraction, int]]:
    """``(c, j)`` when ``g = c w^j`` exactly."""
    if not g.is_polynomial or g.is_zero:
        return None
    support = [i for i, c in enumerate(g.coeffs) if c]
    if len(support) != 1:
        return None
    j = support[0]
    return g.coeffs[j], j


def _localized_norm(
    base: RingDescriptor, numerators: Sequence[TateSeries], s: TateSeries
) -> Optional[Fraction]:
    """``q`` such that the localization carries the norm ``|.|_{p^{-q}}``, if known.

    This is the case over Tate or polynomial roots when ``s`` is a scalar and
    every numerator is a monomial: then ``U(c w^j / s)`` is the disc
    ``|w| <= p^{-(vp(s) - vp(c))/j}``.
    """
    if isinstance(base, (TateAlgebra, PolyRing)):
        q = Fraction(0)
    elif isinstance(base, Localized) and base.norm_q is not None:
        q = base.norm_q
    else:
        return None
    if not s.is_polynomial or s.degree != 0:
        return None
    m = vp(s.coeffs[0], s.prime)
    for g in numerators:
        shape = _monomial_shape(g)
        if shape is None:
            return None
        c, j = shape
        if j == 0:
            if vp(c, s.prime) < m:
                # |c| > |s| cuts out the empty set
                return None
            continue
        q = max(q, Fraction(m - vp(c, s.prime), j))
    return q


def localize(
    ring: RingDescriptor, numerators: Sequence[TateSeries], s: TateSeries
) -> Localized:
    """The rational localization ``A(g_1, ..., g_r / s)``."""
    if s.is_zero:
        raise ZeroDenominator("the denominator of a rational localization is 0")
    status = open_ideal(list(numerators) + [s], ring)
    if status is Openness.NOT_OPEN:
        raise NotOpenIdeal("the numerators and the denominator do not generate an open ideal")
    if status is Openness.UNKNOWN:
        raise UnknownOpenness("could not decide whether the generated ideal is open")
    out = Localized(ring, tuple(numerators), s, _localized_norm(ring, numerators, s))
    if logger.isEnabledFor(logging.DEBUG):
        ring_of_definition, ideal = pair_of_definition(out)
        logger.debug(
            "localized to A_0' = %s, I' = %s, norm q = %s", ring_of_definition, ideal, out.norm_q
        )
    return out


# -----------------------------------------------------------------------------
# Power-bounded and topologically nilpotent elements
# -----------------------------------------------------------------------------


def _exact_norm(f: TateSeries, ring: RingDescriptor) -> Optional[GroupValue]:
    if isinstance(ring, (TateAlgebra, PolyRing)):
        return gauss_norm(f)
    if isinstance(ring, Localized) and ring.norm_q is not None:
        return r_gauss_norm(f, ring.norm_q)
    return None


def _in_subset(x: PointDescriptor, ring: RingDescriptor) -> bool:
    while isinstance(ring, Localized):
        if not member(x, RationalSubset(ring.numerators, ring.denominator)):
            return False
        ring = ring.base
    return True


def _sampled_violation(
    f: TateSeries, ring: Localized, strict: bool
) -> Optional[Tuple[PointDescriptor, GroupValue]]:
    """A catalog point of the rational subset where ``|f(x)|`` exceeds the bound."""
    config = get_config()
    rng = random.Random(config.seed)
    p = f.prime
    for _ in range(config.sampling_trials):
        x = random_catalog_point(rng, p, config.residue_degree)
        if not in_d(x) or not _in_subset(x, ring):
            continue
        try:
            value = evaluate(f, x)
        except EvaluationOfNonPolynomialAtClassicalPoint:
            continue
        order = cmp(value, GroupValue.one(value.ambient))
        if order is Ordering.GT or (strict and order is Ordering.EQ):
            logger.info("|f(x)| = %s at %s", value, x)
            return x, value
    return None


def _power_series_verdict(f: TateSeries, strict: bool) -> BoundedVerdict:
    p = f.prime
    coeff_min = min((vp(c, p) for c in f.coeffs if c), default=INFINITE_VALUATION)
    bound = min(coeff_min, f.tail_vp)
    if bound == INFINITE_VALUATION:
        certificate = GroupValue.zero(GroupDescriptor.pq(p))
    else:
        certificate = GroupValue.pexp(p, -bound)
    if coeff_min < 0:
        return BoundedVerdict(Ternary.FALSE, certificate)
    if f.tail_vp < 0:
        raise UncertainTail(f"{f} is only known modulo p^{f.tail_vp}")
    if not strict:
        return BoundedVerdict(Ternary.TRUE, certificate)
    # (p, w) is the ideal of topologically nilpotent elements of Z_p[[w]]
    if f.coeffs:
        nilpotent = vp(f.coeffs[0], p) >= 1
        return BoundedVerdict(Ternary.TRUE if nilpotent else Ternary.FALSE, certificate)
    if f.tail_vp >= 1:
        return BoundedVerdict(Ternary.TRUE, certificate)
    raise UncertainTail(f"the constant term of {f} is only known modulo p^{f.tail_vp}")


def _bounded(f: TateSeries, ring: RingDescriptor, strict: bool) -> BoundedVerdict:
    _check_prime(f, ring)
    if isinstance(ring, FormalPowerSeries):
        return _power_series_verdict(f, strict)
    norm = _exact_norm(f, ring)
    if norm is not None:
        order = cmp(norm, GroupValue.one(norm.ambient))
        holds = order is Ordering.LT if strict else order is not Ordering.GT
        return BoundedVerdict(Ternary.TRUE if holds else Ternary.FALSE, norm)
    violation = _sampled_violation(f, ring, strict)
    if violation is None:
        return BoundedVerdict(Ternary.UNKNOWN)
    x, value = violation
    return BoundedVerdict(Ternary.FALSE, value, x)


def is_power_bounded(f: TateSeries, ring: RingDescriptor) -> BoundedVerdict:
    return _bounded(f, ring, strict=False)


def is_topologically_nilpotent(f: TateSeries, ring: RingDescriptor) -> BoundedVerdict:
    return _bounded(f, ring, strict=True)


# -----------------------------------------------------------------------------
# Continuity
# -----------------------------------------------------------------------------


class ContinuityVerdict(Enum):
    CONTINUOUS = "Continuous"
    NOT_CONTINUOUS = "NotContinuous"
    SAMPLED_ONLY = "SampledOnly"


@dataclass(frozen=True)
class ContinuityReport:
    cofinal: bool
    bound_holds: bool
    verdict: ContinuityVerdict
    analytic: bool = True


def default_sample_set(p: int, count: int = 50, seed: Optional[int] = None) -> List[TateSeries]:
    rng = random.Random(get_config().seed if seed is None else seed)
    return [random_integral_polynomial(rng, p) for _ in range(count)]


def _structural_samples(p: int) -> List[TateSeries]:
    extras = [TateSeries.w(p), TateSeries.constant(p, 1), TateSeries.constant(p, p)]
    extras += [TateSeries.constant(p, u) for u in range(2, min(p, 5))]
    return extras


def check_continuity(x: AnyPoint, sample_set: Sequence[TateSeries]) -> ContinuityReport:
    """``|p(x)|`` cofinal and ``|f(x)| < |p(x)|^{-1}`` on the samples."""
    if not sample_set:
        raise EmptySampleSet("continuity needs at least one sample")
    p = x.prime
    for f in sample_set:
        if f.prime != p:
            raise PrimeMismatch(f"sample over p={f.prime} at a point over p={p}")
        if cmp(gauss_norm(f), GroupValue.one(GroupDescriptor.pq(p))) is Ordering.GT:
            raise SampleNotIntegral(f"{f} does not lie in O<w>")
    p_value = evaluate_at(TateSeries.constant(p, p), x)
    if p_value.is_zero:
        # the support contains p: {|p| < 1} is not open
        return ContinuityReport(False, False, ContinuityVerdict.NOT_CONTINUOUS, analytic=False)
    cofinal = is_cofinal(p_value, p_value.ambient)
    bound = inv(p_value)
    bound_holds = all(
        cmp(evaluate_at(f, x), bound) is Ordering.LT
        for f in list(sample_set) + _structural_samples(p)
    )
    if not (cofinal and bound_holds):
        verdict = ContinuityVerdict.NOT_CONTINUOUS
    elif isinstance(x, SpvPoint) and x.truncation is not ConvexSubgroup.FULL:
        verdict = ContinuityVerdict.SAMPLED_ONLY
    else:
        verdict = ContinuityVerdict.CONTINUOUS
    return ContinuityReport(cofinal, bound_holds, verdict)


# -----------------------------------------------------------------------------
# Nullstellensatz
# -----------------------------------------------------------------------------


def nullstellensatz_witness(f: TateSeries) -> Optional[Tuple[PointDescriptor, GroupValue]]:
    """A point of ``D`` with ``|f(x)| > 1``, or ``None`` when ``f`` lies in ``O<w>``.

    The Gauss norm is the supremum over ``D``, so the Gauss point is a witness
    whenever one exists.
    """
    norm = gauss_norm(f)
    if cmp(norm, GroupValue.one(norm.ambient)) is Ordering.GT:
        return gauss_point(f.prime), norm
    return None
