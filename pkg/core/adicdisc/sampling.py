# -*- coding: utf-8 -*-
"""Seeded generators of integral polynomials and catalog points."""
import random
from fractions import Fraction
from typing import List, Optional

from adicdisc.config import get_config
from adicdisc.ffield import FqContext
from adicdisc.points import Classical, Disc, PointDescriptor, PPower, Type5
from adicdisc.tate import TateSeries


def random_unit(rng: random.Random, p: int) -> Fraction:
    """A random rational ``u/v`` with ``|u/v|_p = 1``, signed."""
    num = rng.randrange(1, p * p)
    while num % p == 0:
        num = rng.randrange(1, p * p)
    den = rng.randrange(1, p + 1)
    while den % p == 0:
        den = rng.randrange(1, p + 1)
    return Fraction(rng.choice((-1, 1)) * num, den)


def random_scalar(rng: random.Random, p: int, min_vp: int, max_vp: int) -> Fraction:
    return random_unit(rng, p) * Fraction(p) ** rng.randint(min_vp, max_vp)


def random_integral_polynomial(
    rng: random.Random,
    p: int,
    max_degree: Optional[int] = None,
    max_valuation: Optional[int] = None,
    allow_zero_coefficients: bool = True,
) -> TateSeries:
    """A non-zero polynomial with coefficient valuations in ``[0, max_valuation]``."""
    config = get_config()
    max_degree = config.sample_degree if max_degree is None else max_degree
    max_valuation = config.sample_max_valuation if max_valuation is None else max_valuation
    degree = rng.randint(0, max_degree)
    coeffs: List[Fraction] = []
    for _ in range(degree + 1):
        if allow_zero_coefficients and rng.randrange(max_valuation + 2) == 0:
            coeffs.append(Fraction(0))
        else:
            coeffs.append(random_scalar(rng, p, 0, max_valuation))
    if not any(coeffs):
        coeffs[0] = Fraction(1)
    return TateSeries.polynomial(p, coeffs)


def random_polynomial(
    rng: random.Random, p: int, max_degree: int, min_vp: int, max_vp: int
) -> TateSeries:
    degree = rng.randint(0, max_degree)
    coeffs = [random_scalar(rng, p, min_vp, max_vp) for _ in range(degree + 1)]
    return TateSeries.polynomial(p, coeffs)


def random_center(rng: random.Random, p: int, max_vp: int = 4) -> Fraction:
    if rng.randrange(6) == 0:
        return Fraction(0)
    return random_scalar(rng, p, 0, max_vp)


def random_catalog_point(rng: random.Random, p: int, k: int = 1) -> PointDescriptor:
    """A random Type 1, 2 or 5 point of the closed unit disc."""
    kind = rng.randrange(3)
    alpha = random_center(rng, p)
    if kind == 0:
        return Classical(p, alpha)
    q = Fraction(rng.randint(0, 6), rng.randint(1, 3))
    if kind == 1:
        return Disc(p, alpha, PPower(q))
    lambdas = list(FqContext.default(p, k).p1_points(include_infinity=q > 0))
    return Type5(p, alpha, q, rng.choice(lambdas))
