# -*- coding: utf-8 -*-
"""
Finitely presented Huber rings.

Each descriptor records its pair of definition ``(A_0, I)`` symbolically.
``Localized`` descriptors are built by ``huber.localize``, which checks that
the numerators and the denominator generate an open ideal.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from adicdisc.tate import TateSeries, render_series
from adicdisc.utils import check_prime


@dataclass(frozen=True)
class TateAlgebra:
    """``C_p<w>`` with the Gauss-norm topology; pair of definition ``(O<w>, (p))``."""

    prime: int

    def __post_init__(self) -> None:
        check_prime(self.prime)


@dataclass(frozen=True)
class PolyRing:
    """``Q[w]`` inside ``C_p[w]`` with the Gauss-norm topology."""

    prime: int

    def __post_init__(self) -> None:
        check_prime(self.prime)


@dataclass(frozen=True)
class FormalPowerSeries:
    """``Z_p[[w]]`` with the ``(p, w)``-adic topology."""

    prime: int

    def __post_init__(self) -> None:
        check_prime(self.prime)


@dataclass(frozen=True)
class Localized:
    base: "RingDescriptor"
    numerators: Tuple[TateSeries, ...]
    denominator: TateSeries
    # r = p^{-norm_q} when the topology is given by the norm |.|_r
    norm_q: Optional[Fraction] = field(default=None, compare=False)

    @property
    def prime(self) -> int:
        return self.base.prime


RingDescriptor = Union[TateAlgebra, PolyRing, FormalPowerSeries, Localized]


def root_ring(ring: RingDescriptor) -> RingDescriptor:
    while isinstance(ring, Localized):
        ring = ring.base
    return ring


def denominators(ring: RingDescriptor) -> List[TateSeries]:
    out = []
    while isinstance(ring, Localized):
        out.append(ring.denominator)
        ring = ring.base
    return out


def is_tate(ring: RingDescriptor) -> bool:
    return not isinstance(root_ring(ring), FormalPowerSeries)


def pair_of_definition(ring: RingDescriptor) -> Tuple[str, str]:
    """Symbolic generators of a ring of definition and of an ideal of definition."""
    if isinstance(ring, TateAlgebra):
        return "O_Cp<w>", "(p)"
    if isinstance(ring, PolyRing):
        return "Z_(p)[w]", "(p)"
    if isinstance(ring, FormalPowerSeries):
        return "Z_p[[w]]", "(p, w)"
    base_ring, base_ideal = pair_of_definition(ring.base)
    s = render_series(ring.denominator)
    fractions = ", ".join(f"({render_series(g)})/({s})" for g in ring.numerators)
    ring_of_definition = f"{base_ring}[{fractions}]"
    return ring_of_definition, f"{base_ideal}{ring_of_definition}"
