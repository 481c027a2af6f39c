# -*- coding: utf-8 -*-
"""
Totally ordered abelian groups that occur as value groups of points of the
closed unit disc, together with the absorbing zero of ``Gamma u {0}``.

Three ambients are modelled:

- ``p^Q``: the positive reals ``p^e`` with ``e`` rational;
- ``p^Q r^Z``: products ``p^e r^n`` for a fixed rational ``0 < r < 1`` that
  is not an integer power of ``p``;
- ``p^Q x (1/2)^Z``: pairs ``(p^e, (1/2)^n)`` ordered first by the first
  coordinate, then by the second.

A fourth, trivial ambient is the codomain of the projection by the full
convex subgroup. Everything is exact: no logarithms and no floats.
"""
import logging
from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from functools import reduce
from typing import Iterable, Optional, Union

from adicdisc.errors import (
    AmbientMismatch,
    InvalidRadius,
    ZeroInGeneratorSet,
    ZeroInput,
)
from adicdisc.utils import check_prime, render_fraction

logger = logging.getLogger(__name__)


EPSILON = Fraction(1, 2)


class GroupKind(Enum):
    TRIVIAL = "1"
    PQ = "p^Q"
    PQRZ = "p^Q*r^Z"
    PQXHALFZ = "p^Q x (1/2)^Z"


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def is_integer_power_of(r: Fraction, p: int) -> bool:
    if r <= 0:
        return False
    num, den = r.numerator, r.denominator
    if num != 1 and den != 1:
        return False
    other = den if num == 1 else num
    while other % p == 0:
        other //= p
    return other == 1


@dataclass(frozen=True)
class GroupDescriptor:
    kind: GroupKind
    prime: int
    r: Optional[Fraction] = None

    def __post_init__(self) -> None:
        check_prime(self.prime)
        if self.kind is GroupKind.PQRZ:
            if self.r is None or not 0 < self.r < 1:
                raise InvalidRadius(f"auxiliary base must lie in (0, 1), got {self.r}")
            if is_integer_power_of(self.r, self.prime):
                raise InvalidRadius(
                    f"auxiliary base {self.r} is an integer power of p={self.prime}"
                )
        elif self.r is not None:
            raise InvalidRadius(f"{self.kind.value} carries no auxiliary base")

    @classmethod
    def trivial(cls, prime: int) -> "GroupDescriptor":
        return cls(GroupKind.TRIVIAL, prime)

    @classmethod
    def pq(cls, prime: int) -> "GroupDescriptor":
        return cls(GroupKind.PQ, prime)

    @classmethod
    def pqrz(cls, prime: int, r: Fraction) -> "GroupDescriptor":
        return cls(GroupKind.PQRZ, prime, Fraction(r))

    @classmethod
    def pqxhalfz(cls, prime: int) -> "GroupDescriptor":
        return cls(GroupKind.PQXHALFZ, prime)

    @property
    def is_archimedean(self) -> bool:
        return self.kind is not GroupKind.PQXHALFZ

    def __str__(self) -> str:
        if self.kind is GroupKind.PQRZ:
            return f"p^Q*r^Z (r={render_fraction(self.r)})"
        return self.kind.value


@dataclass(frozen=True)
class GroupValue:
    """``p^exponent * base^power`` in ``ambient``, or the absorbing zero."""

    ambient: GroupDescriptor
    exponent: Fraction = Fraction(0)
    power: int = 0
    is_zero: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponent", Fraction(self.exponent))
        kind = self.ambient.kind
        if self.is_zero:
            if self.exponent != 0 or self.power != 0:
                raise ValueError("zero carries no exponents")
        elif kind is GroupKind.TRIVIAL and (self.exponent != 0 or self.power != 0):
            raise AmbientMismatch("the trivial group only holds its identity")
        elif kind is GroupKind.PQ and self.power != 0:
            raise AmbientMismatch("p^Q has no second exponent")

    @classmethod
    def zero(cls, ambient: GroupDescriptor) -> "GroupValue":
        return cls(ambient, is_zero=True)

    @classmethod
    def one(cls, ambient: GroupDescriptor) -> "GroupValue":
        return cls(ambient)

    @classmethod
    def pexp(cls, prime: int, exponent: Union[int, Fraction]) -> "GroupValue":
        return cls(GroupDescriptor.pq(prime), Fraction(exponent))

    @classmethod
    def mixed(
        cls, prime: int, r: Fraction, exponent: Union[int, Fraction], power: int
    ) -> "GroupValue":
        return cls(GroupDescriptor.pqrz(prime, r), Fraction(exponent), power)

    @classmethod
    def lex2(cls, prime: int, exponent: Union[int, Fraction], power: int) -> "GroupValue":
        return cls(GroupDescriptor.pqxhalfz(prime), Fraction(exponent), power)

    @property
    def variant(self) -> str:
        if self.is_zero:
            return "zero"
        return {
            GroupKind.TRIVIAL: "identity",
            GroupKind.PQ: "pexp",
            GroupKind.PQRZ: "mixed",
            GroupKind.PQXHALFZ: "lex2",
        }[self.ambient.kind]

    @property
    def is_identity(self) -> bool:
        return not self.is_zero and self.exponent == 0 and self.power == 0

    def __mul__(self, other: "GroupValue") -> "GroupValue":
        return mul(self, other)

    def __lt__(self, other: "GroupValue") -> bool:
        return cmp(self, other) is Ordering.LT

    def __le__(self, other: "GroupValue") -> bool:
        return cmp(self, other) is not Ordering.GT

    def __gt__(self, other: "GroupValue") -> bool:
        return cmp(self, other) is Ordering.GT

    def __ge__(self, other: "GroupValue") -> bool:
        return cmp(self, other) is not Ordering.LT

    def __str__(self) -> str:
        return render(self)


class ConvexSubgroup(Enum):
    TRIVIAL = "trivial"
    SECOND_FACTOR = "second_factor"
    FULL = "full"

    @property
    def rank(self) -> int:
        return {"trivial": 0, "second_factor": 1, "full": 2}[self.value]

    def meet(self, other: "ConvexSubgroup") -> "ConvexSubgroup":
        # the three subgroups form a chain
        return self if self.rank <= other.rank else other


def _check_ambient(*values: GroupValue) -> GroupDescriptor:
    ambient = values[0].ambient
    for value in values[1:]:
        if value.ambient != ambient:
            raise AmbientMismatch(f"values live in {ambient} and {value.ambient}")
    return ambient


def _sign(x: Union[int, Fraction]) -> Ordering:
    return Ordering((x > 0) - (x < 0))


def cmp(a: GroupValue, b: GroupValue) -> Ordering:
    ambient = _check_ambient(a, b)
    if a.is_zero or b.is_zero:
        return Ordering(int(b.is_zero) - int(a.is_zero))
    kind = ambient.kind
    if kind is GroupKind.TRIVIAL:
        return Ordering.EQ
    if kind is GroupKind.PQ:
        return _sign(a.exponent - b.exponent)
    if kind is GroupKind.PQXHALFZ:
        first = _sign(a.exponent - b.exponent)
        if first is not Ordering.EQ:
            return first
        # (1/2)^n shrinks as n grows
        return _sign(b.power - a.power)
    # p^d against r^m with d = a/b, raised to the b-th power: p^a against r^(m b)
    d = a.exponent - b.exponent
    m = b.power - a.power
    lhs = Fraction(ambient.prime) ** d.numerator
    rhs = ambient.r ** (m * d.denominator)
    return _sign(lhs - rhs)


def mul(a: GroupValue, b: GroupValue) -> GroupValue:
    ambient = _check_ambient(a, b)
    if a.is_zero or b.is_zero:
        return GroupValue.zero(ambient)
    return GroupValue(ambient, a.exponent + b.exponent, a.power + b.power)


def inv(a: GroupValue) -> GroupValue:
    if a.is_zero:
        raise ZeroInput("zero has no inverse")
    return GroupValue(a.ambient, -a.exponent, -a.power)


def power(a: GroupValue, n: int) -> GroupValue:
    if n < 0:
        return power(inv(a), -n)
    if a.is_zero:
        return a if n > 0 else GroupValue.one(a.ambient)
    return GroupValue(a.ambient, a.exponent * n, a.power * n)


def group_max(values: Iterable[GroupValue]) -> GroupValue:
    return reduce(lambda x, y: y if cmp(x, y) is Ordering.LT else x, values)


def group_min(values: Iterable[GroupValue]) -> GroupValue:
    return reduce(lambda x, y: y if cmp(x, y) is Ordering.GT else x, values)


def is_cofinal(a: GroupValue, group: GroupDescriptor) -> bool:
    """Whether the powers ``a^n`` eventually drop below every element of ``group``."""
    if a.ambient != group:
        raise AmbientMismatch(f"{a} does not live in {group}")
    if a.is_zero:
        return True
    if group.kind is GroupKind.TRIVIAL:
        return False
    if group.kind is GroupKind.PQRZ:
        return cmp(a, GroupValue.one(group)) is Ordering.LT
    return a.exponent < 0


def is_convex_in(delta: ConvexSubgroup, group: GroupDescriptor) -> bool:
    return delta is not ConvexSubgroup.SECOND_FACTOR or group.kind is GroupKind.PQXHALFZ


def _check_convex(delta: ConvexSubgroup, group: GroupDescriptor) -> None:
    if not is_convex_in(delta, group):
        raise AmbientMismatch(f"{delta.value} is not a convex subgroup of {group}")


def contains(delta: ConvexSubgroup, a: GroupValue) -> bool:
    _check_convex(delta, a.ambient)
    if a.is_zero:
        return False
    if delta is ConvexSubgroup.FULL:
        return True
    if delta is ConvexSubgroup.SECOND_FACTOR:
        return a.exponent == 0
    return a.is_identity


def convex_closure(values: Iterable[GroupValue], group: GroupDescriptor) -> ConvexSubgroup:
    values = list(values)
    if not values:
        raise ValueError("convex closure of an empty set")
    for value in values:
        if value.ambient != group:
            raise AmbientMismatch(f"{value} does not live in {group}")
        if value.is_zero:
            raise ZeroInGeneratorSet("0 is not a group element")
    if all(value.is_identity for value in values):
        return ConvexSubgroup.TRIVIAL
    if group.kind is GroupKind.PQXHALFZ and all(v.exponent == 0 for v in values):
        return ConvexSubgroup.SECOND_FACTOR
    return ConvexSubgroup.FULL


def quotient_project(a: GroupValue, delta: ConvexSubgroup) -> GroupValue:
    """The order-preserving projection ``Gamma u {0} -> Gamma/delta u {0}``."""
    _check_convex(delta, a.ambient)
    if delta is ConvexSubgroup.TRIVIAL:
        return a
    if delta is ConvexSubgroup.FULL:
        target = GroupDescriptor.trivial(a.ambient.prime)
    else:
        target = GroupDescriptor.pq(a.ambient.prime)
    if a.is_zero:
        return GroupValue.zero(target)
    if delta is ConvexSubgroup.FULL:
        return GroupValue.one(target)
    return GroupValue(target, a.exponent)


def truncate(a: GroupValue, delta: ConvexSubgroup) -> GroupValue:
    if contains(delta, a):
        return a
    return GroupValue.zero(a.ambient)


def render(a: GroupValue) -> str:
    if a.is_zero:
        return "0"
    kind = a.ambient.kind
    if kind is GroupKind.TRIVIAL:
        return "1"
    e = render_fraction(a.exponent)
    if kind is GroupKind.PQ:
        return f"p^{{{e}}}"
    if kind is GroupKind.PQRZ:
        return f"p^{{{e}}}*r^{{{a.power}}}"
    return f"(p^{{{e}}}, (1/2)^{{{a.power}}})"
