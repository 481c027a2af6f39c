# -*- coding: utf-8 -*-
"""
Finite fields ``F_{p^k}``, polynomials over them, and the order-of-vanishing
valuations ``ord_lambda`` on ``F_{p^k}(t)``.

``F_{p^k}`` is the desk-scale stand-in for the algebraic closure of ``F_p``:
``k`` is chosen by the caller, and ``P^1(F_{p^k})`` is enumerated exactly.
Elements are kept as dense ``sympy.polys.galoistools`` lists (highest degree
first) reduced modulo a monic irreducible modulus.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_gcdex,
    gf_irreducible_p,
    gf_mul,
    gf_neg,
    gf_rem,
    gf_strip,
    gf_sub,
    gf_trunc,
)

from adicdisc.config import get_config
from adicdisc.errors import (
    AmbientMismatch,
    ReducibleModulus,
    ResidueDegreeTooLarge,
    ZeroDenominator,
    ZeroFunction,
    ZeroInput,
)
from adicdisc.ordgroup import GroupDescriptor, GroupValue
from adicdisc.utils import check_prime

logger = logging.getLogger(__name__)


DEGREE_OF_ZERO = float("-inf")


class _InfiniteOrder:
    """The order of vanishing of the zero function."""

    _instance: Optional["_InfiniteOrder"] = None

    def __new__(cls) -> "_InfiniteOrder":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE_ORDER"


INFINITE_ORDER = _InfiniteOrder()

_reported_infinity_convention = False


def _check_degree(k: int) -> None:
    if k < 1:
        raise ValueError(f"extension degree must be positive, got {k}")
    limit = get_config().max_residue_degree
    if k > limit:
        raise ResidueDegreeTooLarge(f"F_{{p^{k}}} exceeds the largest residue degree {limit}")


def _as_ints(poly) -> Tuple[int, ...]:
    return tuple(int(c) for c in poly)


@dataclass(frozen=True)
class FqContext:
    p: int
    k: int
    modulus: Tuple[int, ...]

    def __post_init__(self) -> None:
        check_prime(self.p)
        _check_degree(self.k)
        modulus = _as_ints(gf_strip(gf_trunc(list(self.modulus), self.p)))
        if len(modulus) != self.k + 1 or modulus[0] != 1:
            raise ReducibleModulus(f"modulus {self.modulus} is not monic of degree {self.k}")
        if not gf_irreducible_p(list(modulus), self.p, ZZ):
            raise ReducibleModulus(f"modulus {self.modulus} is reducible over F_{self.p}")
        object.__setattr__(self, "modulus", modulus)

    @classmethod
    def default(cls, p: int, k: int = 1) -> "FqContext":
        return _default_context(p, k)

    @property
    def order(self) -> int:
        return self.p**self.k

    def reduce(self, poly: Sequence[int]) -> Tuple[int, ...]:
        reduced = gf_rem(gf_strip(gf_trunc(list(poly), self.p)), list(self.modulus), self.p, ZZ)
        return _as_ints(reduced)

    def element(self, coordinates: Sequence[int]) -> "FqElement":
        """Build an element from its coordinates (lowest power of the generator first)."""
        return FqElement(self, self.reduce(list(reversed(list(coordinates)))))

    def from_int(self, value: int) -> "FqElement":
        return FqElement(self, self.reduce([value]))

    @property
    def zero(self) -> "FqElement":
        return FqElement(self, ())

    @property
    def one(self) -> "FqElement":
        return self.from_int(1)

    def elements(self) -> Iterator["FqElement"]:
        for coordinates in itertools.product(range(self.p), repeat=self.k):
            yield self.element(coordinates)

    def p1_points(self, include_infinity: bool = True) -> Iterator["P1Point"]:
        for value in self.elements():
            yield P1Point(value)
        if include_infinity:
            yield P1Point.infinity()

    def __str__(self) -> str:
        return f"F_{self.p}^{self.k}" if self.k > 1 else f"F_{self.p}"


@lru_cache(maxsize=None)
def _default_context(p: int, k: int) -> FqContext:
    check_prime(p)
    _check_degree(k)
    for tail in itertools.product(range(p), repeat=k):
        candidate = (1,) + tail
        if gf_irreducible_p(list(candidate), p, ZZ):
            return FqContext(p, k, candidate)
    raise ReducibleModulus(f"no irreducible polynomial of degree {k} over F_{p}")


@dataclass(frozen=True)
class FqElement:
    ctx: FqContext
    coeffs: Tuple[int, ...]

    def _check(self, other: "FqElement") -> None:
        if self.ctx != other.ctx:
            raise AmbientMismatch(f"elements of {self.ctx} and {other.ctx}")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def coordinates(self) -> Tuple[int, ...]:
        padded = (0,) * (self.ctx.k - len(self.coeffs)) + self.coeffs
        return tuple(reversed(padded))

    def __add__(self, other: "FqElement") -> "FqElement":
        self._check(other)
        total = gf_add(list(self.coeffs), list(other.coeffs), self.ctx.p, ZZ)
        return FqElement(self.ctx, _as_ints(total))

    def __sub__(self, other: "FqElement") -> "FqElement":
        self._check(other)
        difference = gf_sub(list(self.coeffs), list(other.coeffs), self.ctx.p, ZZ)
        return FqElement(self.ctx, _as_ints(difference))

    def __neg__(self) -> "FqElement":
        return FqElement(self.ctx, _as_ints(gf_neg(list(self.coeffs), self.ctx.p, ZZ)))

    def __mul__(self, other: "FqElement") -> "FqElement":
        self._check(other)
        product = gf_mul(list(self.coeffs), list(other.coeffs), self.ctx.p, ZZ)
        return FqElement(self.ctx, self.ctx.reduce(product))

    def inverse(self) -> "FqElement":
        if self.is_zero:
            raise ZeroInput(f"0 has no inverse in {self.ctx}")
        s, _, h = gf_gcdex(list(self.coeffs), list(self.ctx.modulus), self.ctx.p, ZZ)
        assert _as_ints(h) == (1,), "modulus is irreducible"
        return FqElement(self.ctx, self.ctx.reduce(s))

    def __truediv__(self, other: "FqElement") -> "FqElement":
        return self * other.inverse()

    def __pow__(self, n: int) -> "FqElement":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.ctx.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self) -> str:
        if self.ctx.k == 1:
            return str(self.coeffs[0] if self.coeffs else 0)
        return "[" + ", ".join(str(c) for c in self.coordinates) + "]"


@dataclass(frozen=True)
class P1Point:
    value: Optional[FqElement] = None

    @classmethod
    def finite(cls, value: FqElement) -> "P1Point":
        return cls(value)

    @classmethod
    def infinity(cls) -> "P1Point":
        return cls(None)

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def shifted(self, c: FqElement) -> "P1Point":
        """The same point in the coordinate ``t + c``."""
        if self.value is None:
            return self
        if c.ctx != self.value.ctx:
            c = _embed_element(c, self.value.ctx)
        return P1Point(self.value + c)

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)


def _embed_element(c: FqElement, ctx: FqContext) -> FqElement:
    if c.ctx == ctx:
        return c
    if c.ctx.k != 1 or c.ctx.p != ctx.p:
        raise AmbientMismatch(f"cannot embed {c.ctx} into {ctx}")
    return ctx.from_int(c.coeffs[0] if c.coeffs else 0)


@dataclass(frozen=True)
class FqPoly:
    """Dense polynomial in ``t`` over ``ctx``; ``coeffs[i]`` multiplies ``t^i``."""

    ctx: FqContext
    coeffs: Tuple[FqElement, ...] = ()

    def __post_init__(self) -> None:
        coeffs = list(self.coeffs)
        for c in coeffs:
            if c.ctx != self.ctx:
                raise AmbientMismatch(f"coefficient of {c.ctx} in a polynomial over {self.ctx}")
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_ints(cls, ctx: FqContext, coeffs: Sequence[int]) -> "FqPoly":
        return cls(ctx, tuple(ctx.from_int(c) for c in coeffs))

    @classmethod
    def constant(cls, c: FqElement) -> "FqPoly":
        return cls(c.ctx, (c,))

    @classmethod
    def t(cls, ctx: FqContext) -> "FqPoly":
        return cls(ctx, (ctx.zero, ctx.one))

    @classmethod
    def from_roots(cls, ctx: FqContext, roots: Sequence[FqElement]) -> "FqPoly":
        result = cls.constant(ctx.one)
        for root in roots:
            result = result * cls(ctx, (-root, ctx.one))
        return result

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else DEGREE_OF_ZERO

    def _check(self, other: "FqPoly") -> None:
        if self.ctx != other.ctx:
            raise AmbientMismatch(f"polynomials over {self.ctx} and {other.ctx}")

    def __add__(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        zero = self.ctx.zero
        return FqPoly(
            self.ctx,
            tuple(
                (self.coeffs[i] if i < len(self.coeffs) else zero)
                + (other.coeffs[i] if i < len(other.coeffs) else zero)
                for i in range(n)
            ),
        )

    def __neg__(self) -> "FqPoly":
        return FqPoly(self.ctx, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "FqPoly") -> "FqPoly":
        return self + (-other)

    def __mul__(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return FqPoly(self.ctx)
        out: List[FqElement] = [self.ctx.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return FqPoly(self.ctx, tuple(out))

    def __call__(self, x: FqElement) -> FqElement:
        result = self.ctx.zero
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def divide_by_linear(self, root: FqElement) -> Tuple["FqPoly", FqElement]:
        """Synthetic division by ``t - root``: returns (quotient, remainder)."""
        if not self.coeffs:
            return self, self.ctx.zero
        quotient: List[FqElement] = []
        carry = self.ctx.zero
        for c in reversed(self.coeffs):
            carry = carry * root + c
            quotient.append(carry)
        remainder = quotient.pop()
        return FqPoly(self.ctx, tuple(reversed(quotient))), remainder

    def embed(self, ctx: FqContext) -> "FqPoly":
        if ctx == self.ctx:
            return self
        return FqPoly(ctx, tuple(_embed_element(c, ctx) for c in self.coeffs))

    def to_coordinate_lists(self) -> List[List[int]]:
        return [list(c.coordinates) for c in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            monomial = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            coefficient = str(c)
            if monomial and coefficient == "1":
                terms.append(monomial)
            elif monomial:
                terms.append(f"{coefficient}*{monomial}")
            else:
                terms.append(coefficient)
        return " + ".join(terms)


def multiplicity(f: FqPoly, root: FqElement) -> int:
    if f.is_zero:
        raise ZeroFunction("the zero polynomial vanishes to infinite order")
    count = 0
    while True:
        quotient, remainder = f.divide_by_linear(root)
        if not remainder.is_zero:
            return count
        f, count = quotient, count + 1


def _common_context(num: FqPoly, den: FqPoly, lam: P1Point) -> Tuple[FqPoly, FqPoly]:
    ctx = lam.value.ctx if lam.value is not None else max(num.ctx, den.ctx, key=lambda c: c.k)
    return num.embed(ctx), den.embed(ctx)


def _report_infinity_convention() -> None:
    global _reported_infinity_convention
    if not _reported_infinity_convention:
        _reported_infinity_convention = True
        logger.info(
            "ord_inf(num/den) is computed as deg(den) - deg(num): poles at infinity "
            + "count negatively, which keeps |.|_inf ultrametric"
        )


def ord_at(num: FqPoly, den: FqPoly, lam: P1Point, allow_zero: bool = False):
    """Order of vanishing of ``num/den`` at ``lam``.

    For the zero function this raises ``ZeroFunction``, unless ``allow_zero`` is
    set, in which case the sentinel ``INFINITE_ORDER`` is returned.
    """
    if den.is_zero:
        raise ZeroDenominator("rational function with zero denominator")
    if num.is_zero:
        if allow_zero:
            return INFINITE_ORDER
        raise ZeroFunction("the zero function vanishes to infinite order")
    num, den = _common_context(num, den, lam)
    if lam.value is None:
        _report_infinity_convention()
        return int(den.degree) - int(num.degree)
    return multiplicity(num, lam.value) - multiplicity(den, lam.value)


def lambda_value(num: FqPoly, den: FqPoly, lam: P1Point) -> GroupValue:
    """``(1/2)^{ord_lambda(num/den)}`` as the second coordinate of ``p^Q x (1/2)^Z``."""
    order = ord_at(num, den, lam, allow_zero=True)
    p = num.ctx.p
    if order is INFINITE_ORDER:
        return GroupValue.zero(GroupDescriptor.pqxhalfz(p))
    return GroupValue.lex2(p, 0, order)
