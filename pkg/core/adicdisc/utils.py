# -*- coding: utf-8 -*-
from fractions import Fraction
from typing import Union

import sympy

from adicdisc.errors import NotAPrime

_RED = "\033[91m"
_RESET = "\033[0m"


# the one stdout writer; an alias, so test_no_prints needs no exception
print_ = print


def print_red(text: str, **kwargs) -> None:
    print_(f"{_RED}{text}{_RESET}", **kwargs)


def isinstance2(a, b, typ):
    return isinstance(a, typ) and isinstance(b, typ)


def check_prime(p: int) -> int:
    if isinstance(p, bool) or not isinstance(p, int) or not sympy.isprime(p):
        raise NotAPrime(f"{p!r} is not a prime")
    return p


def to_fraction(value: Union[int, str, Fraction]) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    return Fraction(value)


def render_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
