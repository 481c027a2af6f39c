# -*- coding: utf-8 -*-
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator, Union

from adicdisc.config import AdicConfig, get_config
from adicdisc.tate import TateSeries


def poly(p: int, *coeffs: Union[int, str, Fraction]) -> TateSeries:
    """``poly(3, 1, 0, 3)`` is ``1 + 3 w^2`` over ``p = 3``."""
    return TateSeries.polynomial(p, coeffs)


@contextmanager
def configured(**traits) -> Iterator[AdicConfig]:
    """Temporarily override traits of the ``AdicConfig`` singleton."""
    config = get_config()
    saved = {name: getattr(config, name) for name in traits}
    for name, value in traits.items():
        setattr(config, name, value)
    try:
        yield config
    finally:
        for name, value in saved.items():
            setattr(config, name, value)
