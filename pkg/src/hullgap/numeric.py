"""Exact rational scalars.

Every coordinate in the package is a :class:`fractions.Fraction`. Fractions
are kept in lowest terms with a positive denominator by the standard library,
which is exactly the canonical form this package relies on for equality and
serialization. This module adds a strict token grammar on top (no floats, no
exponents, no whitespace tricks) and the integer-grid scaling used by the
compiled kernels.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_TOKEN = re.compile(r"-?\d+(?:\.\d+|/\d+)?")

# xrange * yrange bound that keeps every int64 cross product of differences exact
INT64_PRODUCT_LIMIT = 2**61


class RationalParseError(ValueError):
    """Raised for a token that is not an integer, decimal or p/q fraction."""

    def __init__(self, token: str):
        super().__init__(f"malformed rational token {token!r}")
        self.token = token


def rat_parse(text: str) -> Fraction:
    """Parse ``[-]digits``, ``[-]digits.digits`` or ``[-]digits/digits``.

    Decimals are read exactly, so ``"0.1"`` is ``1/10``. A zero denominator
    raises :class:`ZeroDivisionError`.
    """
    if not isinstance(text, str) or not _TOKEN.fullmatch(text):
        raise RationalParseError(str(text))
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    if "." in text:
        whole, frac = text.split(".")
        neg = whole.startswith("-")
        mag = Fraction(int(whole.lstrip("-") + frac), 10 ** len(frac))
        return -mag if neg else mag
    return Fraction(int(text))


def rat_render(r: Fraction) -> str:
    """Canonical text form: ``p`` when the denominator is 1, else ``p/q``."""
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and tokens; floats are refused outright."""
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rat_parse(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def rat_cmp(a: Fraction, b: Fraction) -> int:
    """Three-way comparison, -1 / 0 / +1."""
    return (a > b) - (a < b)


def sign(value) -> int:
    return (value > 0) - (value < 0)


def _lcm_of_denominators(values: Iterable[Fraction]) -> int:
    dens = {v.denominator for v in values}
    return math.lcm(*dens) if dens else 1


def integer_grid(xs: Sequence[Fraction], ys: Sequence[Fraction]):
    """Map rational coordinates onto an integer lattice, preserving orientation.

    Each axis is translated to start at zero and multiplied by the lcm of its
    denominators. Both maps are positive affine per axis, so lexicographic
    order and the sign of every cross product are unchanged.

    Returns ``(X, Y, fits)`` where ``fits`` is true when every cross product
    of coordinate differences is guaranteed to fit in int64; in that case
    ``X`` and ``Y`` are int64 arrays, otherwise lists of Python ints.
    """
    dx = _lcm_of_denominators(xs)
    dy = _lcm_of_denominators(ys)
    X = [x.numerator * (dx // x.denominator) for x in xs]
    Y = [y.numerator * (dy // y.denominator) for y in ys]
    x0 = min(X)
    y0 = min(Y)
    X = [v - x0 for v in X]
    Y = [v - y0 for v in Y]
    xr = max(X)
    yr = max(Y)
    fits = max(xr, 1) * max(yr, 1) < INT64_PRODUCT_LIMIT
    if fits:
        return np.asarray(X, dtype=np.int64), np.asarray(Y, dtype=np.int64), True
    return X, Y, False
