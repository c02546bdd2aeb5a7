"""Polynomials in the space variable x with :class:`Scalar` coefficients.

Represented as plain tuples of Scalars, ascending by degree, trailing zeros
stripped.  These are the building blocks of polynomial waves and of the
exponential-polynomials on the half lines.
"""

from __future__ import annotations

from math import comb
from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import S_ZERO, Scalar

SPoly = tuple  # tuple[Scalar, ...]


def trim(coeffs: Iterable) -> SPoly:
    out = [Scalar.of(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def add(a: Sequence[Scalar], b: Sequence[Scalar]) -> SPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def scale(p: Sequence[Scalar], c: Scalar) -> SPoly:
    if not c:
        return ()
    return trim(x * c for x in p)


def mul(a: Sequence[Scalar], b: Sequence[Scalar]) -> SPoly:
    if not a or not b:
        return ()
    out = [S_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return trim(out)


def conj(p: Sequence[Scalar]) -> SPoly:
    return tuple(c.conjugate() for c in p)


def derivative(p: Sequence[Scalar]) -> SPoly:
    return trim(c * i for i, c in enumerate(p) if i)


def shift_up(p: Sequence[Scalar]) -> SPoly:
    """Multiply by x."""
    return (S_ZERO,) + tuple(p) if p else ()


def reflect(p: Sequence[Scalar]) -> SPoly:
    """``p(x) -> p(-x)``."""
    return tuple(-c if i % 2 else c for i, c in enumerate(p))


def translate(p: Sequence[Scalar], h: Fraction) -> SPoly:
    """``p(x) -> p(x + h)`` by binomial expansion."""
    out = [S_ZERO] * len(p)
    for m, c in enumerate(p):
        if not c:
            continue
        for j in range(m + 1):
            out[j] = out[j] + c * (comb(m, j) * Fraction(h) ** (m - j))
    return trim(out)


def value_at_zero(p: Sequence[Scalar]) -> Scalar:
    return p[0] if p else S_ZERO
