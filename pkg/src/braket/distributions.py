"""Distributions with finite discrete support and their bracket.

A :class:`ConcentratedDist` is a finite sum of ``c * delta^(m)(x - a)``
with rational support points ``a``.  Derivatives of delta at the same
point pair through the values

    <delta^(m), delta^(n)> = (-1)^(k-n) X^(2k+1) / ((2k+1) pi),   m + n = 2k,

and vanish when ``m + n`` is odd or the support points differ.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import xpoly
from .polynomial import Poly
from .scalars import S_ZERO, RatFunc, Scalar


class ConcentratedDist:
    """Finite sum of Scalar-weighted ``delta^(n)(x - a)``.

    ``components`` is a sorted tuple of ``(a, (phi_0, ..., phi_r))``
    pairs with ``phi_r`` nonzero.
    """

    __slots__ = ("components", "_hash")

    def __init__(self, components: Mapping | Iterable = ()):
        items = components.items() if isinstance(components, Mapping) else components
        acc: dict[Fraction, tuple] = {}
        for a, coeffs in items:
            a = Fraction(a)
            acc[a] = xpoly.add(acc.get(a, ()), xpoly.trim(coeffs))
        self.components = tuple(sorted((a, c) for a, c in acc.items() if c))
        self._hash = None

    @classmethod
    def delta(cls, order: int = 0, at=0, coeff=1) -> "ConcentratedDist":
        return cls({at: [0] * order + [coeff]})

    def component(self, a) -> tuple:
        a = Fraction(a)
        for b, c in self.components:
            if b == a:
                return c
        return ()

    @property
    def support(self) -> tuple[Fraction, ...]:
        return tuple(a for a, _ in self.components)

    @property
    def order(self) -> int:
        return max((len(c) - 1 for _, c in self.components), default=-1)

    def is_zero(self) -> bool:
        return not self.components

    def __bool__(self) -> bool:
        return bool(self.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConcentratedDist):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.components)
        return self._hash

    def __repr__(self) -> str:
        from .render import render_dist

        return f"ConcentratedDist({render_dist(self)})"

    def __add__(self, other: "ConcentratedDist") -> "ConcentratedDist":
        if not isinstance(other, ConcentratedDist):
            return NotImplemented
        return ConcentratedDist(list(self.components) + list(other.components))

    def __neg__(self) -> "ConcentratedDist":
        return self.scale(Scalar(-1))

    def __sub__(self, other: "ConcentratedDist") -> "ConcentratedDist":
        return self + (-other)

    def scale(self, c) -> "ConcentratedDist":
        c = Scalar.of(c)
        return ConcentratedDist((a, xpoly.scale(p, c)) for a, p in self.components)

    def __rmul__(self, c) -> "ConcentratedDist":
        if isinstance(c, ConcentratedDist):
            return NotImplemented
        return self.scale(c)

    def __mul__(self, c) -> "ConcentratedDist":
        if isinstance(c, ConcentratedDist):
            raise TypeError("distributions are not multiplied")
        return self.scale(c)


@lru_cache(maxsize=None)
def zeta(k: int) -> Scalar:
    """``<delta^(k), delta>``: ``(-1)^p X^(2p+1)/((2p+1) pi)`` for ``k = 2p``, else 0."""
    if k % 2:
        return S_ZERO
    p = k // 2
    # 1/pi = 2 * (2 pi)^(-1), i.e. grade -2 with an extra factor 2
    c = Fraction(2 * (-1) ** p, 2 * p + 1)
    return Scalar.make(RatFunc(Poly.monomial(2 * p + 1, c)), 0, grade=-2)


@lru_cache(maxsize=None)
def elementary_bracket(m: int, n: int) -> Scalar:
    """``<delta^(m), delta^(n)>`` at a common support point."""
    if (m + n) % 2:
        return S_ZERO
    k = (m + n) // 2
    c = Fraction(2 if (k - n) % 2 == 0 else -2, 2 * k + 1)
    return Scalar.make(RatFunc(Poly.monomial(2 * k + 1, c)), 0, grade=-2)


def delta_bracket(phi: ConcentratedDist, psi: ConcentratedDist) -> Scalar:
    total = S_ZERO
    for a, p in phi.components:
        q = psi.component(a)
        if not q:
            continue
        for m, c in enumerate(p):
            if not c:
                continue
            cc = c.conjugate()
            for n, d in enumerate(q):
                if d and (m + n) % 2 == 0:
                    total = total + cc * d * elementary_bracket(m, n)
    return total


def derivative_dist(phi: ConcentratedDist) -> ConcentratedDist:
    return ConcentratedDist((a, xpoly.shift_up(c)) for a, c in phi.components)


def mul_x_dist(phi: ConcentratedDist) -> ConcentratedDist:
    """``x * delta^(m)(x-a) = a delta^(m)(x-a) - m delta^(m-1)(x-a)``."""
    out = []
    for a, c in phi.components:
        lowered = xpoly.trim(c[m + 1] * (-(m + 1)) for m in range(len(c) - 1))
        out.append((a, xpoly.add(xpoly.scale(c, Scalar(a)), lowered)))
    return ConcentratedDist(out)


def reflect_dist(phi: ConcentratedDist) -> ConcentratedDist:
    return ConcentratedDist((-a, xpoly.reflect(c)) for a, c in phi.components)


def translate_dist(phi: ConcentratedDist, h) -> ConcentratedDist:
    """Move the support by ``h``: ``delta(x - a) -> delta(x - a - h)``."""
    h = Fraction(h)
    return ConcentratedDist((a + h, c) for a, c in phi.components)


ZERO_DIST = ConcentratedDist()
