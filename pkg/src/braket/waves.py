"""Polynomial waves ``sum_a p_a(x) e^{iax}`` and their X-dependent bracket.

The bracket of two monomials with a common wave number is the integral of
``x^(m+n)`` over ``[-X, X]``; monomials with different wave numbers are
orthogonal.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import xpoly
from .scalars import I, S_ZERO, DomainError, RatFunc, Scalar, X
from .polynomial import Poly


class PolyWave:
    """Finite sum of ``p_a(x) * e^{iax}`` with rational wave numbers ``a``."""

    __slots__ = ("components", "_hash")

    def __init__(self, components: Mapping | Iterable = ()):
        items = components.items() if isinstance(components, Mapping) else components
        acc: dict[Fraction, tuple] = {}
        for a, p in items:
            a = Fraction(a)
            acc[a] = xpoly.add(acc.get(a, ()), xpoly.trim(p))
        self.components = tuple(sorted((a, p) for a, p in acc.items() if p))
        self._hash = None

    @classmethod
    def monomial(cls, degree: int = 0, wave_number=0, coeff=1) -> "PolyWave":
        return cls({wave_number: [0] * degree + [coeff]})

    @classmethod
    def polynomial(cls, coeffs) -> "PolyWave":
        return cls({0: coeffs})

    def component(self, a) -> tuple:
        a = Fraction(a)
        for b, p in self.components:
            if b == a:
                return p
        return ()

    @property
    def wave_numbers(self) -> tuple[Fraction, ...]:
        return tuple(a for a, _ in self.components)

    def is_zero(self) -> bool:
        return not self.components

    def __bool__(self) -> bool:
        return bool(self.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyWave):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.components)
        return self._hash

    def __repr__(self) -> str:
        from .render import render_wave

        return f"PolyWave({render_wave(self)})"

    def __add__(self, other: "PolyWave") -> "PolyWave":
        if not isinstance(other, PolyWave):
            return NotImplemented
        return PolyWave(list(self.components) + list(other.components))

    def __neg__(self) -> "PolyWave":
        return self.scale(Scalar(-1))

    def __sub__(self, other: "PolyWave") -> "PolyWave":
        return self + (-other)

    def scale(self, c) -> "PolyWave":
        c = Scalar.of(c)
        return PolyWave((a, xpoly.scale(p, c)) for a, p in self.components)

    def __rmul__(self, c) -> "PolyWave":
        if isinstance(c, PolyWave):
            return NotImplemented
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, PolyWave):
            return PolyWave(
                (a + b, xpoly.mul(p, q)) for a, p in self.components for b, q in other.components
            )
        return self.scale(other)


@lru_cache(maxsize=None)
def monomial_bracket(m: int, n: int) -> Scalar:
    """``(x^m, x^n) = [1 + (-1)^(m+n)] X^(m+n+1) / (m+n+1)``."""
    if (m + n) % 2:
        return S_ZERO
    r = m + n + 1
    return Scalar(RatFunc(Poly.monomial(r, Fraction(2, r))))


def wave_bracket(f: PolyWave, g: PolyWave) -> Scalar:
    """Hermitian bracket on polynomial waves, antilinear in ``f``."""
    total = S_ZERO
    for a, p in f.components:
        q = g.component(a)
        if not q:
            continue
        for m, c in enumerate(p):
            if not c:
                continue
            cc = c.conjugate()
            for n, d in enumerate(q):
                if d and (m + n) % 2 == 0:
                    total = total + cc * d * monomial_bracket(m, n)
    return total


def _eval_at(p, x: Scalar) -> Scalar:
    acc = S_ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def oracle_bracket(f: PolyWave, g: PolyWave) -> Scalar:
    """Bracket by direct integration of ``f* g`` over ``[-X, X]``.

    Only defined when both waves share a single wave number, so that the
    integrand is an ordinary polynomial.
    """
    numbers = set(f.wave_numbers) | set(g.wave_numbers)
    if len(numbers) > 1:
        raise DomainError("integral oracle needs a single common wave number")
    if not numbers:
        return S_ZERO
    (a,) = numbers
    integrand = xpoly.mul(xpoly.conj(f.component(a)), g.component(a))
    antider = xpoly.trim([S_ZERO] + [c * Fraction(1, i + 1) for i, c in enumerate(integrand)])
    return _eval_at(antider, X) - _eval_at(antider, -X)


def derivative_wave(f: PolyWave) -> PolyWave:
    return PolyWave(
        (a, xpoly.add(xpoly.derivative(p), xpoly.scale(p, I * a))) for a, p in f.components
    )


def mul_x_wave(f: PolyWave) -> PolyWave:
    return PolyWave((a, xpoly.shift_up(p)) for a, p in f.components)


def translate_wave(f: PolyWave, h) -> PolyWave:
    """``f(x) -> f(x + h)``.

    A nonzero wave number picks up the phase ``e^{iah}``, which is not an
    exact scalar unless ``a*h == 0``; such inputs raise DomainError.
    """
    h = Fraction(h)
    out = []
    for a, p in f.components:
        if a and h:
            raise DomainError(f"translating e^(i*{a}*x) by {h} needs the phase e^(i*{a * h})")
        out.append((a, xpoly.translate(p, h)))
    return PolyWave(out)


def phase_translate(f: PolyWave, b) -> PolyWave:
    """``f(x) -> e^{ibx} f(x)``."""
    b = Fraction(b)
    return PolyWave((a + b, p) for a, p in f.components)


def reflect_wave(f: PolyWave) -> PolyWave:
    return PolyWave((-a, xpoly.reflect(p)) for a, p in f.components)


def parity_split(f: PolyWave) -> tuple[PolyWave, PolyWave]:
    """Even and odd parts ``(f + Rf)/2`` and ``(f - Rf)/2``."""
    r = reflect_wave(f)
    half = Scalar(Fraction(1, 2))
    return (f + r).scale(half), (f - r).scale(half)


ZERO_WAVE = PolyWave()
