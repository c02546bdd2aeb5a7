"""Functions glued at the origin, distributions at the origin, and their bracket.

A :class:`JFunction` is ``h = eta*f + (1 - eta)*g`` with ``eta`` the unit
step: ``f`` is used on ``x > 0`` and ``g`` on ``x < 0``.  Both sides are
exponential-polynomials, decaying on their own half line, so all the
half-line integrals have closed forms.

A :class:`MixedState` adds a distribution supported by the origin.  The
bracket of a delta derivative against anything goes through the
pseudo-value at the origin (average value of the function part plus the
delta pairing of the distribution part).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable

from . import xpoly
from .distributions import ZERO_DIST, ConcentratedDist, delta_bracket, derivative_dist, zeta
from .scalars import S_ZERO, DomainError, Scalar

CRational = tuple  # (re: Fraction, im: Fraction)


def crat(re, im=0) -> CRational:
    return (Fraction(re), Fraction(im))


def _mu_scalar(mu: CRational) -> Scalar:
    return Scalar.make(mu[0], mu[1])


class ExpPoly:
    """Finite sum ``sum_k p_k(x) e^{mu_k x}`` with complex rational exponents."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable = ()):
        acc: dict[CRational, tuple] = {}
        for mu, p in terms:
            mu = crat(*mu) if isinstance(mu, tuple) else crat(mu)
            acc[mu] = xpoly.add(acc.get(mu, ()), xpoly.trim(p))
        self.terms = tuple(sorted((mu, p) for mu, p in acc.items() if p))
        self._hash = None

    @classmethod
    def exp(cls, mu, coeffs=(1,)) -> "ExpPoly":
        return cls([(mu, coeffs)])

    @property
    def exponents(self) -> tuple[CRational, ...]:
        return tuple(mu for mu, _ in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __repr__(self) -> str:
        from .render import render_exppoly

        return f"ExpPoly({render_exppoly(self)})"

    def __add__(self, other: "ExpPoly") -> "ExpPoly":
        return ExpPoly(self.terms + other.terms)

    def __neg__(self) -> "ExpPoly":
        return self.scale(Scalar(-1))

    def __sub__(self, other: "ExpPoly") -> "ExpPoly":
        return self + (-other)

    def scale(self, c) -> "ExpPoly":
        c = Scalar.of(c)
        return ExpPoly((mu, xpoly.scale(p, c)) for mu, p in self.terms)

    def __mul__(self, other: "ExpPoly") -> "ExpPoly":
        return ExpPoly(
            ((m1[0] + m2[0], m1[1] + m2[1]), xpoly.mul(p, q))
            for m1, p in self.terms
            for m2, q in other.terms
        )

    def conjugate(self) -> "ExpPoly":
        return ExpPoly(((mu[0], -mu[1]), xpoly.conj(p)) for mu, p in self.terms)

    def derivative(self) -> "ExpPoly":
        return ExpPoly(
            (mu, xpoly.add(xpoly.derivative(p), xpoly.scale(p, _mu_scalar(mu))))
            for mu, p in self.terms
        )

    def reflect(self) -> "ExpPoly":
        return ExpPoly(((-mu[0], -mu[1]), xpoly.reflect(p)) for mu, p in self.terms)

    def value_at_zero(self) -> Scalar:
        total = S_ZERO
        for _, p in self.terms:
            total = total + xpoly.value_at_zero(p)
        return total


ZERO_EXP = ExpPoly()


def _check_side(e: ExpPoly, side: str) -> None:
    for mu, _ in e.terms:
        if side == "+" and not mu[0] < 0:
            raise DomainError(f"exponent {_mu_text(mu)} does not decay on the right half line")
        if side == "-" and not mu[0] > 0:
            raise DomainError(f"exponent {_mu_text(mu)} does not decay on the left half line")


def _mu_text(mu: CRational) -> str:
    re, im = mu
    return str(re) if not im else f"{re}{'-' if im < 0 else '+'}{abs(im)}i"


class JFunction:
    """``eta*right + (1 - eta)*left``; ``right`` decays at +inf, ``left`` at -inf."""

    __slots__ = ("right", "left", "_hash")

    def __init__(self, right: ExpPoly = ZERO_EXP, left: ExpPoly = ZERO_EXP, check: bool = True):
        if check:
            _check_side(right, "+")
            _check_side(left, "-")
        self.right = right
        self.left = left
        self._hash = None

    def validate(self) -> "JFunction":
        _check_side(self.right, "+")
        _check_side(self.left, "-")
        return self

    def is_zero(self) -> bool:
        return self.right.is_zero() and self.left.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JFunction):
            return NotImplemented
        return self.right == other.right and self.left == other.left

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.right, self.left))
        return self._hash

    def __repr__(self) -> str:
        from .render import render_jfun

        return f"JFunction({render_jfun(self)})"

    def __add__(self, other: "JFunction") -> "JFunction":
        return JFunction(self.right + other.right, self.left + other.left, check=False)

    def __neg__(self) -> "JFunction":
        return self.scale(Scalar(-1))

    def __sub__(self, other: "JFunction") -> "JFunction":
        return self + (-other)

    def scale(self, c) -> "JFunction":
        return JFunction(self.right.scale(c), self.left.scale(c), check=False)

    def __mul__(self, other: "JFunction") -> "JFunction":
        return JFunction(self.right * other.right, self.left * other.left, check=False)

    def conjugate(self) -> "JFunction":
        return JFunction(self.right.conjugate(), self.left.conjugate(), check=False)

    def reflect(self) -> "JFunction":
        return JFunction(self.left.reflect(), self.right.reflect(), check=False)


ZERO_JFUN = JFunction()


class MixedState:
    """``Phi = phi + F`` with ``phi`` supported by the origin and ``F`` a JFunction."""

    __slots__ = ("dist", "fun", "_hash")

    def __init__(self, dist: ConcentratedDist = ZERO_DIST, fun: JFunction = ZERO_JFUN):
        if any(a != 0 for a in dist.support):
            raise DomainError("mixed states only hold distributions supported by the origin")
        self.dist = dist
        self.fun = fun
        self._hash = None

    def is_zero(self) -> bool:
        return self.dist.is_zero() and self.fun.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MixedState):
            return NotImplemented
        return self.dist == other.dist and self.fun == other.fun

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dist, self.fun))
        return self._hash

    def __repr__(self) -> str:
        from .render import render_mixed

        return f"MixedState({render_mixed(self)})"

    def __add__(self, other: "MixedState") -> "MixedState":
        return MixedState(self.dist + other.dist, self.fun + other.fun)

    def __neg__(self) -> "MixedState":
        return self.scale(Scalar(-1))

    def __sub__(self, other: "MixedState") -> "MixedState":
        return self + (-other)

    def scale(self, c) -> "MixedState":
        return MixedState(self.dist.scale(c), self.fun.scale(c))

    def __rmul__(self, c) -> "MixedState":
        return self.scale(c)

    def conjugate(self) -> "MixedState":
        dist = ConcentratedDist((a, xpoly.conj(c)) for a, c in self.dist.components)
        return MixedState(dist, self.fun.conjugate())

    def reflect(self) -> "MixedState":
        dist = ConcentratedDist((-a, xpoly.reflect(c)) for a, c in self.dist.components)
        return MixedState(dist, self.fun.reflect())


ZERO_MIXED = MixedState()


def as_mixed(value) -> MixedState:
    if isinstance(value, MixedState):
        return value
    if isinstance(value, JFunction):
        return MixedState(fun=value)
    if isinstance(value, ConcentratedDist):
        return MixedState(dist=value)
    raise TypeError(f"cannot view {type(value).__name__} as a mixed state")


# ---------------------------------------------------------------------------
# values at the origin and derivatives


def average_value(h: JFunction) -> Scalar:
    return (h.right.value_at_zero() + h.left.value_at_zero()) * Fraction(1, 2)


def jump(h: JFunction) -> Scalar:
    return h.right.value_at_zero() - h.left.value_at_zero()


def classical_derivative(h: JFunction) -> JFunction:
    return JFunction(h.right.derivative(), h.left.derivative(), check=False)


def dist_derivative(phi: MixedState) -> MixedState:
    """Derivative in the sense of distributions: the jump feeds a delta."""
    theta = jump(phi.fun)
    dist = derivative_dist(phi.dist)
    if theta:
        dist = dist + ConcentratedDist.delta(0, 0, theta)
    return MixedState(dist, classical_derivative(phi.fun))


def pseudo_value(phi: MixedState) -> Scalar:
    total = average_value(phi.fun)
    for n, c in enumerate(phi.dist.component(0)):
        if c and n % 2 == 0:
            total = total + c * zeta(n)
    return total


# ---------------------------------------------------------------------------
# brackets


def _halfline_monomial(n: int, nu: Scalar, side: str) -> Scalar:
    # int_0^inf x^n e^{nu x} = n!/(-nu)^(n+1); int_-inf^0 x^n e^{nu x} = (-1)^n n!/nu^(n+1)
    if side == "+":
        return ((-nu) ** (n + 1)).inverse() * factorial(n)
    return (nu ** (n + 1)).inverse() * ((-1) ** n * factorial(n))


def halfline_inner(u: ExpPoly, v: ExpPoly, side: str) -> Scalar:
    """``int u* v`` over ``(0, inf)`` for side ``'+'`` or ``(-inf, 0)`` for ``'-'``."""
    if side not in ("+", "-"):
        raise ValueError(f"side must be '+' or '-', not {side!r}")
    _check_side(u, side)
    _check_side(v, side)
    total = S_ZERO
    for mu1, p in u.terms:
        pc = xpoly.conj(p)
        for mu2, q in v.terms:
            nu = Scalar.make(mu1[0] + mu2[0], mu2[1] - mu1[1])
            for n, c in enumerate(xpoly.mul(pc, q)):
                if c:
                    total = total + c * _halfline_monomial(n, nu, side)
    return total


def jfun_inner(h1: JFunction, h2: JFunction) -> Scalar:
    return halfline_inner(h1.right, h2.right, "+") + halfline_inner(h1.left, h2.left, "-")


def delta_pairing(m: int, psi: MixedState) -> Scalar:
    """``<delta^(m), Psi> = (-1)^m (Psi^(m))_<0>`` for any mixed state."""
    for _ in range(m):
        psi = dist_derivative(psi)
    value = pseudo_value(psi)
    return -value if m % 2 else value


def _fun_delta(f: JFunction, n: int) -> Scalar:
    # <F, delta^(n)> = (-1)^n (F*^(n))_<0>
    return delta_pairing(n, MixedState(fun=f.conjugate()))


def mixed_bracket(phi: MixedState, psi: MixedState) -> Scalar:
    """Hermitian form on mixed states, assembled block by block."""
    total = delta_bracket(phi.dist, psi.dist)
    if psi.fun:
        g = MixedState(fun=psi.fun)
        for m, c in enumerate(phi.dist.component(0)):
            if c:
                total = total + c.conjugate() * delta_pairing(m, g)
    if phi.fun:
        for n, d in enumerate(psi.dist.component(0)):
            if d:
                total = total + d * _fun_delta(phi.fun, n)
        if psi.fun:
            total = total + jfun_inner(phi.fun, psi.fun)
    return total


def mixed_bracket_uniform(phi: MixedState, psi: MixedState) -> Scalar:
    """Same form via ``<delta^(m), Psi>`` on the whole of ``Psi``; a cross-check."""
    total = S_ZERO
    for m, c in enumerate(phi.dist.component(0)):
        if c:
            total = total + c.conjugate() * delta_pairing(m, psi)
    if phi.fun:
        for n, d in enumerate(psi.dist.component(0)):
            if d:
                total = total + d * _fun_delta(phi.fun, n)
        total = total + jfun_inner(phi.fun, psi.fun)
    return total


def ket_bra_apply(a: MixedState, b: MixedState, w: MixedState) -> MixedState:
    """``(A x B) w = <B, w> A``."""
    return a.scale(mixed_bracket(b, w))
