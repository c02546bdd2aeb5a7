"""Bound state of ``y'' + lambda*y = alpha*(delta x delta) y`` on the line.

Everything goes through the general operations of :mod:`braket.jspace`:
the second derivative is taken in the sense of distributions and the
point interaction is the ket-bra operator ``delta x delta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .distributions import ConcentratedDist, delta_bracket, derivative_dist
from .jspace import (
    ExpPoly,
    JFunction,
    MixedState,
    dist_derivative,
    ket_bra_apply,
)
from .scalars import DomainError, Scalar

DELTA = MixedState(dist=ConcentratedDist.delta())


@dataclass(frozen=True)
class PointProblem:
    alpha: Fraction
    lam: Scalar

    @property
    def beta(self) -> Fraction:
        return -Fraction(self.alpha) / 2


def residual(y: MixedState, lam, alpha) -> MixedState:
    """``y'' + lam*y - alpha*<delta, y>*delta``; zero iff ``y`` is an eigenvector."""
    lam = Scalar.of(lam)
    alpha = Fraction(alpha)
    ypp = dist_derivative(dist_derivative(y))
    return ypp + y.scale(lam) - ket_bra_apply(DELTA, DELTA, y).scale(Scalar(alpha))


def expanded_residual(y: MixedState, lam, alpha) -> MixedState:
    """The residual written out by hand from the jump relations at the origin."""
    lam = Scalar.of(lam)
    alpha = Scalar(Fraction(alpha))
    f, g, phi = y.fun.right, y.fun.left, y.dist
    f0, g0 = f.value_at_zero(), g.value_at_zero()
    df0, dg0 = f.derivative().value_at_zero(), g.derivative().value_at_zero()
    fun = JFunction(
        f.derivative().derivative() + f.scale(lam),
        g.derivative().derivative() + g.scale(lam),
        check=False,
    )
    dist = (
        ConcentratedDist({0: [df0 - dg0, f0 - g0]})
        + derivative_dist(derivative_dist(phi))
        + phi.scale(lam)
    )
    potential = alpha * (f0 + g0) * Fraction(1, 2) + alpha * delta_bracket(ConcentratedDist.delta(), phi)
    return MixedState(dist - ConcentratedDist.delta(0, 0, potential), fun)


def bound_state_vector(beta) -> MixedState:
    """``eta e^{-beta x} + (1 - eta) e^{beta x}``."""
    beta = Fraction(beta)
    return MixedState(fun=JFunction(ExpPoly.exp(-beta), ExpPoly.exp(beta)))


def solve_bound_state(alpha) -> tuple[Fraction, MixedState]:
    """Eigenvalue ``-alpha^2/4`` and eigenvector for an attractive coupling ``alpha < 0``."""
    alpha = Fraction(alpha)
    if alpha >= 0:
        raise DomainError("no bound state in representable space (requires alpha < 0)")
    beta = -alpha / 2
    lam = -beta * beta
    y = bound_state_vector(beta)
    if not residual(y, lam, alpha).is_zero():
        raise AssertionError(f"residual does not vanish for alpha = {alpha}")
    return lam, y


def boundary_conditions(y: MixedState, alpha) -> tuple[Scalar, Scalar]:
    """``((alpha/2)(f0 + g0) - (f0' - g0'), f0 - g0)`` for a pure function ``y``."""
    if not y.dist.is_zero():
        raise DomainError("an eigenvector has no distribution part at the origin")
    f, g = y.fun.right, y.fun.left
    f0, g0 = f.value_at_zero(), g.value_at_zero()
    df0, dg0 = f.derivative().value_at_zero(), g.derivative().value_at_zero()
    half_alpha = Scalar(Fraction(alpha) / 2)
    return half_alpha * (f0 + g0) - (df0 - dg0), f0 - g0
