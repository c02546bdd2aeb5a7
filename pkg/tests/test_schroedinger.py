import random
from fractions import Fraction

import pytest

from braket.distributions import ConcentratedDist
from braket.jspace import ExpPoly, JFunction, MixedState
from braket.scalars import S_ZERO, DomainError, Scalar
from braket.schroedinger import (
    DELTA,
    PointProblem,
    boundary_conditions,
    bound_state_vector,
    expanded_residual,
    residual,
    solve_bound_state,
)
from braket.verification import DEFAULT_SEED, random_dist, random_mixed

E = ExpPoly.exp


def state(right, left, dist=None):
    return MixedState(dist or ConcentratedDist(), JFunction(right, left))


@pytest.mark.parametrize(
    "alpha, lam, beta",
    [(-2, -1, 1), (Fraction(-1, 2), Fraction(-1, 16), Fraction(1, 4)), (-6, -9, 3)],
)
def test_solve_bound_state(alpha, lam, beta):
    got_lam, y = solve_bound_state(alpha)
    assert got_lam == lam
    assert y == state(E(-beta), E(beta))
    assert residual(y, got_lam, alpha) == MixedState()


def test_residual_examples():
    y = state(E(-1), E(1))
    assert residual(y, -1, -2).is_zero()
    assert residual(MixedState(), 5, -3).is_zero()
    assert not residual(y + DELTA, -1, -2).is_zero()


def test_wrong_eigenvalue_leaves_function_part():
    y = state(E(-1), E(1))
    r = residual(y, -2, -2)
    assert r.dist.is_zero()
    assert r.fun == JFunction(E(-1, [-1]), E(1, [-1]))


def test_no_bound_state_for_repulsive_coupling():
    with pytest.raises(DomainError, match="no bound state"):
        solve_bound_state(1)
    with pytest.raises(DomainError):
        solve_bound_state(0)


def test_point_problem_beta():
    assert PointProblem(Fraction(-6), Scalar(-9)).beta == 3


def test_boundary_conditions():
    assert boundary_conditions(state(E(-1), E(1)), -2) == (S_ZERO, S_ZERO)
    c1, c2 = boundary_conditions(state(E(-1), E(1, [2])), -2)
    assert c2 == Scalar(-1)
    c1, c2 = boundary_conditions(state(E(-2), E(2)), -2)
    assert c1 == Scalar(2) and c2 == S_ZERO
    with pytest.raises(DomainError):
        boundary_conditions(DELTA, -2)


def test_no_delta_part_survives():
    rng = random.Random(DEFAULT_SEED)
    _, y = solve_bound_state(-2)
    for _ in range(25):
        phi = random_dist(rng, 4, supports=(0,))
        if phi.is_zero():
            continue
        assert not residual(y + MixedState(dist=phi), -1, -2).is_zero()


def test_residual_matches_hand_expansion():
    rng = random.Random(DEFAULT_SEED + 5)
    for _ in range(25):
        y = random_mixed(rng)
        lam = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        alpha = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        assert residual(y, lam, alpha) == expanded_residual(y, lam, alpha)


def test_residual_is_linear():
    _, y = solve_bound_state(-2)
    z = y + DELTA
    for c in (Fraction(3), Fraction(-1, 2)):
        assert residual(z.scale(c), -1, -2) == residual(z, -1, -2).scale(c)
    assert bound_state_vector(1).scale(Fraction(5)) == state(E(-1, [5]), E(1, [5]))
