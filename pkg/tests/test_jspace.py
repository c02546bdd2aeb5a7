import random
from fractions import Fraction

import pytest

from braket.distributions import ConcentratedDist, delta_bracket, zeta
from braket.jspace import (
    ExpPoly,
    JFunction,
    MixedState,
    average_value,
    classical_derivative,
    dist_derivative,
    halfline_inner,
    jfun_inner,
    jump,
    ket_bra_apply,
    mixed_bracket,
    mixed_bracket_uniform,
    pseudo_value,
)
from braket.scalars import S_ZERO, DomainError, Scalar
from braket.verification import DEFAULT_SEED, random_jfunction, random_mixed

E = ExpPoly.exp
DELTA = MixedState(dist=ConcentratedDist.delta())


def jf(right=None, left=None):
    return JFunction(right or ExpPoly(), left or ExpPoly())


def mixed(right=None, left=None, dist=None):
    return MixedState(dist or ConcentratedDist(), jf(right, left))


def test_decay_is_enforced():
    with pytest.raises(DomainError):
        jf(E(1))
    with pytest.raises(DomainError):
        jf(left=E(-1))
    with pytest.raises(DomainError):
        jf(E(0))
    with pytest.raises(DomainError):
        MixedState(dist=ConcentratedDist.delta(0, 1))


def test_values_at_origin():
    assert average_value(jf(E(-1), E(1))) == Scalar(1)
    assert jump(jf(E(-1))) == Scalar(1)
    assert jump(jf(E(-1), E(1))) == S_ZERO
    assert jump(jf(E(-1, [2]), E(1, [3]))) == Scalar(-1)


def test_classical_derivative():
    assert classical_derivative(jf(E(-1))) == jf(E(-1, [-1]))
    assert classical_derivative(jf(left=E(1, [0, 1]))) == jf(left=E(1, [1, 1]))
    assert classical_derivative(JFunction()) == JFunction()


def test_dist_derivative_examples():
    h = mixed(E(-1), E(1))
    assert dist_derivative(h) == mixed(E(-1, [-1]), E(1))
    assert dist_derivative(mixed(E(-1))) == mixed(E(-1, [-1]), dist=ConcentratedDist.delta())
    assert dist_derivative(DELTA) == MixedState(dist=ConcentratedDist.delta(1))


def test_halfline_examples():
    assert halfline_inner(E(-1), E(-1), "+") == Scalar(Fraction(1, 2))
    assert halfline_inner(E(-1, [0, 1]), E(-1), "+") == Scalar(Fraction(1, 4))
    assert halfline_inner(E(1), E(1), "-") == Scalar(Fraction(1, 2))
    with pytest.raises(DomainError):
        halfline_inner(E(1), E(1), "+")


def test_halfline_against_integration_by_parts():
    # int_0^inf x^2 e^{-3x} dx = 2/27, int_{-inf}^0 x e^{2x} dx = -1/4
    assert halfline_inner(E(-1, [0, 1]), E(-2, [0, 1]), "+") == Scalar(Fraction(2, 27))
    assert halfline_inner(E(1), E(1, [0, 1]), "-") == Scalar(Fraction(-1, 4))


def test_halfline_complex_exponent():
    # int_0^inf e^{(-1+i)x}* e^{(-1+i)x} = int e^{-2x} = 1/2
    u = E((-1, 1))
    assert halfline_inner(u, u, "+") == Scalar(Fraction(1, 2))
    # int_0^inf e^{-x} e^{(-1+i)x} dx = 1/(2 - i) = (2 + i)/5
    assert halfline_inner(E(-1), u, "+") == Scalar.make(Fraction(2, 5), Fraction(1, 5))
    assert halfline_inner(u, E(-1), "+") == Scalar.make(Fraction(2, 5), Fraction(-1, 5))


def test_jfun_inner_examples():
    h = jf(E(-1), E(1))
    assert jfun_inner(h, h) == Scalar(1)
    assert jfun_inner(jf(E(-1)), jf(left=E(1))) == S_ZERO
    assert jfun_inner(jf(E(-1, [0, 1])), jf(E(-1))) == Scalar(Fraction(1, 4))


def test_pseudo_value_examples():
    assert pseudo_value(mixed(E(-1), E(1))) == Scalar(1)
    assert pseudo_value(DELTA) == zeta(0)
    assert pseudo_value(MixedState(dist=ConcentratedDist.delta(1))) == S_ZERO


def test_mixed_bracket_examples():
    assert mixed_bracket(DELTA, mixed(E(-2))) == Scalar(Fraction(1, 2))
    assert mixed_bracket(DELTA, mixed(left=E(2))) == Scalar(Fraction(1, 2))
    d1 = MixedState(dist=ConcentratedDist.delta(1))
    assert mixed_bracket(d1, mixed(E(-1))) == Scalar(Fraction(1, 2)) - zeta(0)
    assert mixed_bracket(DELTA, DELTA) == zeta(0)


def test_mixed_bracket_restrictions():
    rng = random.Random(DEFAULT_SEED)
    for _ in range(20):
        f, g = random_jfunction(rng), random_jfunction(rng)
        assert mixed_bracket(MixedState(fun=f), MixedState(fun=g)) == jfun_inner(f, g)
        phi, psi = random_mixed(rng), random_mixed(rng)
        assert mixed_bracket(MixedState(dist=phi.dist), MixedState(dist=psi.dist)) == delta_bracket(phi.dist, psi.dist)


def test_mixed_bracket_hermitian_and_uniform():
    rng = random.Random(DEFAULT_SEED + 2)
    for _ in range(30):
        a, b = random_mixed(rng), random_mixed(rng)
        assert mixed_bracket(a, b) == mixed_bracket(b, a).conjugate()
        assert mixed_bracket(a, b) == mixed_bracket_uniform(a, b)


def test_delta_on_continuous_function_is_its_value():
    g = mixed(E(-3, [2, 5]), E(1, [2]))
    assert mixed_bracket(DELTA, g) == Scalar(2)


def test_ket_bra_examples():
    y = mixed(E(-1), E(1))
    assert ket_bra_apply(DELTA, DELTA, y) == DELTA
    assert ket_bra_apply(DELTA, DELTA, DELTA) == DELTA.scale(zeta(0))
    assert ket_bra_apply(DELTA, DELTA, MixedState()) == MixedState()


def test_projector_is_symmetric():
    rng = random.Random(DEFAULT_SEED + 3)
    for _ in range(15):
        u, a, b = random_mixed(rng), random_mixed(rng), random_mixed(rng)
        lhs = mixed_bracket(ket_bra_apply(u, u, a), b)
        rhs = mixed_bracket(a, ket_bra_apply(u, u, b))
        assert lhs == rhs


def test_reflection_is_symmetric_on_parity_eigenvectors():
    even = mixed(E(-1, [1, 2]), E(1, [1, -2]), ConcentratedDist.delta(2))
    odd = mixed(E(-1, [3]), E(1, [-3]), ConcentratedDist.delta(1))
    assert even.reflect() == even
    assert odd.reflect() == -odd
    assert mixed_bracket(even, odd) == S_ZERO
    assert mixed_bracket(even.reflect(), odd) == mixed_bracket(even, odd.reflect())
