"""Executable checks of the structural properties of the brackets.

Every suite draws its samples from its own seeded :class:`random.Random`,
so a report is reproducible from ``(seed, samples)``.  All comparisons are
exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable

from .distributions import (
    ConcentratedDist,
    delta_bracket,
    derivative_dist,
    mul_x_dist,
    reflect_dist,
)
from .jspace import ExpPoly, JFunction, MixedState, dist_derivative, mixed_bracket
from .polynomial import Poly
from .render import render
from .scalars import (
    EQUAL,
    GREATER,
    S_ZERO,
    RatFunc,
    Scalar,
    abs_value,
    compare,
    decompose,
    degree,
)
from .waves import PolyWave, derivative_wave, mul_x_wave, reflect_wave, wave_bracket

DEFAULT_SEED = 20260101

SUPPORTS = (Fraction(-2), Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3))
RIGHT_EXPONENTS = ((Fraction(-1), Fraction(0)), (Fraction(-2), Fraction(0)),
                   (Fraction(-1, 2), Fraction(0)), (Fraction(-1), Fraction(1)),
                   (Fraction(-3, 2), Fraction(-2)))
LEFT_EXPONENTS = tuple((-re, im) for re, im in RIGHT_EXPONENTS)


@dataclass
class Report:
    name: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, **witness) -> None:
        self.failures.append({k: _text(v) for k, v in witness.items()})

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
        }

    def to_text(self, limit: int = 5) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.name} ({self.checked} checked, {len(self.failures)} failures)"]
        for w in self.failures[:limit]:
            lines.append("    " + "; ".join(f"{k} = {v}" for k, v in w.items()))
        return "\n".join(lines)


def _text(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    return render(value)


# ---------------------------------------------------------------------------
# generators


def random_poly(rng: random.Random, max_degree: int = 3, nonzero: bool = False) -> Poly:
    while True:
        d = rng.randint(0, max_degree)
        p = Poly(rng.randint(-5, 5) for _ in range(d + 1))
        if p or not nonzero:
            return p


def random_ratfunc(rng: random.Random, max_degree: int = 3, nonzero: bool = False) -> RatFunc:
    return RatFunc(random_poly(rng, max_degree, nonzero), random_poly(rng, max_degree, nonzero=True))


def random_scalar(rng: random.Random, grades=(0,), nonzero: bool = False) -> Scalar:
    """Random scalar whose real and imaginary parts have degree <= 3 in X."""
    while True:
        s = S_ZERO
        for k in rng.sample(list(grades), rng.randint(1, len(grades))):
            im = random_ratfunc(rng) if rng.random() < 0.5 else 0
            s = s + Scalar.make(random_ratfunc(rng), im, grade=k)
        if s or not nonzero:
            return s


def _coeffs(rng: random.Random, max_degree: int, grades) -> list[Scalar]:
    d = rng.randint(0, max_degree)
    return [random_scalar(rng, grades) if rng.random() < 0.7 else S_ZERO for _ in range(d)] + [
        random_scalar(rng, grades, nonzero=True)
    ]


def random_wave(rng, max_degree: int = 6, wave_numbers=SUPPORTS, grades=(0,)) -> PolyWave:
    count = rng.randint(1, 3)
    return PolyWave((rng.choice(wave_numbers), _coeffs(rng, max_degree, grades)) for _ in range(count))


def random_polynomial(rng, max_degree: int = 6, grades=(0,)) -> PolyWave:
    return PolyWave({0: _coeffs(rng, max_degree, grades)})


def random_plane_wave(rng, grades=(0,)) -> PolyWave:
    count = rng.randint(1, 3)
    return PolyWave((rng.choice(SUPPORTS), [random_scalar(rng, grades, nonzero=True)]) for _ in range(count))


def random_dist(rng, max_order: int = 6, supports=SUPPORTS, grades=(0,)) -> ConcentratedDist:
    count = rng.randint(1, 3)
    return ConcentratedDist((rng.choice(supports), _coeffs(rng, max_order, grades)) for _ in range(count))


def random_exppoly(rng, exponents, max_degree: int = 2) -> ExpPoly:
    count = rng.randint(0, 2)
    return ExpPoly((rng.choice(exponents), _coeffs(rng, max_degree, (0,))) for _ in range(count))


def random_jfunction(rng) -> JFunction:
    return JFunction(random_exppoly(rng, RIGHT_EXPONENTS), random_exppoly(rng, LEFT_EXPONENTS))


def random_mixed(rng, max_order: int = 4) -> MixedState:
    dist = random_dist(rng, max_order, supports=(0,)) if rng.random() < 0.8 else ConcentratedDist()
    return MixedState(dist, random_jfunction(rng))


def dist_spanning_set(max_order: int = 6, supports=(Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(2))):
    return [ConcentratedDist.delta(m, a) for a in supports for m in range(max_order + 1)]


# ---------------------------------------------------------------------------
# spaces and operators

SPACES: dict[str, tuple[Callable, Callable]] = {
    "waves": (random_wave, wave_bracket),
    "polynomials": (random_polynomial, wave_bracket),
    "planewaves": (random_plane_wave, wave_bracket),
    "dists": (random_dist, delta_bracket),
    "mixed": (random_mixed, mixed_bracket),
}

OPERATORS: dict[tuple[str, str], Callable] = {
    ("ddx", "waves"): derivative_wave,
    ("ddx", "polynomials"): derivative_wave,
    ("ddx", "planewaves"): derivative_wave,
    ("ddx", "dists"): derivative_dist,
    ("ddx", "mixed"): dist_derivative,
    ("x", "waves"): mul_x_wave,
    ("x", "polynomials"): mul_x_wave,
    ("x", "dists"): mul_x_dist,
    ("reflect", "waves"): reflect_wave,
    ("reflect", "dists"): reflect_dist,
}


def _samples(space: str, samples: int, rng: random.Random):
    gen, _ = SPACES[space]
    return [(gen(rng), gen(rng)) for _ in range(samples)]


def check_hermitian(space: str, samples: int = 50, seed: int = DEFAULT_SEED) -> Report:
    """``<a, b>* == <b, a>`` on random pairs."""
    rng = random.Random(seed)
    _, bracket = SPACES[space]
    report = Report(f"hermitian[{space}]")
    for a, b in _samples(space, samples, rng):
        lhs, rhs = bracket(a, b).conjugate(), bracket(b, a)
        report.checked += 1
        if lhs != rhs:
            report.fail(u=a, v=b, conj_uv=lhs, vu=rhs)
    return report


def check_operator_symmetry(
    op: str, space: str, mode: str = "symmetric", samples: int = 50, seed: int = DEFAULT_SEED
) -> Report:
    """``<op u, v> == <u, op v>`` (symmetric) or ``== -<u, op v>`` (skew).

    For distributions the delta spanning set is checked exhaustively before
    the random pairs.
    """
    if mode not in ("symmetric", "skew"):
        raise ValueError(f"mode must be 'symmetric' or 'skew', not {mode!r}")
    try:
        apply = OPERATORS[(op, space)]
    except KeyError:
        raise ValueError(f"operator {op!r} is not defined on {space!r}") from None
    rng = random.Random(seed)
    _, bracket = SPACES[space]
    report = Report(f"{mode}[{op} on {space}]")
    pairs = []
    if space == "dists":
        basis = dist_spanning_set()
        pairs.extend(product(basis, basis))
    pairs.extend(_samples(space, samples, rng))
    sign = 1 if mode == "symmetric" else -1
    for u, v in pairs:
        lhs = bracket(apply(u), v)
        rhs = bracket(u, apply(v))
        report.checked += 1
        if lhs != rhs * sign:
            report.fail(u=u, v=v, op_u_v=lhs, u_op_v=rhs)
    return report


def check_positivity(space: str, samples: int = 100, seed: int = DEFAULT_SEED, grades=(0,)) -> Report:
    """Self-brackets are positive for nonzero vectors and equal to 0 for zero."""
    rng = random.Random(seed)
    gen, bracket = SPACES[space]
    report = Report(f"positivity[{space}]")
    zero = gen(rng).scale(0)
    report.checked += 1
    if compare(bracket(zero, zero), S_ZERO) != EQUAL:
        report.fail(u=zero, norm=bracket(zero, zero))
    kwargs = {"grades": grades} if space != "mixed" else {}
    for _ in range(samples):
        u = gen(rng, **kwargs)
        if u.is_zero():
            continue
        value = bracket(u, u)
        report.checked += 1
        if not value.is_real() or compare(value, S_ZERO) != GREATER:
            report.fail(u=u, norm=value)
    return report


def check_field_axioms(samples: int = 200, seed: int = DEFAULT_SEED) -> Report:
    """Ordered-field laws on random triples of rational functions."""
    rng = random.Random(seed)
    report = Report("field-axioms")
    zero = RatFunc(0)

    def require(ok: bool, law: str, **values):
        report.checked += 1
        if not ok:
            report.fail(law=law, **{k: Scalar(v) for k, v in values.items()})

    for _ in range(samples):
        f, g, h = (random_ratfunc(rng) for _ in range(3))
        require((f + g) + h == f + (g + h), "additive associativity", f=f, g=g, h=h)
        require((f * g) * h == f * (g * h), "multiplicative associativity", f=f, g=g, h=h)
        require(f * (g + h) == f * g + f * h, "distributivity", f=f, g=g, h=h)
        if f:
            require(f * f.inverse() == 1, "inverse", f=f)
            require(f * f > zero, "squares are positive", f=f)
        signs = [(f - g).sign() < 0, f == g, (f - g).sign() > 0]
        require(sum(signs) == 1, "totality", f=f, g=g)
        if f > zero and g > zero:
            require(f + g > zero and f * g > zero, "positive cone", f=f, g=g)
        if f > zero and g < h:
            require(f * g < f * h, "order and multiplication", f=f, g=g, h=h)
        require(abs_value(f + g) <= abs_value(f) + abs_value(g), "triangle inequality", f=f, g=g)
        require(abs_value(f) >= zero and (abs_value(f) == zero) == (not f), "absolute value", f=f)
        require(degree(f * g) == degree(f) + degree(g), "degree of product", f=f, g=g)
        require(degree(f + g) <= max(degree(f), degree(g)), "degree of sum", f=f, g=g)
        poly, small = decompose(f)
        require(RatFunc(poly) + small == f and degree(small) < 0, "decomposition", f=f)
    x = RatFunc(Poly((0, 1)))
    require(x.inverse() < RatFunc(7) < x, "1/X < 7 < X")
    require(x.inverse() > x.inverse() ** 2, "1/X > 1/X^2")
    require(abs_value(x) + abs_value(-x) >= abs_value(zero), "|X| + |-X| >= |0|")
    return report


def check_x_not_symmetric(samples: int = 50, seed: int = DEFAULT_SEED) -> Report:
    """Multiplication by x is not symmetric on distributions.

    Passes when the symmetry check fails and the witness ``(d', d'')`` at
    the origin is among its failures.
    """
    inner = check_operator_symmetry("x", "dists", "symmetric", samples, seed)
    report = Report("x-not-symmetric[dists]", checked=inner.checked)
    target = (render(ConcentratedDist.delta(1)), render(ConcentratedDist.delta(2)))
    if not any((w["u"], w["v"]) == target for w in inner.failures):
        report.fail(reason="no failure witness (x d', d'') found")
    return report


SUITES: dict[str, Callable[[int, int], list[Report]]] = {
    "hermitian": lambda samples, seed: [
        check_hermitian(s, samples, seed) for s in ("waves", "dists", "mixed")
    ],
    "symmetry": lambda samples, seed: [
        check_operator_symmetry("ddx", "dists", "skew", samples, seed),
        check_operator_symmetry("ddx", "mixed", "skew", samples, seed),
        check_operator_symmetry("ddx", "planewaves", "skew", samples, seed),
        check_operator_symmetry("x", "waves", "symmetric", samples, seed),
        check_operator_symmetry("reflect", "dists", "symmetric", samples, seed),
        check_operator_symmetry("reflect", "waves", "symmetric", samples, seed),
        check_x_not_symmetric(samples, seed),
    ],
    "positivity": lambda samples, seed: [
        check_positivity(s, samples, seed) for s in ("polynomials", "waves", "dists")
    ],
    "field": lambda samples, seed: [check_field_axioms(samples, seed)],
}


def run_suite(name: str, samples: int = 50, seed: int = DEFAULT_SEED) -> list[Report]:
    if name == "all":
        return [r for key in SUITES for r in SUITES[key](samples, seed)]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return SUITES[name](samples, seed)
