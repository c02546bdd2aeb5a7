"""``braket`` command line.

Exit codes: 0 success, 1 parse error, 2 domain or type error, 3 failed check.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from ..distributions import (
    ConcentratedDist,
    delta_bracket,
    derivative_dist,
    mul_x_dist,
    reflect_dist,
    translate_dist,
)
from ..fourier import fourier, inverse_fourier
from ..jspace import JFunction, MixedState, as_mixed, dist_derivative, mixed_bracket
from ..render import render, scalar_to_json, to_json
from ..scalars import DomainError, Scalar
from ..schroedinger import residual, solve_bound_state
from ..verification import DEFAULT_SEED, SUITES, run_suite
from ..waves import (
    PolyWave,
    derivative_wave,
    mul_x_wave,
    phase_translate,
    reflect_wave,
    translate_wave,
    wave_bracket,
)
from . import parser as P

EXIT_PARSE, EXIT_DOMAIN, EXIT_CHECK = 1, 2, 3


def _fail(message: str, code: int):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _evaluate(text: str):
    try:
        return P.evaluate_text(text)
    except P.ParseError as exc:
        _fail(str(exc), EXIT_PARSE)
    except (P.TypeCheckError, DomainError) as exc:
        _fail(str(exc), EXIT_DOMAIN)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        _fail(f"not a rational number: {text!r}", EXIT_PARSE)


def _emit(value, as_json: bool, extra: dict | None = None):
    if as_json:
        payload = to_json(value) if not isinstance(value, Scalar) else {
            "value": scalar_to_json(value),
            "text": render(value),
        }
        if extra:
            payload.update(extra)
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(render(value))


@click.group()
def main():
    """Exact brackets of distributions with finite discrete support."""


_EXPR_ARGS = {"ignore_unknown_options": True}


@main.command("eval", context_settings=_EXPR_ARGS)
@click.argument("expr")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def eval_cmd(expr, as_json):
    """Evaluate an expression to canonical form."""
    t, value = _evaluate(expr)
    _emit(value, as_json, {"kind": t} if as_json else None)


_BRACKET_KINDS = {P.DIST, P.JFUN, P.MIXED}


@main.command(context_settings=_EXPR_ARGS)
@click.argument("expr_a")
@click.argument("expr_b")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def bracket(expr_a, expr_b, as_json):
    """Bracket <A, B>, antilinear in A."""
    ta, a = _evaluate(expr_a)
    tb, b = _evaluate(expr_b)
    try:
        if ta == P.SCALAR or tb == P.SCALAR:
            raise P.TypeCheckError("brackets take vectors, not scalars")
        if ta == tb == P.WAVE:
            value = wave_bracket(a, b)
        elif ta == tb == P.DIST:
            value = delta_bracket(a, b)
        elif ta in _BRACKET_KINDS and tb in _BRACKET_KINDS:
            value = mixed_bracket(as_mixed(a), as_mixed(b))
        else:
            raise P.TypeCheckError(f"no bracket between a {ta} and a {tb}")
    except (P.TypeCheckError, DomainError) as exc:
        _fail(str(exc), EXIT_DOMAIN)
    _emit(value, as_json)


def _apply(op: str, value, by: Fraction | None):
    if op in ("translate", "phase") and by is None:
        raise P.TypeCheckError(f"{op} needs --by")
    if isinstance(value, Scalar):
        raise P.TypeCheckError("operators act on vectors, not scalars")
    if isinstance(value, PolyWave):
        table = {
            "ddx": derivative_wave,
            "mulx": mul_x_wave,
            "reflect": reflect_wave,
            "translate": lambda f: translate_wave(f, by),
            "phase": lambda f: phase_translate(f, by),
            "fourier": fourier,
        }
    elif isinstance(value, ConcentratedDist):
        table = {
            "ddx": derivative_dist,
            "mulx": mul_x_dist,
            "reflect": reflect_dist,
            "translate": lambda f: translate_dist(f, by),
            "ifourier": inverse_fourier,
        }
    else:
        m = as_mixed(value)
        table = {
            "ddx": dist_derivative,
            "mulx": _mul_x_mixed,
            "reflect": lambda s: s.reflect(),
        }
        value = m
    if op not in table:
        raise P.TypeCheckError(f"{op} is not defined on {type(value).__name__}")
    return table[op](value)


def _mul_x_mixed(m: MixedState) -> MixedState:
    from ..jspace import ExpPoly

    xe = ExpPoly([((0, 0), [0, 1])])
    return MixedState(mul_x_dist(m.dist), JFunction(m.fun.right * xe, m.fun.left * xe))


@main.command(context_settings=_EXPR_ARGS)
@click.argument("op", type=click.Choice(["ddx", "mulx", "reflect", "translate", "phase", "fourier", "ifourier"]))
@click.argument("expr")
@click.option("--by", "by", default=None, help="Shift for translate / phase (rational).")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def apply(op, expr, by, as_json):
    """Apply an operator to an expression."""
    _, value = _evaluate(expr)
    shift = _rational(by) if by is not None else None
    try:
        result = _apply(op, value, shift)
    except (P.TypeCheckError, DomainError) as exc:
        _fail(str(exc), EXIT_DOMAIN)
    _emit(result, as_json)


@main.command("solve-point")
@click.option("--alpha", required=True, help="Coupling alpha = p/q (negative).")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def solve_point(alpha, as_json):
    """Bound state of y'' + lambda y = alpha (delta x delta) y."""
    a = _rational(alpha)
    try:
        lam, y = solve_bound_state(a)
    except DomainError as exc:
        _fail(str(exc), EXIT_DOMAIN)
    res = residual(y, lam, a)
    verified = res.is_zero()
    lam_text = str(lam.numerator) if lam.denominator == 1 else f"{lam.numerator}/{lam.denominator}"
    if as_json:
        click.echo(json.dumps({
            "alpha": f"{a.numerator}" if a.denominator == 1 else f"{a.numerator}/{a.denominator}",
            "lambda": lam_text,
            "lambda_scalar": scalar_to_json(Scalar(lam)),
            "eigenvector": to_json(y),
            "residual": render(res),
            "verified": verified,
        }, indent=2))
    else:
        click.echo(f"lambda = {lam_text}")
        click.echo(f"y = {render(y)}")
        click.echo("residual = 0 (verified)" if verified else f"residual = {render(res)}")
    if not verified:
        sys.exit(EXIT_CHECK)


@main.command()
@click.argument("suite", default="all", type=click.Choice(list(SUITES) + ["all"]))
@click.option("--seed", type=int, default=DEFAULT_SEED, envvar="BRAKET_SEED", show_default=True)
@click.option("--samples", type=int, default=50, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def check(suite, seed, samples, as_json):
    """Run verification suites; exit 3 if any fails."""
    reports = run_suite(suite, samples, seed)
    ok = all(r.passed for r in reports)
    if as_json:
        click.echo(json.dumps({
            "seed": seed,
            "samples": samples,
            "passed": ok,
            "reports": [r.to_dict() for r in reports],
        }, indent=2))
    else:
        for r in reports:
            click.echo(r.to_text())
    if not ok:
        sys.exit(EXIT_CHECK)


if __name__ == "__main__":
    main()
