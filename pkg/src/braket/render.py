"""Canonical text and JSON forms of values.

Text forms are valid input for the expression parser, so every rendered
value can be read back.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomial import Poly
from .scalars import RatFunc, Scalar

# ---------------------------------------------------------------------------
# text


def _rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _grade_factor(k: int) -> tuple[Fraction, int, int]:
    """``(2 pi)^(k/2) = c * pi^e * sqrt2pi^s`` with ``s`` in {-1, 0, 1}."""
    if k % 2 == 0:
        j = k // 2
        return Fraction(2) ** j, j, 0
    if k > 0:
        j = (k - 1) // 2
        return Fraction(2) ** j, j, 1
    j = (k + 1) // 2
    return Fraction(2) ** j, j, -1


def _xpow(d: int) -> str:
    return "X" if d == 1 else f"X^{d}"


def _poly_text(p: Poly) -> str:
    pieces = []
    for d in range(p.degree, -1, -1):
        c = p.coeffs[d]
        if not c:
            continue
        mag = abs(c)
        if d == 0:
            body = _rat(mag)
        elif mag == 1:
            body = _xpow(d)
        else:
            body = f"{_rat(mag)}*{_xpow(d)}"
        pieces.append((c < 0, body))
    return _join(pieces)


def _join(pieces: list[tuple[bool, str]]) -> str:
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _product(mag: Fraction | None, mults: list[str], divs: list[str]) -> str:
    factors = list(mults)
    if mag is not None and (mag != 1 or not factors):
        factors.insert(0, _rat(mag))
    text = "*".join(factors)
    for d in divs:
        text += "/" + d
    return text


def _pi_factors(e: int, s: int) -> tuple[list[str], list[str]]:
    mults, divs = [], []
    if s == 1:
        mults.append("sqrt2pi")
    if e > 0:
        mults.append("pi" if e == 1 else f"pi^{e}")
    if s == -1:
        divs.append("sqrt2pi")
    if e < 0:
        divs.append("pi" if e == -1 else f"pi^{-e}")
    return mults, divs


def _part_pieces(f: RatFunc, imaginary: bool, c: Fraction, e: int, s: int) -> list[tuple[bool, str]]:
    mults, divs = _pi_factors(e, s)
    unit = ["i"] if imaginary else []
    if f.is_polynomial():
        pieces = []
        num = f.num
        for d in range(num.degree, -1, -1):
            a = num.coeffs[d] * c
            if not a:
                continue
            xs = [_xpow(d)] if d else []
            pieces.append((a < 0, _product(abs(a), unit + xs + mults, divs)))
        return pieces
    den = f.den
    den_text = _poly_text(den) if len([a for a in den.coeffs if a]) == 1 else f"({_poly_text(den)})"
    num = f.num.scale(c)
    nonzero = [d for d, a in enumerate(num.coeffs) if a]
    if len(nonzero) == 1:
        d = nonzero[0]
        a = num.coeffs[d]
        xs = [_xpow(d)] if d else []
        return [(a < 0, _product(abs(a), unit + xs + mults, [den_text] + divs))]
    factors = unit + [f"({_poly_text(num)})"] + mults
    return [(False, _product(None, factors, [den_text] + divs))]


def scalar_pieces(s: Scalar) -> list[tuple[bool, str]]:
    pieces: list[tuple[bool, str]] = []
    for k, re, im in reversed(s.terms):
        c, e, sq = _grade_factor(k)
        if re:
            pieces.extend(_part_pieces(re, False, c, e, sq))
        if im:
            pieces.extend(_part_pieces(im, True, c, e, sq))
    return pieces


def render_scalar(s: Scalar) -> str:
    return _join(scalar_pieces(s))


def _coeff_times(c: Scalar, atom: str) -> list[tuple[bool, str]]:
    """Pieces for ``c * atom`` where ``atom`` is a product or empty."""
    pieces = scalar_pieces(c)
    if len(pieces) == 1:
        neg, body = pieces[0]
        if not atom:
            return [(neg, body)]
        if body == "1":
            return [(neg, atom)]
        return [(neg, f"{body}*{atom}")]
    inner = _join(pieces)
    return [(False, f"({inner})*{atom}" if atom else f"({inner})")]


def _xmono(n: int) -> list[str]:
    if n == 0:
        return []
    return ["x" if n == 1 else f"x^{n}"]


def render_wave(f) -> str:
    pieces = []
    for a, p in reversed(f.components):
        for n in range(len(p) - 1, -1, -1):
            c = p[n]
            if not c:
                continue
            atom = _xmono(n) + ([f"w({_rat(a)})"] if a else [])
            pieces.extend(_coeff_times(c, "*".join(atom)))
    return _join(pieces)


def render_dist(phi) -> str:
    pieces = []
    for a, cs in phi.components:
        for n in range(len(cs) - 1, -1, -1):
            c = cs[n]
            if c:
                pieces.extend(_coeff_times(c, f"d({n};{_rat(a)})"))
    return _join(pieces)


def _crat(mu) -> str:
    re, im = mu
    if not im:
        return _rat(re)
    sign = "-" if im < 0 else "+"
    return f"{_rat(re)}{sign}{_rat(abs(im))}i"


def render_exppoly(e) -> str:
    pieces = []
    for mu, p in e.terms:
        for n in range(len(p) - 1, -1, -1):
            c = p[n]
            if c:
                atom = _xmono(n) + [f"exp({_crat(mu)})"]
                pieces.extend(_coeff_times(c, "*".join(atom)))
    return _join(pieces)


def render_jfun(h) -> str:
    if h.is_zero():
        return "0"
    return f"jfun({render_exppoly(h.right)}, {render_exppoly(h.left)})"


def render_mixed(m) -> str:
    parts = []
    if not m.dist.is_zero():
        parts.append(render_dist(m.dist))
    if not m.fun.is_zero():
        parts.append(render_jfun(m.fun))
    if not parts:
        return "0"
    text = parts[0]
    for p in parts[1:]:
        text += " + " + p
    return text


def render(value) -> str:
    from .distributions import ConcentratedDist
    from .jspace import JFunction, MixedState
    from .waves import PolyWave

    if isinstance(value, Scalar):
        return render_scalar(value)
    if isinstance(value, PolyWave):
        return render_wave(value)
    if isinstance(value, ConcentratedDist):
        return render_dist(value)
    if isinstance(value, JFunction):
        return render_jfun(value)
    if isinstance(value, MixedState):
        return render_mixed(value)
    raise TypeError(f"cannot render {type(value).__name__}")


# ---------------------------------------------------------------------------
# JSON


def _rf_json(f: RatFunc) -> dict:
    return {"num": [_rat(c) for c in f.num.coeffs], "den": [_rat(c) for c in f.den.coeffs]}


def scalar_to_json(s: Scalar) -> dict:
    return {
        "terms": [
            {"grade": k, "re": _rf_json(re), "im": _rf_json(im)} for k, re, im in s.terms
        ]
    }


def _rf_from_json(d: dict) -> RatFunc:
    return RatFunc(Poly(Fraction(c) for c in d["num"]), Poly(Fraction(c) for c in d["den"]))


def scalar_from_json(d: dict) -> Scalar:
    total = Scalar(0)
    for t in d["terms"]:
        total = total + Scalar.make(_rf_from_json(t["re"]), _rf_from_json(t["im"]), t["grade"])
    return total


def _exppoly_json(e) -> list:
    return [
        {
            "exponent": {"re": _rat(mu[0]), "im": _rat(mu[1])},
            "coefficients": [scalar_to_json(c) for c in p],
        }
        for mu, p in e.terms
    ]


def to_json(value) -> dict:
    from .distributions import ConcentratedDist
    from .jspace import JFunction, MixedState
    from .waves import PolyWave

    if isinstance(value, Scalar):
        out = {"type": "scalar", "value": scalar_to_json(value)}
    elif isinstance(value, PolyWave):
        out = {
            "type": "wave",
            "components": [
                {"wave_number": _rat(a), "coefficients": [scalar_to_json(c) for c in p]}
                for a, p in value.components
            ],
        }
    elif isinstance(value, ConcentratedDist):
        out = {
            "type": "dist",
            "components": [
                {"support": _rat(a), "coefficients": [scalar_to_json(c) for c in cs]}
                for a, cs in value.components
            ],
        }
    elif isinstance(value, JFunction):
        out = {"type": "jfun", "right": _exppoly_json(value.right), "left": _exppoly_json(value.left)}
    elif isinstance(value, MixedState):
        out = {
            "type": "mixed",
            "dist": to_json(value.dist),
            "fun": to_json(value.fun),
        }
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")
    out["text"] = render(value)
    return out


_RAT = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}
_RATFUNC = {
    "type": "object",
    "required": ["num", "den"],
    "additionalProperties": False,
    "properties": {
        "num": {"type": "array", "items": _RAT},
        "den": {"type": "array", "items": _RAT, "minItems": 1},
    },
}

SCALAR_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["terms"],
    "additionalProperties": False,
    "properties": {
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["grade", "re", "im"],
                "additionalProperties": False,
                "properties": {"grade": {"type": "integer"}, "re": _RATFUNC, "im": _RATFUNC},
            },
        }
    },
}

SOLVE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["alpha", "lambda", "lambda_scalar", "eigenvector", "residual", "verified"],
    "properties": {
        "alpha": _RAT,
        "lambda": _RAT,
        "lambda_scalar": SCALAR_SCHEMA,
        "eigenvector": {"type": "object", "required": ["type", "text"]},
        "residual": {"type": "string"},
        "verified": {"type": "boolean"},
    },
}

BRACKET_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["value", "text"],
    "properties": {"value": SCALAR_SCHEMA, "text": {"type": "string"}},
}
