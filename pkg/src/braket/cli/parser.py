"""Expression language for the command line.

Grammar::

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := base ('^' int)?
    base   := int | 'i' | 'X' | 'pi' | 'sqrt2pi' | 'x' | atom | '(' expr ')' | '-' factor
    atom   := 'd(' int ';' rat ')' | 'w(' rat ')' | 'step' | 'exp(' crat ')'
            | 'jfun(' expr ',' expr ')'
    rat    := ['-'] int ('/' int)?
    crat   := rat | rat ('+'|'-') rat 'i'

``d(m;a)`` is the m-th derivative of delta at ``a``, ``w(a)`` the plane wave
``e^{iax}``, ``step`` the unit step, ``exp(mu)`` the function ``e^{mu x}``
and ``jfun(f, g)`` glues ``f`` on ``x > 0`` to ``g`` on ``x < 0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..distributions import ConcentratedDist, mul_x_dist
from ..jspace import ExpPoly, JFunction, MixedState
from ..scalars import DomainError, I, PI, SQRT2PI, X, Scalar
from ..waves import PolyWave


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"syntax error at column {pos + 1}: {message}")
        self.pos = pos


class TypeCheckError(ValueError):
    pass


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Const:
    name: str  # i, X, pi, sqrt2pi, x, step


@dataclass(frozen=True)
class Delta:
    order: int
    at: Fraction


@dataclass(frozen=True)
class Wave:
    number: Fraction


@dataclass(frozen=True)
class Exp:
    re: Fraction
    im: Fraction


@dataclass(frozen=True)
class JFun:
    right: "Expr"
    left: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Num, Const, Delta, Wave, Exp, JFun, Neg, BinOp, Pow]

CONSTANTS = ("i", "X", "pi", "sqrt2pi", "x", "step")

# ---------------------------------------------------------------------------
# lexer

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in "+-*/^();,":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append(("sym", ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def _advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def _is(self, kind: str, value: str | None = None) -> bool:
        k, v, _ = self.tok
        return k == kind and (value is None or v == value)

    def _expect(self, kind: str, value: str | None = None):
        if not self._is(kind, value):
            want = value if value is not None else kind
            got = self.tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", self.tok[2])
        return self._advance()

    def parse(self) -> Expr:
        node = self.expr()
        if not self._is("end"):
            raise ParseError(f"unexpected {self.tok[1]!r}", self.tok[2])
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self._is("sym", "+") or self._is("sym", "-"):
            op = self._advance()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self._is("sym", "*") or self._is("sym", "/"):
            op = self._advance()[1]
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Expr:
        node = self.base()
        if self._is("sym", "^"):
            self._advance()
            sign = -1 if self._is("sym", "-") and self._advance() else 1
            node = Pow(node, sign * int(self._expect("int")[1]))
        return node

    def base(self) -> Expr:
        kind, value, pos = self.tok
        if kind == "int":
            self._advance()
            return Num(int(value))
        if kind == "sym" and value == "(":
            self._advance()
            node = self.expr()
            self._expect("sym", ")")
            return node
        if kind == "sym" and value == "-":
            self._advance()
            return Neg(self.factor())
        if kind == "name":
            if value in CONSTANTS:
                self._advance()
                return Const(value)
            if value == "d":
                self._advance()
                self._expect("sym", "(")
                order = int(self._expect("int")[1])
                self._expect("sym", ";")
                at = self.rat()
                self._expect("sym", ")")
                return Delta(order, at)
            if value == "w":
                self._advance()
                self._expect("sym", "(")
                a = self.rat()
                self._expect("sym", ")")
                return Wave(a)
            if value == "exp":
                self._advance()
                self._expect("sym", "(")
                re_, im = self.crat()
                self._expect("sym", ")")
                return Exp(re_, im)
            if value == "jfun":
                self._advance()
                self._expect("sym", "(")
                right = self.expr()
                self._expect("sym", ",")
                left = self.expr()
                self._expect("sym", ")")
                return JFun(right, left)
            raise ParseError(f"unknown name {value!r}", pos)
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos)

    def rat(self) -> Fraction:
        sign = -1 if self._is("sym", "-") and self._advance() else 1
        num = int(self._expect("int")[1])
        den = 1
        if self._is("sym", "/"):
            self._advance()
            tok = self._expect("int")
            den = int(tok[1])
            if den == 0:
                raise ParseError("zero denominator", tok[2])
        return Fraction(sign * num, den)

    def crat(self) -> tuple[Fraction, Fraction]:
        first = self.rat()
        if self._is("name", "i"):
            self._advance()
            return Fraction(0), first
        if self._is("sym", "+") or self._is("sym", "-"):
            sign = 1 if self._advance()[1] == "+" else -1
            second = self.rat()
            self._expect("name", "i")
            return first, sign * second
        return first, Fraction(0)


def parse(text: str) -> Expr:
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# printing

_SUM, _PROD, _UNARY, _POW, _ATOM = range(5)


def _level(node: Expr) -> int:
    if isinstance(node, BinOp):
        return _SUM if node.op in "+-" else _PROD
    if isinstance(node, Neg):
        return _UNARY
    if isinstance(node, Pow):
        return _POW
    return _ATOM


def _rat_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _wrap(node: Expr, ok: bool) -> str:
    text = unparse(node)
    return text if ok else f"({text})"


def unparse(node: Expr) -> str:
    """Text form of an AST; ``parse(unparse(t)) == t``."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Const):
        return node.name
    if isinstance(node, Delta):
        return f"d({node.order};{_rat_text(node.at)})"
    if isinstance(node, Wave):
        return f"w({_rat_text(node.number)})"
    if isinstance(node, Exp):
        if not node.im:
            return f"exp({_rat_text(node.re)})"
        sign = "-" if node.im < 0 else "+"
        return f"exp({_rat_text(node.re)}{sign}{_rat_text(abs(node.im))}i)"
    if isinstance(node, JFun):
        return f"jfun({unparse(node.right)}, {unparse(node.left)})"
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, _level(node.operand) >= _UNARY)
    if isinstance(node, Pow):
        return f"{_wrap(node.base, _level(node.base) == _ATOM)}^{node.exponent}"
    if isinstance(node, BinOp):
        lvl = _SUM if node.op in "+-" else _PROD
        left = _wrap(node.left, _level(node.left) >= lvl)
        right = _wrap(node.right, _level(node.right) > lvl)
        if lvl == _SUM:
            return f"{left} {node.op} {right}"
        return f"{left}{node.op}{right}"
    raise TypeError(f"not an expression node: {node!r}")


# ---------------------------------------------------------------------------
# types

SCALAR, WAVE, DIST, JFUN, MIXED = "scalar", "wave", "dist", "jfun", "mixed"

_FUNCTION_LIKE = {SCALAR, WAVE, JFUN}


def infer_type(node: Expr) -> str:
    if isinstance(node, Num):
        return SCALAR
    if isinstance(node, Const):
        if node.name == "x":
            return WAVE
        if node.name == "step":
            return JFUN
        return SCALAR
    if isinstance(node, Delta):
        return DIST
    if isinstance(node, Wave):
        return WAVE
    if isinstance(node, (Exp, JFun)):
        if isinstance(node, JFun):
            for arg in (node.right, node.left):
                if infer_type(arg) not in _FUNCTION_LIKE:
                    raise TypeCheckError("jfun arguments must be functions")
        return JFUN
    if isinstance(node, Neg):
        return infer_type(node.operand)
    if isinstance(node, Pow):
        t = infer_type(node.base)
        if t == SCALAR:
            return t
        if node.exponent < 0:
            raise TypeCheckError(f"negative power of a {t}")
        if t in (DIST, MIXED) and node.exponent != 1:
            raise TypeCheckError("product of distributions")
        if node.exponent == 0:
            return SCALAR
        return t
    if isinstance(node, BinOp):
        a, b = infer_type(node.left), infer_type(node.right)
        if node.op in "+-":
            return _sum_type(a, b)
        if node.op == "/":
            if b != SCALAR:
                raise TypeCheckError(f"division by a {b}")
            return a
        return _product_type(a, b)
    raise TypeError(f"not an expression node: {node!r}")


def _sum_type(a: str, b: str) -> str:
    if a == b:
        return a
    pair = {a, b}
    if pair <= {SCALAR, WAVE}:
        return WAVE
    if pair <= _FUNCTION_LIKE:
        return JFUN
    return MIXED


def _product_type(a: str, b: str) -> str:
    if a == SCALAR:
        return b
    if b == SCALAR:
        return a
    pair = {a, b}
    if a == DIST and b == DIST:
        raise TypeCheckError("product of distributions")
    if pair == {WAVE}:
        return WAVE
    if pair == {WAVE, DIST}:
        return DIST
    if pair <= _FUNCTION_LIKE:
        return JFUN
    raise TypeCheckError(f"product of a {a} and a {b}")


# ---------------------------------------------------------------------------
# evaluation


def _to_jfun(value) -> JFunction:
    if isinstance(value, JFunction):
        return value
    if isinstance(value, Scalar):
        e = ExpPoly([((0, 0), [value])])
        return JFunction(e, e, check=False)
    if isinstance(value, PolyWave):
        e = ExpPoly([((0, a), p) for a, p in value.components])
        return JFunction(e, e, check=False)
    raise TypeCheckError(f"{type(value).__name__} is not a function")


def _to_mixed(value) -> MixedState:
    if isinstance(value, MixedState):
        return value
    if isinstance(value, ConcentratedDist):
        return MixedState(dist=value)
    return MixedState(fun=_to_jfun(value))


def _to_wave(value) -> PolyWave:
    if isinstance(value, PolyWave):
        return value
    return PolyWave.polynomial([value])


def _add(a, b, t: str):
    if t == SCALAR:
        return a + b
    if t == WAVE:
        return _to_wave(a) + _to_wave(b)
    if t == DIST:
        return a + b
    if t == JFUN:
        return _to_jfun(a) + _to_jfun(b)
    return _to_mixed(a) + _to_mixed(b)


def _scale(value, c: Scalar):
    if isinstance(value, Scalar):
        return value * c
    return value.scale(c)


def _mul(a, b, t: str):
    if isinstance(a, Scalar):
        return _scale(b, a)
    if isinstance(b, Scalar):
        return _scale(a, b)
    if t == WAVE:
        return a * b
    if t == DIST:
        wave, dist = (a, b) if isinstance(a, PolyWave) else (b, a)
        return _wave_times_dist(wave, dist)
    return _to_jfun(a) * _to_jfun(b)


def _wave_times_dist(wave: PolyWave, dist: ConcentratedDist) -> ConcentratedDist:
    if any(a for a in wave.wave_numbers):
        raise DomainError("only polynomials in x multiply distributions")
    result = ConcentratedDist()
    power = dist
    for c in wave.component(0):
        if c:
            result = result + power.scale(c)
        power = mul_x_dist(power)
    return result


def _eval(node: Expr):
    if isinstance(node, Num):
        return Scalar(node.value)
    if isinstance(node, Const):
        if node.name == "i":
            return I
        if node.name == "X":
            return X
        if node.name == "pi":
            return PI
        if node.name == "sqrt2pi":
            return SQRT2PI
        if node.name == "x":
            return PolyWave.monomial(1)
        return JFunction(ExpPoly.exp(0), ExpPoly(), check=False)  # step
    if isinstance(node, Delta):
        return ConcentratedDist.delta(node.order, node.at)
    if isinstance(node, Wave):
        return PolyWave.monomial(0, node.number)
    if isinstance(node, Exp):
        e = ExpPoly.exp((node.re, node.im))
        return JFunction(e, e, check=False)
    if isinstance(node, JFun):
        return JFunction(_to_jfun(_eval(node.right)).right, _to_jfun(_eval(node.left)).left, check=False)
    if isinstance(node, Neg):
        return _scale(_eval(node.operand), Scalar(-1))
    if isinstance(node, Pow):
        base = _eval(node.base)
        t = infer_type(node.base)
        if t == SCALAR:
            return base ** node.exponent
        if node.exponent == 0:
            return Scalar(1)
        result = base
        for _ in range(node.exponent - 1):
            result = _mul(result, base, t)
        return result
    if isinstance(node, BinOp):
        t = infer_type(node)
        a, b = _eval(node.left), _eval(node.right)
        if node.op == "+":
            return _add(a, b, t)
        if node.op == "-":
            return _add(a, _scale(b, Scalar(-1)), t)
        if node.op == "/":
            return _scale(a, b.inverse())
        return _mul(a, b, t)
    raise TypeError(f"not an expression node: {node!r}")


def finalize(value, t: str):
    """Check the decay conditions of function parts and return the value."""
    if t == JFUN:
        return value.validate()
    if t == MIXED:
        value.fun.validate()
    return value


def evaluate(node: Expr):
    """Type-check and evaluate; returns ``(type, value)``."""
    t = infer_type(node)
    value = _eval(node)
    if t == MIXED:
        value = _to_mixed(value)
    return t, finalize(value, t)


def evaluate_text(text: str):
    return evaluate(parse(text))
