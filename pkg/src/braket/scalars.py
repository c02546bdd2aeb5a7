"""The ordered field F of real rational functions of X and its extensions.

:class:`RatFunc` is an element of F, kept in canonical form (coprime,
monic denominator).  F is totally ordered by the sign of a function for
all sufficiently large X, which makes positive powers of X infinitely
large and negative-degree functions infinitesimal.

:class:`Scalar` is what brackets and coefficients live in: a finite sum
``sum_k b**k * (re_k + i*im_k)`` where ``b = sqrt(2*pi)`` and each
``re_k``, ``im_k`` is a RatFunc.  Powers of ``b`` are linearly
independent over F (pi is transcendental) so the graded representation
is canonical and structural equality is value equality.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

from gmpy2 import mpq
from mpmath.libmp import mpf_pi, to_man_exp

from .polynomial import Poly, gcd, to_fraction
from .polynomial import ONE as _P1
from .polynomial import X as _PX
from .polynomial import ZERO as _P0

NEG_INF = -math.inf

_RATIONAL = (int, Fraction, type(mpq()))

LESS, EQUAL, GREATER = -1, 0, 1


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


# ---------------------------------------------------------------------------
# RatFunc


class RatFunc:
    """Exact real rational function ``num/den`` of the indeterminate X."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Union[Poly, int, Fraction] = 0, den: Union[Poly, int, Fraction] = 1):
        num = num if isinstance(num, Poly) else Poly.const(num)
        den = den if isinstance(den, Poly) else Poly.const(den)
        n, d = _canonical(num, den)
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFunc":
        r = object.__new__(cls)
        r.num = num
        r.den = den
        r._hash = None
        return r

    @classmethod
    def of(cls, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, Poly):
            return cls._raw(value, _P1)
        return cls._raw(Poly.const(value), _P1)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.coeffs == _P1.coeffs

    def is_constant(self) -> bool:
        return self.is_polynomial() and self.num.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise DomainError(f"{self!r} is not a constant")
        return to_fraction(self.num.coeffs[0]) if self.num.coeffs else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, _RATIONAL):
            other = RatFunc.of(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num.coeffs, self.den.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"RatFunc({[str(c) for c in self.num.coeffs]}, {[str(c) for c in self.den.coeffs]})"

    def __add__(self, other) -> "RatFunc":
        o = _rf(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero():
            return o
        if o.num.is_zero():
            return self
        if self.is_polynomial() and o.is_polynomial():
            return RatFunc._raw(self.num + o.num, _P1)
        if self.den == o.den:
            return _reduced(self.num + o.num, self.den)
        # Henrici: only the gcd of the denominators can cancel
        g = gcd(self.den, o.den)
        if g.degree == 0:
            return RatFunc._raw(self.num * o.den + o.num * self.den, self.den * o.den)
        d1 = self.den.divmod(g)[0]
        d2 = o.den.divmod(g)[0]
        t = self.num * d2 + o.num * d1
        if t.is_zero():
            return RF_ZERO
        g2 = gcd(t, g)
        if g2.degree > 0:
            t = t.divmod(g2)[0]
            g = g.divmod(g2)[0]
        return RatFunc._raw(t, d1 * d2 * g)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        o = _rf(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other) -> "RatFunc":
        o = _rf(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return RF_ZERO
        if self.is_polynomial() and o.is_polynomial():
            return RatFunc._raw(self.num * o.num, _P1)
        if o.is_constant():
            return RatFunc._raw(self.num.scale(o.num.coeffs[0]), self.den)
        if self.is_constant():
            return RatFunc._raw(o.num.scale(self.num.coeffs[0]), o.den)
        g1 = gcd(self.num, o.den)
        g2 = gcd(o.num, self.den)
        n1, d2 = (self.num.divmod(g1)[0], o.den.divmod(g1)[0]) if g1.degree > 0 else (self.num, o.den)
        n2, d1 = (o.num.divmod(g2)[0], self.den.divmod(g2)[0]) if g2.degree > 0 else (o.num, self.den)
        return RatFunc._raw(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise DomainError("division by zero")
        return _reduced(self.den, self.num)

    def __truediv__(self, other) -> "RatFunc":
        o = _rf(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return RatFunc.of(other) * self.inverse()

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._raw(self.num ** n, self.den ** n)

    # ordering on F
    def sign(self) -> int:
        return sign_toward_infinity(self)

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - other).sign() >= 0


def _canonical(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if den.is_zero():
        raise DomainError("rational function with zero denominator")
    if num.is_zero():
        return _P0, _P1
    g = gcd(num, den)
    if g.degree > 0:
        num = num.divmod(g)[0]
        den = den.divmod(g)[0]
    lead = den.lead
    if lead != 1:
        num = num.scale(1 / lead)
        den = den.scale(1 / lead)
    return num, den


def _reduced(num: Poly, den: Poly) -> RatFunc:
    n, d = _canonical(num, den)
    return RatFunc._raw(n, d)


def _rf(value) -> RatFunc | None:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, _RATIONAL):
        return RatFunc._raw(Poly.const(value), _P1)
    if isinstance(value, Poly):
        return RatFunc._raw(value, _P1)
    return None


RF_ZERO = RatFunc._raw(_P0, _P1)
RF_ONE = RatFunc._raw(_P1, _P1)
RF_X = RatFunc._raw(_PX, _P1)


def rf_normalize(num: Poly, den: Poly) -> RatFunc:
    """Canonical reduced form of ``num/den``; raises DomainError if ``den == 0``."""
    return RatFunc(num, den)


def rf_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def sign_toward_infinity(f: RatFunc) -> int:
    """Sign of ``f(X)`` for all sufficiently large X."""
    if f.num.is_zero():
        return 0
    s = f.num.lead * f.den.lead
    return 1 if s > 0 else -1


def degree(f: RatFunc):
    """``deg num - deg den``; :data:`NEG_INF` for zero."""
    if f.num.is_zero():
        return NEG_INF
    return f.num.degree - f.den.degree


def abs_value(f: RatFunc) -> RatFunc:
    return -f if sign_toward_infinity(f) < 0 else f


def decompose(f: RatFunc) -> tuple[Poly, RatFunc]:
    """Split ``f`` into a polynomial part and a part of negative degree."""
    q, r = f.num.divmod(f.den)
    return q, RatFunc._raw(r, f.den) if r else RF_ZERO


def finite_and_standard_part(f: RatFunc) -> tuple[RatFunc, Fraction]:
    poly, small = decompose(f)
    standard = to_fraction(poly.coeffs[0]) if poly.coeffs else Fraction(0)
    return small + standard, standard


# ---------------------------------------------------------------------------
# Scalar


Term = tuple  # (grade: int, re: RatFunc, im: RatFunc)


class Scalar:
    """Element of the pi-graded extension of the complexified field F^C.

    ``terms`` is a tuple of ``(grade, re, im)`` sorted by grade, each
    denoting ``(2*pi)**(grade/2) * (re + i*im)``; no term has both parts zero.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, value=0):
        if isinstance(value, Scalar):
            self.terms = value.terms
        elif isinstance(value, complex):
            raise TypeError("floating point values are not exact scalars")
        else:
            rf = _rf(value)
            if rf is None:
                raise TypeError(f"cannot make a Scalar from {value!r}")
            self.terms = ((0, rf, RF_ZERO),) if rf else ()
        self._hash = None

    @classmethod
    def _from_terms(cls, terms: Iterable[Term]) -> "Scalar":
        s = object.__new__(cls)
        s.terms = tuple(sorted((t for t in terms if t[1] or t[2]), key=lambda t: t[0]))
        s._hash = None
        return s

    @classmethod
    def make(cls, re=0, im=0, grade: int = 0) -> "Scalar":
        return cls._from_terms([(grade, RatFunc.of(re), RatFunc.of(im))])

    @classmethod
    def of(cls, value) -> "Scalar":
        return value if isinstance(value, Scalar) else cls(value)

    # -- structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_real(self) -> bool:
        """Extra-real: every imaginary part vanishes."""
        return all(not im for _, _, im in self.terms)

    def is_homogeneous(self) -> bool:
        return len(self.terms) <= 1

    @property
    def grades(self) -> tuple[int, ...]:
        return tuple(k for k, _, _ in self.terms)

    def component(self, grade: int) -> tuple[RatFunc, RatFunc]:
        for k, re, im in self.terms:
            if k == grade:
                return re, im
        return RF_ZERO, RF_ZERO

    def is_rational(self) -> bool:
        """Grade-0, real, and constant in X."""
        if not self.terms:
            return True
        if len(self.terms) != 1:
            return False
        k, re, im = self.terms[0]
        return k == 0 and not im and re.is_constant()

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise DomainError(f"{self!r} is not a rational constant")
        return self.terms[0][1].constant_value() if self.terms else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, _RATIONAL + (RatFunc,)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __repr__(self) -> str:
        from .render import render_scalar

        return f"Scalar({render_scalar(self)})"

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other) -> "Scalar":
        o = _sc(other)
        if o is None:
            return NotImplemented
        if not o.terms:
            return self
        if not self.terms:
            return o
        acc = {k: (re, im) for k, re, im in self.terms}
        for k, re, im in o.terms:
            if k in acc:
                r0, i0 = acc[k]
                acc[k] = (r0 + re, i0 + im)
            else:
                acc[k] = (re, im)
        return Scalar._from_terms((k, re, im) for k, (re, im) in acc.items())

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._from_terms((k, -re, -im) for k, re, im in self.terms)

    def __sub__(self, other) -> "Scalar":
        o = _sc(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Scalar":
        return (-self) + other

    def __mul__(self, other) -> "Scalar":
        o = _sc(other)
        if o is None:
            return NotImplemented
        if not self.terms or not o.terms:
            return S_ZERO
        acc: dict[int, tuple[RatFunc, RatFunc]] = {}
        for k1, a, b in self.terms:
            for k2, c, d in o.terms:
                if b or d:
                    re = a * c - b * d
                    im = a * d + b * c
                else:
                    re, im = a * c, RF_ZERO
                k = k1 + k2
                if k in acc:
                    r0, i0 = acc[k]
                    acc[k] = (r0 + re, i0 + im)
                else:
                    acc[k] = (re, im)
        return Scalar._from_terms((k, re, im) for k, (re, im) in acc.items())

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.terms:
            raise DomainError("division by zero")
        if len(self.terms) != 1:
            raise DomainError("division by a scalar mixing several powers of sqrt(2*pi)")
        k, re, im = self.terms[0]
        if not im:
            return Scalar._from_terms([(-k, re.inverse(), RF_ZERO)])
        norm = re * re + im * im
        return Scalar._from_terms([(-k, re / norm, -im / norm)])

    def __truediv__(self, other) -> "Scalar":
        o = _sc(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return Scalar.of(other) * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = S_ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Scalar":
        return Scalar._from_terms((k, re, -im) for k, re, im in self.terms)

    @property
    def real(self) -> "Scalar":
        return Scalar._from_terms((k, re, RF_ZERO) for k, re, _ in self.terms)

    @property
    def imag(self) -> "Scalar":
        return Scalar._from_terms((k, im, RF_ZERO) for k, _, im in self.terms)

    # -- ordering (extra-real only) --------------------------------------

    def sign(self) -> int:
        return _scalar_sign(self)

    def __lt__(self, other) -> bool:
        return compare(self, Scalar.of(other)) == LESS

    def __le__(self, other) -> bool:
        return compare(self, Scalar.of(other)) != GREATER

    def __gt__(self, other) -> bool:
        return compare(self, Scalar.of(other)) == GREATER

    def __ge__(self, other) -> bool:
        return compare(self, Scalar.of(other)) != LESS


def _sc(value) -> Scalar | None:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, _RATIONAL + (RatFunc, Poly)):
        return Scalar(value)
    return None


S_ZERO = Scalar._from_terms(())
S_ONE = Scalar(1)
I = Scalar.make(0, 1)
X = Scalar(RF_X)
SQRT2PI = Scalar.make(1, 0, grade=1)
PI = Scalar.make(Fraction(1, 2), 0, grade=2)


def conjugate(a: Scalar) -> Scalar:
    return a.conjugate()


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def compare(a: Scalar, b: Scalar) -> int:
    """Total order on extra-real scalars: returns LESS, EQUAL or GREATER."""
    a, b = Scalar.of(a), Scalar.of(b)
    if not (a.is_real() and b.is_real()):
        raise DomainError("only extra-real scalars are ordered")
    return _scalar_sign(a - b)


def _scalar_sign(s: Scalar) -> int:
    if not s.is_real():
        raise DomainError("only extra-real scalars are ordered")
    if not s.terms:
        return 0
    if len(s.terms) == 1:
        return sign_toward_infinity(s.terms[0][1])
    # Only the grades reaching the top X-degree matter for large X.
    top = max(degree(re) for _, re, _ in s.terms)
    lead = {k: to_fraction(re.num.lead) for k, re, _ in s.terms if degree(re) == top}
    return _sign_at_sqrt2pi(lead)


def _pi_bounds(prec: int) -> tuple[Fraction, Fraction]:
    lo = _mpf_to_fraction(mpf_pi(prec, "f"))
    hi = _mpf_to_fraction(mpf_pi(prec, "c"))
    return lo, hi


def _mpf_to_fraction(v) -> Fraction:
    man, exp = to_man_exp(v)
    return Fraction(man) * Fraction(2) ** exp


def _poly_range(coeffs: dict[int, Fraction], lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    # coeffs maps power -> coefficient; the variable ranges over [lo, hi] with lo > 0.
    low = high = Fraction(0)
    for j, c in coeffs.items():
        a, b = lo ** j, hi ** j
        if c > 0:
            low += c * a
            high += c * b
        else:
            low += c * b
            high += c * a
    return low, high


def _sign_at_sqrt2pi(lead: dict[int, Fraction]) -> int:
    """Certified sign of ``sum_k c_k * sqrt(2*pi)**k`` (nonzero by transcendence)."""
    kmin = min(lead)
    even: dict[int, Fraction] = {}
    odd: dict[int, Fraction] = {}
    for k, c in lead.items():
        s = k - kmin
        (even if s % 2 == 0 else odd)[s // 2] = c
    # value = b**kmin * (E(t) + b*O(t)), t = b**2 = 2*pi, b > 0
    prec = 32
    while True:
        plo, phi = _pi_bounds(prec)
        tlo, thi = 2 * plo, 2 * phi
        elo, ehi = _poly_range(even, tlo, thi) if even else (Fraction(0), Fraction(0))
        olo, ohi = _poly_range(odd, tlo, thi) if odd else (Fraction(0), Fraction(0))
        if not odd and (elo > 0 or ehi < 0):
            return 1 if elo > 0 else -1
        if not even and (olo > 0 or ohi < 0):
            return 1 if olo > 0 else -1
        if even and odd and (elo > 0 or ehi < 0) and (olo > 0 or ohi < 0):
            se = 1 if elo > 0 else -1
            so = 1 if olo > 0 else -1
            if se == so:
                return se
            e2 = (min(abs(elo), abs(ehi)) ** 2, max(abs(elo), abs(ehi)) ** 2)
            o2 = (min(abs(olo), abs(ohi)) ** 2 * tlo, max(abs(olo), abs(ohi)) ** 2 * thi)
            if e2[0] > o2[1]:
                return se
            if e2[1] < o2[0]:
                return so
        prec *= 2
