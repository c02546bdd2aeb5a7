"""Dense univariate polynomials with exact rational coefficients.

A polynomial is stored as a tuple of exact rational coefficients
(:class:`gmpy2.mpq`, which compares and hashes like :class:`fractions.Fraction`)
in ascending degree order, with trailing zeros stripped.  The zero polynomial
is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from gmpy2 import gcd as _gcd
from gmpy2 import lcm, mpq, mpz

Rational = Union[int, Fraction]


def to_mpq(c) -> mpq:
    if isinstance(c, Fraction):
        # Fraction(mpq) keeps gmpy2 parts that mpq() does not accept back
        return mpq(int(c.numerator), int(c.denominator))
    return mpq(c)


def to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _strip(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Immutable polynomial in one indeterminate over the rationals."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Rational] = ()):
        self.coeffs = _strip([to_mpq(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> "Poly":
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Rational) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Rational = 1) -> "Poly":
        return cls([0] * degree + [c])

    # -- structure -------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for zero."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else mpq(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([to_mpq(other)])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return Poly._raw(_strip(res))

    def __neg__(self) -> "Poly":
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        res = [mpq(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                res[i + j] += x * y
        return Poly._raw(_strip(res))

    def scale(self, c: Rational) -> "Poly":
        if not c:
            return ZERO
        c = to_mpq(c)
        return Poly._raw(tuple(x * c for x in self.coeffs))

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division: ``self = q*other + r`` with ``deg r < deg other``."""
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.coeffs[-1]
        if len(rem) <= db:
            return ZERO, self
        quot = [mpq(0)] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c / lead
            quot[k - db] = q
            for j, y in enumerate(other.coeffs):
                rem[k - db + j] -= q * y
        return Poly._raw(_strip(quot)), Poly._raw(_strip(rem[:db]))

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return Poly._raw(tuple(c / lead for c in self.coeffs))

    # -- calculus / evaluation ------------------------------------------

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly._raw(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def antiderivative(self) -> "Poly":
        """Antiderivative with zero constant term."""
        if not self.coeffs:
            return ZERO
        return Poly._raw((mpq(0),) + tuple(c / (i + 1) for i, c in enumerate(self.coeffs)))


def _primitive_ints(p: Poly) -> list:
    den = mpz(1)
    for c in p.coeffs:
        den = lcm(den, c.denominator)
    ints = [c.numerator * (den // c.denominator) for c in p.coeffs]
    content = mpz(0)
    for c in ints:
        content = _gcd(content, c)
    return [c // content for c in ints]


def _int_prem(a: list, b: list) -> list:
    # pseudo-remainder of lc(b)^k * a by b, made primitive
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for j, y in enumerate(b):
            a[shift + j] -= la * y
        while a and a[-1] == 0:
            a.pop()
    content = mpz(0)
    for c in a:
        content = _gcd(content, c)
    return [c // content for c in a] if content else []


_PRIME = (1 << 61) - 1


def _coprime_mod_p(x: list, y: list) -> bool:
    """True when x and y certainly share no factor of positive degree.

    Modulo a prime not dividing either leading coefficient the gcd can only
    gain degree, so a constant gcd mod p proves a constant gcd over Q.
    """
    p = _PRIME
    if x[-1] % p == 0 or y[-1] % p == 0:
        return False
    a = [int(c % p) for c in x]
    b = [int(c % p) for c in y]
    while b:
        while b and b[-1] == 0:
            b.pop()
        if not b:
            break
        if len(b) == 1:
            return True
        inv = pow(b[-1], -1, p)
        db = len(b) - 1
        while len(a) - 1 >= db:
            q = a[-1] * inv % p
            shift = len(a) - 1 - db
            for j, v in enumerate(b):
                a[shift + j] = (a[shift + j] - q * v) % p
            a.pop()
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return False


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (zero only when both inputs are zero)."""
    if not b.coeffs:
        return a.monic()
    if not a.coeffs:
        return b.monic()
    if a.degree == 0 or b.degree == 0:
        return ONE
    x, y = _primitive_ints(a), _primitive_ints(b)
    if _coprime_mod_p(x, y):
        return ONE
    if len(x) < len(y):
        x, y = y, x
    while y:
        x, y = y, _int_prem(x, y)
    return Poly(x).monic()


ZERO = Poly()
ONE = Poly((1,))
X = Poly((0, 1))
