"""Exact scalars: arbitrary-precision rationals and prime-field elements.

Rationals are plain ``fractions.Fraction`` (always reduced, positive
denominator).  Prime fields get a tiny value type ``Fp`` carrying its modulus;
mixing moduli, or mixing Fp with Fraction, is a hard error rather than a
coercion.  Every coefficient ring in the package is identified by a hashable
tag: ``QQ`` for the rationals, ``GF(p)`` for a prime field.
"""

from __future__ import annotations

from fractions import Fraction


class RingMismatchError(TypeError):
    """Raised when an operation mixes scalars from different rings."""


QQ = ("Q",)


def GF(p: int) -> tuple:
    """Ring tag for the prime field with p elements."""
    if p < 2:
        raise ValueError(f"modulus must be a prime >= 2, got {p}")
    return ("Fp", p)


class Fp:
    """An element of the prime field Z/pZ.

    The modulus travels with the value; arithmetic between elements with
    different moduli raises RingMismatchError.
    """

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def _check(self, other: "Fp") -> None:
        if not isinstance(other, Fp):
            raise RingMismatchError(
                f"cannot combine Fp({self.p}) with {type(other).__name__}")
        if other.p != self.p:
            raise RingMismatchError(
                f"cannot combine elements of F_{self.p} and F_{other.p}")

    def __add__(self, other):
        if isinstance(other, int):
            return Fp(self.val + other, self.p)
        self._check(other)
        return Fp(self.val + other.val, self.p)

    __radd__ = __add__

    def __neg__(self):
        return Fp(-self.val, self.p)

    def __sub__(self, other):
        if isinstance(other, int):
            return Fp(self.val - other, self.p)
        self._check(other)
        return Fp(self.val - other.val, self.p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Fp(self.val * other, self.p)
        self._check(other)
        return Fp(self.val * other.val, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "Fp":
        if self.val == 0:
            raise ZeroDivisionError(f"0 is not invertible in F_{self.p}")
        return Fp(pow(self.val, -1, self.p), self.p)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Fp(other, self.p)
        self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Fp(pow(self.val, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return f"Fp({self.val}, {self.p})"

    def __str__(self):
        return str(self.val)


def ring_of(c) -> tuple:
    """Ring tag of a scalar value."""
    if isinstance(c, Fp):
        return GF(c.p)
    if isinstance(c, (Fraction, int)):
        return QQ
    raise TypeError(f"not a supported scalar: {c!r}")


def ring_zero(ring: tuple):
    return Fraction(0) if ring == QQ else Fp(0, ring[1])


def ring_one(ring: tuple):
    return Fraction(1) if ring == QQ else Fp(1, ring[1])


def as_scalar(c, ring: tuple):
    """Coerce an int/Fraction/Fp into the given ring; reject cross-ring input."""
    if ring == QQ:
        if isinstance(c, Fp):
            raise RingMismatchError("prime-field scalar in a rational context")
        return Fraction(c)
    p = ring[1]
    if isinstance(c, Fp):
        if c.p != p:
            raise RingMismatchError(f"F_{c.p} scalar in an F_{p} context")
        return c
    if isinstance(c, int):
        return Fp(c, p)
    raise RingMismatchError(f"cannot place {c!r} into F_{p}")


def rational_to_fp(c: Fraction, p: int) -> Fp:
    """Reduce a rational mod p.  Fails if the denominator vanishes mod p."""
    c = Fraction(c)
    if c.denominator % p == 0:
        raise ZeroDivisionError(f"denominator of {c} vanishes mod {p}")
    return Fp(c.numerator * pow(c.denominator, -1, p), p)


def rational_reconstruct(a: int, m: int) -> Fraction | None:
    """Recover n/d from a mod m with |n|, d <= sqrt(m/2) (Wang's algorithm).

    Returns None when no such fraction exists.
    """
    a %= m
    bound = int((m // 2) ** 0.5)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    num, den = r1, s1
    if den < 0:
        num, den = -num, -den
    from math import gcd
    if gcd(num, den) != 1:
        return None
    return Fraction(num, den)
