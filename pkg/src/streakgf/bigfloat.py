"""Arbitrary-precision binary fixed-point reals and complexes.

A :class:`BigFloat` is ``man / 2**prec`` for a Python int ``man``. Binary
operations run at the larger of the two precisions, so precision is never
silently reduced. Only the functions the streak-limit computation needs are
provided: pi, exp, sin, cos.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

GUARD_BITS = 32


def _rshift_round(x: int, bits: int) -> int:
    if bits <= 0:
        return x << -bits
    return (x + (1 << (bits - 1))) >> bits


# ----------------------------------------------------- fixed-point primitives
# All helpers below take and return integers scaled by 2**prec.


def _atan_inv(m: int, prec: int) -> int:
    """atan(1/m) for integer m > 1 by its alternating Taylor series."""
    one = 1 << prec
    term = one // m
    total = term
    m2 = m * m
    k = 1
    while term:
        term //= m2
        k += 2
        total += -(term // k) if (k // 2) % 2 else term // k
    return total


@lru_cache(maxsize=32)
def pi_fixed(prec: int) -> int:
    # Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    p = prec + GUARD_BITS
    return _rshift_round(16 * _atan_inv(5, p) - 4 * _atan_inv(239, p), GUARD_BITS)


def _exp_small(x: int, prec: int) -> int:
    one = 1 << prec
    total = one
    term = one
    k = 1
    while term:
        term = (term * x >> prec) // k
        total += term
        k += 1
    return total


def exp_fixed(x: int, prec: int) -> int:
    """exp(x / 2**prec) scaled by 2**prec.

    The argument is halved ``j`` times until it is below 2**-8, the Taylor
    series is summed, and the result is squared back ``j`` times; each squaring
    can double the relative error, so ``j`` extra guard bits are carried.
    """
    j = max(0, abs(x).bit_length() - prec + 8)
    p = prec + GUARD_BITS + j
    y = _exp_small((x << (p - prec)) >> j, p)
    for _ in range(j):
        y = y * y >> p
    return _rshift_round(y, p - prec)


def _sin_cos_small(x: int, prec: int) -> tuple[int, int]:
    one = 1 << prec
    x2 = x * x >> prec
    s = term = x
    k = 1
    while term:
        term = -(term * x2 >> prec) // ((k + 1) * (k + 2))
        s += term
        k += 2
    c = term = one
    k = 0
    while term:
        term = -(term * x2 >> prec) // ((k + 1) * (k + 2))
        c += term
        k += 2
    return s, c


def sin_cos_fixed(x: int, prec: int) -> tuple[int, int]:
    """(sin, cos) of x / 2**prec, reduced into [-pi/4, pi/4] before summing."""
    p = prec + GUARD_BITS + max(0, abs(x).bit_length() - prec)
    xp = x << (p - prec)
    pi = pi_fixed(p)
    half_pi = pi >> 1
    q = (2 * xp + half_pi) // (2 * half_pi)  # nearest multiple of pi/2
    r = xp - q * half_pi
    s, c = _sin_cos_small(r, p)
    quadrant = q % 4
    if quadrant == 1:
        s, c = c, -s
    elif quadrant == 2:
        s, c = -s, -c
    elif quadrant == 3:
        s, c = -c, s
    return _rshift_round(s, p - prec), _rshift_round(c, p - prec)


# ------------------------------------------------------------- value classes


@dataclass(frozen=True)
class BigFloat:
    man: int
    prec: int

    @classmethod
    def from_int(cls, value: int, prec: int) -> "BigFloat":
        return cls(value << prec, prec)

    @classmethod
    def from_fraction(cls, value: Fraction | int, prec: int) -> "BigFloat":
        value = Fraction(value)
        return cls(_div_round(value.numerator << prec, value.denominator), prec)

    @classmethod
    def pi(cls, prec: int) -> "BigFloat":
        return cls(pi_fixed(prec), prec)

    def at(self, prec: int) -> "BigFloat":
        if prec == self.prec:
            return self
        return BigFloat(_rshift_round(self.man, self.prec - prec), prec)

    def _align(self, other) -> tuple[int, int, int]:
        if not isinstance(other, BigFloat):
            other = BigFloat.from_fraction(Fraction(other), self.prec)
        p = max(self.prec, other.prec)
        return self.at(p).man, other.at(p).man, p

    def __add__(self, other) -> "BigFloat":
        a, b, p = self._align(other)
        return BigFloat(a + b, p)

    __radd__ = __add__

    def __sub__(self, other) -> "BigFloat":
        a, b, p = self._align(other)
        return BigFloat(a - b, p)

    def __rsub__(self, other) -> "BigFloat":
        return (-self) + other

    def __neg__(self) -> "BigFloat":
        return BigFloat(-self.man, self.prec)

    def __mul__(self, other) -> "BigFloat":
        a, b, p = self._align(other)
        return BigFloat(_rshift_round(a * b, p), p)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "BigFloat":
        a, b, p = self._align(other)
        if b == 0:
            raise ZeroDivisionError("BigFloat division by zero")
        return BigFloat(_div_round(a << p, b), p)

    def __rtruediv__(self, other) -> "BigFloat":
        return BigFloat.from_fraction(Fraction(other), self.prec) / self

    def __float__(self) -> float:
        return self.man / (1 << self.prec) if self.prec < 1000 else float(Fraction(self.man, 1 << self.prec))

    def exp(self) -> "BigFloat":
        return BigFloat(exp_fixed(self.man, self.prec), self.prec)

    def sin_cos(self) -> tuple["BigFloat", "BigFloat"]:
        s, c = sin_cos_fixed(self.man, self.prec)
        return BigFloat(s, self.prec), BigFloat(c, self.prec)

    def sin(self) -> "BigFloat":
        return self.sin_cos()[0]

    def cos(self) -> "BigFloat":
        return self.sin_cos()[1]

    def to_fraction(self) -> Fraction:
        return Fraction(self.man, 1 << self.prec)

    def to_decimal(self, places: int) -> str:
        """Round half away from zero to ``places`` digits after the point."""
        scaled = _div_round(abs(self.man) * 10**places, 1 << self.prec)
        sign = "-" if self.man < 0 and scaled else ""
        digits = str(scaled).rjust(places + 1, "0")
        if places == 0:
            return sign + digits
        return f"{sign}{digits[:-places]}.{digits[-places:]}"


def _div_round(a: int, b: int) -> int:
    """Nearest integer to a / b (b > 0), halves away from zero."""
    q, r = divmod(abs(a), b)
    if 2 * r >= b:
        q += 1
    return q if a >= 0 else -q


@dataclass(frozen=True)
class BigComplex:
    re: BigFloat
    im: BigFloat

    @property
    def prec(self) -> int:
        return max(self.re.prec, self.im.prec)

    @classmethod
    def unit(cls, angle: BigFloat) -> "BigComplex":
        """exp(i * angle)."""
        s, c = angle.sin_cos()
        return cls(c, s)

    def conjugate(self) -> "BigComplex":
        return BigComplex(self.re, -self.im)

    def __add__(self, other: "BigComplex") -> "BigComplex":
        return BigComplex(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "BigComplex") -> "BigComplex":
        return BigComplex(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "BigComplex") -> "BigComplex":
        return BigComplex(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    def exp(self) -> "BigComplex":
        mag = self.re.exp()
        s, c = self.im.sin_cos()
        return BigComplex(mag * c, mag * s)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))
