"""Exact univariate algebra over the rationals.

Polynomials are dense tuples of :class:`fractions.Fraction` indexed by degree.
Rational functions are kept in a canonical form so that ``==`` is structural
equality of the reduced fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence, Union

from .errors import DivisionByZero, SingularAtZero, SingularMatrix

Rat = Fraction
Scalar = Union[int, Fraction]


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Dense univariate polynomial in ``z`` with rational coefficients.

    ``Poly([1, -2, 1])`` is ``1 - 2z + z**2``. The zero polynomial has no
    coefficients and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs: tuple[Fraction, ...] = _trim([Fraction(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> "Poly":
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def monomial(cls, coeff: Scalar, degree: int) -> "Poly":
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [coeff])

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if d == 0:
                body = str(mag)
            else:
                var = "z" if d == 1 else f"z^{d}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self) -> "Poly":
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(_trim(out))

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly._raw(tuple(c * other for c in self.coeffs))
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - db)
        inv_lead = 1 / other.lead
        for i in range(len(rem) - 1 - db, -1, -1):
            q = rem[i + db] * inv_lead
            quot[i] = q
            if q:
                for j, c in enumerate(other.coeffs):
                    rem[i + j] -= q * c
        return Poly(quot), Poly(rem[:db])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def derivative(self) -> "Poly":
        return Poly([d * c for d, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    def content_normalized(self) -> "Poly":
        """Scale to coprime integer coefficients with a positive leading coefficient."""
        if self.is_zero():
            return self
        scale = Fraction(reduce(lcm, (c.denominator for c in self.coeffs), 1))
        ints = [int(c * scale) for c in self.coeffs]
        g = reduce(gcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        return Poly([i // g for i in ints])

    def int_coeffs(self) -> list[int]:
        """Coefficients as ints; raises if any coefficient is non-integral."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            out.append(c.numerator)
        return out


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    return NotImplemented


Z = Poly([0, 1])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q (zero only if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
        # keeping the remainder primitive stops coefficient growth
        b = b.content_normalized() if not b.is_zero() else b
    return a.monic()


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


class RatFun:
    """Reduced quotient ``num / den`` of polynomials in ``z``.

    Canonical form: ``gcd(num, den) = 1``; ``num`` and ``den`` have integer
    coefficients whose combined content is 1; and the lowest-degree nonzero
    coefficient of ``den`` is positive. Generating functions therefore print
    with ``den(0) = 1`` whenever the reduced denominator has constant term 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, *, _canonical: bool = False):
        num = _as_poly(num) if not isinstance(num, Poly) else num
        den = _as_poly(den) if not isinstance(den, Poly) else den
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RatFun expects polynomials or rationals")
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if _canonical:
            self.num, self.den = num, den
        else:
            self.num, self.den = _canonicalize(num, den)

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFun":
        return cls(p, Poly.const(1))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFun(({self.num}) / ({self.den}))"

    def __str__(self) -> str:
        if self.den == Poly.const(1):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise DivisionByZero(f"denominator vanishes at {x}")
        return self.num(x) / d

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den, _canonical=True)

    def __add__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "RatFun":
        return (-self) + other

    def __mul__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return RatFun(Poly())
        # cross-cancel first; keeps products small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        return RatFun((self.num // g1) * (other.num // g2), (self.den // g2) * (other.den // g1))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise DivisionByZero("rational function division by zero")
        return self * RatFun(other.den, other.num)

    def __rtruediv__(self, other) -> "RatFun":
        return _as_ratfun(other) / self


def _as_ratfun(x) -> RatFun:
    if isinstance(x, RatFun):
        return x
    if isinstance(x, (int, Fraction, Poly)):
        return RatFun(x)
    return NotImplemented


def _canonicalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if num.is_zero():
        return Poly(), Poly.const(1)
    g = poly_gcd(num, den)
    if g.degree > 0:
        num, den = num // g, den // g
    scale = reduce(lcm, (c.denominator for c in num.coeffs + den.coeffs), 1)
    ni = [int(c * scale) for c in num.coeffs]
    di = [int(c * scale) for c in den.coeffs]
    content = reduce(gcd, ni + di, 0)
    low = next(c for c in di if c != 0)
    if low < 0:
        content = -content
    return (
        Poly._raw(tuple(Fraction(c // content) for c in ni)),
        Poly._raw(tuple(Fraction(c // content) for c in di)),
    )


def ratfun_arith(a: RatFun, b: RatFun, op: str) -> RatFun:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


@dataclass(frozen=True)
class TruncatedSeries:
    """Power-series prefix ``c_0 + c_1 z + ... + c_order z**order``."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Scalar], order: int | None = None) -> "TruncatedSeries":
        if order is None:
            order = len(coeffs) - 1
        padded = [Fraction(c) for c in coeffs[: order + 1]]
        padded += [Fraction(0)] * (order + 1 - len(padded))
        return cls(order, tuple(padded))

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        m = min(self.order, other.order)
        out = [
            sum((self.coeffs[i] * other.coeffs[j - i] for i in range(j + 1)), Fraction(0))
            for j in range(m + 1)
        ]
        return TruncatedSeries(m, tuple(out))

    def as_ints(self) -> list[int]:
        return [int(c) if c.denominator == 1 else _raise_nonint(c) for c in self.coeffs]


def _raise_nonint(c: Fraction):
    raise ValueError(f"non-integer series coefficient {c}")


def series_expand(f: RatFun | Poly, order: int) -> TruncatedSeries:
    """Maclaurin coefficients of ``f`` through ``z**order`` by the division recurrence."""
    if isinstance(f, Poly):
        f = RatFun.from_poly(f)
    if order < 0:
        raise ValueError("order must be non-negative")
    d = f.den.coeffs
    if d[0] == 0:
        raise SingularAtZero("denominator vanishes at z = 0")
    inv = 1 / d[0]
    out: list[Fraction] = []
    for m in range(order + 1):
        acc = f.num[m]
        for i in range(1, min(m, len(d) - 1) + 1):
            acc -= d[i] * out[m - i]
        out.append(acc * inv)
    return TruncatedSeries(order, tuple(out))


def _complexity(x: RatFun) -> tuple[int, int]:
    return (x.den.degree, x.num.degree)


def solve_linear_system(A: Sequence[Sequence[RatFun]], b: Sequence[RatFun]) -> list[RatFun]:
    """Solve ``A x = b`` exactly over Q(z) by Gaussian elimination.

    The pivot in each column is the nonzero entry with the lowest-degree
    denominator (ties broken by numerator degree). The solution is checked by
    substitution before returning.
    """
    size = len(A)
    if any(len(row) != size for row in A) or len(b) != size:
        raise ValueError("A must be square and match b")
    M = [[_as_ratfun(x) for x in row] + [_as_ratfun(rhs)] for row, rhs in zip(A, b)]
    for col in range(size):
        candidates = [r for r in range(col, size) if not M[r][col].is_zero()]
        if not candidates:
            raise SingularMatrix(f"no pivot in column {col}")
        piv = min(candidates, key=lambda r: _complexity(M[r][col]))
        M[col], M[piv] = M[piv], M[col]
        prow = M[col]
        inv = 1 / prow[col]
        prow[col:] = [x * inv for x in prow[col:]]
        for r in range(size):
            if r == col or M[r][col].is_zero():
                continue
            factor = M[r][col]
            row = M[r]
            for c in range(col, size + 1):
                if not prow[c].is_zero():
                    row[c] = row[c] - factor * prow[c]
    x = [M[i][size] for i in range(size)]
    for row, rhs in zip(A, b):
        total = RatFun(0)
        for a_ij, x_j in zip(row, x):
            total = total + _as_ratfun(a_ij) * x_j
        if total != _as_ratfun(rhs):
            raise SingularMatrix("back-substitution check failed")
    return x
