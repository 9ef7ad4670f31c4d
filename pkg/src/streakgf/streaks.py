"""Closed forms for words avoiding streaks (strictly increasing runs) and soft
streaks (non-decreasing runs) of a fixed length.

Everything on the exact side uses the three-valued filter :func:`psi`; the
roots-of-unity forms are double-precision cross-checks only.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .algebra import Poly, RatFun
from .cluster import ForbiddenSet
from .errors import InvalidK, NearZeroDenominator


def conjectural(fn):
    """Mark a function whose formula has only been verified empirically."""
    fn.conjectural = True
    return fn


@dataclass(frozen=True)
class StreakParams:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"alphabet size must be >= 1, got {self.n}")
        _check_k(self.k)


def _check_k(k: int) -> None:
    if k < 2:
        raise InvalidK(f"streak length must be >= 2, got {k}")


def _params(p, k=None) -> StreakParams:
    if isinstance(p, StreakParams):
        return p
    return StreakParams(p, k)


def psi(k: int, r: int) -> int:
    """+1 if r = 0 (mod k), -1 if r = 1 (mod k), else 0."""
    _check_k(k)
    m = r % k
    if m == 0:
        return 1
    if m == 1:
        return -1
    return 0


def root_of_unity(k: int, s: int = 1) -> complex:
    return cmath.exp(2j * cmath.pi * s / k)


def psi_numeric(k: int, r: int) -> complex:
    """psi(k, r) as the average of w**r * (1 - 1/w) over the k-th roots of unity."""
    _check_k(k)
    total = 0j
    for s in range(1, k):
        total += (1 - root_of_unity(k, -s)) * root_of_unity(k, (r * s) % k)
    return total / k


def psi_cosine_form(k: int, r: int) -> float:
    """Trigonometric closed forms of psi for k = 3 and k = 4."""
    import math

    if k == 3:
        return 2 / math.sqrt(3) * math.cos(2 * math.pi * r / 3 + math.pi / 6)
    if k == 4:
        return math.cos(math.pi * r / 2 + math.pi / 4) / math.sqrt(2) + 0.5 * (-1) ** r
    raise ValueError("cosine form only for k in {3, 4}")


def streak_denominator(p, k=None) -> Poly:
    p = _params(p, k)
    return Poly([psi(p.k, r) * comb(p.n, r) for r in range(p.n + 1)])


def streak_genfun(p, k=None) -> RatFun:
    """1 / sum_r psi(k, r) C(n, r) z^r.

    When k > n no streak fits in the alphabet and this is 1 / (1 - n z).
    """
    return RatFun(Poly.const(1), streak_denominator(_params(p, k)))


def _check_denominator(value: complex, eps: float) -> None:
    if abs(value) < eps:
        raise NearZeroDenominator(f"denominator {value} is within {eps} of zero")


def streak_genfun_rou(p, z: complex, *, k=None, eps: float = 1e-12) -> complex:
    """Evaluate the streak generating function through its roots-of-unity form."""
    p = _params(p, k)
    den = sum((1 - root_of_unity(p.k, -s)) * (1 + root_of_unity(p.k, s) * z) ** p.n for s in range(1, p.k))
    _check_denominator(den, eps)
    return p.k / den


def weight_w_closed(m: int, k: int) -> Poly:
    """Weight of any streak starting with letter m: -z^k sum_r psi(k, r) C(m-1, r) z^r."""
    if m < 1:
        raise ValueError("m must be >= 1")
    _check_k(k)
    return Poly([0] * k + [-psi(k, r) * comb(m - 1, r) for r in range(m)])


def weight_w_recursive(m: int, k: int) -> Poly:
    if m < 1:
        raise ValueError("m must be >= 1")
    _check_k(k)
    return _weights_recursive(k, m)[m - 1]


@lru_cache(maxsize=64)
def _weights_recursive(k: int, m: int) -> tuple[Poly, ...]:
    ws: list[Poly] = []
    base = Poly.monomial(-1, k)
    for cur in range(1, m + 1):
        acc = base
        for r in range(1, cur):
            mult = Poly([0] + [comb(cur - r - 1, s - 1) for s in range(1, k)])
            acc = acc - mult * ws[r - 1]
        ws.append(acc)
    return tuple(ws)


def sum_of_weights(p, k=None) -> Poly:
    p = _params(p, k)
    return Poly([0] * p.k + [-psi(p.k, r) * comb(p.n, r) for r in range(p.k, p.n + 1)])


def streak_set(p, k=None) -> ForbiddenSet:
    """All strictly increasing words of length k over 1..n."""
    p = _params(p, k)
    return ForbiddenSet(p.n, tuple(itertools.combinations(range(1, p.n + 1), p.k)))


def soft_streak_set(p, k=None) -> ForbiddenSet:
    """All non-decreasing words of length k over 1..n."""
    p = _params(p, k)
    return ForbiddenSet(p.n, tuple(itertools.combinations_with_replacement(range(1, p.n + 1), p.k)))


def gen_binom(n: int, k: int, r: int) -> int:
    """Coefficient of x^r in (1 + x + ... + x^(k-1))^n, by inclusion-exclusion."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative")
    _check_k(k)
    if n == 0:
        return 1 if r == 0 else 0
    return sum((-1) ** s * comb(n, s) * comb(n + r - k * s - 1, n - 1) for s in range(r // k + 1))


def gen_binom_by_expansion(n: int, k: int, r: int) -> int:
    return int((Poly([1] * k) ** n)[r])


@lru_cache(maxsize=32)
def gen_binom_row(n: int, k: int) -> tuple[int, ...]:
    """All coefficients of (1 + x + ... + x^(k-1))^n.

    J.C.P. Miller's power recurrence, a_m = sum_i ((n+1) i - m) a_(m-i) / m,
    costs O(k) per coefficient where the alternating sum costs O(r / k) big
    binomials; that matters once n reaches the hundreds.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    _check_k(k)
    top = (k - 1) * n
    row = [1]
    for m in range(1, top + 1):
        acc = sum(((n + 1) * i - m) * row[m - i] for i in range(1, min(m, k - 1) + 1))
        row.append(acc // m)
    return tuple(row)


def soft_streak_denominator(p, k=None) -> Poly:
    p = _params(p, k)
    row = gen_binom_row(p.n, p.k)
    return Poly([psi(p.k, r) * b for r, b in enumerate(row)])


@conjectural
def soft_streak_genfun(p, k=None) -> RatFun:
    """(1 - z^k)^n / sum_r psi(k, r) B(n, k, r) z^r.

    Conjectured, not proven; agreement with brute-force counts is checked by
    the ``soft-conjecture`` verification suite.
    """
    p = _params(p, k)
    numerator = Poly([1] + [0] * (p.k - 1) + [-1]) ** p.n
    return RatFun(numerator, soft_streak_denominator(p))


@conjectural
def soft_streak_genfun_rou(p, z: complex, *, k=None, eps: float = 1e-12) -> complex:
    p = _params(p, k)
    den = 0j
    for s in range(1, p.k + 1):
        base = 1 - root_of_unity(p.k, s) * z
        if abs(base) < eps:
            raise NearZeroDenominator(f"factor 1 - w^{s} z vanishes at z={z}")
        den += (1 - root_of_unity(p.k, -s)) * base ** (-p.n)
    _check_denominator(den, eps)
    return p.k / den


def weighted_binomial_rou(n: int, k: int, z: complex) -> complex:
    """(1/k) sum_s (1 - w^-s)(1 + w^s z)^n; equals sum_r psi(k,r) C(n,r) z^r."""
    return sum((1 - root_of_unity(k, -s)) * (1 + root_of_unity(k, s) * z) ** n for s in range(1, k)) / k


def weighted_gen_binom_rou(n: int, k: int, z: complex) -> complex:
    """((1 - z^k)^n / k) sum_s (1 - w^-s)(1 - w^s z)^-n; equals sum_r psi(k,r) B(n,k,r) z^r."""
    total = sum((1 - root_of_unity(k, -s)) * (1 - root_of_unity(k, s) * z) ** (-n) for s in range(1, k + 1))
    return (1 - z**k) ** n / k * total
