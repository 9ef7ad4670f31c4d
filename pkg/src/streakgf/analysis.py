"""Expected draw counts, the continuous-limit constant mu_k, and
radius-of-convergence checks for cluster generating functions."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

import numpy as np

from .algebra import Poly, RatFun, series_expand
from .bigfloat import BigFloat
from .cluster import ForbiddenSet, cluster_genfun
from .errors import ImaginaryResidue, InvalidK
from .roots import smallest_positive_root, squarefree_part, sturm_sequence, count_roots
from .streaks import conjectural, root_of_unity, soft_streak_denominator, streak_denominator

INFINITE = math.inf


def _check_nk(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"alphabet size must be >= 1, got {n}")
    if k < 2:
        raise InvalidK(f"streak length must be >= 2, got {k}")


def expected_draws(n: int, k: int) -> Fraction | float:
    """Exact expected number of uniform draws from 1..n until a streak of k.

    Returns ``math.inf`` when ``k > n``: no streak of k letters exists then.
    """
    _check_nk(n, k)
    den = streak_denominator(n, k)(Fraction(1, n))
    if den == 0:
        return INFINITE
    return 1 / den


@conjectural
def expected_draws_soft(n: int, k: int) -> Fraction:
    _check_nk(n, k)
    # evaluate numerator and denominator separately; expanding (1 - z^k)^n is
    # needlessly slow for large n
    x = Fraction(1, n)
    return (1 - x**k) ** n / soft_streak_denominator(n, k)(x)


def expected_draws_partial(f: RatFun, n: int, terms: int) -> Fraction:
    """sum_{s <= terms} a_s n^-s, the tail-truncated P(X > s) series."""
    coeffs = series_expand(f, terms)
    return sum((c / Fraction(n) ** s for s, c in enumerate(coeffs)), Fraction(0))


# ------------------------------------------------------------------ mu_k


@dataclass(frozen=True)
class MuResult:
    k: int
    digits: int
    value: str
    working_precision: int


GUARD_DIGITS = 15


def mu_working_bits(k: int, digits: int) -> int:
    """Bits needed so mu_k is right to ``digits`` decimal places.

    The denominator sum is about k / mu_k, so an absolute error e in it moves
    mu_k by about e * mu_k**2 / k. Magnitude digits of mu_k therefore count
    twice, with mu_k < 2 * k! as the bound.
    """
    mag = math.log10(2 * math.factorial(k))
    return math.ceil((digits + 2 * mag + GUARD_DIGITS) * math.log2(10)) + k.bit_length()


def mu_bigfloat(k: int, prec: int) -> BigFloat:
    """k / sum_{s=1}^{k-1} exp(w^s)(1 - w^-s) at ``prec`` bits, w = exp(2 pi i / k).

    Terms s and k - s are conjugate, so each pair contributes twice the real
    part of one term and the sum is real by construction.
    """
    if k < 2:
        raise InvalidK(f"k must be >= 2, got {k}")
    two_pi_over_k = BigFloat.pi(prec) * 2 / k
    total = BigFloat(0, prec)
    for s in range(1, k // 2 + 1):
        sin_t, cos_t = (two_pi_over_k * s).sin_cos()
        # exp(w) = e^cos_t (cos(sin_t) + i sin(sin_t)); 1 - w^-1 = (1 - cos_t) + i sin_t
        mag = cos_t.exp()
        sin_s, cos_s = sin_t.sin_cos()
        re = mag * (cos_s * (1 - cos_t) - sin_s * sin_t)
        total = total + (re if 2 * s == k else re * 2)
    return BigFloat.from_int(k, prec) / total


def mu(k: int, digits: int = 60) -> MuResult:
    """mu_k rounded to ``digits`` decimal places."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    bits = mu_working_bits(k, digits)
    return MuResult(k, digits, mu_bigfloat(k, bits).to_decimal(digits), bits)


def mu_float(k: int) -> float:
    w = [root_of_unity(k, s) for s in range(1, k)]
    total = sum(cmath.exp(x) * (1 - 1 / x) for x in w)
    return (k / total).real


def mu_closed_form_check(k: int) -> tuple[float, float]:
    """(trig closed form, roots-of-unity sum) for k in {3, 4}, both in double precision."""
    if k == 3:
        closed = math.sqrt(3 * math.e) / (2 * math.cos(math.sqrt(3) / 2 + math.pi / 6))
    elif k == 4:
        closed = 2 * math.e / (1 - math.e * (math.sin(1) - math.cos(1)))
    else:
        raise ValueError("closed forms exist only for k in {3, 4}")
    return closed, mu_float(k)


def asymptotic_gap(k: int, digits: int = 60) -> str:
    """mu_k - k! - (k-1)! to ``digits`` decimal places."""
    value = Decimal(mu(k, digits).value)
    with localcontext() as ctx:
        ctx.prec = len(str(math.factorial(k))) + digits + 5
        gap = value - (math.factorial(k) + math.factorial(k - 1))
        return str(gap.quantize(Decimal(1).scaleb(-digits)))


def u_solution(k: int, r: int, x: float, tol: float = 1e-10) -> float:
    """Normalized expected remaining draws with a current run of r ending at x."""
    if k < 2:
        raise InvalidK(f"k must be >= 2, got {k}")
    if not 1 <= r <= k - 1:
        raise ValueError(f"r must lie in 1..{k - 1}")
    val = sum((1 - root_of_unity(k, (r * s) % k)) * cmath.exp(root_of_unity(k, s) * (1 - x)) for s in range(1, k)) / k
    if abs(val.imag) > tol:
        raise ImaginaryResidue(f"imaginary part {val.imag} exceeds {tol}")
    return val.real


def u_grid(k: int, xs: np.ndarray) -> np.ndarray:
    """Array of shape (k-1, len(xs)); row r-1 holds u_r on the grid."""
    s = np.arange(1, k)
    w = np.exp(2j * np.pi * s / k)
    r = np.arange(1, k)[:, None]
    coef = (1 - np.exp(2j * np.pi * ((r * s[None, :]) % k) / k)) / k  # (k-1 r, k-1 s)
    vals = coef @ np.exp(np.outer(w, 1 - np.asarray(xs, dtype=float)))
    return vals.real


def ode_residual(k: int, grid_points: int) -> float:
    """Max central-difference residual of u_r' = u_1 - u_{r+1}, u_{k-1}' = u_1 on [0, 1]."""
    if k < 2:
        raise InvalidK(f"k must be >= 2, got {k}")
    if grid_points < 3:
        raise ValueError("need at least 3 grid points")
    h = 1.0 / grid_points
    xs = np.arange(grid_points + 1) * h
    u = u_grid(k, xs)
    du = (u[:, 2:] - u[:, :-2]) / (2 * h)
    mid = u[:, 1:-1]
    rhs = np.empty_like(mid)
    rhs[:-1] = mid[0] - mid[1:]
    rhs[-1] = mid[0]
    return float(np.max(np.abs(du - rhs)))


# ------------------------------------------------------ radius of convergence


def minimal_set_denominator(n: int, k: int) -> Poly:
    _check_nk(n, k)
    return Poly([1] + [-(n - 1)] * k)


def minimal_set_genfun(n: int, k: int) -> RatFun:
    """Generating function for words avoiding a single letter repeated k times."""
    return RatFun(Poly([1] * k), minimal_set_denominator(n, k))


def minimal_set(n: int, k: int) -> ForbiddenSet:
    return ForbiddenSet(n, ((1,) * k,))


@dataclass(frozen=True)
class RadiusReport:
    n: int
    denominator: Poly
    smallest_positive_root: tuple[Fraction, Fraction] | None
    exceeds_one_over_n: bool


def radius_check(F: ForbiddenSet, f: RatFun | None = None) -> RadiusReport:
    """Isolate the smallest positive pole of the reduced generating function.

    ``exceeds_one_over_n`` is true when the denominator has no root in
    ``(0, 1/n]`` (exact Sturm count) and does not vanish at ``1/n``.
    """
    if f is None:
        f = cluster_genfun(F)
    den = f.den
    one_over_n = Fraction(1, F.n)
    sqf = squarefree_part(den)
    clear = den(one_over_n) != 0
    if sqf.degree >= 1:
        clear = clear and count_roots(sturm_sequence(sqf), Fraction(0), one_over_n) == 0
    interval = smallest_positive_root(den)
    if interval is not None:
        clear = clear and interval[0] >= one_over_n
    return RadiusReport(F.n, den, interval, clear)
