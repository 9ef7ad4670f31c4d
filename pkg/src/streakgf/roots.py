"""Exact real-root counting and isolation for rational polynomials (Sturm sequences)."""

from __future__ import annotations

from fractions import Fraction

from .algebra import Poly, poly_gcd


def squarefree_part(p: Poly) -> Poly:
    if p.degree <= 0:
        return p
    return p // poly_gcd(p, p.derivative())


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = -(seq[-2] % seq[-1])
        if r.is_zero():
            break
        seq.append(r.content_normalized() * (1 if r.lead > 0 else -1))
    return [q for q in seq if not q.is_zero()]


def _sign_changes(values: list[Fraction]) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq: list[Poly], lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in the half-open interval (lo, hi] of a squarefree polynomial."""
    return _sign_changes([q(lo) for q in seq]) - _sign_changes([q(hi) for q in seq])


def cauchy_bound(p: Poly) -> Fraction:
    lead = abs(p.lead)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


def smallest_positive_root(p: Poly, width: Fraction = Fraction(1, 2**80), start: Fraction = Fraction(2)):
    """Interval ``(lo, hi]`` of width below ``width`` holding the smallest positive root, or None.

    The search window starts at ``(0, start]`` and doubles until it contains a
    root or passes the Cauchy bound. Bisection keeps the leftmost root inside
    by exact Sturm counts, never floating point.
    """
    sqf = squarefree_part(p)
    if sqf.degree < 1:
        return None
    seq = sturm_sequence(sqf)
    lo, hi = Fraction(0), Fraction(start)
    bound = cauchy_bound(sqf)
    if sqf(0) == 0:
        # a root at zero is not positive; shrink the left end past it
        lo = Fraction(1, 2**200)
    while count_roots(seq, lo, hi) == 0:
        if hi > bound:
            return None
        hi *= 2
    while hi - lo >= width:
        mid = (lo + hi) / 2
        if count_roots(seq, lo, mid) > 0:
            hi = mid
        else:
            lo = mid
    return lo, hi
