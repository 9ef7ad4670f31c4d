"""Acceptance criteria, one test each.

Run ``pytest tests/test_acceptance.py`` (or this file directly); the terminal
summary lists one PASS/FAIL line per criterion. Each test also enforces the
criterion's runtime limit.
"""

import random
import time
from decimal import Decimal
from fractions import Fraction
from math import comb

import pytest

from streakgf.algebra import RatFun, series_expand
from streakgf.analysis import (
    asymptotic_gap,
    expected_draws,
    expected_draws_soft,
    minimal_set,
    minimal_set_denominator,
    minimal_set_genfun,
    mu,
    mu_closed_form_check,
    ode_residual,
    radius_check,
    u_solution,
)
from streakgf.cluster import ForbiddenSet, cluster_genfun, solve_weights
from streakgf.oracle import count_streak_free, counts_by_automaton, default_budget, simulate_draws
from streakgf.streaks import (
    psi,
    psi_numeric,
    soft_streak_denominator,
    soft_streak_set,
    streak_denominator,
    streak_genfun,
    streak_set,
    sum_of_weights,
    weight_w_closed,
    weight_w_recursive,
    weighted_binomial_rou,
    weighted_gen_binom_rou,
)
from streakgf.verify import MU_TABLE, soft_conjecture

from conftest import EXAMPLE_1, EXAMPLE_2


class Timer:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.1f} s, limit {self.limit} s"


@pytest.mark.criterion(1, "cluster examples exact")
def test_criterion_01_cluster_examples():
    with Timer(1.0):
        assert series_expand(cluster_genfun(EXAMPLE_1), 6).as_ints() == [1, 4, 15, 54, 195, 705, 2549]
        assert series_expand(cluster_genfun(EXAMPLE_2), 6).as_ints() == [1, 3, 9, 25, 70, 196, 548]


@pytest.mark.criterion(2, "closed form equals cluster method, n <= 6, k <= 5, order 30")
def test_criterion_02_closed_form_vs_cluster():
    with Timer(30.0):
        for n in range(1, 7):
            for k in range(2, min(n, 5) + 1):
                closed = streak_genfun(n, k)
                via_cluster = cluster_genfun(streak_set(n, k))
                assert series_expand(closed, 30) == series_expand(via_cluster, 30), (n, k)
                assert closed == via_cluster


@pytest.mark.criterion(3, "closed-form series equal oracle counts, n <= 5, k <= 4, s <= 10")
def test_criterion_03_oracle_agreement():
    budget = default_budget()
    with Timer(60.0):
        for n in range(1, 6):
            for k in range(2, 5):
                series = series_expand(streak_genfun(n, k), 10).as_ints()
                auto = counts_by_automaton(streak_set(n, k), 10)
                brute = [count_streak_free(n, k, s).count for s in range(11) if n**s <= budget]
                assert series == auto, (n, k)
                assert series[: len(brute)] == brute, (n, k)


@pytest.mark.criterion(4, "k = 2 counts are C(n+s-1, s) and C(n, s), n <= 6, s <= 12")
def test_criterion_04_k2_counts():
    budget = default_budget()
    for n in range(1, 7):
        strict = counts_by_automaton(streak_set(n, 2), 12)
        soft = counts_by_automaton(soft_streak_set(n, 2), 12)
        for s in range(13):
            assert strict[s] == comb(n + s - 1, s)
            assert soft[s] == comb(n, s)
            if n**s <= budget:
                assert count_streak_free(n, 2, s).count == comb(n + s - 1, s)
                assert count_streak_free(n, 2, s, soft=True).count == comb(n, s)


@pytest.mark.criterion(5, "soft-streak conjecture matches brute force, n <= 4, k <= 4, s <= 12")
def test_criterion_05_soft_conjecture():
    with Timer(300.0):
        report = soft_conjecture(n_max=4, k_max=4, s_max=12)
    failures = [c for c in report.cases if not c.passed]
    assert not failures, failures
    assert all(c.params["s_max"] == 12 for c in report.cases)


@pytest.mark.criterion(6, "weight formulas: closed equals recursive, sum equals cluster weights")
def test_criterion_06_weights():
    for k in range(2, 7):
        for m in range(1, 13):
            assert weight_w_closed(m, k) == weight_w_recursive(m, k)
    for n in range(1, 7):
        for k in range(2, 5):
            total = RatFun(0)
            for w in solve_weights(streak_set(n, k)).values():
                total = total + w
            assert total == RatFun(sum_of_weights(n, k)), (n, k)


@pytest.mark.criterion(7, "mu_k table, 29 rows to 60 places")
def test_criterion_07_mu_table():
    with Timer(120.0):
        got = {k: mu(k, 60).value for k in range(2, 31)}
    wrong = {k: v for k, v in got.items() if v != MU_TABLE[k]}
    assert not wrong


@pytest.mark.criterion(8, "closed-form mu_3 and mu_4")
def test_criterion_08_mu_closed_forms():
    for k, shown in ((3, "7.924372"), (4, "29.980170")):
        closed, _ = mu_closed_form_check(k)
        assert f"{closed:.6f}" == shown
        precise = float(mu(k, 12).value)
        assert abs(closed - precise) / precise < 1e-10


@pytest.mark.criterion(9, "continuous solution: boundary values, ODE residual, mu_k = 1/u_(k-1)(0)")
def test_criterion_09_ode():
    for k in range(2, 9):
        for r in range(1, k):
            assert abs(u_solution(k, r, 1.0) - 1) < 1e-10
        assert ode_residual(k, 1000) < 1e-4
        value = 1 / u_solution(k, k - 1, 0.0)
        precise = float(mu(k, 12).value)
        assert abs(value - precise) / precise < 1e-10


@pytest.mark.criterion(10, "Monte Carlo means within 3 standard errors at 1e6 trials")
def test_criterion_10_monte_carlo():
    cases = [(2, 2, False), (4, 3, False), (5, 3, False), (6, 4, False), (3, 3, True), (4, 3, True)]
    for n, k, soft in cases:
        exact = float(expected_draws_soft(n, k) if soft else expected_draws(n, k))
        res = simulate_draws(n, k, soft=soft, trials=10**6, seed=2024)
        assert abs(res.mean - exact) <= 3 * res.std_error, (n, k, soft, res.mean, exact, res.std_error)


@pytest.mark.criterion(11, "smallest positive pole lies strictly above 1/n")
def test_criterion_11_radius():
    sets = [EXAMPLE_1, EXAMPLE_2]
    sets += [streak_set(n, k) for n in range(2, 6) for k in range(2, n + 1)]
    sets += [minimal_set(n, k) for n in range(2, 6) for k in range(2, 5)]
    for F in sets:
        report = radius_check(F)
        assert report.exceeds_one_over_n, F
        assert report.smallest_positive_root[0] > Fraction(1, F.n), F
    for n in range(1, 6):
        for k in range(2, 5):
            assert minimal_set_denominator(n, k)(Fraction(1, n)) == Fraction(1, n**k)


@pytest.mark.criterion(12, "property suites: psi DFT, binomial identity, weighted identities, domination, gap")
def test_criterion_12_properties():
    for k in range(2, 17):
        for r in range(3 * k + 1):
            assert abs(psi_numeric(k, r) - psi(k, r)) < 1e-10
    for n in range(21):
        for r in range(7):
            for s in range(7):
                assert sum(comb(j, r) * comb(n - j, s) for j in range(r, n - s + 1)) == comb(n + 1, r + s + 1)
    for n in range(1, 11):
        for k in range(2, 7):
            for x in (0.1, 0.3):
                assert abs(weighted_binomial_rou(n, k, x) - float(streak_denominator(n, k)(Fraction(x)))) < 1e-9
    for n in range(1, 6):
        for k in range(2, 6):
            assert abs(weighted_gen_binom_rou(n, k, 0.1) - float(soft_streak_denominator(n, k)(Fraction(1, 10)))) < 1e-9
    # coefficient domination by the single word of k equal letters, on random
    # sets whose longest word has length k
    rng = random.Random(12)
    for _ in range(400):
        n, k = rng.randint(2, 4), rng.randint(2, 4)
        words = {tuple(rng.randint(1, n) for _ in range(k))}
        words |= {tuple(rng.randint(1, n) for _ in range(rng.randint(2, k))) for _ in range(rng.randint(0, 3))}
        ours = series_expand(cluster_genfun(ForbiddenSet(n, tuple(words))), 25)
        bound = series_expand(minimal_set_genfun(n, k), 25)
        assert all(a <= b for a, b in zip(ours, bound)), words
    gaps = [abs(Decimal(asymptotic_gap(k, 60))) for k in range(4, 31)]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
