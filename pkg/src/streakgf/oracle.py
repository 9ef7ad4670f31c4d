"""Independent ground truth: brute-force and automaton word counts, and a
seeded Monte Carlo simulator for the number of draws until a streak.
"""

from __future__ import annotations

import math
import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .cluster import ForbiddenSet
from .errors import BudgetExceeded, InvalidK, NonTerminating

BUDGET_ENV = "STREAKGF_BUDGET"
DEFAULT_BUDGET = 10**8


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class CountResult:
    s: int
    count: int
    method: str  # "exhaustive" | "automaton"


@dataclass(frozen=True)
class SimResult:
    trials: int
    mean: float
    std_error: float
    seed: int
    workers: int = 1


def _check_budget(n: int, s: int, budget: int | None) -> None:
    budget = default_budget() if budget is None else budget
    if n**s > budget:
        raise BudgetExceeded(f"{n}^{s} = {n**s} words exceeds the enumeration budget {budget}")


def count_avoiding_exhaustive(F: ForbiddenSet, s: int, budget: int | None = None) -> CountResult:
    """Enumerate all n^s words and count those containing no forbidden subword."""
    if s < 0:
        raise ValueError("s must be non-negative")
    _check_budget(F.n, s, budget)
    words = [tuple(a - 1 for a in w) for w in F.words if len(w) <= s]
    count = _kernels.count_avoiding(F.n, s, words)
    return CountResult(s, count, "exhaustive")


class PrefixAutomaton:
    """Aho-Corasick automaton whose states are the proper prefixes of forbidden words.

    ``delta[state][letter]`` is the next safe state, or ``None`` once any
    forbidden word has been completed.
    """

    def __init__(self, F: ForbiddenSet):
        self.n = F.n
        children: list[dict[int, int]] = [{}]
        terminal = [False]
        for w in F.words:
            state = 0
            for a in w:
                nxt = children[state].get(a)
                if nxt is None:
                    nxt = len(children)
                    children[state][a] = nxt
                    children.append({})
                    terminal.append(False)
                state = nxt
            terminal[state] = True

        fail = [0] * len(children)
        delta: list[list[int]] = [[0] * (self.n + 1) for _ in children]
        queue: deque[int] = deque()
        for a in range(1, self.n + 1):
            nxt = children[0].get(a)
            if nxt is None:
                delta[0][a] = 0
            else:
                delta[0][a] = nxt
                queue.append(nxt)
        while queue:
            state = queue.popleft()
            terminal[state] = terminal[state] or terminal[fail[state]]
            for a in range(1, self.n + 1):
                nxt = children[state].get(a)
                if nxt is None:
                    delta[state][a] = delta[fail[state]][a]
                else:
                    fail[nxt] = delta[fail[state]][a]
                    delta[state][a] = nxt
                    queue.append(nxt)

        # drop dead states and renumber the live ones
        live = [i for i in range(len(children)) if not terminal[i]]
        renum = {old: new for new, old in enumerate(live)}
        self.delta: list[list[int | None]] = [
            [renum.get(delta[old][a]) for a in range(1, self.n + 1)] for old in live
        ]
        self.size = len(live)

    def count_paths(self, s: int) -> list[int]:
        """Safe word counts for every length 0..s."""
        vec = [0] * self.size
        vec[0] = 1
        out = [1]
        for _ in range(s):
            nxt = [0] * self.size
            for state, c in enumerate(vec):
                if c:
                    for target in self.delta[state]:
                        if target is not None:
                            nxt[target] += c
            vec = nxt
            out.append(sum(vec))
        return out


def count_avoiding_automaton(F: ForbiddenSet, s: int) -> CountResult:
    if s < 0:
        raise ValueError("s must be non-negative")
    return CountResult(s, PrefixAutomaton(F).count_paths(s)[-1], "automaton")


def counts_by_automaton(F: ForbiddenSet, s_max: int) -> list[int]:
    return PrefixAutomaton(F).count_paths(s_max)


def count_streak_free(n: int, k: int, s: int, soft: bool = False, budget: int | None = None) -> CountResult:
    """Brute-force count of length-s words with no streak (or soft streak) of k."""
    if k < 2:
        raise InvalidK(f"streak length must be >= 2, got {k}")
    if n < 1 or s < 0:
        raise ValueError("need n >= 1 and s >= 0")
    _check_budget(n, s, budget)
    return CountResult(s, _kernels.count_streak_free(n, k, s, soft), "exhaustive")


def _split(trials: int, workers: int) -> list[int]:
    base, extra = divmod(trials, workers)
    return [base + (1 if i < extra else 0) for i in range(workers)]


def simulate_draws(n: int, k: int, soft: bool = False, trials: int = 10**6, seed: int = 0, workers: int = 1) -> SimResult:
    """Mean number of uniform draws from 1..n until the first (soft) streak of k.

    Worker ``i`` runs its share of the trials on the ``i``-th child of
    ``SeedSequence(seed)``, so a fixed ``(seed, trials, workers)`` always gives
    the same result.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if k < 2:
        raise InvalidK(f"streak length must be >= 2, got {k}")
    if n < 1:
        raise ValueError("alphabet size must be >= 1")
    if not soft and k > n:
        raise NonTerminating(f"a strict streak of {k} is impossible over {n} letters")

    shares = _split(trials, workers)
    streams = np.random.SeedSequence(seed).spawn(workers)

    def work(i: int) -> tuple[int, int]:
        if shares[i] == 0:
            return 0, 0
        rng = np.random.Generator(np.random.PCG64(streams[i]))
        return _kernels.simulate_stream(n, k, soft, shares[i], rng)

    if workers == 1:
        parts = [work(0)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(work, range(workers)))
    total = sum(p[0] for p in parts)
    total_sq = sum(p[1] for p in parts)
    mean = total / trials
    if trials > 1:
        var = (total_sq - total * total / trials) / (trials - 1)
        std_error = math.sqrt(max(var, 0.0) / trials)
    else:
        std_error = 0.0
    return SimResult(trials, mean, std_error, seed, workers)
