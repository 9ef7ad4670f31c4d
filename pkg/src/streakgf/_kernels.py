"""Hot loops for the brute-force oracles and the draw simulator.

Each kernel has a numba implementation and a pure-numpy implementation with
identical results. The numba path is used when numba imports and the
``STREAKGF_DISABLE_NUMBA`` environment variable is unset or ``0``; the flag is
read on every call so tests can flip it with ``monkeypatch.setenv``.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency in CI
    numba = None
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


ENV_FLAG = "STREAKGF_DISABLE_NUMBA"
CHUNK = 1 << 18


def use_numba() -> bool:
    if not HAVE_NUMBA:
        return False
    return os.environ.get(ENV_FLAG, "0").strip().lower() in ("", "0", "false", "no")


def backend_name() -> str:
    return "numba" if use_numba() else "numpy"


# ---------------------------------------------------------------- streak scan


@njit(cache=True, nogil=True)
def _streak_free_nb(n, k, s, soft):
    if s < k:
        return n**s
    word = np.zeros(s, dtype=np.int64)
    count = 0
    total = n**s
    for _ in range(total):
        run = 1
        hit = False
        for i in range(1, s):
            if word[i] > word[i - 1] or (soft and word[i] == word[i - 1]):
                run += 1
                if run >= k:
                    hit = True
                    break
            else:
                run = 1
        if not hit:
            count += 1
        # odometer increment
        j = s - 1
        while j >= 0:
            word[j] += 1
            if word[j] < n:
                break
            word[j] = 0
            j -= 1
    return count


def _digits_block(start: int, stop: int, n: int, s: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, s), dtype=np.int16)
    for j in range(s - 1, -1, -1):
        out[:, j] = idx % n
        idx //= n
    return out


def _streak_free_np(n: int, k: int, s: int, soft: bool) -> int:
    total = n**s
    if s < k:
        return total
    count = 0
    for start in range(0, total, CHUNK):
        d = _digits_block(start, min(total, start + CHUNK), n, s)
        step = d[:, 1:] >= d[:, :-1] if soft else d[:, 1:] > d[:, :-1]
        # k-1 consecutive rising steps make a streak of k
        window = step[:, : s - k + 1].copy()
        for t in range(1, k - 1):
            window &= step[:, t : s - k + 1 + t]
        count += int(np.count_nonzero(~window.any(axis=1)))
    return count


def count_streak_free(n: int, k: int, s: int, soft: bool) -> int:
    if use_numba():
        return int(_streak_free_nb(n, k, s, soft))
    return _streak_free_np(n, k, s, soft)


# ------------------------------------------------------- general forbidden set


@njit(cache=True, nogil=True)
def _avoiding_nb(n, s, words, lengths):
    word = np.zeros(s, dtype=np.int64)
    count = 0
    total = n**s
    nw = words.shape[0]
    for _ in range(total):
        hit = False
        for f in range(nw):
            L = lengths[f]
            for pos in range(s - L + 1):
                ok = True
                for t in range(L):
                    if word[pos + t] != words[f, t]:
                        ok = False
                        break
                if ok:
                    hit = True
                    break
            if hit:
                break
        if not hit:
            count += 1
        j = s - 1
        while j >= 0:
            word[j] += 1
            if word[j] < n:
                break
            word[j] = 0
            j -= 1
    return count


def _avoiding_np(n: int, s: int, words: np.ndarray, lengths: np.ndarray) -> int:
    total = n**s
    count = 0
    for start in range(0, total, CHUNK):
        d = _digits_block(start, min(total, start + CHUNK), n, s)
        hit = np.zeros(d.shape[0], dtype=bool)
        for f in range(words.shape[0]):
            L = int(lengths[f])
            for pos in range(s - L + 1):
                hit |= np.all(d[:, pos : pos + L] == words[f, :L], axis=1)
        count += int(np.count_nonzero(~hit))
    return count


def count_avoiding(n: int, s: int, words: list[tuple[int, ...]]) -> int:
    """Count words of length s over 0-based letters avoiding every word in ``words``."""
    width = max((len(w) for w in words), default=1)
    arr = np.zeros((len(words), width), dtype=np.int64)
    lengths = np.zeros(len(words), dtype=np.int64)
    for i, w in enumerate(words):
        arr[i, : len(w)] = w
        lengths[i] = len(w)
    if use_numba():
        return int(_avoiding_nb(n, s, arr, lengths))
    return _avoiding_np(n, s, arr, lengths)


# ------------------------------------------------------------------ simulator
#
# Letters are consumed as one continuous stream: a trial stops at the first
# letter completing a run of k, and the next trial starts on the following
# letter. With raw run length R (counted across trial boundaries) a stop
# happens exactly where R % k == 0, so the carried state is (R % k, last
# letter, letters used by the unfinished trial).


@njit(cache=True, nogil=True)
def _sim_block_nb(letters, k, soft, run, last, cur, need, out):
    """Consume one block; returns (run, last, cur, filled)."""
    filled = 0
    for i in range(letters.shape[0]):
        a = letters[i]
        cur += 1
        if run > 0 and (a > last or (soft and a == last)):
            run += 1
        else:
            run = 1
        last = a
        if run == k:
            out[filled] = cur
            filled += 1
            cur = 0
            run = 0
            if filled == need:
                break
    return run, last, cur, filled


def _sim_block_np(letters, k, soft, run, last, cur, need):
    m = letters.shape[0]
    prev = np.empty(m, dtype=letters.dtype)
    prev[1:] = letters[:-1]
    prev[0] = last
    rising = letters >= prev if soft else letters > prev
    if run == 0:
        rising[0] = False
    idx = np.arange(m, dtype=np.int64)
    resets = np.maximum.accumulate(np.where(rising, -1, idx))
    raw = np.where(resets >= 0, idx - resets + 1, idx + 1 + run)
    stops = np.flatnonzero(raw % k == 0)[:need]
    if stops.size == 0:
        return int(raw[-1] % k), int(letters[-1]), cur + m, np.empty(0, dtype=np.int64)
    lengths = np.diff(stops, prepend=-1)
    lengths[0] += cur
    end = int(stops[-1])
    if stops.size == need:
        return 0, int(letters[end]), 0, lengths.astype(np.int64)
    return int(raw[-1] % k), int(letters[-1]), m - 1 - end, lengths.astype(np.int64)


def simulate_stream(n: int, k: int, soft: bool, trials: int, rng: np.random.Generator, block: int = 1 << 16):
    """Run ``trials`` stopping-time trials on one generator; returns (sum, sum of squares).

    Both backends consume identical blocks of letters, so results do not depend
    on which backend ran.
    """
    numba_on = use_numba()
    run, last, cur = 0, 0, 0
    done = 0
    total = 0
    total_sq = 0
    buf = np.empty(block, dtype=np.int64)
    while done < trials:
        letters = rng.integers(1, n + 1, size=block, dtype=np.int64)
        need = trials - done
        if numba_on:
            run, last, cur, filled = _sim_block_nb(letters, k, soft, run, last, cur, need, buf)
            lengths = buf[:filled]
        else:
            run, last, cur, lengths = _sim_block_np(letters, k, soft, run, last, cur, need)
        done += lengths.size
        total += int(lengths.sum())
        total_sq += int(np.dot(lengths, lengths))
    return total, total_sq
