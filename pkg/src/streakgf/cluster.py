"""Goulden-Jackson cluster method for words avoiding a set of forbidden subwords.

Letters are the integers ``1..n``; a word is a tuple of letters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .algebra import Poly, RatFun, solve_linear_system
from .errors import InvalidWord

Word = tuple[int, ...]


@dataclass(frozen=True)
class Diagnostic:
    level: str  # "error" | "warning"
    message: str
    words: tuple[Word, ...] = ()


def word_sort_key(w: Word) -> tuple[int, Word]:
    return (len(w), w)


def is_subword(short: Sequence[int], long: Sequence[int]) -> bool:
    m = len(short)
    return any(tuple(long[i : i + m]) == tuple(short) for i in range(len(long) - m + 1))


def validate_forbidden_set(words: Iterable[Sequence[int]], n: int) -> list[Diagnostic]:
    """Check a candidate forbidden set.

    Out-of-range letters raise :class:`InvalidWord`. Length-1 words yield an
    ``error`` diagnostic; a forbidden word contained in another yields a
    ``warning`` (the cluster method still counts correctly, just with more work).
    """
    if n < 1:
        raise InvalidWord(f"alphabet size must be >= 1, got {n}")
    ws = sorted({tuple(int(a) for a in w) for w in words}, key=word_sort_key)
    diags: list[Diagnostic] = []
    for w in ws:
        if not w:
            raise InvalidWord("empty word")
        bad = [a for a in w if not 1 <= a <= n]
        if bad:
            raise InvalidWord(f"word {w} has letters outside 1..{n}: {bad}")
    for w in ws:
        if len(w) == 1:
            diags.append(Diagnostic("error", f"length-1 word {w} is not allowed (remove the letter from the alphabet instead)", (w,)))
    for i, short in enumerate(ws):
        for long in ws[i + 1 :]:
            if len(short) < len(long) and is_subword(short, long):
                diags.append(Diagnostic("warning", f"{short} is a subword of {long}", (short, long)))
    return diags


@dataclass(frozen=True)
class ForbiddenSet:
    """Alphabet size plus forbidden words, stored sorted by (length, lexicographic)."""

    alphabet_size: int
    words: tuple[Word, ...] = field(default=())

    def __post_init__(self):
        diags = validate_forbidden_set(self.words, self.alphabet_size)
        errors = [d for d in diags if d.level == "error"]
        if errors:
            raise InvalidWord("; ".join(d.message for d in errors))
        ordered = tuple(sorted({tuple(int(a) for a in w) for w in self.words}, key=word_sort_key))
        object.__setattr__(self, "words", ordered)

    @property
    def n(self) -> int:
        return self.alphabet_size

    def __len__(self) -> int:
        return len(self.words)

    @property
    def max_length(self) -> int:
        return max((len(w) for w in self.words), default=0)


def overlaps(x: Sequence[int], y: Sequence[int]) -> list[int]:
    """Overlaps ``j`` with which ``y`` front-runs ``x``.

    ``j`` qualifies when the last ``j`` letters of ``y`` equal the first ``j``
    letters of ``x``, for ``1 <= j <= min(len(x), len(y))``. A word does not
    front-run itself over its full length, so ``j = len(x)`` is dropped when
    ``x == y``. For distinct words ``j = len(x)`` (``x`` a suffix of ``y``) is
    kept; dropping it miscounts sets where one forbidden word contains another.
    """
    x, y = tuple(x), tuple(y)
    top = min(len(x), len(y))
    if x == y:
        top -= 1
    return [j for j in range(1, top + 1) if y[len(y) - j :] == x[:j]]


@dataclass(frozen=True)
class WeightSystem:
    """``matrix @ W = rhs`` where ``W[i]`` is the weight of ``index[i]``."""

    index: tuple[Word, ...]
    matrix: tuple[tuple[RatFun, ...], ...]
    rhs: tuple[RatFun, ...]


def build_weight_system(F: ForbiddenSet) -> WeightSystem:
    # W(x) + sum_y sum_j z^(|x|-j) W(y) = -z^|x|
    index = F.words
    rows = []
    rhs = []
    for x in index:
        row = []
        for y in index:
            p = Poly.const(1) if x == y else Poly()
            for j in overlaps(x, y):
                p = p + Poly.monomial(1, len(x) - j)
            row.append(RatFun(p))
        rows.append(tuple(row))
        rhs.append(RatFun(Poly.monomial(-1, len(x))))
    return WeightSystem(index, tuple(rows), tuple(rhs))


def solve_weights(F: ForbiddenSet) -> dict[Word, RatFun]:
    if not F.words:
        return {}
    system = build_weight_system(F)
    sol = solve_linear_system(system.matrix, system.rhs)
    return dict(zip(system.index, sol))


def total_weight(F: ForbiddenSet) -> RatFun:
    total = RatFun(0)
    for w in solve_weights(F).values():
        total = total + w
    return total


def cluster_genfun(F: ForbiddenSet) -> RatFun:
    """Generating function ``1 / (1 - n z - W(F))`` counting words that avoid ``F``."""
    return 1 / (RatFun(Poly([1, -F.alphabet_size])) - total_weight(F))


def parse_forbidden_text(text: str, n: int, source: str = "<input>") -> ForbiddenSet:
    """Parse the line-oriented forbidden-word format.

    One word per line as comma-separated positive integers; blank lines and
    lines starting with ``#`` are skipped. Errors name the offending line.
    """
    words = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            word = tuple(int(tok) for tok in line.split(","))
        except ValueError:
            raise InvalidWord(f"{source}:{lineno}: cannot parse {line!r} as comma-separated integers") from None
        if any(a < 1 for a in word):
            raise InvalidWord(f"{source}:{lineno}: letters must be positive integers")
        if any(a > n for a in word):
            raise InvalidWord(f"{source}:{lineno}: letter exceeds alphabet size {n}")
        if len(word) < 2:
            raise InvalidWord(f"{source}:{lineno}: forbidden words must have length >= 2")
        words.append(word)
    return ForbiddenSet(n, tuple(words))


def load_forbidden_file(path: str | Path, n: int) -> ForbiddenSet:
    path = Path(path)
    return parse_forbidden_text(path.read_text(encoding="utf-8"), n, source=str(path))
