"""Exact counting of words that avoid forbidden subwords, with closed forms
for words avoiding streaks of k increasing letters."""

__version__ = "0.1.0"

from .algebra import Poly, RatFun, TruncatedSeries, series_expand, solve_linear_system  # noqa: E402
from .cluster import ForbiddenSet, cluster_genfun, overlaps, solve_weights  # noqa: E402
from .streaks import psi, soft_streak_genfun, streak_genfun  # noqa: E402

__all__ = [
    "ForbiddenSet",
    "Poly",
    "RatFun",
    "TruncatedSeries",
    "cluster_genfun",
    "overlaps",
    "psi",
    "series_expand",
    "soft_streak_genfun",
    "solve_linear_system",
    "solve_weights",
    "streak_genfun",
]
