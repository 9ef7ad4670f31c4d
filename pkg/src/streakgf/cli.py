"""Command-line interface: ``streakgf <command> [options]``.

Every command prints one envelope (JSON by default, ``--format text`` for a
readable form). Exit codes: 0 success, 1 verification failure, 2 usage or
input error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from . import __version__, _kernels
from .algebra import Poly, RatFun, series_expand
from .analysis import expected_draws, expected_draws_soft, minimal_set, mu, radius_check
from .cluster import ForbiddenSet, cluster_genfun, load_forbidden_file, solve_weights, validate_forbidden_set
from .errors import BudgetExceeded, StreakGFError
from .oracle import count_avoiding_automaton, count_avoiding_exhaustive, count_streak_free, simulate_draws
from .streaks import soft_streak_genfun, streak_genfun, streak_set
from .verify import SUITES, run_suite

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class OutputEnvelope:
    command: str
    params: dict
    result: Any
    conjectural: bool = False
    version: str = field(default=__version__)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)


def rat_json(x: Fraction | int) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def poly_json(p: Poly) -> list[int]:
    return p.int_coeffs() if all(c.denominator == 1 for c in p.coeffs) else [rat_json(c) for c in p.coeffs]


def ratfun_json(f: RatFun) -> dict:
    return {"numerator": poly_json(f.num), "denominator": poly_json(f.den)}


def _series(f: RatFun, order: int) -> list:
    coeffs = series_expand(f, order)
    return [int(c) if c.denominator == 1 else rat_json(c) for c in coeffs]


# ------------------------------------------------------------------ commands


def cmd_genfun(args) -> OutputEnvelope:
    f = soft_streak_genfun(args.n, args.k) if args.soft else streak_genfun(args.n, args.k)
    result = ratfun_json(f) | {"series": _series(f, args.order)}
    return OutputEnvelope("genfun", {"n": args.n, "k": args.k, "soft": args.soft, "order": args.order}, result, args.soft)


def cmd_cluster(args) -> OutputEnvelope:
    F = load_forbidden_file(args.forbidden, args.n)
    weights = solve_weights(F)
    total = RatFun(0)
    for w in weights.values():
        total = total + w
    f = cluster_genfun(F)
    result = {
        "diagnostics": [{"level": d.level, "message": d.message} for d in validate_forbidden_set(F.words, F.n)],
        "weights": [{"word": list(w), "weight": ratfun_json(weights[w])} for w in F.words],
        "total_weight": ratfun_json(total),
        "genfun": ratfun_json(f),
        "series": _series(f, args.order),
    }
    return OutputEnvelope("cluster", {"n": args.n, "forbidden": args.forbidden, "order": args.order}, result)


def cmd_count(args) -> OutputEnvelope:
    params = {"n": args.n, "s": args.s, "method": args.method}
    if args.forbidden:
        F = load_forbidden_file(args.forbidden, args.n)
        params["forbidden"] = args.forbidden
    elif args.k is not None:
        params |= {"k": args.k, "soft": args.soft}
        F = None
    else:
        raise UsageError("count needs --k or --forbidden")
    if F is None and args.method == "exhaustive":
        res = count_streak_free(args.n, args.k, args.s, args.soft, budget=args.budget)
    else:
        if F is None:
            F = _streak_family(args.n, args.k, args.soft)
        if args.method == "exhaustive":
            res = count_avoiding_exhaustive(F, args.s, budget=args.budget)
        else:
            res = count_avoiding_automaton(F, args.s)
    return OutputEnvelope("count", params, {"s": res.s, "count": res.count, "method": res.method})


def _streak_family(n: int, k: int, soft: bool) -> ForbiddenSet:
    from .streaks import soft_streak_set

    return soft_streak_set(n, k) if soft else streak_set(n, k)


def cmd_simulate(args) -> OutputEnvelope:
    res = simulate_draws(args.n, args.k, args.soft, args.trials, args.seed, args.workers)
    params = {"n": args.n, "k": args.k, "soft": args.soft, "trials": args.trials, "seed": args.seed, "workers": args.workers}
    result = asdict(res) | {"backend": _kernels.backend_name()}
    return OutputEnvelope("simulate", params, result)


def cmd_expected(args) -> OutputEnvelope:
    value = expected_draws_soft(args.n, args.k) if args.soft else expected_draws(args.n, args.k)
    if value == math.inf:
        result = {"infinite": True, "value": None, "approx": "inf"}
    else:
        result = {"infinite": False, "value": rat_json(value), "approx": f"{float(value):.15g}"}
    return OutputEnvelope("expected", {"n": args.n, "k": args.k, "soft": args.soft}, result, args.soft)


def cmd_mu(args) -> OutputEnvelope:
    res = mu(args.k, args.digits)
    return OutputEnvelope("mu", {"k": args.k, "digits": args.digits}, asdict(res))


def cmd_radius(args) -> OutputEnvelope:
    params: dict = {"n": args.n}
    if args.forbidden:
        F = load_forbidden_file(args.forbidden, args.n)
        params["forbidden"] = args.forbidden
        rep = radius_check(F)
    elif args.streak_k is not None:
        params["streak_k"] = args.streak_k
        F = streak_set(args.n, args.streak_k)
        rep = radius_check(F, streak_genfun(args.n, args.streak_k))
    elif args.minimal_k is not None:
        params["minimal_k"] = args.minimal_k
        rep = radius_check(minimal_set(args.n, args.minimal_k))
    else:
        raise UsageError("radius needs --forbidden, --streak-k or --minimal-k")
    root = rep.smallest_positive_root
    result = {
        "denominator": poly_json(rep.denominator),
        "smallest_positive_root": None if root is None else [rat_json(root[0]), rat_json(root[1])],
        "root_approx": None if root is None else f"{float(root[1]):.15g}",
        "one_over_n": rat_json(Fraction(1, args.n)),
        "exceeds_one_over_n": rep.exceeds_one_over_n,
    }
    return OutputEnvelope("radius", params, result)


def cmd_verify(args) -> OutputEnvelope:
    report = run_suite(args.suite, args.n_max, args.k_max, args.s_max)
    result = {
        "suite": report.suite,
        "passed": report.passed,
        "cases": [{"params": c.params, "passed": c.passed, "detail": c.detail} for c in report.cases],
    }
    params = {"suite": args.suite, "n_max": args.n_max, "k_max": args.k_max, "s_max": args.s_max}
    return OutputEnvelope("verify", params, result, report.conjectural)


# ------------------------------------------------------------------- parsing


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(prog="streakgf", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("genfun", parents=[common], help="streak / soft-streak generating function")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--soft", action="store_true")
    p.add_argument("--order", type=_nonneg, default=20)
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("cluster", parents=[common], help="cluster method on a forbidden-word file")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--forbidden", required=True, metavar="FILE")
    p.add_argument("--order", type=_nonneg, default=20)
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("count", parents=[common], help="brute-force or automaton word counts")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--s", type=_nonneg, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--soft", action="store_true")
    p.add_argument("--forbidden", metavar="FILE")
    p.add_argument("--method", choices=("exhaustive", "automaton"), default="exhaustive")
    p.add_argument("--budget", type=_positive, default=None, help="max words to enumerate (default: $STREAKGF_BUDGET or 1e8)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("simulate", parents=[common], help="Monte Carlo draws until a streak")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--soft", action="store_true")
    p.add_argument("--trials", type=_positive, default=10**6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("expected", parents=[common], help="exact expected number of draws")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--soft", action="store_true")
    p.set_defaults(func=cmd_expected)

    p = sub.add_parser("mu", parents=[common], help="continuous-limit expected draws to many digits")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--digits", type=_positive, default=60)
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("radius", parents=[common], help="isolate the smallest positive pole")
    p.add_argument("--n", type=_positive, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--forbidden", metavar="FILE")
    group.add_argument("--streak-k", type=int)
    group.add_argument("--minimal-k", type=int)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("verify", parents=[common], help="run a reproduction suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--n-max", type=_positive)
    p.add_argument("--k-max", type=_positive)
    p.add_argument("--s-max", type=_nonneg)
    p.set_defaults(func=cmd_verify)
    return parser


# ------------------------------------------------------------------- output


def _text_value(value) -> str:
    if isinstance(value, dict) and set(value) == {"num", "den"}:
        return value["num"] if value["den"] == "1" else f"{value['num']}/{value['den']}"
    if isinstance(value, list):
        return "[" + ", ".join(_text_value(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_text_value(v)}" for k, v in value.items()) + "}"
    return str(value)


def render_text(env: OutputEnvelope) -> str:
    lines = []
    if env.conjectural:
        lines.append("[CONJECTURAL] result depends on an unproven formula")
    lines.append(f"{env.command} ({', '.join(f'{k}={v}' for k, v in env.params.items() if v is not None)})")
    result = env.result
    if env.command == "verify":
        lines.append(f"suite: {result['suite']}")
        for case in result["cases"]:
            params = " ".join(f"{k}={v}" for k, v in case["params"].items())
            status = "PASS" if case["passed"] else "FAIL"
            lines.append(f"  {status}  {params}" + (f"  {case['detail']}" if case["detail"] else ""))
        lines.append(f"passed: {result['passed']}")
    else:
        for key, value in result.items():
            if key == "weights":
                for item in value:
                    lines.append(f"  W{tuple(item['word'])} = {_text_value(item['weight'])}")
            else:
                lines.append(f"{key}: {_text_value(value)}")
    lines.append(f"version: {env.version}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        env = args.func(args)
    except BudgetExceeded as exc:
        print(f"streakgf: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, StreakGFError, OSError, ValueError) as exc:
        print(f"streakgf {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(env.to_json() if args.format == "json" else render_text(env))
    if env.command == "verify" and not env.result["passed"]:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
