import itertools

import pytest

from streakgf import _kernels
from streakgf.cluster import ForbiddenSet, is_subword

# letters a, b, c, d encoded as 1, 2, 3, 4
EXAMPLE_1 = ForbiddenSet(4, ((1, 2, 1), (4, 1), (2, 3, 4)))
EXAMPLE_2 = ForbiddenSet(3, ((1, 2, 3), (1, 1, 1)))


def brute_avoiding(F, s):
    """Plain itertools enumeration, independent of the compiled kernels."""
    return sum(
        1
        for w in itertools.product(range(1, F.n + 1), repeat=s)
        if not any(is_subword(f, w) for f in F.words)
    )


def brute_streak_free(n, k, s, soft=False):
    count = 0
    for w in itertools.product(range(n), repeat=s):
        run = 1
        bad = False
        for i in range(1, s):
            if w[i] > w[i - 1] or (soft and w[i] == w[i - 1]):
                run += 1
                if run >= k:
                    bad = True
                    break
            else:
                run = 1
        count += not bad
    return count


@pytest.fixture(params=["numba", "numpy"])
def backend(request, monkeypatch):
    if request.param == "numba" and not _kernels.HAVE_NUMBA:
        pytest.skip("numba not installed")
    monkeypatch.setenv(_kernels.ENV_FLAG, "0" if request.param == "numba" else "1")
    return request.param


# ---------------------------------------------------------------- acceptance

_criteria: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion reported in the summary")


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    number, title = marker
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[number] = (title, "PASS" if report.passed else "FAIL", report.duration)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status, seconds = _criteria[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}  ({seconds:.2f} s)")
