import itertools

import pytest
from conftest import EXAMPLE_1, EXAMPLE_2, brute_avoiding
from hypothesis import given, settings
from hypothesis import strategies as st

from streakgf.algebra import Poly, RatFun, series_expand
from streakgf.cluster import (
    ForbiddenSet,
    build_weight_system,
    cluster_genfun,
    load_forbidden_file,
    overlaps,
    parse_forbidden_text,
    solve_weights,
    validate_forbidden_set,
)
from streakgf.errors import InvalidWord
from streakgf.oracle import count_avoiding_exhaustive

a, b, c, d = 1, 2, 3, 4


def R(num, den=(1,)):
    return RatFun(Poly(num), Poly(den))


class TestOverlaps:
    def test_single_overlap(self):
        assert overlaps((c, b, a), (a, b, c, b)) == [2]

    def test_two_overlaps(self):
        assert overlaps((c, b, c, a, b), (a, b, c, b, c)) == [1, 3]

    def test_self_overlap_excludes_full_length(self):
        assert overlaps((a, a, a), (a, a, a)) == [1, 2]

    def test_suffix_containment_kept(self):
        # (2, 3) is a suffix of (1, 2, 3): y front-runs x over all of x
        assert overlaps((2, 3), (1, 2, 3)) == [2]

    @given(st.lists(st.integers(1, 3), min_size=1, max_size=5), st.lists(st.integers(1, 3), min_size=1, max_size=5))
    def test_every_overlap_is_a_match(self, x, y):
        js = overlaps(x, y)
        assert js == sorted(js)
        for j in range(1, min(len(x), len(y)) + 1):
            match = y[len(y) - j :] == x[:j] and not (x == y and j == len(x))
            assert (j in js) == match


class TestWeightSystem:
    def test_example_1_rows(self):
        system = build_weight_system(EXAMPLE_1)
        assert system.index == ((d, a), (a, b, a), (b, c, d))
        z, z2 = R([0, 1]), R([0, 0, 1])
        # W(d,a) + z W(b,c,d) = -z^2
        assert system.matrix[0] == (RatFun(1), RatFun(0), z)
        # W(a,b,a) = -z^3 - z^2 W(a,b,a) - z^2 W(d,a)
        assert system.matrix[1] == (z2, 1 + z2, RatFun(0))
        assert system.rhs[1] == R([0, 0, 0, -1])

    def test_no_overlap(self):
        system = build_weight_system(ForbiddenSet(2, ((1, 2),)))
        assert system.matrix == ((RatFun(1),),)
        assert system.rhs == (R([0, 0, -1]),)

    def test_self_overlapping_word(self):
        system = build_weight_system(ForbiddenSet(3, ((a, a, a),)))
        assert system.matrix == ((R([1, 1, 1]),),)


class TestSolveWeights:
    def test_example_1(self):
        w = solve_weights(EXAMPLE_1)
        assert w[(d, a)] == R([0, 0, -1, 0, 1])
        assert w[(a, b, a)] == R([0, 0, 0, -1, 1, 0, -1], [1, 0, 1])
        assert w[(b, c, d)] == R([0, 0, 0, -1])

    def test_example_2(self):
        w = solve_weights(EXAMPLE_2)
        assert w[(a, b, c)] == R([0, 0, 0, -1, -1], [1, 1, 1])
        assert w[(a, a, a)] == R([0, 0, 0, -1], [1, 1, 1])

    def test_single_word(self):
        assert solve_weights(ForbiddenSet(2, ((1, 2),))) == {(1, 2): R([0, 0, -1])}

    def test_residual_is_zero(self):
        for F in (EXAMPLE_1, EXAMPLE_2, ForbiddenSet(3, ((1, 2, 1), (2, 1), (1, 1, 2, 1)))):
            system = build_weight_system(F)
            w = solve_weights(F)
            for row, rhs in zip(system.matrix, system.rhs):
                total = RatFun(0)
                for coef, word in zip(row, system.index):
                    total = total + coef * w[word]
                assert total == rhs


class TestClusterGenfun:
    def test_example_1(self):
        f = cluster_genfun(EXAMPLE_1)
        assert f == R([1, 0, 1], [1, -4, 2, -2, -1, 1])
        assert series_expand(f, 6).as_ints() == [1, 4, 15, 54, 195, 705, 2549]

    def test_example_2(self):
        f = cluster_genfun(EXAMPLE_2)
        assert f == R([1, 1, 1], [1, -2, -2, -1, 1])
        assert series_expand(f, 6).as_ints() == [1, 3, 9, 25, 70, 196, 548]

    def test_empty_set(self):
        assert cluster_genfun(ForbiddenSet(7, ())) == R([1], [1, -7])

    def test_subword_containment_still_counts(self):
        F = ForbiddenSet(2, ((1, 2), (1, 1, 2)))
        assert series_expand(cluster_genfun(F), 8).as_ints() == [brute_avoiding(F, s) for s in range(9)]


def random_sets(seed, count):
    import random

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, 4)
        size = rng.randint(1, 3)
        words = {tuple(rng.randint(1, n) for _ in range(rng.randint(2, 3))) for _ in range(size)}
        out.append(ForbiddenSet(n, tuple(words)))
    return out


@pytest.mark.parametrize("chunk", range(4))
def test_oracle_equivalence(chunk):
    # 4 x 60 = 240 random sets, each compared through order 10
    for F in random_sets(1000 + chunk, 60):
        series = series_expand(cluster_genfun(F), 10).as_ints()
        assert series == [count_avoiding_exhaustive(F, s).count for s in range(11)], F


word_sets = st.integers(1, 4).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.lists(st.integers(1, n), min_size=2, max_size=4).map(tuple), min_size=0, max_size=3),
    )
)


@given(word_sets)
@settings(max_examples=80, deadline=None)
def test_leading_coefficients(case):
    n, words = case
    f = cluster_genfun(ForbiddenSet(n, tuple(words)))
    assert series_expand(f, 1).as_ints() == [1, n]


class TestValidation:
    def test_length_one_word_is_error(self):
        diags = validate_forbidden_set([(1,), (1, 2)], 2)
        assert "error" in [x.level for x in diags]
        with pytest.raises(InvalidWord):
            ForbiddenSet(2, ((1,), (1, 2)))

    def test_subword_warning(self):
        diags = validate_forbidden_set([(1, 2), (3, 1, 2, 4)], 4)
        assert [x.level for x in diags] == ["warning"]
        assert diags[0].words == ((1, 2), (3, 1, 2, 4))

    def test_clean(self):
        assert validate_forbidden_set([(1, 2, 3)], 3) == []

    def test_out_of_range(self):
        with pytest.raises(InvalidWord):
            validate_forbidden_set([(1, 5)], 4)
        with pytest.raises(InvalidWord):
            validate_forbidden_set([(0, 1)], 4)

    def test_sorted_and_deduplicated(self):
        F = ForbiddenSet(3, ((2, 1, 1), (1, 2), (1, 2), (1, 1, 3)))
        assert F.words == ((1, 2), (1, 1, 3), (2, 1, 1))
        assert len(F) == 3 and F.max_length == 3


class TestParsing:
    def test_example_file(self, tmp_path):
        path = tmp_path / "ex1.txt"
        path.write_text("# a b a\n1,2,1\n\n4, 1\n2,3,4\n")
        assert load_forbidden_file(path, 4) == EXAMPLE_1

    def test_empty_text(self):
        assert parse_forbidden_text("", 3) == ForbiddenSet(3, ())

    @pytest.mark.parametrize(
        "text, fragment",
        [("1,2\n1,x\n", ":2:"), ("1,2\n\n1,9\n", ":3:"), ("2\n", ":1:"), ("1,2\n0,1\n", ":2:")],
    )
    def test_errors_name_the_line(self, text, fragment):
        with pytest.raises(InvalidWord, match=fragment):
            parse_forbidden_text(text, 3, source="words.txt")

    def test_every_word_of_length_two(self):
        # forbidding every pair leaves only words of length < 2
        F = ForbiddenSet(2, tuple(itertools.product((1, 2), repeat=2)))
        assert series_expand(cluster_genfun(F), 5).as_ints() == [1, 2, 0, 0, 0, 0]
