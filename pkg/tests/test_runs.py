import math

import pytest

from genlce import Run, Text, UsageError, build_index, compute_runs
from genlce.oracle import naive_runs
from genlce.runs import compute_runs_detailed, extend, minimal_period

from conftest import fibonacci_word, periodic_symbols, random_symbols


class _Pair:
    def __init__(self, s):
        self.forward = build_index(Text(s))
        self.backward = build_index(Text(s[::-1]))
        self.forward.n = self.backward.n = len(s)


def test_no_runs():
    assert compute_runs(Text("abc")) == []


def test_unary_word():
    assert compute_runs(Text("aaaa")) == [Run(1, 4, 1)]


def test_mississippi():
    runs = compute_runs(Text("mississippi"))
    assert runs == naive_runs("mississippi")
    for r in [Run(3, 4, 1), Run(6, 7, 1), Run(9, 10, 1), Run(2, 8, 3)]:
        assert r in runs


def test_run_fields():
    r = Run(2, 8, 3)
    assert r.length == 7 and r.exponent == pytest.approx(7 / 3)


def test_extend_finds_crossing_square():
    s = "aabaab"
    pair = _Pair(s)
    assert extend(pair.forward, pair.backward, 1, 3) == Run(1, 6, 3)
    assert extend(pair.forward, pair.backward, 4, 3) == Run(1, 6, 3)


def test_extend_short_fragment_is_none():
    pair = _Pair("abcd")
    assert extend(pair.forward, pair.backward, 2, 1) is None


def test_extended_candidates_reduce_to_runs(rng):
    s = "".join("ab"[x] for x in random_symbols(rng, 200, 2))
    pair = _Pair(s)
    truth = set(naive_runs(s))
    for a in range(1, 201):
        for p in range(1, 30):
            found = extend(pair.forward, pair.backward, a, p)
            if found is not None:
                reduced = Run(found.start, found.end, minimal_period(pair.forward, found))
                assert reduced in truth


def test_unordered_rejected():
    with pytest.raises(UsageError):
        compute_runs(Text("aa", "unordered"))


def test_oracle_golden_word():
    s = "aabaabaa"
    assert compute_runs(Text(s)) == naive_runs(s)


@pytest.mark.parametrize("n", [50, 300, 1000])
def test_matches_oracle_random(rng, n):
    for sigma in (2, 3):
        s = random_symbols(rng, n, sigma)
        assert compute_runs(Text(s)) == naive_runs(s)


def test_structured_words():
    for s in (fibonacci_word(300), [bin(x).count("1") & 1 for x in range(256)]):
        assert compute_runs(Text(s)) == naive_runs(s)


def test_pow2_engine_gives_same_runs(rng):
    s = periodic_symbols(rng, 400, 7, sigma=2)
    assert compute_runs_detailed(Text(s), engine="pow2").runs == compute_runs(Text(s))


def test_query_budget(rng):
    n = 5000
    result = compute_runs_detailed(Text(random_symbols(rng, n, 2)))
    assert len(result.runs) < n
    assert result.queries <= 8 * n * math.log2(n)


@pytest.mark.slow
def test_matches_oracle_long_random(rng):
    s = random_symbols(rng, 10 ** 4, 2)
    assert compute_runs(Text(s)) == naive_runs(s)
