import pytest
from hypothesis import given, settings, strategies as st

from genlce import (ORDERED, UNORDERED, QueryError, Text, UsageError, build_index,
                    default_block_length, lce, lce_unordered)
from genlce.oracle import naive_lce

from conftest import fibonacci_word, periodic_symbols, random_symbols


def test_single_symbol():
    assert build_index(Text("x")).lce(1, 1) == 1


def test_all_pairs_small_word():
    s = "mississippi"
    idx = build_index(Text(s))
    for i in range(1, 12):
        for j in range(1, 12):
            assert lce(idx, i, j) == naive_lce(s, i, j)


def test_example_pairs():
    idx = build_index(Text("aabaab"))
    assert idx.lce(1, 4) == 3
    assert idx.lce(2, 2) == 5


@pytest.mark.parametrize("n,t", [(10, 16), (100, 16), (1000, 64), (10 ** 4, 256),
                                 (10 ** 5, 1024)])
def test_default_block_length(n, t):
    assert default_block_length(n) == t


def test_bad_configurations():
    with pytest.raises(UsageError):
        build_index(Text("ab" * 20), t=8)
    with pytest.raises(UsageError):
        build_index(Text("ab"), engine="nope")
    with pytest.raises(UsageError):
        build_index(Text("ab", UNORDERED), engine="pow2")
    with pytest.raises(UsageError):
        build_index(Text("ab", UNORDERED), t=4)
    with pytest.raises(UsageError):
        build_index(Text("ab"), mode=UNORDERED)
    with pytest.raises(UsageError):
        lce_unordered(build_index(Text("ab")), 1, 2)


def test_out_of_range_positions():
    idx = build_index(Text("abc"))
    with pytest.raises(IndexError):
        idx.lce(0, 1)
    with pytest.raises(IndexError):
        idx.lce(1, 4)


@pytest.mark.parametrize("engine", ["base4", "pow2"])
@pytest.mark.parametrize("cover", ["difference", "monotone"])
@pytest.mark.parametrize("t", [None, 4, 16, 64])
def test_configurations_match_oracle(rng, engine, cover, t):
    for s in (random_symbols(rng, 500, 2), periodic_symbols(rng, 500, 13),
              fibonacci_word(500)):
        idx = build_index(Text(s), engine=engine, t=t, cover=cover)
        for _ in range(1500):
            i, j = rng.randint(1, 500), rng.randint(1, 500)
            assert idx.lce(i, j) == naive_lce(s, i, j)


def test_unordered_index(rng):
    s = periodic_symbols(rng, 400, 11)
    idx = build_index(Text(s, UNORDERED))
    for _ in range(2000):
        i, j = rng.randint(1, 400), rng.randint(1, 400)
        assert lce_unordered(idx, i, j) == naive_lce(s, i, j)
    assert idx.text.stats().order_comparisons == 0
    assert idx.config()["t"] is None


def test_query_paths_are_counted():
    s = "ab" * 200
    idx = build_index(Text(s), t=16)
    idx.lce(1, 1)
    idx.lce(1, 2)
    idx.lce(1, 3)
    idx.lce(383, 385)
    st_ = idx.stats
    assert (st_.identity, st_.short_only, st_.coarse_path, st_.near_end) == (1, 1, 1, 1)


def test_empty_batch():
    idx = build_index(Text("abc"))
    result = idx.batch([])
    assert result.answers == [] and result.queries == 0
    assert result.comparisons.symbol_comparisons == 0


def test_repeated_batch_is_free(rng):
    s = random_symbols(rng, 2000, 2)
    idx = build_index(Text(s))
    queries = [(rng.randint(1, 2000), rng.randint(1, 2000)) for _ in range(500)]
    first = idx.batch(queries)
    second = idx.batch(queries)
    assert first.answers == second.answers
    assert second.comparisons.symbol_comparisons == 0


def test_identical_queries_only_pay_once():
    idx = build_index(Text("ab" * 300))
    result = idx.batch([(3, 5)] * 10)
    again = idx.batch([(3, 5)])
    assert len(set(result.answers)) == 1
    assert again.comparisons.symbol_comparisons == 0


def test_batch_reports_first_bad_query():
    idx = build_index(Text("abcabc"))
    with pytest.raises(QueryError) as info:
        idx.batch([(1, 4), (2, 5), (0, 1), (9, 9)])
    assert info.value.index == 2


@settings(max_examples=200, deadline=None)
@given(st.text(alphabet="ab", min_size=1, max_size=80), st.data())
def test_random_words(s, data):
    idx = build_index(Text(s), t=4)
    n = len(s)
    for _ in range(20):
        i = data.draw(st.integers(1, n))
        j = data.draw(st.integers(1, n))
        assert idx.lce(i, j) == naive_lce(s, i, j)


def test_ordered_mode_constant():
    assert build_index(Text("ab")).mode == ORDERED
