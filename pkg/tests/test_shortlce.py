import pytest

from genlce import Text
from genlce.covers import MonotoneCoverFamily
from genlce.oracle import naive_lce
from genlce.shortlce import Base4Engine, Pow2Engine, log2_ceil, log4_ceil

from conftest import fibonacci_word, periodic_symbols, random_symbols


def test_log_helpers():
    assert [log4_ceil(x) for x in (1, 2, 4, 5, 16, 17)] == [0, 1, 1, 2, 2, 3]
    assert [log2_ceil(x) for x in (1, 2, 3, 4, 5)] == [0, 1, 2, 2, 3]


def test_pow2_small_example():
    assert Pow2Engine(Text("aabaab")).short_lce(2, 1, 4) == 3


def test_pow2_identical_positions():
    e = Pow2Engine(Text("abcabc"))
    assert e.short_lce(2, 3, 3) == 4


def test_pow2_repeat_query_is_free():
    w = Text("a" * 64)
    e = Pow2Engine(w)
    assert e.short_lce(3, 1, 2) == 8
    before = w.stats()
    assert e.short_lce(3, 1, 2) == 8
    assert (w.stats() - before).symbol_comparisons == 0


def test_pow2_sparse_outside_cover_is_none():
    w = Text("ab" * 32)
    e = Pow2Engine(w, max_level=5, sparse_level=2)
    inside = e.cover.positions()
    outside = [p for p in range(1, 65) if p not in set(inside)]
    assert e.sparse_short_lce(3, inside[0], outside[0]) is None
    assert e.sparse_short_lce(3, inside[0], inside[0]) == 8


def test_pow2_fast_periodic_example():
    s = "ab" * 32
    e = Pow2Engine(Text(s), max_level=5, sparse_level=2)
    assert e.fast_short_lce(5, 1, 3) == min(naive_lce(s, 1, 3), 32) == 32


def test_pow2_fast_immediate_mismatch_touches_no_forest():
    w = Text("ab" * 32)
    e = Pow2Engine(w, max_level=5, sparse_level=2)
    assert e.fast_short_lce(5, 1, 2) == 0
    assert w.stats().equality_tests == 1
    assert sum(e.calls_by_level()["sparse"]) == 0


def test_base4_sparse_outside_family_is_none():
    e = Base4Engine(Text("abcd" * 20))
    assert e.sparse_short_lce(1, 4, 5) is None
    assert e.sparse_short_lce(1, 5, 5) == 4


def test_base4_memo_hit_is_free():
    w = Text("a" * 80)
    e = Base4Engine(w)
    assert e.short_lce(2, 1, 17) == 16
    before = w.stats()
    assert e.short_lce(2, 1, 17) == 16
    assert (w.stats() - before).symbol_comparisons == 0


def test_base4_immediate_mismatch():
    w = Text("ab" * 40)
    e = Base4Engine(w)
    # 4 has a zero lowest digit, so the climb stops at its first level-0 call
    assert e.traced_short_lce(3, 4, 5) == (0, [(0, 4, 5, 1)])
    assert e.calls_by_level()["sparse"] == [1, 0, 0, 0, 0]
    assert w.stats().equality_tests == 1


def test_identical_positions_return_the_cap():
    e = Base4Engine(Text("abcab"))
    assert e.short_lce(2, 4, 4) == 16
    with pytest.raises(ValueError):
        e.short_lce(3, 1, 2)


def test_capped_queries_accept_any_cap():
    s = "ab" * 50
    b4, p2 = Base4Engine(Text(s)), Pow2Engine(Text(s))
    for cap in (1, 3, 5, 16, 33, 100):
        for i, j in ((1, 3), (2, 4), (1, 2), (7, 7)):
            want = cap if i == j else min(naive_lce(s, i, j), cap)
            assert b4.short_lce_capped(cap, i, j) == want
            assert p2.short_lce_capped(cap, i, j) == want


@pytest.mark.parametrize("kind", ["random", "periodic", "fibonacci"])
def test_engines_match_capped_oracle(rng, kind):
    n = 150
    if kind == "random":
        s = random_symbols(rng, n, 2)
    elif kind == "periodic":
        s = periodic_symbols(rng, n, 7)
    else:
        s = fibonacci_word(n)
    b4 = Base4Engine(Text(s))
    p2 = Pow2Engine(Text(s))
    for _ in range(2000):
        i, j = rng.randint(1, n), rng.randint(1, n)
        # a suffix agrees with itself past the end, so identical positions hit any cap
        lce = naive_lce(s, i, j) if i != j else 10 ** 9
        k4 = rng.randint(0, b4.max_level)
        assert b4.short_lce(k4, i, j) == min(lce, 4 ** k4)
        k2 = rng.randint(0, p2.max_level)
        assert p2.short_lce(k2, i, j) == min(lce, 2 ** k2)
        assert p2.fast_short_lce(k2, i, j) == min(lce, 2 ** k2)


def test_base4_shift_chain():
    base = [(x * 7 + x * x) % 5 for x in range(267)]
    s = (base * 3)[:700]
    i, j = int("10130", 4), int("00101", 4)
    assert naive_lce(s, i, j) > 4 ** 4
    result, trace = Base4Engine(Text(s)).traced_short_lce(4, i, j)
    assert result == 256
    assert [level for level, *_ in trace] == [0, 1, 1, 3, 4]
    assert [d for *_, d in trace[:4]] == \
        [int(d, 4) for d in ("00001", "00011", "00021", "01021")]
    assert trace[-1][1:3] == (int("11211", 4), int("01122", 4))


def test_base4_unions_stay_within_level_sizes(rng):
    s = periodic_symbols(rng, 600, 5)
    w = Text(s)
    e = Base4Engine(w)
    for _ in range(3000):
        k = rng.randint(0, e.max_level)
        e.short_lce(k, rng.randint(1, 600), rng.randint(1, 600))
    fam = MonotoneCoverFamily(600)
    for k, unions in e.unions_by_level().items():
        assert unions <= fam.size(k)
