"""The compiled and pure-Python kernels must agree on answers and on every counter."""

import random

import pytest

from genlce import available_backends
from genlce.covers import build_t_cover

BACKENDS = available_backends()
needs_both = pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernel not built")


def _texts():
    rng = random.Random(11)
    yield [rng.randrange(2) for _ in range(300)]
    base = [rng.randrange(3) for _ in range(17)]
    yield [base[x % 17] for x in range(300)]
    yield [bin(x).count("1") & 1 for x in range(300)]


def _drive(kernels, symbols, ops):
    core = kernels.TextCore(symbols, True)
    n = len(symbols)
    cover = build_t_cover(4, n)
    b4 = kernels.Base4Core(core, 5)
    p2 = kernels.Pow2Core(core, 9, 2, cover.mask, cover.shift_table)
    answers = []
    for kind, k, i, j in ops:
        if kind == 0:
            answers.append(b4.short_lce(k % 6, i, j))
        elif kind == 1:
            answers.append(b4.sparse_short_lce(k % 6, i, j))
        elif kind == 2:
            answers.append(p2.short_lce(k, i, j))
        elif kind == 3:
            answers.append(p2.fast_short_lce(k, i, j))
        else:
            answers.append(p2.sparse_short_lce(max(k, 2), i, j))
    dsu = [(b4.level_dsu(k).finds, b4.level_dsu(k).unions, b4.level_dsu(k).hops)
           for k in b4.materialized_levels()]
    dsu += [(p2.full_dsu(k).finds, p2.full_dsu(k).unions) for k in range(10)]
    counters = (core.order_comparisons, core.equality_tests, core.memo_hits,
                core.memo.finds, core.memo.unions, list(b4.short_calls),
                list(b4.sparse_calls), list(p2.calls), list(p2.sparse_calls))
    return answers, dsu, counters


@needs_both
def test_kernels_agree_on_answers_and_counters():
    rng = random.Random(5)
    for symbols in _texts():
        n = len(symbols)
        ops = [(rng.randrange(5), rng.randrange(10), rng.randint(1, n), rng.randint(1, n))
               for _ in range(3000)]
        results = [_drive(k, symbols, ops) for k in BACKENDS.values()]
        assert results[0] == results[1]


@needs_both
def test_suffix_structures_agree():
    rng = random.Random(9)
    py, c = BACKENDS["python"], BACKENDS["compiled"]
    for _ in range(30):
        s = [rng.randrange(1, 5) for _ in range(rng.randint(1, 200))]
        sa = py.suffix_array(s, 4)
        assert sa == list(c.suffix_array(s, 4)) == sorted(range(len(s)), key=lambda x: s[x:])
        assert list(py.lcp_array(s, sa)) == list(c.lcp_array(s, sa))
        lcp = py.lcp_array(s, sa)
        ra, rb = py.RangeMin(lcp), c.RangeMin(lcp)
        for _ in range(50):
            lo = rng.randrange(len(lcp))
            hi = rng.randint(lo + 1, len(lcp))
            assert ra.query(lo, hi) == rb.query(lo, hi) == min(lcp[lo:hi])


@needs_both
def test_shift_and_digit_helpers_agree():
    py, c = BACKENDS["python"], BACKENDS["compiled"]
    for p in range(1, 3000):
        assert py.trailing_nonzero_digits(p) == c.trailing_nonzero_digits(p)
    rng = random.Random(2)
    for _ in range(3000):
        k, i, j = rng.randint(0, 7), rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 6)
        assert py.find_shift(k, i, j) == c.find_shift(k, i, j)
        assert py.monotone_step(k, i, j) == c.monotone_step(k, i, j)


def test_python_kernel_always_available():
    assert "python" in BACKENDS
