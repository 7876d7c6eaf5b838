import random

import pytest
from hypothesis import given, strategies as st

from genlce import dsu


def test_union_find_basics():
    f = dsu.make(5)
    assert f.union(0, 1)
    assert not f.union(1, 0)
    assert f.union(3, 4)
    assert f.same(0, 1) and not f.same(1, 3)
    assert sorted(map(sorted, dsu.classes(f))) == [[0, 1], [2], [3, 4]]
    assert f.unions == 2


def test_out_of_range_element():
    with pytest.raises(IndexError):
        dsu.make(3).find(3)


@given(st.lists(st.tuples(st.integers(0, 19), st.integers(0, 19)), max_size=60))
def test_matches_naive_partition(pairs):
    f = dsu.make(20)
    label = list(range(20))
    for a, b in pairs:
        f.union(a, b)
        la, lb = label[a], label[b]
        label = [la if x == lb else x for x in label]
    for x in range(20):
        for y in range(20):
            assert f.same(x, y) == (label[x] == label[y])


def test_path_compression_keeps_hops_small():
    rng = random.Random(1)
    n = 4096
    f = dsu.make(n)
    for _ in range(n):
        f.union(rng.randrange(n), rng.randrange(n))
    for x in range(n):
        f.find(x)
    # after one full pass every node hangs directly off its root
    before = f.hops
    for x in range(n):
        f.find(x)
    assert f.hops - before <= n
