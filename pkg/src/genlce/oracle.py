"""Brute-force references for tests and the ``verify`` command.

Nothing here calls into the engines or the kernels: these functions read raw
symbols directly and are deliberately naive.
"""

from __future__ import annotations

from collections import Counter
from typing import Optional, Sequence, Union

from .runs import Run
from .text import Text, as_symbols

Source = Union[Text, Sequence[int], str, bytes]


def naive_lce(text: Source, i: int, j: int, counter: Optional[Counter] = None) -> int:
    """Longest common prefix of the suffixes at 1-based i and j.

    Symbol comparisons made here are tallied in ``counter["comparisons"]``
    when a counter is given, never in the text's own counters.
    """
    w = as_symbols(text)
    n = len(w)
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"positions ({i}, {j}) outside [1, {n}]")
    if i == j:
        return n - i + 1
    k = 0
    tests = 0
    while i + k <= n and j + k <= n:
        tests += 1
        if w[i + k - 1] != w[j + k - 1]:
            break
        k += 1
    if counter is not None:
        counter["comparisons"] += tests
    return k


def naive_lce_table(text: Source) -> list[list[int]]:
    """All-pairs LCE, ``table[i][j]`` for 1 <= i, j <= n (row/col 0 unused)."""
    w = as_symbols(text)
    n = len(w)
    table = [[0] * (n + 2) for _ in range(n + 2)]
    for i in range(n, 0, -1):
        for j in range(n, 0, -1):
            if w[i - 1] == w[j - 1]:
                table[i][j] = table[i + 1][j + 1] + 1
    return table


def naive_block_order(text: Source, t: int, p: int, q: int) -> int:
    """Lexicographic order of the length-t blocks at p and q, padded past the end.

    Padding symbols are unique, below every real symbol, and ordered by position.
    """
    w = as_symbols(text)
    n = len(w)
    for off in range(t):
        a, b = p + off, q + off
        if a == b:
            continue
        if a > n or b > n:
            if a > n and b > n:
                return -1 if a < b else 1
            return -1 if a > n else 1
        x, y = w[a - 1], w[b - 1]
        if x != y:
            return -1 if x < y else 1
    return 0


def _smallest_period(w: Sequence, s: int, e: int) -> int:
    length = e - s + 1
    for p in range(1, length + 1):
        if all(w[x] == w[x + p] for x in range(s, e - p + 1)):
            return p
    return length


def naive_runs(text: Source) -> list[Run]:
    """Every maximal fragment whose smallest period p fits at least twice."""
    w = as_symbols(text)
    n = len(w)
    found = set()
    for s in range(n):
        for p in range(1, (n - s) // 2 + 1):
            e = s
            while e + p < n and w[e] == w[e + p]:
                e += 1
            end = e + p - 1  # last index of the p-periodic fragment from s
            if end - s + 1 < 2 * p:
                continue
            if s > 0 and w[s - 1] == w[s - 1 + p]:
                continue
            if _smallest_period(w, s, end) != p:
                continue
            found.add(Run(s + 1, end + 1, p))
    return sorted(found)
