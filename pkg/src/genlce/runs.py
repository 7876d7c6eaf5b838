"""All runs of an ordered text by divide and conquer over LCE queries.

Each segment ``[lo, hi)`` (0-based) is split at ``mid``. A run crossing the
split extends at least p symbols past it on one side, so anchoring the
period at ``mid`` (right side) or at ``mid - p`` (left side) and extending
with one forward and one backward LCE query recovers it exactly. Runs that
do not cross are found inside the two halves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import UsageError
from .lce import LceIndex, build_index
from .text import ComparisonStats, Text


class Run(NamedTuple):
    """1-based inclusive fragment ``[start, end]`` with smallest period ``period``."""

    start: int
    end: int
    period: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    @property
    def exponent(self) -> float:
        return self.length / self.period


@dataclass
class RunsResult:
    runs: list[Run]
    forward_queries: int
    backward_queries: int
    comparisons: ComparisonStats
    preprocessing: ComparisonStats

    @property
    def queries(self) -> int:
        return self.forward_queries + self.backward_queries


class _Counted:
    """An index plus a count of the LCE queries routed through it."""

    def __init__(self, index: LceIndex):
        self.index = index
        self.n = index.text.n
        self.calls = 0

    def lce(self, i: int, j: int) -> int:
        self.calls += 1
        return self.index.lce(i, j)


def extend(forward, backward, anchor: int, period: int) -> Optional[Run]:
    """Maximal p-periodic fragment through ``anchor`` and ``anchor + period``.

    ``forward`` answers LCE on the text and ``backward`` on its reversal.
    Returns the fragment as a Run when it holds at least two periods, with
    ``period`` not yet reduced to the smallest one.
    """
    n = forward.n
    a, p = anchor, period
    if p < 1 or not 1 <= a <= n:
        return None
    right = forward.lce(a, a + p) if a + p <= n else 0
    # common suffix ending at a-1 and a+p-1, read forwards on the reversal
    left = backward.lce(n + 2 - a, n + 2 - a - p) if a >= 2 and a + p - 1 <= n else 0
    if left + right < p:
        return None
    return Run(a - left, a + p + right - 1, p)


def _prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def minimal_period(forward, run: Run) -> int:
    """Smallest period of ``run``; it divides ``run.period`` since the fragment is long."""
    p = run.period
    shrunk = True
    while shrunk:
        shrunk = False
        for r in _prime_factors(p):
            q = p // r
            if forward.lce(run.start, run.start + q) >= run.length - q:
                p = q
                shrunk = True
                break
    return p


def compute_runs_detailed(text: Text, engine: str = "base4",
                          t: Optional[int] = None) -> RunsResult:
    if not text.ordered:
        raise UsageError("runs need an ordered alphabet")
    n = text.n
    reverse = text.reversed()
    forward = _Counted(build_index(text, engine=engine, t=t))
    backward = _Counted(build_index(reverse, engine=engine, t=t))
    before = text.stats() + reverse.stats()

    best: dict[tuple[int, int], int] = {}

    def offer(found: Optional[Run]) -> None:
        if found is None:
            return
        key = (found.start, found.end)
        if found.period < best.get(key, n + 1):
            best[key] = found.period

    stack = [(0, n)]
    while stack:
        lo, hi = stack.pop()
        if hi - lo < 2:
            continue
        mid = (lo + hi) // 2
        for p in range(1, mid - lo + 1):
            offer(extend(forward, backward, mid - p + 1, p))
        for p in range(1, hi - mid + 1):
            offer(extend(forward, backward, mid + 1, p))
        stack.append((mid, hi))
        stack.append((lo, mid))

    runs = []
    for (s, e), p in best.items():
        run = Run(s, e, p)
        runs.append(Run(s, e, minimal_period(forward, run)))
    runs.sort()
    comparisons = text.stats() + reverse.stats() - before
    return RunsResult(runs, forward.calls, backward.calls, comparisons, before)


def compute_runs(text: Text) -> list[Run]:
    """Every run of ``text`` once, sorted by (start, end)."""
    return compute_runs_detailed(text).runs
