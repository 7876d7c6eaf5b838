"""Bounded-length LCE engines with per-level union-find memoization.

Two families, both backed by the selected kernel:

* :class:`Pow2Engine` -- caps 2**k: the plain halving recursion, the sparse
  variant restricted to a 2**k'-cover, and the fast variant that scans 2**k'
  symbols naively before shifting into that cover.
* :class:`Base4Engine` -- caps 4**k over the nested base-4 covers: quarter
  recursion on cover positions, and the level-climbing query that works for
  arbitrary positions.

The engines only ever touch symbols through the text's memoized equality
test, so their cost shows up in ``Text.stats()``.
"""

from __future__ import annotations

from typing import Optional

from ._backend import kernels
from .covers import MonotoneCoverFamily, TCover, build_t_cover, level_cap
from .text import Text


def log4_ceil(x: int) -> int:
    """Smallest k with 4**k >= x (x >= 1)."""
    k = 0
    while (1 << (2 * k)) < x:
        k += 1
    return k


def log2_ceil(x: int) -> int:
    return max(0, (x - 1).bit_length())


class Base4Engine:
    def __init__(self, text: Text, max_level: Optional[int] = None):
        self.text = text
        self.max_level = level_cap(text.n) if max_level is None else max_level
        self.family = MonotoneCoverFamily(text.n, self.max_level)
        self.core = kernels.Base4Core(text.core, self.max_level)

    def sparse_short_lce(self, k: int, i: int, j: int) -> Optional[int]:
        """min(LCE(i, j), 4**k) when both positions lie in S(4**k), else None."""
        out = self.core.sparse_short_lce(k, i, j)
        return None if out < 0 else out

    def short_lce(self, k: int, i: int, j: int) -> int:
        return self.core.short_lce(k, i, j)

    def short_lce_capped(self, cap: int, i: int, j: int) -> int:
        """min(LCE(i, j), cap) for any cap up to 4**max_level."""
        return min(self.core.short_lce(log4_ceil(cap), i, j), cap)

    def traced_short_lce(self, k: int, i: int, j: int) -> tuple[int, list]:
        """Run one query and return it with its sparse-call trace.

        Trace entries are ``(level, i', j', shift_after)``; the last entry is
        the closing call at level ``k``.
        """
        self.core.trace = trace = []
        try:
            return self.core.short_lce(k, i, j), trace
        finally:
            self.core.trace = None

    def level_dsu(self, k: int):
        return self.core.level_dsu(k)

    def unions_by_level(self) -> dict[int, int]:
        return {k: self.core.level_dsu(k).unions
                for k in self.core.materialized_levels()}

    def finds_by_level(self) -> dict[int, int]:
        return {k: self.core.level_dsu(k).finds
                for k in self.core.materialized_levels()}

    def calls_by_level(self) -> dict[str, list[int]]:
        return {"short": list(self.core.short_calls),
                "sparse": list(self.core.sparse_calls)}


class Pow2Engine:
    def __init__(self, text: Text, max_level: Optional[int] = None,
                 sparse_level: Optional[int] = None):
        n = text.n
        self.text = text
        self.max_level = log2_ceil(max(n, 2)) if max_level is None else max_level
        floor_log_n = n.bit_length() - 1
        if sparse_level is None:
            # 2**k' of the order of k, as small as the text allows
            sparse_level = min(log2_ceil(max(self.max_level, 1)), floor_log_n,
                               self.max_level)
        if (1 << sparse_level) > n:
            raise ValueError(f"2**sparse_level must not exceed n={n}")
        self.sparse_level = sparse_level
        self.cover: TCover = build_t_cover(1 << sparse_level, n)
        self.core = kernels.Pow2Core(text.core, self.max_level, sparse_level,
                                     self.cover.mask, self.cover.shift_table)

    def short_lce(self, k: int, i: int, j: int) -> int:
        return self.core.short_lce(k, i, j)

    def sparse_short_lce(self, k: int, i: int, j: int) -> Optional[int]:
        out = self.core.sparse_short_lce(k, i, j)
        return None if out < 0 else out

    def fast_short_lce(self, k: int, i: int, j: int) -> int:
        return self.core.fast_short_lce(k, i, j)

    def short_lce_capped(self, cap: int, i: int, j: int) -> int:
        return min(self.core.fast_short_lce(log2_ceil(cap), i, j), cap)

    def unions_by_level(self) -> dict[str, dict[int, int]]:
        full = {k: self.core.full_dsu(k).unions for k in range(self.max_level + 1)}
        sparse = {k: self.core.sparse_dsu(k).unions
                  for k in range(self.sparse_level, self.max_level + 1)}
        return {"full": full, "sparse": sparse}

    def calls_by_level(self) -> dict[str, list[int]]:
        return {"short": list(self.core.calls),
                "sparse": list(self.core.sparse_calls)}
