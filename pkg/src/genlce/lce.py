"""On-line LCE queries composed from capped and block-granular queries.

An ordered index answers LCE(i, j) as

    l1 = ShortLCE_t(i, j); stop if l1 < t
    d  = h(i, j)                      # both shifted positions in the cover
    l2 = t * CoarseLCE_t(i + d, j + d)
    l3 = ShortLCE_t(i + d + l2, j + d + l2)
    LCE = d + l2 + l3

Queries with max(i, j) > n - t skip the block layer and are finished by a
single capped query whose cap is at least n. Unordered indexes have no block
layer at all: every query is one base-4 capped query with 4**k >= n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .coarselce import CoarseLce
from .covers import MonotoneCoverFamily, TCover, build_t_cover
from .errors import UsageError
from .shortlce import Base4Engine, Pow2Engine, log2_ceil, log4_ceil
from .text import ORDERED, UNORDERED, ComparisonStats, Text

ENGINES = ("base4", "pow2")
COVERS = ("difference", "monotone")


class QueryError(IndexError):
    """A query in a batch was out of range; ``index`` is its 0-based position."""

    def __init__(self, index: int, query, message: str):
        super().__init__(f"query #{index} {query}: {message}")
        self.index = index
        self.query = query


def default_block_length(n: int) -> int:
    """Power of 4 near log2(n)**2, at least 16, shrunk to at most max(16, n/4)."""
    target = max(16, max(1, (n - 1).bit_length()) ** 2)
    t = 4 ** log4_ceil(target)
    while t > max(16, n // 4):
        t //= 4
    return t


def _is_power_of_4(t: int) -> bool:
    return t >= 1 and t & (t - 1) == 0 and (t.bit_length() - 1) % 2 == 0


@dataclass
class IndexStats:
    """Counters kept by an index on top of the text's comparison counts."""

    queries: int = 0
    short_only: int = 0
    coarse_path: int = 0
    near_end: int = 0
    identity: int = 0

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class BatchResult:
    answers: list[int]
    comparisons: ComparisonStats
    queries: int
    dsu: dict = field(default_factory=dict)


class LceIndex:
    def __init__(self, text: Text, engine: str = "base4", t: Optional[int] = None,
                 cover: str = "difference"):
        if engine not in ENGINES:
            raise UsageError(f"engine must be one of {ENGINES}, not {engine!r}")
        if cover not in COVERS:
            raise UsageError(f"cover must be one of {COVERS}, not {cover!r}")
        n = text.n
        self.text = text
        self.mode = text.mode
        self.engine_name = engine
        self.cover_name = cover
        self.stats = IndexStats()
        self.coarse: Optional[CoarseLce] = None
        self.cover: Union[TCover, None, object] = None

        if self.mode == UNORDERED:
            if engine != "base4":
                raise UsageError("unordered texts only support the base4 engine")
            if t is not None:
                raise UsageError("unordered indexes have no block length")
            self.t = None
            self.top_level = log4_ceil(n)
            self.engine = Base4Engine(text)
            self.preprocessing = text.stats()
            return

        t = default_block_length(n) if t is None else t
        if not _is_power_of_4(t):
            raise UsageError(f"block length must be a power of 4, got {t}")
        self.t = t
        self.level = (t.bit_length() - 1) // 2
        if engine == "base4":
            self.engine = Base4Engine(text, max(self.level, log4_ceil(max(n, 4))))
            self.top_level = log4_ceil(n)
            short = self._short_base4
        else:
            self.engine = Pow2Engine(text, max(2 * self.level, log2_ceil(max(n, 2))))
            self.top_level = log2_ceil(max(n, 2))
            short = self._short_pow2

        if t <= n:
            if cover == "difference":
                self.cover = build_t_cover(t, n)
            else:
                self.cover = MonotoneCoverFamily(n).level(self.level)
            self.coarse = CoarseLce(text, self.cover, short)
        self.preprocessing = text.stats()

    # capped queries used by both legs of the composition
    def _short_base4(self, i: int, j: int) -> int:
        return self.engine.core.short_lce(self.level, i, j)

    def _short_pow2(self, i: int, j: int) -> int:
        return self.engine.core.fast_short_lce(2 * self.level, i, j)

    def _short_top(self, i: int, j: int) -> int:
        if self.engine_name == "base4":
            return self.engine.core.short_lce(self.top_level, i, j)
        return self.engine.core.fast_short_lce(self.top_level, i, j)

    def _check(self, i: int, j: int) -> None:
        n = self.text.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"positions ({i}, {j}) outside [1, {n}]")

    def lce(self, i: int, j: int) -> int:
        self._check(i, j)
        if self.mode == UNORDERED:
            return self._unordered(i, j)
        stats = self.stats
        stats.queries += 1
        n = self.text.n
        if i == j:
            stats.identity += 1
            return n - i + 1
        t = self.t
        l1 = self._short_base4(i, j) if self.engine_name == "base4" else self._short_pow2(i, j)
        if l1 < t:
            stats.short_only += 1
            return l1
        if self.coarse is None or max(i, j) > n - t:
            stats.near_end += 1
            return self._short_top(i, j)
        stats.coarse_path += 1
        delta = self.cover.shift(i, j)
        l2 = t * self.coarse.query(i + delta, j + delta)
        if self.engine_name == "base4":
            l3 = self._short_base4(i + delta + l2, j + delta + l2)
        else:
            l3 = self._short_pow2(i + delta + l2, j + delta + l2)
        return delta + l2 + l3

    def lce_unordered(self, i: int, j: int) -> int:
        if self.mode != UNORDERED:
            raise UsageError("lce_unordered() needs an index built on an unordered text")
        self._check(i, j)
        return self._unordered(i, j)

    def _unordered(self, i: int, j: int) -> int:
        self.stats.queries += 1
        if i == j:
            self.stats.identity += 1
            return self.text.n - i + 1
        self.stats.short_only += 1
        return self.engine.core.short_lce(self.top_level, i, j)

    def batch(self, queries: Iterable[Sequence[int]]) -> BatchResult:
        """Answer queries strictly in order; counters are deltas for this batch."""
        before = self.text.stats()
        count = self.stats.queries
        dsu_before = self.dsu_totals()
        answers = []
        for idx, query in enumerate(queries):
            try:
                i, j = query
                answers.append(self.lce(int(i), int(j)))
            except (IndexError, ValueError, TypeError) as exc:
                raise QueryError(idx, tuple(query) if isinstance(query, (list, tuple)) else query,
                                 str(exc)) from None
        after = self.dsu_totals()
        return BatchResult(answers, self.text.stats() - before,
                           self.stats.queries - count,
                           {key: after[key] - dsu_before[key] for key in after})

    def dsu_totals(self) -> dict[str, int]:
        """Finds and unions summed over the memo forest and all engine forests."""
        memo = self.text.core.memo
        finds, unions = memo.finds, memo.unions
        core = self.engine.core
        if self.engine_name == "base4":
            forests = [core.level_dsu(k) for k in core.materialized_levels()]
        else:
            forests = [core.full_dsu(k) for k in range(core.max_level + 1)]
            forests += [core.sparse_dsu(k)
                        for k in range(core.sparse_level, core.max_level + 1)]
        for f in forests:
            finds += f.finds
            unions += f.unions
        return {"finds": finds, "unions": unions}

    def config(self) -> dict:
        return {
            "mode": self.mode,
            "engine": self.engine_name,
            "cover": self.cover_name if self.coarse is not None else None,
            "t": self.t,
            "K": self.engine.max_level,
            "top_level": self.top_level,
        }


def build_index(text: Text, engine: str = "base4", t: Optional[int] = None,
                cover: str = "difference", mode: Optional[str] = None) -> LceIndex:
    """Preprocess ``text`` for on-line LCE queries.

    ``mode`` is optional and only checked against the text's own mode.
    """
    if mode is not None and mode != text.mode:
        raise UsageError(f"index mode {mode!r} does not match text mode {text.mode!r}")
    return LceIndex(text, engine=engine, t=t, cover=cover)


def lce(index: LceIndex, i: int, j: int) -> int:
    return index.lce(i, j)


def lce_unordered(index: LceIndex, i: int, j: int) -> int:
    return index.lce_unordered(i, j)


__all__ = [
    "BatchResult", "COVERS", "ENGINES", "IndexStats", "LceIndex", "ORDERED",
    "QueryError", "UNORDERED", "build_index", "default_block_length", "lce",
    "lce_unordered",
]
