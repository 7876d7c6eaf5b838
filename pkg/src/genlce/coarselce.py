"""Block-granular LCE on cover positions.

Blocks of length ``t`` starting at every cover position are sorted with a
merge sort whose comparator is one capped LCE query plus at most one order
comparison, ranked densely, and laid out residue class by residue class into
an integer string ``code`` with a fresh separator after each class. An LCE
query on ``code`` then counts matching blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Protocol, Sequence

from ._backend import kernels
from .errors import UsageError
from .text import Text


class Cover(Protocol):
    t: int

    def contains(self, p: int) -> bool: ...

    def shift(self, i: int, j: int) -> int: ...

    def positions(self) -> list[int]: ...


@dataclass
class BlockRanking:
    t: int
    block_starts: list[int]
    rank: dict[int, int]
    comparator_calls: int = 0

    @property
    def distinct(self) -> int:
        return max(self.rank.values(), default=0)


def _merge_sort(items: list, cmp: Callable[[int, int], int]) -> list:
    if len(items) <= 1:
        return list(items)
    mid = len(items) // 2
    left = _merge_sort(items[:mid], cmp)
    right = _merge_sort(items[mid:], cmp)
    out = []
    a = b = 0
    while a < len(left) and b < len(right):
        if cmp(left[a], right[b]) <= 0:
            out.append(left[a])
            a += 1
        else:
            out.append(right[b])
            b += 1
    out.extend(left[a:])
    out.extend(right[b:])
    return out


def rank_blocks(text: Text, starts: Sequence[int], t: int,
                short_lce: Callable[[int, int], int]) -> BlockRanking:
    """Sort and densely rank the sentinel-padded t-blocks at ``starts``.

    ``short_lce(p, q)`` must return min(LCE(p, q), t).
    """
    if not text.ordered:
        raise UsageError("ranking blocks needs an ordered alphabet")
    if t < 1:
        raise ValueError("block length must be positive")
    calls = 0
    core = text.core
    starts = list(starts)
    index = {p: idx for idx, p in enumerate(starts)}
    # equal blocks met by the sort; a correct comparison sort links every
    # pair of equal blocks through a chain of such results
    equal = kernels.DisjointSets(len(starts))

    def cmp(p: int, q: int) -> int:
        nonlocal calls
        calls += 1
        ell = short_lce(p, q)
        if ell >= t:
            equal.union(index[p], index[q])
            return 0
        return core.compare(p + ell, q + ell)

    ordered = _merge_sort(starts, cmp)
    rank: dict[int, int] = {}
    current = 0
    for idx, p in enumerate(ordered):
        if idx == 0 or not equal.same(index[ordered[idx - 1]], index[p]):
            current += 1
        rank[p] = current
    return BlockRanking(t, sorted(starts), rank, calls)


@dataclass
class CodeString:
    """Ranks laid out per residue class, each class closed by its own separator."""

    t: int
    symbols: list[int]
    heads: list[int]
    offsets: dict[int, tuple[int, int]] = field(repr=False)

    def __len__(self) -> int:
        return len(self.symbols)

    def position(self, p: int) -> int:
        """1-based index in ``symbols`` of the block starting at text position p."""
        head, offset = self.offsets[p % self.t]
        return offset + (p - head) // self.t + 1


def build_code(ranking: BlockRanking) -> CodeString:
    t = ranking.t
    rows: dict[int, list[int]] = {}
    for p in ranking.block_starts:
        rows.setdefault(p % t, []).append(p)
    heads = sorted(row[0] for row in rows.values())
    separator = ranking.distinct
    symbols: list[int] = []
    offsets: dict[int, tuple[int, int]] = {}
    for head in heads:
        offsets[head % t] = (head, len(symbols))
        symbols.extend(ranking.rank[p] for p in rows[head % t])
        separator += 1
        symbols.append(separator)
    return CodeString(t, symbols, heads, offsets)


class IntLceStructure:
    """Constant-time LCE over an integer string via SA, LCP and a sparse table."""

    def __init__(self, symbols: Sequence[int]):
        self.symbols = [int(c) for c in symbols]
        if any(c < 0 for c in self.symbols):
            raise ValueError("symbols must be non-negative integers")
        upper = max(self.symbols, default=0)
        self.sa = kernels.suffix_array(self.symbols, upper)
        self.isa = [0] * len(self.sa)
        for r, p in enumerate(self.sa):
            self.isa[p] = r
        self.lcp = kernels.lcp_array(self.symbols, self.sa)
        self._rmq = kernels.RangeMin(self.lcp) if self.lcp else None

    def __len__(self) -> int:
        return len(self.symbols)

    def lce(self, p: int, q: int) -> int:
        """Common prefix length of the suffixes at 1-based positions p and q."""
        m = len(self.symbols)
        if not (1 <= p <= m and 1 <= q <= m):
            raise IndexError(f"positions must lie in [1, {m}]")
        if p == q:
            return m - p + 1
        a = self.isa[p - 1]
        b = self.isa[q - 1]
        if a > b:
            a, b = b, a
        return self._rmq.query(a + 1, b + 1)


def build_int_lce(symbols: Sequence[int]) -> IntLceStructure:
    return IntLceStructure(symbols)


class CoarseLce:
    """floor(LCE(p, q) / t) for cover positions p, q."""

    def __init__(self, text: Text, cover: Cover,
                 short_lce: Callable[[int, int], int]):
        self.t = cover.t
        self.cover = cover
        before = text.stats()
        self.ranking = rank_blocks(text, cover.positions(), cover.t, short_lce)
        self.code = build_code(self.ranking)
        self.int_lce = build_int_lce(self.code.symbols)
        self.preprocessing = text.stats() - before

    def query(self, p: int, q: int) -> Optional[int]:
        if not (self.cover.contains(p) and self.cover.contains(q)):
            return None
        if p == q:
            return (self.cover.n - p + 1) // self.t
        return self.int_lce.lce(self.code.position(p), self.code.position(q))


def coarse_lce(structure: CoarseLce, p: int, q: int) -> Optional[int]:
    """Number of matching t-blocks from p and q; None unless both are in the cover."""
    return structure.query(p, q)
