"""Input text behind a counting comparison oracle."""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Sequence, Union

from ._backend import kernels
from .errors import UsageError

ORDERED = "ordered"
UNORDERED = "unordered"
MODES = (ORDERED, UNORDERED)

_INT64 = 1 << 63

SymbolSource = Union[str, bytes, bytearray, Iterable[int]]


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class ComparisonStats:
    order_comparisons: int = 0
    equality_tests: int = 0
    memo_hits: int = 0

    @property
    def symbol_comparisons(self) -> int:
        return self.order_comparisons + self.equality_tests

    def __sub__(self, other: "ComparisonStats") -> "ComparisonStats":
        return ComparisonStats(
            self.order_comparisons - other.order_comparisons,
            self.equality_tests - other.equality_tests,
            self.memo_hits - other.memo_hits,
        )

    def __add__(self, other: "ComparisonStats") -> "ComparisonStats":
        return ComparisonStats(
            self.order_comparisons + other.order_comparisons,
            self.equality_tests + other.equality_tests,
            self.memo_hits + other.memo_hits,
        )

    def as_dict(self) -> dict:
        return asdict(self)


def _coerce(symbols: SymbolSource) -> tuple[int, ...]:
    if isinstance(symbols, str):
        return tuple(ord(c) for c in symbols)
    if isinstance(symbols, (bytes, bytearray)):
        return tuple(symbols)
    out = tuple(int(s) for s in symbols)
    for s in out:
        if not -_INT64 <= s < _INT64:
            raise ValueError(f"symbol {s} does not fit in 64 bits")
    return out


class Text:
    """A string of opaque integer symbols, positions 1..n.

    Every symbol access goes through :meth:`compare`, :meth:`eq` or
    :meth:`memo_eq`, which bump the counters exposed by :meth:`stats`.
    Positions past ``n`` act as pairwise-distinct sentinels that compare
    below every real symbol and cost nothing.
    """

    def __init__(self, symbols: SymbolSource, mode: str = ORDERED):
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, not {mode!r}")
        self.symbols = _coerce(symbols)
        if not self.symbols:
            raise ValueError("text must contain at least one symbol")
        self.mode = mode
        self.core = kernels.TextCore(self.symbols, mode == ORDERED)

    @classmethod
    def from_file(cls, path: Union[str, Path], ints: bool = False,
                  mode: str = ORDERED) -> "Text":
        """Raw bytes (one symbol per byte) or whitespace-separated integers."""
        data = Path(path).read_bytes()
        if ints:
            try:
                values = [int(tok) for tok in data.split()]
            except ValueError as exc:
                raise ValueError(f"{path}: not a list of integers ({exc})") from None
            return cls(values, mode)
        return cls(data, mode)

    @property
    def n(self) -> int:
        return self.core.n

    @property
    def ordered(self) -> bool:
        return self.mode == ORDERED

    def __len__(self) -> int:
        return self.core.n

    def __repr__(self) -> str:
        return f"Text(n={self.n}, mode={self.mode!r})"

    @property
    def alphabet_size(self) -> int:
        return len(set(self.symbols))

    def reversed(self) -> "Text":
        """A fresh text (own counters and memo) over the reversed symbols."""
        return Text(self.symbols[::-1], self.mode)

    def _positions(self, i: int, j: int) -> None:
        if i < 1 or j < 1:
            raise IndexError(f"positions are 1-based, got ({i}, {j})")

    def compare(self, i: int, j: int) -> Ordering:
        if not self.ordered:
            raise UsageError("compare() needs an ordered text")
        self._positions(i, j)
        return Ordering(self.core.compare(i, j))

    def eq(self, i: int, j: int) -> bool:
        self._positions(i, j)
        return bool(self.core.eq(i, j))

    def memo_eq(self, i: int, j: int) -> bool:
        """Equality test that first consults the classes of known-equal positions."""
        return bool(self.core.memo_eq(i, j))

    def memo_same_class(self, i: int, j: int) -> bool:
        return self.core.memo.same(i, j)

    def stats(self) -> ComparisonStats:
        core = self.core
        return ComparisonStats(core.order_comparisons, core.equality_tests,
                               core.memo_hits)


def as_symbols(text: Union[Text, Sequence[int], str, bytes]) -> Sequence:
    """Indexable raw symbols of a Text, or the sequence itself, without copying.

    Characters of a str compare exactly like their code points, so strings
    are returned as they are.
    """
    if isinstance(text, Text):
        return text.symbols
    if isinstance(text, (str, bytes, list, tuple)):
        return text
    return _coerce(text)
