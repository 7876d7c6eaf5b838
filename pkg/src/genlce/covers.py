"""Difference covers, t-covers and the nested base-4 cover family."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from ._backend import kernels


@dataclass(frozen=True)
class DifferenceCover:
    t: int
    residues: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.residues)


def verify_difference_cover(t: int, residues: Iterable[int]) -> bool:
    """True iff every residue mod ``t`` is a difference of two members."""
    members = sorted(set(residues))
    if t < 1 or any(not 0 <= x < t for x in members):
        return False
    # bit c of ``seen`` is set once some x - y == c (mod t); rotating the member
    # mask right by y marks every difference with that y at once
    mask = 0
    for x in members:
        mask |= 1 << x
    full = (1 << t) - 1
    seen = 0
    for y in members:
        seen |= ((mask >> y) | (mask << (t - y))) & full
    return seen == full


def build_difference_cover(t: int) -> DifferenceCover:
    """A t-difference-cover of size at most ``2*ceil(sqrt(t)) + 2``.

    With r = ceil(sqrt(t)), ``{0..r-1} | {r, 2r, ..., r*r}`` works: any
    d = a*r + s (0 <= s < r) equals (a+1)*r - (r-s).
    """
    if t < 1:
        raise ValueError("difference cover modulus must be positive")
    r = math.isqrt(t - 1) + 1 if t > 1 else 1
    residues = {x % t for x in range(r)}
    residues.update((m * r) % t for m in range(1, r + 1))
    cover = DifferenceCover(t, tuple(sorted(residues)))
    if not verify_difference_cover(t, cover.residues):
        raise AssertionError(f"constructed set is not a {t}-difference-cover")
    return cover


@dataclass
class TCover:
    """``S(t) = {p in [1..n] : p mod t in D}`` with a witness table for h."""

    t: int
    n: int
    dcover: DifferenceCover
    shift_table: tuple[int, ...]
    mask: tuple[bool, ...] = field(repr=False)

    def contains(self, p: int) -> bool:
        return 1 <= p <= self.n and self.mask[p % self.t]

    __contains__ = contains

    def shift(self, i: int, j: int) -> int:
        """h(i, j) in [0, t) with i + h and j + h both in the cover's residues."""
        t = self.t
        return (self.shift_table[(j - i) % t] - j) % t

    def positions(self) -> list[int]:
        mask, t = self.mask, self.t
        return [p for p in range(1, self.n + 1) if mask[p % t]]

    def __len__(self) -> int:
        return len(self.positions())


def build_t_cover(t: int, n: int, residues: Iterable[int] | None = None) -> TCover:
    if t < 1:
        raise ValueError("t must be positive")
    if t > n:
        raise ValueError(f"t-cover needs t <= n (t={t}, n={n})")
    if residues is None:
        dcover = build_difference_cover(t)
    else:
        members = tuple(sorted(set(residues)))
        if not verify_difference_cover(t, members):
            raise ValueError(f"{members} is not a {t}-difference-cover")
        dcover = DifferenceCover(t, members)
    table = [-1] * t
    for x in dcover.residues:
        for y in dcover.residues:
            c = (x - y) % t
            if table[c] < 0:
                table[c] = x
    mask = [False] * t
    for x in dcover.residues:
        mask[x] = True
    return TCover(t, n, dcover, tuple(table), tuple(mask))


def monotone_member(k: int, i: int) -> bool:
    """``i`` is in S(4**k): its k lowest base-4 digits are all nonzero."""
    if k < 0 or i < 1:
        raise ValueError("need k >= 0 and i >= 1")
    return kernels.trailing_nonzero_digits(i) >= k


def monotone_shift(k: int, i: int, j: int) -> int:
    """Smallest Δ in {0, 4**k, 2*4**k} moving i, j from S(4**k) into S(4**(k+1))."""
    tnz = kernels.trailing_nonzero_digits
    if k < 0 or i < 1 or j < 1 or tnz(i) < k or tnz(j) < k:
        raise ValueError(f"({i}, {j}) not both in S(4^{k})")
    # each argument rules out at most one of the three multiples
    return kernels.monotone_step(k, i, j)


def find_shift(k: int, i: int, j: int) -> int:
    """Δ in [0, 4**k] with i + Δ, j + Δ in S(4**k), fixed one digit at a time."""
    if k < 0 or i < 1 or j < 1:
        raise ValueError("need k >= 0 and positive positions")
    return kernels.find_shift(k, i, j)


def find_shift_stepwise(k: int, i: int, j: int) -> list[int]:
    """Accumulated shift after each level, built from :func:`monotone_shift`."""
    if k < 0 or i < 1 or j < 1:
        raise ValueError("need k >= 0 and positive positions")
    delta = 0
    steps = []
    for level in range(k):
        delta += monotone_shift(level, i + delta, j + delta)
        steps.append(delta)
    return steps


class MonotoneCoverFamily:
    """Nested covers S(4**0) ⊇ S(4**1) ⊇ ... restricted to [1..n]."""

    def __init__(self, n: int, max_level: int | None = None):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.max_level = level_cap(n) if max_level is None else max_level
        self._ranks: dict[int, list[int]] = {}

    def member(self, k: int, i: int) -> bool:
        return 1 <= i <= self.n and monotone_member(k, i)

    def positions(self, k: int) -> list[int]:
        return [p for p in range(1, self.n + 1) if kernels.trailing_nonzero_digits(p) >= k]

    def size(self, k: int) -> int:
        return len(self.positions(k))

    def rank(self, k: int, p: int) -> int:
        """Dense index of ``p`` inside S(4**k), or -1; the map is built on first use."""
        ranks = self._ranks.get(k)
        if ranks is None:
            ranks = [-1] * (self.n + 1)
            for idx, q in enumerate(self.positions(k)):
                ranks[q] = idx
            self._ranks[k] = ranks
        return ranks[p] if 1 <= p <= self.n else -1

    def level(self, k: int) -> "MonotoneLevel":
        return MonotoneLevel(self, k)


@dataclass
class MonotoneLevel:
    """One member S(4**k) of the family, exposed with the TCover interface."""

    family: MonotoneCoverFamily
    k: int

    @property
    def t(self) -> int:
        return 4 ** self.k

    @property
    def n(self) -> int:
        return self.family.n

    def contains(self, p: int) -> bool:
        return self.family.member(self.k, p)

    __contains__ = contains

    def shift(self, i: int, j: int) -> int:
        return find_shift(self.k, i, j)

    def positions(self) -> list[int]:
        return self.family.positions(self.k)

    def __len__(self) -> int:
        return self.family.size(self.k)


def level_cap(n: int) -> int:
    """Smallest K with 4**K >= max(n, 4)."""
    k = 1
    while 4 ** k < n:
        k += 1
    return k
