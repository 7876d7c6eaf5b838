"""Pure-Python hot kernels.

This module is the reference backend. ``_ckernels`` (Cython) mirrors it
class-for-class and must produce identical answers *and* identical counter
values; ``tests/test_backends.py`` enforces that.

Positions are 1-based. Anything past ``n`` is a sentinel: a unique symbol,
smaller than every real symbol, sentinels ordered by position.
"""

from __future__ import annotations

from .errors import UsageError

BACKEND_NAME = "python"


class DisjointSets:
    """Union by rank with full path compression over ``range(size)``."""

    __slots__ = ("_parent", "_rank", "size", "finds", "unions", "hops")

    def __init__(self, size: int):
        if size < 0:
            raise ValueError("size must be non-negative")
        self._parent = list(range(size))
        self._rank = [0] * size
        self.size = size
        self.finds = 0
        self.unions = 0
        # parent pointers followed while locating roots
        self.hops = 0

    def _check(self, x: int) -> None:
        if not 0 <= x < self.size:
            raise IndexError(f"element {x} outside universe of size {self.size}")

    def find(self, x: int) -> int:
        self._check(x)
        return self._find(x)

    def union(self, x: int, y: int) -> bool:
        """Merge the classes of ``x`` and ``y``; True iff they were distinct."""
        self._check(x)
        self._check(y)
        return self._link(self._find(x), self._find(y))

    def same(self, x: int, y: int) -> bool:
        self._check(x)
        self._check(y)
        return self._find(x) == self._find(y)

    def _find(self, x: int) -> int:
        self.finds += 1
        parent = self._parent
        root = x
        while parent[root] != root:
            root = parent[root]
            self.hops += 1
        while parent[x] != root:
            nxt = parent[x]
            parent[x] = root
            x = nxt
        return root

    def _link(self, a: int, b: int) -> bool:
        # a, b must be roots
        if a == b:
            return False
        rank = self._rank
        if rank[a] < rank[b]:
            a, b = b, a
        self._parent[b] = a
        if rank[a] == rank[b]:
            rank[a] += 1
        self.unions += 1
        return True


class TextCore:
    """Symbol storage behind a counting comparison oracle."""

    def __init__(self, symbols, ordered: bool = True):
        self._w = [0]
        self._w.extend(int(s) for s in symbols)
        self.n = len(self._w) - 1
        self.ordered = bool(ordered)
        self.order_comparisons = 0
        self.equality_tests = 0
        self.memo_hits = 0
        self.memo = DisjointSets(self.n + 1)
        # root -> roots of classes proven to hold a different letter
        self._apart: dict[int, set] = {}

    def compare(self, i: int, j: int) -> int:
        if not self.ordered:
            raise UsageError("order comparison on an unordered text")
        n = self.n
        if i > n or j > n:
            if i > n and j > n:
                return (i > j) - (i < j)
            return -1 if i > n else 1
        self.order_comparisons += 1
        a = self._w[i]
        b = self._w[j]
        return (a > b) - (a < b)

    def eq(self, i: int, j: int) -> bool:
        n = self.n
        if i > n or j > n:
            return i == j
        self.equality_tests += 1
        return self._w[i] == self._w[j]

    def memo_eq(self, i: int, j: int) -> bool:
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError("memo_eq needs positions inside the text")
        return self._memo_eq(i, j)

    def _memo_eq(self, i: int, j: int) -> bool:
        memo = self.memo
        a = memo._find(i)
        b = memo._find(j)
        if a == b:
            self.memo_hits += 1
            return True
        apart = self._apart
        known = apart.get(a)
        if known is not None and b in known:
            self.memo_hits += 1
            return False
        self.equality_tests += 1
        if self._w[i] == self._w[j]:
            memo._link(a, b)
            self._merge_apart(a, b, memo._find(a))
            return True
        apart.setdefault(a, set()).add(b)
        apart.setdefault(b, set()).add(a)
        return False

    def _merge_apart(self, a: int, b: int, root: int) -> None:
        # equality is transitive: the merged class differs from both old partners
        loser = b if root == a else a
        moved = self._apart.pop(loser, None)
        if not moved:
            return
        kept = self._apart.setdefault(root, set())
        for x in moved:
            partners = self._apart[x]
            partners.discard(loser)
            partners.add(root)
            kept.add(x)


def trailing_nonzero_digits(p: int) -> int:
    """Number of least significant base-4 digits of ``p`` before the first zero."""
    c = 0
    while p & 3:
        c += 1
        p >>= 2
    return c


def monotone_step(k: int, i: int, j: int) -> int:
    """Smallest m * 4**k (m < 3) making digit k of both i and j nonzero."""
    a = (i >> (2 * k)) & 3
    b = (j >> (2 * k)) & 3
    m = 0
    while not ((a + m) & 3 and (b + m) & 3):
        m += 1
    return m << (2 * k)


def find_shift(k: int, i: int, j: int) -> int:
    """Smallest-digit-first shift moving i and j into S(4**k)."""
    delta = 0
    for level in range(k):
        a = ((i + delta) >> (2 * level)) & 3
        b = ((j + delta) >> (2 * level)) & 3
        m = 0
        while not ((a + m) & 3 and (b + m) & 3):
            m += 1
        delta += m << (2 * level)
    return delta


class Base4Core:
    """ShortLCE over the monotone base-4 cover family, one DSU per level."""

    def __init__(self, text: TextCore, max_level: int):
        if max_level < 0:
            raise ValueError("max_level must be non-negative")
        self.text = text
        self.max_level = max_level
        n = text.n
        nz = [0] * (n + 1)
        for p in range(1, n + 1):
            nz[p] = 0 if p & 3 == 0 else 1 + nz[p >> 2]
        self._nz = nz
        self._rank: list = [None] * (max_level + 1)
        self._dsu: list = [None] * (max_level + 1)
        self.sparse_calls = [0] * (max_level + 1)
        self.short_calls = [0] * (max_level + 1)
        self.trace = None

    def _tnz(self, p: int) -> int:
        if p <= self.text.n:
            return self._nz[p]
        return trailing_nonzero_digits(p)

    def member(self, k: int, p: int) -> bool:
        return p >= 1 and self._tnz(p) >= k

    def _level(self, k: int) -> None:
        nz = self._nz
        rank = [-1] * (self.text.n + 1)
        m = 0
        for p in range(1, self.text.n + 1):
            if nz[p] >= k:
                rank[p] = m
                m += 1
        self._rank[k] = rank
        self._dsu[k] = DisjointSets(m)

    def level_dsu(self, k: int) -> DisjointSets:
        if self._dsu[k] is None:
            self._level(k)
        return self._dsu[k]

    def level_size(self, k: int) -> int:
        return self.level_dsu(k).size

    def materialized_levels(self) -> list:
        return [k for k in range(self.max_level + 1) if self._dsu[k] is not None]

    def sparse_short_lce(self, k: int, i: int, j: int) -> int:
        """min(LCE, 4**k) for i, j in S(4**k); -1 when either is not."""
        if not 0 <= k <= self.max_level:
            raise ValueError(f"level {k} outside [0, {self.max_level}]")
        if i < 1 or j < 1 or self._tnz(i) < k or self._tnz(j) < k:
            return -1
        return self._sparse(k, i, j)

    def _sparse(self, k: int, i: int, j: int) -> int:
        self.sparse_calls[k] += 1
        cap = 1 << (2 * k)
        if i == j:
            return cap
        text = self.text
        n = text.n
        if i > n or j > n:
            return 0
        dsu = self._dsu[k]
        if dsu is None:
            self._level(k)
            dsu = self._dsu[k]
        rank = self._rank[k]
        a = dsu._find(rank[i])
        b = dsu._find(rank[j])
        if a == b:
            return cap
        if k == 0:
            length = 1 if text._memo_eq(i, j) else 0
        else:
            q = cap >> 2
            length = 0
            for p in range(4):
                length += self._sparse(k - 1, i + p * q, j + p * q)
                if length < (p + 1) * q:
                    break
        if length == cap:
            dsu._link(a, b)
        return length

    def short_lce(self, k: int, i: int, j: int) -> int:
        """min(LCE(i, j), 4**k) for arbitrary positions."""
        if not 0 <= k <= self.max_level:
            raise ValueError(f"level {k} outside [0, {self.max_level}]")
        if i < 1 or j < 1:
            raise IndexError("positions are 1-based")
        return self._short(k, i, j)

    def _short(self, k: int, i: int, j: int) -> int:
        self.short_calls[k] += 1
        cap = 1 << (2 * k)
        if i == j:
            return cap
        n = self.text.n
        if i > n or j > n:
            return 0
        trace = self.trace
        length = 0
        delta = 0
        for kp in range(k):
            step = 1 << (2 * kp)
            while self._tnz(i + delta) <= kp or self._tnz(j + delta) <= kp:
                length += self._sparse(kp, i + delta, j + delta)
                delta += step
                if trace is not None:
                    trace.append((kp, i + delta - step, j + delta - step, delta))
                if length < delta:
                    return length if length < cap else cap
        if trace is not None:
            trace.append((k, i + delta, j + delta, delta))
        length = delta + self._sparse(k, i + delta, j + delta)
        return length if length < cap else cap


class Pow2Core:
    """Power-of-two ShortLCE engines (plain recursion and sparse-cover variant).

    ``member_mask[r]`` tells whether residue ``r`` (mod ``2**sparse_level``)
    belongs to the difference cover; ``shift_table[c]`` is the witness residue
    used for h(i, j) with c = (j - i) mod 2**sparse_level.
    """

    def __init__(self, text: TextCore, max_level: int, sparse_level: int,
                 member_mask, shift_table):
        if not 0 <= sparse_level <= max_level:
            raise ValueError("need 0 <= sparse_level <= max_level")
        t = 1 << sparse_level
        if len(member_mask) != t or len(shift_table) != t:
            raise ValueError("cover tables must have length 2**sparse_level")
        self.text = text
        self.max_level = max_level
        self.sparse_level = sparse_level
        self._t = t
        self._mask = [bool(x) for x in member_mask]
        self._shift = [int(x) for x in shift_table]
        n = text.n
        self._full = [DisjointSets(n + 1) for _ in range(max_level + 1)]
        rank = [-1] * (n + 1)
        m = 0
        for p in range(1, n + 1):
            if self._mask[p % t]:
                rank[p] = m
                m += 1
        self._srank = rank
        self._sparse_dsu = [None] * sparse_level + [
            DisjointSets(m) for _ in range(sparse_level, max_level + 1)]
        self.calls = [0] * (max_level + 1)
        self.sparse_calls = [0] * (max_level + 1)

    def full_dsu(self, k: int) -> DisjointSets:
        return self._full[k]

    def sparse_dsu(self, k: int):
        return self._sparse_dsu[k]

    def member(self, p: int) -> bool:
        return p >= 1 and self._mask[p % self._t]

    def shift(self, i: int, j: int) -> int:
        t = self._t
        return (self._shift[(j - i) % t] - j) % t

    def _check(self, k: int, i: int, j: int) -> None:
        if not 0 <= k <= self.max_level:
            raise ValueError(f"level {k} outside [0, {self.max_level}]")
        if i < 1 or j < 1:
            raise IndexError("positions are 1-based")

    def short_lce(self, k: int, i: int, j: int) -> int:
        self._check(k, i, j)
        return self._short(k, i, j)

    def _short(self, k: int, i: int, j: int) -> int:
        self.calls[k] += 1
        cap = 1 << k
        if i == j:
            return cap
        text = self.text
        n = text.n
        if i > n or j > n:
            return 0
        dsu = self._full[k]
        a = dsu._find(i)
        b = dsu._find(j)
        if a == b:
            return cap
        if k == 0:
            length = 1 if text._memo_eq(i, j) else 0
        else:
            half = cap >> 1
            length = self._short(k - 1, i, j)
            if length == half:
                length = half + self._short(k - 1, i + half, j + half)
        if length == cap:
            dsu._link(a, b)
        return length

    def _naive(self, i: int, j: int, cap: int) -> int:
        text = self.text
        n = text.n
        x = 0
        while x < cap:
            if i + x > n or j + x > n or not text._memo_eq(i + x, j + x):
                break
            x += 1
        return x

    def sparse_short_lce(self, k: int, i: int, j: int) -> int:
        self._check(k, i, j)
        if k < self.sparse_level:
            raise ValueError("level below the sparse level")
        if not (self.member(i) and self.member(j)):
            return -1
        return self._sparse(k, i, j)

    def _sparse(self, k: int, i: int, j: int) -> int:
        self.sparse_calls[k] += 1
        cap = 1 << k
        if i == j:
            return cap
        n = self.text.n
        if i > n or j > n:
            return 0
        dsu = self._sparse_dsu[k]
        rank = self._srank
        a = dsu._find(rank[i])
        b = dsu._find(rank[j])
        if a == b:
            return cap
        if k == self.sparse_level:
            length = self._naive(i, j, cap)
        else:
            half = cap >> 1
            length = self._sparse(k - 1, i, j)
            if length == half:
                length = half + self._sparse(k - 1, i + half, j + half)
        if length == cap:
            dsu._link(a, b)
        return length

    def fast_short_lce(self, k: int, i: int, j: int) -> int:
        self._check(k, i, j)
        return self._fast(k, i, j)

    def _fast(self, k: int, i: int, j: int) -> int:
        cap = 1 << k
        if i == j:
            return cap
        kp = self.sparse_level
        if k <= kp:
            return self._naive(i, j, cap)
        length = self._naive(i, j, self._t)
        if length < self._t:
            return length
        delta = self.shift(i, j)
        length = delta + self._sparse(k, i + delta, j + delta)
        return length if length < cap else cap


def suffix_array(s, upper: int) -> list:
    """Induced-sorting suffix array of ``s`` (ints in ``[0, upper]``), 0-based."""
    s = [int(c) for c in s]
    return _sa_is(s, upper)


def _sa_is(s: list, upper: int) -> list:
    n = len(s)
    if n == 0:
        return []
    if n == 1:
        return [0]
    if n == 2:
        return [0, 1] if s[0] < s[1] else [1, 0]
    sa = [0] * n
    ls = [False] * n
    for i in range(n - 2, -1, -1):
        ls[i] = ls[i + 1] if s[i] == s[i + 1] else s[i] < s[i + 1]
    sum_l = [0] * (upper + 1)
    sum_s = [0] * (upper + 1)
    for i in range(n):
        if not ls[i]:
            sum_s[s[i]] += 1
        else:
            sum_l[s[i] + 1] += 1
    for i in range(upper + 1):
        sum_s[i] += sum_l[i]
        if i < upper:
            sum_l[i + 1] += sum_s[i]

    def induce(lms):
        for i in range(n):
            sa[i] = -1
        buf = sum_s[:]
        for d in lms:
            if d == n:
                continue
            sa[buf[s[d]]] = d
            buf[s[d]] += 1
        buf = sum_l[:]
        sa[buf[s[n - 1]]] = n - 1
        buf[s[n - 1]] += 1
        for i in range(n):
            v = sa[i]
            if v >= 1 and not ls[v - 1]:
                c = s[v - 1]
                sa[buf[c]] = v - 1
                buf[c] += 1
        buf = sum_l[:]
        for i in range(n - 1, -1, -1):
            v = sa[i]
            if v >= 1 and ls[v - 1]:
                c = s[v - 1] + 1
                buf[c] -= 1
                sa[buf[c]] = v - 1

    lms_map = [-1] * (n + 1)
    lms = []
    for i in range(1, n):
        if not ls[i - 1] and ls[i]:
            lms_map[i] = len(lms)
            lms.append(i)
    m = len(lms)
    induce(lms)
    if m:
        sorted_lms = [v for v in sa if lms_map[v] != -1]
        rec_s = [0] * m
        rec_upper = 0
        rec_s[lms_map[sorted_lms[0]]] = 0
        for idx in range(1, m):
            left = sorted_lms[idx - 1]
            right = sorted_lms[idx]
            end_l = lms[lms_map[left] + 1] if lms_map[left] + 1 < m else n
            end_r = lms[lms_map[right] + 1] if lms_map[right] + 1 < m else n
            same = True
            if end_l - left != end_r - right:
                same = False
            else:
                while left < end_l:
                    if s[left] != s[right]:
                        break
                    left += 1
                    right += 1
                if left == n or s[left] != s[right]:
                    same = False
            if not same:
                rec_upper += 1
            rec_s[lms_map[sorted_lms[idx]]] = rec_upper
        rec_sa = _sa_is(rec_s, rec_upper)
        for idx in range(m):
            sorted_lms[idx] = lms[rec_sa[idx]]
        induce(sorted_lms)
    return sa


def lcp_array(s, sa) -> list:
    """Kasai: ``lcp[r]`` = common prefix of suffixes ``sa[r-1]`` and ``sa[r]``; lcp[0] = 0."""
    n = len(s)
    rank = [0] * n
    for r, p in enumerate(sa):
        rank[p] = r
    lcp = [0] * n
    h = 0
    for p in range(n):
        r = rank[p]
        if r == 0:
            h = 0
            continue
        q = sa[r - 1]
        while p + h < n and q + h < n and s[p + h] == s[q + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp


class RangeMin:
    """Sparse table; ``query(lo, hi)`` is the minimum of ``values[lo:hi]``."""

    def __init__(self, values):
        row = [int(v) for v in values]
        self.size = len(row)
        table = [row]
        span = 1
        while 2 * span <= self.size:
            prev = table[-1]
            table.append([min(prev[i], prev[i + span])
                          for i in range(self.size - 2 * span + 1)])
            span *= 2
        self._table = table

    def query(self, lo: int, hi: int) -> int:
        if not 0 <= lo < hi <= self.size:
            raise IndexError("empty or out-of-range interval")
        d = (hi - lo).bit_length() - 1
        row = self._table[d]
        a = row[lo]
        b = row[hi - (1 << d)]
        return a if a < b else b
