# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; a line-for-line mirror of ``_pykernels``.

Both backends must agree on answers and on every counter.
"""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy

from .errors import UsageError

BACKEND_NAME = "compiled"


cdef class DisjointSets:
    """Union by rank with full path compression over ``range(size)``."""

    cdef Py_ssize_t* _parent
    cdef unsigned char* _rank
    cdef readonly Py_ssize_t size
    cdef readonly long long finds
    cdef readonly long long unions
    cdef readonly long long hops

    def __cinit__(self, Py_ssize_t size):
        cdef Py_ssize_t x
        if size < 0:
            raise ValueError("size must be non-negative")
        self.size = size
        self._parent = <Py_ssize_t*>malloc((size + 1) * sizeof(Py_ssize_t))
        self._rank = <unsigned char*>calloc(size + 1, sizeof(unsigned char))
        if self._parent == NULL or self._rank == NULL:
            raise MemoryError()
        for x in range(size):
            self._parent[x] = x

    def __dealloc__(self):
        free(self._parent)
        free(self._rank)

    cdef int _check(self, Py_ssize_t x) except -1:
        if x < 0 or x >= self.size:
            raise IndexError(f"element {x} outside universe of size {self.size}")
        return 0

    def find(self, Py_ssize_t x):
        self._check(x)
        return self._find(x)

    def union(self, Py_ssize_t x, Py_ssize_t y):
        """Merge the classes of ``x`` and ``y``; True iff they were distinct."""
        self._check(x)
        self._check(y)
        return self._link(self._find(x), self._find(y))

    def same(self, Py_ssize_t x, Py_ssize_t y):
        self._check(x)
        self._check(y)
        return self._find(x) == self._find(y)

    cdef inline Py_ssize_t _find(self, Py_ssize_t x):
        cdef Py_ssize_t root = x, nxt
        cdef Py_ssize_t* parent = self._parent
        self.finds += 1
        while parent[root] != root:
            root = parent[root]
            self.hops += 1
        while parent[x] != root:
            nxt = parent[x]
            parent[x] = root
            x = nxt
        return root

    cdef inline bint _link(self, Py_ssize_t a, Py_ssize_t b):
        cdef Py_ssize_t tmp
        if a == b:
            return False
        if self._rank[a] < self._rank[b]:
            tmp = a
            a = b
            b = tmp
        self._parent[b] = a
        if self._rank[a] == self._rank[b]:
            self._rank[a] += 1
        self.unions += 1
        return True


cdef class TextCore:
    """Symbol storage behind a counting comparison oracle."""

    cdef long long* _w
    cdef readonly Py_ssize_t n
    cdef readonly bint ordered
    cdef readonly long long order_comparisons
    cdef readonly long long equality_tests
    cdef readonly long long memo_hits
    cdef readonly DisjointSets memo
    cdef dict _apart

    def __cinit__(self, symbols, bint ordered=True):
        cdef list values = [int(s) for s in symbols]
        cdef Py_ssize_t n = len(values), p
        self.n = n
        self.ordered = ordered
        self._w = <long long*>malloc((n + 1) * sizeof(long long))
        if self._w == NULL:
            raise MemoryError()
        self._w[0] = 0
        for p in range(n):
            self._w[p + 1] = values[p]
        self.memo = DisjointSets(n + 1)
        self._apart = {}

    def __dealloc__(self):
        free(self._w)

    def compare(self, Py_ssize_t i, Py_ssize_t j):
        if not self.ordered:
            raise UsageError("order comparison on an unordered text")
        return self._compare(i, j)

    cdef int _compare(self, Py_ssize_t i, Py_ssize_t j):
        cdef Py_ssize_t n = self.n
        cdef long long a, b
        if i > n or j > n:
            if i > n and j > n:
                return (i > j) - (i < j)
            return -1 if i > n else 1
        self.order_comparisons += 1
        a = self._w[i]
        b = self._w[j]
        return (a > b) - (a < b)

    def eq(self, Py_ssize_t i, Py_ssize_t j):
        if i > self.n or j > self.n:
            return i == j
        self.equality_tests += 1
        return self._w[i] == self._w[j]

    def memo_eq(self, Py_ssize_t i, Py_ssize_t j):
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError("memo_eq needs positions inside the text")
        return self._memo_eq(i, j)

    cdef int _memo_eq(self, Py_ssize_t i, Py_ssize_t j) except -1:
        cdef DisjointSets memo = self.memo
        cdef Py_ssize_t a = memo._find(i)
        cdef Py_ssize_t b = memo._find(j)
        cdef set known
        if a == b:
            self.memo_hits += 1
            return True
        known = self._apart.get(a)
        if known is not None and b in known:
            self.memo_hits += 1
            return False
        self.equality_tests += 1
        if self._w[i] == self._w[j]:
            memo._link(a, b)
            self._merge_apart(a, b, memo._find(a))
            return True
        self._apart.setdefault(a, set()).add(b)
        self._apart.setdefault(b, set()).add(a)
        return False

    cdef int _merge_apart(self, Py_ssize_t a, Py_ssize_t b, Py_ssize_t root) except -1:
        # equality is transitive: the merged class differs from both old partners
        cdef Py_ssize_t loser = b if root == a else a
        cdef set moved = self._apart.pop(loser, None)
        cdef set kept, partners
        if not moved:
            return 0
        kept = self._apart.setdefault(root, set())
        for x in moved:
            partners = self._apart[x]
            partners.discard(loser)
            partners.add(root)
            kept.add(x)
        return 0


cpdef int trailing_nonzero_digits(long long p):
    """Number of least significant base-4 digits of ``p`` before the first zero."""
    cdef int c = 0
    while p & 3:
        c += 1
        p >>= 2
    return c


cpdef long long monotone_step(int k, long long i, long long j):
    """Smallest m * 4**k (m < 3) making digit k of both i and j nonzero."""
    cdef int a = (i >> (2 * k)) & 3
    cdef int b = (j >> (2 * k)) & 3
    cdef int m = 0
    while not ((a + m) & 3 and (b + m) & 3):
        m += 1
    return (<long long>m) << (2 * k)


cpdef long long find_shift(int k, long long i, long long j):
    """Smallest-digit-first shift moving i and j into S(4**k)."""
    cdef long long delta = 0
    cdef int level, a, b, m
    for level in range(k):
        a = ((i + delta) >> (2 * level)) & 3
        b = ((j + delta) >> (2 * level)) & 3
        m = 0
        while not ((a + m) & 3 and (b + m) & 3):
            m += 1
        delta += (<long long>m) << (2 * level)
    return delta


cdef class Base4Core:
    """ShortLCE over the monotone base-4 cover family, one DSU per level."""

    cdef readonly TextCore text
    cdef readonly int max_level
    cdef unsigned char* _nz
    cdef Py_ssize_t** _rank
    cdef list _dsu
    cdef long long* _sparse_calls
    cdef long long* _short_calls
    cdef public object trace

    def __cinit__(self, TextCore text, int max_level):
        cdef Py_ssize_t n = text.n, p
        if max_level < 0:
            raise ValueError("max_level must be non-negative")
        self.text = text
        self.max_level = max_level
        self._nz = <unsigned char*>calloc(n + 1, sizeof(unsigned char))
        self._rank = <Py_ssize_t**>calloc(max_level + 1, sizeof(Py_ssize_t*))
        self._sparse_calls = <long long*>calloc(max_level + 1, sizeof(long long))
        self._short_calls = <long long*>calloc(max_level + 1, sizeof(long long))
        if (self._nz == NULL or self._rank == NULL or self._sparse_calls == NULL
                or self._short_calls == NULL):
            raise MemoryError()
        for p in range(1, n + 1):
            self._nz[p] = 0 if p & 3 == 0 else 1 + self._nz[p >> 2]
        self._dsu = [None] * (max_level + 1)
        self.trace = None

    def __dealloc__(self):
        cdef int k
        if self._rank != NULL:
            for k in range(self.max_level + 1):
                free(self._rank[k])
        free(self._rank)
        free(self._nz)
        free(self._sparse_calls)
        free(self._short_calls)

    @property
    def sparse_calls(self):
        return [self._sparse_calls[k] for k in range(self.max_level + 1)]

    @property
    def short_calls(self):
        return [self._short_calls[k] for k in range(self.max_level + 1)]

    cdef inline int _tnz(self, Py_ssize_t p):
        if p <= self.text.n:
            return self._nz[p]
        return trailing_nonzero_digits(p)

    def member(self, int k, Py_ssize_t p):
        return p >= 1 and self._tnz(p) >= k

    cdef int _level(self, int k) except -1:
        cdef Py_ssize_t n = self.text.n, p, m = 0
        cdef Py_ssize_t* rank = <Py_ssize_t*>malloc((n + 1) * sizeof(Py_ssize_t))
        if rank == NULL:
            raise MemoryError()
        for p in range(n + 1):
            if p >= 1 and self._nz[p] >= k:
                rank[p] = m
                m += 1
            else:
                rank[p] = -1
        self._rank[k] = rank
        self._dsu[k] = DisjointSets(m)
        return 0

    def level_dsu(self, int k):
        if self._dsu[k] is None:
            self._level(k)
        return self._dsu[k]

    def level_size(self, int k):
        return self.level_dsu(k).size

    def materialized_levels(self):
        return [k for k in range(self.max_level + 1) if self._dsu[k] is not None]

    def sparse_short_lce(self, int k, Py_ssize_t i, Py_ssize_t j):
        """min(LCE, 4**k) for i, j in S(4**k); -1 when either is not."""
        if k < 0 or k > self.max_level:
            raise ValueError(f"level {k} outside [0, {self.max_level}]")
        if i < 1 or j < 1 or self._tnz(i) < k or self._tnz(j) < k:
            return -1
        return self._sparse(k, i, j)

    cdef Py_ssize_t _sparse(self, int k, Py_ssize_t i, Py_ssize_t j) except -2:
        cdef Py_ssize_t cap = (<Py_ssize_t>1) << (2 * k)
        cdef Py_ssize_t n = self.text.n, a, b, q, length
        cdef int p
        cdef DisjointSets dsu
        cdef Py_ssize_t* rank
        self._sparse_calls[k] += 1
        if i == j:
            return cap
        if i > n or j > n:
            return 0
        if self._dsu[k] is None:
            self._level(k)
        dsu = <DisjointSets>self._dsu[k]
        rank = self._rank[k]
        a = dsu._find(rank[i])
        b = dsu._find(rank[j])
        if a == b:
            return cap
        if k == 0:
            length = 1 if self.text._memo_eq(i, j) else 0
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

    def short_lce(self, int k, Py_ssize_t i, Py_ssize_t j):
        """min(LCE(i, j), 4**k) for arbitrary positions."""
        if k < 0 or k > self.max_level:
            raise ValueError(f"level {k} outside [0, {self.max_level}]")
        if i < 1 or j < 1:
            raise IndexError("positions are 1-based")
        return self._short(k, i, j)

    cdef Py_ssize_t _short(self, int k, Py_ssize_t i, Py_ssize_t j) except -2:
        cdef Py_ssize_t cap = (<Py_ssize_t>1) << (2 * k)
        cdef Py_ssize_t n = self.text.n, length = 0, delta = 0, step
        cdef int kp
        cdef object trace = self.trace
        self._short_calls[k] += 1
        if i == j:
            return cap
        if i > n or j > n:
            return 0
        for kp in range(k):
            step = (<Py_ssize_t>1) << (2 * kp)
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


cdef class Pow2Core:
    """Power-of-two ShortLCE engines (plain recursion and sparse-cover variant)."""

    cdef readonly TextCore text
    cdef readonly int max_level
    cdef readonly int sparse_level
    cdef Py_ssize_t _t
    cdef unsigned char* _mask
    cdef Py_ssize_t* _shift
    cdef Py_ssize_t* _srank
    cdef list _full
    cdef list _sparse_dsu
    cdef long long* _calls
    cdef long long* _scalls

    def __cinit__(self, TextCore text, int max_level, int sparse_level,
                  member_mask, shift_table):
        cdef Py_ssize_t t, n = text.n, p, m = 0, r
        if sparse_level < 0 or sparse_level > max_level:
            raise ValueError("need 0 <= sparse_level <= max_level")
        t = (<Py_ssize_t>1) << sparse_level
        if len(member_mask) != t or len(shift_table) != t:
            raise ValueError("cover tables must have length 2**sparse_level")
        self.text = text
        self.max_level = max_level
        self.sparse_level = sparse_level
        self._t = t
        self._mask = <unsigned char*>malloc(t * sizeof(unsigned char))
        self._shift = <Py_ssize_t*>malloc(t * sizeof(Py_ssize_t))
        self._srank = <Py_ssize_t*>malloc((n + 1) * sizeof(Py_ssize_t))
        self._calls = <long long*>calloc(max_level + 1, sizeof(long long))
        self._scalls = <long long*>calloc(max_level + 1, sizeof(long long))
        if (self._mask == NULL or self._shift == NULL or self._srank == NULL
                or self._calls == NULL or self._scalls == NULL):
            raise MemoryError()
        for r in range(t):
            self._mask[r] = 1 if member_mask[r] else 0
            self._shift[r] = int(shift_table[r])
        self._full = [DisjointSets(n + 1) for _ in range(max_level + 1)]
        for p in range(n + 1):
            if p >= 1 and self._mask[p % t]:
                self._srank[p] = m
                m += 1
            else:
                self._srank[p] = -1
        self._sparse_dsu = [None] * sparse_level + [
            DisjointSets(m) for _ in range(sparse_level, max_level + 1)]

    def __dealloc__(self):
        free(self._mask)
        free(self._shift)
        free(self._srank)
        free(self._calls)
        free(self._scalls)

    @property
    def calls(self):
        return [self._calls[k] for k in range(self.max_level + 1)]

    @property
    def sparse_calls(self):
        return [self._scalls[k] for k in range(self.max_level + 1)]

    def full_dsu(self, int k):
        return self._full[k]

    def sparse_dsu(self, int k):
        return self._sparse_dsu[k]

    def member(self, Py_ssize_t p):
        return p >= 1 and self._mask[p % self._t] != 0

    cdef inline bint _member(self, Py_ssize_t p):
        return p >= 1 and self._mask[p % self._t] != 0

    def shift(self, Py_ssize_t i, Py_ssize_t j):
        return self._h(i, j)

    cdef inline Py_ssize_t _h(self, Py_ssize_t i, Py_ssize_t j):
        cdef Py_ssize_t t = self._t
        cdef Py_ssize_t c = (j - i) % t
        if c < 0:
            c += t
        c = (self._shift[c] - j) % t
        if c < 0:
            c += t
        return c

    cdef int _check(self, int k, Py_ssize_t i, Py_ssize_t j) except -1:
        if k < 0 or k > self.max_level:
            raise ValueError(f"level {k} outside [0, {self.max_level}]")
        if i < 1 or j < 1:
            raise IndexError("positions are 1-based")
        return 0

    def short_lce(self, int k, Py_ssize_t i, Py_ssize_t j):
        self._check(k, i, j)
        return self._short(k, i, j)

    cdef Py_ssize_t _short(self, int k, Py_ssize_t i, Py_ssize_t j) except -2:
        cdef Py_ssize_t cap = (<Py_ssize_t>1) << k, n = self.text.n
        cdef Py_ssize_t a, b, half, length
        cdef DisjointSets dsu
        self._calls[k] += 1
        if i == j:
            return cap
        if i > n or j > n:
            return 0
        dsu = <DisjointSets>self._full[k]
        a = dsu._find(i)
        b = dsu._find(j)
        if a == b:
            return cap
        if k == 0:
            length = 1 if self.text._memo_eq(i, j) else 0
        else:
            half = cap >> 1
            length = self._short(k - 1, i, j)
            if length == half:
                length = half + self._short(k - 1, i + half, j + half)
        if length == cap:
            dsu._link(a, b)
        return length

    cdef Py_ssize_t _naive(self, Py_ssize_t i, Py_ssize_t j, Py_ssize_t cap):
        cdef Py_ssize_t n = self.text.n, x = 0
        while x < cap:
            if i + x > n or j + x > n or not self.text._memo_eq(i + x, j + x):
                break
            x += 1
        return x

    def sparse_short_lce(self, int k, Py_ssize_t i, Py_ssize_t j):
        self._check(k, i, j)
        if k < self.sparse_level:
            raise ValueError("level below the sparse level")
        if not (self._member(i) and self._member(j)):
            return -1
        return self._sparse(k, i, j)

    cdef Py_ssize_t _sparse(self, int k, Py_ssize_t i, Py_ssize_t j) except -2:
        cdef Py_ssize_t cap = (<Py_ssize_t>1) << k, n = self.text.n
        cdef Py_ssize_t a, b, half, length
        cdef DisjointSets dsu
        self._scalls[k] += 1
        if i == j:
            return cap
        if i > n or j > n:
            return 0
        dsu = <DisjointSets>self._sparse_dsu[k]
        a = dsu._find(self._srank[i])
        b = dsu._find(self._srank[j])
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

    def fast_short_lce(self, int k, Py_ssize_t i, Py_ssize_t j):
        self._check(k, i, j)
        return self._fast(k, i, j)

    cdef Py_ssize_t _fast(self, int k, Py_ssize_t i, Py_ssize_t j) except -2:
        cdef Py_ssize_t cap = (<Py_ssize_t>1) << k, length, delta
        if i == j:
            return cap
        if k <= self.sparse_level:
            return self._naive(i, j, cap)
        length = self._naive(i, j, self._t)
        if length < self._t:
            return length
        delta = self._h(i, j)
        length = delta + self._sparse(k, i + delta, j + delta)
        return length if length < cap else cap


cdef void _induce(const Py_ssize_t* s, Py_ssize_t n, Py_ssize_t upper,
                  Py_ssize_t* sa, const unsigned char* ls,
                  const Py_ssize_t* sum_l, const Py_ssize_t* sum_s,
                  Py_ssize_t* buf, const Py_ssize_t* lms, Py_ssize_t m):
    cdef Py_ssize_t i, d, v, c
    for i in range(n):
        sa[i] = -1
    memcpy(buf, sum_s, (upper + 1) * sizeof(Py_ssize_t))
    for i in range(m):
        d = lms[i]
        if d == n:
            continue
        sa[buf[s[d]]] = d
        buf[s[d]] += 1
    memcpy(buf, sum_l, (upper + 1) * sizeof(Py_ssize_t))
    sa[buf[s[n - 1]]] = n - 1
    buf[s[n - 1]] += 1
    for i in range(n):
        v = sa[i]
        if v >= 1 and not ls[v - 1]:
            c = s[v - 1]
            sa[buf[c]] = v - 1
            buf[c] += 1
    memcpy(buf, sum_l, (upper + 1) * sizeof(Py_ssize_t))
    i = n - 1
    while i >= 0:
        v = sa[i]
        if v >= 1 and ls[v - 1]:
            c = s[v - 1] + 1
            buf[c] -= 1
            sa[buf[c]] = v - 1
        i -= 1


cdef int _sa_is(const Py_ssize_t* s, Py_ssize_t n, Py_ssize_t upper,
                Py_ssize_t* sa) except -1:
    cdef Py_ssize_t i, m = 0, idx, left, right, end_l, end_r, rec_upper
    cdef bint same
    cdef unsigned char* ls
    cdef Py_ssize_t *sum_l
    cdef Py_ssize_t *sum_s
    cdef Py_ssize_t *buf
    cdef Py_ssize_t *lms_map
    cdef Py_ssize_t *lms
    cdef Py_ssize_t *sorted_lms
    cdef Py_ssize_t *rec_s
    cdef Py_ssize_t *rec_sa
    if n == 0:
        return 0
    if n == 1:
        sa[0] = 0
        return 0
    if n == 2:
        if s[0] < s[1]:
            sa[0] = 0
            sa[1] = 1
        else:
            sa[0] = 1
            sa[1] = 0
        return 0
    ls = <unsigned char*>calloc(n, sizeof(unsigned char))
    sum_l = <Py_ssize_t*>calloc(upper + 2, sizeof(Py_ssize_t))
    sum_s = <Py_ssize_t*>calloc(upper + 2, sizeof(Py_ssize_t))
    buf = <Py_ssize_t*>calloc(upper + 2, sizeof(Py_ssize_t))
    lms_map = <Py_ssize_t*>malloc((n + 1) * sizeof(Py_ssize_t))
    lms = <Py_ssize_t*>malloc((n + 1) * sizeof(Py_ssize_t))
    sorted_lms = <Py_ssize_t*>malloc((n + 1) * sizeof(Py_ssize_t))
    rec_s = NULL
    rec_sa = NULL
    try:
        if (ls == NULL or sum_l == NULL or sum_s == NULL or buf == NULL
                or lms_map == NULL or lms == NULL or sorted_lms == NULL):
            raise MemoryError()
        i = n - 2
        while i >= 0:
            if s[i] == s[i + 1]:
                ls[i] = ls[i + 1]
            else:
                ls[i] = s[i] < s[i + 1]
            i -= 1
        for i in range(n):
            if not ls[i]:
                sum_s[s[i]] += 1
            else:
                sum_l[s[i] + 1] += 1
        for i in range(upper + 1):
            sum_s[i] += sum_l[i]
            if i < upper:
                sum_l[i + 1] += sum_s[i]
        for i in range(n + 1):
            lms_map[i] = -1
        for i in range(1, n):
            if not ls[i - 1] and ls[i]:
                lms_map[i] = m
                lms[m] = i
                m += 1
        _induce(s, n, upper, sa, ls, sum_l, sum_s, buf, lms, m)
        if m:
            idx = 0
            for i in range(n):
                if lms_map[sa[i]] != -1:
                    sorted_lms[idx] = sa[i]
                    idx += 1
            rec_s = <Py_ssize_t*>calloc(m, sizeof(Py_ssize_t))
            rec_sa = <Py_ssize_t*>calloc(m, sizeof(Py_ssize_t))
            if rec_s == NULL or rec_sa == NULL:
                raise MemoryError()
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
            _sa_is(rec_s, m, rec_upper, rec_sa)
            for idx in range(m):
                sorted_lms[idx] = lms[rec_sa[idx]]
            _induce(s, n, upper, sa, ls, sum_l, sum_s, buf, sorted_lms, m)
    finally:
        free(ls)
        free(sum_l)
        free(sum_s)
        free(buf)
        free(lms_map)
        free(lms)
        free(sorted_lms)
        free(rec_s)
        free(rec_sa)
    return 0


def suffix_array(s, Py_ssize_t upper):
    """Induced-sorting suffix array of ``s`` (ints in ``[0, upper]``), 0-based."""
    cdef list values = [int(c) for c in s]
    cdef Py_ssize_t n = len(values), i
    cdef Py_ssize_t* buf = <Py_ssize_t*>malloc((n + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* sa = <Py_ssize_t*>malloc((n + 1) * sizeof(Py_ssize_t))
    try:
        if buf == NULL or sa == NULL:
            raise MemoryError()
        for i in range(n):
            buf[i] = values[i]
            if buf[i] < 0 or buf[i] > upper:
                raise ValueError("symbol outside [0, upper]")
        _sa_is(buf, n, upper, sa)
        return [sa[i] for i in range(n)]
    finally:
        free(buf)
        free(sa)


def lcp_array(s, sa):
    """Kasai: ``lcp[r]`` = common prefix of suffixes ``sa[r-1]`` and ``sa[r]``; lcp[0] = 0."""
    cdef list values = [int(c) for c in s]
    cdef list order = [int(p) for p in sa]
    cdef Py_ssize_t n = len(values), p, q, r, h = 0
    cdef Py_ssize_t* w = <Py_ssize_t*>malloc((n + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* sa_c = <Py_ssize_t*>malloc((n + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* rank = <Py_ssize_t*>malloc((n + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* lcp = <Py_ssize_t*>calloc(n + 1, sizeof(Py_ssize_t))
    try:
        if w == NULL or sa_c == NULL or rank == NULL or lcp == NULL:
            raise MemoryError()
        for p in range(n):
            w[p] = values[p]
            sa_c[p] = order[p]
        for r in range(n):
            rank[sa_c[r]] = r
        for p in range(n):
            r = rank[p]
            if r == 0:
                h = 0
                continue
            q = sa_c[r - 1]
            while p + h < n and q + h < n and w[p + h] == w[q + h]:
                h += 1
            lcp[r] = h
            if h:
                h -= 1
        return [lcp[r] for r in range(n)]
    finally:
        free(w)
        free(sa_c)
        free(rank)
        free(lcp)


cdef class RangeMin:
    """Sparse table; ``query(lo, hi)`` is the minimum of ``values[lo:hi]``."""

    cdef readonly Py_ssize_t size
    cdef int _levels
    cdef Py_ssize_t** _table

    def __cinit__(self, values):
        cdef list row = [int(v) for v in values]
        cdef Py_ssize_t n = len(row), i, span = 1
        cdef int d
        cdef Py_ssize_t* prev
        cdef Py_ssize_t* cur
        self.size = n
        self._levels = 1
        while 2 * span <= n:
            span *= 2
            self._levels += 1
        self._table = <Py_ssize_t**>calloc(self._levels, sizeof(Py_ssize_t*))
        if self._table == NULL:
            raise MemoryError()
        self._table[0] = <Py_ssize_t*>malloc((n + 1) * sizeof(Py_ssize_t))
        if self._table[0] == NULL:
            raise MemoryError()
        for i in range(n):
            self._table[0][i] = row[i]
        span = 1
        for d in range(1, self._levels):
            prev = self._table[d - 1]
            cur = <Py_ssize_t*>malloc((n - 2 * span + 2) * sizeof(Py_ssize_t))
            if cur == NULL:
                raise MemoryError()
            self._table[d] = cur
            for i in range(n - 2 * span + 1):
                cur[i] = prev[i] if prev[i] < prev[i + span] else prev[i + span]
            span *= 2

    def __dealloc__(self):
        cdef int d
        if self._table != NULL:
            for d in range(self._levels):
                free(self._table[d])
        free(self._table)

    def query(self, Py_ssize_t lo, Py_ssize_t hi):
        if lo < 0 or hi > self.size or lo >= hi:
            raise IndexError("empty or out-of-range interval")
        return self._query(lo, hi)

    cdef inline Py_ssize_t _query(self, Py_ssize_t lo, Py_ssize_t hi):
        cdef Py_ssize_t span = hi - lo, a, b
        cdef int d = 0
        while (span >> (d + 1)) > 0:
            d += 1
        a = self._table[d][lo]
        b = self._table[d][hi - ((<Py_ssize_t>1) << d)]
        return a if a < b else b
