# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels over 64-bit adjacency rows.

Same call signatures and results as ``wcdim._pure``.
"""
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64


cdef inline int ctz(u64 x) nogil:
    return __builtin_ctzll(x)

cdef inline int popcount(u64 x) nogil:
    return __builtin_popcountll(x)

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef void _expand(u64 r, u64 p, u64 x, const u64* non, u64* out, Py_ssize_t* count,
                  Py_ssize_t cap) noexcept nogil:
    cdef u64 px, cand, low
    cdef int u, v, c, best, pivot
    if p == 0:
        if x == 0:
            if count[0] < cap:
                out[count[0]] = r
            count[0] += 1
        return
    px = p | x
    best = -1
    pivot = 0
    while px:
        u = ctz(px)
        c = popcount(p & non[u])
        if c > best:
            best = c
            pivot = u
        px &= px - 1
    cand = p & ~non[pivot]
    while cand:
        low = cand & (~cand + 1)
        v = ctz(cand)
        _expand(r | low, p & non[v], x & non[v], non, out, count, cap)
        p &= ~low
        x |= low
        cand ^= low


def maximal_independent_sets(adj, int order):
    if order > 64:
        from wcdim import _pure
        return _pure.maximal_independent_sets(adj, order)
    cdef u64 non[64]
    cdef u64 full = (<u64>0 - 1) if order == 64 else ((<u64>1 << order) - 1)
    cdef int v
    for v in range(order):
        non[v] = full & ~(<u64>adj[v]) & ~(<u64>1 << v)
    cdef Py_ssize_t cap = 1024
    cdef Py_ssize_t count
    cdef u64* out
    while True:
        out = <u64*>malloc(cap * sizeof(u64))
        if out == NULL:
            raise MemoryError()
        count = 0
        _expand(0, full, 0, non, out, &count, cap)
        if count <= cap:
            try:
                return [out[i] for i in range(count)]
            finally:
                free(out)
        free(out)
        cap = count


def canonical_bits(adj, int order):
    if order > 11:
        from wcdim import _pure
        return _pure.canonical_bits(adj, order)
    cdef u64 a[11]
    cdef int v, x, y, k
    for v in range(order):
        a[v] = adj[v]
    cdef u64 full = (<u64>1 << order) - 1
    cdef u64 unused, rest, m, r, best, col, value = 0
    cdef u64 pat[11]
    cdef u64 newpat[11]
    cdef bint have
    states = [(full, (0,) * order)]
    for k in range(order):
        have = False
        best = 0
        nxt = {}
        for st in states:
            unused = st[0]
            tpat = st[1]
            for v in range(order):
                pat[v] = tpat[v]
            m = unused
            while m:
                x = ctz(m)
                m &= m - 1
                col = pat[x]
                if have and col > best:
                    continue
                if not have or col < best:
                    best = col
                    have = True
                    nxt = {}
                rest = unused & ~(<u64>1 << x)
                for v in range(order):
                    newpat[v] = pat[v]
                r = rest
                while r:
                    y = ctz(r)
                    r &= r - 1
                    newpat[y] = (pat[y] << 1) | ((a[y] >> x) & 1)
                key = (rest, tuple([newpat[y] for y in range(order) if (rest >> y) & 1]))
                if key not in nxt:
                    nxt[key] = (rest, tuple([newpat[v] for v in range(order)]))
        value = (value << k) | best
        states = list(nxt.values())
    return value


def rank_mod_p(rows, int ncols, long long p):
    if p >= 2147483648:
        from wcdim import _pure
        return _pure.rank_mod_p(rows, ncols, p)
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    cdef int64_t* a = <int64_t*>malloc(nrows * ncols * sizeof(int64_t))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, c, piv, rank = 0
    cdef int64_t t, f, inv, base, e, res
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                a[i * ncols + j] = row[j] % p
        with nogil:
            for c in range(ncols):
                piv = -1
                for i in range(rank, nrows):
                    if a[i * ncols + c] != 0:
                        piv = i
                        break
                if piv < 0:
                    continue
                if piv != rank:
                    for j in range(ncols):
                        t = a[piv * ncols + j]
                        a[piv * ncols + j] = a[rank * ncols + j]
                        a[rank * ncols + j] = t
                # modular inverse by Fermat
                base = a[rank * ncols + c]
                e = p - 2
                res = 1
                while e > 0:
                    if e & 1:
                        res = res * base % p
                    base = base * base % p
                    e >>= 1
                inv = res
                for j in range(c, ncols):
                    a[rank * ncols + j] = a[rank * ncols + j] * inv % p
                for i in range(rank + 1, nrows):
                    f = a[i * ncols + c]
                    if f != 0:
                        for j in range(c, ncols):
                            a[i * ncols + j] = (a[i * ncols + j] - f * a[rank * ncols + j]) % p
                            if a[i * ncols + j] < 0:
                                a[i * ncols + j] += p
                rank += 1
                if rank == nrows:
                    break
        return rank
    finally:
        free(a)


cdef extern from *:
    bint __builtin_mul_overflow(int64_t, int64_t, int64_t*) nogil
    bint __builtin_sub_overflow(int64_t, int64_t, int64_t*) nogil
    bint __builtin_add_overflow(int64_t, int64_t, int64_t*) nogil


cdef inline int64_t iabs(int64_t x) noexcept nogil:
    return -x if x < 0 else x


cdef void _swap_rows(int64_t* a, Py_ssize_t ncols, Py_ssize_t i, Py_ssize_t k) noexcept nogil:
    cdef Py_ssize_t j
    cdef int64_t t
    if i == k:
        return
    for j in range(ncols):
        t = a[i * ncols + j]
        a[i * ncols + j] = a[k * ncols + j]
        a[k * ncols + j] = t


cdef void _swap_cols(int64_t* a, Py_ssize_t nrows, Py_ssize_t ncols, Py_ssize_t j, Py_ssize_t k) noexcept nogil:
    cdef Py_ssize_t i
    cdef int64_t t
    if j == k:
        return
    for i in range(nrows):
        t = a[i * ncols + j]
        a[i * ncols + j] = a[i * ncols + k]
        a[i * ncols + k] = t


cdef Py_ssize_t _snf64(int64_t* a, Py_ssize_t nrows, Py_ssize_t ncols, int64_t* diag) noexcept nogil:
    """Smith diagonal in place; returns its length, or -1 on int64 overflow."""
    cdef Py_ssize_t t = 0, i, j, bi, bj, bad, lim = nrows if nrows < ncols else ncols
    cdef int64_t best, x, p, q, prod
    cdef bint dirty
    while t < lim:
        best = 0
        bi = bj = -1
        for i in range(t, nrows):
            for j in range(t, ncols):
                x = iabs(a[i * ncols + j])
                if x and (best == 0 or x < best):
                    best = x
                    bi = i
                    bj = j
                    if best == 1:
                        break
            if best == 1:
                break
        if best == 0:
            break
        _swap_rows(a, ncols, t, bi)
        _swap_cols(a, nrows, ncols, t, bj)
        while True:
            p = a[t * ncols + t]
            dirty = False
            for i in range(t + 1, nrows):
                q = a[i * ncols + t] / p
                if q:
                    for j in range(t, ncols):
                        if __builtin_mul_overflow(q, a[t * ncols + j], &prod):
                            return -1
                        if __builtin_sub_overflow(a[i * ncols + j], prod, &a[i * ncols + j]):
                            return -1
                if a[i * ncols + t]:
                    dirty = True
            for j in range(t + 1, ncols):
                q = a[t * ncols + j] / p
                if q:
                    for i in range(t, nrows):
                        if __builtin_mul_overflow(q, a[i * ncols + t], &prod):
                            return -1
                        if __builtin_sub_overflow(a[i * ncols + j], prod, &a[i * ncols + j]):
                            return -1
                if a[t * ncols + j]:
                    dirty = True
            if dirty:
                best = iabs(p)
                bi = bj = t
                for i in range(t, nrows):
                    x = iabs(a[i * ncols + t])
                    if x and x < best:
                        best = x
                        bi = i
                        bj = t
                for j in range(t, ncols):
                    x = iabs(a[t * ncols + j])
                    if x and x < best:
                        best = x
                        bi = t
                        bj = j
                _swap_rows(a, ncols, t, bi)
                _swap_cols(a, nrows, ncols, t, bj)
                continue
            bad = -1
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i * ncols + j] % p:
                        bad = i
                        break
                if bad >= 0:
                    break
            if bad < 0:
                break
            for j in range(t, ncols):
                if __builtin_add_overflow(a[t * ncols + j], a[bad * ncols + j], &a[t * ncols + j]):
                    return -1
        diag[t] = iabs(a[t * ncols + t])
        t += 1
    return t


def invariant_factors(rows, int ncols):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return []
    cdef int64_t* a = <int64_t*>malloc(nrows * ncols * sizeof(int64_t))
    cdef int64_t* diag = <int64_t*>malloc(ncols * sizeof(int64_t))
    cdef Py_ssize_t i, j, n
    cdef object x
    if a == NULL or diag == NULL:
        free(a)
        free(diag)
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                x = row[j]
                if not -4611686018427387904 <= x <= 4611686018427387904:
                    from wcdim import _pure
                    return _pure.invariant_factors(rows, ncols)
                a[i * ncols + j] = x
        with nogil:
            n = _snf64(a, nrows, ncols, diag)
        if n < 0:
            from wcdim import _pure
            return _pure.invariant_factors(rows, ncols)
        return [diag[i] for i in range(n)]
    finally:
        free(a)
        free(diag)
