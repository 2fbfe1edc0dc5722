"""Pure Python versions of the hot kernels.

These mirror ``_kernels.pyx`` call for call and are used whenever the
compiled extension is unavailable (or ``WCDIM_PURE_PYTHON=1``).
"""
from __future__ import annotations


def maximal_independent_sets(adj, order):
    """Bitmasks of all maximal independent sets, in discovery order.

    Bron-Kerbosch with greedy pivoting, run over the non-adjacency relation
    (cliques of the complement are independent sets of the graph).
    """
    full = (1 << order) - 1
    non = [full & ~adj[v] & ~(1 << v) for v in range(order)]
    out = []

    def expand(r, p, x):
        if not p:
            if not x:
                out.append(r)
            return
        px = p | x
        pivot = -1
        best = -1
        while px:
            low = px & -px
            u = low.bit_length() - 1
            c = (p & non[u]).bit_count()
            if c > best:
                best = c
                pivot = u
            px ^= low
        cand = p & ~non[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            expand(r | low, p & non[v], x & non[v])
            p &= ~low
            x |= low
            cand ^= low

    expand(0, full, 0)
    return out


def canonical_bits(adj, order):
    """Smallest upper-triangle bit string over all relabellings, as an int.

    Bits are read in graph6 order (x01, x02, x12, x03, ...) with the first bit
    most significant.  Positions are filled one at a time keeping only the
    partial labellings whose prefix is minimal; partial labellings that leave
    the same unused vertices with the same adjacency patterns are merged.
    """
    full = (1 << order) - 1
    states = [(full, (0,) * order)]
    value = 0
    for k in range(order):
        best = None
        nxt = {}
        for unused, pat in states:
            m = unused
            while m:
                low = m & -m
                x = low.bit_length() - 1
                m ^= low
                col = pat[x]
                if best is not None and col > best:
                    continue
                if best is None or col < best:
                    best = col
                    nxt = {}
                rest = unused ^ low
                newpat = list(pat)
                r = rest
                while r:
                    lo = r & -r
                    y = lo.bit_length() - 1
                    r ^= lo
                    newpat[y] = pat[y] << 1 | (adj[y] >> x & 1)
                key = (rest, tuple(newpat[y] for y in range(order) if rest >> y & 1))
                if key not in nxt:
                    nxt[key] = (rest, tuple(newpat))
        value = value << k | best
        states = list(nxt.values())
    return value


def rank_mod_p(rows, ncols, p):
    """Rank of an integer matrix reduced modulo the prime ``p``."""
    a = [[x % p for x in row] for row in rows]
    rank = 0
    nrows = len(a)
    for c in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        prow = a[rank]
        inv = pow(prow[c], p - 2, p)
        for j in range(c, ncols):
            prow[j] = prow[j] * inv % p
        for i in range(rank + 1, nrows):
            f = a[i][c]
            if f:
                row = a[i]
                for j in range(c, ncols):
                    row[j] = (row[j] - f * prow[j]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def invariant_factors(rows, ncols):
    """Smith normal form diagonal (nonzero part, positive, each dividing the next).

    Pivot on the smallest nonzero entry (ties to the lowest row, then column),
    clear its row and column by division with remainder, and when a
    remainder survives restart with it as the pivot.  Once the row and column
    are clear, an entry not divisible by the pivot is folded into the pivot row.
    """
    a = [list(r) for r in rows]
    nrows = len(a)
    diag = []
    t = 0
    while t < min(nrows, ncols):
        # smallest |entry| in the trailing block, ties to lowest (row, col)
        best = None
        for i in range(t, nrows):
            row = a[i]
            for j in range(t, ncols):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                q = a[i][t] // p
                if q:
                    ri, rt = a[i], a[t]
                    for j in range(t, ncols):
                        ri[j] -= q * rt[j]
                if a[i][t]:
                    dirty = True
            rt = a[t]
            for j in range(t + 1, ncols):
                q = rt[j] // p
                if q:
                    for row in a[t:]:
                        row[j] -= q * row[t]
                if rt[j]:
                    dirty = True
            if dirty:
                # a remainder smaller than the pivot survived; move it to (t, t)
                best = None
                for i in range(t, nrows):
                    x = a[i][t]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, t)
                for j in range(t, ncols):
                    x = a[t][j]
                    if x and abs(x) < best[0]:
                        best = (abs(x), t, j)
                _, i, j = best
                a[t], a[i] = a[i], a[t]
                if j != t:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                continue
            # row and column t are clear; enforce divisibility of the rest
            bad = next(
                (i for i in range(t + 1, nrows) if any(x % p for x in a[i][t + 1:])),
                None,
            )
            if bad is None:
                break
            rt, rb = a[t], a[bad]
            for j in range(t, ncols):
                rt[j] += rb[j]
        diag.append(abs(a[t][t]))
        t += 1
    return diag
