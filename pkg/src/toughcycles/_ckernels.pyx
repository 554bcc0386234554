# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels on 64-bit vertex masks.

Same interface and same search order as ``_pykernels``, so witnesses and
certificates agree exactly between the two backends.
"""

ctypedef unsigned long long u64

cdef extern from *:
    int popcount "__builtin_popcountll"(u64 x) nogil
    int ctz "__builtin_ctzll"(u64 x) nogil


cdef inline u64 full_mask(int n) nogil:
    if n >= 64:
        return <u64>0xFFFFFFFFFFFFFFFF
    return ((<u64>1) << n) - 1


cdef inline u64 bitv(int v) nogil:
    return (<u64>1) << v


cdef tuple as_tuple(const int* xs, int k):
    cdef list out = []
    cdef int i
    for i in range(k):
        out.append(xs[i])
    return tuple(out)


cdef void load(object adj, int n, u64* a) except *:
    cdef int i
    for i in range(n):
        a[i] = <u64>adj[i]


cdef u64 spread(const u64* a, u64 start, u64 allowed) nogil:
    cdef u64 seen = start, frontier = start, nxt, f
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= a[ctz(f)]
            f &= f - 1
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


cdef int components(const u64* a, int n, u64 removed) nogil:
    cdef u64 remaining = full_mask(n) & ~removed
    cdef int count = 0
    while remaining:
        remaining &= ~spread(a, remaining & (~remaining + 1), remaining)
        count += 1
    return count


def count_components(adj, int n, removed):
    cdef u64 a[64]
    load(adj, n, a)
    return components(a, n, <u64>removed)


# independence number ------------------------------------------------------------

cdef struct MisState:
    int best
    u64 chosen


cdef void mis_search(const u64* a, u64 cand, u64 chosen, int size, MisState* st) nogil:
    cdef u64 c, low
    cdef int v, w, d, bestd
    if not cand:
        if size > st.best:
            st.best = size
            st.chosen = chosen
        return
    if size + popcount(cand) <= st.best:
        return
    c = cand
    while c:
        low = c & (~c + 1)
        v = ctz(c)
        if not (a[v] & cand):
            mis_search(a, cand & ~low, chosen | low, size + 1, st)
            return
        c ^= low
    bestd = -1
    v = -1
    c = cand
    while c:
        w = ctz(c)
        d = popcount(a[w] & cand)
        if d > bestd:
            bestd = d
            v = w
        c &= c - 1
    mis_search(a, cand & ~a[v] & ~bitv(v), chosen | bitv(v), size + 1, st)
    mis_search(a, cand & ~bitv(v), chosen, size, st)


def max_independent_set(adj, int n):
    cdef u64 a[64]
    cdef MisState st
    load(adj, n, a)
    st.best = 0
    st.chosen = 0
    mis_search(a, full_mask(n), 0, 0, &st)
    return st.chosen


# 1-toughness ----------------------------------------------------------------------

def tough_violation(adj, int n, int alpha):
    cdef u64 a[64]
    cdef int idx[64]
    cdef int k, i
    cdef u64 s
    load(adj, n, a)
    for k in range(1, n):
        if k >= n - k or k >= alpha:
            break
        for i in range(k):
            idx[i] = i
        while True:
            s = 0
            for i in range(k):
                s |= bitv(idx[i])
            if components(a, n, s) > k:
                return s
            i = k - 1
            while i >= 0 and idx[i] == n - k + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            i += 1
            while i < k:
                idx[i] = idx[i - 1] + 1
                i += 1
    return 0


# longest cycle --------------------------------------------------------------------

cdef struct LcState:
    const u64* a
    int n
    int s
    u64 comp
    u64 target
    int cap
    int path[64]
    int length
    int best[64]
    int best_len


cdef bint lc_extend(LcState* st, int end, u64 visited) nogil:
    cdef int length = st.length, w, i
    cdef u64 free_, reach, nxt, low
    if length >= 3 and (st.a[end] & st.target) and length > st.best_len:
        st.best_len = length
        for i in range(length):
            st.best[i] = st.path[i]
        if length == st.cap:
            return True
    free_ = st.comp & ~visited
    reach = spread(st.a, bitv(end), free_ | bitv(end)) & free_
    if length + popcount(reach) <= st.best_len:
        return False
    if not (st.a[st.s] & reach):
        return False
    nxt = st.a[end] & free_
    while nxt:
        low = nxt & (~nxt + 1)
        w = ctz(nxt)
        st.path[st.length] = w
        st.length += 1
        if lc_extend(st, w, visited | low):
            return True
        st.length -= 1
        nxt ^= low
    return False


def longest_cycle(adj, int n):
    cdef u64 a[64]
    cdef LcState st
    cdef int s, i
    cdef u64 allowed
    load(adj, n, a)
    st.a = a
    st.n = n
    st.best_len = 2
    for s in range(n):
        allowed = full_mask(n) & ~(bitv(s) - 1)
        st.comp = spread(a, bitv(s), allowed)
        if popcount(st.comp) <= st.best_len:
            continue
        st.cap = popcount(st.comp)
        st.target = bitv(s)
        st.s = s
        st.path[0] = s
        st.length = 1
        if a[s] & st.comp:
            if lc_extend(&st, s, bitv(s)):
                if st.best_len == n:
                    break
    if st.best_len < 3:
        return ()
    return as_tuple(st.best, st.best_len)


# cycles of a fixed length -----------------------------------------------------------

cdef struct CyState:
    const u64* a
    int s
    int length
    u64 allowed
    u64 target
    int path[64]
    int depth
    long long limit


cdef bint cy_extend(CyState* st, int end, u64 visited, list out) except -1:
    cdef int depth = st.depth, w
    cdef u64 free_, reach, nxt, low
    if depth == st.length:
        if (st.a[end] & st.target) and st.path[1] < st.path[depth - 1]:
            out.append(as_tuple(st.path, depth))
            if len(out) > st.limit:
                return True
        return False
    free_ = st.allowed & ~visited
    if depth > 1:
        reach = spread(st.a, bitv(end), free_ | bitv(end)) & free_
        if depth + popcount(reach) < st.length or not (st.a[st.s] & reach):
            return False
    nxt = st.a[end] & free_
    while nxt:
        low = nxt & (~nxt + 1)
        w = ctz(nxt)
        st.path[st.depth] = w
        st.depth += 1
        if cy_extend(st, w, visited | low, out):
            return True
        st.depth -= 1
        nxt ^= low
    return False


def cycles_of_length(adj, int n, int length, limit):
    cdef u64 a[64]
    cdef CyState st
    cdef int s
    out = []
    if length < 3:
        return out
    load(adj, n, a)
    st.a = a
    st.length = length
    st.limit = min(limit, 1 << 62)
    for s in range(n - length + 1):
        st.s = s
        st.allowed = full_mask(n) & ~(bitv(s + 1) - 1)
        st.target = bitv(s)
        st.path[0] = s
        st.depth = 1
        if cy_extend(&st, s, bitv(s), out):
            break
    return out


# hamiltonian paths on a vertex subset -------------------------------------------------

cdef struct HpState:
    const u64* a
    u64 allowed
    int end
    int total
    int path[64]
    int depth
    long long limit


cdef bint hp_extend(HpState* st, int cur, u64 visited, list out) except -1:
    cdef u64 free_, nxt, low
    cdef int w
    if st.depth == st.total:
        if cur == st.end:
            out.append(as_tuple(st.path, st.depth))
            return len(out) > st.limit
        return False
    free_ = st.allowed & ~visited
    if not (free_ & bitv(st.end)):
        return False
    if (spread(st.a, bitv(cur), free_ | bitv(cur)) & free_) != free_:
        return False
    nxt = st.a[cur] & free_
    if st.depth < st.total - 1:
        nxt &= ~bitv(st.end)
    while nxt:
        low = nxt & (~nxt + 1)
        w = ctz(nxt)
        st.path[st.depth] = w
        st.depth += 1
        if hp_extend(st, w, visited | low, out):
            return True
        st.depth -= 1
        nxt ^= low
    return False


def hamiltonian_paths(adj, allowed, int start, int end, limit):
    cdef u64 a[64]
    cdef HpState st
    cdef u64 al = <u64>allowed
    out = []
    if not ((al >> start) & 1 and (al >> end) & 1):
        return out
    if start == end:
        if popcount(al) == 1:
            out.append((start,))
        return out
    load(adj, len(adj), a)
    st.a = a
    st.allowed = al
    st.end = end
    st.total = popcount(al)
    st.limit = min(limit, 1 << 62)
    st.path[0] = start
    st.depth = 1
    hp_extend(&st, start, bitv(start), out)
    return out


# canonical form ---------------------------------------------------------------------

cdef struct Partition:
    int elems[64]
    int start[65]
    int ncells


cdef void refine(const u64* a, int n, Partition* p) nogil:
    cdef Partition q
    cdef int changed = 1, split, passes, w, ci, j, v, lo, hi, key, pos, nc, opened
    cdef int cnt[64]
    cdef u64 wmask
    while changed:
        changed = 0
        passes = p.ncells
        for w in range(passes):
            wmask = 0
            for j in range(p.start[w], p.start[w + 1]):
                wmask |= bitv(p.elems[j])
            split = 0
            pos = 0
            nc = 0
            for ci in range(p.ncells):
                if p.start[ci + 1] - p.start[ci] == 1:
                    q.start[nc] = pos
                    q.elems[pos] = p.elems[p.start[ci]]
                    pos += 1
                    nc += 1
                    continue
                lo = 65
                hi = -1
                for j in range(p.start[ci], p.start[ci + 1]):
                    v = p.elems[j]
                    cnt[j - p.start[ci]] = popcount(a[v] & wmask)
                    if cnt[j - p.start[ci]] < lo:
                        lo = cnt[j - p.start[ci]]
                    if cnt[j - p.start[ci]] > hi:
                        hi = cnt[j - p.start[ci]]
                if lo == hi:
                    q.start[nc] = pos
                    nc += 1
                    for j in range(p.start[ci], p.start[ci + 1]):
                        q.elems[pos] = p.elems[j]
                        pos += 1
                    continue
                split = 1
                for key in range(lo, hi + 1):
                    opened = 0
                    for j in range(p.start[ci], p.start[ci + 1]):
                        if cnt[j - p.start[ci]] == key:
                            if not opened:
                                q.start[nc] = pos
                                nc += 1
                                opened = 1
                            q.elems[pos] = p.elems[j]
                            pos += 1
            if split:
                q.start[nc] = pos
                q.ncells = nc
                p[0] = q
                changed = 1


cdef struct CanonState:
    const u64* a
    int n
    int twin[64]
    bint have
    u64 cert[64]
    int order[64]


cdef void canon_leaf(CanonState* st, Partition* p) nogil:
    cdef int pos[64]
    cdef u64 row[64]
    cdef int i, v, better
    cdef u64 m
    for i in range(st.n):
        pos[p.elems[i]] = i
    for i in range(st.n):
        v = p.elems[i]
        m = st.a[v]
        row[i] = 0
        while m:
            row[i] |= bitv(pos[ctz(m)])
            m &= m - 1
    better = 0
    if not st.have:
        better = 1
    else:
        for i in range(st.n):
            if row[i] != st.cert[i]:
                better = row[i] > st.cert[i]
                break
    if better:
        st.have = 1
        for i in range(st.n):
            st.cert[i] = row[i]
            st.order[i] = p.elems[i]


cdef void canon_search(CanonState* st, Partition* p) nogil:
    cdef Partition child
    cdef int target = -1, ci, j, k, v, pos
    cdef u64 tried = 0
    for ci in range(p.ncells):
        if p.start[ci + 1] - p.start[ci] > 1:
            target = ci
            break
    if target < 0:
        canon_leaf(st, p)
        return
    for j in range(p.start[target], p.start[target + 1]):
        v = p.elems[j]
        if tried & bitv(st.twin[v]):
            continue
        tried |= bitv(st.twin[v])
        # cells before target, then [v], then the rest of target, then the others
        for k in range(p.start[target]):
            child.elems[k] = p.elems[k]
        for ci in range(target + 1):
            child.start[ci] = p.start[ci]
        pos = p.start[target]
        child.elems[pos] = v
        pos += 1
        child.start[target + 1] = pos
        for k in range(p.start[target], p.start[target + 1]):
            if p.elems[k] != v:
                child.elems[pos] = p.elems[k]
                pos += 1
        for k in range(p.start[target + 1], st.n):
            child.elems[k] = p.elems[k]
        for ci in range(target + 1, p.ncells + 1):
            child.start[ci + 1] = p.start[ci]
        child.ncells = p.ncells + 1
        refine(st.a, st.n, &child)
        canon_search(st, &child)


def canonical_labeling(adj, int n):
    cdef u64 a[64]
    cdef CanonState st
    cdef Partition p
    cdef int i, b
    if n == 0:
        return (), []
    load(adj, n, a)
    st.a = a
    st.n = n
    st.have = 0
    for i in range(n):
        st.twin[i] = i
        for b in range(i):
            if st.twin[b] == b and (a[i] & ~bitv(b)) == (a[b] & ~bitv(i)):
                st.twin[i] = b
                break
    for i in range(n):
        p.elems[i] = i
    p.start[0] = 0
    p.start[1] = n
    p.ncells = 1
    refine(a, n, &p)
    canon_search(&st, &p)
    cert = []
    for i in range(n):
        cert.append(st.cert[i])
    return tuple(cert), list(as_tuple(st.order, n))
