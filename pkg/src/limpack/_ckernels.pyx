# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels on 64-bit words (graphs with at most 64 vertices).

Same searches, same branching and the same node accounting as
``limpack._kernels_py``; results must be bit-identical.
"""

from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "cython"
MAX_N = 64

DEF MAXV = 64


cdef inline int popc(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline uint64_t bit(int v) nogil:
    return (<uint64_t>1) << v


cdef struct PackState:
    int n
    int k
    uint64_t closed[MAXV]
    int order[MAXV]
    int load[MAXV]
    uint64_t best_mask
    int best_size
    int64_t nodes
    int64_t budget
    bint aborted


cdef int pack_bound(PackState* s, uint64_t cand) nogil:
    cdef int total = 0, i, w, c, cap
    cdef uint64_t piece
    for i in range(s.n):
        w = s.order[i]
        piece = cand & s.closed[w]
        if piece:
            c = popc(piece)
            cap = s.k - s.load[w]
            total += c if c < cap else cap
            cand ^= piece
            if not cand:
                break
    return total


cdef void pack_rec(PackState* s, uint64_t x, int size, uint64_t cand, int pos) nogil:
    cdef int u, w
    cdef uint64_t ubit, inc, t
    if s.aborted:
        return
    s.nodes += 1
    if s.nodes > s.budget:
        s.aborted = True
        return
    if size > s.best_size:
        s.best_mask = x
        s.best_size = size
    if not cand:
        return
    if size + popc(cand) <= s.best_size:
        return
    if size + pack_bound(s, cand) <= s.best_size:
        return
    while not ((cand >> s.order[pos]) & 1):
        pos += 1
    u = s.order[pos]
    ubit = bit(u)
    inc = cand & ~ubit
    t = s.closed[u]
    while t:
        w = __builtin_ctzll(t)
        t &= t - 1
        s.load[w] += 1
        if s.load[w] == s.k:
            inc &= ~s.closed[w]
    pack_rec(s, x | ubit, size + 1, inc, pos + 1)
    t = s.closed[u]
    while t:
        w = __builtin_ctzll(t)
        t &= t - 1
        s.load[w] -= 1
    if s.aborted:
        return
    pack_rec(s, x, size, cand & ~ubit, pos + 1)


def packing_bnb(closed, order, int k, long long budget, incumbent):
    cdef PackState s
    cdef int i
    cdef int n = len(closed)
    if n > MAXV:
        raise ValueError("compiled kernel supports at most 64 vertices")
    s.n = n
    s.k = k
    for i in range(n):
        s.closed[i] = closed[i]
        s.order[i] = order[i]
        s.load[i] = 0
    s.best_mask = incumbent
    s.best_size = popc(s.best_mask)
    s.nodes = 0
    s.budget = budget
    s.aborted = False
    cdef uint64_t full = (bit(n) - 1) if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    with nogil:
        pack_rec(&s, 0, 0, full, 0)
    return int(s.best_mask), int(s.nodes), not s.aborted


def packing_enumerate(closed, int k):
    cdef int n = len(closed)
    if n > 40:
        raise ValueError("enumeration kernel supports at most 40 vertices")
    cdef uint64_t c[MAXV]
    cdef int i, size, best_size = 0
    cdef uint64_t mask, best_mask = 0, total
    cdef bint ok
    for i in range(n):
        c[i] = closed[i]
    total = bit(n)
    with nogil:
        mask = 0
        while mask < total:
            size = popc(mask)
            if size > best_size:
                ok = True
                for i in range(n):
                    if popc(c[i] & mask) > k:
                        ok = False
                        break
                if ok:
                    best_mask = mask
                    best_size = size
            mask += 1
    return int(best_mask), int(total)


cdef struct DomState:
    int n
    int k
    uint64_t closed[MAXV]
    int cnt[MAXV]
    int max_cover
    uint64_t best_mask
    int best_size
    int64_t nodes
    int64_t budget
    bint aborted


cdef void dom_rec(DomState* s, uint64_t d, int size, uint64_t avail) nogil:
    cdef int v, need, a, total_need = 0, max_need = 0, pick = -1, pick_slack, lb
    cdef int u = -1, u_cov = -1, w, cov
    cdef uint64_t unsat = 0, t, ubit
    if s.aborted:
        return
    s.nodes += 1
    if s.nodes > s.budget:
        s.aborted = True
        return
    pick_slack = s.n + 1
    for v in range(s.n):
        need = s.k - s.cnt[v]
        if need > 0:
            a = popc(s.closed[v] & avail)
            if a < need:
                return
            unsat |= bit(v)
            total_need += need
            if need > max_need:
                max_need = need
            if a - need < pick_slack:
                pick = v
                pick_slack = a - need
    if total_need == 0:
        if size < s.best_size:
            s.best_mask = d
            s.best_size = size
        return
    lb = (total_need + s.max_cover - 1) // s.max_cover
    if max_need > lb:
        lb = max_need
    if size + lb >= s.best_size:
        return
    t = s.closed[pick] & avail
    while t:
        w = __builtin_ctzll(t)
        t &= t - 1
        cov = popc(s.closed[w] & unsat)
        if cov > u_cov:
            u = w
            u_cov = cov
    ubit = bit(u)
    t = s.closed[u]
    while t:
        w = __builtin_ctzll(t)
        t &= t - 1
        s.cnt[w] += 1
    dom_rec(s, d | ubit, size + 1, avail & ~ubit)
    t = s.closed[u]
    while t:
        w = __builtin_ctzll(t)
        t &= t - 1
        s.cnt[w] -= 1
    if s.aborted:
        return
    dom_rec(s, d, size, avail & ~ubit)


def ktuple_domination_bnb(closed, int k, long long budget, incumbent):
    cdef DomState s
    cdef int i, c
    cdef int n = len(closed)
    if n > MAXV:
        raise ValueError("compiled kernel supports at most 64 vertices")
    s.n = n
    s.k = k
    s.max_cover = 1
    for i in range(n):
        s.closed[i] = closed[i]
        s.cnt[i] = 0
        c = popc(s.closed[i])
        if c > s.max_cover:
            s.max_cover = c
    s.best_mask = incumbent
    s.best_size = popc(s.best_mask)
    s.nodes = 0
    s.budget = budget
    s.aborted = False
    cdef uint64_t full = (bit(n) - 1) if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    with nogil:
        dom_rec(&s, 0, 0, full)
    return int(s.best_mask), int(s.nodes), not s.aborted
