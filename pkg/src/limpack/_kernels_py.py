"""Pure-Python search kernels over int bitsets.

These are the reference semantics; ``_ckernels.pyx`` implements the same
searches on ``uint64`` words and must report identical masks and node counts.
``closed[v]`` is always the closed neighbourhood N[v] as a bitset.
"""

from __future__ import annotations

BACKEND = "python"
MAX_N = None  # unbounded


class _BudgetExceeded(Exception):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def packing_bnb(closed, order, k, budget, incumbent):
    """Maximum k-limited packing by include/exclude branching along ``order``.

    Returns ``(best_mask, nodes, complete)``.  ``incumbent`` must be a valid
    packing; it is returned unchanged if nothing larger exists.
    """
    n = len(closed)
    load = [0] * n
    best_mask = incumbent
    best_size = incumbent.bit_count()
    nodes = 0

    def bound(cand):
        # partition candidates into pieces inside single closed neighbourhoods;
        # a piece inside N[w] contributes at most k - load[w]
        total = 0
        for w in order:
            piece = cand & closed[w]
            if piece:
                c = piece.bit_count()
                cap = k - load[w]
                total += c if c < cap else cap
                cand ^= piece
                if not cand:
                    break
        return total

    def rec(x, size, cand, pos):
        nonlocal nodes, best_mask, best_size
        nodes += 1
        if nodes > budget:
            raise _BudgetExceeded
        if size > best_size:
            best_mask, best_size = x, size
        if not cand:
            return
        if size + cand.bit_count() <= best_size:
            return
        if size + bound(cand) <= best_size:
            return
        while not (cand >> order[pos]) & 1:
            pos += 1
        u = order[pos]
        ubit = 1 << u
        inc = cand & ~ubit
        touched = closed[u]
        for w in _bits(touched):
            load[w] += 1
            if load[w] == k:
                inc &= ~closed[w]
        rec(x | ubit, size + 1, inc, pos + 1)
        for w in _bits(touched):
            load[w] -= 1
        rec(x, size, cand & ~ubit, pos + 1)

    full = (1 << n) - 1
    try:
        rec(0, 0, full, 0)
    except _BudgetExceeded:
        return best_mask, nodes, False
    return best_mask, nodes, True


def packing_enumerate(closed, k):
    """Exhaustive scan of all 2^n subsets. Returns ``(best_mask, subsets_checked)``.

    Ties keep the numerically smallest mask.
    """
    n = len(closed)
    best_mask, best_size = 0, 0
    total = 1 << n
    for mask in range(total):
        size = mask.bit_count()
        if size <= best_size:
            continue
        for c in closed:
            if (c & mask).bit_count() > k:
                break
        else:
            best_mask, best_size = mask, size
    return best_mask, total


def ktuple_domination_bnb(closed, k, budget, incumbent):
    """Minimum set D with |N[v] & D| >= k for all v. Returns ``(best_mask, nodes, complete)``.

    ``incumbent`` must be feasible.  Branches on the best-covering candidate
    of the unsatisfied vertex with least slack.
    """
    n = len(closed)
    cnt = [0] * n
    best_mask = incumbent
    best_size = incumbent.bit_count()
    max_cover = max((c.bit_count() for c in closed), default=1)
    nodes = 0

    def rec(d, size, avail):
        nonlocal nodes, best_mask, best_size
        nodes += 1
        if nodes > budget:
            raise _BudgetExceeded
        total_need = 0
        max_need = 0
        pick = -1
        pick_slack = n + 1
        unsat = 0
        for v in range(n):
            need = k - cnt[v]
            if need > 0:
                a = (closed[v] & avail).bit_count()
                if a < need:
                    return
                unsat |= 1 << v
                total_need += need
                if need > max_need:
                    max_need = need
                if a - need < pick_slack:
                    pick, pick_slack = v, a - need
        if not total_need:
            if size < best_size:
                best_mask, best_size = d, size
            return
        lb = -(-total_need // max_cover)
        if max_need > lb:
            lb = max_need
        if size + lb >= best_size:
            return
        u, u_cov = -1, -1
        for w in _bits(closed[pick] & avail):
            cov = (closed[w] & unsat).bit_count()
            if cov > u_cov:
                u, u_cov = w, cov
        ubit = 1 << u
        for w in _bits(closed[u]):
            cnt[w] += 1
        rec(d | ubit, size + 1, avail & ~ubit)
        for w in _bits(closed[u]):
            cnt[w] -= 1
        rec(d, size, avail & ~ubit)

    try:
        rec(0, 0, (1 << n) - 1)
    except _BudgetExceeded:
        return best_mask, nodes, False
    return best_mask, nodes, True
