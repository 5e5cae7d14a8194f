"""Exact domination and k-tuple domination numbers (small graphs)."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .graph import Graph
from .packing import DEFAULT_BUDGET, from_mask


class DominationUndefined(ValueError):
    """k-tuple domination needs min_deg >= k - 1."""


@dataclass(frozen=True)
class DominationResult:
    k: int
    value: int | None
    witness: tuple[int, ...]
    method: str
    nodes_explored: int
    complete: bool = True
    backend: str = field(default="python", compare=False)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "status": "optimal" if self.complete else "unknown",
            "value": self.value,
            "best_found": len(self.witness),
            "witness": list(self.witness),
            "nodes_explored": self.nodes_explored,
            "method": self.method,
        }


def dominates(g: Graph, members, k: int = 1) -> bool:
    mask = 0
    for v in members:
        mask |= 1 << v
    return all((c & mask).bit_count() >= k for c in g.closed_masks)


def greedy_ktuple(g: Graph, k: int) -> int:
    """Max-coverage greedy: add the vertex covering most under-served vertices, ties by id."""
    closed = g.closed_masks
    cnt = [0] * g.n
    mask = 0
    unsat = sum(1 << v for v in range(g.n)) if k > 0 else 0
    while unsat:
        best, best_cov = -1, 0
        for u in range(g.n):
            if (mask >> u) & 1:
                continue
            cov = (closed[u] & unsat).bit_count()
            if cov > best_cov:
                best, best_cov = u, cov
        mask |= 1 << best
        for w in g.closed_neighborhood(best):
            cnt[w] += 1
            if cnt[w] == k:
                unsat &= ~(1 << w)
    return mask


def gamma_ktuple_exact(g: Graph, k: int, budget: int = DEFAULT_BUDGET, backend: str | None = None) -> DominationResult:
    """Minimum size of D with |N[v] & D| >= k for every vertex v."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.min_deg < k - 1:
        raise DominationUndefined(f"k-tuple domination undefined: min_deg {g.min_deg} < k-1 = {k - 1}")
    if g.n == 0:
        return DominationResult(k, 0, (), "empty", 0, True, "none")
    incumbent = greedy_ktuple(g, k)
    mod = kernels.select(g.n, backend)
    mask, nodes, complete = mod.ktuple_domination_bnb(list(g.closed_masks), k, budget, incumbent)
    witness = from_mask(mask)
    value = len(witness) if complete else None
    return DominationResult(k, value, witness, "branch_and_bound", nodes, complete, mod.BACKEND)


def gamma_exact(g: Graph, budget: int = DEFAULT_BUDGET, backend: str | None = None) -> DominationResult:
    return gamma_ktuple_exact(g, 1, budget, backend)


def gamma_enumerate(g: Graph, k: int = 1) -> int:
    """Brute-force k-tuple domination number by increasing subset size (oracle)."""
    from itertools import combinations

    if g.min_deg < k - 1:
        raise DominationUndefined("undefined")
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            if dominates(g, combo, k):
                return size
    raise AssertionError("V(G) always dominates when defined")
