"""Constructive algorithms: randomized k-limited packing and greedy 2-packing."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .bounds import lb_degree_sum, lb_greedy, lb_main
from .graph import Graph
from .packing import PackingError, PackingSet, _extend_mask, extension_order, from_mask, violations_mask
from .seeds import derive_seed, rng

TRIM_POLICIES = ("max_degree", "min_degree", "ascending")


@dataclass(frozen=True)
class AlgoParams:
    seed: int = 0
    max_restarts: int = 1000
    trim_policy: str = "max_degree"
    extend_policy: str = "ascending"
    vertex_order: str = "ascending"
    workers: int = 1


@dataclass(frozen=True)
class RunResult:
    packing: PackingSet
    restarts_used: int
    bound_target: int
    bound_met: bool
    trace: tuple[int, ...] = field(default=())
    winning_restart: int | None = None

    def to_json(self) -> dict:
        return {
            "size": self.packing.size,
            "witness": list(self.packing.members),
            "restarts_used": self.restarts_used,
            "bound_target": self.bound_target,
            "bound_met": self.bound_met,
            "winning_restart": self.winning_restart,
            "trace": list(self.trace),
        }


def inclusion_probability(max_deg: int, k: int) -> float:
    """``(1 / (C(max_deg, k) * (max_deg + 1)))^(1/k)``."""
    return (1.0 / (math.comb(max_deg, k) * (max_deg + 1))) ** (1.0 / k)


def _check_gate(g: Graph, k: int) -> None:
    if k < 1:
        raise PackingError(f"k must be >= 1, got {k}")
    if k > g.max_deg:
        raise PackingError(f"randomized construction needs k <= max_deg ({k} > {g.max_deg}); L_k = n here")


def _victim_key(g: Graph, policy: str):
    if policy == "max_degree":
        return lambda u: (-g.deg[u], u)
    if policy == "min_degree":
        return lambda u: (g.deg[u], u)
    if policy == "ascending":
        return lambda u: u
    raise PackingError(f"unknown trim policy {policy!r}")


def _trim_pass(g: Graph, in_a: list[bool], k: int, order, victim_key) -> int:
    removed = 0
    for v in order:
        hits = [u for u in g.adj[v] if in_a[u]]
        r = len(hits)
        if in_a[v]:
            excess = r - k + 1 if r >= k else 0
        else:
            excess = r - k if r > k else 0
        if excess:
            hits.sort(key=victim_key)
            for u in hits[:excess]:
                in_a[u] = False
            removed += excess
    return removed


def randomized_stages(
    g: Graph,
    k: int,
    seed: int,
    trim_policy: str = "max_degree",
    extend_policy: str = "ascending",
    vertex_order: str = "ascending",
) -> tuple[int, int, int]:
    """One run, returning ``(sampled_size, trimmed_mask, final_mask)``."""
    _check_gate(g, k)
    p = inclusion_probability(g.max_deg, k)
    coins = rng(seed).random(g.n)
    in_a = [bool(c < p) for c in coins]
    sampled = sum(in_a)
    order = extension_order(g, vertex_order)
    key = _victim_key(g, trim_policy)
    # loads only drop during a pass, so one pass already fixes every vertex;
    # the loop is a guard, not an expected second round
    while True:
        removed = _trim_pass(g, in_a, k, order, key)
        mask = sum(1 << v for v in range(g.n) if in_a[v])
        if not violations_mask(g, mask, k):
            break
        if not removed:
            raise AssertionError("trim pass left violations without removing anything")
    final = _extend_mask(g, mask, k, extension_order(g, extend_policy))
    return sampled, mask, final


def randomized_once(g: Graph, k: int, seed: int, **policies) -> PackingSet:
    """Sample, trim redundant vertices, then extend to a maximal k-limited packing.

    Each vertex joins the sample independently with probability
    :func:`inclusion_probability`; coins are drawn in ascending id order from
    a PCG64 stream seeded with ``seed``.
    """
    _, _, final = randomized_stages(g, k, seed, **policies)
    return PackingSet(k, from_mask(final), g.n)


def restart_seed(seed: int, index: int) -> int:
    return derive_seed(seed, "restart", index)


def randomized_with_restarts(g: Graph, k: int, params: AlgoParams | None = None) -> RunResult:
    """Repeat :func:`randomized_once` until the size reaches the main lower bound.

    Restart ``i`` uses ``restart_seed(params.seed, i)``.  With ``workers > 1``
    restarts run in batches on a thread pool; the lowest successful index
    wins and the trace stops there, exactly as in a sequential run.
    """
    params = params or AlgoParams()
    _check_gate(g, k)
    if params.max_restarts < 1:
        raise ValueError("max_restarts must be positive")
    target = lb_main(g.n, g.max_deg, k).integer_form
    policies = dict(trim_policy=params.trim_policy, extend_policy=params.extend_policy, vertex_order=params.vertex_order)

    def run(i: int) -> int:
        return randomized_stages(g, k, restart_seed(params.seed, i), **policies)[2]

    trace: list[int] = []
    best_mask, best_size, winner = 0, -1, None
    batch = max(1, params.workers)
    pool = ThreadPoolExecutor(max_workers=batch) if batch > 1 else None
    try:
        i = 0
        while i < params.max_restarts and winner is None:
            idx = range(i, min(i + batch, params.max_restarts))
            masks = list(pool.map(run, idx)) if pool else [run(j) for j in idx]
            for j, mask in zip(idx, masks):
                size = mask.bit_count()
                trace.append(size)
                if size > best_size:
                    best_mask, best_size = mask, size
                if size >= target:
                    winner = j
                    break
            i += batch
    finally:
        if pool:
            pool.shutdown()
    packing = PackingSet(k, from_mask(best_mask), g.n)
    return RunResult(packing, len(trace), target, winner is not None, tuple(trace), winner)


def greedy_two_packing(g: Graph) -> PackingSet:
    """Greedy 1-limited packing (vertices pairwise at distance >= 3).

    Repeatedly take the remaining vertex of smallest degree in G (ties by id)
    and discard everything within distance 2 of it in G.  Each pick of
    degree d removes at most d * max_deg + 1 vertices, which gives both
    ``(n + D(D - d_min)) / (D^2 + 1)`` and ``sum 1/(d_i D + 1)``.
    """
    closed = g.closed_masks
    order = sorted(range(g.n), key=lambda v: (g.deg[v], v))
    remaining = (1 << g.n) - 1
    chosen = []
    for v in order:
        if not (remaining >> v) & 1:
            continue
        chosen.append(v)
        ball = closed[v]
        for u in g.adj[v]:
            ball |= closed[u]
        remaining &= ~ball
    x = PackingSet(1, tuple(sorted(chosen)), g.n)
    if g.max_deg >= 1:
        for bound in (lb_greedy(g.n, g.max_deg, g.min_deg), lb_degree_sum(g.deg, g.max_deg)):
            if x.size < bound.integer_form:
                raise AssertionError(f"greedy size {x.size} below {bound.name}={bound.integer_form}")
    return x
