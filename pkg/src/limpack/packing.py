"""k-limited packings: validity, maximal extension, exact packing number.

A vertex set X is a k-limited packing when every closed neighbourhood
contains at most k members of X.  Sets are handled internally as int bitsets
keyed by vertex id; the public types expose sorted tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import kernels
from .graph import Graph, GraphError

DEFAULT_BUDGET = 10_000_000
ENUMERATION_MAX_N = 25


class PackingError(ValueError):
    pass


def to_mask(g: Graph, members: Iterable[int]) -> int:
    mask = 0
    for v in members:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class PackingSet:
    k: int
    members: tuple[int, ...]
    graph_n: int

    @property
    def size(self) -> int:
        return len(self.members)

    @classmethod
    def certify(cls, g: Graph, members: Iterable[int], k: int) -> "PackingSet":
        """Build a PackingSet, raising if ``members`` violates the packing constraint."""
        members = tuple(sorted(set(members)))
        bad = verify_packing(g, members, k)
        if bad:
            raise PackingError(f"not a {k}-limited packing: violations {bad[:5]}")
        return cls(k, members, g.n)

    def to_json(self) -> dict:
        return {"k": self.k, "size": self.size, "members": list(self.members)}


@dataclass(frozen=True)
class ExactResult:
    optimum: int | None
    witness: PackingSet
    nodes_explored: int
    method: str
    complete: bool = True
    backend: str = field(default="python", compare=False)

    @property
    def best_found(self) -> int:
        return self.witness.size

    def to_json(self) -> dict:
        return {
            "status": "optimal" if self.complete else "unknown",
            "optimum": self.optimum,
            "best_found": self.best_found,
            "witness": list(self.witness.members),
            "nodes_explored": self.nodes_explored,
            "method": self.method,
        }


def _check_k(k: int) -> None:
    if k < 1:
        raise PackingError(f"k must be >= 1, got {k}")


def violations_mask(g: Graph, mask: int, k: int) -> list[tuple[int, int]]:
    out = []
    for v, c in enumerate(g.closed_masks):
        cnt = (c & mask).bit_count()
        if cnt > k:
            out.append((v, cnt))
    return out


def verify_packing(g: Graph, members: Iterable[int], k: int) -> list[tuple[int, int]]:
    """Vertices whose closed neighbourhood holds more than ``k`` members.

    Returns ``(v, |N[v] & X|)`` pairs; an empty list means ``members`` is a
    valid k-limited packing.

    >>> from limpack.generators import gen_named
    >>> verify_packing(gen_named("path", 3), [0, 2], 1)
    [(1, 2)]
    """
    _check_k(k)
    return violations_mask(g, to_mask(g, members), k)


def is_valid_packing(g: Graph, members: Iterable[int], k: int) -> bool:
    return not verify_packing(g, members, k)


def _extend_mask(g: Graph, mask: int, k: int, order: Iterable[int]) -> int:
    closed = g.closed_masks
    load = [(c & mask).bit_count() for c in closed]
    for u in order:
        if (mask >> u) & 1:
            continue
        if all(load[w] < k for w in g.adj[u]) and load[u] < k:
            mask |= 1 << u
            load[u] += 1
            for w in g.adj[u]:
                load[w] += 1
    return mask


def extension_order(g: Graph, policy: str = "ascending") -> list[int]:
    if policy == "ascending":
        return list(range(g.n))
    if policy == "min_degree":
        return sorted(range(g.n), key=lambda v: (g.deg[v], v))
    if policy == "max_degree":
        return sorted(range(g.n), key=lambda v: (-g.deg[v], v))
    raise PackingError(f"unknown extension policy {policy!r}")


def extend_to_maximal(g: Graph, x: PackingSet | Iterable[int], k: int, policy: str = "ascending") -> PackingSet:
    """Add vertices in ``policy`` order while the packing stays valid.

    Each vertex is tried once; loads only grow, so a vertex rejected once can
    never fit later and the result is maximal.
    """
    _check_k(k)
    members = x.members if isinstance(x, PackingSet) else x
    mask = to_mask(g, members)
    if violations_mask(g, mask, k):
        raise PackingError("input set is not a valid packing")
    mask = _extend_mask(g, mask, k, extension_order(g, policy))
    return PackingSet(k, from_mask(mask), g.n)


def is_maximal(g: Graph, members: Iterable[int], k: int) -> bool:
    mask = to_mask(g, members)
    for u in range(g.n):
        if not (mask >> u) & 1 and not violations_mask(g, mask | (1 << u), k):
            return False
    return True


def branch_order(g: Graph) -> list[int]:
    """Descending degree, ties by ascending id."""
    return sorted(range(g.n), key=lambda v: (-g.deg[v], v))


def exact_lk(g: Graph, k: int, budget: int = DEFAULT_BUDGET, backend: str | None = None) -> ExactResult:
    """Exact k-limited packing number by branch and bound.

    For ``k >= max_deg + 1`` every closed neighbourhood has at most k vertices,
    so V(G) itself is a packing and the search is skipped.  When the node
    budget runs out the result has ``complete=False``, ``optimum=None`` and
    the best packing seen so far as witness.
    """
    _check_k(k)
    if k >= g.max_deg + 1:
        return ExactResult(g.n, PackingSet(k, tuple(range(g.n)), g.n), 0, "trivial_k_ge_delta_plus_1", True, "none")
    order = branch_order(g)
    incumbent = _extend_mask(g, 0, k, order)
    mod = kernels.select(g.n, backend)
    mask, nodes, complete = mod.packing_bnb(list(g.closed_masks), order, k, budget, incumbent)
    witness = PackingSet(k, from_mask(mask), g.n)
    return ExactResult(witness.size if complete else None, witness, nodes, "branch_and_bound", complete, mod.BACKEND)


def enumerate_oracle(g: Graph, k: int, backend: str | None = None) -> ExactResult:
    """Exhaustive maximum over all 2^n subsets (n <= 25)."""
    _check_k(k)
    if g.n > ENUMERATION_MAX_N:
        raise PackingError(f"enumeration limited to n <= {ENUMERATION_MAX_N}, got {g.n}")
    mod = kernels.select(g.n, backend)
    mask, checked = mod.packing_enumerate(list(g.closed_masks), k)
    witness = PackingSet(k, from_mask(mask), g.n)
    return ExactResult(witness.size, witness, checked, "enumeration", True, mod.BACKEND)


def is_distance3_packing(g: Graph, members: Iterable[int]) -> bool:
    """True iff every two members are at BFS distance >= 3 (unreachable counts)."""
    xs = sorted(set(members))
    for v in xs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    dist = g.distances
    for i, u in enumerate(xs):
        row = dist[u]
        for v in xs[i + 1:]:
            d = row[v]
            if d is not None and d < 3:
                return False
    return True
