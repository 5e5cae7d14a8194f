"""Named, random and composite graph families."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import Graph, GraphError, build_graph
from .seeds import rng

FAMILIES = ("path", "cycle", "complete", "star", "petersen", "gnp", "random_regular", "disjoint_copies")

REGULAR_RETRY_CAP = 10_000

_PETERSEN_EDGES = (
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
)


class RetryLimitError(RuntimeError):
    """The pairing model never produced a simple graph within the retry cap."""


def gen_named(family: str, n: int = 0) -> Graph:
    if family == "petersen":
        return build_graph(10, _PETERSEN_EDGES)
    if n < 0:
        raise GraphError("n must be non-negative")
    if family == "path":
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        if n < 3:
            raise GraphError("cycle needs n >= 3")
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "complete":
        return build_graph(n, itertools.combinations(range(n), 2))
    if family == "star":
        # star with n leaves: K_{1,n}, centre 0
        return build_graph(n + 1, [(0, i) for i in range(1, n + 1)])
    raise GraphError(f"unknown named family {family!r}")


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); pairs ``u < v`` are drawn in lexicographic order."""
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"p={p} outside [0, 1]")
    if n < 0:
        raise GraphError("n must be non-negative")
    pairs = list(itertools.combinations(range(n), 2))
    coins = rng(seed).random(len(pairs))
    return build_graph(n, [e for e, c in zip(pairs, coins) if c < p])


def gen_random_regular(n: int, d: int, seed: int, max_tries: int = REGULAR_RETRY_CAP) -> Graph:
    """Random d-regular graph from the pairing (configuration) model.

    Each attempt shuffles the ``n*d`` half-edges and pairs them consecutively;
    attempts with a loop or a repeated pair are rejected whole.
    """
    if n < 0 or d < 0:
        raise GraphError("n and degree must be non-negative")
    if (n * d) % 2 or (n > 0 and d >= n) or (n == 0 and d > 0):
        raise GraphError(f"no {d}-regular graph on {n} vertices")
    points = [v for v in range(n) for _ in range(d)]
    gen = rng(seed)
    for _ in range(max_tries):
        perm = gen.permutation(len(points))
        edges = set()
        for i in range(0, len(perm), 2):
            u, v = points[perm[i]], points[perm[i + 1]]
            if u == v:
                break
            e = (min(u, v), max(u, v))
            if e in edges:
                break
            edges.add(e)
        else:
            return build_graph(n, edges)
    raise RetryLimitError(f"pairing model failed {max_tries} times for n={n}, d={d}")


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return build_graph(offset, edges)


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int = 0
    p: float = 0.0
    degree: int = 0
    copies: int = 1
    base: str = "petersen"
    seed: int = 0

    def build(self) -> Graph:
        if self.family in ("path", "cycle", "complete", "star", "petersen"):
            return gen_named(self.family, self.n)
        if self.family == "gnp":
            return gen_gnp(self.n, self.p, self.seed)
        if self.family == "random_regular":
            return gen_random_regular(self.n, self.degree, self.seed)
        if self.family == "disjoint_copies":
            if self.copies < 1:
                raise GraphError("copies must be >= 1")
            one = GenSpec(self.base, n=self.n, p=self.p, degree=self.degree, seed=self.seed).build()
            return disjoint_union(*([one] * self.copies))
        raise GraphError(f"unknown family {self.family!r}")
