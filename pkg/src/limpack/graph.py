"""Immutable simple undirected graphs on dense vertex ids ``0..n-1``."""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (self-loops, bad ids, bad files)."""


class Graph:
    """Simple undirected graph with sorted adjacency lists.

    Instances are canonical: two graphs compare equal iff they have the same
    order and the same edge set.  Nothing is mutable after construction, so a
    graph can be shared freely between threads and pickled to worker
    processes.
    """

    __slots__ = ("n", "adj", "m", "deg", "max_deg", "min_deg", "__dict__")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        if len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows for n={n}")
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in adj)
        for v, row in enumerate(self.adj):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise GraphError(f"adjacency of {v} not strictly ascending")
            for u in row:
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if not 0 <= u < n:
                    raise GraphError(f"neighbour {u} of {v} out of range")
        for v, row in enumerate(self.adj):
            for u in row:
                if v not in self.adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self.deg: tuple[int, ...] = tuple(len(row) for row in self.adj)
        self.m = sum(self.deg) // 2
        self.max_deg = max(self.deg, default=0)
        self.min_deg = min(self.deg, default=0)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, max_deg={self.max_deg}, min_deg={self.min_deg})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    # -- bitset views ------------------------------------------------------

    @cached_property
    def open_masks(self) -> tuple[int, ...]:
        out = []
        for row in self.adj:
            mask = 0
            for u in row:
                mask |= 1 << u
            out.append(mask)
        return tuple(out)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """``closed_masks[v]`` is N[v] as an int bitset."""
        return tuple(mask | (1 << v) for v, mask in enumerate(self.open_masks))

    @cached_property
    def distances(self) -> tuple[tuple[int | None, ...], ...]:
        """All-pairs hop distances by BFS; ``None`` marks unreachable pairs."""
        return tuple(tuple(self._bfs(s)) for s in range(self.n))

    def _bfs(self, source: int) -> list[int | None]:
        dist: list[int | None] = [None] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for w in self.adj[u]:
                if dist[w] is None:
                    dist[w] = du
                    queue.append(w)
        return dist

    # -- queries -----------------------------------------------------------

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(self.adj[v]) | {v}

    def bfs_distance(self, u: int, v: int) -> int | None:
        """Shortest-path hop count, or ``None`` when ``v`` is unreachable from ``u``."""
        self._check(u)
        self._check(v)
        if "distances" in self.__dict__:
            return self.distances[u][v]
        return self._bfs(u)[v]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return all(d is not None for d in self._bfs(0))

    def is_regular(self) -> bool:
        return self.max_deg == self.min_deg

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [v for v, d in enumerate(self._bfs(s)) if d is not None]
            for v in comp:
                seen[v] = True
            comps.append(comp)
        return comps

    def diameter(self) -> float:
        """Largest finite-or-infinite eccentricity; ``inf`` if disconnected, 0 for n <= 1."""
        best = 0
        for row in self.distances:
            for d in row:
                if d is None:
                    return float("inf")
                best = max(best, d)
        return best


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Canonical graph from an edge list; duplicate pairs collapse to one edge.

    >>> build_graph(3, [(0, 1), (1, 2), (2, 1)]).m
    2
    """
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, [sorted(s) for s in nbrs])


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    return g.closed_neighborhood(v)


def bfs_distance(g: Graph, u: int, v: int) -> int | None:
    return g.bfs_distance(u, v)


def is_connected(g: Graph) -> bool:
    return g.is_connected()


def is_regular(g: Graph) -> bool:
    return g.is_regular()
