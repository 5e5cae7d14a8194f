"""All graphs on at most 8 vertices, up to isomorphism.

Orders 0..7 come from the networkx graph atlas.  Order 8 is obtained by
attaching a new vertex, with every possible neighbour set, to each 7-vertex
atlas graph and discarding isomorphic duplicates.  Every 8-vertex graph
arises this way (delete any vertex).  The result is stored as graph6 in
``data/graphs_le8.g6`` so tests never rebuild it.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from functools import lru_cache
from importlib import resources

import networkx as nx

from .graph import Graph
from .io import parse_graph6_lines

# OEIS A000088 / A001349
GRAPH_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346)
CONNECTED_COUNTS = (1, 1, 1, 2, 6, 21, 112, 853, 11117)

DATA_FILE = "graphs_le8.g6"


def _invariant(g: nx.Graph) -> tuple:
    degs = tuple(sorted(d for _, d in g.degree()))
    tri = tuple(sorted(nx.triangles(g).values()))
    return degs, tri, nx.weisfeiler_lehman_graph_hash(g, iterations=3)


def _extend(base: list[nx.Graph]) -> list[nx.Graph]:
    buckets: dict[tuple, list[nx.Graph]] = defaultdict(list)
    out = []
    for g in base:
        n = g.number_of_nodes()
        for r in range(n + 1):
            for nbrs in itertools.combinations(range(n), r):
                h = nx.Graph(g)
                h.add_node(n)
                h.add_edges_from((n, u) for u in nbrs)
                reps = buckets[_invariant(h)]
                if any(nx.is_isomorphic(h, rep) for rep in reps):
                    continue
                reps.append(h)
                out.append(h)
    return out


def build_small_graphs(max_n: int = 8) -> list[nx.Graph]:
    """Enumerate one representative per isomorphism class, orders 0..max_n."""
    if not 0 <= max_n <= 8:
        raise ValueError("max_n must be in [0, 8]")
    atlas = [nx.convert_node_labels_to_integers(g) for g in nx.graph_atlas_g()]
    by_order: dict[int, list[nx.Graph]] = defaultdict(list)
    for g in atlas:
        by_order[g.number_of_nodes()].append(g)
    graphs = [g for order in range(min(max_n, 7) + 1) for g in by_order[order]]
    if max_n == 8:
        graphs.extend(_extend(by_order[7]))
    return graphs


def write_small_graphs(path, max_n: int = 8) -> int:
    lines = []
    for g in build_small_graphs(max_n):
        lines.append(nx.to_graph6_bytes(g, header=False).decode("ascii").strip())
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")
    return len(lines)


@lru_cache(maxsize=None)
def _stored() -> tuple[Graph, ...]:
    text = resources.files("limpack.data").joinpath(DATA_FILE).read_text("ascii")
    return tuple(parse_graph6_lines(text.splitlines()))


def small_graphs(max_n: int = 8, min_n: int = 1, connected: bool | None = None) -> list[Graph]:
    """Stored small graphs filtered by order and (optionally) connectivity."""
    out = []
    for g in _stored():
        if not min_n <= g.n <= max_n:
            continue
        if connected is not None and g.is_connected() != connected:
            continue
        out.append(g)
    return out
