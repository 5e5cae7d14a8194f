"""Readers and writers: plain edge lists, DIMACS ``p edge`` files, graph6 lines.

Edge-list format::

    # comment
    n 5          (optional, first non-comment line; declares isolated vertices)
    0 1
    1 2

DIMACS uses 1-based ids and is shifted to 0-based on read.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

import networkx as nx

from .graph import Graph, GraphError, build_graph

FORMATS = ("edgelist", "dimacs", "graph6")


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphError(f"line {lineno}: expected integer, got {tok!r}") from None


def parse_edgelist(text: str) -> Graph:
    declared = None
    edges = []
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if seen_data or declared is not None or len(parts) != 2:
                raise GraphError(f"line {lineno}: 'n <count>' must be the first data line")
            declared = _int(parts[1], lineno)
            seen_data = True
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        seen_data = True
        edges.append((_int(parts[0], lineno), _int(parts[1], lineno)))
    top = max((max(e) for e in edges), default=-1) + 1
    if declared is None:
        n = top
    elif declared < top:
        raise GraphError(f"declared n={declared} but edge ids reach {top - 1}")
    else:
        n = declared
    return build_graph(n, edges)


def format_edgelist(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None or len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphError(f"line {lineno}: bad problem line {raw!r}")
            n = _int(parts[2], lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before 'p edge' header")
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: expected 'e u v'")
            edges.append((_int(parts[1], lineno) - 1, _int(parts[2], lineno) - 1))
        else:
            raise GraphError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise GraphError("missing 'p edge n m' header")
    return build_graph(n, edges)


def format_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_networkx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return build_graph(h.number_of_nodes(), h.edges())


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def parse_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    out = []
    for line in lines:
        line = line.strip()
        if not line:
            continue
        try:
            h = nx.from_graph6_bytes(line.encode("ascii"))
        except (ValueError, nx.NetworkXError) as exc:
            raise GraphError(f"bad graph6 line {line!r}: {exc}") from None
        out.append(from_networkx(h))
    return out


def format_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def guess_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".dimacs", ".col", ".clq"):
        return "dimacs"
    if suffix == ".g6":
        return "graph6"
    return "edgelist"


def parse(text: str, fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "graph6":
        graphs = parse_graph6_lines(text.splitlines())
        if len(graphs) != 1:
            raise GraphError(f"expected one graph6 line, found {len(graphs)}")
        return graphs[0]
    raise GraphError(f"unknown format {fmt!r}")


def serialize(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return format_edgelist(g)
    if fmt == "dimacs":
        return format_dimacs(g)
    if fmt == "graph6":
        return format_graph6(g) + "\n"
    raise GraphError(f"unknown format {fmt!r}")


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    fmt = fmt or guess_format(path)
    return parse(Path(path).read_text(encoding="utf-8"), fmt)


def write_graph(g: Graph, path: str | Path, fmt: str = "edgelist") -> None:
    Path(path).write_text(serialize(g, fmt), encoding="utf-8")
