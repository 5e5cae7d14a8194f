import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from limpack import io as gio
from limpack.graph import GraphError, build_graph


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, edges)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_round_trip_all_formats(g):
    for fmt in gio.FORMATS:
        assert gio.parse(gio.serialize(g, fmt), fmt) == g


def test_edgelist_comments_and_isolated():
    text = "# header\n\nn 5\n0 1  # inline\n1 2\n\n# done\n"
    g = gio.parse_edgelist(text)
    assert g.n == 5 and g.edges() == [(0, 1), (1, 2)]


def test_edgelist_infers_n():
    assert gio.parse_edgelist("0 3\n").n == 4


@pytest.mark.parametrize("text", ["n 2\n0 5\n", "0 1\nn 4\n", "0 1 2\n", "a b\n", "2 2\n"])
def test_edgelist_errors(text):
    with pytest.raises(GraphError):
        gio.parse_edgelist(text)


def test_dimacs_one_based():
    text = "c petersen fragment\np edge 3 2\ne 1 2\ne 2 3\n"
    g = gio.parse_dimacs(text)
    assert g.n == 3 and g.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("text", ["e 1 2\n", "p edge 2 1\ne 1 3\n", "p edge 2\n", "p edge 2 1\nx 1 2\n", "c only\n"])
def test_dimacs_errors(text):
    with pytest.raises(GraphError):
        gio.parse_dimacs(text)


def test_read_write_files(tmp_path, petersen):
    for fmt, name in (("edgelist", "g.txt"), ("dimacs", "g.dimacs"), ("graph6", "g.g6")):
        path = tmp_path / name
        gio.write_graph(petersen, path, fmt)
        assert gio.read_graph(path) == petersen
