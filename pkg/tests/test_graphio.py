"""Text format round trips and malformed-input rejection."""

import io

import pytest
from hypothesis import given, settings

from localcut import (
    InvalidParameterError,
    Labelling,
    Orientation,
    graph_to_text,
    identity_labelling,
    make_double_circulant,
    make_random_orientation,
    orient_clockwise,
    random_labelling,
    read_graph,
    write_graph,
)

from conftest import oriented_graphs, small_regular_graphs


@given(small_regular_graphs())
@settings(max_examples=30)
def test_undirected_roundtrip(g):
    back, lab = read_graph(io.StringIO(graph_to_text(g)))
    assert back == g
    assert lab is None


@given(oriented_graphs())
@settings(max_examples=30)
def test_directed_roundtrip(orient):
    back, lab = read_graph(io.StringIO(graph_to_text(orient)))
    assert isinstance(back, Orientation)
    assert back.graph == orient.graph
    assert set(back.arcs) == set(orient.arcs)
    assert lab is None


def test_ids_roundtrip():
    g = make_double_circulant(8, 3)
    lab = random_labelling(g.n, seed=3)
    back, lab2 = read_graph(io.StringIO(graph_to_text(g, lab)))
    assert back == g
    assert lab2 is not None
    assert lab2.ids == lab.ids


def test_file_roundtrip(tmp_path):
    g = make_double_circulant(12, 5)
    path = str(tmp_path / "g.txt")
    write_graph(path, orient_clockwise(g), identity_labelling(g.n))
    back, lab = read_graph(path)
    assert isinstance(back, Orientation)
    assert back.graph == g
    assert lab.ids == tuple(range(1, g.n + 1))


def test_header_is_frozen():
    g = make_double_circulant(12, 5)
    text = graph_to_text(g)
    assert text.splitlines()[0] == "24 60 5 U"
    assert len(text.splitlines()) == 1 + 60


def test_directed_header_and_arc_order():
    g = make_double_circulant(6, 3)
    orient = make_random_orientation(g, seed=1)
    lines = graph_to_text(orient).splitlines()
    assert lines[0] == "12 18 3 D"
    arcs = [tuple(map(int, ln.split())) for ln in lines[1:]]
    assert arcs == list(orient.arcs)


def test_output_is_deterministic():
    g = make_double_circulant(10, 3)
    assert graph_to_text(g) == graph_to_text(g)


def test_labelling_size_mismatch():
    g = make_double_circulant(6, 3)
    with pytest.raises(InvalidParameterError):
        graph_to_text(g, identity_labelling(5))


@pytest.mark.parametrize("text", [
    "",
    "4 4 2\n0 1\n1 2\n2 3\n3 0\n",           # three-field header
    "4 4 2 X\n0 1\n1 2\n2 3\n3 0\n",          # unknown flag
    "4 four 2 U\n0 1\n1 2\n2 3\n3 0\n",       # non-numeric m
    "4 4 2 U\n0 1\n1 2\n2 3\n",               # fewer edges than header claims
    "4 5 2 U\n0 1\n1 2\n2 3\n3 0\n0 2\n",     # header m disagrees with degree
    "4 4 2 U\n0 1\n1 2 9\n2 3\n3 0\n",        # malformed edge line
    "4 4 2 U\n0 1\n1 2\n2 3\n3 0\nEXTRA\n",   # junk trailing section
    "4 4 2 U\n0 1\n1 2\n2 3\n3 0\nIDS\n0 1\n1 2\n2 3\n",   # short IDS section
    "4 4 2 U\n0 1\n1 2\n2 3\n3 0\nIDS\n0 1\n0 2\n2 3\n3 4\n",  # repeated vertex
    "4 4 2 U\n0 1\n1 2\n2 3\n3 0\nIDS\n0 1\n1 2\n2 3\n9 4\n",  # vertex out of range
    "4 4 2 U\n0 1\n1 2\n2 3\n3 0\nIDS\n0 1\n1 1\n2 3\n3 4\n",  # duplicate ID value
])
def test_malformed_input_rejected(text):
    with pytest.raises(InvalidParameterError):
        read_graph(io.StringIO(text))


def test_directed_file_with_both_arc_directions_rejected():
    text = "4 4 2 D\n0 1\n1 0\n2 3\n3 0\n"
    with pytest.raises(InvalidParameterError):
        read_graph(io.StringIO(text))


def test_family_metadata_does_not_survive():
    g = make_double_circulant(6, 3)
    back, _ = read_graph(io.StringIO(graph_to_text(g)))
    assert back == g          # equality ignores family on purpose
    assert back.family is None
    assert g.family is not None
