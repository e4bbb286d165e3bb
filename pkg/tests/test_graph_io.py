"""
Tests for module: graph_io.
"""

from pathlib import Path

import pytest

from melonrep.errors import FormatError
from melonrep.graph_core import (
    MelonSpec,
    build_melon,
    make_graph,
    path_graph,
    same_graph,
)
from melonrep.graph_io import (
    digraph_to_dot,
    format_edge_list,
    graph_to_dot,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)


def test_parse_edge_list():
    """
    Test for function: graph_io.parse_edge_list.
    """
    text = "# a triangle\na b\nb c  # second\n\nc a\nvertex z\n"
    g = parse_edge_list(text)
    # Check: Vertices in first-seen order, isolated vertex kept.
    assert list(g.nodes) == ["a", "b", "c", "z"]
    assert g.number_of_edges() == 3
    assert g.degree("z") == 0


@pytest.mark.parametrize("text", ["a b c\n", "a\n", "a a\n"])
def test_parse_edge_list_invalid(text: str):
    """
    Test for function: graph_io.parse_edge_list.
    """
    # Check: Malformed lines and self-loops are refused.
    with pytest.raises(ValueError):
        parse_edge_list(text)


def test_parse_edge_list_line_number():
    """
    Test for function: graph_io.parse_edge_list.
    """
    # Check: The error names the offending line.
    with pytest.raises(FormatError, match="line 2"):
        parse_edge_list("a b\nb\n")


def test_format_edge_list():
    """
    Test for function: graph_io.format_edge_list.
    """
    g = make_graph(["x", "a", "b"], [("b", "a")])
    # Check: Isolated vertices first, edges in vertex order.
    assert format_edge_list(g) == "vertex x\na b\n"


def test_edge_list_file(tmp_dir: Path, melon_spec: MelonSpec):
    """
    Test for functions: graph_io.write_edge_list, graph_io.read_edge_list.
    """
    g = build_melon(melon_spec)
    path = tmp_dir / "melon.txt"
    write_edge_list(g, path)
    # Check: Same graph read back.
    assert same_graph(read_edge_list(path), g)
    # Check: Missing file.
    with pytest.raises(FileNotFoundError):
        read_edge_list(tmp_dir / "missing.txt")


def test_graph_to_dot():
    """
    Test for function: graph_io.graph_to_dot.
    """
    dot = graph_to_dot(path_graph(2), name='P"2')
    # Check: Quoted labels, one statement per line.
    assert dot == (
        'graph "P\\"2" {\n'
        '  "c1";\n'
        '  "c2";\n'
        '  "c1" -- "c2";\n'
        "}\n"
    )


def test_digraph_to_dot():
    """
    Test for function: graph_io.digraph_to_dot.
    """
    dot = digraph_to_dot([("a", "b")], name="H", layers=[["a"], ["b"]])
    lines = dot.splitlines()
    # Check: Bottom-to-top layout with one rank per layer.
    assert lines[0] == 'digraph "H" {'
    assert lines[1] == "  rankdir=BT;"
    assert lines[2] == '  { rank=same; "a"; }'
    assert lines[3] == '  { rank=same; "b"; }'
    assert lines[4] == '  "a" -> "b";'
    assert lines[-1] == "}"
