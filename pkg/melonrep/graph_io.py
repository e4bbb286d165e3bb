"""
Edge-list text format and DOT emission.

Edge-list format: one edge per line ("u v"), '#' starts a comment,
"vertex u" declares a (possibly isolated) vertex.
"""

from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import FormatError
from .graph_core import Graph, canonical_edges, make_graph


def parse_edge_list(text: str) -> Graph:
    vertices: Dict[str, None] = {}
    edges: List[Tuple[str, str]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) == 2 and tokens[0] == "vertex":
            vertices.setdefault(tokens[1])
            continue
        if len(tokens) != 2:
            raise FormatError(f"line {number}: expected 'u v', got {raw!r}")
        u, v = tokens
        vertices.setdefault(u)
        vertices.setdefault(v)
        edges.append((u, v))
    return make_graph(vertices, edges)


def read_edge_list(path: Path) -> Graph:
    if not path.is_file():
        raise FileNotFoundError(f"edge list file {path} not found")
    with open(path, "r") as f:
        return parse_edge_list(f.read())


def format_edge_list(g: Graph) -> str:
    lines = [f"vertex {v}" for v in g.nodes if g.degree(v) == 0]
    lines += [f"{u} {v}" for u, v in canonical_edges(g)]
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path: Path) -> None:
    with open(path, "w") as f:
        f.write(format_edge_list(g))


def _quote(label: str) -> str:
    escaped = label.replace('"', '\\"')
    return f'"{escaped}"'


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {_quote(name)} {{"]
    lines += [f"  {_quote(v)};" for v in g.nodes]
    lines += [f"  {_quote(u)} -- {_quote(v)};" for u, v in canonical_edges(g)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_to_dot(
    arcs: Iterable[Tuple[str, str]],
    name: str = "G",
    layers: Optional[Sequence[Sequence[str]]] = None,
) -> str:
    """
    DOT for a directed graph drawn bottom to top.

    Parameters
    ----------
    arcs
        (tail, head) pairs.
    name
        Graph name.
    layers
        Optional vertex layers, lowest first; each layer is kept on
        one rank.
    """
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    for layer in layers or ():
        members = " ".join(f"{_quote(v)};" for v in layer)
        lines.append(f"  {{ rank=same; {members} }}")
    lines += [f"  {_quote(u)} -> {_quote(v)};" for u, v in arcs]
    lines.append("}")
    return "\n".join(lines) + "\n"
