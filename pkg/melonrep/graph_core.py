"""
Graph values, melon and named-graph builders, and the structural
operations the classifiers rely on (line graph, local complementation,
induced-subgraph and isomorphism matching, bipartition, the directed
vertex-minor reduction).

Graphs are frozen `networkx.Graph` instances over string labels.
Node insertion order is the canonical vertex order.
"""

from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms import isomorphism

from .constants import (
    END_VERTEX,
    END_VERTEX_PRIME,
    INDUCED_MAX_VERTICES,
    ISOMORPHISM_MAX_VERTICES,
)
from .errors import (
    EmptyEdgeSetError,
    NotInFamilyError,
    SizeGuardError,
    SpecInvalidError,
    UnknownVertexError,
)

Graph = nx.Graph
# (operation name, pivot vertex); operation is "local_complement" or "delete".
Step = Tuple[str, str]
Bipartition = Tuple[Tuple[str, ...], Tuple[str, ...]]


def make_graph(vertices: Iterable[str], edges: Iterable[Tuple[str, str]]) -> Graph:
    """
    Build a frozen graph.

    Parameters
    ----------
    vertices
        Vertex labels, in canonical order.
    edges
        Unordered vertex pairs.

    Returns
    -------
    Graph
        Frozen simple graph.
    """
    g = nx.Graph()
    g.add_nodes_from(vertices)
    for u, v in edges:
        if u == v:
            raise SpecInvalidError(f"self-loop on vertex {u}")
        for w in (u, v):
            if w not in g:
                raise UnknownVertexError(f"edge endpoint {w} is not a vertex")
        g.add_edge(u, v)
    return nx.freeze(g)


def vertex_index(g: Graph) -> Dict[str, int]:
    return {v: i for i, v in enumerate(g.nodes)}


def canonical_edges(g: Graph) -> List[Tuple[str, str]]:
    """
    Edges as (u, v) pairs with u before v in vertex order,
    sorted by vertex order.
    """
    index = vertex_index(g)
    pairs = [(u, v) if index[u] < index[v] else (v, u) for u, v in g.edges]
    return sorted(pairs, key=lambda e: (index[e[0]], index[e[1]]))


def same_graph(g: Graph, h: Graph) -> bool:
    """
    Equal vertex sets and equal edge sets (labels compared, order ignored).
    """
    if set(g.nodes) != set(h.nodes):
        return False
    return {frozenset(e) for e in g.edges} == {frozenset(e) for e in h.edges}


def induced_subgraph(g: Graph, vertices: Iterable[str]) -> Graph:
    keep = set(vertices)
    for v in keep:
        if v not in g:
            raise UnknownVertexError(f"unknown vertex {v}")
    order = [v for v in g.nodes if v in keep]
    return make_graph(order, [(u, v) for u, v in g.edges if u in keep and v in keep])


def complement(g: Graph) -> Graph:
    order = list(g.nodes)
    edges = [
        (u, v)
        for i, u in enumerate(order)
        for v in order[i + 1 :]
        if not g.has_edge(u, v)
    ]
    return make_graph(order, edges)


def is_complete(g: Graph) -> bool:
    n = g.number_of_nodes()
    return g.number_of_edges() == n * (n - 1) // 2


class MelonSpec:
    """
    Multiset of constituent-path lengths (in edges) of a melon graph.

    The order of `lengths` is the caller's order; path i (1-based) of
    the built graph is `lengths[i - 1]`.
    """

    def __init__(self, lengths: Sequence[int]) -> None:
        self.lengths: Tuple[int, ...] = tuple(lengths)
        if not self.lengths:
            raise SpecInvalidError("a melon needs at least one constituent path")
        for length in self.lengths:
            if not isinstance(length, int) or length < 1:
                raise SpecInvalidError(f"invalid path length {length!r}")
        if self.lengths.count(1) > 1:
            raise SpecInvalidError("at most one constituent path may have length 1")

    @classmethod
    def parse(cls, text: str) -> "MelonSpec":
        """
        Parse a comma-separated list of lengths, e.g. "1,3,3,4".
        A trailing comma is tolerated ("1," is the single edge).
        """
        tokens = [t.strip() for t in text.strip().split(",")]
        if tokens and tokens[-1] == "":
            tokens = tokens[:-1]
        try:
            lengths = [int(t) for t in tokens]
        except ValueError:
            raise SpecInvalidError(f"cannot parse melon spec {text!r}")
        return cls(lengths)

    @property
    def parts(self) -> int:
        return len(self.lengths)

    @property
    def has_edge(self) -> bool:
        return 1 in self.lengths

    @property
    def vertex_count(self) -> int:
        return 2 + sum(length - 1 for length in self.lengths)

    @property
    def edge_count(self) -> int:
        return sum(self.lengths)

    def count_at_least(self, bound: int) -> int:
        return sum(1 for length in self.lengths if length >= bound)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MelonSpec):
            return NotImplemented
        return self.lengths == other.lengths

    def __hash__(self) -> int:
        return hash(self.lengths)

    def __str__(self) -> str:
        return ",".join(str(length) for length in self.lengths)

    def __repr__(self) -> str:
        return f"MelonSpec({self.lengths})"


def intermediate(path: int, position: int) -> str:
    """
    Label of the intermediate vertex `position` (counted from 0p)
    of constituent path `path` (1-based).
    """
    return f"p{path}_{position}"


def path_vertices(spec: MelonSpec, path: int) -> List[str]:
    """
    Intermediate vertices of a constituent path, ordered from 0p to 0.
    """
    length = spec.lengths[path - 1]
    return [intermediate(path, j) for j in range(1, length)]


def build_melon(spec: MelonSpec) -> Graph:
    vertices = [END_VERTEX, END_VERTEX_PRIME]
    edges: List[Tuple[str, str]] = []
    for i in range(1, spec.parts + 1):
        inner = path_vertices(spec, i)
        vertices.extend(inner)
        chain = [END_VERTEX_PRIME] + inner + [END_VERTEX]
        edges.extend(zip(chain, chain[1:]))
    return make_graph(vertices, edges)


# Named graphs.


def _labels(prefix: str, n: int) -> List[str]:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise SpecInvalidError(message)


def path_graph(n: int) -> Graph:
    _require(n >= 1, "Path needs n >= 1")
    vs = _labels("c", n)
    return make_graph(vs, zip(vs, vs[1:]))


def cycle_graph(n: int) -> Graph:
    _require(n >= 3, "Cycle needs n >= 3")
    vs = _labels("c", n)
    return make_graph(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def complete_graph(n: int) -> Graph:
    _require(n >= 1, "Complete needs n >= 1")
    vs = _labels("c", n)
    return make_graph(vs, [(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :]])


def complete_bipartite(a: int, b: int) -> Graph:
    _require(a >= 1 and b >= 1, "CompleteBipartite needs a, b >= 1")
    left, right = _labels("a", a), _labels("b", b)
    return make_graph(left + right, [(u, v) for u in left for v in right])


def book(pages: int) -> Graph:
    _require(pages >= 1, "Book needs m >= 1")
    return build_melon(MelonSpec((1,) + (3,) * pages))


def triangular_book(pages: int) -> Graph:
    _require(pages >= 1, "TriangularBook needs m >= 1")
    return build_melon(MelonSpec((1,) + (2,) * pages))


def km_box_k2(m: int) -> Graph:
    """
    K_m □ K_2 on {e1..em} and {e1p..emp}, with ei adjacent to eip.
    """
    _require(m >= 1, "KmBoxK2 needs m >= 1")
    left = [f"e{i}" for i in range(1, m + 1)]
    right = [f"e{i}p" for i in range(1, m + 1)]
    edges = [(u, v) for i, u in enumerate(left) for v in left[i + 1 :]]
    edges += [(u, v) for i, u in enumerate(right) for v in right[i + 1 :]]
    edges += list(zip(left, right))
    # Interleave so that ei is followed by eip in vertex order.
    order = [v for pair in zip(left, right) for v in pair]
    return make_graph(order, edges)


def prism3() -> Graph:
    return km_box_k2(3)


def t2() -> Graph:
    vs = _labels("", 7)
    return make_graph(
        vs, [("1", "2"), ("2", "3"), ("3", "4"), ("3", "5"), ("4", "6"), ("5", "7")]
    )


def s1() -> Graph:
    vs = _labels("", 6)
    return make_graph(
        vs, [("1", "2"), ("1", "3"), ("2", "3"), ("2", "4"), ("3", "5"), ("1", "6")]
    )


def s2() -> Graph:
    g = s1()
    return make_graph(list(g.nodes), list(g.edges) + [("4", "5")])


def h_graph(m: int) -> Graph:
    """
    Two cliques {a_i} and {b_i}, a vertex x adjacent to all, and the
    edges a1b1, a2b2.
    """
    _require(m >= 2, "H needs m >= 2")
    a, b = _labels("a", m), _labels("b", m)
    edges = [(u, v) for i, u in enumerate(a) for v in a[i + 1 :]]
    edges += [(u, v) for i, u in enumerate(b) for v in b[i + 1 :]]
    edges += [("x", y) for y in a + b]
    edges += [("a1", "b1"), ("a2", "b2")]
    return make_graph(a + b + ["x"], edges)


_NAMED_BUILDERS = {
    "Path": path_graph,
    "Cycle": cycle_graph,
    "Complete": complete_graph,
    "CompleteBipartite": complete_bipartite,
    "Book": book,
    "TriangularBook": triangular_book,
    "Prism3": prism3,
    "KmBoxK2": km_box_k2,
    "T2": t2,
    "S1": s1,
    "S2": s2,
    "H": h_graph,
}

NAMED_GRAPHS: Tuple[str, ...] = tuple(_NAMED_BUILDERS)


def build_named(name: str, *params: int) -> Graph:
    """
    Build a named graph, e.g. `build_named("Cycle", 6)`.

    Parameters
    ----------
    name
        One of NAMED_GRAPHS.
    params
        Size parameters of the family.

    Returns
    -------
    Graph
        The named graph.
    """
    try:
        builder = _NAMED_BUILDERS[name]
    except KeyError:
        raise SpecInvalidError(f"unknown named graph {name!r}")
    try:
        return builder(*params)
    except TypeError:
        raise SpecInvalidError(f"wrong number of parameters for {name}: {params}")


# Structural operations.


def line_graph(g: Graph, labels: Optional[Mapping[frozenset, str]] = None) -> Graph:
    """
    Line graph of g.

    Parameters
    ----------
    g
        Graph with at least one edge.
    labels
        Optional label for each edge (keyed by frozenset of endpoints).
        Default label is "u-v" with u before v in vertex order.

    Returns
    -------
    Graph
        Vertices are g's edges in canonical edge order (or in the
        iteration order of `labels`, when given).
    """
    if g.number_of_edges() == 0:
        raise EmptyEdgeSetError("line graph of a graph without edges")
    edges = canonical_edges(g)
    if labels is None:
        labels = {frozenset(e): f"{e[0]}-{e[1]}" for e in edges}
        order = [labels[frozenset(e)] for e in edges]
    else:
        order = [labels[key] for key in labels]
    lg = nx.line_graph(g)
    lg_edges = [(labels[frozenset(u)], labels[frozenset(v)]) for u, v in lg.edges]
    return make_graph(order, lg_edges)


def local_complement(g: Graph, v: str) -> Graph:
    if v not in g:
        raise UnknownVertexError(f"unknown vertex {v}")
    neighbours = [u for u in g.nodes if g.has_edge(u, v)]
    h = nx.Graph(g)
    for i, a in enumerate(neighbours):
        for b in neighbours[i + 1 :]:
            if h.has_edge(a, b):
                h.remove_edge(a, b)
            else:
                h.add_edge(a, b)
    return nx.freeze(h)


def delete_vertex(g: Graph, v: str) -> Graph:
    if v not in g:
        raise UnknownVertexError(f"unknown vertex {v}")
    h = nx.Graph(g)
    h.remove_node(v)
    return nx.freeze(h)


def replay(g: Graph, steps: Iterable[Step]) -> Graph:
    """
    Apply a sequence of local-complement/delete steps.
    """
    for operation, v in steps:
        if operation == "local_complement":
            g = local_complement(g, v)
        elif operation == "delete":
            g = delete_vertex(g, v)
        else:
            raise ValueError(f"unknown step {operation!r}")
    return g


def _matcher(g: Graph, h: Graph) -> isomorphism.GraphMatcher:
    return isomorphism.GraphMatcher(nx.Graph(g), nx.Graph(h))


def contains_induced(
    g: Graph, h: Graph, max_vertices: int = INDUCED_MAX_VERTICES
) -> Optional[Dict[str, str]]:
    """
    Find h as an induced subgraph of g.

    Returns
    -------
    Optional[Dict[str, str]]
        Injective map from h's vertices to g's vertices preserving
        adjacency and non-adjacency, or None if there is none.
    """
    if g.number_of_nodes() > max_vertices:
        raise SizeGuardError(
            f"induced-subgraph search on {g.number_of_nodes()} vertices "
            f"(bound {max_vertices})"
        )
    if h.number_of_nodes() > g.number_of_nodes():
        return None
    # GraphMatcher matches node-induced subgraphs, mapping g -> h.
    for mapping in _matcher(g, h).subgraph_isomorphisms_iter():
        return {hv: gv for gv, hv in mapping.items()}
    return None


def is_isomorphic(
    g: Graph, h: Graph, max_vertices: int = ISOMORPHISM_MAX_VERTICES
) -> Optional[Dict[str, str]]:
    """
    Bijection from g's vertices to h's vertices preserving adjacency,
    or None.
    """
    for graph in (g, h):
        if graph.number_of_nodes() > max_vertices:
            raise SizeGuardError(
                f"isomorphism test on {graph.number_of_nodes()} vertices "
                f"(bound {max_vertices})"
            )
    if g.number_of_nodes() != h.number_of_nodes():
        return None
    if g.number_of_edges() != h.number_of_edges():
        return None
    matcher = _matcher(g, h)
    if matcher.is_isomorphic():
        return dict(matcher.mapping)
    return None


def is_bipartite(g: Graph) -> Optional[Bipartition]:
    """
    Two vertex classes with no edge inside a class, or None if g has
    an odd cycle. The first class holds the first vertex of every
    connected component.
    """
    if not nx.is_bipartite(g):
        return None
    colour: Dict[str, int] = {}
    for component in nx.connected_components(g):
        first = next(v for v in g.nodes if v in component)
        sub = g.subgraph(component)
        colouring = nx.bipartite.color(sub)
        flip = colouring[first]
        for v, c in colouring.items():
            colour[v] = c ^ flip
    left = tuple(v for v in g.nodes if colour[v] == 0)
    right = tuple(v for v in g.nodes if colour[v] == 1)
    return left, right


def _core_family(spec: MelonSpec) -> str:
    lengths = spec.lengths
    if len(lengths) == 3 and all(length >= 3 for length in lengths):
        return "M3"
    if (
        len(lengths) == 4
        and lengths.count(1) == 1
        and sum(1 for length in lengths if length >= 3) == 3
    ):
        return "M4"
    raise NotInFamilyError(
        f"{spec} has neither three paths of length >= 3 "
        "nor an edge plus three paths of length >= 3"
    )


def shorten_path_steps(spec: MelonSpec, path: int, target: int) -> List[Step]:
    """
    Steps shortening constituent path `path` to `target` edges, one
    edge per local complementation at the intermediate vertex next
    to 0 followed by its deletion.
    """
    steps: List[Step] = []
    length = spec.lengths[path - 1]
    while length > target:
        pivot = intermediate(path, length - 1)
        steps.append(("local_complement", pivot))
        steps.append(("delete", pivot))
        length -= 1
    return steps


def reduce_to_core(spec: MelonSpec) -> Tuple[Tuple[Step, ...], Graph]:
    """
    Shorten every long constituent path of a melon in the M3 family
    (three paths of length >= 3) or the M4 family (an edge plus three
    such paths) until the graph is isomorphic to M_3 or B_3.

    Returns
    -------
    Tuple[Step, ...]
        Local-complement/delete steps, to be replayed in order on
        build_melon(spec).
    Graph
        Resulting graph.
    """
    _core_family(spec)
    steps: List[Step] = []
    for i, length in enumerate(spec.lengths, start=1):
        if length > 3:
            steps.extend(shorten_path_steps(spec, i, 3))
    return tuple(steps), replay(build_melon(spec), steps)


def core_target(spec: MelonSpec) -> Graph:
    """
    M_3 or B_3, whichever family spec belongs to.
    """
    if _core_family(spec) == "M3":
        return build_melon(MelonSpec((3, 3, 3)))
    return build_melon(MelonSpec((1, 3, 3, 3)))
