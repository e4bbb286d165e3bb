"""
Transitive orientations by implication-class decomposition, and the
neighborhood test used to refute word-representability.
"""

import logging
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from .constants import ORIENTATION_MAX_EDGES
from .errors import ConstructionError, SizeGuardError, UnknownVertexError
from .graph_core import Graph, canonical_edges, induced_subgraph

Arc = Tuple[str, str]
_Arcs = Dict[FrozenSet[str], Arc]


class Orientation:
    """
    A direction for every edge of `base`.

    Attributes
    ----------
    base
        The undirected graph.
    arcs
        One (tail, head) pair per edge, in canonical edge order.
    """

    def __init__(self, base: Graph, arcs: Tuple[Arc, ...]) -> None:
        self.base = base
        self.arcs = arcs
        self._lookup = {frozenset(a): a for a in arcs}
        if len(self._lookup) != base.number_of_edges():
            raise ValueError("an orientation directs every edge exactly once")
        for u, v in arcs:
            if not base.has_edge(u, v):
                raise ValueError(f"{u}->{v} is not an edge of the base graph")

    def points(self, u: str, v: str) -> bool:
        """
        True iff the edge {u, v} is directed u -> v.
        """
        try:
            return self._lookup[frozenset((u, v))] == (u, v)
        except KeyError:
            raise UnknownVertexError(f"{u}-{v} is not an edge")

    def digraph(self) -> nx.DiGraph:
        d = nx.DiGraph()
        d.add_nodes_from(self.base.nodes)
        d.add_edges_from(self.arcs)
        return d

    def reversed(self) -> "Orientation":
        return Orientation(self.base, tuple((v, u) for u, v in self.arcs))

    def is_transitive(self) -> bool:
        return _transitive(self.base, self._lookup)

    def __repr__(self) -> str:
        return f"Orientation({', '.join(f'{u}->{v}' for u, v in self.arcs)})"


def _transitive(g: Graph, arcs: _Arcs) -> bool:
    successors: Dict[str, List[str]] = {v: [] for v in g.nodes}
    for a, b in arcs.values():
        successors[a].append(b)
    for a, b in arcs.values():
        for c in successors[b]:
            if arcs.get(frozenset((a, c))) != (a, c):
                return False
    return True


def _implication_class(remaining: nx.Graph, first: Arc) -> Optional[_Arcs]:
    """
    The implication class of `first` in `remaining`: every arc forced by
    a -> b through a shared endpoint whose other ends are not adjacent.
    Returns None when the class contains an edge in both directions.
    """
    found: _Arcs = {frozenset(first): first}
    stack = [first]
    while stack:
        a, b = stack.pop()
        # a -> b, w ~ a, w !~ b: a -> w.
        forced = [(a, w) for w in remaining.neighbors(a) if w != b]
        forced = [arc for arc in forced if not remaining.has_edge(arc[1], b)]
        # a -> b, w ~ b, w !~ a: w -> b.
        forced += [
            (w, b)
            for w in remaining.neighbors(b)
            if w != a and not remaining.has_edge(w, a)
        ]
        for arc in forced:
            key = frozenset(arc)
            current = found.get(key)
            if current is None:
                found[key] = arc
                stack.append(arc)
            elif current != arc:
                return None
    return found


def find_transitive_orientation(
    g: Graph, max_edges: Optional[int] = ORIENTATION_MAX_EDGES
) -> Optional[Orientation]:
    """
    Search for a transitive orientation of g.

    Edges are split into implication classes one at a time: the class of
    the first remaining edge is forced from that edge, directed, and
    removed from the graph before the next class is computed. A class
    forcing an edge both ways refutes g; otherwise the union of the
    directed classes is transitive. No class is ever branched on.

    Parameters
    ----------
    g
        The graph.
    max_edges
        Refuse graphs with more edges than this (None: no bound).

    Returns
    -------
    Optional[Orientation]
        A transitive orientation, or None if g is not a comparability
        graph.
    """
    edges = canonical_edges(g)
    if max_edges is not None and len(edges) > max_edges:
        raise SizeGuardError(
            f"orientation search on {len(edges)} edges (bound {max_edges})"
        )
    remaining = nx.Graph(g)
    arcs: _Arcs = {}
    for edge in edges:
        if not remaining.has_edge(*edge):
            continue
        found = _implication_class(remaining, edge)
        if found is None:
            logging.debug("no transitive orientation for %d edges", len(edges))
            return None
        arcs.update(found)
        remaining.remove_edges_from(found.values())
    if not _transitive(g, arcs):
        raise ConstructionError("implication classes gave a non-transitive orientation")
    return Orientation(g, tuple(arcs[frozenset(e)] for e in edges))


def neighborhood_comparability_check(
    g: Graph, max_edges: Optional[int] = ORIENTATION_MAX_EDGES
) -> Optional[str]:
    """
    First vertex (in vertex order) whose neighborhood does not induce
    a comparability graph, or None.

    In a word-representable graph every neighborhood is a comparability
    graph, so a returned vertex refutes word-representability.
    """
    for v in g.nodes:
        neighbourhood = induced_subgraph(g, g.neighbors(v))
        if find_transitive_orientation(neighbourhood, max_edges) is None:
            return v
    return None
