"""
Exhaustive searches for small graphs: the least k admitting a k-uniform
representant, and the least number of permutations whose concatenation
represents a comparability graph.

Both searches are deterministic (fixed branch order) and count search
nodes against `SearchBudget.node_limit`. Running out of nodes raises
NodeLimitExceededError; a None result is always a completed search.
"""

from bisect import bisect_left
import itertools
import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms import isomorphism

from .comparability import two_dimensional_realizer
from .config import SearchBudget
from .errors import (
    ConstructionError,
    NodeLimitExceededError,
    PreconditionError,
    SizeGuardError,
)
from .graph_core import Graph, complement, is_complete
from .orientation import find_transitive_orientation
from .words import PermSequence, Word, is_k_uniform, represents


class _NodeCounter:
    def __init__(self, limit: int) -> None:
        self.limit = limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise NodeLimitExceededError(
                f"search node limit of {self.limit} exceeded"
            )


def _guard(g: Graph, budget: SearchBudget) -> None:
    budget.validate()
    if g.number_of_nodes() > budget.max_vertices:
        raise SizeGuardError(
            f"oracle search on {g.number_of_nodes()} vertices "
            f"(bound {budget.max_vertices})"
        )
    if g.number_of_nodes() == 0:
        raise PreconditionError("oracle search on a graph without vertices")


def _coloured(g: Graph, fixed: Sequence[str], target: str) -> nx.Graph:
    h = nx.Graph(g)
    colours = {v: i for i, v in enumerate(fixed)}
    for v in h.nodes:
        h.nodes[v]["colour"] = colours.get(v, -1)
    h.nodes[target]["colour"] = -2
    return h


def _automorphism_maps(g: Graph, fixed: Sequence[str], v: str, u: str) -> bool:
    """
    True iff an automorphism of g fixing `fixed` pointwise maps v to u.
    """
    if g.degree(v) != g.degree(u):
        return False
    matcher = isomorphism.GraphMatcher(
        _coloured(g, fixed, v),
        _coloured(g, fixed, u),
        node_match=isomorphism.categorical_node_match("colour", -1),
    )
    return matcher.is_isomorphic()


def stabilizer_orbits(g: Graph, order: Sequence[str]) -> List[Tuple[str, ...]]:
    """
    For each vertex order[i], its orbit under the automorphisms of g
    fixing order[0..i-1] pointwise, starting with order[i] itself.
    """
    orbits = []
    for i, v in enumerate(order):
        fixed = order[:i]
        others = [u for u in order[i + 1 :] if _automorphism_maps(g, fixed, v, u)]
        orbits.append((v,) + tuple(others))
    return orbits


def _insertion_order(g: Graph, seed: Sequence[str]) -> List[str]:
    """
    Maximum cardinality order: next is the vertex with most neighbours
    already placed, ties broken by first occurrence in seed, then by
    vertex order.
    """
    index = {v: i for i, v in enumerate(g.nodes)}
    seen = [v for v in dict.fromkeys(seed) if v in index]
    rank = {v: i for i, v in enumerate(seen)}
    for v in g.nodes:
        rank.setdefault(v, len(seen) + index[v])
    order: List[str] = []
    weight = {v: 0 for v in g.nodes}
    while weight:
        v = min(weight, key=lambda x: (-weight[x], rank[x]))
        order.append(v)
        del weight[v]
        for u in g.neighbors(v):
            if u in weight:
                weight[u] += 1
    return order


class _InsertionSearch:
    """
    Builds a k-uniform representant vertex by vertex: the k copies of
    the next vertex are inserted into the word of the vertices already
    placed, which must represent the subgraph they induce.

    Symmetry breaking: the word starts with the first vertex (any
    uniform representant can be cyclically shifted to do so), and a
    vertex u in the orbit of order[i] under the automorphisms fixing
    order[0..i-1] first occurs after order[i].
    """

    def __init__(
        self, g: Graph, k: int, counter: _NodeCounter, order: Sequence[str]
    ) -> None:
        self.k = k
        self.counter = counter
        self.order = list(order)
        self.adjacent = {v: set(g.neighbors(v)) for v in g.nodes}
        self.after: Dict[str, List[str]] = {v: [] for v in g.nodes}
        for orbit in stabilizer_orbits(g, self.order):
            for u in orbit[1:]:
                self.after[u].append(orbit[0])

    def _gaps(
        self, length: int, low: int, neighbours: List[List[int]]
    ) -> Iterator[Tuple[int, ...]]:
        """
        Non-decreasing gap choices (insert before position gap) under
        which v alternates with every placed neighbour: the j-th copy
        of v lies just before, or for all j just after, the j-th copy
        of the neighbour.
        """
        gaps: List[int] = []

        def fits() -> bool:
            j = len(gaps) - 1
            for positions in neighbours:
                offset = bisect_left(positions, gaps[0])
                if offset > 1 or bisect_left(positions, gaps[j]) != j + offset:
                    return False
            return True

        def extend(start: int) -> Iterator[Tuple[int, ...]]:
            if len(gaps) == self.k:
                yield tuple(gaps)
                return
            for gap in range(start, length + 1):
                self.counter.tick()
                gaps.append(gap)
                if fits():
                    yield from extend(gap)
                gaps.pop()

        yield from extend(low)

    def _alternates(self, positions: List[int], gaps: Tuple[int, ...]) -> bool:
        slots = [bisect_left(positions, gap) for gap in gaps]
        return slots == list(range(self.k)) or slots == list(range(1, self.k + 1))

    def run(self, word: Tuple[str, ...] = ()) -> Optional[Word]:
        placed = len(word) // self.k
        if placed == len(self.order):
            return word
        v = self.order[placed]
        if not word:
            return self.run((v,) * self.k)
        positions: Dict[str, List[int]] = {}
        for i, letter in enumerate(word):
            positions.setdefault(letter, []).append(i)
        neighbours = [positions[u] for u in positions if u in self.adjacent[v]]
        others = [positions[u] for u in positions if u not in self.adjacent[v]]
        low = max([positions[u][0] + 1 for u in self.after[v]], default=1)
        for gaps in self._gaps(len(word), low, neighbours):
            if any(self._alternates(p, gaps) for p in others):
                continue
            extended = list(word)
            for gap in reversed(gaps):
                extended.insert(gap, v)
            found = self.run(tuple(extended))
            if found is not None:
                return found
        return None


def _search(
    g: Graph, k: int, counter: _NodeCounter, seed: Sequence[str] = ()
) -> Optional[Word]:
    order = _insertion_order(g, seed)
    found = _InsertionSearch(g, k, counter, order).run()
    if found is not None and not represents(found, g):
        raise ConstructionError("uniform search returned a non-representant")
    return found


def min_uniform_rep(
    g: Graph, budget: SearchBudget = SearchBudget()
) -> Optional[Tuple[int, Word]]:
    """
    Least k <= budget.max_k admitting a k-uniform representant of g.

    Parameters
    ----------
    g
        Graph with at most budget.max_vertices vertices.
    budget
        Search bounds.

    Returns
    -------
    Optional[Tuple[int, Word]]
        k and a witness word, or None when no k <= max_k works.
    """
    _guard(g, budget)
    counter = _NodeCounter(budget.node_limit)
    if is_complete(g):
        return 1, tuple(g.nodes)
    for k in range(2, budget.max_k + 1):
        found = _search(g, k, counter)
        logging.debug("uniform search k=%d: %d nodes", k, counter.nodes)
        if found is not None:
            return k, found
    return None


def seeded_uniform_search(
    g: Graph, k: int, seed: Sequence[str] = (), budget: SearchBudget = SearchBudget()
) -> Optional[Word]:
    """
    A k-uniform representant of g starting with the first letter of
    `seed`; letters met earlier in seed are placed earlier.
    """
    _guard(g, budget)
    if k < 1 or k > budget.max_k:
        raise PreconditionError(f"k={k} outside 1..{budget.max_k}")
    found = _search(g, k, _NodeCounter(budget.node_limit), seed)
    if found is not None and is_k_uniform(found) != k:
        raise ConstructionError("seeded search returned a non-uniform word")
    return found


def _last_extension(
    order: nx.DiGraph, chosen: Sequence[Word], incomparable: List[Tuple[str, str]]
) -> Optional[Word]:
    """
    A linear extension reversing every incomparable pair on which all
    chosen extensions agree, or None.
    """
    constraints = nx.DiGraph(order)
    positions = [{v: i for i, v in enumerate(p)} for p in chosen]
    for u, v in incomparable:
        if all(pos[u] < pos[v] for pos in positions):
            constraints.add_edge(v, u)
        elif all(pos[v] < pos[u] for pos in positions):
            constraints.add_edge(u, v)
    if not nx.is_directed_acyclic_graph(constraints):
        return None
    vertex_order = {v: i for i, v in enumerate(order.nodes)}
    return tuple(
        nx.lexicographical_topological_sort(constraints, key=lambda v: vertex_order[v])
    )


def _extension_tuples(
    order: nx.DiGraph, size: int, start: int = 0
) -> Iterator[Tuple[Word, ...]]:
    """
    Non-decreasing tuples of linear extensions (by enumeration index),
    generated lazily.
    """
    if size == 0:
        yield ()
        return
    extensions = itertools.islice(nx.all_topological_sorts(order), start, None)
    for i, extension in enumerate(extensions, start=start):
        for rest in _extension_tuples(order, size - 1, i):
            yield (tuple(extension),) + rest


def min_perm_rep(
    g: Graph, budget: SearchBudget = SearchBudget()
) -> Optional[Tuple[int, PermSequence]]:
    """
    Least k <= budget.max_k such that k permutations represent g.

    k = 2 is decided by orienting the complement (two permutations
    suffice iff both g and its complement are comparability graphs).
    Larger k search realizers among the linear extensions of one
    transitive orientation of g. None when g is not a comparability
    graph or its dimension exceeds max_k.
    """
    _guard(g, budget)
    vertices = tuple(g.nodes)
    if is_complete(g):
        return 1, PermSequence(vertices, [vertices])
    orientation = find_transitive_orientation(g)
    if orientation is None:
        return None
    if budget.max_k < 2:
        return None
    if find_transitive_orientation(complement(g), None) is not None:
        return 2, two_dimensional_realizer(g, None)
    order = orientation.digraph()
    incomparable = [
        (u, v)
        for i, u in enumerate(vertices)
        for v in vertices[i + 1 :]
        if not g.has_edge(u, v)
    ]
    counter = _NodeCounter(budget.node_limit)
    for k in range(3, budget.max_k + 1):
        for chosen in _extension_tuples(order, k - 1):
            counter.tick()
            last = _last_extension(order, chosen, incomparable)
            if last is not None:
                realizer = PermSequence(vertices, list(chosen) + [last])
                if not realizer.represents(g):
                    raise ConstructionError(
                        "permutation search returned a non-realizer"
                    )
                return k, realizer
        logging.debug("permutation search k=%d: %d nodes", k, counter.nodes)
    return None
