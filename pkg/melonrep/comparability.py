"""
Comparability of melon graphs: which melons admit a transitive
orientation, three-permutation realizers, the permutation-representation
number (prn), and the layered Hasse orientation.
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .constants import END_VERTEX, END_VERTEX_PRIME, ORIENTATION_MAX_EDGES
from .errors import ConstructionError, NotComparabilityError, PreconditionError
from .graph_core import (
    Graph,
    MelonSpec,
    build_melon,
    canonical_edges,
    complement,
    is_bipartite,
    is_complete,
    path_vertices,
)
from .graph_io import digraph_to_dot
from .orientation import Orientation, find_transitive_orientation
from .words import PermSequence, Word, require_represents

# Comparability conditions.
SAME_PARITY = "SameParity"
EDGE_AND_SHORT_EVENS = "EdgeAndShortEvens"

# prn witnesses.
WITNESS_COMPLETE = "Kn"
WITNESS_PERMUTATION_GRAPH = "PermutationGraph"
WITNESS_EVEN_CYCLE = "InducedEvenCycle"
WITNESS_T2 = "InducedT2"

# Hasse diagram cases.
CASE_EVEN = "I"
CASE_ODD = "II"
CASE_EDGE = "III"
CASE_EDGE_SHORT = "IV"


def is_comparability_melon(spec: MelonSpec) -> Optional[str]:
    """
    SAME_PARITY when all lengths share parity, EDGE_AND_SHORT_EVENS when
    the 0-0p edge is present and every even length is 2, None when the
    melon is not a comparability graph.
    """
    parities = {length % 2 for length in spec.lengths}
    if len(parities) == 1:
        return SAME_PARITY
    if spec.has_edge and all(
        length == 2 for length in spec.lengths if length % 2 == 0
    ):
        return EDGE_AND_SHORT_EVENS
    return None


def _labels(n: int, labels: Optional[Sequence[str]]) -> List[str]:
    if labels is None:
        return [f"c{i}" for i in range(1, n + 1)]
    if len(labels) != n:
        raise PreconditionError(f"expected {n} labels, got {len(labels)}")
    return list(labels)


def _pairs(blocks: Iterable[Sequence[str]]) -> List[str]:
    return [letter for block in blocks for letter in block]


def path_perms_even(n: int, labels: Optional[Sequence[str]] = None) -> PermSequence:
    """
    Two permutations representing the path c1 - c2 - ... - cn, n even.
    """
    if n % 2 or n < 4:
        raise PreconditionError(f"path_perms_even needs an even n >= 4, got {n}")
    c = _labels(n, labels)
    k = n // 2
    p = _pairs([(c[2 * j + 1], c[2 * j]) for j in range(k)])
    q = [c[-1]] + _pairs([(c[2 * j - 1], c[2 * j]) for j in range(k - 1, 0, -1)])
    q.append(c[0])
    return PermSequence(c, [p, q])


def path_perms_odd(n: int, labels: Optional[Sequence[str]] = None) -> PermSequence:
    """
    Three permutations representing the path c1 - c2 - ... - cn, n odd.
    """
    if n % 2 == 0 or n < 3:
        raise PreconditionError(f"path_perms_odd needs an odd n >= 3, got {n}")
    c = _labels(n, labels)
    k = (n + 1) // 2
    p = _pairs([(c[2 * j + 1], c[2 * j]) for j in range(k - 1)]) + [c[-1]]
    q = _pairs([(c[2 * j - 1], c[2 * j]) for j in range(k - 1, 0, -1)]) + [c[0]]
    r = [letter for letter in p if letter != c[0]] + [c[0]]
    return PermSequence(c, [p, q, r])


def even_cycle_perms(n: int, labels: Optional[Sequence[str]] = None) -> PermSequence:
    """
    Three permutations representing the cycle c1 - c2 - ... - cn - c1,
    n even and >= 4.

    c1 and cn play the melon's 0p and 0; the path c2..c(n-1) in between
    is laid out as in `path_perms_even`.
    """
    if n % 2 or n < 4:
        raise PreconditionError(f"even_cycle_perms needs an even n >= 4, got {n}")
    c = _labels(n, labels)
    start, end, inner = c[0], c[-1], c[1:-1]
    k = len(inner) // 2
    p = _pairs([(inner[2 * j + 1], inner[2 * j]) for j in range(k)])
    v = _pairs([(inner[2 * j - 1], inner[2 * j]) for j in range(k - 1, 0, -1)])
    w1 = [start] + p + [end]
    w2 = [inner[-1]] + v + [start, inner[0], end]
    w3 = [start, inner[-1], end] + v + [inner[0]]
    return PermSequence(c, [w1, w2, w3])


def _realizer(
    spec: MelonSpec, perms: Sequence[Sequence[str]], what: str
) -> PermSequence:
    g = build_melon(spec)
    realizer = PermSequence(tuple(g.nodes), perms)
    require_represents(realizer.flatten(), g, what)
    return realizer


def melon_perms_odd_parity(spec: MelonSpec) -> PermSequence:
    """
    Three permutations for a melon whose paths all have odd length >= 3.
    """
    if any(length % 2 == 0 or length < 3 for length in spec.lengths):
        raise PreconditionError(f"{spec}: all lengths must be odd and >= 3")
    heads, tails, us, vs = [], [], [], []
    for i in range(1, spec.parts + 1):
        c = path_vertices(spec, i)
        k = len(c) // 2
        heads.append(c[0])
        tails.append(c[-1])
        us.append(_pairs([(c[2 * j], c[2 * j - 1]) for j in range(1, k)]))
        vs.append(_pairs([(c[2 * j - 2], c[2 * j - 1]) for j in range(k, 0, -1)]))
    p1 = heads + [END_VERTEX_PRIME] + _pairs(reversed(us)) + [END_VERTEX]
    p1 += list(reversed(tails))
    p2 = [END_VERTEX] + _pairs(vs) + [END_VERTEX_PRIME]
    p3 = [END_VERTEX] + _pairs(reversed(vs)) + [END_VERTEX_PRIME]
    return _realizer(spec, [p1, p2, p3], f"odd-parity realizer of {spec}")


def _ascending(spec: MelonSpec, paths: Sequence[int]) -> List[int]:
    return sorted(paths, key=lambda i: (spec.lengths[i - 1], i))


def _descending(spec: MelonSpec, paths: Sequence[int]) -> List[int]:
    return sorted(paths, key=lambda i: (-spec.lengths[i - 1], i))


def melon_perms_even_parity(spec: MelonSpec) -> PermSequence:
    """
    Three permutations for a melon whose paths all have even length.
    Paths are taken in non-decreasing order of length; a length-2 path
    contributes its single intermediate vertex as both end letters.
    """
    if any(length % 2 for length in spec.lengths):
        raise PreconditionError(f"{spec}: all lengths must be even")
    order = _ascending(spec, range(1, spec.parts + 1))
    heads, tails, us, vs = [], [], [], []
    for i in order:
        c = path_vertices(spec, i)
        k = (len(c) + 1) // 2
        heads.append(c[0])
        tails.append(c[-1])
        us.append(_pairs([(c[2 * j], c[2 * j - 1]) for j in range(1, k)]))
        vs.append(_pairs([(c[2 * j - 2], c[2 * j - 1]) for j in range(k - 1, 0, -1)]))
    p1 = heads + [END_VERTEX_PRIME] + _pairs(us) + [END_VERTEX]
    p2 = tails + [END_VERTEX] + _pairs(vs) + [END_VERTEX_PRIME]
    p3: List[str] = []
    for head, u in reversed(list(zip(heads, us))):
        p3 += [head] + u
    p3 += [END_VERTEX, END_VERTEX_PRIME]
    return _realizer(spec, [p1, p2, p3], f"even-parity realizer of {spec}")


def melon_perms_adjacent(spec: MelonSpec) -> PermSequence:
    """
    Three permutations for a melon with the 0-0p edge whose other paths
    are odd or of length 2.

    Each odd path c1..c2k is laid out from its two fence realizers
    "c1 c3 c2 c5 c4 .. c(2k-1) c(2k-2) c2k" and
    "c(2k-1) c2k c(2k-3) c(2k-2) .. c1 c2". Paths of length 3 (k = 1) are
    placed as blocks, length-2 paths as single letters between 0 and 0p.
    """
    if not spec.has_edge:
        raise PreconditionError(f"{spec}: the 0-0p edge is required")
    if is_comparability_melon(spec) is None:
        raise PreconditionError(f"{spec} is not a comparability melon")
    others = [i for i, length in enumerate(spec.lengths, start=1) if length != 1]
    order = _descending(spec, others)
    longs = [path_vertices(spec, i) for i in order if spec.lengths[i - 1] >= 5]
    shorts = [path_vertices(spec, i) for i in order if spec.lengths[i - 1] == 3]
    zs = [path_vertices(spec, i)[0] for i in order if spec.lengths[i - 1] == 2]

    fences = []
    for c in longs:
        k = len(c) // 2
        fences.append(
            [c[0]] + _pairs([(c[2 * j], c[2 * j - 1]) for j in range(1, k)]) + [c[-1]]
        )
    l1 = _pairs(f[:-1] for f in fences) + [END_VERTEX]
    l1 += [c[-1] for c in longs] + _pairs(shorts) + zs + [END_VERTEX_PRIME]

    l2 = [END_VERTEX] + list(reversed(zs))
    l2 += _pairs([c[-2], c[-1]] for c in longs)
    for c in longs:
        k = len(c) // 2
        l2 += _pairs([(c[2 * j - 2], c[2 * j - 1]) for j in range(k - 1, 1, -1)])
    l2 += _pairs(reversed(shorts))
    l2 += _pairs([c[0], c[1]] for c in reversed(longs)) + [END_VERTEX_PRIME]

    l3 = [c[0] for c in longs] + [c[0] for c in shorts] + [END_VERTEX] + zs
    l3 += [END_VERTEX_PRIME] + [c[1] for c in shorts]
    l3 += _pairs(f[1:] for f in reversed(fences))
    return _realizer(spec, [l1, l2, l3], f"adjacent-ends realizer of {spec}")


def melon_perms(spec: MelonSpec) -> PermSequence:
    """
    The three-permutation realizer matching the melon's shape.
    """
    if is_comparability_melon(spec) is None:
        raise NotComparabilityError(f"{spec} is not a comparability graph")
    if spec.has_edge:
        return melon_perms_adjacent(spec)
    if all(length % 2 for length in spec.lengths):
        return melon_perms_odd_parity(spec)
    return melon_perms_even_parity(spec)


def two_dimensional_realizer(
    g: Graph, max_edges: Optional[int] = ORIENTATION_MAX_EDGES
) -> PermSequence:
    """
    Two permutations representing g, from a transitive orientation P of
    g and a transitive orientation Q of its complement: the linear
    orders P + Q and P + reversed(Q).

    Raises
    ------
    PreconditionError
        If g or its complement is not a comparability graph.
    """
    vertices = tuple(g.nodes)
    orientation = find_transitive_orientation(g, max_edges)
    co_orientation = find_transitive_orientation(complement(g), max_edges)
    if orientation is None or co_orientation is None:
        raise PreconditionError("g is not a permutation graph")
    index = {v: i for i, v in enumerate(vertices)}
    perms = []
    for co_arcs in (co_orientation.arcs, co_orientation.reversed().arcs):
        order = nx.DiGraph()
        order.add_nodes_from(vertices)
        order.add_edges_from(orientation.arcs)
        order.add_edges_from(co_arcs)
        perms.append(
            tuple(nx.lexicographical_topological_sort(order, key=lambda v: index[v]))
        )
    realizer = PermSequence(vertices, perms)
    require_represents(realizer.flatten(), g, "two-dimensional realizer")
    return realizer


class PrnVerdict:
    """
    Permutation-representation number of a comparability melon.

    Attributes
    ----------
    prn
        1, 2 or 3.
    realizer
        prn permutations whose concatenation represents the melon.
    witness
        WITNESS_COMPLETE, WITNESS_PERMUTATION_GRAPH, WITNESS_EVEN_CYCLE
        or WITNESS_T2.
    cycle_length
        Length of the induced even cycle, for WITNESS_EVEN_CYCLE.
    """

    def __init__(
        self,
        prn: int,
        realizer: PermSequence,
        witness: str,
        cycle_length: Optional[int] = None,
    ) -> None:
        self.prn = prn
        self.realizer = realizer
        self.witness = witness
        self.cycle_length = cycle_length

    def to_dict(self) -> Dict:
        d = {
            "prn": self.prn,
            "witness": self.witness,
            "realizer": [" ".join(p) for p in self.realizer.perms],
        }
        if self.cycle_length is not None:
            d["cycle_length"] = self.cycle_length
        return d

    def __repr__(self) -> str:
        return f"PrnVerdict(prn={self.prn}, witness={self.witness})"


def _prn3_witness(spec: MelonSpec) -> Optional[Tuple[str, Optional[int]]]:
    lengths = sorted(spec.lengths, reverse=True)
    if not spec.has_edge:
        if len(lengths) >= 2 and lengths[0] + lengths[1] >= 6:
            return WITNESS_EVEN_CYCLE, lengths[0] + lengths[1]
        return None
    longest_odd = max(
        (length for length in lengths if length % 2 and length != 1), default=0
    )
    if longest_odd >= 5:
        return WITNESS_EVEN_CYCLE, longest_odd + 1
    if spec.count_at_least(3) >= 3:
        return WITNESS_T2, None
    return None


def prn(spec: MelonSpec) -> PrnVerdict:
    """
    Permutation-representation number of a comparability melon.

    1 for K2 and K3; 3 when the melon has an induced even cycle on at
    least six vertices or is a book with three or more pages; 2 otherwise.
    """
    if is_comparability_melon(spec) is None:
        raise NotComparabilityError(f"{spec} is not a comparability graph")
    g = build_melon(spec)
    if is_complete(g):
        vertices = tuple(g.nodes)
        return PrnVerdict(1, PermSequence(vertices, [vertices]), WITNESS_COMPLETE)
    witness = _prn3_witness(spec)
    if witness is not None:
        return PrnVerdict(3, melon_perms(spec), witness[0], witness[1])
    # The complement of a melon is dense; its orientation is polynomial.
    realizer = two_dimensional_realizer(g, max_edges=None)
    return PrnVerdict(2, realizer, WITNESS_PERMUTATION_GRAPH)


class HasseDiagram:
    """
    Transitive orientation of a comparability melon with its cover
    relation and a layering (layer 0 at the bottom).
    """

    def __init__(self, orientation: Orientation, case: str) -> None:
        self.orientation = orientation
        self.case = case
        order = orientation.digraph()
        depth: Dict[str, int] = {}
        for v in nx.topological_sort(order):
            depth[v] = max((depth[u] + 1 for u in order.predecessors(v)), default=0)
        vertices = list(orientation.base.nodes)
        height = max(depth.values(), default=-1) + 1
        self.layers: Tuple[Tuple[str, ...], ...] = tuple(
            tuple(v for v in vertices if depth[v] == level) for level in range(height)
        )
        reduced = nx.transitive_reduction(order)
        index = {v: i for i, v in enumerate(vertices)}
        self.covers: Tuple[Tuple[str, str], ...] = tuple(
            sorted(reduced.edges, key=lambda e: (index[e[0]], index[e[1]]))
        )

    def layer_of(self, v: str) -> int:
        for level, layer in enumerate(self.layers):
            if v in layer:
                return level
        raise KeyError(v)

    def to_dot(self, name: str = "hasse") -> str:
        return digraph_to_dot(self.covers, name=name, layers=self.layers)

    def to_dict(self) -> Dict:
        return {
            "case": self.case,
            "layers": [list(layer) for layer in self.layers],
            "covers": [f"{u}->{v}" for u, v in self.covers],
        }


def _hasse_case(spec: MelonSpec) -> str:
    if not spec.has_edge:
        return CASE_EVEN if spec.lengths[0] % 2 == 0 else CASE_ODD
    if 2 in spec.lengths:
        return CASE_EDGE_SHORT
    return CASE_EDGE


def hasse_orientation(spec: MelonSpec) -> HasseDiagram:
    """
    Transitive orientation of a comparability melon.

    Bipartite melons are oriented from the class of 0p to the other
    class. Otherwise (the 0-0p edge with length-2 paths) odd paths are
    oriented the same way, 0p -> 0, and every length-2 path as
    0p -> x -> 0.
    """
    if is_comparability_melon(spec) is None:
        raise NotComparabilityError(f"{spec} is not a comparability graph")
    g = build_melon(spec)
    classes = is_bipartite(g)
    if classes is not None:
        bottom = set(classes[0] if END_VERTEX_PRIME in classes[0] else classes[1])
    else:
        bottom = {END_VERTEX_PRIME}
        for i, length in enumerate(spec.lengths, start=1):
            if length % 2 and length > 1:
                bottom.update(path_vertices(spec, i)[1::2])
    arcs: List[Tuple[str, str]] = []
    for u, v in canonical_edges(g):
        if u in bottom and v not in bottom:
            arcs.append((u, v))
        elif v in bottom and u not in bottom:
            arcs.append((v, u))
        else:
            # Length-2 path vertex next to 0.
            arcs.append((u, v) if v == END_VERTEX else (v, u))
    orientation = Orientation(g, tuple(arcs))
    if not orientation.is_transitive():
        raise ConstructionError(f"hasse orientation of {spec} is not transitive")
    return HasseDiagram(orientation, _hasse_case(spec))


def melon_word(spec: MelonSpec) -> Word:
    return melon_perms(spec).flatten()
