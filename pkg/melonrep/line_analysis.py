"""
Line graphs of melon graphs: word-representability, representation
number with certificate words, comparability class and the K3 x K2
vertex-minor.

Line-graph vertices of path i (length L >= 2), from the 0 side:
e{i} (edge at 0), e{i}_{L-2}, .., e{i}_1 (inner edges), e{i}p (edge
at 0p). The length-1 path is the single vertex "e_0".
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from .comparability import even_cycle_perms
from .constants import (
    EDGE_PATH_LABEL,
    END_VERTEX,
    END_VERTEX_PRIME,
    WITNESS_MAX_VERTICES,
)
from .errors import (
    ConstructionError,
    NotWordRepresentableError,
    PreconditionError,
    SpecInvalidError,
)
from .graph_core import (
    Graph,
    MelonSpec,
    Step,
    build_melon,
    build_named,
    contains_induced,
    cycle_graph,
    delete_vertex,
    is_complete,
    is_isomorphic,
    km_box_k2,
    line_graph,
    local_complement,
    prism3,
)
from .melon_analysis import cycle_word, path_word
from .orientation import neighborhood_comparability_check
from .words import (
    PermSequence,
    Word,
    extend_path,
    format_word,
    is_k_uniform,
    relabel,
    require_represents,
    subdivide,
)

# Comparability classes of line graphs.
CLASS_PATH = "LP_n"
CLASS_CYCLE = "LC_2n"
CLASS_TRIANGLE = "LK3"
CLASS_A2 = "LA_2"
CLASS_NONE = "NotComparability"


def edge_at_zero(i: int) -> str:
    return f"e{i}"


def edge_at_zero_prime(i: int) -> str:
    return f"e{i}p"


def inner_edge(i: int, j: int) -> str:
    return f"e{i}_{j}"


def path_edges(spec: MelonSpec, i: int) -> List[str]:
    """
    Line-graph vertices of path i, from the 0 side to the 0p side.
    """
    length = spec.lengths[i - 1]
    if length == 1:
        return [EDGE_PATH_LABEL]
    inner = [inner_edge(i, j) for j in range(length - 2, 0, -1)]
    return [edge_at_zero(i)] + inner + [edge_at_zero_prime(i)]


def line_labels(spec: MelonSpec) -> Dict[frozenset, str]:
    """
    Label of every melon edge, ordered path by path from the 0p side.
    """
    labels: Dict[frozenset, str] = {}
    for i, length in enumerate(spec.lengths, start=1):
        if length == 1:
            labels[frozenset((END_VERTEX, END_VERTEX_PRIME))] = EDGE_PATH_LABEL
            continue
        chain = (
            [END_VERTEX_PRIME]
            + [f"p{i}_{j}" for j in range(1, length)]
            + [END_VERTEX]
        )
        names = list(reversed(path_edges(spec, i)))
        for (u, v), name in zip(zip(chain, chain[1:]), names):
            labels[frozenset((u, v))] = name
    return labels


def melon_line_graph(spec: MelonSpec) -> Graph:
    return line_graph(build_melon(spec), line_labels(spec))


def line_word_representable(spec: MelonSpec) -> bool:
    """
    False iff the melon contains the triangular book A_3, i.e. it has
    the 0-0p edge and at least three paths of length 2.
    """
    return not (spec.has_edge and spec.lengths.count(2) >= 3)


def _checked(spec: MelonSpec, word: Sequence[str], what: str) -> Word:
    w = tuple(word)
    require_represents(w, melon_line_graph(spec), f"{what} of L({spec})")
    return w


def _cycle_order(spec: MelonSpec) -> List[str]:
    return list(reversed(path_edges(spec, 1))) + path_edges(spec, 2)


def line_word_cycle(spec: MelonSpec) -> Word:
    """
    Word of L(M) for a two-path melon (a cycle): 2-uniform, or a single
    permutation for the triangle.
    """
    if spec.parts != 2:
        raise PreconditionError(f"{spec}: exactly two paths required")
    order = _cycle_order(spec)
    if len(order) == 3:
        return _checked(spec, order, "triangle word")
    return _checked(spec, cycle_word(order), "cycle word")


def line_word_three_paths_adjacent(spec: MelonSpec) -> Word:
    """
    2-uniform word of L(M) for the edge plus two paths: the cycle word
    of the two paths' line cycle with e_0 inserted once between the two
    edges at 0 and once between the two edges at 0p.
    """
    if spec.parts != 3 or not spec.has_edge:
        raise PreconditionError(f"{spec}: the edge plus two paths required")
    first, second = [i for i, n in enumerate(spec.lengths, start=1) if n != 1]
    one, two = path_edges(spec, first), path_edges(spec, second)
    c = [one[0]] + two + list(reversed(one))[:-1]
    n = len(c)
    at_zero_prime = len(two)
    x = EDGE_PATH_LABEL
    word = [c[0], c[-1]]
    for j in range(1, n):
        if j == 1:
            word += [c[1], x, c[0]]
        elif j == at_zero_prime + 1:
            word += [c[j], x, c[j - 1]]
        else:
            word += [c[j], c[j - 1]]
    return _checked(spec, word, "three-path word")


def km_k2_word(m: int) -> Word:
    """
    3-uniform word of K_m x K_2 on e1..em and e1p..emp.
    """
    if m < 1:
        raise SpecInvalidError("km_k2_word needs m >= 1")
    e, pairs_fe, f, pairs_ef = _km_k2_blocks(m)
    w = _join_blocks(e, pairs_fe, f, pairs_ef)
    require_represents(w, km_box_k2(m), f"K{m} x K2 word")
    return w


_Blocks = Tuple[List[str], List[List[str]], List[str], List[List[str]]]


def _km_k2_blocks(m: int) -> _Blocks:
    # e1..em | e1p e1 .. emp em | e1p..emp | e1 e1p .. em emp
    e = [edge_at_zero(i) for i in range(1, m + 1)]
    f = [edge_at_zero_prime(i) for i in range(1, m + 1)]
    return e, [[b, a] for a, b in zip(e, f)], f, [[a, b] for a, b in zip(e, f)]


def _join_blocks(
    e: List[str], pairs_fe: List[List[str]], f: List[str], pairs_ef: List[List[str]]
) -> Word:
    return tuple(
        e + [x for p in pairs_fe for x in p] + f + [x for p in pairs_ef for x in p]
    )


def line_word_nonadjacent(spec: MelonSpec) -> Word:
    """
    3-uniform word of L(M) for a melon without the 0-0p edge.

    Starts from the K_m x K_2 word. A path of length 3 gets its middle
    edge x by replacing "e'i ei" with "x ei e'i x" and "ei e'i" with
    "ei x e'i"; a longer path first makes ei, e'i non-adjacent the same
    way (without x), then its inner edges are added by path extension.
    """
    if spec.has_edge:
        raise PreconditionError(f"{spec}: no length-1 path allowed")
    e, pairs_fe, f, pairs_ef = _km_k2_blocks(spec.parts)
    for i, length in enumerate(spec.lengths, start=1):
        a, b = edge_at_zero(i), edge_at_zero_prime(i)
        if length == 3:
            x = inner_edge(i, 1)
            pairs_fe[i - 1] = [x, a, b, x]
            pairs_ef[i - 1] = [a, x, b]
        elif length >= 4:
            pairs_fe[i - 1] = [a, b]
    w = _join_blocks(e, pairs_fe, f, pairs_ef)
    for i, length in enumerate(spec.lengths, start=1):
        if length >= 4:
            chain = path_edges(spec, i)[1:-1]
            w = extend_path(w, edge_at_zero(i), edge_at_zero_prime(i), chain)
    return _checked(spec, w, "non-adjacent-ends word")


def h_perms(m: int) -> PermSequence:
    """
    Three permutations representing H(m).
    """
    if m < 2:
        raise PreconditionError("h_perms needs m >= 2")
    a = [f"a{i}" for i in range(1, m + 1)]
    b = [f"b{i}" for i in range(1, m + 1)]
    q1 = [a[0], b[1]] + [x for j in range(2, m) for x in (a[j], b[j])]
    q1 += [a[1], b[0], "x"]
    q2 = [a[0]] + a[2:] + [b[1], a[1]] + b[2:] + [b[0], "x"]
    q3 = [b[1]] + b[2:] + [a[0], b[0]] + a[2:] + [a[1], "x"]
    realizer = PermSequence(a + b + ["x"], [q1, q2, q3])
    require_represents(realizer.flatten(), build_named("H", m), f"H({m}) realizer")
    return realizer


def _swap_factor(w: Sequence[str], u: str, v: str) -> Word:
    for p in range(len(w) - 1):
        if {w[p], w[p + 1]} == {u, v}:
            return tuple(w[:p]) + (w[p + 1], w[p]) + tuple(w[p + 2 :])
    raise PreconditionError(f"{u} and {v} are never next to each other")


def line_word_adjacent(spec: MelonSpec) -> Word:
    """
    3-uniform word of L(M) for the edge plus at least two other paths,
    at most two of length 2.

    The paths are taken in non-decreasing order of length and matched
    to H(m): a_i = e{i}, b_i = e{i}p, x = e_0. A length-3 path gets its
    middle edge by subdividing a factor a_i b_i; a longer path has a_i,
    b_i separated and its inner edges added by path extension.
    """
    if not spec.has_edge:
        raise PreconditionError(f"{spec}: the 0-0p edge is required")
    if not line_word_representable(spec):
        raise PreconditionError(f"{spec} contains the triangular book A_3")
    order = sorted(
        (i for i, n in enumerate(spec.lengths, start=1) if n != 1),
        key=lambda i: (spec.lengths[i - 1], i),
    )
    if len(order) < 2:
        raise PreconditionError(f"{spec}: at least two paths besides the edge required")
    mapping = {"x": EDGE_PATH_LABEL}
    for k, i in enumerate(order, start=1):
        mapping[f"a{k}"] = edge_at_zero(i)
        mapping[f"b{k}"] = edge_at_zero_prime(i)
    w = relabel(h_perms(len(order)).flatten(), mapping)

    for k, i in enumerate(order, start=1):
        if spec.lengths[i - 1] >= 4 and k <= 2:
            w = _swap_factor(w, edge_at_zero(i), edge_at_zero_prime(i))
    for k, i in enumerate(order, start=1):
        if spec.lengths[i - 1] == 3:
            u, v = edge_at_zero(i), edge_at_zero_prime(i)
            w = subdivide(w, u, v, inner_edge(i, 1), k <= 2)
    for i in order:
        if spec.lengths[i - 1] >= 4:
            chain = path_edges(spec, i)[1:-1]
            w = extend_path(w, edge_at_zero(i), edge_at_zero_prime(i), chain)
    return _checked(spec, w, "adjacent-ends word")


class LineVerdict:
    """
    Classification of L(M).

    Attributes
    ----------
    word_representable
        False iff M contains A_3.
    refuter
        Vertex of L(M) whose neighbourhood is not a comparability graph
        (set when not word-representable).
    r
        Representation number of L(M), when word-representable.
    certificate
        r-uniform word of L(M).
    comparability_class
        One of the CLASS_* values.
    prn
        Permutation-representation number for comparability classes.
    witness
        Name of an induced non-comparability subgraph, if one was found.
    """

    def __init__(
        self,
        word_representable: bool,
        refuter: Optional[str] = None,
        r: Optional[int] = None,
        certificate: Optional[Word] = None,
        comparability_class: str = CLASS_NONE,
        prn: Optional[int] = None,
        witness: Optional[str] = None,
    ) -> None:
        self.word_representable = word_representable
        self.refuter = refuter
        self.r = r
        self.certificate = certificate
        self.comparability_class = comparability_class
        self.prn = prn
        self.witness = witness

    def to_dict(self) -> Dict:
        d: Dict = {"word_representable": self.word_representable}
        if self.refuter is not None:
            d["refuter"] = self.refuter
        if self.r is not None:
            d["r"] = self.r
        if self.certificate is not None:
            d["certificate"] = format_word(self.certificate)
        d["comparability_class"] = self.comparability_class
        if self.prn is not None:
            d["prn"] = self.prn
        if self.witness is not None:
            d["witness"] = self.witness
        return d


def _line_certificate(spec: MelonSpec) -> Tuple[int, Word]:
    g = melon_line_graph(spec)
    if is_complete(g):
        return 1, tuple(g.nodes)
    if spec.count_at_least(2) >= 3:
        if spec.has_edge:
            return 3, line_word_adjacent(spec)
        return 3, line_word_nonadjacent(spec)
    if spec.parts == 1:
        word = path_word(list(reversed(path_edges(spec, 1))))
        return 2, _checked(spec, word, "path word")
    if spec.parts == 2:
        return 2, line_word_cycle(spec)
    return 2, line_word_three_paths_adjacent(spec)


def line_rep_number(spec: MelonSpec) -> LineVerdict:
    """
    Representation number of L(M): 1 when L(M) is complete, 3 when at
    least three paths have length >= 2, 2 otherwise.

    Raises
    ------
    NotWordRepresentableError
        If M contains the triangular book A_3.
    """
    if not line_word_representable(spec):
        raise NotWordRepresentableError(f"L({spec}) is not word-representable")
    r, word = _line_certificate(spec)
    if is_k_uniform(word) != r:
        raise ConstructionError(f"line certificate of {spec} is not {r}-uniform")
    return LineVerdict(True, r=r, certificate=word)


_WITNESSES: Tuple[Tuple[str, Graph], ...] = (
    ("S1", build_named("S1")),
    ("S2", build_named("S2")),
    ("Prism3", prism3()),
)


def line_noncomparability_witness(spec: MelonSpec) -> Optional[str]:
    """
    Name of an induced subgraph of L(M) that is not a comparability
    graph (S1, S2, Prism3 or an odd cycle), or None when L(M) is too
    large to search or none is found.
    """
    g = melon_line_graph(spec)
    if g.number_of_nodes() > WITNESS_MAX_VERTICES:
        return None
    candidates = list(_WITNESSES) + [
        (f"C{n}", cycle_graph(n)) for n in range(5, g.number_of_nodes() + 1, 2)
    ]
    for name, h in candidates:
        if contains_induced(g, h) is not None:
            return name
    return None


def line_comparability(spec: MelonSpec) -> Tuple[str, Optional[int], Optional[int]]:
    """
    Comparability class of L(M).

    Returns
    -------
    str
        CLASS_PATH, CLASS_CYCLE, CLASS_TRIANGLE, CLASS_A2 or CLASS_NONE.
    Optional[int]
        The class size parameter n (path length, cycle length).
    Optional[int]
        prn of L(M) for comparability classes.
    """
    lengths = spec.lengths
    if spec.parts == 1:
        n = lengths[0]
        return CLASS_PATH, n, 1 if n <= 2 else 2
    if spec.parts == 2:
        total = sum(lengths)
        if total % 2 == 0:
            return CLASS_CYCLE, total, 2 if total == 4 else 3
        if sorted(lengths) == [1, 2]:
            return CLASS_TRIANGLE, 3, 1
        return CLASS_NONE, None, None
    if sorted(lengths) == [1, 2, 2]:
        return CLASS_A2, None, 2
    return CLASS_NONE, None, None


def line_cycle_realizer(spec: MelonSpec) -> PermSequence:
    """
    Three permutations of L(M) for a two-path melon of even total
    length at least 6.
    """
    order = _cycle_order(spec)
    if spec.parts != 2 or len(order) % 2 or len(order) < 6:
        raise PreconditionError(f"L({spec}) is not an even cycle of length >= 6")
    realizer = even_cycle_perms(len(order), order)
    g = melon_line_graph(spec)
    require_represents(realizer.flatten(), g, f"L({spec}) realizer")
    return realizer


def line_verdict(spec: MelonSpec, witness: bool = True) -> LineVerdict:
    """
    Full classification of L(M), including the neighbourhood refuter
    when L(M) is not word-representable. `witness` enables the induced
    non-comparability witness search.
    """
    cls, _, prn = line_comparability(spec)
    found = None
    if witness and cls == CLASS_NONE:
        found = line_noncomparability_witness(spec)
    if not line_word_representable(spec):
        refuter = neighborhood_comparability_check(melon_line_graph(spec), None)
        if refuter is None:
            raise ConstructionError(f"no refuting neighbourhood in L({spec})")
        return LineVerdict(
            False, refuter=refuter, comparability_class=cls, prn=prn, witness=found
        )
    verdict = line_rep_number(spec)
    verdict.comparability_class = cls
    verdict.prn = prn
    verdict.witness = found
    return verdict


def line_prism_minor(spec: MelonSpec) -> Tuple[Tuple[Step, ...], Graph]:
    """
    Vertex deletions and local complementations reducing L(M) to a
    graph isomorphic to K3 x K2, for M with at least three paths of
    length >= 2.

    The first three such paths are kept; every other vertex is deleted,
    and each kept path is shortened to length 2 by local complementation
    at its inner edge next to e{i} followed by deletion of that edge.
    """
    kept = [i for i, n in enumerate(spec.lengths, start=1) if n >= 2][:3]
    if len(kept) < 3:
        raise PreconditionError(f"{spec} has fewer than three paths of length >= 2")
    g = melon_line_graph(spec)
    keep = {v for i in kept for v in path_edges(spec, i)}
    steps: List[Step] = [("delete", v) for v in g.nodes if v not in keep]
    for v in [s[1] for s in steps]:
        g = delete_vertex(g, v)
    for i in kept:
        length = spec.lengths[i - 1]
        while length > 2:
            pivot = inner_edge(i, length - 2)
            steps += [("local_complement", pivot), ("delete", pivot)]
            g = delete_vertex(local_complement(g, pivot), pivot)
            length -= 1
    if is_isomorphic(g, prism3()) is None:
        raise ConstructionError(f"reduction of L({spec}) did not reach K3 x K2")
    logging.debug("L(%s) reduced to K3 x K2 in %d steps", spec, len(steps))
    return tuple(steps), g
