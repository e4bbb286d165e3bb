"""
Representation number of melon graphs, with a certificate word for
every verdict.

Notation used by the 2-uniform constructions, for a path of length
L >= 3 with k = L - 1 intermediate vertices: a1 is the vertex next to 0
and ak the vertex next to 0p, u = "a2 a1 a3 a2 .. ak a(k-1)", and for a
second long path b1..bk, v = "b(k-1) bk .. b1 b2". X is the sequence of
the intermediate vertices of the length-2 paths.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from .comparability import is_comparability_melon, melon_word
from .config import SearchBudget
from .constants import DEFAULT_MAX_K, DEFAULT_NODE_LIMIT, END_VERTEX, END_VERTEX_PRIME
from .errors import ConstructionError, PreconditionError, SpecInvalidError
from .graph_core import (
    MelonSpec,
    Step,
    build_melon,
    intermediate,
    is_complete,
    path_vertices,
    reduce_to_core,
)
from .oracle import seeded_uniform_search
from .words import (
    Word,
    extend_path,
    format_word,
    is_k_uniform,
    raise_to,
    relabel,
    require_represents,
)

ZERO, ZERO_PRIME = END_VERTEX, END_VERTEX_PRIME

# Verdict reasons.
REASON_COMPLETE = "CompleteK2K3"
REASON_CIRCLE = "CircleConstruction"
REASON_M3 = "InducedM3"
REASON_M4 = "InducedM4"

# 2-uniform construction ids.
CASE_PATH = "path"
CASE_CYCLE = "cycle"
CASE_ALL_SHORT = "all-short"
CASE_ONE_LONG = "one-long"
CASE_TWO_LONG = "two-long"
CASE_ONE_LONG_EDGE = "one-long-edge"
CASE_TWO_LONG_EDGE = "two-long-edge"


class RepVerdict:
    """
    Representation number r of a melon with an r-uniform certificate.
    """

    def __init__(
        self, r: int, certificate: Word, reason: str, case: Optional[str] = None
    ) -> None:
        self.r = r
        self.certificate = certificate
        self.reason = reason
        self.case = case

    def to_dict(self) -> Dict:
        d = {
            "r": self.r,
            "reason": self.reason,
            "certificate": format_word(self.certificate),
        }
        if self.case is not None:
            d["case"] = self.case
        return d

    def __repr__(self) -> str:
        return f"RepVerdict(r={self.r}, reason={self.reason})"


def path_word(vertices: Sequence[str]) -> Word:
    """
    2-uniform word "v1 v2 v1 v3 v2 .. vn v(n-1) vn" of the path v1..vn.
    """
    v = list(vertices)
    if len(v) < 2:
        raise PreconditionError("a path word needs at least two vertices")
    out = [v[0]]
    for i in range(1, len(v)):
        out += [v[i], v[i - 1]]
    return tuple(out + [v[-1]])


def cycle_word(vertices: Sequence[str]) -> Word:
    """
    2-uniform word "c1 cn c2 c1 c3 c2 .. cn c(n-1)" of the cycle c1..cn.
    """
    c = list(vertices)
    if len(c) < 3:
        raise PreconditionError("a cycle word needs at least three vertices")
    out = [c[0], c[-1]]
    for i in range(1, len(c)):
        out += [c[i], c[i - 1]]
    return tuple(out)


def _paths_by_kind(spec: MelonSpec) -> Tuple[Optional[int], List[int], List[int]]:
    """
    (index of the length-1 path or None, length-2 paths, paths of
    length >= 3), indices 1-based in spec order.
    """
    edge = next((i for i, n in enumerate(spec.lengths, start=1) if n == 1), None)
    short = [i for i, n in enumerate(spec.lengths, start=1) if n == 2]
    long = [i for i, n in enumerate(spec.lengths, start=1) if n >= 3]
    return edge, short, long


def _middles(spec: MelonSpec, short: Sequence[int]) -> List[str]:
    return [intermediate(i, 1) for i in short]


def _chain(spec: MelonSpec, i: int) -> List[str]:
    # a1..ak: from the vertex next to 0 to the vertex next to 0p.
    return list(reversed(path_vertices(spec, i)))


def _u(a: Sequence[str]) -> List[str]:
    out: List[str] = []
    for j in range(1, len(a)):
        out += [a[j], a[j - 1]]
    return out


def _v(b: Sequence[str]) -> List[str]:
    out: List[str] = []
    for j in range(len(b) - 1, 0, -1):
        out += [b[j - 1], b[j]]
    return out


def _checked(spec: MelonSpec, word: Sequence[str], what: str) -> Word:
    w = tuple(word)
    require_represents(w, build_melon(spec), f"{what} of {spec}")
    return w


def rep_word_all_short(spec: MelonSpec) -> Word:
    """
    2-uniform word of a melon whose paths have length at most 2
    ("0 0p" for the single edge).
    """
    edge, short, long = _paths_by_kind(spec)
    if long:
        raise SpecInvalidError(f"{spec}: all lengths must be at most 2")
    x = _middles(spec, short)
    if edge is not None:
        if not x:
            return (ZERO, ZERO_PRIME)
        word = x + [ZERO, ZERO_PRIME] + x[::-1] + [ZERO, ZERO_PRIME]
    else:
        word = [ZERO] + x + [ZERO, ZERO_PRIME] + x[::-1] + [ZERO_PRIME]
    return _checked(spec, word, "all-short word")


def rep2_one_long(spec: MelonSpec) -> Word:
    """
    "0 X a1 0 u 0p ak X^R 0p": one path of length >= 3, at least two
    paths of length 2, no edge.
    """
    edge, short, long = _paths_by_kind(spec)
    if edge is not None or len(long) != 1 or len(short) < 2:
        raise PreconditionError(
            f"{spec}: one long path and at least two length-2 paths required"
        )
    x, a = _middles(spec, short), _chain(spec, long[0])
    word = [ZERO] + x + [a[0], ZERO] + _u(a) + [ZERO_PRIME, a[-1]]
    word += x[::-1] + [ZERO_PRIME]
    return _checked(spec, word, "one-long word")


def rep2_two_long(spec: MelonSpec) -> Word:
    """
    "0 b1 X a1 0 u 0p ak X^R bk 0p v": two paths of length >= 3, the
    others of length 2, no edge.
    """
    edge, short, long = _paths_by_kind(spec)
    if edge is not None or len(long) != 2:
        raise PreconditionError(f"{spec}: exactly two long paths and no edge required")
    x = _middles(spec, short)
    a, b = _chain(spec, long[0]), _chain(spec, long[1])
    word = [ZERO, b[0]] + x + [a[0], ZERO] + _u(a) + [ZERO_PRIME, a[-1]]
    word += x[::-1] + [b[-1], ZERO_PRIME] + _v(b)
    return _checked(spec, word, "two-long word")


def rep2_one_long_with_edge(spec: MelonSpec) -> Word:
    """
    "X 0 0p X^R a1 0 u 0p ak": the edge, one path of length >= 3, the
    others of length 2.
    """
    edge, short, long = _paths_by_kind(spec)
    if edge is None or len(long) != 1:
        raise PreconditionError(f"{spec}: the edge and exactly one long path required")
    x, a = _middles(spec, short), _chain(spec, long[0])
    word = x + [ZERO, ZERO_PRIME] + x[::-1] + [a[0], ZERO] + _u(a)
    word += [ZERO_PRIME, a[-1]]
    return _checked(spec, word, "one-long word with edge")


def rep2_two_long_with_edge(spec: MelonSpec) -> Word:
    """
    "X b1 0 v^R 0p bk X^R a1 0 u 0p ak": the edge, two paths of length
    >= 3, the others of length 2.
    """
    edge, short, long = _paths_by_kind(spec)
    if edge is None or len(long) != 2:
        raise PreconditionError(f"{spec}: the edge and exactly two long paths required")
    x = _middles(spec, short)
    a, b = _chain(spec, long[0]), _chain(spec, long[1])
    word = x + [b[0], ZERO] + _v(b)[::-1] + [ZERO_PRIME, b[-1]] + x[::-1]
    word += [a[0], ZERO] + _u(a) + [ZERO_PRIME, a[-1]]
    return _checked(spec, word, "two-long word with edge")


def _melon_cycle(spec: MelonSpec) -> List[str]:
    return (
        [ZERO_PRIME]
        + path_vertices(spec, 1)
        + [ZERO]
        + list(reversed(path_vertices(spec, 2)))
    )


def circle_word(spec: MelonSpec) -> Tuple[str, Word]:
    """
    2-uniform word of a melon with at most two paths of length >= 3,
    together with the id of the construction used.
    """
    edge, short, long = _paths_by_kind(spec)
    if len(long) > 2:
        raise PreconditionError(f"{spec} has three or more long paths")
    if not long:
        word = rep_word_all_short(spec)
        if is_k_uniform(word) == 1:
            word = word + word
        return CASE_ALL_SHORT, word
    if spec.parts == 1:
        chain = [ZERO_PRIME] + path_vertices(spec, 1) + [ZERO]
        return CASE_PATH, _checked(spec, path_word(chain), "path word")
    if edge is None:
        if len(long) == 1:
            if spec.parts == 2:
                word = cycle_word(_melon_cycle(spec))
                return CASE_CYCLE, _checked(spec, word, "cycle word")
            return CASE_ONE_LONG, rep2_one_long(spec)
        return CASE_TWO_LONG, rep2_two_long(spec)
    if len(long) == 1:
        return CASE_ONE_LONG_EDGE, rep2_one_long_with_edge(spec)
    return CASE_TWO_LONG_EDGE, rep2_two_long_with_edge(spec)


def _submelon(
    spec: MelonSpec, paths: Sequence[int]
) -> Tuple[MelonSpec, Dict[str, str]]:
    """
    Melon made of the given paths, and the relabelling of its vertices
    to the vertex names of `spec`.
    """
    sub = MelonSpec([spec.lengths[i - 1] for i in paths])
    mapping = {}
    for j, i in enumerate(paths, start=1):
        for position in range(1, spec.lengths[i - 1]):
            mapping[intermediate(j, position)] = intermediate(i, position)
    return sub, mapping


def _complete_word(spec: MelonSpec) -> Word:
    return tuple(build_melon(spec).nodes)


def rep3_word(spec: MelonSpec) -> Word:
    """
    A word of uniformity at most 3 representing the melon.

    Complete melons get a permutation; comparability melons the
    flattened three-permutation realizer. Otherwise the melon made of
    the edge, the short paths and two long paths is represented by its
    2-uniform word lifted to 3-uniform, and every other long path is
    added by path extension between 0 and 0p.
    """
    g = build_melon(spec)
    if is_complete(g):
        return _complete_word(spec)
    if is_comparability_melon(spec) is not None:
        return melon_word(spec)
    edge, short, long = _paths_by_kind(spec)
    base = sorted(([edge] if edge is not None else []) + short + long[:2])
    sub, mapping = _submelon(spec, base)
    if is_complete(build_melon(sub)):
        word = _complete_word(sub)
    else:
        word = circle_word(sub)[1]
    word = raise_to(relabel(word, mapping), 3)
    for i in long[2:]:
        word = extend_path(word, ZERO, ZERO_PRIME, _chain(spec, i))
    try:
        require_represents(word, g, f"path extension of {spec}")
    except ConstructionError as e:
        logging.info("falling back to search for %s: %s", spec, e)
        budget = SearchBudget(
            max_vertices=g.number_of_nodes(),
            max_k=DEFAULT_MAX_K,
            node_limit=DEFAULT_NODE_LIMIT,
        )
        found = seeded_uniform_search(g, 3, word, budget)
        if found is None:
            raise ConstructionError(f"no 3-uniform word found for {spec}")
        word = found
    return word


def representation_number(spec: MelonSpec) -> RepVerdict:
    """
    Representation number of a melon graph.

    r = 1 for K2 and K3, r = 3 when at least three paths have length
    >= 3, r = 2 otherwise.

    Parameters
    ----------
    spec
        The melon.

    Returns
    -------
    RepVerdict
        r, an exactly r-uniform certificate and the reason.
    """
    g = build_melon(spec)
    if is_complete(g):
        return RepVerdict(1, _complete_word(spec), REASON_COMPLETE)
    if spec.count_at_least(3) >= 3:
        word = rep3_word(spec)
        if is_k_uniform(word) != 3:
            raise ConstructionError(f"rep3 word of {spec} is not 3-uniform")
        reason = REASON_M4 if spec.has_edge else REASON_M3
        return RepVerdict(3, word, reason)
    case, word = circle_word(spec)
    if is_k_uniform(word) != 2:
        raise ConstructionError(f"{case} word of {spec} is not 2-uniform")
    return RepVerdict(2, word, REASON_CIRCLE, case)


def book_rep_number(pages: int) -> RepVerdict:
    if pages < 1:
        raise SpecInvalidError("a book needs at least one page")
    return representation_number(MelonSpec((1,) + (3,) * pages))


def induced_core(spec: MelonSpec) -> MelonSpec:
    """
    The sub-melon witnessing r = 3: three longest long paths, plus the
    edge when present.
    """
    edge, _, long = _paths_by_kind(spec)
    if len(long) < 3:
        raise PreconditionError(f"{spec} has fewer than three long paths")
    chosen = sorted(long, key=lambda i: (-spec.lengths[i - 1], i))[:3]
    lengths = [spec.lengths[i - 1] for i in sorted(chosen)]
    return MelonSpec(([1] if edge is not None else []) + lengths)


def core_reduction(spec: MelonSpec) -> Tuple[MelonSpec, Tuple[Step, ...]]:
    """
    Vertex-minor steps from the induced core of spec to M_3 or B_3.
    """
    core = induced_core(spec)
    steps, _ = reduce_to_core(core)
    return core, steps
