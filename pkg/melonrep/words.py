"""
Words over vertex labels and their alternation semantics.

A word represents a graph when two vertices are adjacent exactly if
their occurrences alternate in the word.
"""

from collections import Counter
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .constants import EMPTY_WORD_TOKEN
from .errors import (
    ConstructionError,
    EmptyWordError,
    MissingLetterError,
    PreconditionError,
    UnknownLetterError,
)
from .graph_core import Graph, make_graph

Word = Tuple[str, ...]


def parse_word(text: str) -> Word:
    """
    Whitespace-separated tokens; "eps" is the empty word.
    """
    tokens = tuple(text.split())
    if tokens == (EMPTY_WORD_TOKEN,):
        return ()
    return tokens


def format_word(w: Sequence[str]) -> str:
    if not w:
        return EMPTY_WORD_TOKEN
    return " ".join(w)


def alternates(w: Sequence[str], a: str, b: str) -> bool:
    """
    True iff the restriction of w to {a, b} is a strictly alternating
    sequence (abab... or baba...).
    """
    previous: Optional[str] = None
    for letter in w:
        if letter == a or letter == b:
            if letter == previous:
                return False
            previous = letter
    return True


def _check_letters(w: Sequence[str], vs: Iterable[str]) -> List[str]:
    vertices = list(vs)
    known = set(vertices)
    for letter in w:
        if letter not in known:
            raise UnknownLetterError(f"letter {letter} is not a vertex")
    present = set(w)
    for v in vertices:
        if v not in present:
            raise MissingLetterError(f"vertex {v} does not occur in the word")
    return vertices


def alternation_graph(w: Sequence[str], vs: Iterable[str]) -> Graph:
    vertices = _check_letters(w, vs)
    edges = [
        (a, b)
        for i, a in enumerate(vertices)
        for b in vertices[i + 1 :]
        if alternates(w, a, b)
    ]
    return make_graph(vertices, edges)


def mismatches(w: Sequence[str], g: Graph) -> List[Tuple[str, str]]:
    """
    Vertex pairs on which w and g disagree (alternation against
    adjacency), in vertex order.
    """
    vertices = _check_letters(w, g.nodes)
    return [
        (a, b)
        for i, a in enumerate(vertices)
        for b in vertices[i + 1 :]
        if alternates(w, a, b) != g.has_edge(a, b)
    ]


def represents(w: Sequence[str], g: Graph) -> bool:
    return not mismatches(w, g)


def require_represents(w: Sequence[str], g: Graph, what: str) -> None:
    """
    Raise ConstructionError naming the first disagreeing pair if w does
    not represent g.
    """
    bad = mismatches(w, g)
    if bad:
        a, b = bad[0]
        state = "alternate" if alternates(w, a, b) else "do not alternate"
        raise ConstructionError(
            f"{what}: {a} and {b} {state} but adjacency is {g.has_edge(a, b)} "
            f"({len(bad)} disagreeing pairs)"
        )


def is_k_uniform(w: Sequence[str]) -> Optional[int]:
    if not w:
        raise EmptyWordError("uniformity of the empty word")
    counts = set(Counter(w).values())
    if len(counts) == 1:
        return counts.pop()
    return None


def restrict(w: Sequence[str], s: Iterable[str]) -> Word:
    keep = set(s)
    return tuple(letter for letter in w if letter in keep)


def reverse(w: Sequence[str]) -> Word:
    return tuple(reversed(w))


def cyclic_shift(w: Sequence[str], i: int = 1) -> Word:
    """
    Move the first i letters to the end. For uniform words the
    represented graph is unchanged.
    """
    if not w:
        return ()
    i %= len(w)
    return tuple(w[i:]) + tuple(w[:i])


def initial_permutation(w: Sequence[str]) -> Word:
    """
    Letters of w in order of first occurrence.
    """
    return tuple(dict.fromkeys(w))


def raise_uniformity(w: Sequence[str]) -> Word:
    """
    Prepend the first-occurrence permutation: a k-uniform representant
    becomes a (k+1)-uniform representant of the same graph.
    """
    if is_k_uniform(w) is None:
        raise PreconditionError("raise_uniformity needs a uniform word")
    return initial_permutation(w) + tuple(w)


def raise_to(w: Sequence[str], k: int) -> Word:
    current = is_k_uniform(w)
    if current is None or current > k:
        raise PreconditionError(f"cannot raise a {current}-uniform word to {k}")
    lifted = tuple(w)
    for _ in range(k - current):
        lifted = raise_uniformity(lifted)
    return lifted


def relabel(w: Sequence[str], mapping: Dict[str, str]) -> Word:
    return tuple(mapping.get(letter, letter) for letter in w)


class PermSequence:
    """
    A word factored into k permutations of one vertex set.
    """

    def __init__(self, vertex_set: Sequence[str], perms: Sequence[Sequence[str]]):
        self.vertex_set: Word = tuple(vertex_set)
        self.perms: Tuple[Word, ...] = tuple(tuple(p) for p in perms)
        expected = sorted(self.vertex_set)
        if len(set(self.vertex_set)) != len(self.vertex_set):
            raise PreconditionError("repeated vertex in the vertex set")
        for index, p in enumerate(self.perms, start=1):
            if sorted(p) != expected:
                raise PreconditionError(
                    f"permutation {index} ({format_word(p)}) is not a "
                    "permutation of the vertex set"
                )

    @classmethod
    def from_word(cls, w: Sequence[str], vertex_set: Sequence[str]) -> "PermSequence":
        n = len(vertex_set)
        if n == 0 or len(w) % n:
            raise PreconditionError("word length is not a multiple of |V|")
        return cls(vertex_set, [w[i : i + n] for i in range(0, len(w), n)])

    @property
    def k(self) -> int:
        return len(self.perms)

    def flatten(self) -> Word:
        return tuple(letter for p in self.perms for letter in p)

    def represents(self, g: Graph) -> bool:
        return represents(self.flatten(), g)

    def append_last(self) -> "PermSequence":
        """
        Repeat the final permutation (p q becomes p q q).
        """
        return PermSequence(self.vertex_set, self.perms + self.perms[-1:])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermSequence):
            return NotImplemented
        return self.perms == other.perms and set(self.vertex_set) == set(
            other.vertex_set
        )

    def __repr__(self) -> str:
        return "PermSequence(" + " | ".join(format_word(p) for p in self.perms) + ")"


# Rewrites of uniform representants.


def _in_cyclic_gap(p: int, a: int, b: int) -> bool:
    if a < b:
        return a < p < b
    return p > a or p < b


def extend_path(
    w: Sequence[str], x: str, y: str, chain: Sequence[str]
) -> Word:
    """
    Rewrite a 3-uniform representant of G into a 3-uniform
    representant of G plus a new path x - c1 - ... - ct - y.

    Parameters
    ----------
    w
        3-uniform word.
    x, y
        Distinct letters of w.
    chain
        New letters c1..ct, t >= 2.

    Returns
    -------
    Word
        One occurrence of x is replaced by "c1 x c2 .. ct c1" and one
        occurrence of y by "c2 c1 c3 c2 .. ct c(t-1) y ct".
    """
    if x == y:
        raise PreconditionError("path extension needs distinct end letters")
    if len(chain) < 2:
        raise PreconditionError("path extension needs at least two new letters")
    if is_k_uniform(w) != 3:
        raise PreconditionError("path extension needs a 3-uniform word")
    xs = [i for i, letter in enumerate(w) if letter == x]
    ys = [i for i, letter in enumerate(w) if letter == y]
    for i in range(3):
        for j in range(3):
            if _in_cyclic_gap(
                ys[j], xs[(i + 1) % 3], xs[(i + 2) % 3]
            ) and _in_cyclic_gap(xs[i], ys[(j + 1) % 3], ys[(j + 2) % 3]):
                c = list(chain)
                x_block = [c[0], x] + c[1:] + [c[0]]
                y_block: List[str] = []
                for k in range(1, len(c)):
                    y_block += [c[k], c[k - 1]]
                y_block += [y, c[-1]]
                out: List[str] = []
                for position, letter in enumerate(w):
                    if position == xs[i]:
                        out.extend(x_block)
                    elif position == ys[j]:
                        out.extend(y_block)
                    else:
                        out.append(letter)
                return tuple(out)
    raise ConstructionError(f"no occurrence pair of {x} and {y} admits the extension")


def subdivision_target(
    w: Sequence[str], u: str, v: str, y: str, separate: bool
) -> Graph:
    """
    Graph of w with y attached to u and v; u and v become non-adjacent
    when `separate` is set.
    """
    vertices = list(initial_permutation(w))
    edges = [
        (a, b)
        for i, a in enumerate(vertices)
        for b in vertices[i + 1 :]
        if alternates(w, a, b) and not (separate and {a, b} == {u, v})
    ]
    return make_graph(vertices + [y], edges + [(y, u), (y, v)])


def subdivide(w: Sequence[str], u: str, v: str, y: str, swap: bool) -> Word:
    """
    Add the letter y, adjacent to u and v only, by rewriting a factor
    "u v" (or "v u") of w.

    The factor becomes "y b a y" when `swap` is set (u and v stop being
    adjacent) and "y a b y" otherwise; a third y is placed at the first
    position, scanning cyclically from the factor, for which the word
    represents `subdivision_target(w, u, v, y, swap)`.

    Raises
    ------
    ConstructionError
        If no factor and position give a representant of the target.
    """
    if is_k_uniform(w) != 3:
        raise PreconditionError("subdivide needs a 3-uniform word")
    if y in w:
        raise PreconditionError(f"letter {y} already occurs in the word")
    target = subdivision_target(w, u, v, y, swap)
    for p in range(len(w) - 1):
        if {w[p], w[p + 1]} != {u, v}:
            continue
        a, b = w[p], w[p + 1]
        middle = (b, a) if swap else (a, b)
        base = tuple(w[:p]) + (y,) + middle + (y,) + tuple(w[p + 2 :])
        positions = list(range(p + 4, len(base) + 1)) + list(range(0, p + 1))
        for index in positions:
            candidate = base[:index] + (y,) + base[index:]
            if represents(candidate, target):
                return candidate
    raise ConstructionError(f"cannot subdivide the factor {u} {v} with {y}")
