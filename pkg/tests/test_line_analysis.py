"""
Tests for module: line_analysis.
"""

import pytest

from melonrep.errors import NotWordRepresentableError, PreconditionError
from melonrep.graph_core import (
    MelonSpec,
    build_named,
    cycle_graph,
    is_complete,
    is_isomorphic,
    km_box_k2,
    path_graph,
    prism3,
    replay,
)
from melonrep.line_analysis import (
    CLASS_A2,
    CLASS_CYCLE,
    CLASS_NONE,
    CLASS_PATH,
    CLASS_TRIANGLE,
    h_perms,
    km_k2_word,
    line_comparability,
    line_cycle_realizer,
    line_noncomparability_witness,
    line_prism_minor,
    line_rep_number,
    line_verdict,
    line_word_adjacent,
    line_word_nonadjacent,
    line_word_representable,
    melon_line_graph,
    path_edges,
)
from melonrep.words import is_k_uniform, parse_word, represents


def _expected_line_r(spec: MelonSpec) -> int:
    if is_complete(melon_line_graph(spec)):
        return 1
    if spec.count_at_least(2) >= 3:
        return 3
    return 2


def test_path_edges():
    """
    Test for function: line_analysis.path_edges.
    """
    # Check: From the 0 side to the 0p side.
    assert path_edges(MelonSpec((4,)), 1) == ["e1", "e1_2", "e1_1", "e1p"]
    assert path_edges(MelonSpec((3, 2)), 2) == ["e2", "e2p"]
    assert path_edges(MelonSpec((2, 1)), 2) == ["e_0"]


def test_melon_line_graph():
    """
    Test for function: line_analysis.melon_line_graph.
    """
    g = melon_line_graph(MelonSpec((2, 2, 2)))
    # Check: Vertex order path by path, from the 0p side.
    assert list(g.nodes) == ["e1p", "e1", "e2p", "e2", "e3p", "e3"]
    # Check: Three paths of length 2 give K3 x K2.
    assert is_isomorphic(g, prism3()) is not None
    # Check: A single path gives a path, two paths a cycle.
    assert is_isomorphic(melon_line_graph(MelonSpec((5,))), path_graph(5))
    assert is_isomorphic(melon_line_graph(MelonSpec((3, 4))), cycle_graph(7))


@pytest.mark.parametrize(
    "lengths,representable",
    [
        ((1, 2, 2, 2), False),
        ((1, 2, 2, 2, 3), False),
        ((1, 2, 2), True),
        ((2, 2, 2, 2), True),
        ((1, 2, 2, 3, 3), True),
    ],
)
def test_line_word_representable(lengths, representable):
    """
    Test for function: line_analysis.line_word_representable.
    """
    # Check: Only melons containing the triangular book A_3 fail.
    assert line_word_representable(MelonSpec(lengths)) == representable


def test_km_k2_word():
    """
    Test for function: line_analysis.km_k2_word.
    """
    word = km_k2_word(3)
    # Check: Golden word of K3 x K2.
    assert word == parse_word(
        "e1 e2 e3 e1p e1 e2p e2 e3p e3 e1p e2p e3p e1 e1p e2 e2p e3 e3p"
    )
    for m in (1, 2, 4, 5):
        w = km_k2_word(m)
        assert is_k_uniform(w) == 3
        assert represents(w, km_box_k2(m))


def test_h_perms():
    """
    Test for function: line_analysis.h_perms.
    """
    realizer = h_perms(3)
    # Check: Golden permutations of H(3).
    assert realizer.perms == (
        tuple("a1 b2 a3 b3 a2 b1 x".split()),
        tuple("a1 a3 b2 a2 b3 b1 x".split()),
        tuple("b2 b3 a1 b1 a3 a2 x".split()),
    )
    for m in (2, 4, 5):
        assert h_perms(m).represents(build_named("H", m))
    with pytest.raises(PreconditionError):
        h_perms(1)


@pytest.mark.parametrize(
    "lengths,r",
    [
        ((1,), 1),
        ((2,), 1),
        ((1, 2), 1),
        ((5,), 2),
        ((2, 2), 2),
        ((3, 3), 2),
        ((1, 2, 2), 2),
        ((1, 3, 4), 2),
        ((2, 2, 2), 3),
        ((3, 2, 5, 4), 3),
        ((1, 2, 2, 3), 3),
        ((1, 3, 4, 5), 3),
    ],
)
def test_line_rep_number(lengths, r):
    """
    Test for function: line_analysis.line_rep_number.
    """
    spec = MelonSpec(lengths)
    verdict = line_rep_number(spec)
    # Check: r and an r-uniform certificate of L(M).
    assert verdict.r == r
    assert is_k_uniform(verdict.certificate) == r
    assert represents(verdict.certificate, melon_line_graph(spec))


def test_line_rep_number_random(melon_spec: MelonSpec):
    """
    Test for function: line_analysis.line_rep_number.
    """
    if not line_word_representable(melon_spec):
        # Check: Melons with A_3 are refused.
        with pytest.raises(NotWordRepresentableError):
            line_rep_number(melon_spec)
        return
    verdict = line_rep_number(melon_spec)
    # Check: Value of r and a valid certificate.
    assert verdict.r == _expected_line_r(melon_spec)
    assert represents(verdict.certificate, melon_line_graph(melon_spec))


def test_word_preconditions():
    """
    Test for functions: line_analysis.line_word_adjacent,
    line_analysis.line_word_nonadjacent.
    """
    # Check: Each construction needs its own shape.
    with pytest.raises(PreconditionError):
        line_word_nonadjacent(MelonSpec((1, 2, 2)))
    with pytest.raises(PreconditionError):
        line_word_adjacent(MelonSpec((2, 2, 2)))
    with pytest.raises(PreconditionError):
        line_word_adjacent(MelonSpec((1, 2, 2, 2)))


@pytest.mark.parametrize(
    "lengths,cls,n,prn",
    [
        ((2,), CLASS_PATH, 2, 1),
        ((5,), CLASS_PATH, 5, 2),
        ((2, 2), CLASS_CYCLE, 4, 2),
        ((3, 3), CLASS_CYCLE, 6, 3),
        ((1, 3), CLASS_CYCLE, 4, 2),
        ((1, 2), CLASS_TRIANGLE, 3, 1),
        ((1, 2, 2), CLASS_A2, None, 2),
        ((1, 4), CLASS_NONE, None, None),
        ((2, 2, 2), CLASS_NONE, None, None),
        ((1, 3, 3), CLASS_NONE, None, None),
    ],
)
def test_line_comparability(lengths, cls, n, prn):
    """
    Test for function: line_analysis.line_comparability.
    """
    # Check: Class, size parameter and prn.
    assert line_comparability(MelonSpec(lengths)) == (cls, n, prn)


def test_line_noncomparability_witness():
    """
    Test for function: line_analysis.line_noncomparability_witness.
    """
    # Check: L of three length-2 paths is the prism itself.
    assert line_noncomparability_witness(MelonSpec((2, 2, 2))) == "Prism3"
    # Check: An odd line cycle.
    assert line_noncomparability_witness(MelonSpec((2, 3))) == "C5"
    assert line_noncomparability_witness(MelonSpec((1, 2, 3))) is not None
    # Check: Comparability line graphs and large line graphs.
    assert line_noncomparability_witness(MelonSpec((3, 3))) is None
    assert line_noncomparability_witness(MelonSpec((5, 5, 5))) is None


def test_line_cycle_realizer():
    """
    Test for function: line_analysis.line_cycle_realizer.
    """
    spec = MelonSpec((3, 3))
    realizer = line_cycle_realizer(spec)
    # Check: Three permutations of the line cycle.
    assert realizer.k == 3
    assert realizer.represents(melon_line_graph(spec))
    with pytest.raises(PreconditionError):
        line_cycle_realizer(MelonSpec((2, 2)))


def test_line_verdict_not_representable():
    """
    Test for function: line_analysis.line_verdict.
    """
    verdict = line_verdict(MelonSpec((1, 2, 2, 2)))
    # Check: e_0 sees K3 x K2.
    assert not verdict.word_representable
    assert verdict.refuter == "e_0"
    assert verdict.r is None
    assert verdict.to_dict() == {
        "word_representable": False,
        "refuter": "e_0",
        "comparability_class": CLASS_NONE,
        "witness": "Prism3",
    }


def test_line_verdict_large_neighbourhood():
    """
    Test for function: line_analysis.line_verdict.
    """
    verdict = line_verdict(MelonSpec((1,) + (2,) * 7))
    # Check: Refuted by e_0; too large for the witness search.
    assert not verdict.word_representable
    assert verdict.refuter == "e_0"
    assert verdict.witness is None


def test_line_verdict():
    """
    Test for function: line_analysis.line_verdict.
    """
    verdict = line_verdict(MelonSpec((3, 3)))
    d = verdict.to_dict()
    # Check: Even line cycle.
    assert d["word_representable"]
    assert d["r"] == 2
    assert d["comparability_class"] == CLASS_CYCLE
    assert d["prn"] == 3
    assert "witness" not in d
    # Check: The witness search can be skipped.
    assert line_verdict(MelonSpec((2, 2, 2)), witness=False).witness is None


@pytest.mark.parametrize(
    "lengths,deletes",
    [((2, 2, 2), 0), ((2, 3, 4), 3), ((1, 2, 2, 2, 3), 4), ((4, 1, 5, 2), 6)],
)
def test_line_prism_minor(lengths, deletes):
    """
    Test for function: line_analysis.line_prism_minor.
    """
    spec = MelonSpec(lengths)
    steps, reduced = line_prism_minor(spec)
    # Check: The result is K3 x K2.
    assert is_isomorphic(reduced, prism3()) is not None
    # Check: Replaying the steps gives the same graph.
    assert is_isomorphic(replay(melon_line_graph(spec), steps), prism3())
    # Check: One deletion per vertex not in the prism.
    assert sum(1 for op, _ in steps if op == "delete") == deletes


def test_line_prism_minor_too_few_paths():
    """
    Test for function: line_analysis.line_prism_minor.
    """
    # Check: Fewer than three paths of length >= 2.
    with pytest.raises(PreconditionError):
        line_prism_minor(MelonSpec((1, 2, 2)))
