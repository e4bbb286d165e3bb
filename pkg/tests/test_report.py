"""
Tests for module: report.
"""

import json

import pytest

from melonrep.config import SearchBudget
from melonrep.constants import REPORT_SCHEMA
from melonrep.errors import ConstructionError
from melonrep.graph_core import MelonSpec, cycle_graph, path_graph
from melonrep.report import NOT_COMPARABILITY, melon_report, oracle_section, verified
from melonrep.words import parse_word


def test_verified():
    """
    Test for function: report.verified.
    """
    word = parse_word("c2 c1 c4 c3 c4 c2 c3 c1")
    # Check: Certificate entry of a valid word.
    assert verified(word, path_graph(4), "P4") == {
        "word": "c2 c1 c4 c3 c4 c2 c3 c1",
        "uniformity": 2,
    }
    # Check: A word of another graph is refused.
    with pytest.raises(ConstructionError):
        verified(word, cycle_graph(4), "C4")


def test_report_two_paths():
    """
    Test for function: report.melon_report.
    """
    report = melon_report(MelonSpec((3, 3)))
    # Check: Header.
    assert report["schema"] == REPORT_SCHEMA
    assert report["input"] == {"spec": "3,3", "vertices": 6, "edges": 6}
    # Check: Melon section.
    melon = report["melon"]
    assert melon["r"] == 2
    assert melon["certificate"]["uniformity"] == 2
    assert melon["comparability"] == "SameParity"
    assert melon["prn"]["prn"] == 3
    assert melon["prn"]["realizer_check"]["uniformity"] == 3
    assert melon["hasse"]["case"] == "II"
    # Check: Line section.
    line = report["line"]
    assert line["r"] == 2
    assert line["comparability_class"] == "LC_2n"
    assert line["prn"] == 3
    # Check: No oracle nor timings by default.
    assert "oracle" not in report
    assert "timings" not in report
    # Check: JSON-ready.
    json.dumps(report)


def test_report_three_long_paths():
    """
    Test for function: report.melon_report.
    """
    report = melon_report(MelonSpec((3, 3, 4)))
    # Check: r = 3 with its core and the line prism minor.
    assert report["melon"]["r"] == 3
    assert report["melon"]["reason"] == "InducedM3"
    assert report["melon"]["core"] == {"spec": "3,3,4", "steps": 2}
    assert report["melon"]["comparability"] is None
    assert report["melon"]["prn"] is None
    assert report["line"]["r"] == 3
    assert report["line"]["prism_minor_steps"] == 2 * (1 + 1 + 2)


def test_report_line_not_representable():
    """
    Test for function: report.melon_report.
    """
    line = melon_report(MelonSpec((1, 2, 2, 2)))["line"]
    # Check: Refuted by the neighbourhood of e_0.
    assert line["word_representable"] is False
    assert line["refuter"] == "e_0"
    assert "r" not in line
    assert "certificate" not in line


def test_report_oracle():
    """
    Test for function: report.melon_report.
    """
    report = melon_report(MelonSpec((2, 2)), oracle=True, timings=True)
    oracle = report["oracle"]
    # Check: C4 and its line graph C4.
    assert oracle["melon"]["uniform"]["k"] == 2
    assert oracle["melon"]["perm"]["k"] == 2
    assert oracle["line"]["uniform"]["k"] == 2
    assert "perm" not in oracle["line"]
    # Check: Oracle and constructions agree.
    assert oracle["agrees"] == {"r": True, "prn": True, "line_r": True}
    # Check: Timed sections.
    assert set(report["timings"]) == {"melon", "line", "oracle"}


def test_oracle_section():
    """
    Test for function: report.oracle_section.
    """
    # Check: Graphs over budget are skipped.
    assert oracle_section(path_graph(5), SearchBudget(max_vertices=4)) == {
        "skipped": "more than 4 vertices"
    }
    # Check: C5 has no transitive orientation.
    section = oracle_section(cycle_graph(5), SearchBudget())
    assert section["uniform"]["k"] == 2
    assert section["perm"] == {
        "k": None,
        "result": NOT_COMPARABILITY,
        "exhaustive": True,
    }
