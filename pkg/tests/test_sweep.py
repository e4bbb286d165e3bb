"""
Tests for module: sweep.
"""

from pathlib import Path

import pytest
import toml

import melonrep.sweep
from melonrep.graph_core import MelonSpec
from melonrep.sweep import (
    check_spec,
    enumerate_specs,
    summary_row,
    sweep,
    write_summary,
)


def test_enumerate_specs():
    """
    Test for function: sweep.enumerate_specs.
    """
    specs = enumerate_specs(max_parts=2, max_length=2)
    # Check: Multisets with at most one edge.
    assert specs == [
        MelonSpec((1,)),
        MelonSpec((2,)),
        MelonSpec((1, 2)),
        MelonSpec((2, 2)),
    ]
    # Check: Size of a larger enumeration (3 + 5 + 7 multisets).
    assert len(enumerate_specs(max_parts=3, max_length=3)) == 3 + 5 + 7


def test_check_spec():
    """
    Test for function: sweep.check_spec.
    """
    row = check_spec(MelonSpec((1, 2)))
    # Check: Summary of the triangle.
    assert row == {
        "r": 1,
        "reason": "CompleteK2K3",
        "comparability": "EdgeAndShortEvens",
        "prn": 1,
        "line_word_representable": True,
        "line_r": 1,
        "line_class": "LK3",
        "line_prn": 1,
    }


def test_summary_row_drops_none():
    """
    Test for function: sweep.summary_row.
    """
    row = check_spec(MelonSpec((1, 2, 2, 2)))
    # Check: No line r for a line graph that is not word-representable.
    assert row is not None
    assert row["line_word_representable"] is False
    assert "line_r" not in row
    assert "line_prn" not in row
    assert None not in row.values()


def test_check_spec_error(monkeypatch: pytest.MonkeyPatch):
    """
    Test for function: sweep.check_spec.
    """

    def _failing(spec, witness=True):
        raise RuntimeError("no report")

    monkeypatch.setattr(melonrep.sweep, "melon_report", _failing)
    # Check: Logged and skipped, or raised.
    assert check_spec(MelonSpec((2, 2))) is None
    with pytest.raises(RuntimeError):
        check_spec(MelonSpec((2, 2)), skip_error=False)


def test_sweep_and_summary(tmp_dir: Path):
    """
    Test for functions: sweep.sweep, sweep.write_summary.
    """
    specs = enumerate_specs(max_parts=2, max_length=3)
    summary = sweep(specs, nb_workers=1, progress=False)
    # Check: One row per spec, in order, none failed.
    assert list(summary) == [str(spec) for spec in specs]
    assert not any(row.get("failed") for row in summary.values())
    assert summary["3,3"]["line_class"] == "LC_2n"
    assert summary["2,3"]["r"] == 2
    # Check: The TOML summary reads back.
    path = write_summary(summary, tmp_dir / "sweep.toml")
    assert toml.load(path) == summary


def test_summary_row():
    """
    Test for function: sweep.summary_row.
    """
    report = {
        "melon": {
            "r": 2,
            "reason": "CircleConstruction",
            "comparability": None,
            "prn": None,
        },
        "line": {"word_representable": True, "r": 2, "comparability_class": "LP_n"},
    }
    # Check: Flat row without absent values.
    assert summary_row(report) == {
        "r": 2,
        "reason": "CircleConstruction",
        "line_word_representable": True,
        "line_r": 2,
        "line_class": "LP_n",
    }
