"""
Tests for module: main.
"""

import json
from pathlib import Path

import pytest
import tomli_w

from melonrep.constants import (
    EXIT_FAILURE,
    EXIT_NODE_LIMIT,
    EXIT_PARSE_ERROR,
    EXIT_SIZE_GUARD,
    EXIT_VERIFICATION_FAILURE,
    REPORT_SCHEMA,
)
from melonrep.errors import (
    ConstructionError,
    FormatError,
    NodeLimitExceededError,
    NotComparabilityError,
    SizeGuardError,
    SpecInvalidError,
)
from melonrep.main import exit_code, run


@pytest.mark.parametrize(
    "error,code",
    [
        (SizeGuardError("big"), EXIT_SIZE_GUARD),
        (ConstructionError("bug"), EXIT_VERIFICATION_FAILURE),
        (NodeLimitExceededError("slow"), EXIT_NODE_LIMIT),
        (SpecInvalidError("bad"), EXIT_PARSE_ERROR),
        (FormatError("bad"), EXIT_PARSE_ERROR),
        (FileNotFoundError("gone"), EXIT_PARSE_ERROR),
        (NotComparabilityError("no"), EXIT_FAILURE),
    ],
)
def test_exit_code(error, code):
    """
    Test for function: main.exit_code.
    """
    # Check: Exit code per error kind.
    assert exit_code(error) == code


def test_analyze(capsys: pytest.CaptureFixture):
    """
    Test for function: main.cmd_analyze.
    """
    # Check: JSON report on stdout.
    assert run(["analyze", "1,3,3"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["schema"] == REPORT_SCHEMA
    assert report["input"]["spec"] == "1,3,3"
    assert report["melon"]["r"] == 2
    assert "oracle" not in report


def test_analyze_oracle(capsys: pytest.CaptureFixture):
    """
    Test for function: main.cmd_analyze.
    """
    # Check: Oracle section within the budget flags.
    assert run(["analyze", "2,2", "--oracle", "--max-k", "2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["oracle"]["melon"]["uniform"]["k"] == 2


@pytest.mark.parametrize(
    "spec,melon_r,line_r",
    [("3,3,3", 3, 3), ("1,", 1, 1), ("10", 2, 2)],
)
def test_analyze_values(spec, melon_r, line_r, capsys: pytest.CaptureFixture):
    """
    Test for function: main.cmd_analyze.
    """
    assert run(["analyze", spec]) == 0
    report = json.loads(capsys.readouterr().out)
    # Check: Representation numbers of the melon and of its line graph.
    assert report["melon"]["r"] == melon_r
    assert report["line"]["r"] == line_r


def test_analyze_comparability(capsys: pytest.CaptureFixture):
    """
    Test for function: main.cmd_analyze.
    """
    assert run(["analyze", "3,3,3"]) == 0
    report = json.loads(capsys.readouterr().out)
    # Check: Odd paths only, three permutations.
    assert report["melon"]["comparability"] == "SameParity"
    assert report["melon"]["prn"]["prn"] == 3


@pytest.mark.parametrize("spec", ["1,2,2,2", "1,2,2,2,2,2,2,2"])
def test_analyze_line_not_representable(spec, capsys: pytest.CaptureFixture):
    """
    Test for function: main.cmd_analyze.
    """
    assert run(["analyze", spec]) == 0
    report = json.loads(capsys.readouterr().out)
    # Check: The neighbourhood of e_0 refutes the line graph.
    assert report["line"]["word_representable"] is False
    assert report["line"]["refuter"] == "e_0"


@pytest.mark.parametrize(
    "args",
    [
        ["analyze", "1,3,3"],
        ["analyze", "2,2,2", "--oracle"],
        ["analyze", "3,4,3,4,2"],
        ["oracle", "Cycle:6"],
        ["oracle", "1,3,3"],
    ],
)
def test_output_is_deterministic(args, capsys: pytest.CaptureFixture):
    """
    Test for function: main.run.
    """
    outputs = []
    for _ in range(2):
        assert run(args) == 0
        outputs.append(capsys.readouterr().out)
    # Check: Byte-identical output of two runs.
    assert outputs[0] == outputs[1]


def test_analyze_invalid_spec(capsys: pytest.CaptureFixture):
    """
    Test for function: main.run.
    """
    # Check: Parse errors exit with 2 and a message on stderr.
    assert run(["analyze", "1,1"]) == EXIT_PARSE_ERROR
    assert capsys.readouterr().err.startswith("melonrep: ")


def test_check(tmp_dir: Path, capsys: pytest.CaptureFixture):
    """
    Test for function: main.cmd_check.
    """
    graph = tmp_dir / "p4.txt"
    graph.write_text("c1 c2\nc2 c3\nc3 c4\n")
    word = tmp_dir / "word.txt"
    word.write_text("c2 c1 c4 c3\nc4 c2 c3 c1\n")
    # Check: The word represents P4.
    assert run(["check", str(graph), str(word)]) == 0
    assert capsys.readouterr().out == "REPRESENTS, 2-uniform\n"
    # Check: The same word against C4.
    graph.write_text("c1 c2\nc2 c3\nc3 c4\nc4 c1\n")
    assert run(["check", str(graph), str(word)]) == EXIT_FAILURE
    out = capsys.readouterr().out
    assert out == "MISMATCH, c1 c4: do not alternate but adjacent\n"
    # Check: Missing word file.
    assert run(["check", str(graph), str(tmp_dir / "none.txt")]) == EXIT_PARSE_ERROR


@pytest.mark.parametrize(
    "what,header",
    [
        ("graph", 'graph "M_2_2" {'),
        ("line", 'graph "LM_2_2" {'),
        ("hasse", 'digraph "HM_2_2" {'),
    ],
)
def test_dot(what: str, header: str, capsys: pytest.CaptureFixture):
    """
    Test for function: main.cmd_dot.
    """
    # Check: Named DOT output.
    assert run(["dot", "2,2", "--what", what]) == 0
    assert capsys.readouterr().out.splitlines()[0] == header


def test_dot_hasse_not_comparability():
    """
    Test for function: main.cmd_dot.
    """
    # Check: No Hasse diagram for C5.
    assert run(["dot", "2,3", "--what", "hasse"]) == EXIT_FAILURE


def test_oracle(capsys: pytest.CaptureFixture):
    """
    Test for function: main.cmd_oracle.
    """
    # Check: Both searches on a named graph.
    assert run(["oracle", "Cycle:5"]) == 0
    content = json.loads(capsys.readouterr().out)
    assert content["input"] == {"target": "Cycle:5", "vertices": 5, "edges": 5}
    assert content["uniform"]["k"] == 2
    assert content["perm"]["k"] is None
    # Check: Only the permutation search, on a melon spec.
    assert run(["oracle", "2,2", "--perm"]) == 0
    content = json.loads(capsys.readouterr().out)
    assert content["perm"]["k"] == 2
    assert "uniform" not in content


def test_oracle_errors(tmp_dir: Path):
    """
    Test for function: main.cmd_oracle.
    """
    # Check: Size guard, node limit, bad parameters.
    assert run(["oracle", "Path:11"]) == EXIT_SIZE_GUARD
    assert run(["oracle", "Cycle:5", "--node-limit", "1"]) == EXIT_NODE_LIMIT
    assert run(["oracle", "Cycle:x"]) == EXIT_PARSE_ERROR
    # Check: Budget read from the configuration file.
    config = tmp_dir / "melonrep.toml"
    with open(config, "wb") as f:
        tomli_w.dump({"budget": {"max_vertices": 4}}, f)
    assert run(["--config", str(config), "oracle", "Cycle:5"]) == EXIT_SIZE_GUARD


def test_sweep(tmp_dir: Path, capsys: pytest.CaptureFixture):
    """
    Test for function: main.cmd_sweep.
    """
    output = tmp_dir / "summary.toml"
    argv = ["sweep", "--max-parts", "2", "--max-length", "2", "--workers", "1"]
    # Check: Summary written, no failure.
    assert run(argv + ["--quiet", "--output", str(output)]) == 0
    assert output.is_file()
    assert capsys.readouterr().out.startswith("4 specs, 0 failed")


def test_version():
    """
    Test for function: main.run.
    """
    # Check: argparse exits after printing the version.
    with pytest.raises(SystemExit):
        run(["--version"])
