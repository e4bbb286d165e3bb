import argparse
import json
import logging
from pathlib import Path
import sys
from typing import Any, Dict, List, Optional, Sequence

from .comparability import hasse_orientation
from .config import SearchBudget, load_budget
from .constants import (
    DOT_MODES,
    EXIT_FAILURE,
    EXIT_NODE_LIMIT,
    EXIT_PARSE_ERROR,
    EXIT_SIZE_GUARD,
    EXIT_VERIFICATION_FAILURE,
    REPORT_SCHEMA,
    SWEEP_MAX_LENGTH,
    SWEEP_MAX_PARTS,
)
from .errors import (
    ConstructionError,
    MelonrepError,
    NodeLimitExceededError,
    SizeGuardError,
    SpecInvalidError,
)
from .graph_core import NAMED_GRAPHS, Graph, MelonSpec, build_melon, build_named
from .graph_io import graph_to_dot, read_edge_list
from .line_analysis import melon_line_graph
from .report import melon_report, oracle_section
from .sweep import enumerate_specs, sweep, write_summary
from .version import __version__
from .words import alternates, is_k_uniform, mismatches, parse_word


def exit_code(error: Exception) -> int:
    """
    Process exit code for an error raised by a command.
    """
    if isinstance(error, SizeGuardError):
        return EXIT_SIZE_GUARD
    if isinstance(error, ConstructionError):
        return EXIT_VERIFICATION_FAILURE
    if isinstance(error, NodeLimitExceededError):
        return EXIT_NODE_LIMIT
    # Bad specs, words, edge lists, budgets and missing files.
    if isinstance(error, (ValueError, KeyError, FileNotFoundError)):
        return EXIT_PARSE_ERROR
    return EXIT_FAILURE


def _budget(args: argparse.Namespace) -> SearchBudget:
    budget = load_budget(Path(args.config)) if args.config else SearchBudget()
    return budget.updated(
        max_vertices=args.max_vertices, max_k=args.max_k, node_limit=args.node_limit
    )


def _emit_json(content: Dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(content, indent=2) + "\n")


def _target_graph(target: str) -> Graph:
    """
    An edge-list file, a named graph ("Prism3", "Cycle:6",
    "CompleteBipartite:2,3") or a melon spec ("3,3,3").
    """
    path = Path(target)
    if path.is_file():
        return read_edge_list(path)
    name, _, params = target.partition(":")
    if name in NAMED_GRAPHS:
        try:
            values = [int(p) for p in params.split(",") if p.strip()]
        except ValueError:
            raise SpecInvalidError(f"cannot parse parameters of {target!r}")
        return build_named(name, *values)
    return build_melon(MelonSpec.parse(target))


def cmd_analyze(args: argparse.Namespace) -> int:
    spec = MelonSpec.parse(args.spec)
    report = melon_report(
        spec, budget=_budget(args), oracle=args.oracle, timings=args.timings
    )
    _emit_json(report)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    g = read_edge_list(Path(args.graph_file))
    word_path = Path(args.word_file)
    if not word_path.is_file():
        raise FileNotFoundError(f"word file {word_path} not found")
    with open(word_path, "r") as f:
        word = parse_word(f.read())
    bad = mismatches(word, g)
    if bad:
        a, b = bad[0]
        state = "alternate" if alternates(word, a, b) else "do not alternate"
        adjacency = "adjacent" if g.has_edge(a, b) else "not adjacent"
        sys.stdout.write(f"MISMATCH, {a} {b}: {state} but {adjacency}\n")
        return EXIT_FAILURE
    k = is_k_uniform(word) if word else None
    uniformity = f"{k}-uniform" if k is not None else "not uniform"
    sys.stdout.write(f"REPRESENTS, {uniformity}\n")
    return 0


def cmd_dot(args: argparse.Namespace) -> int:
    spec = MelonSpec.parse(args.spec)
    name = "M_" + "_".join(str(n) for n in spec.lengths)
    if args.what == "graph":
        dot = graph_to_dot(build_melon(spec), name=name)
    elif args.what == "line":
        dot = graph_to_dot(melon_line_graph(spec), name="L" + name)
    else:
        dot = hasse_orientation(spec).to_dot(name="H" + name)
    sys.stdout.write(dot)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _target_graph(args.target)
    both = not args.uniform and not args.perm
    content: Dict[str, Any] = {
        "schema": REPORT_SCHEMA,
        "input": {
            "target": args.target,
            "vertices": g.number_of_nodes(),
            "edges": g.number_of_edges(),
        },
    }
    budget = _budget(args)
    if g.number_of_nodes() > budget.max_vertices:
        raise SizeGuardError(
            f"oracle search on {g.number_of_nodes()} vertices "
            f"(bound {budget.max_vertices})"
        )
    content.update(
        oracle_section(g, budget, uniform=both or args.uniform, perm=both or args.perm)
    )
    _emit_json(content)
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    specs = enumerate_specs(args.max_parts, args.max_length)
    kwargs: Dict[str, Any] = {"skip_error": not args.strict, "progress": not args.quiet}
    if args.workers is not None:
        kwargs["nb_workers"] = args.workers
    summary = sweep(specs, **kwargs)
    path = write_summary(summary, Path(args.output) if args.output else None)
    failed = [spec for spec, row in summary.items() if row.get("failed")]
    sys.stdout.write(f"{len(summary)} specs, {len(failed)} failed, summary: {path}\n")
    return EXIT_VERIFICATION_FAILURE if failed else 0


def _add_budget_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-vertices", type=int, default=None)
    parser.add_argument("--max-k", type=int, default=None)
    parser.add_argument("--node-limit", type=int, default=None)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="melonrep",
        description="word-representability of melon graphs and their line graphs",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--verbose", action="store_true", help="log at INFO level")
    parser.add_argument("--config", type=str, default=None, help="TOML budget file")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="full analysis of a melon spec")
    analyze.add_argument("spec", type=str, help='comma-separated lengths, e.g. "1,3,3"')
    analyze.add_argument("--oracle", action="store_true", help="add exhaustive checks")
    analyze.add_argument("--timings", action="store_true")
    _add_budget_flags(analyze)
    analyze.set_defaults(run=cmd_analyze)

    check = commands.add_parser("check", help="does a word represent a graph")
    check.add_argument("graph_file", type=str, help="edge list")
    check.add_argument("word_file", type=str, help="whitespace-separated word")
    check.set_defaults(run=cmd_check)

    dot = commands.add_parser("dot", help="DOT output for a melon spec")
    dot.add_argument("spec", type=str)
    dot.add_argument("--what", choices=DOT_MODES, default="graph")
    dot.set_defaults(run=cmd_dot)

    oracle = commands.add_parser("oracle", help="exhaustive searches")
    oracle.add_argument(
        "target", type=str, help="edge-list file, named graph or melon spec"
    )
    oracle.add_argument("--uniform", action="store_true", help="least uniform k")
    oracle.add_argument("--perm", action="store_true", help="least permutation k")
    _add_budget_flags(oracle)
    oracle.set_defaults(run=cmd_oracle)

    sweep_ = commands.add_parser("sweep", help="check all small melon specs")
    sweep_.add_argument("--max-parts", type=int, default=SWEEP_MAX_PARTS)
    sweep_.add_argument("--max-length", type=int, default=SWEEP_MAX_LENGTH)
    sweep_.add_argument("--workers", type=int, default=None)
    sweep_.add_argument("--output", type=str, default=None, help="TOML summary path")
    sweep_.add_argument("--strict", action="store_true", help="stop at first failure")
    sweep_.add_argument("--quiet", action="store_true", help="no progress bar")
    sweep_.set_defaults(run=cmd_sweep)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments, run the command and return its exit code.
    """
    parser = _parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.run(args)
    except (MelonrepError, ValueError, KeyError, FileNotFoundError) as e:
        sys.stderr.write(f"melonrep: {e}\n")
        return exit_code(e)


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))
