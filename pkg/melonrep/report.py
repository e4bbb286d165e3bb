"""
Reports gathering every analysis of a melon spec.

Certificates are re-verified against freshly built graphs before they
are put in a report; a certificate that does not verify raises
ConstructionError.
"""

import time
from typing import Any, Callable, Dict, Optional, Sequence

from .comparability import hasse_orientation, is_comparability_melon, prn
from .config import SearchBudget
from .constants import REDUCTION_MAX_VERTICES, REPORT_SCHEMA
from .errors import ConstructionError
from .graph_core import (
    Graph,
    MelonSpec,
    build_melon,
    core_target,
    is_isomorphic,
    replay,
)
from .line_analysis import line_prism_minor, line_verdict, melon_line_graph
from .melon_analysis import core_reduction, representation_number
from .oracle import min_perm_rep, min_uniform_rep
from .orientation import find_transitive_orientation
from .words import format_word, is_k_uniform, require_represents

# Reported when the uniform search finds nothing up to max_k.
UNIFORM_NONE = ">max_k or not word-representable"
PERM_NONE = ">max_k"
NOT_COMPARABILITY = "not comparability"


def verified(word: Sequence[str], g: Graph, what: str) -> Dict[str, Any]:
    """
    Certificate entry: the word and its uniformity, after checking that
    it represents g.
    """
    require_represents(word, g, what)
    return {"word": format_word(word), "uniformity": is_k_uniform(word)}


class _Clock:
    def __init__(self, enabled: bool) -> None:
        self.enabled = enabled
        self.seconds: Dict[str, float] = {}

    def run(self, section: str, f: Callable[[], Any]) -> Any:
        start = time.perf_counter()
        result = f()
        if self.enabled:
            self.seconds[section] = round(time.perf_counter() - start, 6)
        return result


def _melon_section(spec: MelonSpec, g: Graph) -> Dict[str, Any]:
    verdict = representation_number(spec)
    section: Dict[str, Any] = {
        "r": verdict.r,
        "reason": verdict.reason,
        "certificate": verified(verdict.certificate, g, f"certificate of {spec}"),
    }
    if verdict.case is not None:
        section["case"] = verdict.case
    if section["certificate"]["uniformity"] != verdict.r:
        raise ConstructionError(f"certificate of {spec} is not {verdict.r}-uniform")
    if verdict.r == 3:
        core, steps = core_reduction(spec)
        section["core"] = {"spec": str(core), "steps": len(steps)}
        if core.vertex_count <= REDUCTION_MAX_VERTICES:
            reduced = replay(build_melon(core), steps)
            if is_isomorphic(reduced, core_target(core)) is None:
                raise ConstructionError(f"core reduction of {spec} failed")
    tag = is_comparability_melon(spec)
    section["comparability"] = tag
    if tag is None:
        section["prn"] = None
        section["hasse"] = None
        return section
    perm = prn(spec)
    d = perm.to_dict()
    d["realizer_check"] = verified(perm.realizer.flatten(), g, f"realizer of {spec}")
    section["prn"] = d
    section["hasse"] = hasse_orientation(spec).to_dict()
    return section


def _line_section(spec: MelonSpec, witness: bool) -> Dict[str, Any]:
    verdict = line_verdict(spec, witness=witness)
    section = verdict.to_dict()
    if verdict.certificate is not None:
        lg = melon_line_graph(spec)
        section["certificate"] = verified(
            verdict.certificate, lg, f"line certificate of {spec}"
        )
    if verdict.r == 3:
        steps, _ = line_prism_minor(spec)
        section["prism_minor_steps"] = len(steps)
    return section


def _uniform_entry(g: Graph, budget: SearchBudget) -> Dict[str, Any]:
    found = min_uniform_rep(g, budget)
    if found is None:
        return {"k": None, "result": UNIFORM_NONE, "exhaustive": True}
    k, word = found
    entry = {"k": k, "exhaustive": True}
    entry.update(verified(word, g, "uniform oracle witness"))
    return entry


def _perm_entry(g: Graph, budget: SearchBudget) -> Dict[str, Any]:
    if find_transitive_orientation(g) is None:
        return {"k": None, "result": NOT_COMPARABILITY, "exhaustive": True}
    found = min_perm_rep(g, budget)
    if found is None:
        return {"k": None, "result": PERM_NONE, "exhaustive": True}
    k, realizer = found
    entry: Dict[str, Any] = {"k": k, "exhaustive": True}
    entry.update(verified(realizer.flatten(), g, "permutation oracle witness"))
    entry["realizer"] = [format_word(p) for p in realizer.perms]
    return entry


def oracle_section(
    g: Graph, budget: SearchBudget, uniform: bool = True, perm: bool = True
) -> Dict[str, Any]:
    """
    Oracle results for g, or a skip note when g exceeds the budget.
    """
    if g.number_of_nodes() > budget.max_vertices:
        return {"skipped": f"more than {budget.max_vertices} vertices"}
    section: Dict[str, Any] = {}
    if uniform:
        section["uniform"] = _uniform_entry(g, budget)
    if perm:
        section["perm"] = _perm_entry(g, budget)
    return section


def _cross_check(report: Dict[str, Any]) -> Dict[str, Any]:
    melon, line, oracle = report["melon"], report["line"], report["oracle"]
    agrees: Dict[str, Any] = {}
    uniform = oracle["melon"].get("uniform")
    if uniform is not None and uniform["k"] is not None:
        agrees["r"] = uniform["k"] == melon["r"]
    perm = oracle["melon"].get("perm")
    if perm is not None and melon["prn"] is not None and perm["k"] is not None:
        agrees["prn"] = perm["k"] == melon["prn"]["prn"]
    line_uniform = oracle["line"].get("uniform")
    if line_uniform is not None and "r" in line:
        agrees["line_r"] = line_uniform["k"] == line["r"]
    return agrees


def melon_report(
    spec: MelonSpec,
    budget: Optional[SearchBudget] = None,
    oracle: bool = False,
    timings: bool = False,
    witness: bool = True,
) -> Dict[str, Any]:
    """
    Full analysis of a melon and its line graph.

    Parameters
    ----------
    spec
        The melon.
    budget
        Oracle bounds, used when `oracle` is set.
    oracle
        Whether to add exhaustive cross-checks (within budget).
    timings
        Whether to add per-section wall-clock seconds.
    witness
        Whether to search an induced non-comparability witness in L(M).

    Returns
    -------
    Dict
        JSON-ready report, keys in a fixed order.
    """
    budget = budget if budget is not None else SearchBudget()
    clock = _Clock(timings)
    g = build_melon(spec)
    report: Dict[str, Any] = {
        "schema": REPORT_SCHEMA,
        "input": {
            "spec": str(spec),
            "vertices": g.number_of_nodes(),
            "edges": g.number_of_edges(),
        },
    }
    report["melon"] = clock.run("melon", lambda: _melon_section(spec, g))
    report["line"] = clock.run("line", lambda: _line_section(spec, witness))
    if oracle:
        lg = melon_line_graph(spec)
        report["oracle"] = clock.run(
            "oracle",
            lambda: {
                "melon": oracle_section(g, budget),
                "line": oracle_section(lg, budget, perm=False),
            },
        )
        report["oracle"]["agrees"] = _cross_check(report)
    if timings:
        report["timings"] = clock.seconds
    return report
