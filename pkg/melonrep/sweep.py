"""
Soundness sweep: run every analysis on all small melon specs and
collect a summary.
"""

from concurrent.futures import ProcessPoolExecutor
from functools import partial
import itertools
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

import tomli_w
from tqdm import tqdm

from .constants import SWEEP_MAX_LENGTH, SWEEP_MAX_PARTS, SWEEP_SUMMARY_FILE_NAME
from .graph_core import MelonSpec
from .report import melon_report

_nb_workers = max(1, (os.cpu_count() or 2) - 1)

# {spec string: summary row}
SweepSummary = Dict[str, Dict[str, Any]]


def enumerate_specs(
    max_parts: int = SWEEP_MAX_PARTS, max_length: int = SWEEP_MAX_LENGTH
) -> List[MelonSpec]:
    """
    All melon specs with at most `max_parts` paths of length at most
    `max_length`, one per multiset (lengths non-decreasing), in
    lexicographic order by number of paths then lengths.
    """
    specs: List[MelonSpec] = []
    for parts in range(1, max_parts + 1):
        for lengths in itertools.combinations_with_replacement(
            range(1, max_length + 1), parts
        ):
            if lengths.count(1) <= 1:
                specs.append(MelonSpec(lengths))
    return specs


def summary_row(report: Dict[str, Any]) -> Dict[str, Any]:
    """
    Flat summary of a melon report. Absent values are left out
    (TOML has no null).
    """
    melon, line = report["melon"], report["line"]
    row: Dict[str, Any] = {
        "r": melon["r"],
        "reason": melon["reason"],
        "comparability": melon["comparability"],
        "prn": melon["prn"]["prn"] if melon["prn"] is not None else None,
        "line_word_representable": line["word_representable"],
        "line_r": line.get("r"),
        "line_class": line["comparability_class"],
        "line_prn": line.get("prn"),
    }
    return {key: value for key, value in row.items() if value is not None}


def check_spec(spec: MelonSpec, skip_error: bool = True) -> Optional[Dict[str, Any]]:
    """
    Summary row of one spec; certificates are re-verified on the way.

    Parameters
    ----------
    spec
        The melon.
    skip_error
        Whether to log and ignore a failure (None is returned) instead
        of raising.
    """
    try:
        return summary_row(melon_report(spec, witness=False))
    except Exception as e:
        logging.error("failed to analyse melon %s: %s", spec, e)
        if skip_error:
            return None
        raise e


def sweep(
    specs: List[MelonSpec],
    nb_workers: int = _nb_workers,
    skip_error: bool = True,
    progress: bool = True,
) -> SweepSummary:
    """
    Check all specs in a process pool.

    Returns
    -------
    SweepSummary
        Rows in the order of `specs`; a spec that failed (with
        `skip_error`) maps to {"failed": True}.
    """
    summary: SweepSummary = {}
    check = partial(check_spec, skip_error=skip_error)
    with ProcessPoolExecutor(max_workers=nb_workers) as executor:
        rows = tqdm(
            executor.map(check, specs),
            total=len(specs),
            desc="melons",
            disable=not progress,
        )
        for spec, row in zip(specs, rows):
            summary[str(spec)] = row if row is not None else {"failed": True}
    failed = sum(1 for row in summary.values() if row.get("failed"))
    logging.info("checked %s melon specs, %s failed", len(summary), failed)
    return summary


def write_summary(summary: SweepSummary, path: Optional[Path] = None) -> Path:
    """
    Write the sweep summary as TOML (one table per spec).
    """
    if path is None:
        path = Path(SWEEP_SUMMARY_FILE_NAME)
    with open(path, "wb") as f:
        tomli_w.dump(summary, f)
    logging.info("sweep summary written to %s", path)
    return path
