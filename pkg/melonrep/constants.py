"""
Definition of project-level constants.
"""

from typing import Tuple

# Melon labels.
END_VERTEX: str = "0"
END_VERTEX_PRIME: str = "0p"
EDGE_PATH_LABEL: str = "e_0"  # Line-graph vertex of the length-1 path.

# Word text format.
EMPTY_WORD_TOKEN: str = "eps"

# Oracle budget defaults.
DEFAULT_MAX_VERTICES: int = 10
DEFAULT_MAX_K: int = 3
DEFAULT_NODE_LIMIT: int = 10**8

# Size guards.
INDUCED_MAX_VERTICES: int = 24
ORIENTATION_MAX_EDGES: int = 2000
ISOMORPHISM_MAX_VERTICES: int = 16
REDUCTION_MAX_VERTICES: int = 14  # Replay check of vertex-minor steps.
WITNESS_MAX_VERTICES: int = 12  # Induced non-comparability witness in L(M).

# Sweep.
SWEEP_MAX_PARTS: int = 5
SWEEP_MAX_LENGTH: int = 6
SWEEP_SUMMARY_FILE_NAME: str = "sweep.toml"

# Reports.
REPORT_SCHEMA: str = "melonrep/1"

# Exit codes.
EXIT_FAILURE: int = 1
EXIT_PARSE_ERROR: int = 2
EXIT_SIZE_GUARD: int = 3
EXIT_VERIFICATION_FAILURE: int = 4
EXIT_NODE_LIMIT: int = 5

# Dot output modes.
DOT_MODES: Tuple[str, ...] = ("graph", "line", "hasse")
