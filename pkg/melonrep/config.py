import logging
from pathlib import Path
from typing import Any, Dict, Optional

import toml

from .constants import DEFAULT_MAX_K, DEFAULT_MAX_VERTICES, DEFAULT_NODE_LIMIT


class SearchBudget:
    """
    Bounds for the exhaustive oracle searches.
    """

    def __init__(
        self,
        max_vertices: int = DEFAULT_MAX_VERTICES,
        max_k: int = DEFAULT_MAX_K,
        node_limit: int = DEFAULT_NODE_LIMIT,
    ) -> None:
        self.max_vertices: int = max_vertices
        self.max_k: int = max_k
        self.node_limit: int = node_limit
        self.validate()

    def validate(self) -> None:
        for key, value in self.to_dict().items():
            if not isinstance(value, int) or value <= 0:
                raise ValueError(
                    f"SearchBudget: {key} must be a positive integer, got {value!r}"
                )

    def to_dict(self) -> Dict[str, int]:
        return {
            "max_vertices": self.max_vertices,
            "max_k": self.max_k,
            "node_limit": self.node_limit,
        }

    def updated(
        self,
        max_vertices: Optional[int] = None,
        max_k: Optional[int] = None,
        node_limit: Optional[int] = None,
    ) -> "SearchBudget":
        """
        Copy of this budget with the given fields replaced
        (None keeps the current value).
        """
        return SearchBudget(
            max_vertices=self.max_vertices if max_vertices is None else max_vertices,
            max_k=self.max_k if max_k is None else max_k,
            node_limit=self.node_limit if node_limit is None else node_limit,
        )

    @classmethod
    def from_dict(cls, config: Dict[str, Any]) -> "SearchBudget":
        keys = ("max_vertices", "max_k", "node_limit")
        for k in keys:
            if k not in config.keys():
                raise KeyError(
                    "failed to create an instance of " f"SearchBudget: missing key {k}"
                )
        return cls(
            max_vertices=config["max_vertices"],
            max_k=config["max_k"],
            node_limit=config["node_limit"],
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SearchBudget):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        return (
            f"SearchBudget(max_vertices={self.max_vertices}, "
            f"max_k={self.max_k}, node_limit={self.node_limit})"
        )


def load_budget(path: Path) -> SearchBudget:
    """
    Read a search budget from the `[budget]` table of a TOML file.

    Keys missing from the table keep their default value.

    Parameters
    ----------
    path
        Path to the TOML configuration file.

    Returns
    -------
    SearchBudget
        Budget read from the file.
    """
    content = toml.load(path)
    table = content.get("budget", {})
    # Fill in defaults for absent keys.
    values = SearchBudget().to_dict()
    values.update(table)
    budget = SearchBudget.from_dict(values)
    logging.info("loaded search budget from %s: %s", path, budget)
    return budget
