"""Serialized command reports.

Both formats are rendered from one normalized tree, so they carry the same
numbers at the same printed precision:

* JSON: ``{"command", "inputs", "results", "warnings"}`` with sorted keys
* CSV: one ``path,value`` row per leaf, the path joining keys and list
  indices with dots
"""

import csv
import io
import json
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from .Config import Config

__all__ = ["Report", "normalize", "flatten"]


def _number(value: float) -> float | None:
    if not math.isfinite(value):
        return None
    return float(f"{value:.{Config.values['PRECISION']}g}")


def normalize(value):
    """Reduce a result tree to JSON types with rounded numbers.

    Floats keep ``PRECISION`` significant digits and non-finite floats
    become None; complex numbers become ``{"real", "imag"}``; enums give
    their value; tuples become lists.

    :param value: A result tree
    :type value: object
    :return: The normalized tree
    :rtype: object
    """
    if isinstance(value, np.generic):
        value = value.item()
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, int):
        return value
    if isinstance(value, (float, Fraction)):
        return _number(float(value))
    if isinstance(value, complex):
        return {"real": _number(value.real), "imag": _number(value.imag)}
    if isinstance(value, dict):
        return {str(key): normalize(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [normalize(item) for item in value]
    return str(value)


def flatten(tree, prefix: str = "") -> list[tuple[str, object]]:
    """Leaves of a normalized tree as ``(path, value)``, keys sorted.

    Empty containers appear as a single row with an empty value.
    """
    if isinstance(tree, dict):
        if not tree:
            return [(prefix, None)]
        rows = []
        for key in sorted(tree):
            rows.extend(flatten(tree[key], f"{prefix}.{key}" if prefix else key))
        return rows
    if isinstance(tree, list):
        if not tree:
            return [(prefix, None)]
        rows = []
        for index, item in enumerate(tree):
            rows.extend(flatten(item, f"{prefix}.{index}" if prefix else str(index)))
        return rows
    return [(prefix, tree)]


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass
class Report:
    """The outcome of one command.

    :ivar command: Command name
    :type command: str
    :ivar inputs: Parameters the command ran with
    :type inputs: dict
    :ivar results: Command results
    :type results: dict
    :ivar warnings: Human-readable notes about the run
    :type warnings: list[str]
    :ivar ok: False when a check the command ran did not pass; not serialized
    :type ok: bool
    """

    command: str
    inputs: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    ok: bool = True

    def tree(self) -> dict:
        return normalize(
            {
                "command": self.command,
                "inputs": self.inputs,
                "results": self.results,
                "warnings": self.warnings,
            }
        )

    def to_json(self) -> str:
        return json.dumps(self.tree(), indent=2, sort_keys=True, allow_nan=False) + "\n"

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["path", "value"])
        for path, value in flatten(self.tree()):
            writer.writerow([path, _cell(value)])
        return buffer.getvalue()

    def serialize(self, output_format: str) -> str:
        """Render the report as ``json`` or ``csv``."""
        return self.to_csv() if output_format == "csv" else self.to_json()
