"""Experimental ground-state configurations and Madelung classification."""

import csv
import logging
import os
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import yaml

from .Configuration import Configuration, fill, parse_configuration
from .Exceptions import ConfigurationParseError, DatasetError, ElementNotFoundError
from .Orbital import FillingRule, Orbital, madelung_key

__all__ = [
    "DATA_DIR",
    "DEFAULT_DATASET",
    "ElementRecord",
    "Status",
    "DiffEntry",
    "Classification",
    "load_elements",
    "dataset_metadata",
    "classify",
    "classify_all",
]

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent / "data"
DEFAULT_DATASET = DATA_DIR / "elements.csv"
HEADER = ["z", "symbol", "configuration"]


@dataclass(frozen=True)
class ElementRecord:
    """One row of the element dataset.

    :ivar z: Atomic number
    :type z: int
    :ivar symbol: Element symbol
    :type symbol: str
    :ivar experimental: Measured ground-state configuration
    :type experimental: Configuration
    """

    z: int
    symbol: str
    experimental: Configuration


class Status(Enum):
    """Whether an element follows the Madelung prediction."""

    REGULAR = "regular"
    EXCEPTIONAL = "exceptional"


@dataclass(frozen=True)
class DiffEntry:
    """One orbital whose predicted and experimental occupations differ."""

    orbital: Orbital
    predicted: int
    experimental: int


@dataclass(frozen=True)
class Classification:
    """Outcome of comparing the Madelung prediction with experiment.

    :ivar status: Regular exactly when ``diff`` is empty
    :type status: Status
    :ivar diff: Orbitals whose counts differ, in Madelung order
    :type diff: tuple[DiffEntry, ...]
    """

    status: Status
    diff: tuple[DiffEntry, ...]


def load_elements(path: str | os.PathLike | None = None) -> list[ElementRecord]:
    """Read the element dataset.

    :param path: CSV file with header ``z,symbol,configuration``; the
        bundled file when omitted
    :type path: str | os.PathLike | None
    :return: Records sorted by atomic number
    :rtype: list[ElementRecord]
    :raises DatasetError: On a bad header, an unreadable row, a configuration
        whose electron count differs from z, or a repeated z or symbol
    :raises FileNotFoundError: If the file does not exist
    """
    path = Path(path) if path is not None else DEFAULT_DATASET
    records = []
    symbols, numbers = set(), set()
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != HEADER:
            raise DatasetError(f"expected header {','.join(HEADER)}, got {header}", 1)
        for row, fields in enumerate(reader, start=2):
            if not fields:
                continue
            if len(fields) != 3:
                raise DatasetError(f"expected 3 fields, got {len(fields)}", row)
            z_text, symbol, text = (field.strip() for field in fields)
            if not z_text.isdigit():
                raise DatasetError(f"atomic number '{z_text}' is not an integer", row)
            z = int(z_text)
            try:
                experimental = parse_configuration(text)
            except ConfigurationParseError as e:
                raise DatasetError(f"{symbol}: {e}", row)
            if experimental.z != z:
                raise DatasetError(
                    f"{symbol}: configuration '{text}' holds {experimental.z} electrons, expected {z}",
                    row,
                )
            if z in numbers or symbol in symbols:
                raise DatasetError(f"duplicate record for Z={z} ({symbol})", row)
            numbers.add(z)
            symbols.add(symbol)
            records.append(ElementRecord(z, symbol, experimental))
    logger.debug("loaded %d element records from %s", len(records), path)
    return sorted(records, key=lambda record: record.z)


def dataset_metadata(path: str | os.PathLike | None = None) -> dict:
    """Read the YAML file describing a dataset.

    The metadata lives beside the CSV under the same stem; a dataset without
    one yields an empty mapping.

    :param path: The CSV path; the bundled dataset when omitted
    :type path: str | os.PathLike | None
    :return: Parsed metadata
    :rtype: dict
    """
    path = Path(path) if path is not None else DEFAULT_DATASET
    meta = path.with_suffix(".yml")
    if not meta.exists():
        return {}
    with open(meta, "r", encoding="utf-8") as fh:
        return yaml.safe_load(fh) or {}


def _record(z: int, dataset: list[ElementRecord]) -> ElementRecord:
    for record in dataset:
        if record.z == z:
            return record
    raise ElementNotFoundError(z)


def classify(z: int, dataset: list[ElementRecord]) -> Classification:
    """Compare the Madelung filling of z with its experimental configuration.

    :param z: Atomic number
    :type z: int
    :param dataset: Element records
    :type dataset: list[ElementRecord]
    :return: Status and the orbital-by-orbital diff
    :rtype: Classification
    :raises ElementNotFoundError: If the dataset has no record for z
    """
    record = _record(z, dataset)
    predicted = fill(FillingRule.MADELUNG, z).as_dict()
    experimental = record.experimental.as_dict()
    diff = tuple(
        DiffEntry(o, predicted.get(o, 0), experimental.get(o, 0))
        for o in sorted(set(predicted) | set(experimental), key=madelung_key)
        if predicted.get(o, 0) != experimental.get(o, 0)
    )
    return Classification(Status.EXCEPTIONAL if diff else Status.REGULAR, diff)


def classify_all(dataset: list[ElementRecord]) -> list[tuple[int, str, Classification]]:
    """Classify every element of a dataset, sorted by z.

    :param dataset: Element records
    :type dataset: list[ElementRecord]
    :return: ``(z, symbol, classification)`` triples
    :rtype: list[tuple[int, str, Classification]]
    """
    return [
        (record.z, record.symbol, classify(record.z, dataset))
        for record in sorted(dataset, key=lambda record: record.z)
    ]
