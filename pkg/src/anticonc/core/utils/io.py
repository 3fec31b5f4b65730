"""
CSV and JSON emission.

Every file starts with (CSV) or contains (JSON) the tool version and the config hash. CSV
files carry a single ``# anticonc <version> config_hash=<sha256>`` comment line above the
header; floats are written with ``CSV_FLOAT_DIGITS`` significant digits.
"""

import csv
import os
import re
from collections.abc import Iterable, Sequence
from typing import Any

from pydantic import BaseModel

from ..config import settings
from ..exceptions import SchemaMismatchError
from ..logger import logging

logger = logging.getLogger(__name__)

SAMPLE_COLUMNS = ("trial", "ensemble", "n", "depth", "x", "p")
SCAN_COLUMNS = ("depth", "delta2", "frac", "se", "verdict")

_HEADER = re.compile(r"^# (?P<tool>\S+) (?P<version>\S+) config_hash=(?P<hash>[0-9a-f]{64})$")


def format_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, f".{settings.CSV_FLOAT_DIGITS}g")
    if hasattr(value, "value"):
        return str(value.value)
    return str(value)


def ensure_parent(path: str) -> None:
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)


def write_csv(
    path: str,
    columns: Sequence[str],
    rows: Iterable[dict[str, Any]],
    config_hash: str,
    version: str | None = None,
) -> int:
    """Write rows in order; returns the number of data rows."""
    version = version or settings.APP_VERSION
    ensure_parent(path)
    count = 0
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(f"# {settings.APP_NAME} {version} config_hash={config_hash}\n")
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_value(row[column]) for column in columns])
            count += 1
    logger.info(f"Wrote {count} rows to {path}")
    return count


def read_csv(path: str, columns: Sequence[str] = SAMPLE_COLUMNS) -> tuple[dict[str, str], list[dict[str, str]]]:
    """Read a file written by :func:`write_csv`.

    Returns
    -------
    tuple[dict[str, str], list[dict[str, str]]]
        Header metadata (``tool``, ``version``, ``hash``) and the rows as strings.

    Raises
    ------
    SchemaMismatchError
        If the comment line or the column header differ from the expected layout.
    """
    with open(path, encoding="utf-8", newline="") as handle:
        first = handle.readline().rstrip("\n")
        match = _HEADER.match(first)
        if match is None:
            raise SchemaMismatchError(f"{path}: missing '# <tool> <version> config_hash=<sha256>' line")
        reader = csv.DictReader(handle)
        if tuple(reader.fieldnames or ()) != tuple(columns):
            raise SchemaMismatchError(f"{path}: expected columns {list(columns)}, got {reader.fieldnames}")
        rows = list(reader)
    return match.groupdict(), rows


def write_json(path: str, model: BaseModel, exclude: Any = None) -> None:
    ensure_parent(path)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(model.model_dump_json(indent=2, exclude=exclude))
        handle.write("\n")
    logger.info(f"Wrote {path}")
