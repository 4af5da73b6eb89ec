"""Figure kinds and their CSV schemas.

Each renderer consumes one CSV class emitted by the pipeline. Headers are
validated before any drawing happens; a mismatch is a SchemaError carrying a
diagnostic of what was expected versus found.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass, field
from pathlib import Path


class SchemaError(ValueError):
    """CSV header does not match the declared schema for the figure kind."""


FIXED_HEADERS = {
    "dist_indices": ["candidate_id", "delta", "Delta", "cond"],
    "dist_tau": ["candidate_id", "tau"],
    "motif": ["graph", "motif_3cycle", "motif_ffl"],
    "coreperiph": ["graph", "core", "periphery"],
    "stability": ["candidate_id", "stab_left", "stab_right"],
    "basis_diff": ["row", "col", "value"],
}

# kinds whose headers carry one column per candidate
PREFIX_HEADERS = {
    "pagerank_compare": ["node", "base"],
    "clustering": ["node", "base"],
}

KINDS = tuple(FIXED_HEADERS) + tuple(PREFIX_HEADERS) + ("system_signals",)


def validate_header(kind: str, header: list[str]) -> None:
    if kind in FIXED_HEADERS:
        if header != FIXED_HEADERS[kind]:
            raise SchemaError(
                f"{kind}: expected header {FIXED_HEADERS[kind]}, got {header}"
            )
        return
    if kind in PREFIX_HEADERS:
        prefix = PREFIX_HEADERS[kind]
        if header[: len(prefix)] != prefix or len(header) <= len(prefix) - 1:
            raise SchemaError(
                f"{kind}: expected header starting with {prefix}, got {header}"
            )
        return
    if kind == "system_signals":
        if not header or header[0] != "node" or len(header) < 3 or (len(header) - 1) % 2:
            raise SchemaError(
                f"system_signals: expected 'node' plus <id>_re/<id>_im pairs, got {header}"
            )
        for re_col, im_col in zip(header[1::2], header[2::2]):
            if not (re_col.endswith("_re") and im_col.endswith("_im")
                    and re_col[:-3] == im_col[:-3]):
                raise SchemaError(
                    f"system_signals: columns {re_col!r}/{im_col!r} do not pair up"
                )
        return
    raise SchemaError(f"unknown figure kind {kind!r}; choose from {sorted(KINDS)}")


@dataclass(frozen=True)
class FigureJob:
    csv_path: Path
    figure_kind: str
    output_image_path: Path
    style: dict = field(default_factory=dict)


def read_table(job: FigureJob) -> tuple[list[str], list[list[str]]]:
    """Read and schema-check the CSV; returns (header, data rows)."""
    path = Path(job.csv_path)
    if not path.exists():
        raise FileNotFoundError(f"CSV not found: {path}")
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file, no header") from None
        rows = [row for row in reader if row]
    validate_header(job.figure_kind, header)
    return header, rows


def kind_of_filename(name: str) -> str | None:
    """Map a pipeline CSV filename to its figure kind, if any."""
    stem = Path(name).name
    if re.fullmatch(r"basis_diff_\d+_\d+\.csv", stem):
        return "basis_diff"
    base = stem.removesuffix(".csv")
    return base if base in KINDS else None
