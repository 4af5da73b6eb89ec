"""Fetch helper for the 70-vertex high-school friendship dataset.

Source: the netzschleuder catalogue entry ``highschool``
(https://networks.skewed.de/net/highschool), which consolidates friendship
nominations among boys at a small Illinois high school surveyed in fall 1957
and spring 1958. The pipeline's study uses the fall survey only, so rows
carrying a wave/time column keep the first wave.

Converted output is a plain 0-based edge list (``src dst`` per line) ready
for ``envgft enumerate`` / ``envgft repro-friendship``.
"""

from __future__ import annotations

import csv
import io
import urllib.request
import zipfile
from pathlib import Path

DEFAULT_URL = "https://networks.skewed.de/net/highschool/files/highschool.csv.zip"


def fetch_highschool(out_path, url: str = DEFAULT_URL, timeout: float = 60.0) -> Path:
    """Download, filter to the first survey wave, and write a plain edge list."""
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        blob = resp.read()
    return convert_archive(blob, out_path)


def convert_archive(blob: bytes, out_path) -> Path:
    with zipfile.ZipFile(io.BytesIO(blob)) as zf:
        edge_name = next(
            (n for n in zf.namelist() if n.endswith("edges.csv")), None
        )
        if edge_name is None:
            raise ValueError(f"no edges.csv in archive (members: {zf.namelist()})")
        text = zf.read(edge_name).decode("utf-8")
    edges = parse_edge_csv(text)
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"{s} {d}" for s, d in edges]
    out_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return out_path


def parse_edge_csv(text: str) -> list[tuple[int, int]]:
    """Parse netzschleuder edges.csv, keeping the first survey wave.

    Rows are ``source,target[,extra...]``; comment lines start with ``#``.
    When a third column distinguishes the two survey waves, rows carrying its
    smallest value are kept; duplicates (a pair present in both waves)
    collapse to one edge.
    """
    rows = []
    for raw in csv.reader(io.StringIO(text)):
        if not raw or raw[0].lstrip().startswith("#"):
            continue
        cells = [c.strip() for c in raw]
        try:
            src, dst = int(cells[0]), int(cells[1])
        except (IndexError, ValueError):
            continue  # header or malformed line
        extra = None
        if len(cells) > 2 and cells[2]:
            try:
                extra = float(cells[2])
            except ValueError:
                extra = None
        rows.append((src, dst, extra))
    if not rows:
        raise ValueError("no edge records found in edges.csv")
    waves = sorted({e for _, _, e in rows if e is not None})
    if len(waves) > 1:
        first = waves[0]
        rows = [(s, d, e) for s, d, e in rows if e == first or e is None]
    seen = set()
    edges = []
    for s, d, _ in rows:
        if (s, d) not in seen:
            seen.add((s, d))
            edges.append((s, d))
    ids = sorted({v for e in edges for v in e})
    if ids and (ids[0] != 0 or ids[-1] != len(ids) - 1):
        remap = {v: i for i, v in enumerate(ids)}
        edges = [(remap[s], remap[d]) for s, d in edges]
    return edges
