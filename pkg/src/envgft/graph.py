"""Weighted directed graphs with a dense adjacency view.

Orientation convention used throughout the package: the adjacency matrix A
has A[src, dst] = weight, i.e. rows are edge sources and columns are edge
destinations.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import EdgeListError


@dataclass(frozen=True)
class Digraph:
    """Immutable digraph on vertices 0..n-1 with at most one edge per (src, dst)."""

    n: int
    edges: tuple[tuple[int, int, float], ...] = ()
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        object.__setattr__(
            self,
            "edges",
            tuple(sorted((int(s), int(d), float(w)) for s, d, w in self.edges)),
        )
        seen = set()
        for s, d, w in self.edges:
            if not (0 <= s < self.n and 0 <= d < self.n):
                raise ValueError(f"edge ({s}, {d}) out of range for n={self.n}")
            if w == 0.0:
                raise ValueError(f"edge ({s}, {d}) has zero weight")
            if (s, d) in seen:
                raise ValueError(f"duplicate edge ({s}, {d})")
            seen.add((s, d))
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.n:
                raise ValueError("labels must have one entry per vertex")
            object.__setattr__(self, "labels", labels)

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((s, d) for s, d, _ in self.edges)

    def weight(self, src: int, dst: int) -> float:
        for s, d, w in self.edges:
            if s == src and d == dst:
                return w
        return 0.0

    def adjacency(self) -> np.ndarray:
        """Dense n×n matrix with A[src, dst] = weight."""
        a = np.zeros((self.n, self.n))
        for s, d, w in self.edges:
            a[s, d] = w
        return a

    @classmethod
    def from_adjacency(cls, a, labels=None) -> "Digraph":
        a = np.asarray(a, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        src, dst = np.nonzero(a)
        edges = tuple((int(s), int(d), float(a[s, d])) for s, d in zip(src, dst))
        return cls(n=a.shape[0], edges=edges, labels=labels)

    def with_edges_added(
        self,
        added: Iterable[tuple[int, int, float]],
        allow_multi: bool = False,
    ) -> "Digraph":
        """New digraph with extra edges; colliding weights sum only if allowed."""
        merged = {(s, d): w for s, d, w in self.edges}
        for s, d, w in added:
            if (s, d) in merged:
                if not allow_multi:
                    raise ValueError(f"edge ({s}, {d}) already present")
                merged[(s, d)] += w
            else:
                merged[(s, d)] = w
        edges = tuple((s, d, w) for (s, d), w in sorted(merged.items()))
        return Digraph(n=self.n, edges=edges, labels=self.labels)

    def to_json_dict(self) -> dict:
        d = {
            "n": self.n,
            "edges": [[s, dd, w] for s, dd, w in sorted(self.edges)],
        }
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "Digraph":
        labels = tuple(d["labels"]) if "labels" in d else None
        return cls(
            n=int(d["n"]),
            edges=tuple((e[0], e[1], e[2] if len(e) > 2 else 1.0) for e in d["edges"]),
            labels=labels,
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def loads(cls, s: str) -> "Digraph":
        return cls.from_json_dict(json.loads(s))


def _parse_plain(lines: Iterable[str]) -> list[tuple[int, int, float, int]]:
    records = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise EdgeListError(f"line {lineno}: expected 'src dst [weight]', got {raw!r}")
        try:
            s, d = int(parts[0]), int(parts[1])
            w = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError as exc:
            raise EdgeListError(f"line {lineno}: {exc}") from None
        records.append((s, d, w, lineno))
    return records


def _parse_csv(lines: Iterable[str]) -> list[tuple[int, int, float, int]]:
    reader = csv.reader(lines)
    try:
        header = next(reader)
    except StopIteration:
        raise EdgeListError("line 1: empty CSV file") from None
    header = [h.strip().lower() for h in header]
    if header != ["src", "dst", "weight"]:
        raise EdgeListError(f"line 1: expected header 'src,dst,weight', got {','.join(header)!r}")
    records = []
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 3:
            raise EdgeListError(f"line {lineno}: expected 3 fields, got {len(row)}")
        try:
            s, d = int(row[0]), int(row[1])
            w = float(row[2]) if row[2].strip() else 1.0
        except ValueError as exc:
            raise EdgeListError(f"line {lineno}: {exc}") from None
        records.append((s, d, w, lineno))
    return records


def load_edge_list(path, format: str = "plain", n: Optional[int] = None) -> Digraph:
    """Read a digraph from an edge-list file.

    ``plain`` lines are whitespace-separated ``src dst [weight]`` with ``#``
    comments; ``csv`` files carry the header ``src,dst,weight``. Vertex
    indices are 0-based; ``n`` defaults to the largest index seen plus one.
    Duplicate (src, dst) records, zero weights and out-of-range indices are
    reported with their line numbers.
    """
    path = Path(path)
    with path.open("r", encoding="utf-8") as fh:
        if format == "plain":
            records = _parse_plain(fh)
        elif format == "csv":
            records = _parse_csv(fh)
        else:
            raise ValueError(f"unknown edge-list format {format!r}")
    if not records and n is None:
        raise EdgeListError(f"{path}: no edges and no explicit vertex count")
    size = n if n is not None else 1 + max(max(s, d) for s, d, _, _ in records)
    seen: dict[tuple[int, int], int] = {}
    edges = []
    for s, d, w, lineno in records:
        if s < 0 or d < 0 or s >= size or d >= size:
            raise EdgeListError(f"line {lineno}: index ({s}, {d}) out of range for n={size}")
        if w == 0.0:
            raise EdgeListError(f"line {lineno}: zero weight on edge ({s}, {d})")
        if (s, d) in seen:
            raise EdgeListError(
                f"line {lineno}: duplicate edge ({s}, {d}), first seen on line {seen[(s, d)]}"
            )
        seen[(s, d)] = lineno
        edges.append((s, d, w))
    return Digraph(n=size, edges=tuple(edges))


@dataclass(frozen=True)
class RankProfile:
    """Numerical rank r and nullity g = n - r of a square matrix."""

    rank: int
    nullity: int
    tolerance: float

    def __post_init__(self):
        if self.rank < 0 or self.nullity < 0:
            raise ValueError("rank and nullity must be non-negative")


def rank_profile(a, tol: Optional[float] = None) -> RankProfile:
    """Rank/nullity from singular values.

    Default threshold is max(n, n) · eps · σ_max, the usual numerical-rank
    convention.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("rank_profile expects a square matrix")
    n = a.shape[0]
    s = np.linalg.svd(a, compute_uv=False)
    smax = float(s[0]) if s.size else 0.0
    if tol is None:
        tol = n * np.finfo(float).eps * smax
    rank = int(np.sum(s > tol))
    return RankProfile(rank=rank, nullity=n - rank, tolerance=float(tol))


# --- signals ---------------------------------------------------------------
#
# Graph signals are plain 1-D complex numpy arrays of length n; the helpers
# below cover construction, validation and the JSON wire format
# (arrays of [re, im] pairs).


def as_signal(values, n: Optional[int] = None) -> np.ndarray:
    x = np.asarray(values, dtype=complex).reshape(-1)
    if n is not None and x.shape[0] != n:
        raise ValueError(f"signal has length {x.shape[0]}, expected {n}")
    return x


def unit_impulse(n: int, k: int) -> np.ndarray:
    if not 0 <= k < n:
        raise ValueError(f"impulse index {k} out of range for n={n}")
    x = np.zeros(n, dtype=complex)
    x[k] = 1.0
    return x


def ones_signal(n: int) -> np.ndarray:
    return np.ones(n, dtype=complex)


def signal_to_json(x) -> list[list[float]]:
    x = as_signal(x)
    return [[float(v.real), float(v.imag)] for v in x]


def signal_from_json(obj, n: Optional[int] = None) -> np.ndarray:
    return as_signal([complex(re, im) for re, im in obj], n=n)
