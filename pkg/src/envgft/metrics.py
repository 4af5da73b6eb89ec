"""Structural network metrics used to compare a graph with its extensions.

PageRank, Kendall rank correlation, directed triad motif densities,
core/periphery counts and local clustering coefficients. All metrics treat
edges as unweighted connections.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Optional

import numpy as np

from .errors import NumericalError
from .graph import Digraph

MOTIF_3CYCLE = "directed-3-cycle"
MOTIF_FFL = "feed-forward-loop"
MOTIFS = (MOTIF_3CYCLE, MOTIF_FFL)


def pagerank(
    g: Digraph,
    d: float = 0.85,
    tol: float = 1e-12,
    max_iter: int = 1000,
) -> np.ndarray:
    """Power-iteration fixed point of PR(i) = (1-d)/n + d·Σ_{j→i} PR(j)/L(j).

    Dangling vertices (zero out-degree) spread their mass uniformly.
    """
    n = g.n
    b = (g.adjacency() != 0).astype(float)
    out_deg = b.sum(axis=1)
    dangling = out_deg == 0
    inv_deg = np.where(dangling, 0.0, 1.0 / np.where(dangling, 1.0, out_deg))
    p = np.full(n, 1.0 / n)
    for _ in range(max_iter):
        flow = b.T @ (p * inv_deg) + p[dangling].sum() / n
        new = (1.0 - d) / n + d * flow
        if np.abs(new - p).sum() < tol:
            return new
        p = new
    raise NumericalError(f"pagerank did not converge within {max_iter} iterations")


def kendall_tau(rank_a, rank_b) -> float:
    """Tie-corrected (tau-b) Kendall rank correlation over all C(n,2) pairs.

    A constant ranking ties every pair; the correlation is then reported
    as 0 rather than NaN.
    """
    a = np.asarray(rank_a, dtype=float).reshape(-1)
    b = np.asarray(rank_b, dtype=float).reshape(-1)
    if a.shape != b.shape:
        raise ValueError("rankings must have equal length")
    n = a.shape[0]
    if n < 2:
        raise ValueError("need at least two observations")
    iu = np.triu_indices(n, k=1)
    sa = np.sign(a[:, None] - a[None, :])[iu]
    sb = np.sign(b[:, None] - b[None, :])[iu]
    concordant_minus_discordant = float(np.sum(sa * sb))
    n0 = n * (n - 1) / 2.0
    # tied pairs in each ranking
    t_a = n0 - float(np.count_nonzero(sa))
    t_b = n0 - float(np.count_nonzero(sb))
    denom = np.sqrt((n0 - t_a) * (n0 - t_b))
    if denom == 0:
        return 0.0
    return float(concordant_minus_discordant / denom)


@lru_cache(maxsize=8)
def _triple_indices(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    idx = np.array(
        [(i, j, k) for i in range(n) for j in range(i + 1, n) for k in range(j + 1, n)],
        dtype=np.intp,
    ).reshape(-1, 3)
    return idx[:, 0], idx[:, 1], idx[:, 2]


@lru_cache(maxsize=None)
def _motif_codes(motif: str) -> frozenset[int]:
    """All 6-bit induced-subgraph codes isomorphic to the named triad.

    Bit order over a vertex triple (a, b, c):
    (a→b, b→a, a→c, c→a, b→c, c→b).
    """
    patterns = {
        MOTIF_3CYCLE: {(0, 1), (1, 2), (2, 0)},
        MOTIF_FFL: {(0, 1), (0, 2), (1, 2)},
    }
    if motif not in patterns:
        raise ValueError(f"unknown motif {motif!r}; choose from {MOTIFS}")
    base = patterns[motif]
    pair_bits = {(0, 1): 0, (1, 0): 1, (0, 2): 2, (2, 0): 3, (1, 2): 4, (2, 1): 5}
    codes = set()
    for perm in permutations(range(3)):
        code = 0
        for (u, v) in base:
            code |= 1 << pair_bits[(perm[u], perm[v])]
        codes.add(code)
    return frozenset(codes)


def motif_density(g: Digraph, motif: str) -> float:
    """Induced occurrences of the motif per vertex triple: n_M / C(n, 3)."""
    n = g.n
    if n < 3:
        raise ValueError("motif density needs at least 3 vertices")
    b = (g.adjacency() != 0)
    i, j, k = _triple_indices(n)
    codes = (
        b[i, j] * 1
        + b[j, i] * 2
        + b[i, k] * 4
        + b[k, i] * 8
        + b[j, k] * 16
        + b[k, j] * 32
    )
    wanted = _motif_codes(motif)
    count = int(np.isin(codes, list(wanted)).sum())
    return count / (n * (n - 1) * (n - 2) / 6)


def core_periphery_counts(g: Digraph) -> tuple[int, int, np.ndarray]:
    """Classify vertices by S_i = (k_i - ⟨k⟩)/(k_i + ⟨k⟩) with k = in+out degree.

    S_i > 0 marks core, S_i ≤ 0 periphery; an edgeless graph scores 0
    everywhere (all periphery).
    """
    b = (g.adjacency() != 0).astype(float)
    k = b.sum(axis=0) + b.sum(axis=1)
    mean_k = float(k.mean())
    denom = k + mean_k
    scores = np.where(denom > 0, (k - mean_k) / np.where(denom > 0, denom, 1.0), 0.0)
    core = int(np.sum(scores > 0))
    return core, g.n - core, scores


def local_clustering(g: Digraph) -> np.ndarray:
    """C_i = 2·e_i / (k_i·(k_i - 1)) on the undirected simple underlying graph.

    k_i counts distinct neighbors (either direction, no self-loops) and e_i
    the undirected edges among them; C_i = 0 when k_i < 2.
    """
    b = (g.adjacency() != 0)
    und = (b | b.T).astype(float)
    np.fill_diagonal(und, 0.0)
    k = und.sum(axis=1)
    # e_i = closed triangles through i = (U³)_ii / 2 on the 0/1 symmetric matrix
    tri = np.diagonal(und @ und @ und) / 2.0
    denom = k * (k - 1)
    return np.where(denom > 0, 2.0 * tri / np.where(denom > 0, denom, 1.0), 0.0)


@dataclass(frozen=True)
class StructuralReport:
    """Bundle of the structural metrics for one digraph."""

    pagerank: np.ndarray
    kendall_tau: Optional[float]
    motif_densities: dict
    core_count: int
    periphery_count: int
    local_clustering: np.ndarray

    @property
    def mean_clustering(self) -> float:
        return float(self.local_clustering.mean())

    def to_json_dict(self) -> dict:
        return {
            "pagerank": [float(x) for x in self.pagerank],
            "kendall_tau": self.kendall_tau,
            "motif_densities": {k: float(v) for k, v in self.motif_densities.items()},
            "core_count": self.core_count,
            "periphery_count": self.periphery_count,
            "local_clustering": [float(x) for x in self.local_clustering],
            "mean_clustering": self.mean_clustering,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "StructuralReport":
        return cls(
            pagerank=np.asarray(d["pagerank"], dtype=float),
            kendall_tau=d["kendall_tau"],
            motif_densities=dict(d["motif_densities"]),
            core_count=int(d["core_count"]),
            periphery_count=int(d["periphery_count"]),
            local_clustering=np.asarray(d["local_clustering"], dtype=float),
        )


def structural_report(
    g: Digraph, reference_pagerank: Optional[np.ndarray] = None
) -> StructuralReport:
    """All metrics at once; tau is computed against the reference ranking if given."""
    pr = pagerank(g)
    tau = None if reference_pagerank is None else kendall_tau(pr, reference_pagerank)
    motifs = {m: motif_density(g, m) for m in MOTIFS} if g.n >= 3 else {m: 0.0 for m in MOTIFS}
    core, peri, _ = core_periphery_counts(g)
    return StructuralReport(
        pagerank=pr,
        kendall_tau=tau,
        motif_densities=motifs,
        core_count=core,
        periphery_count=peri,
        local_clustering=local_clustering(g),
    )
