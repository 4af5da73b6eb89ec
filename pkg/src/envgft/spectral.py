"""Eigendecompositions, admissibility tests and graph Fourier bases.

A digraph is *admissible* when its adjacency matrix is diagonalizable with
distinct nonzero eigenvalues; the graph Fourier transform is then F = V⁻¹
where the columns of V are right eigenvectors. This module provides the
numeric eigensolver wrapper with a fixed normalization convention, the
admissibility verdict, the (δ, Δ) compatibility indices measuring how well
an extension's eigenvectors serve the base graph, and the closed-form basis
of the weight-w cycle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import NumericalError

ADMISSIBLE = "admissible"
NONSINGULAR_ONLY = "nonsingular_only"
SINGULAR = "singular"
DEFECTIVE = "defective"

#: κ(V) above which we call the matrix numerically defective.
DEFECTIVE_COND = 1e12

DEFAULT_TOL_ZERO = 1e-10
DEFAULT_TOL_GAP = 1e-8


def dft_matrix(n: int) -> np.ndarray:
    """Unitary DFT, entries exp(-2πi·kl/n)/√n. Its inverse is its conjugate."""
    k = np.arange(n)
    return np.exp(-2j * np.pi * np.outer(k, k) / n) / np.sqrt(n)


@dataclass(frozen=True)
class EigenSystem:
    """Eigenvalues and a right-eigenvector matrix, column k for values[k]."""

    values: np.ndarray
    vectors: np.ndarray
    normalization: str = "unit-norm-positive-max-phase"

    @property
    def n(self) -> int:
        return self.values.shape[0]


def eigendecompose(a) -> EigenSystem:
    """Dense non-symmetric eigendecomposition with a deterministic convention.

    Eigenvalues are sorted by (descending |λ|, ascending arg); each
    eigenvector column has unit 2-norm with its largest-magnitude entry made
    real and positive.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("eigendecompose expects a square matrix")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    try:
        values, vectors = np.linalg.eig(a)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver failed: {exc}") from exc
    order = np.lexsort((np.angle(values), -np.abs(values)))
    values = values[order]
    vectors = vectors[:, order]
    vectors = _normalize_columns(vectors)
    return EigenSystem(values=values, vectors=vectors)


def _normalize_columns(v: np.ndarray) -> np.ndarray:
    v = np.array(v, dtype=complex)
    for k in range(v.shape[1]):
        col = v[:, k]
        nrm = np.linalg.norm(col)
        if nrm == 0:
            continue
        col = col / nrm
        mags = np.abs(col)
        # first entry within fp jitter of the max, so exact-magnitude ties
        # (DFT harmonics) break deterministically
        lead = col[int(np.argmax(mags >= (1.0 - 1e-8) * mags.max()))]
        if lead != 0:
            col = col * (np.conj(lead) / np.abs(lead))
        v[:, k] = col
    return v


def is_admissible(
    sys: EigenSystem,
    tol_zero: float = DEFAULT_TOL_ZERO,
    tol_gap: float = DEFAULT_TOL_GAP,
) -> str:
    """Classify an eigensystem.

    singular          min|λ| ≤ tol_zero · max|λ|
    defective         κ(V) > DEFECTIVE_COND  (diagonalizability proxy)
    nonsingular_only  some pair |λᵢ - λⱼ| ≤ tol_gap · max|λ|
    admissible        otherwise
    """
    mags = np.abs(sys.values)
    scale = float(mags.max()) if mags.size else 0.0
    if scale == 0.0 or float(mags.min()) <= tol_zero * scale:
        return SINGULAR
    if np.linalg.cond(sys.vectors, 2) > DEFECTIVE_COND:
        return DEFECTIVE
    lam = sys.values
    diff = np.abs(lam[:, None] - lam[None, :])
    iu = np.triu_indices(lam.shape[0], k=1)
    if iu[0].size and float(diff[iu].min()) <= tol_gap * scale:
        return NONSINGULAR_ONLY
    return ADMISSIBLE


@dataclass(frozen=True)
class GftBasis:
    """Graph Fourier transform F = V⁻¹ together with stability diagnostics."""

    eigen: EigenSystem
    forward: np.ndarray
    inverse: np.ndarray
    cond: float
    stability: tuple[float, float]

    @property
    def n(self) -> int:
        return self.eigen.n

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "eigenvalues": _interleave(self.eigen.values),
            "vectors": _interleave(self.inverse.reshape(-1)),
            "forward": _interleave(self.forward.reshape(-1)),
            "normalization": self.eigen.normalization,
            "cond": self.cond,
            "stability": list(self.stability),
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "GftBasis":
        n = int(d["n"])
        values = _deinterleave(d["eigenvalues"])
        inverse = _deinterleave(d["vectors"]).reshape(n, n)
        forward = _deinterleave(d["forward"]).reshape(n, n)
        eig = EigenSystem(values=values, vectors=inverse, normalization=d["normalization"])
        return cls(
            eigen=eig,
            forward=forward,
            inverse=inverse,
            cond=float(d["cond"]),
            stability=(float(d["stability"][0]), float(d["stability"][1])),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))


def _interleave(z: np.ndarray) -> list[float]:
    z = np.asarray(z, dtype=complex).reshape(-1)
    out = np.empty(2 * z.size)
    out[0::2] = z.real
    out[1::2] = z.imag
    return out.tolist()


def _deinterleave(flat) -> np.ndarray:
    arr = np.asarray(flat, dtype=float)
    return arr[0::2] + 1j * arr[1::2]


def make_gft_basis(eigen: EigenSystem) -> GftBasis:
    """Invert the eigenvector matrix; raises if it is numerically singular."""
    v = eigen.vectors
    cond = float(np.linalg.cond(v, 2))
    if not np.isfinite(cond) or cond > 1.0 / np.finfo(float).eps:
        raise NumericalError("eigenvector matrix is singular; inverse does not exist")
    try:
        f = np.linalg.inv(v)
    except np.linalg.LinAlgError as exc:
        raise NumericalError("eigenvector matrix is singular; inverse does not exist") from exc
    return GftBasis(
        eigen=eigen,
        forward=f,
        inverse=v,
        cond=cond,
        stability=stability_norms(f, v),
    )


def gft_of_matrix(a) -> GftBasis:
    return make_gft_basis(eigendecompose(a))


def stability_norms(f, v) -> tuple[float, float]:
    """Spectral norms of (F·V - I, V·F - I); both ~0 for a faithful inverse pair."""
    f = np.asarray(f, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if f.shape != v.shape or f.ndim != 2 or f.shape[0] != f.shape[1]:
        raise ValueError("stability_norms expects two square matrices of equal shape")
    eye = np.eye(f.shape[0])
    left = float(np.linalg.norm(f @ v - eye, 2))
    right = float(np.linalg.norm(v @ f - eye, 2))
    return left, right


@dataclass(frozen=True)
class CompatibilityIndices:
    """δ = max_k ‖Q·w_k‖ and Δ = ‖Q·V‖₂ for an added-edge matrix Q."""

    delta: float
    big_delta: float

    def __post_init__(self):
        if self.delta < 0 or self.big_delta < 0:
            raise ValueError("indices are norms and must be non-negative")


def compatibility_indices(q, v) -> CompatibilityIndices:
    """Compatibility of eigenbasis V with the base graph, per added-edge matrix Q.

    Q is the difference A_extended - A_base (weights included), so its rows
    pick out exactly the eigenvector components perturbed by the new edges.
    """
    q = np.asarray(q, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if q.shape[1] != v.shape[0]:
        raise ValueError("dimension mismatch between Q and V")
    qv = q @ v
    big = float(np.linalg.norm(qv, 2))
    delta = float(np.max(np.linalg.norm(qv, axis=0))) if qv.size else 0.0
    return CompatibilityIndices(delta=delta, big_delta=big)


def scale_basis(v, eps: float) -> np.ndarray:
    """ε·V — every column rescaled; κ is unchanged, δ and Δ scale linearly."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    return eps * np.asarray(v, dtype=complex)


def weighted_cycle_basis(n: int, w: float) -> GftBasis:
    """Closed-form GFT of the weight-w cycle (line graph closed sink→source).

    Eigenvalues are the n-th roots of w; the eigenvector matrix is
    V_w = E_w · 𝔉⁻¹ with E_w = diag(1, w^{1/n}, ..., w^{(n-1)/n}), kept in
    the natural column order k = 0..n-1 and in this exact scaling (not the
    unit-norm convention) so that Δ = w, δ = w/√n and κ = w^{-(n-1)/n} hold
    verbatim for w ≤ 1.
    """
    if n < 2:
        raise ValueError("cycle needs at least 2 vertices")
    if w <= 0:
        raise ValueError("weight must be positive")
    k = np.arange(n)
    lam = w ** (1.0 / n) * np.exp(2j * np.pi * k / n)
    e_scale = w ** (k / n)
    v = e_scale[:, None] * np.conj(dft_matrix(n))
    f = dft_matrix(n) * (1.0 / e_scale)[None, :]  # 𝔉 · E_w⁻¹
    eig = EigenSystem(values=lam, vectors=v, normalization=f"weighted-cycle-closed-form(w={w})")
    cond = float(np.linalg.cond(v, 2))
    return GftBasis(eigen=eig, forward=f, inverse=v, cond=cond, stability=stability_norms(f, v))


def eigenvalue_match_distance(a, b) -> float:
    """Largest pairing distance between two eigenvalue multisets.

    Greedy nearest-neighbour matching, adequate when eigenvalue separation
    dwarfs the numerical noise (sorting complex values lexicographically is
    not: conjugate pairs with equal real parts may swap under fp jitter).
    """
    a = np.asarray(a, dtype=complex).reshape(-1)
    rest = list(np.asarray(b, dtype=complex).reshape(-1))
    if a.shape[0] != len(rest):
        raise ValueError("eigenvalue lists must have equal length")
    worst = 0.0
    for lam in a:
        dists = [abs(lam - mu) for mu in rest]
        i = int(np.argmin(dists))
        worst = max(worst, dists[i])
        rest.pop(i)
    return worst


def compare_bases(v1, v2) -> np.ndarray:
    """Column-magnitude difference table: entry (j, k) = ‖ |v1[:,j]| - |v2[:,k]| ‖₂."""
    v1 = np.asarray(v1, dtype=complex)
    v2 = np.asarray(v2, dtype=complex)
    if v1.shape != v2.shape:
        raise ValueError("compare_bases expects matrices of equal shape")
    m1 = np.abs(v1)
    m2 = np.abs(v2)
    diff = m1[:, :, None] - m2[:, None, :]
    return np.linalg.norm(diff, axis=0)
