"""Convolution product on admissible digraphs.

For an admissible digraph with GFT F = V⁻¹, the product
x ⊛ y = V·(Fx ⊙ Fy) is the unique bilinear operation satisfying the
convolution theorem F(x ⊛ y) = Fx · Fy, and every polynomial system h(A)
acts as convolution with its impulse s_h = V·(h(λ₀), ..., h(λ_{n-1}))ᵀ.
The classical normalized cyclic convolution is included as the baseline the
cycle digraph reduces to.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import InadmissibleError
from .graph import Digraph, as_signal, ones_signal
from .spectral import (
    ADMISSIBLE,
    DEFAULT_TOL_GAP,
    DEFAULT_TOL_ZERO,
    GftBasis,
    eigendecompose,
    gft_of_matrix,
    is_admissible,
)


@dataclass(frozen=True)
class SystemPolynomial:
    """Polynomial h acting on the adjacency matrix; coefficients in ascending degree."""

    coefficients: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients", tuple(complex(c) for c in self.coefficients)
        )

    @property
    def degree(self) -> int:
        coeffs = self.coefficients
        for i in range(len(coeffs) - 1, -1, -1):
            if coeffs[i] != 0:
                return i
        return 0

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=complex)
        out = np.zeros_like(x)
        for c in reversed(self.coefficients):
            out = out * x + c
        return out


@dataclass(frozen=True)
class ConvolutionContext:
    """An admissible digraph's GFT basis, frozen for repeated products."""

    basis: GftBasis

    @property
    def n(self) -> int:
        return self.basis.n

    @property
    def eigenvalues(self) -> np.ndarray:
        return self.basis.eigen.values

    @property
    def identity_element(self) -> np.ndarray:
        """e = F⁻¹·𝟏, the unit of ⊛ (its transform is all ones)."""
        return self.basis.inverse @ ones_signal(self.n)


def convolution_context(
    source: Union[Digraph, np.ndarray, GftBasis],
    tol_zero: float = DEFAULT_TOL_ZERO,
    tol_gap: float = DEFAULT_TOL_GAP,
) -> ConvolutionContext:
    """Build a context, refusing digraphs that are not admissible."""
    if isinstance(source, GftBasis):
        basis = source
        verdict = is_admissible(basis.eigen, tol_zero=tol_zero, tol_gap=tol_gap)
    else:
        a = source.adjacency() if isinstance(source, Digraph) else np.asarray(source)
        eig = eigendecompose(a)
        verdict = is_admissible(eig, tol_zero=tol_zero, tol_gap=tol_gap)
        if verdict != ADMISSIBLE:
            raise InadmissibleError(f"digraph is not admissible (verdict: {verdict})")
        basis = gft_of_matrix(a)
    if verdict != ADMISSIBLE:
        raise InadmissibleError(f"basis is not admissible (verdict: {verdict})")
    return ConvolutionContext(basis=basis)


def convolve(ctx: ConvolutionContext, x, y) -> np.ndarray:
    """x ⊛ y = F⁻¹(Fx ⊙ Fy); commutative and bilinear by construction."""
    x = as_signal(x, n=ctx.n)
    y = as_signal(y, n=ctx.n)
    f = ctx.basis.forward
    return ctx.basis.inverse @ ((f @ x) * (f @ y))


def impulse_of_polynomial(ctx: ConvolutionContext, h: SystemPolynomial) -> np.ndarray:
    """s_h = F⁻¹·h(D)·𝟏, equivalently V times the vector of h at the eigenvalues."""
    return ctx.basis.inverse @ h(ctx.eigenvalues)


def signal_to_polynomial(ctx: ConvolutionContext, x) -> SystemPolynomial:
    """The degree-<n polynomial with h_x(λ_k) = (Fx)[k], so that s_{h_x} = x.

    Coefficients come from Newton divided differences on the eigenvalue
    nodes; admissibility (distinct eigenvalues) is exactly what makes the
    interpolation well-posed.
    """
    x = as_signal(x, n=ctx.n)
    nodes = ctx.eigenvalues
    vals = ctx.basis.forward @ x
    n = ctx.n
    gaps = np.abs(nodes[:, None] - nodes[None, :])[np.triu_indices(n, k=1)]
    if gaps.size:
        scale = float(np.abs(nodes).max())
        if float(gaps.min()) <= 1e-13 * max(scale, 1.0):
            raise InadmissibleError("eigenvalues nearly collide; interpolation is ill-posed")
        if scale > 0 and float(gaps.min()) / scale < 1e-6:
            warnings.warn(
                "eigenvalue nodes are poorly separated; interpolated "
                "coefficients may be inaccurate",
                RuntimeWarning,
                stacklevel=2,
            )
    # Newton divided differences, then expansion to monomial coefficients.
    dd = np.array(vals, dtype=complex)
    for j in range(1, n):
        dd[j:] = (dd[j:] - dd[j - 1 : -1]) / (nodes[j:] - nodes[: n - j])
    coeffs = np.zeros(n, dtype=complex)
    for j in range(n - 1, -1, -1):
        # coeffs <- coeffs * (x - nodes[j]) + dd[j]
        shifted = np.zeros(n, dtype=complex)
        shifted[1:] = coeffs[:-1]
        coeffs = shifted - nodes[j] * coeffs
        coeffs[0] += dd[j]
    return SystemPolynomial(coefficients=tuple(coeffs))


def apply_system(ctx: ConvolutionContext, h: SystemPolynomial, x) -> np.ndarray:
    """h(A)·x computed spectrally as F⁻¹·h(D)·F·x."""
    x = as_signal(x, n=ctx.n)
    return ctx.basis.inverse @ (h(ctx.eigenvalues) * (ctx.basis.forward @ x))


def cyclic_convolve(x, y) -> np.ndarray:
    """Classical normalized circular convolution, (x ∗ y)[j] = Σ_m x[m]·y[j-m] / √n."""
    x = as_signal(x)
    y = as_signal(y, n=x.shape[0])
    n = x.shape[0]
    out = np.zeros(n, dtype=complex)
    for m in range(n):
        out += x[m] * np.roll(y, m)
    return out / np.sqrt(n)
