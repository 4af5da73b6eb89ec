"""Cayley digraphs on Z_n are diagonalized by the DFT, whatever the connection set.

The adjacency of Cay(Z_n, Gamma) is a sum of powers of the cycle matrix, so
its eigenvalues are sums of roots of unity and its eigenvectors are always
the inverse-DFT columns. We print a few spectra and confirm against a dense
eigensolver.
"""

import numpy as np

from envgft import ConnectionSet, cayley_adjacency, cayley_spectrum, eigendecompose
from envgft.spectral import eigenvalue_match_distance

for n, gamma in [(6, {1}), (6, {1, 2}), (8, {1, 3, 5}), (12, {1, 4, 6})]:
    cs = ConnectionSet(n=n, gamma=frozenset(gamma))
    lam = cayley_spectrum(cs)
    graph = cayley_adjacency(cs)
    dense = eigendecompose(graph.adjacency())
    gap = eigenvalue_match_distance(lam, dense.values)
    print(f"Cay(Z_{n}, {sorted(gamma)}):")
    for j, v in enumerate(lam):
        print(f"  lambda_{j} = {v:.4f}")
    print(f"  dense eigensolver agrees to {gap:.2e}\n")

# the complete digraph is the extreme case: Gamma = {1..n-1}
n = 7
cs = ConnectionSet(n=n, gamma=frozenset(range(1, n)))
lam = np.real_if_close(cayley_spectrum(cs))
print(f"complete digraph on {n} vertices: spectrum {np.round(lam, 10).tolist()}")
