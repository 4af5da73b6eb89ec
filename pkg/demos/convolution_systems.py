"""Convolution on admissible digraphs and the system-as-convolution picture.

On the 4-cycle, the graph product reduces to the classical normalized cyclic
convolution. On a generic admissible digraph, every polynomial of the
adjacency matrix acts as convolution with its impulse response.
"""

import numpy as np

from envgft import (
    ConnectionSet,
    SystemPolynomial,
    cayley_adjacency,
    convolution_context,
    convolve,
    cyclic_convolve,
    impulse_of_polynomial,
    unit_impulse,
)
from envgft.convolution import apply_system, signal_to_polynomial

n = 4
cycle = cayley_adjacency(ConnectionSet(n=n, gamma=frozenset({1})))
ctx = convolution_context(cycle)

d1, d2 = unit_impulse(n, 1), unit_impulse(n, 2)
print("delta[1] * delta[2] on the 4-cycle:")
print("  graph product:   ", np.round(convolve(ctx, d1, d2), 10))
print("  classical cyclic:", np.round(cyclic_convolve(d1, d2), 10))

h = SystemPolynomial((0.0, 1.0))  # h(lambda) = lambda, i.e. the shift itself
s = impulse_of_polynomial(ctx, h)
print("\nimpulse of the shift system:", np.round(s, 10), "(= sqrt(n) * delta[n-1])")

x = np.array([1.0, -2.0, 0.5, 3.0], dtype=complex)
print("shift applied spectrally:   ", np.round(apply_system(ctx, h, x), 10))
print("shift applied by adjacency: ", cycle.adjacency() @ x)
print("convolution with impulse:   ", np.round(convolve(ctx, s, x), 10))

h_x = signal_to_polynomial(ctx, x)
print("\nany signal is an impulse response: coefficients of h_x =",
      np.round(h_x.coefficients, 6))
print("s_{h_x} reproduces x:", np.allclose(impulse_of_polynomial(ctx, h_x), x))
