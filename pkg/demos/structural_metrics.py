"""Structural metrics used to rank envelope extensions against their base.

PageRank concordance (Kendall tau), triad motif densities, core/periphery
counts and local clustering, computed for a small digraph and one of its
admissible extensions.
"""

import numpy as np

from envgft import Digraph, kendall_tau, pagerank, search_admissible_extensions
from envgft.metrics import structural_report

edges = [(0, 1), (1, 2), (2, 3), (3, 1), (4, 2), (4, 5), (5, 0), (2, 6)]
base = Digraph(n=7, edges=tuple((s, d, 1.0) for s, d in edges))

best = max(
    (h for h in search_admissible_extensions(base) if h.verdict == "admissible"),
    key=lambda h: kendall_tau(pagerank(h.extension.extended), pagerank(base)),
)
ext = best.extension.extended
print("base edges:     ", sorted(base.edge_set))
print("extension adds: ", best.extension.added_edges)

rep_base = structural_report(base)
rep_ext = structural_report(ext, reference_pagerank=rep_base.pagerank)

print(f"\nkendall tau of PageRanks: {rep_ext.kendall_tau:.4f}")
print(f"{'metric':<24} {'base':>10} {'extension':>10}")
for name, b, e in [
    ("core count", rep_base.core_count, rep_ext.core_count),
    ("periphery count", rep_base.periphery_count, rep_ext.periphery_count),
    ("mean clustering", rep_base.mean_clustering, rep_ext.mean_clustering),
    ("3-cycle density", rep_base.motif_densities["directed-3-cycle"],
     rep_ext.motif_densities["directed-3-cycle"]),
    ("feed-forward density", rep_base.motif_densities["feed-forward-loop"],
     rep_ext.motif_densities["feed-forward-loop"]),
]:
    print(f"{name:<24} {b:>10.4f} {e:>10.4f}")

print("\nPageRank per node (base vs extension):")
for i in range(base.n):
    print(f"  {i}: {rep_base.pagerank[i]:.4f} -> {rep_ext.pagerank[i]:.4f}")
