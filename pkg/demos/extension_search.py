"""Enumerate every envelope extension of a small singular digraph.

The demo graph has nullity 2, so non-singularization must add two edges: one
per (row dependency list, column dependency list, matching) choice. We list
all candidates with their admissibility verdicts, then run the scorecard
pipeline and the tau/cond filter stack on them.
"""

import tempfile

from envgft import Digraph, enumerate_dependency_lists, search_admissible_extensions
from envgft.pipeline import FilterSpec, apply_filters, load_scorecards, run_enumeration

edges = [(0, 1), (1, 2), (2, 3), (3, 1), (4, 2), (4, 5), (5, 0), (2, 6)]
g = Digraph(n=7, edges=tuple((s, d, 1.0) for s, d in edges))
a = g.adjacency()

rows = enumerate_dependency_lists(a, "row")
cols = enumerate_dependency_lists(a, "column")
print("row dependency lists:", [d.indices for d in rows])
print("column dependency lists:", [d.indices for d in cols])

print("\ncandidates:")
for hit in search_admissible_extensions(g):
    print(f"  +{hit.extension.added_edges} -> {hit.verdict}")
    if hit.cayley_hint is not None:
        print(f"     cayley fallback: Gamma = {hit.cayley_hint.gamma.sorted()}")

with tempfile.TemporaryDirectory() as td:
    summary = run_enumeration(g, FilterSpec(), td, jobs=2)
    print("\npipeline summary:", summary)
    outcome = apply_filters(load_scorecards(td), FilterSpec(tau_min=0.5, cond_max=50.0))
    print(f"filters (tau >= 0.5, cond <= 50): {outcome.status}")
    for card in outcome.selected:
        print(f"  {card.candidate_id}  tau={card.tau:.4f}  cond={card.cond:.2f}  "
              f"added={card.provenance.added}")
