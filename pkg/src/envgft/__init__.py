"""Admissible envelope extensions of digraphs and the GFTs they induce.

Build minimal edge-augmented supergraphs whose adjacency matrices are
diagonalizable with distinct nonzero eigenvalues, and use their
eigendecompositions as approximate graph Fourier transforms for the
original digraph: convolution products, shift-invariant systems, and a
spectral/structural compatibility filtering pipeline.
"""

from .graph import Digraph, RankProfile, load_edge_list, rank_profile, unit_impulse
from .spectral import (
    ADMISSIBLE,
    CompatibilityIndices,
    EigenSystem,
    GftBasis,
    compare_bases,
    compatibility_indices,
    dft_matrix,
    eigendecompose,
    gft_of_matrix,
    is_admissible,
    make_gft_basis,
    scale_basis,
    stability_norms,
    weighted_cycle_basis,
)
from .extension import (
    ConnectionSet,
    CycleCover,
    DependencyList,
    EnvelopeExtension,
    PseudoPermutation,
    cayley_adjacency,
    cayley_embedding,
    cayley_spectrum,
    chain_cycles,
    enumerate_dependency_lists,
    find_cycle_cover,
    nonsingular_extension,
    pseudo_permutations,
    search_admissible_extensions,
)
from .convolution import (
    ConvolutionContext,
    SystemPolynomial,
    apply_system,
    convolution_context,
    convolve,
    cyclic_convolve,
    impulse_of_polynomial,
    signal_to_polynomial,
)
from .metrics import (
    StructuralReport,
    core_periphery_counts,
    kendall_tau,
    local_clustering,
    motif_density,
    pagerank,
    structural_report,
)
from .pipeline import (
    ExtensionScorecard,
    FilterSpec,
    apply_filters,
    emit_reports,
    repro_friendship,
    repro_line,
    run_enumeration,
)

__version__ = "0.1.0"
