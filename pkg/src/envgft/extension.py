"""Construction of non-singular and admissible envelope extensions.

The three-step recipe: (1) pick g rows and g columns whose removal keeps the
rank, place a rank-g pseudo-permutation Q at their intersections and add
A + w·Q — the Laplace expansion gives |det(A + w·Q)| = |w|^g·|det(A₀)| with
A₀ the surviving non-singular submatrix; (2) read a cycle cover off a
nonzero-support permutation and chain the disjoint cycles into one
Hamiltonian cycle; (3) relabel along that cycle and collect the remaining
edge differences mod n into a connection set Γ, embedding the graph into the
circulant-structured Cayley digraph on Z_n, which the DFT diagonalizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import MultiEdgeError, NumericalError
from .exact import exact_left_nullspace, exact_nullspace, exact_rank, int_det
from .graph import Digraph, rank_profile
from .spectral import (
    ADMISSIBLE,
    DEFAULT_TOL_GAP,
    DEFAULT_TOL_ZERO,
    EigenSystem,
    eigendecompose,
    is_admissible,
)


@dataclass(frozen=True)
class DependencyList:
    """g rows (or columns) whose removal leaves the matrix rank unchanged."""

    kind: str  # "row" or "column"
    indices: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("row", "column"):
            raise ValueError(f"kind must be 'row' or 'column', got {self.kind!r}")
        object.__setattr__(self, "indices", tuple(sorted(int(i) for i in self.indices)))


@dataclass(frozen=True)
class PseudoPermutation:
    """Rank-g 0/1 matrix with one unit entry per dependency row/column pair."""

    entries: tuple[tuple[int, int], ...]
    n: int

    def __post_init__(self):
        entries = tuple((int(r), int(c)) for r, c in self.entries)
        object.__setattr__(self, "entries", entries)
        rows = [r for r, _ in entries]
        cols = [c for _, c in entries]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError("pseudo-permutation must use distinct rows and distinct columns")
        if any(not (0 <= r < self.n and 0 <= c < self.n) for r, c in entries):
            raise ValueError("pseudo-permutation entry out of range")

    @property
    def g(self) -> int:
        return len(self.entries)

    def as_matrix(self, weight: float = 1.0) -> np.ndarray:
        q = np.zeros((self.n, self.n))
        for r, c in self.entries:
            q[r, c] = weight
        return q


@dataclass(frozen=True)
class CycleCover:
    """Permutation σ supported on nonzero entries, with its orbit cycles."""

    sigma: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.cycles)


@dataclass(frozen=True)
class ConnectionSet:
    """Residues Γ ⊆ {1..n-1} defining Cay(Z_n, Γ): edge m → (m+k) mod n for k ∈ Γ."""

    n: int
    gamma: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "gamma", frozenset(int(k) for k in self.gamma))
        if 0 in self.gamma:
            raise ValueError("0 in the connection set would create self-loops")
        if 1 not in self.gamma:
            raise ValueError("connection sets here always contain 1 (Γ = Γ₀ ∪ {1})")
        if any(not (1 <= k < self.n) for k in self.gamma):
            raise ValueError(f"connection set members must lie in 1..{self.n - 1}")

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.gamma))


@dataclass(frozen=True)
class Provenance:
    """Which (rows, cols, Q) built an extension, plus any cycle-chaining edges."""

    rows: tuple[int, ...] = ()
    cols: tuple[int, ...] = ()
    q: tuple[tuple[int, int], ...] = ()
    added: tuple[tuple[int, int, float], ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "rows": list(self.rows),
            "cols": list(self.cols),
            "q": [[r, c] for r, c in self.q],
            "added": [[s, d, w] for s, d, w in self.added],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "Provenance":
        return cls(
            rows=tuple(d["rows"]),
            cols=tuple(d["cols"]),
            q=tuple((r, c) for r, c in d["q"]),
            added=tuple((s, d_, w) for s, d_, w in d["added"]),
        )


@dataclass(frozen=True)
class EnvelopeExtension:
    """Base digraph plus the added edges that make it non-singular."""

    base: Digraph
    added_edges: tuple[tuple[int, int, float], ...]
    extended: Digraph
    provenance: Provenance


def enumerate_dependency_lists(
    a,
    kind: str,
    restrict_to: Optional[Iterable[int]] = None,
) -> list[DependencyList]:
    """All size-g index sets whose row (or column) removal preserves rank.

    A size-g set S is removable exactly when the complementary rows form a
    basis of the row space, i.e. when S is a basis of the dual matroid; with
    N an exact integer basis of the left (resp. right) null space this
    reduces to det(N[S, :]) ≠ 0, an exact g×g integer test. Candidates are
    drawn from ``restrict_to`` when given, and any all-zero row/column is a
    mandatory member of every list. Returns [] when the matrix is already
    non-singular.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    if kind not in ("row", "column"):
        raise ValueError(f"kind must be 'row' or 'column', got {kind!r}")
    n = a.shape[0]
    null = exact_left_nullspace(a) if kind == "row" else exact_nullspace(a)
    g = len(null)
    if g != rank_profile(a).nullity:
        raise NumericalError(
            "exact and numerical nullity disagree; adjust the rank tolerance"
        )
    if g == 0:
        return []
    basis = np.array(null, dtype=object).T  # n × g, python ints
    lines = a if kind == "row" else a.T
    mandatory = [i for i in range(n) if not np.any(lines[i])]
    pool = sorted(set(range(n)) if restrict_to is None else {int(i) for i in restrict_to})
    if any(i not in pool for i in mandatory) or len(pool) < g:
        return []
    free_pool = [i for i in pool if i not in set(mandatory)]
    subsets = [
        tuple(sorted(mandatory + list(extra)))
        for extra in combinations(free_pool, g - len(mandatory))
    ]
    keep = _nonzero_subdets(basis, subsets, g)
    found = [DependencyList(kind=kind, indices=s) for s, ok in zip(subsets, keep) if ok]
    found.sort(key=lambda d: d.indices)
    return found


def _nonzero_subdets(basis: np.ndarray, subsets: list[tuple[int, ...]], g: int) -> np.ndarray:
    """Nonzero test for det(basis[S, :]) over many subsets S at once.

    The basis entries are integers, so the determinants are too; when the
    Hadamard bound stays well below 2^53 a batched float determinant decides
    exactly, otherwise each subset falls back to exact Bareiss elimination.
    """
    if not subsets:
        return np.zeros(0, dtype=bool)
    maxabs = max((abs(int(x)) for row in basis for x in row), default=0)
    if maxabs == 0:
        return np.zeros(len(subsets), dtype=bool)
    if (math.sqrt(g) * maxabs) ** g < 2**50:
        flat = np.array(basis.tolist(), dtype=float)
        idx = np.asarray(subsets, dtype=np.intp)
        dets = np.linalg.det(flat[idx])
        return np.abs(np.round(dets)) != 0
    return np.array(
        [int_det([[int(x) for x in basis[i]] for i in s]) != 0 for s in subsets],
        dtype=bool,
    )


def pseudo_permutations(
    r: DependencyList, c: DependencyList, n: Optional[int] = None
) -> list[PseudoPermutation]:
    """All g! matchings of dependency rows to dependency columns.

    Rows are taken in ascending order; results are ordered lexicographically
    by the induced column assignment. ``n`` fixes the ambient matrix size
    (defaults to just covering the largest index).
    """
    if r.kind != "row" or c.kind != "column":
        raise ValueError("expected a row list and a column list, in that order")
    if len(r.indices) != len(c.indices):
        raise ValueError("row and column dependency lists must have equal length")
    if n is None:
        n = max(max(r.indices, default=0), max(c.indices, default=0)) + 1
    out = []
    for cols in permutations(c.indices):
        out.append(PseudoPermutation(entries=tuple(zip(r.indices, cols)), n=n))
    return out


def nonsingular_extension(
    base: Digraph,
    q: PseudoPermutation,
    weight: float = 1.0,
    allow_multi: bool = False,
) -> EnvelopeExtension:
    """Add the pseudo-permutation's edges with the given weight.

    The result is verified non-singular. If a Q entry coincides with an
    existing edge, the weights sum only when ``allow_multi`` is set;
    otherwise the collision is a MultiEdgeError.
    """
    if weight == 0.0:
        raise ValueError("added-edge weight must be nonzero")
    if q.n != base.n:
        raise ValueError("pseudo-permutation size does not match the digraph")
    existing = base.edge_set
    collisions = [(r, c) for r, c in q.entries if (r, c) in existing]
    if collisions and not allow_multi:
        raise MultiEdgeError(
            f"added edges {collisions} collide with existing edges; "
            "pass allow_multi to sum weights"
        )
    added = tuple((r, c, float(weight)) for r, c in q.entries)
    extended = base.with_edges_added(added, allow_multi=allow_multi)
    if rank_profile(extended.adjacency()).nullity != 0:
        raise NumericalError(
            "extension came out singular; the dependency lists were not valid"
        )
    rows = tuple(sorted(r for r, _ in q.entries))
    cols = tuple(sorted(c for _, c in q.entries))
    prov = Provenance(rows=rows, cols=cols, q=q.entries, added=added)
    return EnvelopeExtension(base=base, added_edges=added, extended=extended, provenance=prov)


def find_cycle_cover(a) -> CycleCover:
    """Permutation σ with a[i, σ(i)] ≠ 0 for all i, plus its orbit cycles.

    Found as a perfect matching of rows to columns in the nonzero-support
    bipartite graph, scanning vertices in ascending index order so the
    result is deterministic. A non-singular matrix always has one.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    n = a.shape[0]
    adj = [list(np.nonzero(a[i])[0]) for i in range(n)]
    match_col = [-1] * n  # column -> matched row

    def augment(i: int, visited: set[int]) -> bool:
        for j in adj[i]:
            if j in visited:
                continue
            visited.add(j)
            if match_col[j] == -1 or augment(match_col[j], visited):
                match_col[j] = i
                return True
        return False

    for i in range(n):
        if not augment(i, set()):
            raise ValueError(
                "no permutation with nonzero support exists; the matrix is "
                "structurally singular"
            )
    sigma = [-1] * n
    for j, i in enumerate(match_col):
        sigma[i] = j
    cycles = []
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        v = start
        while not seen[v]:
            seen[v] = True
            cyc.append(v)
            v = sigma[v]
        cycles.append(tuple(cyc))
    return CycleCover(sigma=tuple(sigma), cycles=tuple(cycles))


def chain_cycles(
    cover: CycleCover,
) -> tuple[tuple[int, ...], list[tuple[int, int]], list[tuple[int, int]]]:
    """Stitch disjoint cover cycles into one Hamiltonian cycle.

    Deterministic rule: on each cycle cut the edge leaving its minimum-index
    vertex, order cycles by that minimum, and re-route each cut source to
    the next cycle's cut destination (cyclically). Returns the vertex
    sequence plus the added (red) and removed (green) edges; both lists are
    empty when the cover is already a single cycle.
    """
    if cover.k == 0:
        raise ValueError("cycle cover is empty")
    sigma = cover.sigma
    cycles = sorted(cover.cycles, key=min)
    if len(cycles) == 1:
        cyc = cycles[0]
        start = cyc.index(min(cyc))
        return tuple(cyc[start:] + cyc[:start]), [], []
    anchors = [min(c) for c in cycles]
    removed = [(v, sigma[v]) for v in anchors]
    k = len(cycles)
    added = [(anchors[m], sigma[anchors[(m + 1) % k]]) for m in range(k)]
    seq = [anchors[0]]
    for m in range(1, k + 1):
        nxt = anchors[m % k]
        v = sigma[nxt]
        while v != nxt:
            seq.append(v)
            v = sigma[v]
        if m < k:
            seq.append(nxt)
    ham = tuple(seq)
    assert len(ham) == len(sigma) and len(set(ham)) == len(sigma)
    return ham, added, removed


def cayley_embedding(g: Digraph, ham: Sequence[int]) -> tuple[tuple[int, ...], ConnectionSet]:
    """Relabel along a Hamiltonian cycle and read off the connection set.

    After relabeling the cycle to 0→1→...→n-1→0, every remaining edge (a, b)
    contributes the forward difference (b - a) mod n to Γ₀ and Γ = Γ₀ ∪ {1};
    the relabeled graph is then a subgraph of Cay(Z_n, Γ) by construction.
    Note the difference is directed, not an absolute value: edge 3→1 in Z₅
    contributes (1-3) mod 5 = 3.
    """
    n = g.n
    ham = tuple(int(v) for v in ham)
    if len(ham) != n or set(ham) != set(range(n)):
        raise ValueError("sequence must visit every vertex exactly once")
    edge_set = g.edge_set
    for a, b in zip(ham, ham[1:] + ham[:1]):
        if (a, b) not in edge_set:
            raise ValueError(f"({a}, {b}) is not an edge; sequence is not a Hamiltonian cycle")
    pos = {v: i for i, v in enumerate(ham)}
    gamma = {1}
    for s, d, _ in g.edges:
        diff = (pos[d] - pos[s]) % n
        if diff == 0:
            raise ValueError(f"self-loop ({s}, {d}) cannot embed in a loop-free Cayley digraph")
        gamma.add(diff)
    relabeling = tuple(pos[v] for v in range(n))
    return relabeling, ConnectionSet(n=n, gamma=frozenset(gamma))


def cayley_adjacency(gamma: ConnectionSet) -> Digraph:
    """Cay(Z_n, Γ): unit-weight edge m → (m+k) mod n for every k in Γ."""
    edges = tuple(
        (m, (m + k) % gamma.n, 1.0) for m in range(gamma.n) for k in gamma.sorted()
    )
    return Digraph(n=gamma.n, edges=edges)


def cayley_spectrum(gamma: ConnectionSet) -> np.ndarray:
    """Eigenvalues λ_j = Σ_{k∈Γ} exp(2πi·jk/n), j = 0..n-1.

    The eigenvector matrix is always the inverse unitary DFT: column j of
    𝔉⁻¹ is the eigenvector of λ_j, since the adjacency is Σ_k C^k over Γ
    and the cycle matrix C acts on that column as multiplication by
    exp(2πi·j/n).
    """
    n = gamma.n
    j = np.arange(n)
    lam = np.zeros(n, dtype=complex)
    for k in gamma.sorted():
        lam += np.exp(2j * np.pi * j * k / n)
    return lam


@dataclass(frozen=True)
class CayleyHint:
    """Fallback guidance for extensions that are non-singular but not admissible."""

    relabeling: tuple[int, ...]
    gamma: ConnectionSet
    chain_edges: tuple[tuple[int, int, float], ...]


@dataclass(frozen=True)
class SearchHit:
    extension: EnvelopeExtension
    verdict: str
    eigen: Optional[EigenSystem] = None
    cayley_hint: Optional[CayleyHint] = None


VERDICT_MULTI_EDGE = "multi_edge"
VERDICT_EIG_FAILED = "eigensolver_failed"


def candidate_provenances(
    base: Digraph,
    *,
    restrict_rows: Optional[Iterable[int]] = None,
    require_rows: Optional[Iterable[int]] = None,
    canonical_q_only: bool = False,
) -> tuple[Iterator[tuple[DependencyList, DependencyList, PseudoPermutation]], dict]:
    """(ℛ, 𝒞, Q) triples in canonical lexicographic order, plus their counts.

    The triples come back as a lazy iterator so that count-only callers never
    materialize the full product β_col · β_row · g!.
    """
    a = base.adjacency()
    prof = rank_profile(a)
    counts = {"g": prof.nullity, "rank": prof.rank}
    if prof.nullity == 0:
        counts.update(beta_row=0, beta_col=0, total=1)
        return iter(()), counts
    row_lists = enumerate_dependency_lists(a, "row", restrict_to=restrict_rows)
    if require_rows is not None:
        need = {int(i) for i in require_rows}
        row_lists = [r for r in row_lists if need.issubset(r.indices)]
    col_lists = enumerate_dependency_lists(a, "column")
    q_per_pair = 1 if canonical_q_only else math.factorial(prof.nullity)
    counts.update(
        beta_row=len(row_lists),
        beta_col=len(col_lists),
        total=len(row_lists) * len(col_lists) * q_per_pair,
    )

    def generate():
        for r in row_lists:
            for c in col_lists:
                qs = pseudo_permutations(r, c, n=base.n)
                if canonical_q_only:
                    qs = qs[:1]
                yield from ((r, c, q) for q in qs)

    return generate(), counts


def evaluate_candidate(
    base: Digraph,
    q: PseudoPermutation,
    *,
    weight: float = 1.0,
    allow_multi: bool = False,
    tol_zero: float = DEFAULT_TOL_ZERO,
    tol_gap: float = DEFAULT_TOL_GAP,
) -> SearchHit:
    """Build one extension and classify it; never raises on a collision."""
    collides = any((r, c) in base.edge_set for r, c in q.entries)
    ext = nonsingular_extension(base, q, weight=weight, allow_multi=True)
    if collides and not allow_multi:
        return SearchHit(extension=ext, verdict=VERDICT_MULTI_EDGE)
    return _classify(ext, tol_zero, tol_gap)


def _classify(ext: EnvelopeExtension, tol_zero: float, tol_gap: float) -> SearchHit:
    try:
        eig = eigendecompose(ext.extended.adjacency())
    except NumericalError:
        return SearchHit(extension=ext, verdict=VERDICT_EIG_FAILED)
    verdict = is_admissible(eig, tol_zero=tol_zero, tol_gap=tol_gap)
    hint = None
    if verdict != ADMISSIBLE:
        hint = _cayley_fallback(ext.extended)
    return SearchHit(extension=ext, verdict=verdict, eigen=eig, cayley_hint=hint)


def _cayley_fallback(extended: Digraph) -> Optional[CayleyHint]:
    """Where additional edges could go: embed into Cay(Z_n, Γ) via a cycle cover."""
    try:
        cover = find_cycle_cover(extended.adjacency())
        ham, chain_added, _ = chain_cycles(cover)
        chain_edges = tuple(
            (s, d, 1.0) for s, d in chain_added if (s, d) not in extended.edge_set
        )
        augmented = extended.with_edges_added(chain_edges)
        relabeling, gamma = cayley_embedding(augmented, ham)
    except ValueError:
        return None
    return CayleyHint(relabeling=relabeling, gamma=gamma, chain_edges=chain_edges)


def search_admissible_extensions(
    base: Digraph,
    *,
    restrict_rows: Optional[Iterable[int]] = None,
    require_rows: Optional[Iterable[int]] = None,
    weight: float = 1.0,
    allow_multi: bool = False,
    limit: Optional[int] = None,
    canonical_q_only: bool = False,
    tol_zero: float = DEFAULT_TOL_ZERO,
    tol_gap: float = DEFAULT_TOL_GAP,
) -> Iterator[SearchHit]:
    """Lazily yield every candidate extension with its admissibility verdict.

    Candidates run in canonical lexicographic (ℛ, 𝒞, Q) order and their
    count is β_col · β_row · g! when nothing is restricted. A digraph that is
    already non-singular (g = 0) is classified and yielded as its own, only,
    candidate with no added edges.
    """
    a = base.adjacency()
    if rank_profile(a).nullity == 0:
        ext = EnvelopeExtension(
            base=base, added_edges=(), extended=base, provenance=Provenance()
        )
        yield _classify(ext, tol_zero, tol_gap)
        return
    triples, _ = candidate_provenances(
        base,
        restrict_rows=restrict_rows,
        require_rows=require_rows,
        canonical_q_only=canonical_q_only,
    )
    for count, (_, _, q) in enumerate(triples):
        if limit is not None and count >= limit:
            return
        yield evaluate_candidate(
            base,
            q,
            weight=weight,
            allow_multi=allow_multi,
            tol_zero=tol_zero,
            tol_gap=tol_gap,
        )
