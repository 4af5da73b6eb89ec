"""End-to-end driver: enumerate extensions, score, filter, report.

Every candidate extension gets a scorecard (spectral compatibility indices,
condition number, stability norms, PageRank Kendall correlation against the
base graph, structural metrics, and the shift-system impulse F⁻¹D𝟏). Cards
persist one JSON per candidate plus a canonical aggregate CSV; the filter
stack then keeps candidates with tau ≥ tau_min and cond ≤ cond_max. Figure
CSVs for the distribution/comparison plots are emitted with fixed headers.

Runs are deterministic: candidates are evaluated in canonical lexicographic
(rows, cols, Q) order and results are sorted canonically before writing, so
aggregate CSVs are byte-identical regardless of the worker count.
"""

from __future__ import annotations

import csv
import hashlib
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from itertools import islice
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import NumericalError
from .extension import (
    Provenance,
    SearchHit,
    candidate_provenances,
    enumerate_dependency_lists,
    evaluate_candidate,
    search_admissible_extensions,
)
from .graph import Digraph, load_edge_list, rank_profile, signal_from_json, signal_to_json
from .metrics import (
    MOTIF_3CYCLE,
    MOTIF_FFL,
    StructuralReport,
    pagerank,
    structural_report,
)
from .spectral import (
    ADMISSIBLE,
    DEFAULT_TOL_GAP,
    DEFAULT_TOL_ZERO,
    compare_bases,
    compatibility_indices,
    eigendecompose,
    eigenvalue_match_distance,
    make_gft_basis,
    weighted_cycle_basis,
)

AGGREGATE_HEADER = [
    "candidate_id",
    "rows",
    "cols",
    "perm",
    "added_edges",
    "admissible",
    "delta",
    "Delta",
    "cond",
    "stab_left",
    "stab_right",
    "tau",
    "core",
    "periphery",
    "mean_clustering",
    "motif_3cycle",
    "motif_ffl",
]

FIGURE_HEADERS = {
    "dist_indices.csv": ["candidate_id", "delta", "Delta", "cond"],
    "dist_tau.csv": ["candidate_id", "tau"],
    "pagerank_compare.csv": None,  # node,base,<id>...
    "motif.csv": ["graph", "motif_3cycle", "motif_ffl"],
    "coreperiph.csv": ["graph", "core", "periphery"],
    "clustering.csv": None,  # node,base,<id>...
    "stability.csv": ["candidate_id", "stab_left", "stab_right"],
    "system_signals.csv": None,  # node,<id>_re,<id>_im,...
    "basis_diff": ["row", "col", "value"],
    "added_edges.csv": ["candidate_id", "r", "c", "weight"],
}


@dataclass(frozen=True)
class FilterSpec:
    """Thresholds and options for the extension filter stack.

    ``restrict_rows`` names row indices every row dependency list must
    contain (the duplicate-row restriction of the survey study). A
    ``tau_min`` above 1 is allowed and simply selects nothing.
    """

    tau_min: float = 0.91
    cond_max: float = 80.0
    restrict_rows: Optional[frozenset[int]] = None
    allow_multi: bool = False
    weight: float = 1.0

    def __post_init__(self):
        if self.tau_min < -1.0:
            raise ValueError("tau_min below -1 is meaningless for a correlation")
        if self.cond_max < 1.0:
            raise ValueError("cond_max must be at least 1")
        if self.weight == 0.0:
            raise ValueError("added-edge weight must be nonzero")
        if self.restrict_rows is not None:
            object.__setattr__(self, "restrict_rows", frozenset(int(i) for i in self.restrict_rows))


@dataclass(frozen=True)
class ExtensionScorecard:
    """Everything recorded about one candidate extension."""

    candidate_id: str
    provenance: Provenance
    admissible: str
    delta: Optional[float] = None
    big_delta: Optional[float] = None
    cond: Optional[float] = None
    stability: Optional[tuple[float, float]] = None
    tau: Optional[float] = None
    structural: Optional[StructuralReport] = None
    system_impulse: Optional[np.ndarray] = None

    def to_json_dict(self) -> dict:
        return {
            "candidate_id": self.candidate_id,
            "provenance": self.provenance.to_json_dict(),
            "admissible": self.admissible,
            "delta": self.delta,
            "Delta": self.big_delta,
            "cond": self.cond,
            "stability": list(self.stability) if self.stability else None,
            "tau": self.tau,
            "structural": self.structural.to_json_dict() if self.structural else None,
            "system_impulse": (
                signal_to_json(self.system_impulse)
                if self.system_impulse is not None
                else None
            ),
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "ExtensionScorecard":
        return cls(
            candidate_id=d["candidate_id"],
            provenance=Provenance.from_json_dict(d["provenance"]),
            admissible=d["admissible"],
            delta=d["delta"],
            big_delta=d["Delta"],
            cond=d["cond"],
            stability=tuple(d["stability"]) if d["stability"] else None,
            tau=d["tau"],
            structural=(
                StructuralReport.from_json_dict(d["structural"]) if d["structural"] else None
            ),
            system_impulse=(
                signal_from_json(d["system_impulse"])
                if d["system_impulse"] is not None
                else None
            ),
        )


def candidate_id(prov: Provenance) -> str:
    blob = json.dumps(prov.to_json_dict(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:12]


def score_hit(
    hit: SearchHit,
    base: Digraph,
    base_pagerank: np.ndarray,
    indices_only: bool = False,
) -> ExtensionScorecard:
    """Turn a search hit into a scorecard; non-admissible hits stay minimal."""
    prov = hit.extension.provenance
    cid = candidate_id(prov)
    if hit.verdict != ADMISSIBLE or hit.eigen is None:
        return ExtensionScorecard(candidate_id=cid, provenance=prov, admissible=hit.verdict)
    try:
        basis = make_gft_basis(hit.eigen)
    except NumericalError:
        return ExtensionScorecard(candidate_id=cid, provenance=prov, admissible="eigensolver_failed")
    extended = hit.extension.extended
    q = extended.adjacency() - base.adjacency()
    idx = compatibility_indices(q, basis.inverse)
    impulse = basis.inverse @ basis.eigen.values
    if indices_only:
        return ExtensionScorecard(
            candidate_id=cid,
            provenance=prov,
            admissible=hit.verdict,
            delta=idx.delta,
            big_delta=idx.big_delta,
            cond=basis.cond,
            stability=basis.stability,
            system_impulse=impulse,
        )
    structural = structural_report(extended, reference_pagerank=base_pagerank)
    return ExtensionScorecard(
        candidate_id=cid,
        provenance=prov,
        admissible=hit.verdict,
        delta=idx.delta,
        big_delta=idx.big_delta,
        cond=basis.cond,
        stability=basis.stability,
        tau=structural.kendall_tau,
        structural=structural,
        system_impulse=impulse,
    )


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):  # incl. np.float64: builtin repr round-trips
        return repr(float(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return str(value)


def _prov_columns(prov: Provenance) -> tuple[str, str, str, str]:
    rows = ";".join(str(i) for i in prov.rows)
    cols = ";".join(str(i) for i in prov.cols)
    perm = ";".join(str(c) for _, c in sorted(prov.q))
    added = ";".join(f"{s}>{d}@{_fmt(w)}" for s, d, w in prov.added)
    return rows, cols, perm, added


def aggregate_row(card: ExtensionScorecard) -> list[str]:
    rows, cols, perm, added = _prov_columns(card.provenance)
    structural = card.structural
    return [
        card.candidate_id,
        rows,
        cols,
        perm,
        added,
        card.admissible,
        _fmt(card.delta),
        _fmt(card.big_delta),
        _fmt(card.cond),
        _fmt(card.stability[0] if card.stability else None),
        _fmt(card.stability[1] if card.stability else None),
        _fmt(card.tau),
        _fmt(structural.core_count if structural else None),
        _fmt(structural.periphery_count if structural else None),
        _fmt(structural.mean_clustering if structural else None),
        _fmt(structural.motif_densities.get(MOTIF_3CYCLE) if structural else None),
        _fmt(structural.motif_densities.get(MOTIF_FFL) if structural else None),
    ]


def run_enumeration(
    g: Digraph,
    spec: FilterSpec,
    out_dir,
    *,
    jobs: int = 1,
    count_only: bool = False,
    limit: Optional[int] = None,
    require_rows: Optional[Iterable[int]] = None,
    canonical_q_only: bool = False,
    indices_only: bool = False,
    tol_zero: float = DEFAULT_TOL_ZERO,
    tol_gap: float = DEFAULT_TOL_GAP,
) -> dict:
    """Enumerate, score and persist every candidate extension.

    Writes ``scorecards/<id>.json`` per candidate and a canonical
    ``aggregate.csv``; returns the summary counts. ``count_only`` reports
    Total_Inv = β_col · β_row · g! without building anything.
    """
    required = require_rows if require_rows is not None else spec.restrict_rows
    triples, counts = candidate_provenances(
        g,
        require_rows=required,
        canonical_q_only=canonical_q_only,
    )
    summary = {
        "rank": counts["rank"],
        "nullity": counts["g"],
        "beta_row": counts.get("beta_row", 0),
        "beta_col": counts.get("beta_col", 0),
        "total_inv": counts["total"],
        "nonsingular": None,
        "admissible": None,
        "passing": None,
        "eigensolver_failures": 0,
    }
    if count_only:
        return summary

    out_dir = Path(out_dir)
    card_dir = out_dir / "scorecards"
    card_dir.mkdir(parents=True, exist_ok=True)
    base_pr = pagerank(g)

    if counts["g"] == 0:
        hits = list(search_admissible_extensions(g, tol_zero=tol_zero, tol_gap=tol_gap))
    else:
        if limit is not None:
            triples = islice(triples, limit)

        def build(triple):
            _, _, q = triple
            return evaluate_candidate(
                g,
                q,
                weight=spec.weight,
                allow_multi=spec.allow_multi,
                tol_zero=tol_zero,
                tol_gap=tol_gap,
            )

        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                hits = list(pool.map(build, triples, chunksize=16))
        else:
            hits = [build(t) for t in triples]

    def score(hit):
        return score_hit(hit, g, base_pr, indices_only=indices_only)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            cards = list(pool.map(score, hits, chunksize=16))
    else:
        cards = [score(h) for h in hits]

    order = sorted(
        range(len(cards)),
        key=lambda i: (
            hits[i].extension.provenance.rows,
            hits[i].extension.provenance.cols,
            tuple(c for _, c in hits[i].extension.provenance.q),
        ),
    )
    cards = [cards[i] for i in order]
    hits = [hits[i] for i in order]

    for card in cards:
        path = card_dir / f"{card.candidate_id}.json"
        path.write_text(json.dumps(card.to_json_dict(), sort_keys=True), encoding="utf-8")
    with (out_dir / "aggregate.csv").open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(AGGREGATE_HEADER)
        for card in cards:
            writer.writerow(aggregate_row(card))

    n_fail = sum(1 for c in cards if c.admissible == "eigensolver_failed")
    n_adm = sum(1 for c in cards if c.admissible == ADMISSIBLE)
    outcome = apply_filters(cards, spec) if n_adm else None
    summary.update(
        nonsingular=len(cards),
        admissible=n_adm,
        passing=len(outcome.selected) if outcome else 0,
        eigensolver_failures=n_fail,
    )
    return summary


@dataclass(frozen=True)
class FilterOutcome:
    selected: tuple[ExtensionScorecard, ...]
    max_tau_overall: Optional[ExtensionScorecard]
    status: str


def apply_filters(scorecards: Iterable[ExtensionScorecard], spec: FilterSpec) -> FilterOutcome:
    """Keep admissible candidates with tau ≥ tau_min and cond ≤ cond_max.

    Results are sorted by descending tau (candidate id breaks ties); the
    overall argmax-tau candidate is reported regardless of the thresholds.
    """
    cards = list(scorecards)
    if not cards:
        raise ValueError("no scorecards to filter")
    scored = [
        c
        for c in cards
        if c.admissible == ADMISSIBLE and c.tau is not None and c.cond is not None
    ]
    selected = [c for c in scored if c.tau >= spec.tau_min and c.cond <= spec.cond_max]
    selected.sort(key=lambda c: (-c.tau, c.candidate_id))
    best = max(scored, key=lambda c: c.tau) if scored else None
    status = "ok" if selected else "no candidates"
    return FilterOutcome(selected=tuple(selected), max_tau_overall=best, status=status)


def load_scorecards(out_dir) -> list[ExtensionScorecard]:
    card_dir = Path(out_dir) / "scorecards"
    if not card_dir.is_dir():
        raise FileNotFoundError(f"no scorecards directory under {out_dir}")
    cards = []
    for path in sorted(card_dir.glob("*.json")):
        cards.append(ExtensionScorecard.from_json_dict(json.loads(path.read_text())))
    return cards


def _rebuild_extended(base: Digraph, card: ExtensionScorecard) -> Digraph:
    return base.with_edges_added(card.provenance.added, allow_multi=True)


def emit_reports(
    selection: Sequence[ExtensionScorecard],
    base: Digraph,
    out_dir,
    all_scorecards: Optional[Sequence[ExtensionScorecard]] = None,
    max_basis_pairs: int = 8,
) -> dict:
    """Write the per-figure CSV files; returns a manifest of paths.

    Distribution files (dist_tau, dist_indices) cover ``all_scorecards`` when
    given, the selection otherwise; the comparison files cover the selection
    plus a base-graph row.
    """
    if not selection:
        raise ValueError("selection is empty; nothing to report")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    population = list(all_scorecards) if all_scorecards is not None else list(selection)
    manifest: dict[str, str] = {}

    def write_csv(name: str, header: list[str], rows: Iterable[Sequence]) -> None:
        path = out_dir / name
        with path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([_fmt(x) for x in row])
        manifest[name] = str(path)

    valued = [c for c in population if c.admissible == ADMISSIBLE and c.delta is not None]
    write_csv(
        "dist_indices.csv",
        FIGURE_HEADERS["dist_indices.csv"],
        ([c.candidate_id, c.delta, c.big_delta, c.cond] for c in valued),
    )
    write_csv(
        "dist_tau.csv",
        FIGURE_HEADERS["dist_tau.csv"],
        ([c.candidate_id, c.tau] for c in valued if c.tau is not None),
    )

    base_report = structural_report(base)
    ids = [c.candidate_id for c in selection]

    write_csv(
        "pagerank_compare.csv",
        ["node", "base", *ids],
        (
            [node, base_report.pagerank[node], *(c.structural.pagerank[node] for c in selection)]
            for node in range(base.n)
        ),
    )
    write_csv(
        "motif.csv",
        FIGURE_HEADERS["motif.csv"],
        [
            ["base", base_report.motif_densities[MOTIF_3CYCLE], base_report.motif_densities[MOTIF_FFL]],
            *(
                [c.candidate_id, c.structural.motif_densities[MOTIF_3CYCLE], c.structural.motif_densities[MOTIF_FFL]]
                for c in selection
            ),
        ],
    )
    write_csv(
        "coreperiph.csv",
        FIGURE_HEADERS["coreperiph.csv"],
        [
            ["base", base_report.core_count, base_report.periphery_count],
            *(
                [c.candidate_id, c.structural.core_count, c.structural.periphery_count]
                for c in selection
            ),
        ],
    )
    write_csv(
        "clustering.csv",
        ["node", "base", *ids],
        (
            [
                node,
                base_report.local_clustering[node],
                *(c.structural.local_clustering[node] for c in selection),
            ]
            for node in range(base.n)
        ),
    )
    write_csv(
        "stability.csv",
        FIGURE_HEADERS["stability.csv"],
        ([c.candidate_id, c.stability[0], c.stability[1]] for c in selection),
    )
    write_csv(
        "system_signals.csv",
        ["node", *(f"{cid}_{part}" for cid in ids for part in ("re", "im"))],
        (
            [
                node,
                *(
                    val
                    for c in selection
                    for val in (
                        float(c.system_impulse[node].real),
                        float(c.system_impulse[node].imag),
                    )
                ),
            ]
            for node in range(base.n)
        ),
    )
    write_csv(
        "added_edges.csv",
        FIGURE_HEADERS["added_edges.csv"],
        (
            [c.candidate_id, r, col, w]
            for c in selection
            for r, col, w in c.provenance.added
        ),
    )

    vectors = {}
    for c in selection[: max_basis_pairs]:
        ext = _rebuild_extended(base, c)
        vectors[c.candidate_id] = eigendecompose(ext.adjacency()).vectors
    capped = selection[: max_basis_pairs]
    for i in range(len(capped)):
        for j in range(i + 1, len(capped)):
            table = compare_bases(vectors[capped[i].candidate_id], vectors[capped[j].candidate_id])
            name = f"basis_diff_{i}_{j}.csv"
            write_csv(
                name,
                FIGURE_HEADERS["basis_diff"],
                (
                    [r, col, float(table[r, col])]
                    for r in range(table.shape[0])
                    for col in range(table.shape[1])
                ),
            )

    (out_dir / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True))
    manifest["manifest.json"] = str(out_dir / "manifest.json")
    return manifest


def repro_line(n: int = 16, weights: Sequence[float] = (1.0, 0.5, 0.01)) -> list[dict]:
    """Closed-form line→cycle suite: Δ = w, δ = w/√n, κ = w^{-(n-1)/n}.

    Each row also carries cross-checks against the dense eigensolver route:
    relative eigenvalue agreement, condition-number agreement, and the
    (δ, Δ) indices recovered from the unit-norm eigenvectors after rescaling
    them to the closed form's column norm.
    """
    rows = []
    for w in weights:
        basis = weighted_cycle_basis(n, w)
        q0 = np.zeros((n, n))
        q0[n - 1, 0] = 1.0
        idx = compatibility_indices(w * q0, basis.inverse)
        # dense-eigensolver route
        c_w = np.zeros((n, n))
        c_w[np.arange(n - 1), np.arange(1, n)] = 1.0
        c_w[n - 1, 0] = w
        eig = eigendecompose(c_w)
        eig_rel = eigenvalue_match_distance(basis.eigen.values, eig.values) / float(
            np.max(np.abs(basis.eigen.values))
        )
        dense_basis = make_gft_basis(eig)
        cond_rel = abs(dense_basis.cond - basis.cond) / basis.cond
        col_norm = float(np.linalg.norm(basis.inverse[:, 0]))
        dense_idx = compatibility_indices(w * q0, dense_basis.inverse)
        rows.append(
            {
                "n": n,
                "w": w,
                "delta": idx.delta,
                "Delta": idx.big_delta,
                "cond": basis.cond,
                "kappa_closed_form": w ** (-(n - 1) / n) if w <= 1 else w ** ((n - 1) / n),
                "check_eig_rel": eig_rel,
                "check_cond_rel": float(cond_rel),
                "check_Delta_rescaled": dense_idx.big_delta * col_norm,
                "check_delta_rescaled": dense_idx.delta * col_norm,
            }
        )
    return rows


def detect_duplicate_rows(a) -> list[tuple[int, ...]]:
    """Groups of identical rows (each group sorted, groups in index order)."""
    a = np.asarray(a, dtype=float)
    groups: dict[bytes, list[int]] = {}
    for i in range(a.shape[0]):
        groups.setdefault(a[i].tobytes(), []).append(i)
    return [tuple(v) for v in groups.values() if len(v) > 1]


def repro_friendship(
    edges_path,
    out_dir,
    *,
    fmt: str = "plain",
    n: Optional[int] = None,
    tau_min: float = 0.91,
    cond_max: float = 80.0,
    jobs: int = 1,
    weighted_extrema: bool = True,
    published: Optional[dict] = None,
) -> dict:
    """Full survey-digraph reproduction pipeline.

    Loads the 70-vertex friendship edge list, reports rank/nullity and the
    dependency-list counts, the unrestricted Total_Inv, then runs the
    duplicate-row-restricted enumeration (one canonical Q per pair, matching
    the published 7775-candidate accounting), applies the tau/cond filter
    stack, emits all figure CSVs, and soft-checks the published (δ, Δ)
    extrema within 10%.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    g = load_edge_list(edges_path, format=fmt, n=n)
    a = g.adjacency()
    prof = rank_profile(a)

    spec = FilterSpec(tau_min=tau_min, cond_max=cond_max)
    count_summary = run_enumeration(g, spec, out_dir, count_only=True)

    col_lists = enumerate_dependency_lists(a, "column")
    zero_cols = [j for j in range(g.n) if not np.any(a[:, j])]
    dup_groups = detect_duplicate_rows(a)
    require = sorted({i for grp in dup_groups for i in grp}) or None

    summary = {
        "n": g.n,
        "edges": len(g.edges),
        "rank": prof.rank,
        "nullity": prof.nullity,
        "beta_col": count_summary["beta_col"],
        "beta_row": count_summary["beta_row"],
        "total_inv": count_summary["total_inv"],
        "zero_in_degree": zero_cols,
        "zero_cols_in_every_col_list": all(
            set(zero_cols).issubset(c.indices) for c in col_lists
        ),
        "duplicate_row_groups": dup_groups,
    }

    run = run_enumeration(
        g,
        spec,
        out_dir,
        jobs=jobs,
        require_rows=require,
        canonical_q_only=True,
    )
    if require is not None and run["nonsingular"] == 0:
        # the duplicate-row restriction is a dataset-specific heuristic; on
        # graphs where no row list contains all duplicates, fall back
        summary["restriction_note"] = (
            "duplicate-row restriction excluded every row list; ran unrestricted"
        )
        require = None
        run = run_enumeration(g, spec, out_dir, jobs=jobs, canonical_q_only=True)
    summary["restricted_row_lists"] = run["beta_row"]
    summary["nonsingular"] = run["nonsingular"]
    cards = load_scorecards(out_dir)
    admissible_cards = [c for c in cards if c.admissible == ADMISSIBLE]
    summary["admissible"] = len(admissible_cards)

    outcome = apply_filters(cards, spec)
    summary["tau_passing"] = sum(
        1 for c in admissible_cards if c.tau is not None and c.tau >= tau_min
    )
    summary["envelopes"] = len(outcome.selected)
    if outcome.selected:
        best = outcome.selected[0]
        summary["best_envelope"] = {
            "candidate_id": best.candidate_id,
            "tau": best.tau,
            "cond": best.cond,
            "added": list(best.provenance.added),
        }
    if outcome.max_tau_overall:
        summary["max_tau_overall"] = {
            "candidate_id": outcome.max_tau_overall.candidate_id,
            "tau": outcome.max_tau_overall.tau,
            "cond": outcome.max_tau_overall.cond,
        }

    if admissible_cards:
        summary["index_extrema_w1"] = _extrema(admissible_cards)
    if weighted_extrema and admissible_cards:
        wdir = out_dir / "weighted_w0.01"
        run_enumeration(
            g,
            replace(spec, weight=0.01),
            wdir,
            jobs=jobs,
            require_rows=require,
            canonical_q_only=True,
            indices_only=True,
        )
        wcards = [c for c in load_scorecards(wdir) if c.admissible == ADMISSIBLE]
        if wcards:
            summary["index_extrema_w0.01"] = _extrema(wcards)

    if published:
        summary["published_check"] = _soft_check(summary, published)

    if outcome.selected:
        emit_reports(outcome.selected, g, out_dir, all_scorecards=cards)
    summary["status"] = outcome.status
    (out_dir / "summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True))
    return summary


def _extrema(cards: Sequence[ExtensionScorecard]) -> dict:
    deltas = [c.delta for c in cards]
    bigs = [c.big_delta for c in cards]
    conds = [c.cond for c in cards]
    return {
        "delta_min": min(deltas),
        "delta_max": max(deltas),
        "Delta_min": min(bigs),
        "Delta_max": max(bigs),
        "cond_min": min(conds),
        "cond_max": max(conds),
    }


def _soft_check(summary: dict, published: dict, rel: float = 0.10) -> dict:
    """Compare computed extrema against published values within ``rel``.

    A mismatch is reported as a diagnostic (convention-sensitive), never an
    error: published eigenvector-normalization conventions are unknown.
    """
    out = {}
    computed = summary.get("index_extrema_w1", {})
    for key, target in published.items():
        value = computed.get(key)
        if value is None:
            out[key] = {"published": target, "computed": None, "within": False}
            continue
        within = abs(value - target) <= rel * abs(target)
        out[key] = {"published": target, "computed": value, "within": bool(within)}
    return out
