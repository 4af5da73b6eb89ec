"""Acceptance suite: one test per top-level criterion, at its stated tolerance.

Each test prints an ``ACCEPTANCE <name>: PASS`` line (run with ``pytest -s``
to watch them stream). The survey-dataset reproduction is conditional: it
runs only when the 70-vertex friendship edge list is available locally
(``data/highschool_fall_1957.txt`` or ``$ENVELOPE_FRIENDSHIP``); everything
else is self-contained.
"""

import json
import os
import subprocess
import sys
import time
from pathlib import Path

import numpy as np
import pytest

from envgft.exact import int_det
from envgft.convolution import (
    SystemPolynomial,
    convolution_context,
    convolve,
    cyclic_convolve,
    impulse_of_polynomial,
)
from envgft.errors import InadmissibleError
from envgft.extension import (
    ConnectionSet,
    cayley_adjacency,
    cayley_embedding,
    cayley_spectrum,
    chain_cycles,
    enumerate_dependency_lists,
    find_cycle_cover,
    nonsingular_extension,
    pseudo_permutations,
)
from envgft.graph import Digraph, load_edge_list, rank_profile, unit_impulse
from envgft.metrics import (
    MOTIF_3CYCLE,
    MOTIF_FFL,
    kendall_tau,
    local_clustering,
    motif_density,
    pagerank,
)
from envgft.pipeline import FilterSpec, repro_friendship, repro_line, run_enumeration
from envgft.spectral import ADMISSIBLE, eigendecompose, is_admissible

from test_metrics import clustering_bruteforce, motif_bruteforce, pagerank_linear_solve


def report(name: str, ok: bool, detail: str = ""):
    line = f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line, flush=True)
    assert ok, line


def test_closed_form_weighted_cycle():
    t0 = time.perf_counter()
    rows = repro_line(16, [1.0, 0.5, 0.01])
    by_w = {r["w"]: r for r in rows}
    ok = True
    for w in (1.0, 0.5, 0.01):
        r = by_w[w]
        ok &= abs(r["Delta"] - w) <= 1e-9 * w
        ok &= abs(r["delta"] - w / 4.0) <= 1e-9 * w
        ok &= abs(r["cond"] - w ** (-15.0 / 16.0)) <= 1e-9 * w ** (-15.0 / 16.0)
    ok &= abs(by_w[0.01]["cond"] - 74.98942) <= 1e-3
    ok &= abs(by_w[1.0]["cond"] - 1.0) <= 1e-12
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 1.0
    report("closed-form-weighted-cycle", ok, f"{elapsed:.3f}s")


def test_cayley_diagonalization():
    scipy_opt = pytest.importorskip("scipy.optimize")
    t0 = time.perf_counter()
    rng = np.random.default_rng(101)
    worst = 0.0
    for _ in range(200):
        n = int(rng.integers(2, 65))
        extra = rng.random(n - 1) < rng.uniform(0.05, 0.6)
        gamma = frozenset({1} | {k for k in range(2, n) if extra[k - 1]})
        cs = ConnectionSet(n=n, gamma=gamma)
        lam = cayley_spectrum(cs)
        dense = np.linalg.eigvals(cayley_adjacency(cs).adjacency())
        cost = np.abs(lam[:, None] - dense[None, :])
        ri, ci = scipy_opt.linear_sum_assignment(cost)
        worst = max(worst, float(cost[ri, ci].max()))
    elapsed = time.perf_counter() - t0
    report(
        "cayley-diagonalization",
        worst <= 1e-8 and elapsed < 30.0,
        f"worst match {worst:.2e}, {elapsed:.1f}s",
    )


def test_nonsingularization_determinant_identity():
    t0 = time.perf_counter()
    rng = np.random.default_rng(202)
    matrices = 0
    extensions = 0
    ok = True
    while matrices < 500:
        n = int(rng.integers(3, 9))
        a = (rng.random((n, n)) < rng.uniform(0.3, 0.6)).astype(float)
        ai = a.astype(int).tolist()
        if int_det(ai) != 0:
            continue
        matrices += 1
        g = Digraph.from_adjacency(a) if a.any() else Digraph(n=n)
        rows = enumerate_dependency_lists(a, "row")
        cols = enumerate_dependency_lists(a, "column")
        for r in rows:
            keep_r = [i for i in range(n) if i not in r.indices]
            for c in cols:
                keep_c = [j for j in range(n) if j not in c.indices]
                det_a0 = abs(int_det([[ai[i][j] for j in keep_c] for i in keep_r]))
                for q in pseudo_permutations(r, c, n=n):
                    ext = nonsingular_extension(g, q, allow_multi=True)
                    det_ext = abs(int_det(ext.extended.adjacency().astype(int).tolist()))
                    ok &= det_ext == det_a0
                    extensions += 1
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 60.0
    report(
        "nonsingularization-determinant-identity",
        ok,
        f"{matrices} matrices, {extensions} extensions, {elapsed:.1f}s",
    )


def test_hamiltonian_chaining():
    t0 = time.perf_counter()
    rng = np.random.default_rng(303)
    ok = True
    done = 0
    while done < 200:
        n = int(rng.integers(2, 13))
        a = (rng.random((n, n)) < rng.uniform(0.3, 0.7)).astype(float)
        np.fill_diagonal(a, 0.0)  # loop-free supports so the Cayley embedding applies
        if int_det(a.astype(int).tolist()) == 0:
            continue
        done += 1
        cover = find_cycle_cover(a)
        ham, added, removed = chain_cycles(cover)
        ok &= sorted(ham) == list(range(n))
        ok &= len(added) <= cover.k
        g = Digraph.from_adjacency(a)
        augmented = g.with_edges_added(
            [(s, d, 1.0) for s, d in added if (s, d) not in g.edge_set]
        )
        relabeling, gamma = cayley_embedding(augmented, ham)
        cay_edges = cayley_adjacency(gamma).edge_set
        relabeled = {
            (relabeling[s], relabeling[d]) for s, d, _ in augmented.edges
        }
        ok &= relabeled.issubset(cay_edges)
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 10.0
    report("hamiltonian-chaining", ok, f"{done} supports, {elapsed:.1f}s")


def _random_admissible_digraph(rng, n, max_cond=1e6):
    while True:
        a = (rng.random((n, n)) < 0.5).astype(float)
        if not a.any():
            continue
        eig = eigendecompose(a)
        if is_admissible(eig) != ADMISSIBLE:
            continue
        if np.linalg.cond(eig.vectors, 2) > max_cond:
            continue
        return Digraph.from_adjacency(a)


def test_convolution_suite():
    t0 = time.perf_counter()
    rng = np.random.default_rng(404)
    worst_theorem = 0.0
    worst_system = 0.0
    for _ in range(100):
        n = int(rng.integers(2, 13))
        g = _random_admissible_digraph(rng, n)
        ctx = convolution_context(g)
        f = ctx.basis.forward
        x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        y = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        # (a) convolution theorem
        err = np.linalg.norm(f @ convolve(ctx, x, y) - (f @ x) * (f @ y))
        worst_theorem = max(worst_theorem, float(err))
        # (b) systems are convolution operators, h(A) by explicit powers.
        # Coefficients are scaled by the spectral radius so |h(lambda)| stays
        # O(1); unscaled random coefficients make h(A)x blow up as rho^deg and
        # no floating evaluation could meet the tolerance.
        deg = int(rng.integers(0, n))
        a = g.adjacency()
        rho = max(1.0, float(np.abs(np.linalg.eigvals(a)).max()))
        h = SystemPolynomial(
            tuple(rng.standard_normal() / rho**k for k in range(deg + 1))
        )
        hax = np.zeros(n, dtype=complex)
        power = np.eye(n)
        for coeff in h.coefficients:
            hax += coeff * (power @ x)
            power = power @ a
        s_h = impulse_of_polynomial(ctx, h)
        err_b = np.linalg.norm(hax - convolve(ctx, s_h, x)) / max(np.linalg.norm(x), 1e-30)
        worst_system = max(worst_system, float(err_b))
    # (c) the cycle digraph reduces to classical normalized cyclic convolution
    worst_cyclic = 0.0
    for n in range(2, 17):
        cyc = cayley_adjacency(ConnectionSet(n=n, gamma=frozenset({1})))
        ctx = convolution_context(cyc)
        for _ in range(5):
            x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            y = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            err = np.linalg.norm(convolve(ctx, x, y) - cyclic_convolve(x, y))
            worst_cyclic = max(worst_cyclic, float(err))
    elapsed = time.perf_counter() - t0
    ok = worst_theorem <= 1e-10 and worst_system <= 1e-8 and worst_cyclic <= 1e-10
    ok &= elapsed < 30.0
    report(
        "convolution-suite",
        ok,
        f"theorem {worst_theorem:.2e}, systems {worst_system:.2e}, "
        f"cyclic {worst_cyclic:.2e}, {elapsed:.1f}s",
    )


def test_metric_oracles():
    g_chain = Digraph(n=3, edges=((0, 1, 1.0), (1, 2, 1.0)))
    pr_err = float(np.abs(pagerank(g_chain) - pagerank_linear_solve(g_chain)).max())
    tau = kendall_tau([1, 2, 3, 4], [1, 3, 2, 4])
    rng = np.random.default_rng(505)
    brute_ok = True
    for _ in range(50):
        n = int(rng.integers(3, 9))
        a = (rng.random((n, n)) < 0.35).astype(float)
        np.fill_diagonal(a, 0.0)
        g = Digraph.from_adjacency(a) if a.any() else Digraph(n=n)
        brute_ok &= bool(
            np.allclose(local_clustering(g), clustering_bruteforce(g), atol=1e-12)
        )
        for m in (MOTIF_3CYCLE, MOTIF_FFL):
            brute_ok &= motif_density(g, m) == pytest.approx(motif_bruteforce(g, m))
    ok = pr_err <= 1e-10 and tau == pytest.approx(2.0 / 3.0, abs=1e-15) and brute_ok
    report("metric-oracles", ok, f"pagerank err {pr_err:.1e}, tau {tau}")


def test_determinism_across_jobs(tmp_path):
    edges = [(0, 1), (1, 2), (2, 3), (3, 1), (4, 2), (4, 5), (5, 0), (2, 6)]
    demo = tmp_path / "demo.txt"
    demo.write_text("\n".join(f"{s} {d}" for s, d in edges) + "\n")
    digests = []
    for jobs in ("1", "4"):
        out_dir = tmp_path / f"run{jobs}"
        proc = subprocess.run(
            [
                sys.executable,
                "-m",
                "envgft",
                "--out",
                str(out_dir),
                "--jobs",
                jobs,
                "enumerate",
                str(demo),
            ],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, proc.stderr
        digests.append((out_dir / "aggregate.csv").read_bytes())
    report("determinism-across-jobs", digests[0] == digests[1])


FRIENDSHIP_PATH = os.environ.get(
    "ENVELOPE_FRIENDSHIP",
    str(Path(__file__).resolve().parents[1] / "data" / "highschool_fall_1957.txt"),
)

PUBLISHED_TABLE2_W1 = {
    "delta_min": 0.0359,
    "delta_max": 0.1195,
    "Delta_min": 0.1707,
    "Delta_max": 0.3165,
}


@pytest.mark.skipif(
    not Path(FRIENDSHIP_PATH).exists(),
    reason=f"friendship dataset not available at {FRIENDSHIP_PATH} "
    "(fetch with `plots fetch-highschool`); property suites constitute acceptance",
)
def test_friendship_reproduction(tmp_path):
    t0 = time.perf_counter()
    jobs = min(8, os.cpu_count() or 1)
    summary = repro_friendship(
        FRIENDSHIP_PATH,
        tmp_path / "friendship",
        jobs=jobs,
        published=PUBLISHED_TABLE2_W1,
    )
    ok = True
    ok &= summary["rank"] == 66 and summary["nullity"] == 4
    ok &= summary["beta_col"] == 5
    ok &= len(summary["zero_in_degree"]) == 3 and summary["zero_cols_in_every_col_list"]
    ok &= summary["beta_row"] == 15495
    ok &= summary["total_inv"] == 1859400
    ok &= summary["nonsingular"] == 7775
    ok &= summary["admissible"] == 7243
    ok &= summary["tau_passing"] == 223
    ok &= summary["envelopes"] == 7
    best = summary.get("best_envelope", {})
    ok &= abs(best.get("tau", 0) - 0.914854) <= 0.01 * 0.914854
    ok &= abs(best.get("cond", 0) - 69.14729) <= 0.01 * 69.14729
    overall = summary.get("max_tau_overall", {})
    ok &= abs(overall.get("tau", 0) - 0.92148) <= 0.01 * 0.92148
    # Table II extrema are soft targets: report, diagnose on mismatch
    soft = summary.get("published_check", {})
    mismatches = {k: v for k, v in soft.items() if not v["within"]}
    if mismatches:
        print(f"ACCEPTANCE friendship soft-target diagnostics (convention-sensitive): {mismatches}")
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 1800.0
    report("friendship-reproduction", ok, f"{elapsed:.0f}s with {jobs} workers")
