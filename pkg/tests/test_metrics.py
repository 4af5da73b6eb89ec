from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from envgft.extension import ConnectionSet, cayley_adjacency
from envgft.graph import Digraph
from envgft.metrics import (
    MOTIF_3CYCLE,
    MOTIF_FFL,
    core_periphery_counts,
    kendall_tau,
    local_clustering,
    motif_density,
    pagerank,
    structural_report,
)


def pagerank_linear_solve(g, d=0.85):
    """Oracle: solve the dangling-aware fixed point as a linear system."""
    n = g.n
    b = (g.adjacency() != 0).astype(float)
    out_deg = b.sum(axis=1)
    m = np.zeros((n, n))
    for j in range(n):
        if out_deg[j] == 0:
            m[:, j] = 1.0 / n
        else:
            m[:, j] = b[j, :] / out_deg[j]
    return np.linalg.solve(np.eye(n) - d * m, np.full(n, (1 - d) / n))


def motif_bruteforce(g, motif):
    """Oracle: explicit induced-subgraph isomorphism over all vertex triples."""
    target = {
        MOTIF_3CYCLE: {(0, 1), (1, 2), (2, 0)},
        MOTIF_FFL: {(0, 1), (0, 2), (1, 2)},
    }[motif]
    b = g.adjacency() != 0
    count = 0
    for triple in combinations(range(g.n), 3):
        pattern = {
            (i, j)
            for i in range(3)
            for j in range(3)
            if i != j and b[triple[i], triple[j]]
        }
        for perm in permutations(range(3)):
            mapped = {(perm[u], perm[v]) for (u, v) in pattern}
            if mapped == target:
                count += 1
                break
    n = g.n
    return count / (n * (n - 1) * (n - 2) / 6)


def clustering_bruteforce(g):
    b = g.adjacency() != 0
    n = g.n
    out = np.zeros(n)
    for i in range(n):
        nbrs = [j for j in range(n) if j != i and (b[i, j] or b[j, i])]
        k = len(nbrs)
        if k < 2:
            continue
        e = sum(1 for u, v in combinations(nbrs, 2) if b[u, v] or b[v, u])
        out[i] = 2.0 * e / (k * (k - 1))
    return out


def random_digraph(rng, n, p=0.3):
    a = (rng.random((n, n)) < p).astype(float)
    np.fill_diagonal(a, 0.0)
    return Digraph.from_adjacency(a) if a.any() else Digraph(n=n)


class TestPagerank:
    def test_cycle_uniform(self):
        g = cayley_adjacency(ConnectionSet(n=5, gamma=frozenset({1})))
        np.testing.assert_allclose(pagerank(g), np.full(5, 0.2), atol=1e-10)

    def test_star_center_maximal(self):
        g = Digraph(n=4, edges=((1, 0, 1.0), (2, 0, 1.0), (3, 0, 1.0)))
        pr = pagerank(g)
        assert np.argmax(pr) == 0
        assert pr[0] > pr[1:].max()

    def test_three_chain_matches_linear_solve(self):
        g = Digraph(n=3, edges=((0, 1, 1.0), (1, 2, 1.0)))
        np.testing.assert_allclose(pagerank(g), pagerank_linear_solve(g), atol=1e-10)

    def test_probability_distribution_and_relabel_invariance(self):
        rng = np.random.default_rng(0)
        for _ in range(10):
            g = random_digraph(rng, int(rng.integers(2, 10)))
            pr = pagerank(g)
            assert np.all(pr >= 0)
            assert pr.sum() == pytest.approx(1.0, abs=1e-9)
            perm = rng.permutation(g.n)
            relabeled = Digraph(
                n=g.n, edges=tuple((int(perm[s]), int(perm[d]), w) for s, d, w in g.edges)
            )
            np.testing.assert_allclose(pagerank(relabeled)[perm], pr, atol=1e-9)


class TestKendallTau:
    def test_identical(self):
        assert kendall_tau([1, 5, 3, 2], [1, 5, 3, 2]) == pytest.approx(1.0)

    def test_reversed(self):
        assert kendall_tau([1, 2, 3, 4], [4, 3, 2, 1]) == pytest.approx(-1.0)

    def test_known_two_thirds(self):
        # concordant 5, discordant 1, over 6 pairs
        assert kendall_tau([1, 2, 3, 4], [1, 3, 2, 4]) == pytest.approx(2.0 / 3.0, abs=1e-15)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            kendall_tau([1, 2], [1, 2, 3])

    @given(st.lists(st.floats(-100, 100), min_size=2, max_size=20), st.randoms())
    @settings(max_examples=40, deadline=None)
    def test_symmetry_and_bounds(self, values, rnd):
        other = values[:]
        rnd.shuffle(other)
        t1 = kendall_tau(values, other)
        t2 = kendall_tau(other, values)
        assert t1 == pytest.approx(t2, abs=1e-12)
        assert -1.0 - 1e-12 <= t1 <= 1.0 + 1e-12

    def test_matches_scipy_with_ties(self):
        scipy_stats = pytest.importorskip("scipy.stats")
        rng = np.random.default_rng(1)
        for _ in range(20):
            n = int(rng.integers(3, 30))
            a = rng.integers(0, 6, size=n).astype(float)
            b = rng.integers(0, 6, size=n).astype(float)
            if np.all(a == a[0]) or np.all(b == b[0]):
                continue
            expect = scipy_stats.kendalltau(a, b).statistic
            assert kendall_tau(a, b) == pytest.approx(expect, abs=1e-12)


class TestMotifDensity:
    def test_three_cycle_graph(self):
        g = Digraph(n=3, edges=((0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)))
        assert motif_density(g, MOTIF_3CYCLE) == pytest.approx(1.0)
        assert motif_density(g, MOTIF_FFL) == pytest.approx(0.0)

    def test_edgeless(self):
        g = Digraph(n=5)
        for m in (MOTIF_3CYCLE, MOTIF_FFL):
            assert motif_density(g, m) == 0.0

    def test_feed_forward_loop(self):
        g = Digraph(n=3, edges=((0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0)))
        assert motif_density(g, MOTIF_FFL) == pytest.approx(1.0)
        assert motif_density(g, MOTIF_3CYCLE) == pytest.approx(0.0)

    def test_induced_only(self):
        # 3-cycle plus one extra arc is NOT an induced 3-cycle
        g = Digraph(n=3, edges=((0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0), (1, 0, 1.0)))
        assert motif_density(g, MOTIF_3CYCLE) == 0.0

    def test_matches_bruteforce(self):
        rng = np.random.default_rng(2)
        for _ in range(30):
            g = random_digraph(rng, 7, p=0.35)
            for m in (MOTIF_3CYCLE, MOTIF_FFL):
                assert motif_density(g, m) == pytest.approx(motif_bruteforce(g, m))

    def test_unknown_motif(self):
        g = Digraph(n=3, edges=((0, 1, 1.0),))
        with pytest.raises(ValueError):
            motif_density(g, "pentagon")


class TestCorePeriphery:
    def test_regular_graph_all_periphery(self):
        g = cayley_adjacency(ConnectionSet(n=6, gamma=frozenset({1, 2})))
        core, peri, scores = core_periphery_counts(g)
        assert (core, peri) == (0, 6)
        np.testing.assert_allclose(scores, np.zeros(6), atol=1e-12)

    def test_star_hand_computed(self):
        g = Digraph(n=4, edges=((1, 0, 1.0), (2, 0, 1.0), (3, 0, 1.0)))
        core, peri, scores = core_periphery_counts(g)
        # degrees (3,1,1,1), mean 1.5: S_0 = 1.5/4.5 > 0, leaves negative
        assert (core, peri) == (1, 3)
        assert scores[0] == pytest.approx(1.5 / 4.5)
        np.testing.assert_allclose(scores[1:], np.full(3, -0.5 / 2.5))

    def test_isolated_vertex_is_periphery(self):
        g = Digraph(n=3, edges=((0, 1, 1.0), (1, 0, 1.0)))
        core, peri, scores = core_periphery_counts(g)
        assert core + peri == 3
        assert scores[2] < 0

    def test_edgeless_all_zero(self):
        core, peri, scores = core_periphery_counts(Digraph(n=4))
        assert (core, peri) == (0, 4)
        np.testing.assert_array_equal(scores, np.zeros(4))

    def test_counts_partition(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            g = random_digraph(rng, int(rng.integers(1, 12)))
            core, peri, _ = core_periphery_counts(g)
            assert core + peri == g.n


class TestLocalClustering:
    def test_bidirectional_triangle(self):
        edges = tuple((i, j, 1.0) for i in range(3) for j in range(3) if i != j)
        g = Digraph(n=3, edges=edges)
        np.testing.assert_allclose(local_clustering(g), np.ones(3))

    def test_path_middle_zero(self):
        g = Digraph(n=3, edges=((0, 1, 1.0), (1, 2, 1.0)))
        assert local_clustering(g)[1] == 0.0

    def test_matches_bruteforce(self):
        rng = np.random.default_rng(4)
        for _ in range(30):
            g = random_digraph(rng, 8, p=0.3)
            np.testing.assert_allclose(local_clustering(g), clustering_bruteforce(g), atol=1e-12)

    def test_range(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            c = local_clustering(random_digraph(rng, 9, p=0.5))
            assert np.all(c >= 0) and np.all(c <= 1)


class TestStructuralReport:
    def test_report_fields(self):
        g = Digraph(n=5, edges=((0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0), (3, 0, 1.0), (4, 2, 1.0)))
        ref = pagerank(g)
        rep = structural_report(g, reference_pagerank=ref)
        assert rep.kendall_tau == pytest.approx(1.0)
        assert rep.core_count + rep.periphery_count == 5
        assert set(rep.motif_densities) == {MOTIF_3CYCLE, MOTIF_FFL}
        loaded = type(rep).from_json_dict(rep.to_json_dict())
        np.testing.assert_allclose(loaded.pagerank, rep.pagerank)
        assert loaded.mean_clustering == rep.mean_clustering
