import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from envgft.errors import EdgeListError
from envgft.graph import (
    Digraph,
    load_edge_list,
    rank_profile,
    signal_from_json,
    signal_to_json,
    unit_impulse,
)


def backward_shift(n):
    a = np.zeros((n, n))
    a[np.arange(n - 1), np.arange(1, n)] = 1.0
    return a


class TestDigraph:
    def test_validates_ranges(self):
        with pytest.raises(ValueError):
            Digraph(n=2, edges=((0, 2, 1.0),))
        with pytest.raises(ValueError):
            Digraph(n=0)

    def test_rejects_zero_weight_and_duplicates(self):
        with pytest.raises(ValueError, match="zero weight"):
            Digraph(n=2, edges=((0, 1, 0.0),))
        with pytest.raises(ValueError, match="duplicate"):
            Digraph(n=2, edges=((0, 1, 1.0), (0, 1, 2.0)))

    def test_adjacency_three_cycle(self):
        g = Digraph(n=3, edges=((0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)))
        assert g.adjacency().tolist() == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]

    def test_adjacency_empty(self):
        assert Digraph(n=2).adjacency().tolist() == [[0, 0], [0, 0]]

    def test_adjacency_line_is_backward_shift(self):
        g = Digraph(n=4, edges=tuple((i, i + 1, 1.0) for i in range(3)))
        assert np.array_equal(g.adjacency(), backward_shift(4))

    def test_from_adjacency_round_trip_integer_weights(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            n = int(rng.integers(1, 9))
            a = rng.integers(-3, 4, size=(n, n)).astype(float)
            assert np.array_equal(Digraph.from_adjacency(a).adjacency(), a)

    def test_json_canonical(self):
        g = Digraph(n=3, edges=((2, 0, 1.0), (0, 1, 2.5)))
        d = g.to_json_dict()
        assert d == {"n": 3, "edges": [[0, 1, 2.5], [2, 0, 1.0]]}
        assert Digraph.from_json_dict(json.loads(g.dumps())) == g

    def test_with_edges_added_collision(self):
        g = Digraph(n=2, edges=((0, 1, 1.0),))
        with pytest.raises(ValueError):
            g.with_edges_added([(0, 1, 1.0)])
        g2 = g.with_edges_added([(0, 1, 2.0)], allow_multi=True)
        assert g2.weight(0, 1) == 3.0


class TestLoadEdgeList:
    def test_plain_three_cycle(self, tmp_path):
        p = tmp_path / "g.txt"
        p.write_text("0 1\n1 2\n2 0\n")
        g = load_edge_list(p)
        assert g.n == 3 and len(g.edges) == 3

    def test_duplicate_edge_is_error(self, tmp_path):
        p = tmp_path / "g.txt"
        p.write_text("0 1\n0 1\n")
        with pytest.raises(EdgeListError, match="line 2.*duplicate"):
            load_edge_list(p)

    def test_comments_weights_and_line_numbers(self, tmp_path):
        p = tmp_path / "g.txt"
        p.write_text("# header\n0 1 0.5\n\n1 0 2\n")
        g = load_edge_list(p)
        assert g.weight(0, 1) == 0.5 and g.weight(1, 0) == 2.0
        p.write_text("0 1\nbroken line here\n")
        with pytest.raises(EdgeListError, match="line 2"):
            load_edge_list(p)

    def test_zero_weight_and_range_errors(self, tmp_path):
        p = tmp_path / "g.txt"
        p.write_text("0 1 0.0\n")
        with pytest.raises(EdgeListError, match="zero weight"):
            load_edge_list(p)
        p.write_text("0 5\n")
        with pytest.raises(EdgeListError, match="out of range"):
            load_edge_list(p, n=3)

    def test_csv_format(self, tmp_path):
        p = tmp_path / "g.csv"
        p.write_text("src,dst,weight\n0,1,1.0\n1,2,0.5\n")
        g = load_edge_list(p, format="csv")
        assert g.n == 3 and g.weight(1, 2) == 0.5
        p.write_text("a,b,c\n0,1,1\n")
        with pytest.raises(EdgeListError, match="header"):
            load_edge_list(p, format="csv")


class TestRankProfile:
    def test_backward_shift(self):
        prof = rank_profile(backward_shift(5))
        assert (prof.rank, prof.nullity) == (4, 1)

    def test_identity(self):
        prof = rank_profile(np.eye(3))
        assert (prof.rank, prof.nullity) == (3, 0)

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            rank_profile(np.zeros((2, 3)))

    @given(st.integers(2, 12), st.integers(0, 2**32 - 1))
    @settings(max_examples=30, deadline=None)
    def test_permutation_invariance(self, n, seed):
        rng = np.random.default_rng(seed)
        a = (rng.random((n, n)) < 0.4).astype(float)
        perm = rng.permutation(n)
        prof = rank_profile(a)
        assert rank_profile(a[np.ix_(perm, perm)]).rank == prof.rank
        assert prof.rank + prof.nullity == n


class TestSignals:
    def test_unit_impulse(self):
        x = unit_impulse(4, 2)
        assert x.tolist() == [0, 0, 1, 0]
        with pytest.raises(ValueError):
            unit_impulse(4, 4)

    def test_json_round_trip(self):
        x = np.array([1 + 2j, -0.5, 0.25j])
        assert np.array_equal(signal_from_json(signal_to_json(x)), x)
