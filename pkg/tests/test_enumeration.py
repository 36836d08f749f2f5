"""Exhaustive enumerator (vs brute-force oracle) and the pairing sampler."""

import pytest

import oracles
from eigencut import (
    enumerate_connected_regular,
    graph_from_edges,
    is_connected,
    is_isomorphic,
    is_regular,
    random_connected_regular,
    to_graph6,
)


class TestEnumerate:
    def test_base_cases(self):
        assert sum(1 for _ in enumerate_connected_regular(4, 3)) == 1
        got = list(enumerate_connected_regular(6, 3))
        assert len(got) == 2  # complete bipartite 3+3 and the triangular prism
        assert sum(1 for _ in enumerate_connected_regular(8, 3)) == 5

    def test_parity_rejected(self):
        with pytest.raises(ValueError):
            list(enumerate_connected_regular(5, 3))
        with pytest.raises(ValueError):
            list(enumerate_connected_regular(3, 3))

    def test_cycles_and_tiny_degrees(self):
        for n in range(3, 9):
            assert sum(1 for _ in enumerate_connected_regular(n, 2)) == 1
        assert sum(1 for _ in enumerate_connected_regular(2, 1)) == 1
        assert sum(1 for _ in enumerate_connected_regular(1, 0)) == 1

    def test_postconditions(self):
        for n, d in [(8, 3), (8, 4), (8, 5), (9, 4)]:
            for g in enumerate_connected_regular(n, d):
                assert g.n == n
                assert is_regular(g) == d
                assert is_connected(g)

    def test_pairwise_noniso_small(self):
        graphs = list(enumerate_connected_regular(8, 3))
        for i, a in enumerate(graphs):
            for b in graphs[i + 1 :]:
                assert not is_isomorphic(a, b)

    def test_matches_bruteforce_oracle(self):
        for n, d in [(4, 3), (6, 3), (8, 3), (5, 4), (6, 4), (7, 4), (8, 4), (6, 5)]:
            mine = list(enumerate_connected_regular(n, d))
            brute = oracles.brute_enumerate_connected_regular(n, d)
            assert len(mine) == len(brute)
            # same classes, not just the same count
            for edges in brute:
                h = graph_from_edges(n, edges)
                assert sum(1 for g in mine if is_isomorphic(g, h)) == 1

    def test_stream_is_deterministic(self):
        first = [to_graph6(g) for g in enumerate_connected_regular(10, 3)]
        second = [to_graph6(g) for g in enumerate_connected_regular(10, 3)]
        assert first == second
        assert len(first) == 19

    def test_graph6_round_trip_over_streams(self):
        from eigencut import from_graph6

        for n, d in [(10, 3), (12, 3), (8, 4), (10, 5)]:
            for g in enumerate_connected_regular(n, d):
                assert from_graph6(to_graph6(g)) == g


class TestRandomRegular:
    def test_deterministic_per_seed(self):
        a = random_connected_regular(10, 3, seed=1)
        b = random_connected_regular(10, 3, seed=1)
        assert to_graph6(a) == to_graph6(b)
        c = random_connected_regular(10, 3, seed=2)
        assert a.n == c.n == 10

    def test_postconditions(self):
        g = random_connected_regular(8, 4, seed=7)
        assert is_regular(g) == 4 and is_connected(g)
        for seed in range(5):
            g = random_connected_regular(12, 3, seed=seed)
            assert is_regular(g) == 3 and is_connected(g)

    def test_unique_class_is_complete(self):
        from eigencut import complete

        for seed in (0, 1, 99):
            assert is_isomorphic(random_connected_regular(4, 3, seed), complete(4))

    def test_parity_rejected(self):
        with pytest.raises(ValueError):
            random_connected_regular(5, 3, seed=0)
        with pytest.raises(ValueError):
            random_connected_regular(3, 4, seed=0)
