from __future__ import annotations

import itertools

import pytest

from triconvex.bitset import VertexSet
from triconvex.convexity import is_t_convex, t_convex_hull
from triconvex.decomposition import is_prime
from triconvex.errors import ContractViolationError
from triconvex.generators import complete_graph
from triconvex.graph import Graph, is_connected
from triconvex.prime import enumerate_prime_convex_sets, prime_is_t_convex, prime_t_hull


def vs(n, items):
    return VertexSet.from_iterable(n, items)


def prime_corpus(graphs):
    return [g for g in graphs if is_connected(g) and is_prime(g)]


class TestPrimeConvexityTest:
    def test_cycle_edge(self, c5):
        assert prime_is_t_convex(c5, vs(5, [0, 1]))

    def test_triangle_edge_is_not(self, k3):
        assert not prime_is_t_convex(k3, vs(3, [0, 1]))

    def test_non_clique_is_not(self, c5):
        assert not prime_is_t_convex(c5, vs(5, [0, 2]))

    def test_whole_set_always_is(self, c5):
        assert prime_is_t_convex(c5, VertexSet.full(5))

    def test_checked_mode_rejects_reducible(self, bowtie):
        with pytest.raises(ContractViolationError):
            prime_is_t_convex(bowtie, vs(5, [0]), checked=True)

    def test_agrees_with_general_test_on_primes(self, sampled_corpus):
        for g in prime_corpus(sampled_corpus):
            for bits in range(1 << g.n):
                s = VertexSet(g.n, bits)
                assert prime_is_t_convex(g, s) == is_t_convex(g, s)[0], (
                    sorted(g.edges()),
                    sorted(s),
                )


class TestPrimeHull:
    def test_nonadjacent_pair_hulls(self, c5):
        assert prime_t_hull(c5, vs(5, [0, 2])) == VertexSet.full(5)

    def test_edge_is_its_own_hull(self, c5):
        assert prime_t_hull(c5, vs(5, [0, 1])) == vs(5, [0, 1])

    def test_complete_graph_pair_hulls(self, k4):
        assert prime_t_hull(k4, vs(4, [0, 1])) == VertexSet.full(4)

    def test_checked_mode_rejects_reducible(self, bowtie):
        with pytest.raises(ContractViolationError):
            prime_t_hull(bowtie, vs(5, [0]), checked=True)

    def test_agrees_with_general_hull_on_primes(self, sampled_corpus):
        for g in prime_corpus(sampled_corpus):
            for bits in range(1 << g.n):
                s = VertexSet(g.n, bits)
                assert prime_t_hull(g, s) == t_convex_hull(g, s), (
                    sorted(g.edges()),
                    sorted(s),
                )


class TestEnumeration:
    def test_cycle_family(self, c5):
        family = enumerate_prime_convex_sets(c5)
        listed = [tuple(sorted(s)) for s in family]
        assert listed == [
            (),
            (0,), (1,), (2,), (3,), (4,),
            (0, 1), (0, 4), (1, 2), (2, 3), (3, 4),
            (0, 1, 2, 3, 4),
        ]

    def test_triangle_family(self, k3):
        family = enumerate_prime_convex_sets(k3)
        assert [tuple(sorted(s)) for s in family] == [(), (0,), (1,), (2,), (0, 1, 2)]

    def test_single_vertex_graph(self):
        family = enumerate_prime_convex_sets(Graph(1))
        assert [tuple(sorted(s)) for s in family] == [(), (0,)]

    def test_checked_mode_rejects_reducible(self, bowtie):
        with pytest.raises(ContractViolationError):
            enumerate_prime_convex_sets(bowtie, checked=True)

    def test_equals_exhaustive_family_on_primes(self, sampled_corpus):
        for g in prime_corpus(sampled_corpus):
            expected = {
                bits
                for bits in range(1 << g.n)
                if is_t_convex(g, VertexSet(g.n, bits))[0]
            }
            got = {s.bits for s in enumerate_prime_convex_sets(g)}
            assert got == expected, sorted(g.edges())

    def test_each_listed_set_passes_the_prime_test(self, sampled_corpus):
        for g in prime_corpus(sampled_corpus)[:40]:
            for s in enumerate_prime_convex_sets(g):
                assert prime_is_t_convex(g, s)

    def test_proper_sets_share_at_most_one_vertex(self, sampled_corpus):
        for g in prime_corpus(sampled_corpus):
            full = (1 << g.n) - 1
            proper = [
                s for s in enumerate_prime_convex_sets(g) if len(s) >= 2 and s.bits != full
            ]
            for a, b in itertools.combinations(proper, 2):
                assert len(a & b) <= 1, sorted(g.edges())

    def test_fewer_big_sets_than_vertices(self, sampled_corpus):
        for g in prime_corpus(sampled_corpus):
            full = (1 << g.n) - 1
            big = [
                s for s in enumerate_prime_convex_sets(g) if len(s) >= 3 and s.bits != full
            ]
            assert len(big) < g.n, sorted(g.edges())

    def test_complete_graph_family_size(self):
        # trivial sets only: empty, V, and n singletons
        for n in (2, 3, 5):
            assert len(enumerate_prime_convex_sets(complete_graph(n))) == n + 2
