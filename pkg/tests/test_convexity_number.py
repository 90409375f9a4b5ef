from __future__ import annotations

import pytest

from triconvex.bitset import VertexSet
from triconvex.convexity import is_t_convex
from triconvex.convexity_number import convex_extension, convexity_number
from triconvex.decomposition import decompose
from triconvex.errors import ContractViolationError, ValidationError
from triconvex.generators import path_graph
from triconvex.graph import Graph, is_connected
from triconvex.oracle import brute_convexity_number
from triconvex.prime import enumerate_prime_convex_sets


def vs(n, items):
    return VertexSet.from_iterable(n, items)


class TestConvexExtension:
    def test_bowtie_shared_vertex_pulls_in_far_triangle(self, bowtie):
        dec = decompose(bowtie)
        ext = convex_extension(bowtie, dec, 0, vs(5, [0]))
        assert sorted(ext) == [0, 3, 4]

    def test_bowtie_leaf_stays_alone(self, bowtie):
        dec = decompose(bowtie)
        assert sorted(convex_extension(bowtie, dec, 0, vs(5, [1]))) == [1]

    def test_non_separating_singleton_is_unchanged(self, c5):
        dec = decompose(c5)
        assert sorted(convex_extension(c5, dec, 0, vs(5, [2]))) == [2]

    def test_empty_seed_stays_empty(self, bowtie):
        dec = decompose(bowtie)
        assert convex_extension(bowtie, dec, 0, vs(5, [])) == vs(5, [])

    def test_checked_mode_rejects_non_convex_seed(self, bowtie):
        dec = decompose(bowtie)
        with pytest.raises(ContractViolationError):
            convex_extension(bowtie, dec, 0, vs(5, [1, 2]), checked=True)

    def test_extension_is_convex_in_the_whole_graph(self, sampled_corpus):
        full_graphs = [g for g in sampled_corpus if is_connected(g) and g.n >= 2]
        for g in full_graphs[::5]:
            dec = decompose(g)
            for i, atom in enumerate(dec.atoms):
                sub, vertices = g.induced(atom)
                for local in enumerate_prime_convex_sets(sub):
                    if local.bits == (1 << sub.n) - 1:
                        continue
                    seed_bits = 0
                    for pos in local:
                        seed_bits |= 1 << vertices[pos]
                    ext = convex_extension(g, dec, i, VertexSet(g.n, seed_bits))
                    assert is_t_convex(g, ext)[0], (sorted(g.edges()), i, sorted(local))


class TestConvexityNumber:
    def test_complete_graph_only_has_singletons(self, k5):
        res = convexity_number(k5)
        assert res.value == 1 and sorted(res.witness) == [0]

    def test_bowtie(self, bowtie):
        res = convexity_number(bowtie)
        assert res.value == 3
        assert sorted(res.witness) == [0, 3, 4]
        assert res.atom_index == 0 and sorted(res.seed) == [0]

    def test_long_path(self, p6):
        res = convexity_number(p6)
        assert res.value == 5 and sorted(res.witness) == [1, 2, 3, 4, 5]

    def test_cycle(self, c5):
        res = convexity_number(c5)
        assert res.value == 2 and sorted(res.witness) == [0, 1]

    def test_claw(self, claw):
        assert convexity_number(claw).value == 3

    def test_trees_lose_exactly_one_leaf(self):
        for n in range(2, 9):
            assert convexity_number(path_graph(n)).value == n - 1

    def test_witness_is_always_proper_and_convex(self, sampled_corpus):
        for g in sampled_corpus:
            if not is_connected(g) or g.n < 2:
                continue
            res = convexity_number(g)
            assert len(res.witness) == res.value
            assert res.witness.bits != (1 << g.n) - 1
            assert is_t_convex(g, res.witness)[0]

    def test_matches_bruteforce_on_corpus(self, sampled_corpus):
        for g in sampled_corpus:
            if not is_connected(g) or g.n < 2:
                continue
            assert convexity_number(g).value == brute_convexity_number(g), sorted(g.edges())

    def test_rejects_trivial_and_disconnected_inputs(self):
        with pytest.raises(ValidationError):
            convexity_number(Graph(1))
        with pytest.raises(ValidationError):
            convexity_number(Graph(4, [(0, 1), (2, 3)]))
