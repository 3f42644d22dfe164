import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genplanar.catalog import group_from_spec
from genplanar.graphs import SimpleGraph, complete_graph, generating_graph, pruned_graph
from genplanar.minors import planar_oracle
from genplanar.planarity import (
    InputPlanar,
    MalformedRotation,
    RotationEmbedding,
    embedding_is_euler_valid,
    euler_bound,
    faces_from_rotation,
    is_planar,
    kuratowski_witness,
    verify_kuratowski,
)
from genplanar.structure import TooLarge


def k33() -> SimpleGraph:
    g = SimpleGraph(6)
    for u in (0, 1, 2):
        for v in (3, 4, 5):
            g.add_edge(u, v)
    return g


def graph_from_edges(n, edges) -> SimpleGraph:
    g = SimpleGraph(n)
    for u, v in edges:
        g.add_edge(u, v)
    return g


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield graph_from_edges(
            n, (pairs[i] for i in range(len(pairs)) if bits >> i & 1)
        )


class TestEulerBound:
    @pytest.mark.parametrize(
        "v,e,ok", [(9, 24, False), (6, 12, True), (3, 3, True), (2, 1, True), (5, 10, False)]
    )
    def test_values(self, v, e, ok):
        assert euler_bound(v, e) is ok


class TestVerdicts:
    def test_k5(self):
        verdict = is_planar(complete_graph(5))
        assert not verdict.planar
        assert verdict.witness.kind == "K5"
        assert sorted(verdict.witness.edges) == list(combinations(range(5), 2))
        verify_kuratowski(verdict.witness, complete_graph(5))

    def test_k4(self):
        verdict = is_planar(complete_graph(4))
        assert verdict.planar
        assert embedding_is_euler_valid(complete_graph(4), verdict.embedding)

    def test_k33(self):
        verdict = is_planar(k33())
        assert not verdict.planar
        assert verdict.witness.kind == "K33"
        assert len(verdict.witness.edges) == 9
        verify_kuratowski(verdict.witness, k33())

    def test_k6_witness_contained(self):
        k6 = complete_graph(6)
        verdict = is_planar(k6)
        assert not verdict.planar
        assert all(k6.has_edge(u, v) for u, v in verdict.witness.edges)
        verify_kuratowski(verdict.witness, k6)

    def test_c6xc2_not_planar(self, by_name):
        delta, _ = pruned_graph(generating_graph(by_name["C6xC2"]))
        assert not euler_bound(delta.vertex_count, delta.edge_count)
        verdict = is_planar(delta)
        assert not verdict.planar
        verify_kuratowski(verdict.witness, delta)

    def test_disconnected_and_isolated(self):
        g = SimpleGraph(9)
        g.add_edge(0, 1)
        g.add_edge(2, 3)
        g.add_edge(3, 4)
        verdict = is_planar(g)
        assert verdict.planar
        assert embedding_is_euler_valid(g, verdict.embedding)
        assert faces_from_rotation(verdict.embedding, g) == 2 + 4

    def test_two_k5s_yield_one_witness(self):
        g = SimpleGraph(10)
        for u, v in combinations(range(5), 2):
            g.add_edge(u, v)
            g.add_edge(u + 5, v + 5)
        verdict = is_planar(g)
        assert not verdict.planar
        verify_kuratowski(verdict.witness, g)
        assert len(verdict.witness.edges) == 10

    def test_empty_and_tiny(self):
        for n in range(3):
            verdict = is_planar(SimpleGraph(n))
            assert verdict.planar


class TestWitness:
    def test_input_planar_rejected(self):
        with pytest.raises(InputPlanar):
            kuratowski_witness(complete_graph(4))

    def test_subdivided_k5(self):
        # subdivide one K5 edge through two extra vertices
        g = complete_graph(5)
        g.remove_edge(0, 1)
        g2 = SimpleGraph(7, g.labels + ["5", "6"])
        g2.adj[:5] = g.adj
        g2.add_edge(0, 5)
        g2.add_edge(5, 6)
        g2.add_edge(6, 1)
        w = kuratowski_witness(g2)
        assert w.kind == "K5"
        assert sorted(w.branch_vertices) == [0, 1, 2, 3, 4]
        verify_kuratowski(w, g2)

    def test_every_witness_edge_critical(self):
        g = complete_graph(6)
        w = kuratowski_witness(g)
        base = graph_from_edges(6, w.edges)
        for u, v in w.edges:
            base.remove_edge(u, v)
            assert is_planar(base).planar
            base.add_edge(u, v)

    def test_verify_rejects_tampering(self):
        verdict = is_planar(complete_graph(5))
        w = verdict.witness
        bad = type(w)(kind="K33", edges=w.edges, branch_vertices=w.branch_vertices)
        with pytest.raises(ValueError):
            verify_kuratowski(bad, complete_graph(5))


class TestFaces:
    def test_k4_has_four_faces(self):
        k4 = complete_graph(4)
        emb = is_planar(k4).embedding
        assert faces_from_rotation(emb, k4) == 4

    def test_single_edge_one_face(self):
        g = graph_from_edges(2, [(0, 1)])
        emb = is_planar(g).embedding
        assert faces_from_rotation(emb, g) == 1

    def test_k3_two_faces(self):
        k3 = complete_graph(3)
        emb = is_planar(k3).embedding
        assert faces_from_rotation(emb, k3) == 2

    def test_malformed_rotation(self):
        g = graph_from_edges(3, [(0, 1), (1, 2)])
        with pytest.raises(MalformedRotation):
            faces_from_rotation(RotationEmbedding([[1], [0], [1]]), g)
        with pytest.raises(MalformedRotation):
            faces_from_rotation(RotationEmbedding([[1], [0, 2, 2], [1]]), g)

    def test_nonplanar_rotation_fails_euler(self):
        # identity-order rotations of K5 cannot satisfy Euler
        k5 = complete_graph(5)
        rot = [[u for u in range(5) if u != v] for v in range(5)]
        f = faces_from_rotation(RotationEmbedding(rot), k5)
        assert 5 - 10 + f != 2


class TestOracle:
    def test_known(self):
        assert planar_oracle(complete_graph(4))
        assert not planar_oracle(complete_graph(5))
        assert not planar_oracle(k33())

    def test_all_four_vertex_graphs(self):
        assert all(planar_oracle(g) for g in all_graphs(4))

    def test_sparse_graphs_planar(self):
        rng = random.Random(7)
        for _ in range(50):
            g = SimpleGraph(9)
            edges = random.Random(rng.random()).sample(
                list(combinations(range(9), 2)), 8
            )
            for u, v in edges:
                g.add_edge(u, v)
            assert planar_oracle(g)

    def test_guard(self):
        with pytest.raises(TooLarge):
            planar_oracle(SimpleGraph(11))


class TestAgreement:
    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
    def test_exhaustive_small(self, n):
        for g in all_graphs(n):
            assert is_planar(g).planar == planar_oracle(g)

    @given(st.integers(0, 2**21 - 1))
    @settings(max_examples=120, deadline=None)
    def test_seven_vertex_sample(self, bits):
        pairs = list(combinations(range(7), 2))
        g = graph_from_edges(
            7, (pairs[i] for i in range(21) if bits >> i & 1)
        )
        verdict = is_planar(g)
        assert verdict.planar == planar_oracle(g)
        if verdict.planar:
            assert embedding_is_euler_valid(g, verdict.embedding)
        else:
            verify_kuratowski(verdict.witness, g)

    def test_monotone_under_subgraphs(self, by_name):
        gamma = generating_graph(by_name["Q8"])
        assert is_planar(gamma).planar
        for u, v in list(gamma.edges()):
            g = gamma.copy()
            g.remove_edge(u, v)
            assert is_planar(g).planar


class TestCorpusEmbeddings:
    def test_planar_groups_have_valid_embeddings(self, corpus):
        for G in corpus:
            if G.order == 1:
                continue
            gamma = generating_graph(G)
            verdict = is_planar(gamma)
            if verdict.planar:
                assert embedding_is_euler_valid(gamma, verdict.embedding), G.name
            else:
                verify_kuratowski(verdict.witness, gamma)
