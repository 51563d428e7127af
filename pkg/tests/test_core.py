import pytest
from hypothesis import given

from zham import (
    DIGRAPH_CYCLE,
    GRAPH_CYCLE,
    BipartiteGraph,
    CycleWitness,
    Digraph,
    Graph,
    GraphError,
    Matching,
    SelfLoopError,
    VertexRangeError,
    build_digraph,
    check_cycle,
    degrees,
    format_bipartite_vertex,
)
from zham.verifier import enumerate_digraphs

from brute import all_vertex_sequences, digraphs, directed_cycle_catalog, normalize_directed

C3 = build_digraph(3, [(1, 2), (2, 3), (3, 1)])
K3 = build_digraph(3, [(u, v) for u in range(1, 4) for v in range(1, 4) if u != v])
ZK3 = BipartiteGraph(3, frozenset((u, v) for u in range(1, 4) for v in range(1, 4) if u != v))


class TestBuildDigraph:
    def test_triangle(self):
        assert C3.n == 3
        assert C3.arcs == frozenset({(1, 2), (2, 3), (3, 1)})

    def test_rejects_self_loop(self):
        with pytest.raises(SelfLoopError):
            build_digraph(2, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(VertexRangeError):
            build_digraph(2, [(1, 3)])
        with pytest.raises(VertexRangeError):
            build_digraph(2, [(0, 1)])

    def test_error_codes_are_distinct(self):
        assert not issubclass(SelfLoopError, VertexRangeError)
        assert not issubclass(VertexRangeError, SelfLoopError)
        assert issubclass(SelfLoopError, GraphError)
        assert issubclass(VertexRangeError, GraphError)

    def test_duplicate_arcs_collapse(self):
        d = build_digraph(3, [(1, 2), (1, 2), (2, 3), (3, 1)])
        assert len(d.arcs) == 3

    def test_rejects_bad_counts(self):
        with pytest.raises(GraphError):
            Digraph(0)
        with pytest.raises(GraphError):
            Digraph(-1)

    def test_adjacency_is_sorted(self):
        d = build_digraph(4, [(1, 4), (1, 2), (1, 3)])
        assert d.successors(1) == (2, 3, 4)
        assert d.predecessors(4) == (1,)


class TestDegrees:
    def test_triangle(self):
        assert degrees(C3) == {1: (1, 1, 2), 2: (1, 1, 2), 3: (1, 1, 2)}

    def test_complete(self):
        assert degrees(K3) == {1: (2, 2, 4), 2: (2, 2, 4), 3: (2, 2, 4)}

    def test_arcless(self):
        assert degrees(Digraph(3)) == {v: (0, 0, 0) for v in (1, 2, 3)}

    @given(digraphs(max_n=7))
    def test_degree_sums_count_arcs(self, d):
        per_vertex = degrees(d)
        assert sum(t[0] for t in per_vertex.values()) == len(d.arcs)
        assert sum(t[1] for t in per_vertex.values()) == len(d.arcs)


class TestGraph:
    def test_edges_normalize(self):
        g = Graph(3, frozenset({(2, 1), (1, 2), (3, 1)}))
        assert g.edges == frozenset({(1, 2), (1, 3)})
        assert g.neighbors(1) == (2, 3)

    def test_rejects_loop(self):
        with pytest.raises(SelfLoopError):
            Graph(3, frozenset({(2, 2)}))


class TestBipartiteGraph:
    def test_parts_are_separate_index_spaces(self):
        g = BipartiteGraph(2, frozenset({(1, 1), (2, 1)}))
        assert g.degree_x(1) == 1 and g.degree_y(1) == 2
        assert g.neighbors_y(1) == (1, 2)

    def test_rejects_out_of_range(self):
        with pytest.raises(VertexRangeError):
            BipartiteGraph(2, frozenset({(1, 3)}))

    def test_vertices_are_tagged(self):
        g = BipartiteGraph(2)
        assert list(g.vertices()) == [("x", 1), ("x", 2), ("y", 1), ("y", 2)]
        assert format_bipartite_vertex(("y", 2)) == "y2"


class TestCheckCycle:
    def test_triangle_forward(self):
        assert check_cycle(C3, CycleWitness(DIGRAPH_CYCLE, (1, 2, 3)))

    def test_triangle_reversed_fails(self):
        assert not check_cycle(C3, CycleWitness(DIGRAPH_CYCLE, (1, 3, 2)))

    def test_bipartite_six_cycle(self):
        seq = (("x", 1), ("y", 2), ("x", 3), ("y", 1), ("x", 2), ("y", 3))
        assert check_cycle(ZK3, CycleWitness(GRAPH_CYCLE, seq))

    def test_digon_is_a_cycle(self):
        digon = build_digraph(2, [(1, 2), (2, 1)])
        assert check_cycle(digon, CycleWitness(DIGRAPH_CYCLE, (1, 2)))

    def test_single_vertex_never_cycles(self):
        assert not check_cycle(Digraph(1), CycleWitness(DIGRAPH_CYCLE, (1,)))

    def test_undirected_needs_length_three(self):
        g = Graph(3, frozenset({(1, 2), (2, 3), (1, 3)}))
        assert check_cycle(g, CycleWitness(GRAPH_CYCLE, (1, 2, 3)))
        assert not check_cycle(g, CycleWitness(GRAPH_CYCLE, (1, 2)))

    @pytest.mark.parametrize(
        "witness",
        [
            CycleWitness(DIGRAPH_CYCLE, (1, 2, 2)),          # repeated vertex
            CycleWitness(DIGRAPH_CYCLE, (1, 2, 9)),          # out of range
            CycleWitness(DIGRAPH_CYCLE, (1, "two", 3)),      # junk entry
            CycleWitness(GRAPH_CYCLE, (1, 2, 3)),            # wrong kind for digraph
            CycleWitness(DIGRAPH_CYCLE, ()),                 # empty
        ],
    )
    def test_malformed_witnesses_fail_quietly(self, witness):
        assert check_cycle(C3, witness) is False

    def test_not_a_witness_fails(self):
        assert check_cycle(C3, (1, 2, 3)) is False

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matches_catalog_oracle_exhaustively(self, n):
        # Independent route: rotation-normalized catalog built by brute force
        # over all vertex subsets and permutations.
        candidates = list(all_vertex_sequences(n))
        for d in enumerate_digraphs(n):
            catalog = directed_cycle_catalog(d)
            for seq in candidates:
                expected = len(seq) >= 2 and normalize_directed(seq) in catalog
                got = check_cycle(d, CycleWitness(DIGRAPH_CYCLE, seq))
                assert got == expected, (d, seq)


class TestWitnessItems:
    def test_digraph_items_in_traversal_order(self):
        w = CycleWitness(DIGRAPH_CYCLE, (1, 2, 3))
        assert w.items == ((1, 2), (2, 3), (3, 1))

    def test_bipartite_items_are_cross_pairs(self):
        w = CycleWitness(GRAPH_CYCLE, (("x", 1), ("y", 2), ("x", 3), ("y", 1), ("x", 2), ("y", 3)))
        assert w.items == ((1, 2), (3, 2), (3, 1), (2, 1), (2, 3), (1, 3))

    def test_hamiltonian_length_check(self):
        w = CycleWitness(DIGRAPH_CYCLE, (1, 2, 3))
        assert w.is_hamiltonian(C3)
        assert not w.is_hamiltonian(Digraph(4, frozenset({(1, 2), (2, 3), (3, 1)})))


class TestMatching:
    def test_rejects_shared_endpoint(self):
        with pytest.raises(GraphError):
            Matching(frozenset({(1, 1), (1, 2)}))
        with pytest.raises(GraphError):
            Matching(frozenset({(1, 1), (2, 1)}))

    def test_perfect_requires_membership_and_size(self):
        m = Matching(frozenset({(1, 2), (2, 3), (3, 1)}))
        z_c3 = BipartiteGraph(3, frozenset({(1, 2), (2, 3), (3, 1)}))
        assert m.is_perfect(z_c3)
        assert not Matching(frozenset({(1, 2)})).is_perfect(z_c3)
        stranger = Matching(frozenset({(1, 1), (2, 2), (3, 3)}))
        assert not stranger.is_perfect(z_c3)
