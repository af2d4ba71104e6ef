import itertools

import networkx as nx
import pytest
from hypothesis import given

import brute
from rainbow.coloring import format_edge_list, parse_edge_list
from rainbow.families import cycle, complete, example1, path
from rainbow.graph import (INF, Graph, GraphError, blow_up, bridges, diameter, distances, from_edge_list,
                           neighborhood_at, radius, spanning_tree)
from strategies import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


class TestConstruction:
    def test_path_three(self):
        g = from_edge_list([(0, 1), (1, 2)])
        assert (g.n, g.m, g.is_connected()) == (3, 2, True)

    def test_duplicates_collapse(self):
        g = from_edge_list([(0, 1), (1, 0)])
        assert g.m == 1

    def test_disconnected_flagged(self):
        g = from_edge_list([(0, 1), (2, 3)])
        assert not g.is_connected()
        assert len(g.components()) == 2

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError, match=r"\(2, 2\)"):
            from_edge_list([(0, 1), (2, 2)])

    def test_sparse_ids_relabelled(self):
        g = from_edge_list([(10, 20), (20, 35)])
        assert g.n == 3 and g.edges == ((0, 1), (1, 2))
        assert g.labels == ("10", "20", "35")

    def test_out_of_range(self):
        with pytest.raises(GraphError):
            Graph.build(2, [(0, 2)])

    @given(graphs(connected=False))
    def test_adjacency_symmetric_and_handshake(self, g):
        for u in g.vertices():
            assert list(g.adj[u]) == sorted(set(g.adj[u]))
            for v in g.adj[u]:
                assert u in g.adj[v]
        assert sum(g.degree(v) for v in g.vertices()) == 2 * g.m

    @given(graphs(connected=False))
    def test_edge_list_round_trip(self, g):
        assert parse_edge_list(format_edge_list(g, "x")) == g

    def test_header_mismatch(self):
        with pytest.raises(GraphError, match="m=3"):
            parse_edge_list("p 3 3\n0 1\n1 2\n")

    def test_header_counts_distinct_edges(self):
        g = parse_edge_list("# c\np 3 2\n0 1\n1 0\n1 2\n\n")
        assert g.m == 2


class TestDistances:
    def test_diameters(self):
        assert diameter(example1(3, 4)) == 5
        assert diameter(complete(5)) == 1
        assert diameter(path(5)) == 4

    def test_unreachable_is_inf(self):
        g = from_edge_list([(0, 1), (2, 3)])
        assert distances(g, 0)[2] == INF

    def test_neighborhood_layers(self):
        g = path(5)
        assert neighborhood_at(g, {0}, 2) == {2}
        assert neighborhood_at(g, {0, 1}, 1) == {2}

    @given(graphs(max_n=9))
    def test_triangle_inequality(self, g):
        d = [distances(g, v) for v in g.vertices()]
        for u, v, w in itertools.product(g.vertices(), repeat=3):
            assert d[u][u] == 0
            assert d[u][w] <= d[u][v] + d[v][w]

    @given(graphs(max_n=9))
    def test_matches_networkx(self, g):
        h = to_nx(g)
        assert diameter(g) == nx.diameter(h)
        assert radius(g) == nx.radius(h)


class TestBridges:
    def test_path_all(self):
        assert bridges(path(4)) == {(0, 1), (1, 2), (2, 3)}

    def test_cycle_none(self):
        assert bridges(cycle(5)) == set()

    def test_example1_small(self):
        # the two-vertex block only hangs off v1 v2, so v2 v3 is a cut edge
        g = example1(2, 2)
        assert bridges(g) == brute.bridges(g.n, g.edges) == {(1, 2)}

    @given(graphs(max_n=9))
    def test_exhaustive_removal(self, g):
        assert bridges(g) == brute.bridges(g.n, list(g.edges))

    @given(graphs(max_n=12))
    def test_matches_networkx(self, g):
        assert bridges(g) == {tuple(sorted(e)) for e in nx.bridges(to_nx(g))}


class TestBlowUp:
    def test_k2_to_k3(self):
        h, bu = blow_up(path(2), (0, 1))
        assert h.is_complete() and h.n == 3 and bu.new_vertices == (2,)
        assert brute.alpha(h.n, h.edges) == 1

    def test_path3_first_edge(self):
        g = path(3)
        h, _ = blow_up(g, (0, 1))
        assert set(h.edges) == {(0, 1), (0, 3), (1, 3), (1, 2)}
        assert brute.alpha(g.n, g.edges) == brute.alpha(h.n, h.edges) == 2
        assert brute.rc(g.n, g.edges) == brute.rc(h.n, h.edges) == 2

    def test_q_vertices_clique(self):
        h, bu = blow_up(path(3), (1, 2), q=3)
        clique = (1, 2) + bu.new_vertices
        assert all(h.has_edge(a, b) for a, b in itertools.combinations(clique, 2))
        assert set(path(3).edges) <= set(h.edges)

    def test_non_bridge_rejected(self):
        with pytest.raises(GraphError, match="cut edge"):
            blow_up(cycle(4), (0, 1))

    def test_labels_extended(self):
        g = from_edge_list([(5, 6), (6, 7)])
        h, _ = blow_up(g, (0, 1))
        assert len(h.labels) == h.n


class TestSpanningTree:
    def test_cycle4(self):
        t = spanning_tree(cycle(4))
        assert len(t) == 3

    def test_single_vertex(self):
        assert spanning_tree(cycle(4), {2}) == []

    def test_tree_is_fixed_point(self):
        g = path(6)
        assert spanning_tree(g) == list(g.edges)

    def test_preferred_tree_returned(self):
        g = complete(5)
        t = [(0, 4), (1, 4), (2, 4), (3, 4)]
        assert spanning_tree(g, prefer=t) == t

    def test_disconnected_subset(self):
        with pytest.raises(GraphError):
            spanning_tree(path(5), {0, 2})

    @given(graphs(max_n=10))
    def test_spans(self, g):
        t = spanning_tree(g)
        assert len(t) == g.n - 1
        assert Graph.build(g.n, t).is_connected()
        assert all(g.has_edge(*e) for e in t)
