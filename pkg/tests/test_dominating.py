import pytest
from hypothesis import given

import brute
from rainbow.dominating import (DominatingTree, PreconditionError, ProofGapError, build_dominating_tree,
                                classify_neighborhood, find_enlarged_independent_set, longest_pendant_path,
                                split_neighborhood)
from rainbow.families import complete, cycle, example2, path, random_connected
from rainbow.graph import Graph, tree_adjacency
from rainbow.oracles import independence_number, is_independent
from strategies import graphs


def tree_only(edges, Y, X):
    D = frozenset(v for e in edges for v in e) or frozenset(Y)
    return DominatingTree(D, tuple(sorted(edges)), frozenset(X), frozenset(Y), frozenset(), min(Y))


def min_degree_two_graphs(count, max_n=30, seed0=0):
    out, seed = [], seed0
    while len(out) < count:
        seed += 1
        n = 4 + seed % (max_n - 3)
        g = random_connected(n, [0.15, 0.25, 0.4, 0.6][seed % 4], seed=seed)
        if g.min_degree() >= 2 and not g.is_complete():
            out.append(g)
    return out


class TestBuild:
    def test_cycle5(self):
        dt = build_dominating_tree(cycle(5))
        assert dt.seed == 0 and dt.rounds == ((2, 1, 0),)
        assert (dt.D, dt.Y, dt.X) == ({0, 1, 2}, {0, 2}, {1})

    def test_example2_small(self):
        g = example2(2, 2)
        dt = build_dominating_tree(g)
        assert len(dt.Y) <= independence_number(g).alpha == 2 and len(dt.D) <= 3
        assert (dt.D, dt.Y) == ({0, 2, 4}, {0, 4})

    @pytest.mark.parametrize("g", [complete(4), path(5), Graph.build(6, [(0, 1), (1, 2), (0, 2),
                                                                        (3, 4), (4, 5), (3, 5)])])
    def test_preconditions(self, g):
        with pytest.raises(PreconditionError):
            build_dominating_tree(g)

    def test_invariants_on_random_batch(self):
        for g in min_degree_two_graphs(500):
            dt = build_dominating_tree(g)
            dt.check(g)
            assert len(dt.Y) <= independence_number(g).alpha

    @given(graphs(min_n=4, max_n=10, min_degree=2))
    def test_invariants_property(self, g):
        if g.is_complete():
            return
        build_dominating_tree(g).check(g)


class TestLongestPath:
    def test_path_tree(self):
        dt = tree_only([(0, 1), (1, 2), (2, 3), (3, 4)], {0, 2, 4}, {1, 3})
        assert longest_pendant_path(dt) in ([0, 1, 2, 3, 4], [4, 3, 2, 1, 0])

    def test_star(self):
        dt = tree_only([(0, 1), (0, 2), (0, 3)], {1, 2, 3}, {0})
        P = longest_pendant_path(dt)
        assert len(P) == 3 and P[1] == 0

    def test_spider(self):
        edges = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]
        dt = tree_only(edges, {2, 4, 5}, {0, 1, 3})
        P = longest_pendant_path(dt)
        tadj = tree_adjacency(edges)
        leaves = [v for v in tadj if len(tadj[v]) == 1]
        assert len(P) == 5 and P[0] in leaves and P[-1] in leaves

    def test_too_small(self):
        with pytest.raises(PreconditionError):
            longest_pendant_path(tree_only([(0, 1)], {0}, {1}))


def _comb():
    # D is the path 0-1-2-3-4 with Y = {0, 2, 4}
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (5, 0), (5, 6), (6, 0), (6, 4), (7, 0), (7, 4), (7, 2)]
    g = Graph.build(8, edges)
    dt = DominatingTree(frozenset(range(5)), ((0, 1), (1, 2), (2, 3), (3, 4)), frozenset({1, 3}),
                        frozenset({0, 2, 4}), frozenset(), 0, ((2, 1, 0), (4, 3, 2)))
    return g, dt


class TestClassify:
    def test_blocks(self):
        g, dt = _comb()
        part = classify_neighborhood(g, dt, [0, 1, 2, 3, 4])
        assert part.A == {6, 7} and part.B == {5}
        assert 5 in part.B1 and 6 in part.A3 and 7 in part.A1
        assert part.A1 | part.A2 | part.A3 | part.A4 == part.A
        assert part.B1 | part.B2 | part.B3 == part.B

    def test_split_only(self):
        g, dt = _comb()
        part = split_neighborhood(g, dt.D)
        assert not part.refined and part.dnb[7] == [0, 2, 4]

    def test_b_vertex_on_x_flagged(self):
        g, dt = _comb()
        g = g.with_edges([(5, 1)]).without_edge((0, 5))
        with pytest.raises(ProofGapError):
            classify_neighborhood(g, dt, [0, 1, 2, 3, 4])


class TestEnlargement:
    def test_no_y_neighbour(self):
        g, dt = _comb()
        g = Graph.build(9, list(g.edges) + [(8, 1), (8, 3)])
        enl = find_enlarged_independent_set(g, dt)
        assert enl.lemma == "lemma2" and enl.I == dt.Y | {8}

    def test_absent_when_alpha_is_tight(self):
        g = cycle(5)
        assert find_enlarged_independent_set(g, build_dominating_tree(g)) is None

    def test_random_batch_cross_checked(self):
        hits = 0
        for g in min_degree_two_graphs(300, max_n=13, seed0=5000):
            dt = build_dominating_tree(g)
            try:
                enl = find_enlarged_independent_set(g, dt)
            except ProofGapError:
                continue
            if enl is None:
                continue
            hits += 1
            assert len(enl.I) == len(dt.Y) + 1 and is_independent(g, enl.I)
            assert brute.alpha(g.n, g.edges) >= len(dt.Y) + 1
        assert hits > 50
