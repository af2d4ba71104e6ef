import pytest

from rainbow.cases import (VerificationError, _verify, case1_coloring, case2_coloring, hub_partition,
                           procedure1_extend, tree_rainbow_coloring, unicyclic_rainbow_coloring)
from rainbow.coloring import EdgeColoring
from rainbow.dominating import PreconditionError, build_dominating_tree, longest_pendant_path
from rainbow.families import complete, cycle, example1, path, random_connected
from rainbow.graph import Graph, GraphError, canon
from rainbow.oracles import independence_number, is_rainbow_connected
from rainbow.pipeline import preprocess_bridges, rainbow_color_bounded


def local_check(edges, col):
    verts = sorted({v for e in edges for v in e})
    idx = {v: i for i, v in enumerate(verts)}
    g = Graph.build(len(verts), [(idx[a], idx[b]) for a, b in edges])
    return is_rainbow_connected(g, EdgeColoring({canon(idx[a], idx[b]): c for (a, b), c in col.colors.items()},
                                                col.k))


class TestProcedure1:
    def test_cycle5(self):
        g = cycle(5)
        inner = EdgeColoring({(0, 1): 1, (1, 2): 2}, 2)
        col = procedure1_extend(g, {0, 1, 2}, inner)
        assert col.k == 5 and is_rainbow_connected(g, col)

    def test_nothing_outside(self):
        g = complete(3)
        inner = EdgeColoring({e: 1 for e in g.edges}, 1)
        col = procedure1_extend(g, {0, 1, 2}, inner)
        assert col.colors == inner.colors and col.k == 4

    def test_example1_with_built_tree(self):
        g = example1(2, 2)
        dt = build_dominating_tree(g)
        col = procedure1_extend(g, dt.D, tree_rainbow_coloring(g, dt.D, dt.T))
        assert col.k <= len(dt.D) + 2 and is_rainbow_connected(g, col)

    def test_hub_partition_covers(self):
        g = random_connected(12, 0.3, seed=4)
        D = build_dominating_tree(preprocess_bridges(g, pendant_only=True).graph).D
        hp = hub_partition(g, D)
        flat = [v for H in hp.groups for v in H] + list(hp.rest)
        assert sorted(flat) == sorted(set(range(g.n)) - set(D))
        for H in hp.groups:
            assert all(g.has_edge(H[0], h) for h in H[1:])

    def test_isolated_leftovers_meet(self):
        # two vertices outside D with no neighbours outside D
        g = Graph.build(5, [(0, 1), (1, 2), (3, 0), (3, 2), (4, 0), (4, 2)])
        col = procedure1_extend(g, {0, 1, 2}, EdgeColoring({(0, 1): 1, (1, 2): 2}, 2))
        assert is_rainbow_connected(g, col)


class TestUnicyclic:
    def test_square(self):
        T = [(0, 1), (1, 2), (2, 3)]
        col = unicyclic_rainbow_coloring(T, (0, 3))
        assert col.k == 2 == len(T) - 4 // 2 + 1
        assert local_check(T + [(0, 3)], col)

    def test_triangle(self):
        col = unicyclic_rainbow_coloring([(0, 1), (1, 2)], (0, 2))
        assert col.k == 1

    def test_spider_with_pentagon(self):
        T = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]
        col = unicyclic_rainbow_coloring(T, (2, 4))
        assert col.k == len(T) - 1
        assert local_check(T + [(2, 4)], col)

    @pytest.mark.parametrize("L", range(3, 10))
    def test_cycle_lengths_with_tails(self, L):
        T = [(i, i + 1) for i in range(L - 1)] + [(0, L), (L, L + 1), (L - 1, L + 2)]
        col = unicyclic_rainbow_coloring(T, (0, L - 1))
        expect = len(T) - 1 if L == 3 else len(T) - L + 1 + -(-L // 2)
        assert col.k == expect and local_check(T + [(0, L - 1)], col)

    def test_bad_chord(self):
        with pytest.raises(GraphError):
            unicyclic_rainbow_coloring([(0, 1), (1, 2)], (0, 1))


def test_tree_coloring_distinct():
    g = cycle(6)
    col = tree_rainbow_coloring(g, {0, 1, 2, 3}, [(0, 1), (1, 2), (2, 3)])
    assert col.k == 3 and sorted(col.colors.values()) == [1, 2, 3]


def _routed(prefix, count, max_n=12):
    out, seed = [], 0
    while len(out) < count:
        seed += 1
        g = random_connected(4 + seed % (max_n - 3), [0.2, 0.3, 0.45, 0.6][seed % 4], seed=20_000 + seed)
        cert = rainbow_color_bounded(g)
        if cert.route.startswith(prefix):
            out.append((g, cert))
    return out


class TestCase1:
    def test_batch(self):
        for g, cert in _routed("case1", 60):
            assert cert.verdict.connected and cert.budget_ok
            assert cert.palette_size <= 2 * independence_number(g).alpha - 1

    def test_tree_dominator_rejected(self):
        g = cycle(5)
        with pytest.raises(PreconditionError):
            case1_coloring(g, build_dominating_tree(g))


class TestCase2:
    def test_cycle5(self):
        g = cycle(5)
        cert = case2_coloring(g, build_dominating_tree(g))
        assert cert.route.startswith("case2") and cert.palette_size <= 3 and cert.verdict.connected

    def test_example1(self):
        g = example1(2, 2)
        dt = build_dominating_tree(g)
        cert = case2_coloring(g, dt, longest_pendant_path(dt))
        assert cert.palette_size <= 3 and cert.verdict.connected

    def test_batch_of_200(self):
        seen = set()
        for g, cert in _routed("case2", 200):
            seen.add(cert.route)
            assert cert.verdict.connected
            assert cert.palette_size <= 2 * independence_number(g).alpha - 1
        assert {"case2.2.1", "case2.2.2.1", "case2.1.2"} <= seen


def test_verification_failure_carries_state():
    g = path(3)
    with pytest.raises(VerificationError) as ex:
        _verify(g, EdgeColoring({(0, 1): 1, (1, 2): 1}, 1), "demo", D=[1])
    assert ex.value.state["route"] == "demo" and ex.value.state["violations"] == ((0, 2),)
