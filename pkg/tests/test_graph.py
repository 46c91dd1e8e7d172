import pytest

from mayacrystal.datum import CartanData
from mayacrystal.graph import (
    CrystalGraph,
    check_axioms,
    default_max_boxes,
    explore,
    export,
    kostant,
    kostant_brute,
    lattice_points,
    load_json,
    positive_roots,
    weight_census,
)


class TestExplore:
    def test_depth_zero(self):
        g = explore(CartanData(2), 0)
        assert len(g.nodes) == 1
        assert g.nodes[0].word == ()
        assert g.nodes[0].weight == (0, 0)

    def test_depth_one_n2(self):
        g = explore(CartanData(2), 1)
        assert len(g.nodes) == 3

    def test_depth_one_n3(self):
        g = explore(CartanData(3), 1)
        assert len(g.nodes) == 4

    def test_negative_depth(self):
        with pytest.raises(ValueError):
            explore(CartanData(2), -1)

    def test_edges_total(self):
        g = explore(CartanData(2), 2)
        # every node expanded at depth < 2 has exactly n outgoing edges
        expanded = [node for node in g.nodes if node.depth < 2]
        assert len(g.edges) == 2 * len(expanded)

    def test_string_length_matches_eps(self):
        g = explore(CartanData(2), 3)
        for node in g.nodes:
            for i in range(2):
                # eps counts the raising string inside the explored ball for
                # nodes whose whole string fits in the ball
                if node.depth + node.eps[i] <= 3:
                    assert g.string_length(node.id, i) == node.eps[i]


class TestAxioms:
    def test_pass_small(self):
        for n, depth in ((2, 4), (3, 3)):
            g = explore(CartanData(n), depth)
            assert check_axioms(g) == []

    def test_negative_control(self):
        # rewiring one edge to a wrong target must be flagged
        g = explore(CartanData(2), 3)
        (src, i), dst = next(iter(sorted(g.edges.items())))
        wrong = (dst + 1) % len(g.nodes)
        if wrong == src:
            wrong = (wrong + 1) % len(g.nodes)
        broken_edges = dict(g.edges)
        broken_edges[(src, i)] = wrong
        broken = CrystalGraph(g.n, g.depth, g.max_boxes, g.nodes, broken_edges)
        assert check_axioms(broken)


class TestKostant:
    def test_height_zero(self):
        assert kostant(CartanData(2), (0, 0)) == 1

    def test_simple_roots(self):
        c = CartanData(3)
        for beta in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
            assert kostant(c, beta) == 1

    def test_delta_n2(self):
        # alpha_0 + alpha_1 decomposes as the sum of the two real roots or
        # as one imaginary copy of delta (multiplicity n - 1 = 1): 2 ways
        assert kostant(CartanData(2), (1, 1)) == 2

    def test_delta_n3(self):
        # {a0,a1,a2}, {a0,a1+a2}, {a1,a0+a2}, {a2,a0+a1}, plus two
        # distinguishable imaginary copies of delta: 6 ways
        assert kostant(CartanData(3), (1, 1, 1)) == 6

    def test_invalid_beta(self):
        with pytest.raises(ValueError):
            kostant(CartanData(2), (1, -1))
        with pytest.raises(ValueError):
            kostant(CartanData(2), (1, 1, 1))

    def test_dp_matches_brute_force(self):
        for n in (2, 3):
            c = CartanData(n)
            for beta in lattice_points(n, 5):
                assert kostant(c, beta) == kostant_brute(c, beta)

    def test_positive_roots_n2(self):
        roots = positive_roots(2, 4)
        assert roots.count((1, 1)) == 1  # delta once (multiplicity n - 1)
        assert (1, 0) in roots and (0, 1) in roots
        assert (2, 1) in roots and (1, 2) in roots
        assert all(sum(r) <= 4 for r in roots)

    def test_positive_roots_imaginary_multiplicity(self):
        roots = positive_roots(3, 6)
        assert roots.count((1, 1, 1)) == 2
        assert roots.count((2, 2, 2)) == 2


class TestCensus:
    def test_matches_kostant_n2(self):
        g = explore(CartanData(2), 4)
        census = weight_census(g)
        for beta in lattice_points(2, 4):
            assert census.get(beta, 0) == kostant(CartanData(2), beta)

    def test_matches_kostant_n3(self):
        g = explore(CartanData(3), 3)
        census = weight_census(g)
        for beta in lattice_points(3, 3):
            assert census.get(beta, 0) == kostant(CartanData(3), beta)


class TestExport:
    def test_json_round_trip_bytes(self):
        g = explore(CartanData(2), 3)
        blob = export(g, "json")
        g2 = load_json(blob)
        assert export(g2, "json") == blob

    def test_json_deterministic(self):
        a = export(explore(CartanData(2), 2), "json")
        b = export(explore(CartanData(2), 2), "json")
        assert a == b

    def test_dot_shape(self):
        g = explore(CartanData(2), 1)
        text = export(g, "dot").decode()
        assert text.startswith("digraph")
        assert text.count("->") == len(g.edges)

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            export(explore(CartanData(2), 0), "png")


def test_default_max_boxes():
    assert default_max_boxes(2, 6) == 14
    assert default_max_boxes(3, 4) == 15


def test_lattice_points_shape():
    points = lattice_points(2, 2)
    assert (0, 0) in points
    assert (2, 0) in points and (1, 1) in points
    assert len(points) == len(set(points))
    assert all(sum(p) <= 2 for p in points)
