import random

import pytest

from topsnut.errors import CapacityError, ValidationError
from topsnut.graphs import (
    Graph,
    GraphMatrix,
    Labelling,
    TopsnutGpw,
    build_graph,
    canonical_code,
    format_graph_text,
    gpw_equal,
    gpw_from_labels,
    gpw_from_matrix,
    graph_matrix,
    parse_graph_text,
)

from conftest import random_connected_graph
from oracles import label_preserving_isomorphic


class TestBuildGraph:
    def test_k2(self):
        g = build_graph(2, [(0, 1)])
        assert g.p == 2 and g.q == 1

    def test_triangle(self):
        g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
        assert g.q == 3

    def test_duplicate_edge_rejected(self):
        with pytest.raises(ValidationError):
            build_graph(4, [(0, 1), (0, 1)])

    def test_reversed_duplicate_rejected(self):
        with pytest.raises(ValidationError):
            build_graph(4, [(0, 1), (1, 0)])

    def test_self_loop_rejected(self):
        with pytest.raises(ValidationError):
            build_graph(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValidationError):
            build_graph(2, [(0, 5)])


class TestGraphMatrix:
    def test_k2_labelled(self, k2):
        gpw = TopsnutGpw(k2, Labelling({0: 0, 1: 1}, {(0, 1): 1}))
        m = graph_matrix(gpw)
        assert m.entries == ((0, 1), (1, 1))

    def test_edge_order_irrelevant(self):
        a = Graph(3, [(0, 1), (1, 2)])
        b = Graph(3, [(1, 2), (0, 1)])
        la = TopsnutGpw(a, Labelling({0: 0, 1: 3, 2: 1}, {(0, 1): 3, (1, 2): 2}))
        lb = TopsnutGpw(b, Labelling({0: 0, 1: 3, 2: 1}, {(1, 2): 2, (0, 1): 3}))
        assert graph_matrix(la) == graph_matrix(lb)

    def test_unlabelled_k3_all_sentinel(self, k3):
        m = graph_matrix(TopsnutGpw(k3, Labelling()))
        assert all(m.entries[i][i] == -1 for i in range(3))
        assert m.entries[0][1] == -1

    def test_symmetry_random(self, rng):
        for _ in range(25):
            g = random_connected_graph(rng, rng.randint(2, 7))
            labels = {v: rng.randint(0, 20) for v in range(g.p) if rng.random() < 0.7}
            gpw = TopsnutGpw(g, Labelling(labels))
            m = graph_matrix(gpw)
            for i in range(g.p):
                for j in range(g.p):
                    assert m.entries[i][j] == m.entries[j][i]

    def test_matrix_roundtrip_identity(self, rng):
        # matrix -> gpw -> matrix is the identity
        for _ in range(20):
            g = random_connected_graph(rng, rng.randint(2, 6))
            gpw = gpw_from_labels(g, {v: rng.randint(0, 15) for v in range(g.p)})
            m = graph_matrix(gpw)
            assert graph_matrix(gpw_from_matrix(m)) == m

    def test_matrix_text_roundtrip(self, k4):
        gpw = gpw_from_labels(k4, {0: 0, 1: 4, 2: 6, 3: 5})
        m = graph_matrix(gpw)
        assert GraphMatrix.from_text(m.to_text()) == m


class TestCanonicalCode:
    def test_same_object_equal(self, p3):
        a = gpw_from_labels(p3, {0: 0, 1: 3, 2: 1})
        assert canonical_code(a) == canonical_code(a)

    def test_relabelled_copies_equal(self, rng):
        for _ in range(10):
            g = random_connected_graph(rng, 8)
            labels = {v: rng.randint(0, 9) for v in range(8)}
            gpw = gpw_from_labels(g, labels)
            perm = list(range(8))
            rng.shuffle(perm)
            g2 = Graph(8, [(perm[u], perm[v]) for u, v in g.edges])
            gpw2 = gpw_from_labels(g2, {perm[v]: labels[v] for v in range(8)})
            assert canonical_code(gpw) == canonical_code(gpw2)

    def test_different_label_placement_differs(self, p3):
        a = gpw_from_labels(p3, {0: 0, 1: 3, 2: 1})
        b = gpw_from_labels(p3, {0: 0, 1: 1, 2: 3})
        assert canonical_code(a) != canonical_code(b)

    def test_cap_enforced(self):
        g = Graph(17, [(i, i + 1) for i in range(16)])
        with pytest.raises(CapacityError):
            canonical_code(TopsnutGpw(g, Labelling()))

    def test_agrees_with_bruteforce_oracle(self, rng):
        # canonical soundness against exhaustive permutation matching
        gpws = []
        for _ in range(12):
            g = random_connected_graph(rng, rng.randint(2, 6), extra_edges=rng.randint(0, 3))
            labels = {v: rng.randint(0, 6) for v in range(g.p)}
            gpws.append(gpw_from_labels(g, labels))
        # also include relabelled twins so both outcomes occur
        base = gpws[0]
        perm = list(range(base.graph.p))
        rng.shuffle(perm)
        twin = gpw_from_labels(
            Graph(base.graph.p, [(perm[u], perm[v]) for u, v in base.graph.edges]),
            {perm[v]: base.labelling.vertex_labels[v] for v in range(base.graph.p)},
        )
        gpws.append(twin)
        for a in gpws:
            for b in gpws:
                assert gpw_equal(a, b) == label_preserving_isomorphic(a, b)


class TestGpwEqual:
    def test_reflexive(self, k3):
        gpw = gpw_from_labels(k3, {0: 0, 1: 2, 2: 5})
        assert gpw_equal(gpw, gpw)

    def test_four_drawings_one_gpw(self):
        # the same labelled path drawn with different ids and edge orders
        base = gpw_from_labels(Graph(4, [(0, 1), (1, 2), (2, 3)]), {0: 0, 1: 3, 2: 1, 3: 2})
        drawings = []
        for perm in ([1, 0, 2, 3], [3, 2, 1, 0], [2, 3, 0, 1]):
            g = Graph(4, [(perm[u], perm[v]) for u, v in base.graph.edges])
            drawings.append(gpw_from_labels(g, {perm[v]: base.labelling.vertex_labels[v] for v in range(4)}))
        for d in drawings:
            assert gpw_equal(base, d)

    def test_label_swap_differs(self):
        a = gpw_from_labels(Graph(4, [(0, 1), (1, 2), (2, 3)]), {0: 0, 1: 3, 2: 1, 3: 2})
        h = gpw_from_labels(Graph(4, [(0, 1), (1, 2), (2, 3)]), {0: 3, 1: 0, 2: 2, 3: 1})
        assert not gpw_equal(a, h)


class TestGraphText:
    def test_roundtrip(self, rng):
        for _ in range(10):
            g = random_connected_graph(rng, rng.randint(2, 7))
            labels = {v: rng.randint(0, 20) for v in range(g.p) if rng.random() < 0.8}
            gpw = TopsnutGpw(g, Labelling(labels, {}, "free"))
            parsed = parse_graph_text(format_graph_text(gpw))
            assert parsed.graph == g
            assert parsed.labelling.vertex_labels == labels

    def test_rule_preserved(self, k2):
        gpw = gpw_from_labels(k2, {0: 0, 1: 1}, rule="graceful")
        assert parse_graph_text(format_graph_text(gpw)).labelling.rule == "graceful"

    def test_bad_header(self):
        with pytest.raises(ValidationError):
            parse_graph_text("nonsense\n")

    def test_reports_line_numbers(self):
        with pytest.raises(ValidationError) as err:
            parse_graph_text("2 1\n0 x\n")
        assert "line 2" in str(err.value)
