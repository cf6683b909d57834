"""The compiled and pure kernels must emit byte-identical results."""

import pytest

from topsnut import _pure, kernels

from conftest import random_connected_graph, random_tree

_speed = pytest.importorskip("topsnut._speed")


def grid(rng):
    graphs = []
    for p in (2, 4, 5, 6, 7):
        graphs.append(random_tree(rng, p))
        graphs.append(random_connected_graph(rng, p, extra_edges=2))
    return graphs


class TestBackendEquivalence:
    def test_active_backend_is_compiled(self):
        assert kernels.available_backends() == ["pure", "c"]

    def test_label_search_identical(self, rng):
        for g in grid(rng):
            for mode in (0, 1, 2):
                pure = _pure.label_search(g.p, g.edges, mode)
                fast = _speed.label_search(g.p, g.edges, mode)
                assert pure == fast

    def test_label_search_budgets_identical(self, rng):
        for g in grid(rng)[:4]:
            for kwargs in ({"max_solutions": 3}, {"node_limit": 40}):
                pure = _pure.label_search(g.p, g.edges, 0, **kwargs)
                fast = _speed.label_search(g.p, g.edges, 0, **kwargs)
                assert pure == fast

    def test_coloring_search_identical(self, rng):
        for g in grid(rng):
            for k in (2, 3, 4):
                assert _pure.coloring_search(g.p, g.edges, k) == \
                    _speed.coloring_search(g.p, g.edges, k)

    def test_canonical_form_identical(self, rng):
        for g in grid(rng):
            vlabels = [rng.randint(-1, 8) for _ in range(g.p)]
            codes = {e: rng.randint(-1, 8) for e in g.edges}
            assert _pure.canonical_form(g.p, vlabels, codes) == \
                _speed.canonical_form(g.p, vlabels, codes)

    def test_error_parity(self):
        with pytest.raises(ValueError):
            _pure.label_search(2, [], 0)
        with pytest.raises(ValueError):
            _speed.label_search(2, [], 0)
        with pytest.raises(ValueError):
            _pure.coloring_search(2, [(0, 1)], 0)
        with pytest.raises(ValueError):
            _speed.coloring_search(2, [(0, 1)], 0)

    def test_empty_canonical(self):
        assert _pure.canonical_form(0, [], {}) == _speed.canonical_form(0, [], {}) == []


class TestBenchmarkScript:
    def test_bench_runs(self, capsys):
        import importlib.util
        from pathlib import Path

        spec = importlib.util.spec_from_file_location(
            "bench_backends", Path(__file__).parent.parent / "benchmarks" / "bench_backends.py")
        mod = importlib.util.module_from_spec(spec)
        spec.loader.exec_module(mod)
        rows = mod.run_benchmarks(repeat=1, quick=True)
        assert rows and all(r.pure_seconds > 0 and r.c_seconds > 0 for r in rows)
