"""Timing comparison of the compiled and pure search kernels.

Run as a script:

    python benchmarks/bench_backends.py

Each workload runs on both backends (results are asserted identical) and
the table reports wall time plus the speedup factor.
"""

import time
from dataclasses import dataclass

from topsnut import _pure

try:
    from topsnut import _speed
except ImportError:  # pragma: no cover - benchmark needs the extension
    _speed = None

from topsnut.space import enumerate_trees


@dataclass
class Row:
    name: str
    pure_seconds: float
    c_seconds: float

    @property
    def speedup(self):
        return self.pure_seconds / self.c_seconds if self.c_seconds else float("inf")


def _time(fn, repeat):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def workloads(quick=False):
    big_tree = max(enumerate_trees(8 if quick else 10),
                   key=lambda t: max(t.degree(v) for v in range(t.p)))
    n = 10 if quick else 16
    cycle = [(i, (i + 1) % n) for i in range(n)]
    m = 8 if quick else 13
    ring = [(i, (i + 1) % m) for i in range(m)]
    vlabels = [-1] * m
    codes = {tuple(sorted(e)): -1 for e in ring}
    return [
        ("odd-graceful search, tree p=%d" % big_tree.p,
         lambda impl: impl.label_search(big_tree.p, big_tree.edges, 1)),
        ("3-coloring enumeration, cycle p=%d" % n,
         lambda impl: impl.coloring_search(n, cycle, 3)),
        ("canonical form, unlabelled cycle p=%d" % m,
         lambda impl: impl.canonical_form(m, vlabels, codes)),
    ]


def run_benchmarks(repeat=3, quick=False):
    if _speed is None:
        raise SystemExit("compiled extension not built; reinstall without TOPSNUT_PURE=1")
    rows = []
    for name, work in workloads(quick):
        pure_t, pure_res = _time(lambda: work(_pure), repeat)
        c_t, c_res = _time(lambda: work(_speed), repeat)
        assert pure_res == c_res, "backends disagree on %s" % name
        rows.append(Row(name, pure_t, c_t))
    return rows


def main():
    rows = run_benchmarks()
    width = max(len(r.name) for r in rows)
    print("%-*s %12s %12s %9s" % (width, "workload", "pure [s]", "compiled [s]", "speedup"))
    for r in rows:
        print("%-*s %12.4f %12.4f %8.1fx" % (width, r.name, r.pure_seconds, r.c_seconds, r.speedup))


if __name__ == "__main__":
    main()
