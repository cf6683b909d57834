"""Verification, search, counting and transformation of graph labellings.

Definitions used throughout (q = edge count, labels induced on an edge uv
as |f(u) - f(v)|):

* graceful: vertex labels injective within [0, q], induced edge labels are
  exactly {1, .., q}.
* odd-graceful: vertex labels injective within [0, 2q-1], induced edge
  labels are exactly {1, 3, .., 2q-1}.
* set-ordered graceful: graceful, and for a bipartition (X, Y) of the graph
  max f(X) < min f(Y).
"""

from dataclasses import dataclass

from .errors import (
    CapacityError,
    NotBipartiteError,
    PreconditionError,
    UndefinedLabelError,
)
from .graphs import Graph, Labelling, TopsnutGpw, connected_components, gpw_from_labels, is_connected
from .kernels import MODE_GRACEFUL, MODE_ODD, label_search

KINDS = ("graceful", "odd-graceful", "set-ordered-graceful")

COUNT_CAP = 12
PERFECT_CAP = 9


@dataclass(frozen=True)
class SearchBudget:
    """Limits for backtracking searches; 0 means unbounded."""

    max_solutions: int = 0
    node_limit: int = 0

    def __post_init__(self):
        if self.max_solutions < 0 or self.node_limit < 0:
            raise PreconditionError("budget limits must be >= 0")


@dataclass(frozen=True)
class SearchResult:
    """Materialized deterministic stream of labellings.

    ``complete`` is False when the budget truncated the search (a partial
    result, not an error).
    """

    labellings: tuple
    complete: bool

    def __iter__(self):
        return iter(self.labellings)

    def __len__(self):
        return len(self.labellings)


def induced_edge_label(labelling, u, v):
    """|f(u) - f(v)| for a labelling defining both endpoints."""
    fu = labelling.vertex_labels.get(u)
    fv = labelling.vertex_labels.get(v)
    if fu is None or fv is None:
        raise UndefinedLabelError("vertex %r or %r has no label" % (u, v))
    return abs(fu - fv)


def _check_kind(kind):
    if kind not in KINDS:
        raise PreconditionError("unknown labelling kind %r" % (kind,))


def _component_sides(graph):
    """Per-component bipartition sides, or None if not bipartite."""
    color = [-1] * graph.p
    sides = []
    for comp in connected_components(graph):
        s = comp[0]
        color[s] = 0
        queue = [s]
        while queue:
            v = queue.pop()
            for u in graph.neighbors(v):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
        sides.append(([v for v in comp if color[v] == 0], [v for v in comp if color[v] == 1]))
    return sides


def _set_ordered_holds(graph, labels):
    sides = _component_sides(graph)
    if sides is None:
        raise NotBipartiteError("set-ordered check on a non-bipartite graph")
    # Each component may orient its two sides freely; the condition holds iff
    # some threshold t separates all chosen X-sides (<= t) from all Y-sides.
    def side_fits(low, high, t):
        lo_ok = all(labels[v] <= t for v in low)
        hi_ok = all(labels[v] > t for v in high)
        return lo_ok and hi_ok

    for t in sorted(set(labels.values())):
        if all(side_fits(a, b, t) or side_fits(b, a, t) for a, b in sides):
            return True
    return False


def verify_labelling(gpw, kind):
    """Check a totally vertex-labelled GPW against a labelling kind.

    Stored edge labels, when present, must agree with the induced values.
    """
    _check_kind(kind)
    g = gpw.graph
    if g.q < 1:
        raise PreconditionError("labelling kinds need at least one edge")
    labels = gpw.labelling.vertex_labels
    if not gpw.labelling.is_total_on(g):
        raise UndefinedLabelError("vertex labelling is not total")
    q = g.q
    values = [labels[v] for v in range(g.p)]
    if len(set(values)) != len(values):
        return False
    max_label = q if kind != "odd-graceful" else 2 * q - 1
    if any(x < 0 or x > max_label for x in values):
        return False
    diffs = []
    for u, v in g.edges:
        d = abs(labels[u] - labels[v])
        stored = gpw.labelling.edge_labels.get((u, v))
        if stored is not None and stored != d:
            return False
        diffs.append(d)
    if kind == "odd-graceful":
        target = set(range(1, 2 * q, 2))
    else:
        target = set(range(1, q + 1))
    if sorted(diffs) != sorted(target):
        return False
    if kind == "set-ordered-graceful":
        return _set_ordered_holds(g, labels)
    return True


def search_labellings(graph, kind, budget=SearchBudget()):
    """All labellings of the given kind on ``graph``, deterministic order.

    Exhaustive when the budget was not exhausted; truncation is reported via
    ``SearchResult.complete``.
    """
    _check_kind(kind)
    if graph.q < 1:
        raise PreconditionError("labelling search needs at least one edge")
    mode = MODE_ODD if kind == "odd-graceful" else MODE_GRACEFUL
    want = budget.max_solutions
    raw, complete = label_search(graph.p, graph.edges, mode,
                                 0 if kind == "set-ordered-graceful" else want,
                                 budget.node_limit)
    out = []
    for i, assignment in enumerate(raw):
        labels = {v: assignment[v] for v in range(graph.p)}
        if kind == "set-ordered-graceful" and not _set_ordered_holds(graph, labels):
            continue
        out.append(gpw_from_labels(graph, labels, rule=kind).labelling)
        if kind == "set-ordered-graceful" and want and len(out) >= want:
            if i + 1 < len(raw):
                complete = False
            break
    return SearchResult(tuple(out), complete)


def count_labellings(graph, kind, cap=COUNT_CAP):
    """Exact number of distinct labellings of ``kind`` on ``graph``."""
    if graph.p > cap:
        raise CapacityError("counting capped at %d vertices (got %d)" % (cap, graph.p))
    return len(search_labellings(graph, kind).labellings)


def dual_labelling(gpw, span=None):
    """Complement every vertex label against a constant and re-induce edges.

    The constant defaults to max+min of the gpw's own vertex labels (an
    involution; for verified graceful and odd-graceful labellings this is
    the usual 0..q or 0..2q-1 complement).  ``span`` overrides it, e.g. 2q
    for the key/lock duality where labels live in [0, 2q].  The rule tag is
    kept when the dual still verifies, otherwise it degrades to "free".
    """
    labels = gpw.labelling.vertex_labels
    if not gpw.labelling.is_total_on(gpw.graph):
        raise UndefinedLabelError("dual needs a total vertex labelling")
    if span is None:
        span = max(labels.values()) + min(labels.values())
    dual = {v: span - x for v, x in labels.items()}
    if any(x < 0 for x in dual.values()):
        raise PreconditionError("span %d is below the maximum label" % span)
    rule = gpw.labelling.rule
    out = gpw_from_labels(gpw.graph, dual, rule="free")
    if rule in KINDS and gpw.graph.q >= 1 and verify_labelling(out, rule):
        out = gpw_from_labels(gpw.graph, dual, rule=rule)
    return out


def _connected_edge_subgraphs(graph):
    """Connected subgraphs with >= 1 edge, as frozensets of edges.

    Standard grow-from-anchor enumeration: each subgraph is generated once,
    anchored at its smallest edge.
    """
    edges = list(graph.edges)
    index = {e: i for i, e in enumerate(edges)}
    out = set()
    for i, anchor in enumerate(edges):
        frontier = [(frozenset([anchor]), frozenset(anchor))]
        seen = {frozenset([anchor])}
        while frontier:
            sub, verts = frontier.pop()
            out.add(sub)
            for v in verts:
                for u in graph.neighbors(v):
                    e = (u, v) if u < v else (v, u)
                    if index[e] <= i or e in sub:
                        continue
                    grown = sub | {e}
                    if grown not in seen:
                        seen.add(grown)
                        frontier.append((grown, verts | {u}))
    return out


def is_perfect_labelling_graph(graph, kind, cap=PERFECT_CAP):
    """True iff the graph and every connected proper subgraph admit ``kind``.

    Single-vertex subgraphs are vacuous; subgraphs are deduplicated up to
    isomorphism before searching.
    """
    _check_kind(kind)
    if not is_connected(graph):
        raise PreconditionError("perfect-labelling check needs a connected graph")
    if graph.p > cap:
        raise CapacityError("perfect check capped at %d vertices (got %d)" % (cap, graph.p))
    if graph.q < 1:
        raise PreconditionError("need at least one edge")

    def admits(g):
        budget = SearchBudget(max_solutions=1)
        return len(search_labellings(g, kind, budget)) > 0

    if not admits(graph):
        return False
    from .graphs import canonical_code

    seen = set()
    for sub in _connected_edge_subgraphs(graph):
        if len(sub) == graph.q:
            continue  # the graph itself (isolated vertices cannot occur here)
        verts = sorted({v for e in sub for v in e})
        remap = {v: i for i, v in enumerate(verts)}
        g = Graph(len(verts), [(remap[u], remap[v]) for u, v in sub])
        code = canonical_code(TopsnutGpw(g, Labelling()))
        if code in seen:
            continue
        seen.add(code)
        if not admits(g):
            return False
    return True
