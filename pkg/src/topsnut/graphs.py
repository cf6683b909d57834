"""Graph, labelling and matrix types underlying every Topsnut GPW.

A GPW is a plain simple graph together with a partial integer labelling of
its vertices and edges plus a rule tag.  Vertex ids are dense integers
0..p-1.  All values are treated as immutable after construction.
"""

from dataclasses import dataclass, field

from .errors import CapacityError, ValidationError
from .kernels import canonical_form

RULES = ("graceful", "odd-graceful", "set-ordered-graceful", "twin-odd-graceful", "free")

CANONICAL_CAP = 16


def edge_key(u, v):
    """Normalized undirected edge key."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices 0..p-1.

    Rejects self-loops, parallel edges and out-of-range endpoints.
    """

    __slots__ = ("p", "edges", "_adj", "_eset")

    def __init__(self, p, edges):
        if p < 0:
            raise ValidationError("vertex count must be >= 0")
        seen = set()
        normalized = []
        for e in edges:
            u, v = e
            if not (0 <= u < p and 0 <= v < p):
                raise ValidationError("edge (%r,%r) out of range for p=%d" % (u, v, p))
            if u == v:
                raise ValidationError("self-loop at vertex %d" % u)
            key = edge_key(u, v)
            if key in seen:
                raise ValidationError("duplicate edge (%d,%d)" % key)
            seen.add(key)
            normalized.append(key)
        self.p = p
        self.edges = tuple(sorted(normalized))
        self._eset = frozenset(self.edges)
        adj = [[] for _ in range(p)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def q(self):
        return len(self.edges)

    def vertices(self):
        return range(self.p)

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def has_edge(self, u, v):
        return edge_key(u, v) in self._eset

    def __eq__(self, other):
        return isinstance(other, Graph) and self.p == other.p and self.edges == other.edges

    def __hash__(self):
        return hash((self.p, self.edges))

    def __repr__(self):
        return "Graph(p=%d, q=%d)" % (self.p, self.q)


def build_graph(vertex_count, edge_list):
    """Construct a validated :class:`Graph`."""
    return Graph(vertex_count, edge_list)


@dataclass(frozen=True)
class Labelling:
    """Partial integer labelling of vertices and edges plus a rule tag."""

    vertex_labels: dict = field(default_factory=dict)
    edge_labels: dict = field(default_factory=dict)
    rule: str = "free"

    def __post_init__(self):
        if self.rule not in RULES:
            raise ValidationError("unknown rule tag %r" % (self.rule,))
        for v, x in self.vertex_labels.items():
            if not isinstance(x, int) or x < 0:
                raise ValidationError("vertex %r has non-natural label %r" % (v, x))
        fixed = {}
        for e, x in self.edge_labels.items():
            if not isinstance(x, int) or x < 0:
                raise ValidationError("edge %r has non-natural label %r" % (e, x))
            fixed[edge_key(*e)] = x
        object.__setattr__(self, "edge_labels", fixed)

    def is_total_on(self, graph):
        return all(v in self.vertex_labels for v in graph.vertices())


@dataclass(frozen=True)
class TopsnutGpw:
    """A graph plus its labelling: the password object everything works on."""

    graph: Graph
    labelling: Labelling = field(default_factory=Labelling)

    def __post_init__(self):
        g = self.graph
        for v in self.labelling.vertex_labels:
            if not (0 <= v < g.p):
                raise ValidationError("label on unknown vertex %r" % (v,))
        edge_set = frozenset(g.edges)
        for e in self.labelling.edge_labels:
            if e not in edge_set:
                raise ValidationError("label on unknown edge %r" % (e,))

    def vertex_label(self, v):
        return self.labelling.vertex_labels.get(v)

    def edge_label(self, u, v=None):
        e = u if v is None else edge_key(u, v)
        return self.labelling.edge_labels.get(edge_key(*e))


def gpw_from_labels(graph, vertex_labels, rule="free", induce_edges=True):
    """Convenience constructor: total vertex labelling, edges induced as
    absolute differences when requested."""
    edge_labels = {}
    if induce_edges:
        for u, v in graph.edges:
            edge_labels[(u, v)] = abs(vertex_labels[u] - vertex_labels[v])
    return TopsnutGpw(graph, Labelling(dict(vertex_labels), edge_labels, rule))


@dataclass(frozen=True)
class GraphMatrix:
    """Square matrix form: diagonal holds vertex labels, off-diagonal entries
    hold edge labels; -1 marks unlabelled (absent edges included)."""

    order: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.order or any(len(r) != self.order for r in self.entries):
            raise ValidationError("matrix entries are not %d x %d" % (self.order, self.order))
        for i in range(self.order):
            for j in range(self.order):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValidationError("matrix not symmetric at (%d,%d)" % (i, j))

    def to_text(self):
        return "\n".join(",".join(str(x) for x in row) for row in self.entries) + "\n"

    @classmethod
    def from_text(cls, text):
        rows = []
        for ln, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rows.append(tuple(int(tok) for tok in line.split(",")))
            except ValueError as exc:
                raise ValidationError("bad matrix row at line %d: %s" % (ln, exc)) from exc
        return cls(len(rows), tuple(rows))


def graph_matrix(gpw):
    """Serialize a GPW as its :class:`GraphMatrix` (row order = vertex ids)."""
    p = gpw.graph.p
    rows = [[-1] * p for _ in range(p)]
    for v, x in gpw.labelling.vertex_labels.items():
        rows[v][v] = x
    for (u, v) in gpw.graph.edges:
        x = gpw.labelling.edge_labels.get((u, v), -1)
        rows[u][v] = x
        rows[v][u] = x
    return GraphMatrix(p, tuple(tuple(r) for r in rows))


def gpw_from_matrix(matrix, rule="free"):
    """Rebuild a GPW from a matrix.  Off-diagonal -1 means no edge, so a
    present-but-unlabelled edge does not survive this round trip; fully
    labelled GPWs (the stored-lock case) round-trip exactly."""
    p = matrix.order
    edges = []
    edge_labels = {}
    vertex_labels = {}
    for i in range(p):
        if matrix.entries[i][i] != -1:
            vertex_labels[i] = matrix.entries[i][i]
        for j in range(i + 1, p):
            x = matrix.entries[i][j]
            if x != -1:
                edges.append((i, j))
                edge_labels[(i, j)] = x
    return TopsnutGpw(Graph(p, edges), Labelling(vertex_labels, edge_labels, rule))


def _canonical_sequence(gpw, cap):
    g = gpw.graph
    if g.p > cap:
        raise CapacityError("canonical form capped at %d vertices (got %d)" % (cap, g.p))
    vlabels = [gpw.labelling.vertex_labels.get(v, -1) for v in range(g.p)]
    edge_codes = {}
    for e in g.edges:
        edge_codes[e] = gpw.labelling.edge_labels.get(e, -1)
    return canonical_form(g.p, vlabels, edge_codes)


def canonical_code(gpw, cap=CANONICAL_CAP):
    """Deterministic bytes equal for exactly the label-preserving isomorphic
    GPWs (vertex relabellings)."""
    seq = _canonical_sequence(gpw, cap)
    return (",".join(str(x) for x in seq)).encode("ascii")


def gpw_equal(a, b, cap=CANONICAL_CAP):
    """True iff the two GPWs are one Topsnut GPW (same up to redrawing and
    vertex renaming)."""
    if a.graph.p != b.graph.p or a.graph.q != b.graph.q:
        return False
    return canonical_code(a, cap) == canonical_code(b, cap)


def connected_components(graph):
    """Vertex sets of the connected components, each sorted, in order of
    smallest member."""
    seen = [False] * graph.p
    comps = []
    for s in range(graph.p):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in graph.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(graph):
    return graph.p <= 1 or len(connected_components(graph)) == 1


def bipartition(graph):
    """2-coloring of each component as (side0, side1) lists, or None when the
    graph is not bipartite.  Component sides are oriented so the smallest
    vertex of each component sits in side0."""
    color = [-1] * graph.p
    for s in range(graph.p):
        if color[s] != -1:
            continue
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
    side0 = [v for v in range(graph.p) if color[v] == 0]
    side1 = [v for v in range(graph.p) if color[v] == 1]
    return side0, side1


# --- text file format ------------------------------------------------------
#
# line 1: "p q", then q lines "u v [edge_label]", then up to p lines
# "v vertex_label".  A trailing "rule: <tag>" line is accepted and written
# when the rule is not "free".


def format_graph_text(gpw):
    g = gpw.graph
    out = ["%d %d" % (g.p, g.q)]
    for u, v in g.edges:
        x = gpw.labelling.edge_labels.get((u, v))
        out.append("%d %d" % (u, v) if x is None else "%d %d %d" % (u, v, x))
    for v in sorted(gpw.labelling.vertex_labels):
        out.append("%d %d" % (v, gpw.labelling.vertex_labels[v]))
    if gpw.labelling.rule != "free":
        out.append("rule: %s" % gpw.labelling.rule)
    return "\n".join(out) + "\n"


def parse_graph_text(text):
    lines = [(n, ln.strip()) for n, ln in enumerate(text.splitlines(), start=1)]
    lines = [(n, ln) for n, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValidationError("empty graph file")
    rule = "free"
    if lines and lines[-1][1].startswith("rule:"):
        rule = lines[-1][1].split(":", 1)[1].strip()
        lines = lines[:-1]
    ln, header = lines[0]
    try:
        p, q = (int(t) for t in header.split())
    except ValueError as exc:
        raise ValidationError("line %d: expected 'p q' header" % ln) from exc
    if len(lines) - 1 < q:
        raise ValidationError("expected %d edge lines, found %d" % (q, len(lines) - 1))
    edges = []
    edge_labels = {}
    for ln, line in lines[1 : 1 + q]:
        toks = line.split()
        if len(toks) not in (2, 3):
            raise ValidationError("line %d: expected 'u v [label]'" % ln)
        try:
            u, v = int(toks[0]), int(toks[1])
            edges.append((u, v))
            if len(toks) == 3:
                edge_labels[edge_key(u, v)] = int(toks[2])
        except ValueError as exc:
            raise ValidationError("line %d: %s" % (ln, exc)) from exc
    vertex_labels = {}
    for ln, line in lines[1 + q :]:
        toks = line.split()
        if len(toks) != 2:
            raise ValidationError("line %d: expected 'v label'" % ln)
        try:
            v, x = int(toks[0]), int(toks[1])
        except ValueError as exc:
            raise ValidationError("line %d: %s" % (ln, exc)) from exc
        if v in vertex_labels:
            raise ValidationError("line %d: duplicate label for vertex %d" % (ln, v))
        vertex_labels[v] = x
    graph = Graph(p, edges)
    return TopsnutGpw(graph, Labelling(vertex_labels, edge_labels, rule))
