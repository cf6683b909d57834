"""Proper colorings, Kempe changes and classes, Klein four-group edge
coloring and the mod-3 graphical group law."""

from dataclasses import dataclass

from .errors import CapacityError, PreconditionError
from .kernels import coloring_search
from .labellings import SearchBudget, SearchResult

KEMPE_P_CAP = 10
KEMPE_K_CAP = 4

# color index <-> Klein four-group element, fixed table
KLEIN_ELEMENTS = {1: (0, 0), 2: (0, 1), 3: (1, 0), 4: (1, 1)}
KLEIN_EDGE_COLOR = {(0, 1): 1, (1, 0): 2, (1, 1): 3}


@dataclass(frozen=True)
class VertexColoring:
    """Proper vertex coloring with palette 1..k."""

    colors: dict
    k: int

    def __post_init__(self):
        for v, c in self.colors.items():
            if not (1 <= c <= self.k):
                raise PreconditionError("color %r of vertex %r outside 1..%d" % (c, v, self.k))

    def is_proper_on(self, graph):
        return all(self.colors[u] != self.colors[v] for u, v in graph.edges)

    def as_tuple(self, p):
        return tuple(self.colors[v] for v in range(p))


@dataclass(frozen=True)
class EdgeColoring3:
    """Edge coloring with palette {1,2,3}; properness checked on demand."""

    colors: dict

    def __post_init__(self):
        fixed = {}
        for e, c in self.colors.items():
            if c not in (1, 2, 3):
                raise PreconditionError("edge color %r outside {1,2,3}" % (c,))
            u, v = e
            fixed[(u, v) if u < v else (v, u)] = c
        object.__setattr__(self, "colors", fixed)

    def is_proper_on(self, graph):
        for v in graph.vertices():
            seen = set()
            for u in graph.neighbors(v):
                c = self.colors[(u, v) if u < v else (v, u)]
                if c in seen:
                    return False
                seen.add(c)
        return True


@dataclass(frozen=True)
class Mod3EdgeLabelling:
    """Total edge labelling over representatives {1,2,3} (0 == 3 mod 3)."""

    labels: dict

    def __post_init__(self):
        fixed = {}
        for e, c in self.labels.items():
            if c not in (1, 2, 3):
                raise PreconditionError("mod-3 label %r outside {1,2,3}" % (c,))
            u, v = e
            fixed[(u, v) if u < v else (v, u)] = c
        object.__setattr__(self, "labels", fixed)


def search_colorings(graph, k, budget=SearchBudget()):
    """All proper k-colorings in lexicographic order (vertex 0 slowest)."""
    raw, complete = coloring_search(graph.p, graph.edges, k,
                                    budget.max_solutions, budget.node_limit)
    out = tuple(VertexColoring({v: t[v] for v in range(graph.p)}, k) for t in raw)
    return SearchResult(out, complete)


def kempe_change(graph, coloring, a, b, seed):
    """Swap colors a and b on seed's component of the {a,b}-induced subgraph."""
    if a == b:
        raise PreconditionError("kempe change needs two distinct colors")
    colors = dict(coloring.colors)
    if colors.get(seed) not in (a, b):
        raise PreconditionError("seed vertex %r is not colored %r or %r" % (seed, a, b))
    component = {seed}
    stack = [seed]
    while stack:
        v = stack.pop()
        for u in graph.neighbors(v):
            if u not in component and colors[u] in (a, b):
                component.add(u)
                stack.append(u)
    for v in component:
        colors[v] = a if colors[v] == b else b
    return VertexColoring(colors, coloring.k)


@dataclass(frozen=True)
class KempePartition:
    """Kempe-equivalence classes of all proper k-colorings."""

    blocks: tuple
    is_kempe_graph: bool

    @property
    def coloring_count(self):
        return sum(len(b) for b in self.blocks)


def kempe_classes(graph, k, p_cap=KEMPE_P_CAP, k_cap=KEMPE_K_CAP):
    """Partition all proper k-colorings into Kempe-equivalence classes.

    Breadth-first closure over every (color pair, component) swap; blocks are
    ordered by their lexicographically smallest member.
    """
    if graph.p > p_cap or k > k_cap:
        raise CapacityError("kempe enumeration capped at p<=%d, k<=%d" % (p_cap, k_cap))
    all_colorings = search_colorings(graph, k).labellings
    tuples = [c.as_tuple(graph.p) for c in all_colorings]
    index = {t: i for i, t in enumerate(tuples)}
    assigned = [-1] * len(tuples)
    blocks = []
    for start, t in enumerate(tuples):
        if assigned[start] != -1:
            continue
        block_id = len(blocks)
        members = []
        queue = [start]
        assigned[start] = block_id
        while queue:
            i = queue.pop()
            members.append(tuples[i])
            base = VertexColoring({v: tuples[i][v] for v in range(graph.p)}, k)
            for a in range(1, k + 1):
                for b in range(a + 1, k + 1):
                    seen = set()
                    for seed in range(graph.p):
                        if tuples[i][seed] not in (a, b) or seed in seen:
                            continue
                        swapped = kempe_change(graph, base, a, b, seed)
                        # remember the whole component so each swap runs once
                        for v in range(graph.p):
                            if swapped.colors[v] != tuples[i][v]:
                                seen.add(v)
                        t2 = swapped.as_tuple(graph.p)
                        j = index[t2]
                        if assigned[j] == -1:
                            assigned[j] = block_id
                            queue.append(j)
        members.sort()
        blocks.append(tuple(members))
    blocks.sort(key=lambda b: b[0])
    return KempePartition(tuple(blocks), is_kempe_graph=len(blocks) == 1)


def klein_edge_coloring(graph, coloring):
    """Edge coloring from a proper 4-coloring via the Klein four-group.

    Colors 1..4 are identified with (0,0),(0,1),(1,0),(1,1); an edge gets
    the group sum of its endpoint elements, which is never the identity on a
    properly colored graph.  On a 3-regular graph arising from a 4-colored
    triangulation this is a proper 3-edge-coloring.
    """
    if coloring.k != 4:
        raise PreconditionError("klein edge coloring needs a 4-coloring")
    if not coloring.is_proper_on(graph):
        raise PreconditionError("coloring is not proper")
    out = {}
    for u, v in graph.edges:
        eu = KLEIN_ELEMENTS[coloring.colors[u]]
        ev = KLEIN_ELEMENTS[coloring.colors[v]]
        s = (eu[0] ^ ev[0], eu[1] ^ ev[1])
        out[(u, v)] = KLEIN_EDGE_COLOR[s]
    return EdgeColoring3(out)


def _rep3(x):
    return (x - 1) % 3 + 1


def shift_mod3(h):
    """Add one to every edge label under the {1,2,3} representatives."""
    return Mod3EdgeLabelling({e: _rep3(x + 1) for e, x in h.labels.items()})


def verify_mod3_group(h1, h2, h3):
    """Check the additive group law over all 27 index triples.

    Requires h2 = shift(h1) and h3 = shift(h2) on a common edge set; the law
    is f_i(uv) + f_j(uv) - f_k(uv) == f_{i+j-k mod 3}(uv) with 0 == 3.
    """
    if set(h1.labels) != set(h2.labels) or set(h1.labels) != set(h3.labels):
        raise PreconditionError("mismatched edge sets")
    if shift_mod3(h1).labels != h2.labels or shift_mod3(h2).labels != h3.labels:
        raise PreconditionError("h2, h3 must be successive shifts of h1")
    fs = {1: h1.labels, 2: h2.labels, 3: h3.labels}
    for e in h1.labels:
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                for k in (1, 2, 3):
                    left = _rep3(fs[i][e] + fs[j][e] - fs[k][e])
                    right = fs[_rep3(i + j - k)][e]
                    if left != right:
                        return False
    return True
