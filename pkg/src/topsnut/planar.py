"""Planar embeddings and surgery on (maximal) planar graphs.

An embedding is a clockwise rotation system.  Faces are traced with the
successor rule: the dart (u,v) is followed by (v,w) where w comes right
after u in the rotation of v.  Every constructor and operation re-traces
faces and checks Euler's formula p - q + f = 2, so genus errors cannot slip
through.  No general planarity test exists here: embeddings are made by the
seed constructors and kept planar by construction.
"""

from itertools import permutations

from .colorings import VertexColoring
from .errors import (
    DegenerateFlipError,
    EmbeddingError,
    FlipParallelError,
    GluingError,
    NotSubdivisibleError,
    PreconditionError,
)
from .graphs import Graph, Labelling, TopsnutGpw, canonical_code, edge_key, is_connected


def _canonical_cycle(cycle):
    """Min-first rotation of a cyclic vertex sequence (orientation kept)."""
    m = min(cycle)
    best = None
    for i, v in enumerate(cycle):
        if v == m:
            rot = cycle[i:] + cycle[:i]
            if best is None or rot < best:
                best = rot
    return tuple(best)


def _cycle_darts(cycle):
    return [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def trace_faces(p, rotation):
    """Orbits of the dart successor map, as canonical vertex cycles."""
    index = [{u: i for i, u in enumerate(rotation[v])} for v in range(p)]
    seen = set()
    faces = []
    for a in range(p):
        for b in rotation[a]:
            if (a, b) in seen:
                continue
            cycle = []
            u, v = a, b
            while (u, v) not in seen:
                seen.add((u, v))
                cycle.append(u)
                rot = rotation[v]
                u, v = v, rot[(index[v][u] + 1) % len(rot)]
            if (u, v) != (a, b):
                raise EmbeddingError("dart orbit does not close at (%d,%d)" % (a, b))
            faces.append(_canonical_cycle(cycle))
    return tuple(faces)


class PlanarEmbedding:
    """Graph + rotation system + designated outer face, genus-0 checked."""

    __slots__ = ("graph", "rotation", "outer", "faces")

    def __init__(self, graph, rotation, outer):
        if not is_connected(graph):
            raise EmbeddingError("embeddings require a connected graph")
        if len(rotation) != graph.p:
            raise EmbeddingError("rotation must list every vertex")
        for v in range(graph.p):
            if sorted(rotation[v]) != list(graph.neighbors(v)):
                raise EmbeddingError("rotation of vertex %d does not match adjacency" % v)
        self.graph = graph
        self.rotation = tuple(tuple(r) for r in rotation)
        self.faces = trace_faces(graph.p, self.rotation)
        if graph.p - graph.q + len(self.faces) != 2:
            raise EmbeddingError(
                "not a planar (genus-0) embedding: p=%d q=%d f=%d"
                % (graph.p, graph.q, len(self.faces))
            )
        outer = tuple(outer)
        if _canonical_cycle(list(outer)) not in self.faces:
            raise EmbeddingError("outer face %r is not a traced face" % (outer,))
        self.outer = outer

    @property
    def p(self):
        return self.graph.p

    @property
    def q(self):
        return self.graph.q

    def inner_faces(self):
        out_c = _canonical_cycle(list(self.outer))
        return tuple(f for f in self.faces if f != out_c)

    def is_maximal_planar(self):
        return self.q == 3 * self.p - 6 and all(len(f) == 3 for f in self.faces)

    def __repr__(self):
        return "PlanarEmbedding(p=%d, q=%d, f=%d)" % (self.p, self.q, len(self.faces))


def embedding_from_faces(p, faces, outer):
    """Rebuild the rotation system from oriented face cycles.

    Every dart must occur exactly once over all faces; the successor pairs
    of each vertex must close into a single rotation cycle.
    """
    succ = [dict() for _ in range(p)]
    for face in faces:
        darts = _cycle_darts(list(face))
        for (a, b), (_, c) in zip(darts, darts[1:] + darts[:1]):
            if a in succ[b]:
                raise EmbeddingError("dart (%d,%d) appears in two faces" % (a, b))
            succ[b][a] = c
    rotation = []
    for v in range(p):
        nbrs = succ[v]
        if not nbrs:
            raise EmbeddingError("vertex %d has no incident dart" % v)
        start = min(nbrs)
        cycle = [start]
        cur = nbrs[start]
        while cur != start:
            if cur not in nbrs or len(cycle) > len(nbrs):
                raise EmbeddingError("rotation of vertex %d does not close" % v)
            cycle.append(cur)
            cur = nbrs[cur]
        if len(cycle) != len(nbrs):
            raise EmbeddingError("rotation of vertex %d splits into several cycles" % v)
        rotation.append(tuple(cycle))
    edges = set()
    for v in range(p):
        for u in rotation[v]:
            edges.add(edge_key(u, v))
    return PlanarEmbedding(Graph(p, sorted(edges)), rotation, outer)


def _face_with_dart(embedding, dart):
    for face in embedding.faces:
        if dart in _cycle_darts(list(face)):
            return face
    raise EmbeddingError("no face contains dart %r" % (dart,))


def resolve_face(embedding, ref):
    """A face reference is an index into .faces or a vertex cycle."""
    if isinstance(ref, int):
        try:
            return embedding.faces[ref]
        except IndexError:
            raise PreconditionError("face index %d out of range" % ref) from None
    cand = _canonical_cycle(list(ref))
    if cand in embedding.faces:
        return cand
    rev = _canonical_cycle(list(reversed(list(ref))))
    if rev in embedding.faces:
        return rev
    raise PreconditionError("no face bounded by %r" % (ref,))


# --- seed embeddings --------------------------------------------------------


def k3_embedding():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    return PlanarEmbedding(g, ((1, 2), (2, 0), (0, 1)), (0, 1, 2))


def k4_embedding():
    g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    rotation = ((1, 3, 2), (0, 2, 3), (0, 3, 1), (0, 1, 2))
    return PlanarEmbedding(g, rotation, (0, 1, 2))


def octahedron_embedding():
    # antipodal pairs (0,5), (1,4), (2,3); equator cycle 1-2-4-3
    faces = [
        (0, 1, 2), (0, 2, 4), (0, 4, 3), (0, 3, 1),
        (5, 2, 1), (5, 4, 2), (5, 3, 4), (5, 1, 3),
    ]
    return embedding_from_faces(6, faces, (0, 1, 2))


def embed_triangulation(graph):
    """Embed one of the seeded small triangulations (K3, K4, octahedron).

    Arbitrary planar graphs are out of scope: operations keep planarity by
    construction instead.
    """
    for seed in (k3_embedding, k4_embedding, octahedron_embedding):
        emb = seed()
        if emb.p != graph.p or emb.q != graph.q:
            continue
        target = set(graph.edges)
        for perm in permutations(range(graph.p)):
            if all(edge_key(perm[u], perm[v]) in target for u, v in emb.graph.edges):
                rotation = [None] * graph.p
                for v in range(graph.p):
                    rotation[perm[v]] = tuple(perm[u] for u in emb.rotation[v])
                outer = tuple(perm[v] for v in emb.outer)
                return PlanarEmbedding(graph, rotation, outer)
    raise EmbeddingError("graph is not one of the seeded triangulations")


# --- gluing operations ------------------------------------------------------


def teeoo(G, face, H, twist=0):
    """Overlap H's outer triangle onto an inner triangular face of G.

    H is embedded inside the face; the identification reverses orientation
    (gluing inside flips the boundary sense) and ``twist`` rotates which
    outer corner of H lands on which face corner.
    """
    face = resolve_face(G, face)
    if len(face) != 3:
        raise PreconditionError("target face %r is not a triangle" % (face,))
    if face == _canonical_cycle(list(G.outer)):
        raise PreconditionError("target face must be an inner face")
    if not H.is_maximal_planar():
        raise PreconditionError("TEEoO factor must be maximal planar")
    if len(H.outer) != 3:
        raise PreconditionError("TEEoO factor needs a triangular outer face")

    target = list(reversed(face))
    target = target[twist % 3:] + target[: twist % 3]
    h_outer = list(H.outer)
    phi = {h_outer[t]: target[t] for t in range(3)}
    next_id = G.p
    for v in sorted(set(range(H.p)) - set(h_outer)):
        phi[v] = next_id
        next_id += 1

    new_faces = [f for f in G.faces if f != face]
    h_outer_c = _canonical_cycle(h_outer)
    for f in H.faces:
        if f == h_outer_c:
            continue
        new_faces.append(_canonical_cycle([phi[v] for v in f]))
    try:
        return embedding_from_faces(next_id, new_faces, G.outer)
    except EmbeddingError as exc:
        raise GluingError("TEEoO gluing failed: %s" % exc) from exc


def teeoo_colored(G_colored, face, H_colored, twist=0):
    """TEEoO carrying proper 4-colorings: the factor's palette is permuted to
    agree with the object's colors on the glued triangle, then unioned."""
    G, cG = G_colored
    H, cH = H_colored
    face = resolve_face(G, face)
    result = teeoo(G, face, H, twist)
    target = list(reversed(list(face)))
    target = target[twist % 3:] + target[: twist % 3]
    h_outer = list(H.outer)
    # corner correspondence induces a palette permutation (3 corners have 3
    # distinct colors on both sides, the 4th color maps to the 4th)
    perm = {}
    for t in range(3):
        perm[cH.colors[h_outer[t]]] = cG.colors[target[t]]
    if len(set(perm.values())) != 3:
        raise GluingError("glued triangle colors do not form a bijection")
    missing_src = ({1, 2, 3, 4} - set(perm)).pop()
    missing_dst = ({1, 2, 3, 4} - set(perm.values())).pop()
    perm[missing_src] = missing_dst

    phi = {h_outer[t]: target[t] for t in range(3)}
    next_id = G.p
    for v in sorted(set(range(H.p)) - set(h_outer)):
        phi[v] = next_id
        next_id += 1
    colors = dict(cG.colors)
    for v in range(H.p):
        colors[phi[v]] = perm[cH.colors[v]]
    merged = VertexColoring(colors, 4)
    if not merged.is_proper_on(result.graph):
        raise GluingError("merged coloring is not proper")
    return result, merged


def recursive_mpg(n, face_choices=None, policy="newest"):
    """n-step recursive maximal planar graph: K3 root, each step overlaps a
    K4 into a chosen inner face (p = n+3, q = 3n+3)."""
    if n < 0:
        raise PreconditionError("need n >= 0")
    emb = k3_embedding()
    for step in range(n):
        if face_choices is not None:
            ref = face_choices[step]
            face = resolve_face(emb, ref)
            if face == _canonical_cycle(list(emb.outer)):
                raise PreconditionError("face choice %d is the outer face" % step)
        else:
            inner = emb.inner_faces()
            face = inner[-1] if policy == "newest" else inner[0]
        emb = teeoo(emb, face, k4_embedding())
    return emb


def edge_identify(tl, tr, tb):
    """Glue three outer-triangle parts around a shared center vertex.

    Parts are (PlanarEmbedding, VertexColoring) pairs with triangular outer
    faces read as: Tl = (i,j,k), Tr = (j,i,l), Tb = (k,j,l).  The shared
    edge ij is identified first, then jk and jl; the result keeps a
    triangular outer face (i,k,l) and the union coloring.
    """
    parts = [tl, tr, tb]
    for emb, col in parts:
        if len(emb.outer) != 3:
            raise PreconditionError("every part needs a triangular outer face")
        if col.k != 4 or not col.is_proper_on(emb.graph):
            raise PreconditionError("every part needs a proper 4-coloring")
    (el, cl), (er, cr), (eb, cb) = parts
    a0, a1, a2 = el.outer
    b0, b1, b2 = er.outer
    c0, c1, c2 = eb.outer
    # role ids: i=0, j=1, k=2, l=3
    maps = [
        {a0: 0, a1: 1, a2: 2},
        {b0: 1, b1: 0, b2: 3},
        {c0: 2, c1: 1, c2: 3},
    ]
    next_id = 4
    for (emb, _), m in zip(parts, maps):
        for v in sorted(set(range(emb.p)) - set(m)):
            m[v] = next_id
            next_id += 1

    colors = {}
    for (emb, col), m in zip(parts, maps):
        for v in range(emb.p):
            c = col.colors[v]
            if colors.setdefault(m[v], c) != c:
                raise GluingError("colorings disagree on an identified vertex")

    new_faces = []
    for (emb, _), m in zip(parts, maps):
        for f in emb.inner_faces():
            new_faces.append(_canonical_cycle([m[v] for v in f]))
    # the missing darts close into the new outer triangle, traced (i,l,k)
    try:
        merged = embedding_from_faces(next_id, new_faces + [(0, 3, 2)], (0, 3, 2))
    except EmbeddingError as exc:
        raise GluingError("edge identification failed: %s" % exc) from exc
    coloring = VertexColoring(colors, 4)
    if not coloring.is_proper_on(merged.graph):
        raise GluingError("merged coloring is not proper")
    return merged, coloring


def _mirror(embedding):
    rotation = tuple(tuple(reversed(r)) for r in embedding.rotation)
    return PlanarEmbedding(embedding.graph, rotation, tuple(reversed(embedding.outer)))


def edge_subdivide(G_colored, cut):
    """Inverse of :func:`edge_identify`: split along three edges sharing a
    center vertex whose far ends are the outer corners.

    Every part must keep at least one vertex beyond its outer triangle,
    otherwise the graph is not subdivisible.
    """
    G, coloring = G_colored
    if len(G.outer) != 3:
        raise PreconditionError("subdivision needs a triangular outer face")
    cut = [edge_key(*e) for e in cut]
    if len(set(cut)) != 3:
        raise NotSubdivisibleError("cut must name three distinct edges")
    eset = set(G.graph.edges)
    if any(e not in eset for e in cut):
        raise NotSubdivisibleError("cut edge missing from the graph")
    counts = {}
    for u, v in cut:
        counts[u] = counts.get(u, 0) + 1
        counts[v] = counts.get(v, 0) + 1
    centers = [v for v, c in counts.items() if c == 3]
    if len(centers) != 1:
        raise NotSubdivisibleError("cut edges do not share a single center vertex")
    j = centers[0]
    corners = [v for e in cut for v in e if v != j]
    if sorted(corners) != sorted(G.outer):
        raise NotSubdivisibleError("cut ends must be the outer corners")
    i, k, l = G.outer

    inner = list(G.inner_faces())
    edge_faces = {}
    for idx, f in enumerate(inner):
        for a, b in _cycle_darts(list(f)):
            edge_faces.setdefault(edge_key(a, b), []).append(idx)
    cut_set = set(cut)
    comp = [-1] * len(inner)
    n_comp = 0
    for s in range(len(inner)):
        if comp[s] != -1:
            continue
        stack = [s]
        comp[s] = n_comp
        while stack:
            f = stack.pop()
            for a, b in _cycle_darts(list(inner[f])):
                e = edge_key(a, b)
                if e in cut_set:
                    continue
                for g in edge_faces.get(e, ()):
                    if comp[g] == -1:
                        comp[g] = n_comp
                        stack.append(g)
        n_comp += 1
    if n_comp != 3:
        raise NotSubdivisibleError("cut separates into %d parts, need 3" % n_comp)

    role_outers = {
        frozenset((edge_key(i, j), edge_key(j, k))): ("l", (i, j, k)),
        frozenset((edge_key(j, i), edge_key(j, l))): ("r", (j, i, l)),
        frozenset((edge_key(k, j), edge_key(j, l))): ("b", (k, j, l)),
    }
    parts = {}
    for c in range(3):
        faces_c = [inner[idx] for idx in range(len(inner)) if comp[idx] == c]
        verts = sorted({v for f in faces_c for v in f})
        touching = frozenset(e for e in cut_set if set(e) <= set(verts))
        if touching not in role_outers:
            raise NotSubdivisibleError("a part does not border exactly two cut edges")
        role, outer_roles = role_outers[touching]
        if len(verts) < 4:
            raise NotSubdivisibleError("a part has no interior vertex")
        remap = {v: t for t, v in enumerate(verts)}
        part_faces = [tuple(remap[v] for v in f) for f in faces_c]
        outer_t = tuple(remap[v] for v in outer_roles)
        try:
            emb = embedding_from_faces(len(verts), part_faces + [outer_t], outer_t)
        except EmbeddingError:
            emb = _mirror(embedding_from_faces(
                len(verts), part_faces + [tuple(reversed(outer_t))], tuple(reversed(outer_t))))
            emb = PlanarEmbedding(emb.graph, emb.rotation, outer_t)
        cols = VertexColoring({remap[v]: coloring.colors[v] for v in verts}, 4)
        parts[role] = (emb, cols)
    return parts["l"], parts["r"], parts["b"]


def single_edge_paste(G, eG, H, eH):
    """Identify an outer edge of H onto an outer edge of G (planarity kept;
    p = pG + pH - 2, q = qG + qH - 1)."""
    u, v = edge_key(*eG)
    outer_darts = _cycle_darts(list(G.outer))
    if (u, v) in outer_darts:
        pass
    elif (v, u) in outer_darts:
        u, v = v, u
    else:
        raise PreconditionError("edge %r is not on the outer face of the object" % (eG,))
    x, y = edge_key(*eH)
    h_darts = _cycle_darts(list(H.outer))
    if (x, y) in h_darts:
        pass
    elif (y, x) in h_darts:
        x, y = y, x
    else:
        raise PreconditionError("edge %r is not on the outer face of the factor" % (eH,))

    phi = {x: v, y: u}
    next_id = G.p
    for w in sorted(set(range(H.p)) - {x, y}):
        phi[w] = next_id
        next_id += 1

    g_cycle = list(G.outer)
    g_cycle = g_cycle[g_cycle.index(v):] + g_cycle[: g_cycle.index(v)]  # v .. u
    h_cycle = list(H.outer)
    h_cycle = h_cycle[h_cycle.index(y):] + h_cycle[: h_cycle.index(y)]  # y .. x
    spliced = g_cycle + [phi[w] for w in h_cycle[1:-1]]

    new_faces = list(G.inner_faces())
    for f in H.inner_faces():
        new_faces.append(_canonical_cycle([phi[w] for w in f]))
    new_faces.append(_canonical_cycle(spliced))
    try:
        return embedding_from_faces(next_id, new_faces, tuple(spliced))
    except EmbeddingError as exc:
        raise GluingError("single-edge paste failed: %s" % exc) from exc


# --- vertex surgery ---------------------------------------------------------


def _replace_rotation_entry(rot, old, new_seq):
    out = []
    for w in rot:
        if w == old:
            out.extend(new_seq)
        else:
            out.append(w)
    return tuple(out)


def _rebuild(rotation, p, anchor):
    """Assemble an embedding from raw rotations and relocate the outer face
    to the traced face containing the anchor dart."""
    edges = set()
    for v in range(p):
        for u in rotation[v]:
            edges.add(edge_key(u, v))
    graph = Graph(p, sorted(edges))
    faces = trace_faces(p, rotation)
    outer = None
    for f in faces:
        if anchor in _cycle_darts(list(f)):
            outer = f
            break
    if outer is None:
        raise EmbeddingError("anchor dart %r lost during surgery" % (anchor,))
    return PlanarEmbedding(graph, rotation, outer)


def _outer_anchor(embedding, avoid):
    for dart in _cycle_darts(list(embedding.outer)):
        if avoid not in dart:
            return dart
    raise PreconditionError("outer face has no dart avoiding vertex %d" % avoid)


def split_vertex(G, w, j):
    """Split w into an edge w-w'' along rotation index j (1-based).

    w keeps neighbours w_1..w_j, the new vertex takes w_j..w_d; both gain
    the connecting edge.  p grows by 1, q by 2.
    """
    d = G.graph.degree(w)
    if d < 2:
        raise PreconditionError("split needs degree >= 2")
    if not (1 <= j <= d):
        raise PreconditionError("split index %d outside 1..%d" % (j, d))
    rot_w = G.rotation[w]
    W = G.p
    wj = rot_w[j - 1]
    rotation = list(G.rotation)
    rotation[w] = rot_w[:j] + (W,)
    rotation.append(rot_w[j - 1:] + (w,))
    rotation[wj] = _replace_rotation_entry(rotation[wj], w, (W, w))
    for wi in rot_w[j:]:
        rotation[wi] = _replace_rotation_entry(rotation[wi], w, (W,))
    anchor = _outer_anchor(G, w) if w in G.outer else _cycle_darts(list(G.outer))[0]
    return _rebuild(tuple(rotation), G.p + 1, anchor)


def offspring_vertex(G, w, j):
    """Give w two children along rotation index j (1-based, j != 1).

    w keeps only w_1 and w_j plus edges to both children; the first child
    fans w_1..w_j, the second w_j..w_d.  p grows by 2, q by 5.
    """
    d = G.graph.degree(w)
    if d < 2:
        raise PreconditionError("offspring needs degree >= 2")
    if j == 1:
        raise PreconditionError("offspring index j=1 is degenerate")
    if not (2 <= j <= d):
        raise PreconditionError("offspring index %d outside 2..%d" % (j, d))
    rot_w = G.rotation[w]
    P1, P2 = G.p, G.p + 1
    wj = rot_w[j - 1]
    w1 = rot_w[0]
    rotation = list(G.rotation)
    rotation[w] = (w1, P1, wj, P2)
    rotation.append((w,) + rot_w[:j])          # P1
    rotation.append((w,) + rot_w[j - 1:])      # P2
    rotation[w1] = _replace_rotation_entry(rotation[w1], w, (P1, w))
    rotation[wj] = _replace_rotation_entry(rotation[wj], w, (P2, w, P1))
    for wi in rot_w[1 : j - 1]:
        rotation[wi] = _replace_rotation_entry(rotation[wi], w, (P1,))
    for wi in rot_w[j:]:
        rotation[wi] = _replace_rotation_entry(rotation[wi], w, (P2,))
    anchor = _outer_anchor(G, w) if w in G.outer else _cycle_darts(list(G.outer))[0]
    return _rebuild(tuple(rotation), G.p + 2, anchor)


# --- flips ------------------------------------------------------------------


def _flip_target(G, uv):
    u, v = edge_key(*uv)
    if not G.graph.has_edge(u, v):
        raise PreconditionError("edge %r not in graph" % (uv,))
    f1 = _face_with_dart(G, (u, v))
    f2 = _face_with_dart(G, (v, u))
    if len(f1) != 3 or len(f2) != 3:
        raise PreconditionError("edge %r does not lie in two triangles" % (uv,))
    c1 = list(f1)
    x = c1[(c1.index(v) + 1) % 3]
    c2 = list(f2)
    y = c2[(c2.index(u) + 1) % 3]
    if x == y:
        raise DegenerateFlipError("both triangles of %r share vertex %d" % (uv, x))
    if G.graph.has_edge(x, y):
        raise FlipParallelError("diagonal (%d,%d) already present" % (x, y))
    return u, v, x, y, f1, f2


def flip_edge(G, uv):
    """Replace edge uv by the opposite diagonal of its two triangles.

    Works on any edge lying in two triangular faces; when the marked outer
    face is one of them, the marker moves onto its replacement.
    """
    u, v, x, y, f1, f2 = _flip_target(G, uv)
    f1n = _canonical_cycle([u, y, x])
    f2n = _canonical_cycle([v, x, y])
    faces = [f for f in G.faces if f not in (f1, f2)] + [f1n, f2n]
    outer_c = _canonical_cycle(list(G.outer))
    if outer_c == f1:
        outer = f1n
    elif outer_c == f2:
        outer = f2n
    else:
        outer = G.outer
    return embedding_from_faces(G.p, faces, outer)


def count_flippable(G):
    """Number of edges whose flip preconditions hold, in a maximal planar
    graph with p >= 5 (the classical bound guarantees at least p - 2)."""
    if not G.is_maximal_planar():
        raise PreconditionError("flippable count is defined on maximal planar graphs")
    if G.p < 5:
        raise PreconditionError("no flippable edges below 5 vertices")
    n = 0
    for e in G.graph.edges:
        try:
            _flip_target(G, e)
        except PreconditionError:
            continue
        n += 1
    return n


# --- embedding text format --------------------------------------------------


def format_embedding_text(embedding, gpw=None):
    from .graphs import format_graph_text

    g = gpw if gpw is not None else TopsnutGpw(embedding.graph, Labelling())
    out = [format_graph_text(g).rstrip("\n")]
    for v in range(embedding.p):
        out.append("%d: %s" % (v, " ".join(str(u) for u in embedding.rotation[v])))
    out.append("outer: %s" % " ".join(str(v) for v in embedding.outer))
    return "\n".join(out) + "\n"


def parse_embedding_text(text):
    from .graphs import parse_graph_text

    graph_lines = []
    rotation = {}
    outer = None
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("outer:"):
            outer = tuple(int(t) for t in stripped.split(":", 1)[1].split())
        elif ":" in stripped and not stripped.startswith("rule:"):
            head, rest = stripped.split(":", 1)
            rotation[int(head)] = tuple(int(t) for t in rest.split())
        else:
            graph_lines.append(stripped)
    gpw = parse_graph_text("\n".join(graph_lines))
    if outer is None:
        raise EmbeddingError("embedding file lacks an outer: line")
    rot = tuple(rotation[v] for v in range(gpw.graph.p))
    return PlanarEmbedding(gpw.graph, rot, outer), gpw


def embedding_gpw_code(embedding, labels=None):
    """Canonical code of the underlying labelled graph (embedding-agnostic),
    used for the round-trip identities."""
    lab = Labelling(dict(labels) if labels else {}, {}, "free")
    return canonical_code(TopsnutGpw(embedding.graph, lab))
