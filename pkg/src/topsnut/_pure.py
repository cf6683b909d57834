"""Pure-Python search kernels.

These three routines are the hot inner loops of the package.  The optional
compiled module ``topsnut._speed`` implements the same functions with the
same vertex orderings, so both backends emit byte-identical results; see
``topsnut.kernels`` for the selection logic and ``benchmarks/`` for the
speed comparison.
"""

BACKEND_NAME = "pure"

MODE_GRACEFUL = 0  # labels in [0,q],    edge diffs exactly {1..q}
MODE_ODD = 1       # labels in [0,2q-1], edge diffs exactly {1,3,..,2q-1}
MODE_TWIN = 2      # labels in [0,2q],   edge diffs exactly {1,3,..,2q-1}


def label_search(n, edges, mode, max_solutions=0, node_limit=0):
    """Backtracking search for vertex labellings with constrained edge diffs.

    Vertices are assigned in order of (descending degree, ascending id);
    candidate labels are tried in ascending order, so the emission order is
    deterministic.  Returns ``(solutions, complete)`` where each solution is
    a label tuple indexed by original vertex id and ``complete`` is False
    when ``max_solutions`` or ``node_limit`` truncated the search.
    """
    q = len(edges)
    if q == 0:
        raise ValueError("label search needs at least one edge")
    if mode == MODE_GRACEFUL:
        max_label = q
        odd_only = False
    elif mode == MODE_ODD:
        max_label = 2 * q - 1
        odd_only = True
    elif mode == MODE_TWIN:
        max_label = 2 * q
        odd_only = True
    else:
        raise ValueError("unknown mode %r" % (mode,))

    deg = [0] * n
    adj = [[] for _ in range(n)]
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        adj[u].append(v)
        adj[v].append(u)

    order = sorted(range(n), key=lambda v: (-deg[v], v))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    # neighbours of order[i] that come earlier in the assignment order
    earlier = [sorted(u for u in adj[v] if pos[u] < i) for i, v in enumerate(order)]

    labels = [-1] * n
    used_label = [False] * (max_label + 1)
    used_diff = [False] * (max_label + 1)
    solutions = []
    nodes = 0
    truncated = False

    def rec(i):
        nonlocal nodes, truncated
        if truncated:
            return
        if i == n:
            solutions.append(tuple(labels))
            if max_solutions and len(solutions) >= max_solutions:
                truncated = True
            return
        v = order[i]
        for x in range(max_label + 1):
            if used_label[x]:
                continue
            nodes += 1
            if node_limit and nodes > node_limit:
                truncated = True
                return
            ok = True
            placed = []
            for u in earlier[i]:
                d = x - labels[u]
                if d < 0:
                    d = -d
                if d == 0 or d > max_label or used_diff[d] or (odd_only and d % 2 == 0):
                    ok = False
                    break
                used_diff[d] = True
                placed.append(d)
            if ok:
                labels[v] = x
                used_label[x] = True
                rec(i + 1)
                used_label[x] = False
                labels[v] = -1
            for d in placed:
                used_diff[d] = False
            if truncated:
                return

    rec(0)
    return solutions, not truncated


def coloring_search(n, edges, k, max_solutions=0, node_limit=0):
    """Enumerate proper k-colorings (palette 1..k) in lexicographic order.

    Vertex 0 varies slowest.  Returns ``(solutions, complete)`` like
    :func:`label_search`.
    """
    if k < 1:
        raise ValueError("palette size must be >= 1")
    adj_earlier = [[] for _ in range(n)]
    for u, v in edges:
        a, b = (u, v) if u > v else (v, u)
        adj_earlier[a].append(b)
    for lst in adj_earlier:
        lst.sort()

    colors = [0] * n
    solutions = []
    nodes = 0
    truncated = False

    def rec(v):
        nonlocal nodes, truncated
        if truncated:
            return
        if v == n:
            solutions.append(tuple(colors))
            if max_solutions and len(solutions) >= max_solutions:
                truncated = True
            return
        for c in range(1, k + 1):
            nodes += 1
            if node_limit and nodes > node_limit:
                truncated = True
                return
            conflict = False
            for u in adj_earlier[v]:
                if colors[u] == c:
                    conflict = True
                    break
            if not conflict:
                colors[v] = c
                rec(v + 1)
                colors[v] = 0
            if truncated:
                return

    rec(0)
    return solutions, not truncated


def canonical_form(n, vlabels, edge_codes):
    """Lexicographically minimal relabelling sequence of a labelled graph.

    ``vlabels[v]`` is the vertex label or -1; ``edge_codes`` maps (u,v) with
    u < v to the edge label (or -1 for a present-but-unlabelled edge);
    missing pairs encode as -2.  The sequence interleaves, for each position
    i of a candidate vertex ordering, its vertex label followed by its edge
    codes toward positions 0..i-1, and the minimum over all orderings is
    returned as a list of ints.  Two labelled graphs are label-preserving
    isomorphic iff their sequences are equal.
    """
    if n == 0:
        return []
    code = [[-2] * n for _ in range(n)]
    for (u, v), c in edge_codes.items():
        code[u][v] = c
        code[v][u] = c

    best = None
    perm = []
    in_perm = [False] * n

    def rec(prefix):
        nonlocal best
        i = len(perm)
        if i == n:
            if best is None or prefix < best:
                best = list(prefix)
            return
        rows = []
        for v in range(n):
            if in_perm[v]:
                continue
            row = [vlabels[v]]
            cv = code[v]
            for u in perm:
                row.append(cv[u])
            rows.append((row, v))
        rows.sort()
        for row, v in rows:
            cand = prefix + row
            if best is not None:
                head = best[: len(cand)]
                if cand > head:
                    break  # rows are sorted: everything after is larger too
            perm.append(v)
            in_perm[v] = True
            rec(cand)
            perm.pop()
            in_perm[v] = False

    rec([])
    return best
