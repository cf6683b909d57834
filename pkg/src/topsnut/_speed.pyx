# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled search kernels.

Same algorithms and orderings as ``topsnut._pure``; the test suite asserts
byte-identical output from both backends.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

BACKEND_NAME = "c"

MODE_GRACEFUL = 0
MODE_ODD = 1
MODE_TWIN = 2


cdef struct LS:
    int n
    int max_label
    bint odd_only
    long long nodes
    long long node_limit
    long long max_solutions
    bint truncated
    int* order
    int* labels
    char* used_label
    char* used_diff
    int* earlier_flat
    int* earlier_off


cdef void _ls_rec(LS* s, int i, list solutions):
    cdef int v, x, u, d, idx, start, end, fail_at
    cdef bint ok
    if s.truncated:
        return
    if i == s.n:
        solutions.append(tuple([s.labels[idx] for idx in range(s.n)]))
        if s.max_solutions and len(solutions) >= s.max_solutions:
            s.truncated = True
        return
    v = s.order[i]
    start = s.earlier_off[i]
    end = s.earlier_off[i + 1]
    for x in range(s.max_label + 1):
        if s.used_label[x]:
            continue
        s.nodes += 1
        if s.node_limit and s.nodes > s.node_limit:
            s.truncated = True
            return
        ok = True
        fail_at = end
        for idx in range(start, end):
            u = s.earlier_flat[idx]
            d = x - s.labels[u]
            if d < 0:
                d = -d
            if d == 0 or d > s.max_label or s.used_diff[d] or (s.odd_only and d % 2 == 0):
                ok = False
                fail_at = idx
                break
            s.used_diff[d] = 1
        if ok:
            s.labels[v] = x
            s.used_label[x] = 1
            _ls_rec(s, i + 1, solutions)
            s.used_label[x] = 0
            s.labels[v] = -1
        for idx in range(start, fail_at):
            u = s.earlier_flat[idx]
            d = x - s.labels[u]
            if d < 0:
                d = -d
            s.used_diff[d] = 0
        if s.truncated:
            return


def label_search(n, edges, mode, max_solutions=0, node_limit=0):
    """See ``topsnut._pure.label_search``."""
    cdef int q = len(edges)
    if q == 0:
        raise ValueError("label search needs at least one edge")
    cdef int max_label
    cdef bint odd_only
    if mode == MODE_GRACEFUL:
        max_label = q
        odd_only = 0
    elif mode == MODE_ODD:
        max_label = 2 * q - 1
        odd_only = 1
    elif mode == MODE_TWIN:
        max_label = 2 * q
        odd_only = 1
    else:
        raise ValueError("unknown mode %r" % (mode,))

    cdef int nn = n
    deg = [0] * nn
    adj = [[] for _ in range(nn)]
    cdef int u, v, i
    for e in edges:
        u = e[0]
        v = e[1]
        deg[u] += 1
        deg[v] += 1
        adj[u].append(v)
        adj[v].append(u)
    order_py = sorted(range(nn), key=lambda w: (-deg[w], w))
    pos = [0] * nn
    for i in range(nn):
        pos[order_py[i]] = i
    earlier = [sorted(u for u in adj[order_py[i]] if pos[u] < i) for i in range(nn)]

    cdef LS s
    s.n = nn
    s.max_label = max_label
    s.odd_only = odd_only
    s.nodes = 0
    s.node_limit = node_limit
    s.max_solutions = max_solutions
    s.truncated = 0
    s.order = <int*> malloc(nn * sizeof(int))
    s.labels = <int*> malloc(nn * sizeof(int))
    s.used_label = <char*> malloc((max_label + 1) * sizeof(char))
    s.used_diff = <char*> malloc((max_label + 1) * sizeof(char))
    cdef int total = 0
    for i in range(nn):
        total += len(earlier[i])
    s.earlier_flat = <int*> malloc((total if total else 1) * sizeof(int))
    s.earlier_off = <int*> malloc((nn + 1) * sizeof(int))
    cdef int k = 0
    for i in range(nn):
        s.order[i] = order_py[i]
        s.labels[i] = -1
        s.earlier_off[i] = k
        for u in earlier[i]:
            s.earlier_flat[k] = u
            k += 1
    s.earlier_off[nn] = k
    for i in range(max_label + 1):
        s.used_label[i] = 0
        s.used_diff[i] = 0

    solutions = []
    try:
        _ls_rec(&s, 0, solutions)
        return solutions, not s.truncated
    finally:
        free(s.order)
        free(s.labels)
        free(s.used_label)
        free(s.used_diff)
        free(s.earlier_flat)
        free(s.earlier_off)


cdef struct CS:
    int n
    int k
    long long nodes
    long long node_limit
    long long max_solutions
    bint truncated
    int* colors
    int* adj_flat
    int* adj_off


cdef void _cs_rec(CS* s, int v, list solutions):
    cdef int c, u, idx
    cdef bint conflict
    if s.truncated:
        return
    if v == s.n:
        solutions.append(tuple([s.colors[idx] for idx in range(s.n)]))
        if s.max_solutions and len(solutions) >= s.max_solutions:
            s.truncated = True
        return
    for c in range(1, s.k + 1):
        s.nodes += 1
        if s.node_limit and s.nodes > s.node_limit:
            s.truncated = True
            return
        conflict = False
        for idx in range(s.adj_off[v], s.adj_off[v + 1]):
            if s.colors[s.adj_flat[idx]] == c:
                conflict = True
                break
        if not conflict:
            s.colors[v] = c
            _cs_rec(s, v + 1, solutions)
            s.colors[v] = 0
        if s.truncated:
            return


def coloring_search(n, edges, k, max_solutions=0, node_limit=0):
    """See ``topsnut._pure.coloring_search``."""
    if k < 1:
        raise ValueError("palette size must be >= 1")
    cdef int nn = n
    adj_earlier = [[] for _ in range(nn)]
    cdef int u, v, a, b, i
    for e in edges:
        u = e[0]
        v = e[1]
        a = u if u > v else v
        b = v if u > v else u
        adj_earlier[a].append(b)
    for lst in adj_earlier:
        lst.sort()

    cdef CS s
    s.n = nn
    s.k = k
    s.nodes = 0
    s.node_limit = node_limit
    s.max_solutions = max_solutions
    s.truncated = 0
    s.colors = <int*> malloc((nn if nn else 1) * sizeof(int))
    cdef int total = 0
    for i in range(nn):
        total += len(adj_earlier[i])
    s.adj_flat = <int*> malloc((total if total else 1) * sizeof(int))
    s.adj_off = <int*> malloc((nn + 1) * sizeof(int))
    cdef int kk = 0
    for i in range(nn):
        s.colors[i] = 0
        s.adj_off[i] = kk
        for u in adj_earlier[i]:
            s.adj_flat[kk] = u
            kk += 1
    s.adj_off[nn] = kk

    solutions = []
    try:
        _cs_rec(&s, 0, solutions)
        return solutions, not s.truncated
    finally:
        free(s.colors)
        free(s.adj_flat)
        free(s.adj_off)


cdef struct CF:
    int n
    int total_len
    int* code      # n*n matrix
    int* vlabels
    int* perm
    char* in_perm
    int* best
    bint best_set
    int* cand
    int* rows      # n rows * (n+1) scratch
    int* row_v
    int* row_idx


cdef int _seq_cmp(int* a, int* b, int m):
    cdef int t
    for t in range(m):
        if a[t] < b[t]:
            return -1
        if a[t] > b[t]:
            return 1
    return 0


cdef void _cf_rec(CF* s, int depth, int cand_len):
    cdef int i, v, t, m, rowlen, nrows, j, pos, cmp_res
    if depth == s.n:
        if not s.best_set or _seq_cmp(s.cand, s.best, s.total_len) < 0:
            memcpy(s.best, s.cand, s.total_len * sizeof(int))
            s.best_set = True
        return
    rowlen = depth + 1
    nrows = 0
    cdef int* row
    for v in range(s.n):
        if s.in_perm[v]:
            continue
        row = s.rows + nrows * (s.n + 1)
        row[0] = s.vlabels[v]
        for i in range(depth):
            row[1 + i] = s.code[v * s.n + s.perm[i]]
        s.row_v[nrows] = v
        nrows += 1
    # stable insertion sort on (row, v), ascending
    for i in range(nrows):
        s.row_idx[i] = i
    for i in range(1, nrows):
        j = i
        while j > 0:
            cmp_res = _seq_cmp(s.rows + s.row_idx[j] * (s.n + 1),
                               s.rows + s.row_idx[j - 1] * (s.n + 1), rowlen)
            if cmp_res < 0 or (cmp_res == 0 and s.row_v[s.row_idx[j]] < s.row_v[s.row_idx[j - 1]]):
                s.row_idx[j], s.row_idx[j - 1] = s.row_idx[j - 1], s.row_idx[j]
                j -= 1
            else:
                break
    # rows scratch is reused by deeper levels, so copy the sorted candidate
    # rows (and owners) onto the stack-side buffers before recursing
    cdef int* sorted_rows = <int*> malloc(nrows * (s.n + 1) * sizeof(int))
    cdef int* sorted_v = <int*> malloc((nrows if nrows else 1) * sizeof(int))
    for i in range(nrows):
        memcpy(sorted_rows + i * (s.n + 1), s.rows + s.row_idx[i] * (s.n + 1),
               rowlen * sizeof(int))
        sorted_v[i] = s.row_v[s.row_idx[i]]
    try:
        for i in range(nrows):
            row = sorted_rows + i * (s.n + 1)
            memcpy(s.cand + cand_len, row, rowlen * sizeof(int))
            if s.best_set:
                if _seq_cmp(s.cand, s.best, cand_len + rowlen) > 0:
                    break
            v = sorted_v[i]
            s.perm[depth] = v
            s.in_perm[v] = 1
            _cf_rec(s, depth + 1, cand_len + rowlen)
            s.in_perm[v] = 0
    finally:
        free(sorted_rows)
        free(sorted_v)


def canonical_form(n, vlabels, edge_codes):
    """See ``topsnut._pure.canonical_form``."""
    cdef int nn = n
    if nn == 0:
        return []
    cdef CF s
    s.n = nn
    s.total_len = nn + nn * (nn - 1) // 2
    s.code = <int*> malloc(nn * nn * sizeof(int))
    s.vlabels = <int*> malloc(nn * sizeof(int))
    s.perm = <int*> malloc(nn * sizeof(int))
    s.in_perm = <char*> malloc(nn * sizeof(char))
    s.best = <int*> malloc(s.total_len * sizeof(int))
    s.cand = <int*> malloc(s.total_len * sizeof(int))
    s.rows = <int*> malloc(nn * (nn + 1) * sizeof(int))
    s.row_v = <int*> malloc(nn * sizeof(int))
    s.row_idx = <int*> malloc(nn * sizeof(int))
    s.best_set = False
    cdef int i, j, u, v, c
    for i in range(nn):
        s.vlabels[i] = vlabels[i]
        s.in_perm[i] = 0
        for j in range(nn):
            s.code[i * nn + j] = -2
    for e, c_obj in edge_codes.items():
        u = e[0]
        v = e[1]
        c = c_obj
        s.code[u * nn + v] = c
        s.code[v * nn + u] = c
    try:
        _cf_rec(&s, 0, 0)
        return [s.best[i] for i in range(s.total_len)]
    finally:
        free(s.code)
        free(s.vlabels)
        free(s.perm)
        free(s.in_perm)
        free(s.best)
        free(s.cand)
        free(s.rows)
        free(s.row_v)
        free(s.row_idx)
