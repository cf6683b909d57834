"""Password-space arithmetic: tree enumeration and counting, reference
count tables, the space formulas and bit-strength reporting.

The reference tables are embedded verbatim, including the printed rooted
tree value for p=6 (2) that disagrees with the recurrence (20); the
lookup functions return the printed numbers, the computed functions compute.
"""

import math
from dataclasses import dataclass

from .errors import CapacityError, DegenerateParamsError, LookupRangeError, PreconditionError
from .graphs import Graph, is_connected

TREE_ENUM_CAP = 16

# number of graphs of order p (Table-1)
GRAPH_COUNTS = {
    6: 156,
    7: 1044,
    8: 12346,
    9: 274668,
    10: 12005168,
    11: 1018997864,
    12: 165091172592,
    13: 50502031367952,
    14: 29054155657235488,
    15: 31426485969804308768,
    16: 64001015704527557894928,
    17: 245935864153532932683719776,
    18: 1787577725145611700547878190848,
    19: 24637809253125004524383007491432768,
    20: 645490122795799841856164638490742749440,
    21: 32220272899808983433502244253755283616097664,
    22: 3070846483094144300637568517187105410586657814272,
    23: 559946939699792080597976380819462179812276348458981632,
    24: 195704906302078447922174862416726256004122075267063365754368,
}

# (free trees t_p, rooted trees T_p) as printed (Table-2); the p=6 rooted
# entry is the table's misprint, see count_rooted_trees
TREE_COUNTS = {
    6: (6, 2),
    7: (11, 48),
    8: (23, 115),
    9: (47, 286),
    10: (106, 719),
    11: (235, 1842),
    12: (551, 4766),
    13: (1301, 12486),
    14: (3159, 32973),
    15: (7741, 87811),
    16: (19320, 235381),
    17: (48629, 634847),
    18: (123867, 1721159),
    19: (317955, 4688676),
    20: (823065, 12826228),
    21: (2144505, 35221832),
    22: (5623756, 97055181),
    23: (14828074, 268282855),
    24: (39299897, 743724984),
    25: (104636890, 2067174645),
    26: (279793450, 5759636510),
}

# (all digraphs, connected digraphs) of order p (Table-3)
DIGRAPH_COUNTS = {
    1: (1, 1),
    2: (3, 2),
    3: (16, 13),
    4: (218, 199),
    5: (9608, 9364),
    6: (1540944, 1530843),
    7: (882033440, 880471142),
    8: (1793359192848, 1792473955306),
}


@dataclass(frozen=True)
class CountTable:
    graph_counts: dict
    tree_counts: dict
    digraph_counts: dict


REFERENCE = CountTable(GRAPH_COUNTS, TREE_COUNTS, DIGRAPH_COUNTS)


def lookup_counts(p, kind):
    """Tabulated reference count, exact big integer."""
    try:
        if kind == "graphs":
            return GRAPH_COUNTS[p]
        if kind == "digraphs":
            return DIGRAPH_COUNTS[p][0]
        if kind == "connected-digraphs":
            return DIGRAPH_COUNTS[p][1]
        if kind == "trees":
            return TREE_COUNTS[p][0]
        if kind == "rooted-trees":
            return TREE_COUNTS[p][1]
    except KeyError:
        raise LookupRangeError("no table row for p=%d, kind=%r" % (p, kind)) from None
    raise LookupRangeError("unknown table kind %r" % (kind,))


# --- rooted and free tree generation ----------------------------------------


def _rooted_level_sequences(p):
    """All canonical rooted-tree level sequences of order p, in the classic
    reverse-lexicographic successor order (path first, star last)."""
    seq = list(range(1, p + 1))
    while True:
        yield tuple(seq)
        idx = None
        for t in range(p - 1, -1, -1):
            if seq[t] > 2:
                idx = t
                break
        if idx is None:
            return
        par = None
        for t in range(idx - 1, -1, -1):
            if seq[t] == seq[idx] - 1:
                par = t
                break
        period = idx - par
        for t in range(idx, p):
            seq[t] = seq[t - period]


def _tree_from_levels(seq):
    """Parent-pointer tree from a level sequence (root has level 1)."""
    parents = {}
    stack = []
    for v, level in enumerate(seq):
        while len(stack) >= level:
            stack.pop()
        if stack:
            parents[v] = stack[-1]
        stack.append(v)
    return parents


def _ahu_code(adj, root, banned=None):
    codes = {}
    order = []
    stack = [(root, banned)]
    while stack:
        v, parent = stack.pop()
        order.append((v, parent))
        for u in adj[v]:
            if u != parent:
                stack.append((u, v))
    for v, parent in reversed(order):
        children = sorted(codes[u] for u in adj[v] if u != parent)
        codes[v] = "(" + "".join(children) + ")"
    return codes[root]


def _centroids(adj, n):
    size = [1] * n
    order = []
    seen = [False] * n
    stack = [(0, -1)]
    while stack:
        v, parent = stack.pop()
        seen[v] = True
        order.append((v, parent))
        for u in adj[v]:
            if u != parent:
                stack.append((u, v))
    for v, parent in reversed(order):
        if parent != -1:
            size[parent] += size[v]
    best, cents = None, []
    for v, parent in order:
        heaviest = n - size[v]
        for u in adj[v]:
            if u != parent:
                heaviest = max(heaviest, size[u])
        if best is None or heaviest < best:
            best, cents = heaviest, [v]
        elif heaviest == best:
            cents.append(v)
    return cents


def _free_code(adj, n):
    cents = _centroids(adj, n)
    if len(cents) == 1:
        return _ahu_code(adj, cents[0])
    a, b = cents
    ca = _ahu_code(adj, a, banned=b)
    cb = _ahu_code(adj, b, banned=a)
    lo, hi = sorted((ca, cb))
    return "[" + lo + hi + "]"


def enumerate_trees(p, cap=TREE_ENUM_CAP):
    """One representative per isomorphism class of free trees of order p.

    Rooted level sequences are generated by the standard successor rule and
    deduplicated through the centroid-rooted canonical code, so the count
    equals t_p and the order is deterministic.
    """
    if not (1 <= p <= cap):
        raise CapacityError("tree enumeration supports 1 <= p <= %d" % cap)
    if p == 1:
        yield Graph(1, [])
        return
    seen = set()
    for seq in _rooted_level_sequences(p):
        parents = _tree_from_levels(seq)
        adj = [[] for _ in range(p)]
        for v, w in parents.items():
            adj[v].append(w)
            adj[w].append(v)
        code = _free_code(adj, p)
        if code in seen:
            continue
        seen.add(code)
        yield Graph(p, list(parents.items()))


def count_rooted_trees(p):
    """Rooted trees on p unlabelled vertices via the classical recurrence
    (Euler-transform convolution); exact big integers."""
    if p < 1:
        raise PreconditionError("need p >= 1")
    T = [0] * (p + 1)
    T[1] = 1
    S = [0] * (p + 1)
    for n in range(1, p):
        S[n] = sum(d * T[d] for d in range(1, n + 1) if n % d == 0)
        T[n + 1] = sum(S[k] * T[n + 1 - k] for k in range(1, n + 1)) // n
    return T[p]


# --- tree classifiers --------------------------------------------------------


def is_tree(graph):
    return graph.q == graph.p - 1 and is_connected(graph)


def _strip_leaves(graph):
    keep = [v for v in graph.vertices() if graph.degree(v) > 1]
    remap = {v: i for i, v in enumerate(keep)}
    edges = [(remap[u], remap[v]) for u, v in graph.edges if u in remap and v in remap]
    return Graph(len(keep), edges)


def is_caterpillar(graph):
    """Tree whose non-leaf vertices form a path (possibly empty)."""
    if not is_tree(graph):
        return False
    spine = _strip_leaves(graph)
    if spine.p <= 1:
        return True
    return is_tree(spine) and all(spine.degree(v) <= 2 for v in spine.vertices())


def is_lobster(graph):
    """Tree that becomes a caterpillar after one round of leaf removal."""
    if not is_tree(graph):
        return False
    spine = _strip_leaves(graph)
    return spine.p == 0 or is_caterpillar(spine)


# --- space formulas -----------------------------------------------------------


@dataclass(frozen=True)
class SpaceParams:
    """Bracket terms of the space formulas; all exact non-negative ints."""

    a_c: int = 0
    n_c: int = 0
    a_l: int = 0
    n_l: int = 0
    a_set: int = 0
    n_set: int = 0
    k_c: int = 2

    def __post_init__(self):
        for name in ("a_c", "n_c", "a_l", "n_l", "a_set", "n_set"):
            if getattr(self, name) < 0:
                raise PreconditionError("%s must be >= 0" % name)
        if self.k_c < 2:
            raise PreconditionError("k_c must be >= 2")

    def bracket(self):
        return self.a_c * self.n_c + self.a_l * self.n_l + self.a_set * self.n_set


def exact_log2(n):
    """log2 of a positive big integer, accurate well past 8 decimals."""
    if n <= 0:
        raise PreconditionError("log2 needs a positive integer")
    shift = max(n.bit_length() - 64, 0)
    return shift + math.log2(n >> shift)


def gpw_count_graph(p, q, params, exponent=None):
    """Password count for one (p,q)-graph: k_c^(p+q) times the bracket sum;
    the exponent is overridable to reproduce printed computations."""
    if p < 0 or q < 0:
        raise PreconditionError("p and q must be >= 0")
    bracket = params.bracket()
    if bracket == 0:
        raise DegenerateParamsError("all bracket terms vanish")
    if exponent is None:
        exponent = p + q
    count = params.k_c ** exponent * bracket
    return count, exact_log2(count)


def gpw_count_class(p, q, n_pq, params, exponent=None):
    """Password count over all n_pq graphs of the (p,q) class."""
    if n_pq < 1:
        raise PreconditionError("n_pq must be >= 1")
    count, _ = gpw_count_graph(p, q, params, exponent)
    total = n_pq * count
    return total, exact_log2(total)


def sheppard_count(q):
    """Number of gracefully labelled graphs with q edges: exactly q!."""
    if q < 1:
        raise PreconditionError("need q >= 1")
    return math.factorial(q)


def parse_count_expr(text):
    """Parse "10!" or a plain integer into an exact big integer."""
    text = text.strip()
    if text.endswith("!"):
        return math.factorial(int(text[:-1]))
    return int(text)
