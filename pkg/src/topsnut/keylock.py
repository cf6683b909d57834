"""Key/lock GPW semantics: twin odd-graceful pairs, lock enumeration,
authentication rules, walk passwords, chains and set-matrices.

A twin odd-graceful pair is a key graph and a lock graph with a common edge
count q whose vertex labels are injective per graph within [0, 2q], jointly
cover [0, 2q], and whose induced edge labels each form the full odd set
{1, 3, .., 2q-1}.
"""

from dataclasses import dataclass, field

from .errors import PreconditionError, RuleError, StepError, UndefinedLabelError
from .graphs import TopsnutGpw, canonical_code, edge_key, gpw_from_labels, gpw_equal
from .kernels import MODE_TWIN, label_search
from .labellings import dual_labelling

AUTH_RULES = ("twin-odd-graceful", "matrix-equality", "dual-pair")

LOCK_P_CAP = 10


@dataclass(frozen=True)
class AuthRule:
    tag: str
    parameters: tuple = ()

    def __post_init__(self):
        if self.tag not in AUTH_RULES:
            raise RuleError("unknown auth rule %r" % (self.tag,))


@dataclass(frozen=True)
class KeyLockPair:
    key: TopsnutGpw
    lock: TopsnutGpw
    rule: AuthRule = field(default_factory=lambda: AuthRule("twin-odd-graceful"))


@dataclass(frozen=True)
class WalkScheme:
    """Neighbor-ring password scheme: walk labels primed, then each walk
    vertex's full neighbor ring in rotation order."""

    tag: str = "neighbor-ring"
    marker: str = "'"


@dataclass(frozen=True)
class ChainSpec:
    kind: str
    m: int
    step: str = "dual"
    parameters: tuple = ()

    def __post_init__(self):
        if self.kind not in ("recursive", "fibonacci"):
            raise StepError("unknown chain kind %r" % (self.kind,))
        if self.step not in ("dual", "mod3-shift", "label-complement"):
            raise StepError("unknown step transform %r" % (self.step,))
        if self.m < 1:
            raise StepError("chain length must be >= 1")


def _twin_half_ok(gpw, q):
    """One side of the twin conditions: injective labels in [0,2q] and
    induced edge labels exactly the odd set."""
    labels = gpw.labelling.vertex_labels
    if not gpw.labelling.is_total_on(gpw.graph):
        raise UndefinedLabelError("twin check needs total vertex labellings")
    values = [labels[v] for v in range(gpw.graph.p)]
    if len(set(values)) != len(values):
        return False
    if any(x < 0 or x > 2 * q for x in values):
        return False
    diffs = sorted(abs(labels[u] - labels[v]) for u, v in gpw.graph.edges)
    return diffs == list(range(1, 2 * q, 2))


def verify_twin_odd_graceful(pair):
    """Check the full twin odd-graceful conditions on a key/lock pair."""
    key, lock = pair.key, pair.lock
    q = key.graph.q
    if lock.graph.q != q:
        raise PreconditionError("key and lock must have equal edge counts")
    if q < 1:
        raise PreconditionError("twin pairs need at least one edge")
    if not _twin_half_ok(key, q) or not _twin_half_ok(lock, q):
        return False
    union = set(key.labelling.vertex_labels.values()) | set(lock.labelling.vertex_labels.values())
    return union == set(range(2 * q + 1))


def enumerate_locks(key, candidates, p_cap=LOCK_P_CAP):
    """All labellings of the candidate graphs forming a twin pair with the
    given key, in deterministic order."""
    q = key.graph.q
    if not _twin_half_ok(key, q):
        raise PreconditionError("key does not satisfy its half of the twin conditions")
    key_labels = set(key.labelling.vertex_labels.values())
    missing = set(range(2 * q + 1)) - key_labels
    out = []
    for g in candidates:
        if g.p > p_cap:
            raise PreconditionError("candidate graph too large (p=%d > %d)" % (g.p, p_cap))
        if g.q != q or g.p < len(missing):
            continue
        raw, _ = label_search(g.p, g.edges, MODE_TWIN)
        for assignment in raw:
            if missing <= set(assignment):
                out.append(gpw_from_labels(g, {v: assignment[v] for v in range(g.p)},
                                           rule="twin-odd-graceful"))
    return out


def twin_dual(pair):
    """Dual of a twin pair: both sides complemented against the full label
    span 2q (the per-graph constant would break joint coverage)."""
    span = 2 * pair.key.graph.q
    return KeyLockPair(
        dual_labelling(pair.key, span=span),
        dual_labelling(pair.lock, span=span),
        pair.rule,
    )


def authenticate(pair):
    """Run the pair's rule: the key opens the lock or it does not."""
    tag = pair.rule.tag
    if tag == "twin-odd-graceful":
        return verify_twin_odd_graceful(pair)
    if tag == "matrix-equality":
        return gpw_equal(pair.key, pair.lock)
    if tag == "dual-pair":
        try:
            dk = dual_labelling(pair.key)
        except (PreconditionError, UndefinedLabelError):
            return False
        return canonical_code(dk) == canonical_code(pair.lock)
    raise RuleError("unknown auth rule %r" % (tag,))


def derive_alphanumeric(gpw, embedding, walk, scheme=WalkScheme()):
    """Alphanumeric password from a walk on an embedded labelled graph.

    Each walk vertex contributes its own label with the prime marker, then
    the labels of all its neighbors in rotation order starting right after
    the walk predecessor (first vertex: after the walk successor; a lone
    vertex starts at its stored rotation).
    """
    labels = gpw.labelling.vertex_labels
    if not gpw.labelling.is_total_on(gpw.graph):
        raise UndefinedLabelError("walk passwords need total vertex labellings")
    for a, b in zip(walk, walk[1:]):
        if not gpw.graph.has_edge(a, b):
            raise PreconditionError("walk step (%d,%d) is not an edge" % (a, b))
    units = []
    for idx, v in enumerate(walk):
        if idx > 0:
            anchor = walk[idx - 1]
        elif len(walk) > 1:
            anchor = walk[1]
        else:
            anchor = None
        rot = list(embedding.rotation[v])
        if anchor is not None:
            start = rot.index(anchor) + 1
            rot = rot[start:] + rot[:start]
        units.append("%d%s" % (labels[v], scheme.marker))
        units.extend(str(labels[u]) for u in rot)
    return "".join(units)


@dataclass(frozen=True)
class ChainResult:
    elements: tuple
    flags: tuple  # per element: True = compatible / trivially ok

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _apply_step(gpw, step):
    if step == "dual":
        if not gpw.labelling.is_total_on(gpw.graph):
            raise StepError("dual step needs a total vertex labelling")
        return dual_labelling(gpw)
    if step == "mod3-shift":
        if not gpw.labelling.edge_labels or len(gpw.labelling.edge_labels) != gpw.graph.q:
            raise StepError("mod3-shift needs a total edge labelling")
        shifted = {e: (x % 3) + 1 for e, x in gpw.labelling.edge_labels.items()}
        from .graphs import Labelling

        return TopsnutGpw(gpw.graph, Labelling(dict(gpw.labelling.vertex_labels), shifted, "free"))
    if step == "label-complement":
        labels = gpw.labelling.vertex_labels
        if not gpw.labelling.is_total_on(gpw.graph):
            raise StepError("label-complement needs a total vertex labelling")
        span = max(labels.values()) + min(labels.values())
        flipped = {v: span - x for v, x in labels.items()}
        edge_labels = dict(gpw.labelling.edge_labels)
        if edge_labels:
            espan = max(edge_labels.values()) + min(edge_labels.values())
            edge_labels = {e: espan - x for e, x in edge_labels.items()}
        from .graphs import Labelling

        return TopsnutGpw(gpw.graph, Labelling(flipped, edge_labels, "free"))
    raise StepError("unknown step transform %r" % (step,))


def build_chain(seed, spec):
    """Deterministic GPW chain.

    recursive: k_{i+1} = step(k_i), seed is one GPW.  fibonacci: seed is a
    pair (k1, k2); k_{j+1} = step(k_j) checked for compatibility against
    k_{j-1} (twin verification when both sides qualify, else canonical-code
    inequality); incompatible elements are still emitted, flagged False.
    """
    if spec.kind == "recursive":
        if not isinstance(seed, TopsnutGpw):
            raise StepError("recursive chains start from a single GPW")
        elements = [seed]
        while len(elements) < spec.m:
            elements.append(_apply_step(elements[-1], spec.step))
        return ChainResult(tuple(elements), tuple([True] * len(elements)))

    if not (isinstance(seed, tuple) and len(seed) == 2):
        raise StepError("fibonacci chains start from a pair of GPWs")
    k1, k2 = seed
    elements = [k1, k2]
    flags = [True, True]
    while len(elements) < spec.m:
        prev, cur = elements[-2], elements[-1]
        nxt = _apply_step(cur, spec.step)
        try:
            ok = verify_twin_odd_graceful(KeyLockPair(prev, nxt))
        except (PreconditionError, UndefinedLabelError):
            ok = canonical_code(prev) != canonical_code(nxt)
        elements.append(nxt)
        flags.append(bool(ok))
    return ChainResult(tuple(elements[: spec.m]), tuple(flags[: spec.m]))


@dataclass(frozen=True)
class SetMatrix:
    """Adjacency-shaped matrix whose entries are frozen integer sets."""

    order: int
    entries: tuple

    def __post_init__(self):
        for i in range(self.order):
            for jj in range(self.order):
                if self.entries[i][jj] != self.entries[jj][i]:
                    raise PreconditionError("set-matrix not symmetric at (%d,%d)" % (i, jj))

    def to_text(self):
        def fmt(s):
            return "{%s}" % ",".join(str(x) for x in sorted(s))

        return "\n".join(" ".join(fmt(x) for x in row) for row in self.entries) + "\n"


def set_matrix(graph, vertex_sets, edge_rule="union"):
    """Set-matrix of a set-labelled graph: diagonal holds vertex sets, edge
    entries combine endpoint sets by union or symmetric difference."""
    if edge_rule not in ("union", "symmetric-difference"):
        raise PreconditionError("unknown edge rule %r" % (edge_rule,))
    for v in graph.vertices():
        if v not in vertex_sets:
            raise PreconditionError("vertex %d has no set assigned" % v)
    rows = [[frozenset()] * graph.p for _ in range(graph.p)]
    for v in graph.vertices():
        rows[v][v] = frozenset(vertex_sets[v])
    for u, v in graph.edges:
        su, sv = frozenset(vertex_sets[u]), frozenset(vertex_sets[v])
        entry = su | sv if edge_rule == "union" else su ^ sv
        rows[u][v] = entry
        rows[v][u] = entry
    return SetMatrix(graph.p, tuple(tuple(r) for r in rows))
