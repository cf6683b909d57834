"""topsnut command line: labelling, coloring, planar, key/lock, space and
service subcommands over the text graph/embedding file formats."""

import argparse
import os
import sys

from . import authd, colorings, graphs, keylock, labellings, planar, space
from .errors import TopsnutError


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_gpw(path):
    return graphs.parse_graph_text(_read(path))


def _load_embedding(path):
    return planar.parse_embedding_text(_read(path))


def _edge_arg(text):
    u, v = text.split(",")
    return int(u), int(v)


def _print_embedding(emb, gpw=None):
    sys.stdout.write(planar.format_embedding_text(emb, gpw))


def _coloring_from_gpw(emb, gpw, k=4):
    missing = [v for v in range(emb.p) if v not in gpw.labelling.vertex_labels]
    if missing:
        raise TopsnutError("vertices %r carry no color label" % missing)
    return colorings.VertexColoring({v: gpw.labelling.vertex_labels[v] for v in range(emb.p)}, k)


def cmd_verify(args):
    gpw = _load_gpw(args.file)
    print("true" if labellings.verify_labelling(gpw, args.kind) else "false")


def cmd_search(args):
    gpw = _load_gpw(args.file)
    budget = labellings.SearchBudget(max_solutions=args.limit, node_limit=args.node_limit)
    result = labellings.search_labellings(gpw.graph, args.kind, budget)
    for lab in result:
        labels = " ".join("%d=%d" % (v, lab.vertex_labels[v]) for v in range(gpw.graph.p))
        print(labels)
    print("# %d labellings, complete=%s" % (len(result), str(result.complete).lower()))


def cmd_count(args):
    gpw = _load_gpw(args.file)
    print(labellings.count_labellings(gpw.graph, args.kind))


def cmd_dual(args):
    gpw = _load_gpw(args.file)
    sys.stdout.write(graphs.format_graph_text(labellings.dual_labelling(gpw, span=args.span)))


def cmd_perfect(args):
    gpw = _load_gpw(args.file)
    print("true" if labellings.is_perfect_labelling_graph(gpw.graph, args.kind) else "false")


def cmd_matrix(args):
    gpw = _load_gpw(args.file)
    sys.stdout.write(graphs.graph_matrix(gpw).to_text())


def cmd_equal(args):
    a, b = _load_gpw(args.file_a), _load_gpw(args.file_b)
    print("true" if graphs.gpw_equal(a, b) else "false")


def cmd_colorings(args):
    gpw = _load_gpw(args.file)
    budget = labellings.SearchBudget(max_solutions=args.limit)
    result = colorings.search_colorings(gpw.graph, args.k, budget)
    for col in result:
        print(" ".join("%d=%d" % (v, col.colors[v]) for v in range(gpw.graph.p)))
    print("# %d colorings, complete=%s" % (len(result), str(result.complete).lower()))


def cmd_kempe_classes(args):
    gpw = _load_gpw(args.file)
    part = colorings.kempe_classes(gpw.graph, args.k)
    for i, block in enumerate(part.blocks):
        print("class %d: %d colorings" % (i, len(block)))
    print("# kempe graph: %s" % str(part.is_kempe_graph).lower())


def cmd_klein(args):
    emb, gpw = _load_embedding(args.file)
    col = _coloring_from_gpw(emb, gpw)
    edge_col = colorings.klein_edge_coloring(emb.graph, col)
    for (u, v), c in sorted(edge_col.colors.items()):
        print("%d %d %d" % (u, v, c))


def cmd_mod3_verify(args):
    gpw = _load_gpw(args.file)
    h1 = colorings.Mod3EdgeLabelling(dict(gpw.labelling.edge_labels))
    h2 = colorings.shift_mod3(h1)
    h3 = colorings.shift_mod3(h2)
    print("true" if colorings.verify_mod3_group(h1, h2, h3) else "false")


def cmd_mpg_gen(args):
    emb = planar.recursive_mpg(args.n, policy=args.policy)
    _print_embedding(emb)


def cmd_mpg_flip(args):
    emb, gpw = _load_embedding(args.file)
    _print_embedding(planar.flip_edge(emb, args.edge))


def cmd_mpg_split(args):
    emb, gpw = _load_embedding(args.file)
    _print_embedding(planar.split_vertex(emb, args.vertex, args.j))


def cmd_mpg_offspring(args):
    emb, gpw = _load_embedding(args.file)
    _print_embedding(planar.offspring_vertex(emb, args.vertex, args.j))


def cmd_mpg_flippable(args):
    emb, gpw = _load_embedding(args.file)
    print(planar.count_flippable(emb))


def cmd_mpg_paste(args):
    ga, _ = _load_embedding(args.file_a)
    gb, _ = _load_embedding(args.file_b)
    _print_embedding(planar.single_edge_paste(ga, args.edge1, gb, args.edge2))


def cmd_mpg_identify(args):
    parts = []
    for path in (args.file_l, args.file_r, args.file_b):
        emb, gpw = _load_embedding(path)
        parts.append((emb, _coloring_from_gpw(emb, gpw)))
    merged, coloring = planar.edge_identify(*parts)
    out = graphs.gpw_from_labels(merged.graph, dict(coloring.colors), induce_edges=False)
    _print_embedding(merged, out)


def cmd_twin_verify(args):
    key, lock = _load_gpw(args.key), _load_gpw(args.lock)
    pair = keylock.KeyLockPair(key, lock)
    print("true" if keylock.verify_twin_odd_graceful(pair) else "false")


def cmd_locks(args):
    key = _load_gpw(args.key)
    candidates = [_load_gpw(path).graph for path in args.candidates]
    for lock in keylock.enumerate_locks(key, candidates):
        sys.stdout.write(graphs.format_graph_text(lock))
        print("---")


def cmd_derive_pw(args):
    emb, gpw = _load_embedding(args.file)
    walk = [int(t) for t in args.walk.split(",")]
    print(keylock.derive_alphanumeric(gpw, emb, walk))


def cmd_chain(args):
    spec = keylock.ChainSpec(args.kind, args.m, args.step)
    if args.kind == "fibonacci":
        seed = (_load_gpw(args.file), _load_gpw(args.file2))
    else:
        seed = _load_gpw(args.file)
    result = keylock.build_chain(seed, spec)
    for i, (gpw, flag) in enumerate(zip(result.elements, result.flags)):
        print("# element %d compatible=%s" % (i + 1, str(flag).lower()))
        sys.stdout.write(graphs.format_graph_text(gpw))


def cmd_space_trees(args):
    count = 0
    for tree in space.enumerate_trees(args.p):
        count += 1
        if args.show:
            print(" ".join("%d-%d" % e for e in tree.edges))
    print(count)


def cmd_space_rooted(args):
    print(space.count_rooted_trees(args.p))


def cmd_space_lookup(args):
    print(space.lookup_counts(args.p, args.kind))


def _space_params(args):
    return space.SpaceParams(
        a_c=space.parse_count_expr(args.a_c),
        n_c=space.parse_count_expr(args.n_c),
        a_l=space.parse_count_expr(args.a_l),
        n_l=space.parse_count_expr(args.n_l),
        a_set=space.parse_count_expr(args.a_set),
        n_set=space.parse_count_expr(args.n_set),
        k_c=args.k_c,
    )


def cmd_space_mgraph(args):
    count, bits = space.gpw_count_graph(args.p, args.q, _space_params(args), args.exp)
    print(count)
    print("~2^%.8f" % bits)


def cmd_space_mclass(args):
    n_pq = space.parse_count_expr(args.n_pq) if args.n_pq else space.lookup_counts(args.p, "trees")
    count, bits = space.gpw_count_class(args.p, args.q, n_pq, _space_params(args), args.exp)
    print(count)
    print("~2^%.8f" % bits)


def cmd_sheppard(args):
    print(space.sheppard_count(args.q))


def cmd_serve(args):
    store = args.store or os.environ.get("TOPSNUT_STORE")
    server = authd.serve(args.host, args.port, store)
    host, port = server.server_address
    print("serving on %s:%d (store: %s)" % (host, port, store or "memory"), flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()


def _add_space_params(sp):
    sp.add_argument("--a-c", default="0")
    sp.add_argument("--n-c", default="0")
    sp.add_argument("--a-l", default="0")
    sp.add_argument("--n-l", default="0")
    sp.add_argument("--a-set", default="0")
    sp.add_argument("--n-set", default="0")
    sp.add_argument("--k-c", type=int, default=2)
    sp.add_argument("--exp", type=int, default=None,
                    help="override the k_c exponent (default p+q)")


def build_parser():
    parser = argparse.ArgumentParser(prog="topsnut")
    sub = parser.add_subparsers(dest="command", required=True)

    kinds = list(labellings.KINDS)

    p = sub.add_parser("verify", help="verify a labelling kind on a GPW file")
    p.add_argument("file")
    p.add_argument("--kind", choices=kinds, default="graceful")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="search labellings of a graph")
    p.add_argument("file")
    p.add_argument("--kind", choices=kinds, default="graceful")
    p.add_argument("--limit", type=int, default=0)
    p.add_argument("--node-limit", type=int, default=0)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("count", help="count labellings of a graph")
    p.add_argument("file")
    p.add_argument("--kind", choices=kinds, default="graceful")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("dual", help="dual labelling of a GPW")
    p.add_argument("file")
    p.add_argument("--span", type=int, default=None)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("perfect", help="perfect labelling-graph check")
    p.add_argument("file")
    p.add_argument("--kind", choices=kinds, default="graceful")
    p.set_defaults(func=cmd_perfect)

    p = sub.add_parser("matrix", help="print the graph matrix of a GPW")
    p.add_argument("file")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("equal", help="canonical GPW equality")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("colorings", help="enumerate proper k-colorings")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--limit", type=int, default=0)
    p.set_defaults(func=cmd_colorings)

    p = sub.add_parser("kempe-classes", help="Kempe equivalence classes")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=4)
    p.set_defaults(func=cmd_kempe_classes)

    p = sub.add_parser("klein", help="Klein four-group edge coloring")
    p.add_argument("file", help="embedding file with vertex labels as colors")
    p.set_defaults(func=cmd_klein)

    p = sub.add_parser("mod3-verify", help="verify the mod-3 graphical group law")
    p.add_argument("file", help="graph file with edge labels in {1,2,3}")
    p.set_defaults(func=cmd_mod3_verify)

    mpg = sub.add_parser("mpg", help="maximal planar graph operations")
    mpg_sub = mpg.add_subparsers(dest="mpg_command", required=True)

    p = mpg_sub.add_parser("gen", help="generate a recursive maximal planar graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--policy", choices=["newest", "first"], default="newest")
    p.set_defaults(func=cmd_mpg_gen)

    p = mpg_sub.add_parser("flip", help="flip an edge of a triangulation")
    p.add_argument("file")
    p.add_argument("--edge", type=_edge_arg, required=True)
    p.set_defaults(func=cmd_mpg_flip)

    p = mpg_sub.add_parser("split", help="split a vertex")
    p.add_argument("file")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(func=cmd_mpg_split)

    p = mpg_sub.add_parser("offspring", help="offspring operation on a vertex")
    p.add_argument("file")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(func=cmd_mpg_offspring)

    p = mpg_sub.add_parser("flippable", help="count flippable edges")
    p.add_argument("file")
    p.set_defaults(func=cmd_mpg_flippable)

    p = mpg_sub.add_parser("paste", help="single-edge paste of two embeddings")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--edge1", type=_edge_arg, required=True)
    p.add_argument("--edge2", type=_edge_arg, required=True)
    p.set_defaults(func=cmd_mpg_paste)

    p = mpg_sub.add_parser("identify", help="triangular edge-identify three parts")
    p.add_argument("file_l")
    p.add_argument("file_r")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_mpg_identify)

    p = sub.add_parser("twin-verify", help="verify a twin odd-graceful key/lock pair")
    p.add_argument("key")
    p.add_argument("lock")
    p.set_defaults(func=cmd_twin_verify)

    p = sub.add_parser("locks", help="enumerate locks opened by a key")
    p.add_argument("key")
    p.add_argument("--candidates", nargs="+", required=True)
    p.set_defaults(func=cmd_locks)

    p = sub.add_parser("derive-pw", help="walk-derived alphanumeric password")
    p.add_argument("file", help="embedding file with vertex labels")
    p.add_argument("--walk", required=True, help="comma separated vertex ids")
    p.set_defaults(func=cmd_derive_pw)

    p = sub.add_parser("chain", help="build a GPW chain")
    p.add_argument("file")
    p.add_argument("file2", nargs="?")
    p.add_argument("--kind", choices=["recursive", "fibonacci"], default="recursive")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--step", choices=["dual", "mod3-shift", "label-complement"], default="dual")
    p.set_defaults(func=cmd_chain)

    sp = sub.add_parser("space", help="password-space arithmetic")
    sp_sub = sp.add_subparsers(dest="space_command", required=True)

    p = sp_sub.add_parser("trees", help="enumerate free trees of order p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--show", action="store_true")
    p.set_defaults(func=cmd_space_trees)

    p = sp_sub.add_parser("rooted", help="count rooted trees of order p")
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_space_rooted)

    p = sp_sub.add_parser("lookup", help="reference table lookup")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--kind", choices=["graphs", "digraphs", "connected-digraphs", "trees", "rooted-trees"],
                   required=True)
    p.set_defaults(func=cmd_space_lookup)

    p = sp_sub.add_parser("mgraph", help="password count for one (p,q)-graph")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    _add_space_params(p)
    p.set_defaults(func=cmd_space_mgraph)

    p = sp_sub.add_parser("mclass", help="password count for a (p,q) class")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n-pq", default=None, help="class size (defaults to the tree table)")
    _add_space_params(p)
    p.set_defaults(func=cmd_space_mclass)

    p = sp_sub.add_parser("sheppard", help="q! graceful census size")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_sheppard)

    p = sub.add_parser("serve", help="run the authentication service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8750)
    p.add_argument("--store", default=None, help="record log path (or TOPSNUT_STORE)")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except TopsnutError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
