import json

import pytest

from topsnut.cli import main
from topsnut.graphs import Graph, format_graph_text, gpw_from_labels, parse_graph_text
from topsnut.keylock import enumerate_locks
from topsnut.planar import format_embedding_text, recursive_mpg


@pytest.fixture
def gpw_file(tmp_path):
    def write(gpw, name="g.txt"):
        path = tmp_path / name
        path.write_text(format_graph_text(gpw))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestLabellingCommands:
    def test_verify(self, capsys, gpw_file):
        path = gpw_file(gpw_from_labels(Graph(2, [(0, 1)]), {0: 0, 1: 1}))
        code, out = run(capsys, "verify", path, "--kind", "graceful")
        assert code == 0 and out.strip() == "true"

    def test_search_limit(self, capsys, gpw_file):
        path = gpw_file(gpw_from_labels(Graph(4, [(0, 1), (0, 2), (0, 3)]), {0: 0, 1: 1, 2: 2, 3: 3},
                                        induce_edges=False))
        code, out = run(capsys, "search", path, "--kind", "graceful", "--limit", "3")
        lines = out.strip().splitlines()
        assert code == 0 and len(lines) == 4 and lines[-1].startswith("# 3 labellings")

    def test_count(self, capsys, gpw_file):
        path = gpw_file(gpw_from_labels(Graph(2, [(0, 1)]), {0: 0, 1: 1}))
        code, out = run(capsys, "count", path)
        assert out.strip() == "2"

    def test_dual_roundtrip(self, capsys, gpw_file, tmp_path):
        gpw = gpw_from_labels(Graph(3, [(0, 1), (1, 2)]), {0: 0, 1: 2, 2: 1})
        path = gpw_file(gpw)
        code, out = run(capsys, "dual", path)
        dual = parse_graph_text(out)
        assert dual.labelling.vertex_labels == {0: 2, 1: 0, 2: 1}

    def test_perfect(self, capsys, gpw_file):
        path = gpw_file(gpw_from_labels(Graph(2, [(0, 1)]), {0: 0, 1: 1}))
        code, out = run(capsys, "perfect", path, "--kind", "graceful")
        assert out.strip() == "true"

    def test_error_exit_code(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("not a graph\n")
        code = main(["verify", str(bad)])
        assert code == 1


class TestColoringCommands:
    def test_colorings(self, capsys, gpw_file):
        path = gpw_file(gpw_from_labels(Graph(3, [(0, 1), (1, 2), (0, 2)]), {0: 0, 1: 1, 2: 2},
                                        induce_edges=False))
        code, out = run(capsys, "colorings", path, "--k", "3")
        assert out.strip().splitlines()[-1].startswith("# 6 colorings")

    def test_kempe_classes(self, capsys, gpw_file):
        path = gpw_file(gpw_from_labels(Graph(3, [(0, 1), (1, 2), (0, 2)]), {0: 0, 1: 1, 2: 2},
                                        induce_edges=False))
        code, out = run(capsys, "kempe-classes", path, "--k", "3")
        assert "kempe graph: true" in out

    def test_mod3_verify(self, capsys, tmp_path):
        path = tmp_path / "m.txt"
        path.write_text("3 2\n0 1 1\n1 2 3\n")
        code, out = run(capsys, "mod3-verify", str(path))
        assert out.strip() == "true"


class TestMpgCommands:
    def test_gen_and_flippable(self, capsys, tmp_path):
        code, out = run(capsys, "mpg", "gen", "--n", "4")
        emb_path = tmp_path / "emb.txt"
        emb_path.write_text(out)
        code, out = run(capsys, "mpg", "flippable", str(emb_path))
        assert int(out.strip()) >= 5

    def test_split(self, capsys, tmp_path):
        emb = recursive_mpg(2)
        path = tmp_path / "emb.txt"
        path.write_text(format_embedding_text(emb))
        code, out = run(capsys, "mpg", "split", str(path), "--vertex", "0", "--j", "1")
        assert code == 0 and "outer:" in out

    def test_paste(self, capsys, tmp_path):
        emb = recursive_mpg(0)
        a = tmp_path / "a.txt"
        a.write_text(format_embedding_text(emb))
        code, out = run(capsys, "mpg", "paste", str(a), str(a),
                        "--edge1", "0,1", "--edge2", "0,1")
        assert code == 0 and "4 5" in out.splitlines()[0]


class TestKeylockCommands:
    def test_twin_verify(self, capsys, gpw_file):
        k2 = Graph(2, [(0, 1)])
        key = gpw_from_labels(k2, {0: 0, 1: 1})
        lock = gpw_from_labels(k2, {0: 1, 1: 2})
        code, out = run(capsys, "twin-verify", gpw_file(key, "k.txt"), gpw_file(lock, "l.txt"))
        assert out.strip() == "true"

    def test_locks(self, capsys, gpw_file):
        k2 = Graph(2, [(0, 1)])
        key = gpw_from_labels(k2, {0: 0, 1: 1})
        code, out = run(capsys, "locks", gpw_file(key, "k.txt"),
                        "--candidates", gpw_file(key, "c.txt"))
        assert out.count("---") == 2

    def test_chain(self, capsys, gpw_file):
        key = gpw_from_labels(Graph(3, [(0, 1), (1, 2)]), {0: 0, 1: 1, 2: 4})
        code, out = run(capsys, "chain", gpw_file(key), "--m", "3", "--step", "dual")
        assert out.count("element") == 3

    def test_derive_pw(self, capsys, tmp_path):
        emb = recursive_mpg(1)
        gpw = gpw_from_labels(emb.graph, {0: 1, 1: 2, 2: 3, 3: 4}, induce_edges=False)
        path = tmp_path / "emb.txt"
        path.write_text(format_embedding_text(emb, gpw))
        code, out = run(capsys, "derive-pw", str(path), "--walk", "0,1")
        assert code == 0 and "'" in out


class TestSpaceCommands:
    def test_trees(self, capsys):
        code, out = run(capsys, "space", "trees", "--p", "10")
        assert out.strip() == "106"

    def test_mclass_reproduces_m109(self, capsys):
        code, out = run(capsys, "space", "mclass", "--p", "10", "--q", "9",
                        "--n-pq", "106", "--a-l", "1", "--n-l", "10!", "--exp", "18")
        lines = out.strip().splitlines()
        assert lines[0] == "100834423603200"
        assert lines[1] == "~2^46.51898157"

    def test_lookup(self, capsys):
        code, out = run(capsys, "space", "lookup", "--p", "6", "--kind", "graphs")
        assert out.strip() == "156"

    def test_rooted(self, capsys):
        code, out = run(capsys, "space", "rooted", "--p", "10")
        assert out.strip() == "719"

    def test_sheppard(self, capsys):
        code, out = run(capsys, "space", "sheppard", "--q", "4")
        assert out.strip() == "24"
