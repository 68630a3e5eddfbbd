import io
import json
import subprocess
import sys

import pytest

from dagjunction.cli import main
from dagjunction.graph import parse_edge_list, serialize_edge_list
from dagjunction.testkit import diamond, gen_random_dag


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    graph = tmp_path / "g.txt"
    graph.write_text(serialize_edge_list(diamond()))
    pairs = tmp_path / "pairs.txt"
    pairs.write_text("a b\ns t\na a\na zz\n")
    cyc = tmp_path / "cyc.txt"
    cyc.write_text("a b\nb a\n")
    chain = tmp_path / "chain.txt"
    chain.write_text("s a\na b\n")
    star = tmp_path / "star.txt"
    star.write_text("s x\ns y\ns z\n")
    return {"graph": str(graph), "pairs": str(pairs), "cyc": str(cyc), "chain": str(chain),
            "star": str(star), "dir": tmp_path}


def test_validate_ok(files):
    code, out = run(["validate", files["graph"]])
    assert code == 0
    pos = {label: i for i, label in enumerate(out.split())}
    assert len(pos) == 4
    assert all(pos[a] < pos[b] for a, b in diamond().labelled_arcs())


def test_validate_cycle(files, capsys):
    code, out = run(["validate", files["cyc"]])
    assert code == 2 and out == ""
    assert capsys.readouterr().err.strip() == "a b a"


def test_validate_missing_file(files):
    code, _ = run(["validate", str(files["dir"] / "missing.txt")])
    assert code == 1


def test_validate_parse_error(files, capsys):
    bad = files["dir"] / "bad.txt"
    bad.write_text("a b\nq q\n")
    assert run(["validate", str(bad)])[0] == 1
    assert "line 2" in capsys.readouterr().err


def test_junctions_tsv(files):
    code, out = run(["junctions", files["graph"], files["pairs"]])
    assert code == 0
    assert out.splitlines() == [
        "a\tb\ts",
        "s\tt\ts",
        "a\ta\t",
        "a\tzz\tERROR unknown vertex label 'zz'",
    ]


def test_junctions_jsonl(files):
    code, out = run(["junctions", files["graph"], files["pairs"], "--format", "jsonl"])
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert rows[0] == {"u": "a", "v": "b", "junctions": ["s"]}
    assert rows[2]["junctions"] == []
    assert "error" in rows[3] and "junctions" not in rows[3]


def test_junctions_all_pairs_failing(files):
    bad = files["dir"] / "badpairs.txt"
    bad.write_text("x y\n")
    assert run(["junctions", files["graph"], str(bad)])[0] == 2


def test_junctions_on_cycle(files):
    assert run(["junctions", files["cyc"], files["pairs"]])[0] == 2


def test_lcas_tsv_and_jsonl(files):
    code, out = run(["lcas", files["graph"], files["pairs"]])
    assert code == 0
    assert out.splitlines()[0] == "a\tb\ts\ts"
    _, out = run(["lcas", files["graph"], files["pairs"], "--format", "jsonl"])
    assert json.loads(out.splitlines()[0]) == {"u": "a", "v": "b", "junctions": ["s"], "lcas": ["s"]}


def test_source_pairs(files):
    assert run(["source-pairs", files["star"], "--source", "s"])[1].splitlines() == [
        "s\tx", "s\ty", "s\tz", "x\ty", "x\tz", "y\tz",
    ]
    assert run(["source-pairs", files["chain"], "--source", "s"])[1].splitlines() == ["a\ts", "b\ts"]
    assert run(["source-pairs", files["chain"], "--source", "b"]) == (0, "")
    assert run(["source-pairs", files["chain"], "--source", "nope"])[0] == 1


def test_dump_tree(files):
    code, out = run(["dump-tree", files["graph"], "--source", "s"])
    lines = out.splitlines()
    assert code == 0
    assert lines[:4] == ["s 3 0 s", "b 2 2 s", "a 1 0 s", "t 0 0 a"]
    assert lines[4].startswith("# tree=3 ")
    assert "external-crossing=1" in lines[4]


def test_gen_round_trips():
    code, out = run(["gen", "--family", "random-dag", "--n", "9", "--seed", "4", "--arc-prob", "0.4"])
    assert code == 0
    assert parse_edge_list(out).labelled_arcs() == gen_random_dag(9, 0.4, 4).labelled_arcs()
    code, out = run(["gen", "--family", "worst-case-fig1", "--a", "2", "--b", "3"])
    assert len(out.splitlines()) == 6


def test_gen_bad_params():
    assert run(["gen", "--family", "random-dag", "--arc-prob", "2"])[0] == 1


def test_oracle_check_generated():
    code, out = run(["oracle-check", "--family", "random-dag", "--n", "7", "--count", "5", "--arc-prob", "0.4"])
    assert code == 0 and "0 mismatches" in out


def test_oracle_check_reports_mismatch(files, monkeypatch, capsys):
    import dagjunction.cli as cli

    monkeypatch.setattr(cli, "is_junction", lambda idx, u, v: False)
    code, _ = run(["oracle-check", "--graph", files["graph"]])
    err = capsys.readouterr().err
    assert code == 3
    assert err.startswith("mismatch on ")
    assert err.endswith("a t\nb t\ns a\ns b\n")  # reproducer edge list follows


def test_bench(capsys):
    code, out = run(["bench", "--family", "kinship", "--family", "star", "--sizes", "50,80"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t")[0] == "family" and len(lines) == 5


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 1
    with pytest.raises(SystemExit) as err:
        main(["validate", "x", "--bogus"])
    assert err.value.code == 1


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "dagjunction", "junctions", files["graph"], files["pairs"]],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "a\tb\ts"


def test_oracle_check_suite():
    code, out = run(["oracle-check", "--suite"])
    assert code == 0 and out.startswith("checked 306 graphs")
