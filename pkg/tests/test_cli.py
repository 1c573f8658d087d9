"""CLI surface: subcommands, formats, exit codes, reproducibility."""

import json
from pathlib import Path

import pytest

from quotientlab.cli import main


def run(args):
    return main(args)


@pytest.fixture()
def k3_file(tmp_path):
    p = tmp_path / "k3.txt"
    p.write_text("3 3\n0 1\n0 2\n1 2\n", encoding="utf-8")
    return str(p)


@pytest.fixture()
def k2_file(tmp_path):
    p = tmp_path / "k2.txt"
    p.write_text("2 1\n0 1\n", encoding="utf-8")
    return str(p)


def test_profile_gf_space(tmp_path):
    out = tmp_path / "p.json"
    code = run([
        "profile", "--family", "gf-space", "--q", "2", "--n", "2",
        "--k", "2", "--mode", "partition", "--out", str(out),
    ])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["results"]["profile"]["summary"]["count"] == 4
    assert ["0/1", "1/2", "1/1", "1/1"] in payload["results"]["profile"]["points"]


def test_profile_complete_cycle_k1(tmp_path):
    out = tmp_path / "p.json"
    code = run([
        "profile", "--family", "complete-cycle", "--n", "1",
        "--k", "1", "--mode", "partition", "--out", str(out),
    ])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["results"]["profile"]["points"] == [["0/1", "1/1"]]


def test_profile_example51_contains_two_tree_point(tmp_path):
    out = tmp_path / "p.json"
    code = run([
        "profile", "--family", "example51", "--n", "8",
        "--k", "2", "--mode", "partition", "--out", str(out),
    ])
    assert code == 0
    payload = json.loads(out.read_text())
    assert ["0/1", "7/8", "7/8", "7/8"] in payload["results"]["profile"]["points"]


def test_converge_writes_matrix_and_verdict(tmp_path):
    out = tmp_path / "c.json"
    csv_prefix = str(tmp_path / "mat")
    code = run([
        "converge", "--family", "example51", "--start", "5", "--end", "9",
        "--k", "2", "--mode", "partition", "--out", str(out),
        "--csv-out", csv_prefix,
    ])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["results"]["verdict"] == "diverging"
    exact = Path(csv_prefix + ".exact.csv").read_text()
    assert "31/72" in exact
    assert Path(csv_prefix + ".float.csv").exists()


def test_converge_single_member_inconclusive(tmp_path):
    out = tmp_path / "c.json"
    code = run([
        "converge", "--family", "gf-space", "--start", "2", "--end", "2",
        "--k", "2", "--mode", "partition", "--out", str(out),
    ])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["results"]["verdict"] == "inconclusive"
    assert payload["results"]["diagnostic"] is None


def test_verify_suite_pass(tmp_path):
    out = tmp_path / "v.json"
    assert run(["verify", "limit-filter", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["results"]["passed"] is True


def test_verify_unknown_suite():
    assert run(["verify", "no-such-suite"]) == 2


def test_cutdist_labeled(tmp_path, k2_file):
    empty = tmp_path / "empty2.txt"
    empty.write_text("2 0\n", encoding="utf-8")
    out = tmp_path / "d.json"
    assert run(["cutdist", k2_file, str(empty), "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["results"]["labeled"] == "1/2"


def test_cutdist_blowup_alignment(tmp_path, k2_file):
    c4 = tmp_path / "c4.txt"
    c4.write_text("4 4\n0 1\n1 2\n2 3\n0 3\n", encoding="utf-8")
    out = tmp_path / "d.json"
    assert run(["cutdist", k2_file, str(c4), "--t-max", "1", "--trials", "8",
                "--seed", "0", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["results"]["unlabeled_upper_bound"] == "0/1"


def test_cutdist_parse_error_exit_code(tmp_path, k3_file):
    bad = tmp_path / "bad.txt"
    bad.write_text("not a graph\n", encoding="utf-8")
    assert run(["cutdist", str(bad), k3_file]) == 2


def test_hom_graph_and_graphon(tmp_path, k3_file):
    graphon = tmp_path / "half.txt"
    graphon.write_text("1\n1\n1/2\n", encoding="utf-8")
    out = tmp_path / "h.json"
    assert run(["hom", "K3", "--graph", k3_file, "--graphon", str(graphon),
                "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["results"]["density"] == "2/9"
    assert payload["results"]["step_representation_consistent"] is True
    assert payload["results"]["graphon_density"] == "1/8"


def test_hom_edgeless_motif(tmp_path, k3_file):
    empty2 = tmp_path / "e2.txt"
    empty2.write_text("2 0\n", encoding="utf-8")
    out = tmp_path / "h.json"
    assert run(["hom", str(empty2), "--graph", k3_file, "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["results"]["density"] == "1/1"


def test_cutcap_profile(tmp_path):
    c4 = tmp_path / "c4.txt"
    c4.write_text("4 4\n0 1\n1 2\n2 3\n0 3\n", encoding="utf-8")
    out = tmp_path / "cc.json"
    assert run(["cutcap", str(c4), "--k", "2", "--mode", "partition",
                "--norm", "edges", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    points = payload["results"]["profile"]["points"]
    assert ["0/1", "1/2", "1/2", "0/1"] in points


def test_cap_exceeded_exit_code():
    assert run(["profile", "--family", "gf-space", "--q", "2", "--n", "4",
                "--k", "2", "--mode", "any", "--strategy", "exact"]) == 3


def test_sampled_needs_seed():
    assert run(["profile", "--family", "gf-space", "--q", "2", "--n", "2",
                "--k", "2", "--mode", "partition", "--strategy", "sampled"]) == 2


def test_usage_error_exit_code_from_argparse():
    with pytest.raises(SystemExit) as err:
        run(["profile", "--family", "not-a-family", "--n", "1"])
    assert err.value.code == 2


def test_reports_byte_identical(tmp_path, k2_file):
    invocations = [
        ["profile", "--family", "gf-space", "--q", "2", "--n", "3",
         "--k", "2", "--mode", "partition"],
        ["profile", "--family", "gf-space", "--q", "2", "--n", "3",
         "--k", "2", "--mode", "disjoint", "--strategy", "sampled",
         "--seed", "11", "--samples", "64"],
        ["converge", "--family", "example51", "--start", "5", "--end", "8",
         "--k", "2", "--mode", "partition"],
        ["cutcap", k2_file, "--k", "2", "--mode", "partition", "--norm",
         "nodes-squared"],
        ["hom", "K2", "--graph", k2_file],
    ]
    for i, args in enumerate(invocations):
        out1 = tmp_path / f"a{i}.json"
        out2 = tmp_path / f"b{i}.json"
        assert run(args + ["--out", str(out1)]) == 0
        assert run(args + ["--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes(), args
