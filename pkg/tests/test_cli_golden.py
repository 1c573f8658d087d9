"""Golden-file tests pinning full report payloads for every subcommand."""

from pathlib import Path

import pytest

from quotientlab.cli import main

GOLDEN = Path(__file__).parent / "golden"

K3_TEXT = "3 3\n0 1\n0 2\n1 2\n"
HALF_GRAPHON = "1\n1\n1/2\n"

CASES = {
    "profile_gf22.json": [
        "profile", "--family", "gf-space", "--q", "2", "--n", "2",
        "--k", "2", "--mode", "partition",
    ],
    "profile_example51_4.json": [
        "profile", "--family", "example51", "--n", "4", "--k", "2",
        "--mode", "partition",
    ],
    "profile_sampled.json": [
        "profile", "--family", "gf-space", "--q", "2", "--n", "3", "--k", "2",
        "--mode", "disjoint", "--strategy", "sampled", "--seed", "5",
        "--samples", "50",
    ],
    "converge_gf2.json": [
        "converge", "--family", "gf-space", "--q", "2", "--start", "2",
        "--end", "3", "--k", "2", "--mode", "partition",
    ],
    "cutcap_k3.json": [
        "cutcap", "k3.txt", "--k", "2", "--mode", "partition",
        "--norm", "nodes-squared",
    ],
    "hom_k2_k3.json": ["hom", "K2", "--graph", "k3.txt", "--graphon", "half.txt"],
    "cutdist_k3_k3.json": [
        "cutdist", "k3.txt", "k3.txt", "--t-max", "1", "--trials", "2",
        "--seed", "0", "--upper-bound",
    ],
    "verify_limit_filter.json": ["verify", "limit-filter"],
}


@pytest.mark.parametrize("golden_name", sorted(CASES))
def test_golden_payloads(golden_name, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "k3.txt").write_text(K3_TEXT, encoding="utf-8")
    (tmp_path / "half.txt").write_text(HALF_GRAPHON, encoding="utf-8")
    out = tmp_path / "out.json"
    assert main(CASES[golden_name] + ["--out", str(out)]) == 0
    expected = (GOLDEN / golden_name).read_bytes()
    assert out.read_bytes() == expected
