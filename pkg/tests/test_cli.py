import json
import os

import pytest

import cli


def run_json(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_ranks(capsys):
    code, data = run_json(capsys, "ranks", "3", "8")
    assert code == 0
    assert data["total"] == "165"
    assert data["sizes"][12] == "13"
    assert data["peak_ranks"] == [12]


def test_chains_phi(capsys):
    code, data = run_json(capsys, "chains", "3", "8", "--method", "phi")
    assert code == 0
    assert data["box"] == [3, 8]
    assert len(data["chains"]) == 13
    assert sum(len(c["elements"]) for c in data["chains"]) == 165
    assert data["chains"][0]["start"] == [0, 0, 0]


@pytest.mark.parametrize("method", ["closed", "greedy", "recud"])
def test_chains_other_methods(capsys, method):
    code, data = run_json(capsys, "chains", "3", "6", "--method", method)
    assert code == 0
    assert len(data["chains"]) == 8


def test_chains_greedy_four_rows(capsys):
    code, data = run_json(capsys, "chains", "4", "4", "--method", "greedy")
    assert code == 0
    assert len(data["chains"]) == 8


def test_tableau_ascii_golden(capsys, golden_dir):
    code = cli.run(["tableau", "3", "8", "--method", "phi", "--format", "ascii"])
    out = capsys.readouterr().out
    with open(os.path.join(golden_dir, "tableau_3_8_phi_ascii.txt"), encoding="utf-8") as fh:
        assert out == fh.read()
    assert code == 0


def test_tableau_to_file(tmp_path, capsys):
    path = tmp_path / "tabs.svg"
    assert cli.run(["tableau", "3", "4", "--format", "svg", "--out", str(path)]) == 0
    assert capsys.readouterr().out == ""
    assert path.read_text(encoding="utf-8").startswith("<svg")


def test_tableau_png(tmp_path):
    path = tmp_path / "tabs.png"
    assert cli.run(["tableau", "3", "4", "--format", "png", "--out", str(path)]) == 0
    assert path.stat().st_size > 0


def test_tableau_png_needs_out(capsys):
    assert cli.run(["tableau", "3", "4", "--format", "png"]) == 2
    assert "--out" in capsys.readouterr().err


def test_phi_trace(capsys):
    code, data = run_json(capsys, "phi", "8", "--trace", "2,0,0")
    assert code == 0
    assert data["trace"][0] == [2, 0, 0]
    assert data["trace"][-1] == [8, 8, 0]
    assert len(data["trace"]) == 15


def test_phi_table(capsys):
    code, data = run_json(capsys, "phi", "2")
    assert code == 0
    assert len(data["table"]) == 10 - 2


def test_greedy_single_rank(capsys):
    code, data = run_json(capsys, "greedy", "3", "8", "--rank", "0")
    assert code == 0
    assert data["levels"][0]["pairs"] == [[[0, 0, 0], [1, 0, 0]]]


def test_verify(capsys):
    code, data = run_json(capsys, "verify", "3", "8")
    assert code == 0
    assert data["ok"] is True
    assert data["phi_agreement"]["disagreements"] == []


def test_verify_with_oracle(capsys):
    code, data = run_json(capsys, "verify", "4", "4", "--oracle")
    assert code == 0
    assert all(c["full"] for c in data["oracle"])


def test_smn(capsys):
    code, data = run_json(capsys, "smn", "4", "6")
    assert code == 0
    assert data["closed_form_match"] is True


def test_udec(capsys):
    code, data = run_json(capsys, "udec", "3", "3")
    assert code == 0
    assert data["kind"] == "u_decomposition"
    assert len(data["chains"]) == 3


def test_summary_goes_to_stderr(capsys, monkeypatch):
    monkeypatch.setattr(cli.config, "PRINT_SUMMARY", True)
    cli.run(["ranks", "2", "2"])
    captured = capsys.readouterr()
    assert "RUN SUMMARY: ranks 2 2" in captured.err
    assert "a) BOX: 2x2, 6 partitions" in captured.err
    assert "RUN SUMMARY" not in captured.out


@pytest.mark.parametrize(
    "argv",
    [
        ["chains", "0", "3"],
        ["chains", "4", "4", "--method", "phi"],
        ["phi", "8", "--trace", "1,2,0"],
        ["phi", "8", "--trace", "2,1"],
        ["phi", "8", "--trace", "9,0,0"],
        ["phi", "8", "--trace", "a,b,c"],
        ["greedy", "3", "8", "--rank", "24"],
        ["frobnicate", "3", "8"],
        ["chains", "3"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert cli.run(argv) == 2
    assert "usage error" in capsys.readouterr().err
