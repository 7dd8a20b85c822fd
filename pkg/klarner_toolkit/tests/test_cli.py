import json
from fractions import Fraction

import pytest

from klarner.cli import run
from klarner.parsers import parse_counts
from klarner.sequences import compute_u


@pytest.fixture
def toy_counts(tmp_path):
    path = tmp_path / "double_prime.txt"
    path.write_text("# toy table\n1 1\n2 2\n3 6\n4 16\n", encoding="utf-8")
    return str(path)


def test_enumerate_tsv(capsys):
    assert run(["enumerate", "--max", "4", "--format", "tsv", "--workers", "1"]) == 0
    assert capsys.readouterr().out == "1\t1\n2\t2\n3\t6\n4\t19\n"


def test_enumerate_text(capsys):
    assert run(["enumerate", "--max", "3", "--workers", "1"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "P(n) for n = 1..3 (enumerated)"
    assert out.splitlines()[-1].split() == ["3", "6"]


def test_enumerate_over_limit_is_usage_error(capsys):
    assert run(["enumerate", "--max", "17"]) == 2
    assert "limit" in capsys.readouterr().err


def test_derive_q_from_table_and_direct(capsys):
    assert run(["derive-q", "--max", "6", "--format", "tsv"]) == 0
    derived = capsys.readouterr().out
    assert derived == "1\t1\n2\t1\n3\t3\n4\t8\n5\t24\n6\t76\n"
    assert run(["derive-q", "--direct", "--max", "6", "--format", "tsv"]) == 0
    assert capsys.readouterr().out == derived


def test_json_output_round_trips(capsys):
    assert run(["derive-q", "--format", "json"]) == 0
    table = parse_counts(capsys.readouterr().out)
    assert table.max_n == 40
    assert table[12] == 138402


def test_verify_on_bundled_table_reports_checks(capsys):
    assert run(["verify"]) == 1
    assert capsys.readouterr().out.splitlines() == [
        "n_0 = 40",
        "P[n]/P[n-1] is increasing: True",
        "Q[n]/P[n] is decreasing: True",
        "g(0.24307) <= 2 - 2*sqrt(R): False",
        "g(0.24308) <= 2 - 2*sqrt(R): False",
    ]


def test_verify_fails_on_toy_table(toy_counts, capsys):
    assert run(["verify", "--counts", toy_counts]) == 1
    out = capsys.readouterr().out
    assert "n_0 = 4\n" in out
    assert "P[n]/P[n-1] is increasing: False\n" in out


def test_bound_upper_json(capsys):
    assert run(["bound-upper", "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["theta"] == "0.24183"
    assert report["lambda_upper"] == "4.1352"
    assert report["lambda_lower"] == "3.9627"
    assert report["n0"] == 40


def test_bound_upper_text_with_cutoff(capsys):
    assert run(["bound-upper", "--n0", "10"]) == 0
    out = capsys.readouterr().out
    assert "theta = 0.22806\n" in out
    assert out.startswith("n_0 = 10\n")


def test_bound_lower_text(capsys):
    assert run(["bound-lower"]) == 0
    out = capsys.readouterr().out
    assert "lambda > 3.9627" in out
    assert "lambda >= 3.5981" in out
    assert "P supermultiplicative up to n: True" in out


def test_u_seq_tsv(toy_counts, capsys):
    assert run(["u-seq", "--counts", toy_counts, "--max", "6", "--format", "tsv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[4] == "5\t48"
    assert lines[5] == "6\t1712/11"


def test_u_seq_text(toy_counts, capsys):
    assert run(["u-seq", "--counts", toy_counts, "--max", "5"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("n_0 = 4, R = 5/16\n")
    assert "U(5)^(1/5) >= 2.1689" in out


def test_u_seq_json_far_past_cutoff(bundled_p, bundled_q, capsys):
    # scaled numerators pass Python's default 4300-digit str limit well before n = 250
    assert run(["u-seq", "--n0", "40", "--max", "250", "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["n_max"] == 250
    expected = compute_u(bundled_p, bundled_q, n0=40, n_max=250)
    assert Fraction(report["values"]["250"]) == expected[250]


def test_compositions_command(capsys):
    assert run(["compositions", "0,0", "5,5"]) == 0
    out = capsys.readouterr().out
    assert "2 compositions (at most 4)" in out
    assert "0,0 0,1\n" in out and "0,0 1,0\n" in out


def test_decompose_command(capsys):
    assert run(["decompose", "0,0 0,1", "--format", "json"]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["size_a"] == 1


def test_bad_polyomino_is_usage_error(capsys):
    assert run(["decompose", "0,0 2,2"]) == 2
    assert "disconnected" in capsys.readouterr().err


def test_missing_counts_file(tmp_path, capsys):
    assert run(["verify", "--counts", str(tmp_path / "nope.tsv")]) == 2
    assert "not found" in capsys.readouterr().err


def test_malformed_counts_file(tmp_path, capsys):
    path = tmp_path / "bad.tsv"
    path.write_text("1 1\n3 6\n", encoding="utf-8")
    assert run(["bound-upper", "--counts", str(path)]) == 2
    assert "non-contiguous" in capsys.readouterr().err


def test_usage_errors():
    assert run(["frobnicate"]) == 2
    assert run(["bound-upper", "--digits", "many"]) == 2


def test_environment_override(monkeypatch, capsys):
    monkeypatch.setenv("KLARNER_N0", "20")
    assert run(["bound-upper", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["theta"] == "0.23739"
    # flags win over the environment
    assert run(["bound-upper", "--format", "json", "--n0", "30"]) == 0
    assert json.loads(capsys.readouterr().out)["theta"] == "0.24037"


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.yaml"
    cfg.write_text("digits: 3\noutput_format: json\n", encoding="utf-8")
    assert run(["bound-upper", "--config", str(cfg)]) == 0
    assert json.loads(capsys.readouterr().out)["theta"] == "0.241"
