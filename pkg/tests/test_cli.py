"""CLI behavior: subcommands, exit codes, deterministic emission."""

import json

import pytest

from folcheck.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list(capsys):
    code, out, _ = run_cli(capsys, "list", "--filter", "appendix")
    assert code == 0
    assert "lemma-a3" in out and "lemma-a8" in out


def test_verify_pass_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "thm-4.2-wedge2", "eq-4.1")
    assert code == 0
    assert out.count("PASS") == 2


def test_verify_unknown_exit_two(capsys):
    code, _, err = run_cli(capsys, "verify", "zzz-nothing")
    assert code == 2
    assert "unknown case id" in err


def test_verify_filter_all(capsys):
    code, out, _ = run_cli(capsys, "verify", "all", "--filter",
                           "legendrian-trivial", "--json")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 4
    assert all(r["status"] == "pass" for r in reports)


def test_bulk_verify_defaults_to_fast_tier(capsys):
    code, out, _ = run_cli(capsys, "verify", "all", "--filter", "grassmann",
                           "--json")
    assert code == 0
    reports = json.loads(out)
    assert reports and all(r["tier"] == "fast" for r in reports)
    code, out, _ = run_cli(capsys, "list", "--filter", "grassmann",
                           "--tier", "slow")
    assert code == 0
    assert "eq-4.2" in out


def test_json_output_is_deterministic(capsys):
    args = ("verify", "pencil-agreement", "--json")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "wall_ms" not in out1


def test_timing_flag_adds_wall_clock(capsys):
    code, out, _ = run_cli(capsys, "verify", "thm-4.2-wedge2", "--json",
                           "--timing")
    assert code == 0
    assert "wall_ms" in out


def test_decompose(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--rs", "A7", "--weight",
                           "0,0,1,0,0,0,0", "--functor", "wedge2")
    assert code == 0
    assert "V[0,0,0,0,0,1,0]" in out
    assert "total dim 1540" in out


def test_decompose_bad_weight(capsys):
    code, _, err = run_cli(capsys, "decompose", "--rs", "A7",
                           "--weight", "1,2")
    assert code == 2
    assert "coordinates" in err


def test_forms_roundtrip(tmp_path, capsys):
    payload = {
        "n": 3,
        "terms": [
            {"mono": [1, 0, 0, 0], "dx": [1], "coeff": "1"},
            {"mono": [0, 1, 0, 0], "dx": [0], "coeff": "-1"},
        ],
    }
    path = tmp_path / "form.json"
    path.write_text(json.dumps(payload))
    code, out, _ = run_cli(capsys, "forms", "integrable", "--input", str(path))
    assert code == 0
    assert json.loads(out)["integrable"] is True

    code, out, _ = run_cli(capsys, "forms", "psi", "--input", str(path))
    assert code == 0
    assert json.loads(out)["zero"] is True


def test_forms_missing_file_is_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["forms", "integrable", "--input", "/nonexistent/f.json"])
    assert excinfo.value.code == 2
    assert "cannot read" in capsys.readouterr().err


def test_pencil_subcommand(capsys):
    code, out, _ = run_cli(capsys, "pencil", "verify", "--partition", "2,1,1",
                           "--values", "3,3,3")
    assert code == 0
    data = json.loads(out)
    assert data["divides"] and data["y"] == [
        {"outer": [[2], [4]], "coeff": "1"}]


def test_extalg_subcommands(capsys):
    code, out, _ = run_cli(capsys, "extalg", "hw", "--tag", "w24")
    assert code == 0
    assert json.loads(out)["weight_content"] == [2, 2, 1, 1]
    code, out, _ = run_cli(capsys, "extalg", "rank", "--tag", "w6")
    assert code == 0
    assert json.loads(out)["rank"] == 20


def test_usage_error_exit_two():
    with pytest.raises(SystemExit) as excinfo:
        main(["verify", "--no-such-flag"])
    assert excinfo.value.code == 2
