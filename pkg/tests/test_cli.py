"""Command-line surface: output shapes and exit codes."""

import json
import os

from qhecke.cli import main

DATA = os.path.join(os.path.dirname(__file__), "data")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_hurwitz(capsys):
    code, out, _ = run(capsys, "hurwitz", "23")
    assert code == 0 and "H(23) = 3" in out and "36" in out
    code, out, _ = run(capsys, "hurwitz", "0")
    assert code == 0 and "-1/12" in out


def test_series_human_and_json(capsys):
    code, out, _ = run(capsys, "series", "--family", "F:4,-1", "--order", "6")
    assert code == 0 and "3*q^3" in out
    code, out, _ = run(capsys, "series", "--family", "H:1,0", "--order", "3",
                       "--format", "json")
    assert code == 0
    js = json.loads(out)
    assert set(js) == {"min_exp", "order", "coeffs"}
    assert js["coeffs"][0] == "-1/12"


def test_series_bivariate_json(capsys):
    code, out, _ = run(capsys, "series", "--family", "F8z", "--order", "3",
                       "--format", "json")
    assert code == 0
    js = json.loads(out)
    # per-q-exponent Laurent polynomials keyed by z-exponent
    assert js["coeffs"][0] == {"0": "1"}
    assert js["coeffs"][1] == {"-1": "1", "1": "1"}


def test_series_bad_family(capsys):
    code, _, err = run(capsys, "series", "--family", "nope", "--order", "3")
    assert code == 2 and "unknown family" in err
    code, _, err = run(capsys, "series", "--family", "F:5,1", "--order", "3")
    assert code == 2


def test_partitions(capsys):
    code, out, _ = run(capsys, "partitions", "--kind", "Q", "--n", "3", "--list")
    assert code == 0
    assert "Q(3) = 3" in out
    assert "1+1+1" in out and "1+2" in out


def test_verify_selected(capsys):
    code, out, _ = run(capsys, "verify", "--id", "hecke-A", "--order", "50")
    assert code == 0 and "pass" in out and "1/1 passed" in out


def test_verify_json_format(capsys):
    code, out, _ = run(capsys, "verify", "--id", "appell-hf4", "--order", "40",
                       "--format", "json")
    assert code == 0
    js = json.loads(out)
    assert js[0]["id"] == "appell-hf4" and js[0]["status"] == "pass"


def test_verify_csv_format(capsys):
    code, out, _ = run(capsys, "verify", "--id", "appell-hf4", "--order", "40",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "id,status,certified_order,ms,first_mismatch"


def test_verify_unknown_id(capsys):
    code, _, err = run(capsys, "verify", "--id", "nope")
    assert code == 2 and "unknown identity" in err


def test_verify_allow_fail_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--id", "mrel-f151-theta14")
    assert code == 0
    assert "allow-fail" in out


def test_config_file_sets_order(capsys, tmp_path, monkeypatch):
    conf = tmp_path / "qhecke.conf"
    conf.write_text("default_order = 42  # comment\njobs = 1\n")
    code, out, _ = run(capsys, "verify", "--id", "hecke-A",
                       "--config", str(conf))
    assert code == 0 and "    42" in out
    # CLI flag wins over the config value
    code, out, _ = run(capsys, "verify", "--id", "hecke-A",
                       "--config", str(conf), "--order", "35")
    assert code == 0 and "    35" in out


def test_oeis_command(capsys):
    code, out, _ = run(capsys, "oeis", "--seq", "A238872",
                       "--bfile", os.path.join(DATA, "b238872.txt"),
                       "--max", "100")
    assert code == 0 and "all 100" in out


def test_oeis_malformed_exit_two(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("1 one\n")
    code, _, err = run(capsys, "oeis", "--seq", "A238872",
                       "--bfile", str(f), "--max", "5")
    assert code == 2 and "line 1" in err


def test_oeis_mismatch_exit_one(capsys, tmp_path):
    f = tmp_path / "wrong.txt"
    f.write_text("1 2\n")
    code, out, _ = run(capsys, "oeis", "--seq", "A238872",
                       "--bfile", str(f), "--max", "5")
    assert code == 1 and "mismatch" in out


def test_ids_listing(capsys):
    code, out, _ = run(capsys, "ids")
    assert code == 0
    assert "hecke-hf8" in out and "allow-fail" in out
