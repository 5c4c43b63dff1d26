import pytest

from dicritical import cli
from dicritical.catalog import load_golden
from dicritical.digraph import parse_dmat_blocks



def _k3_file(tmp_path):
    path = tmp_path / "k3.dmat"
    path.write_text(load_golden("K3_bidirected").to_dmat())
    return path


def test_check_k3(tmp_path, capsys):
    assert cli.main(["check", str(_k3_file(tmp_path))]) == cli.EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert "three_dicritical=true" in out
    assert "digon_forest=false" in out
    assert "candidate_filter=true" in out


def test_check_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.dmat"
    bad.write_text("3\n011\n1x1\n110\n")
    assert cli.main(["check", str(bad)]) == cli.EXIT_USAGE
    assert "line 3" in capsys.readouterr().err


def test_missing_file(tmp_path):
    assert cli.main(["check", str(tmp_path / "absent.dmat")]) == cli.EXIT_USAGE


def test_usage_errors(capsys):
    assert cli.main(["enumerate", "--max-acyclic", "8"]) == cli.EXIT_USAGE
    assert cli.main(["sweep-f", "--threads", "0"]) == cli.EXIT_USAGE
    with pytest.raises(SystemExit) as err:
        cli.main(["enumerate"])
    assert err.value.code == cli.EXIT_USAGE
    with pytest.raises(SystemExit) as err:
        cli.main(["no-such-command"])
    assert err.value.code == cli.EXIT_USAGE


def test_sweep_f_report(capsys):
    assert cli.main(["sweep-f", "--strict"]) == cli.EXIT_OK
    captured = capsys.readouterr()
    lines = captured.out.splitlines()
    assert lines[0] == "pipeline=sweep-f generation=survivors count=4"
    assert parse_dmat_blocks(captured.out) == [load_golden(f"T{i}") for i in range(1, 5)]
    assert captured.err == ""


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.txt"
    assert cli.main(["f-plus", "--strict", "--out", str(target)]) == cli.EXIT_OK
    assert capsys.readouterr().out == ""
    assert target.read_text() == "pipeline=f-plus generation=survivors count=0\nexamined=32\n"


def test_enumerate_report(capsys):
    assert cli.main(["enumerate", "--max-acyclic", "1", "--strict", "--verify-max-acyclic"]) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "pipeline=enumerate-1 generation=2 count=1 dicritical=0"
    assert "pipeline=enumerate-1 generation=3 count=1 dicritical=1" in out
    assert "verify-max-acyclic discrepancies=0" in out


def test_strict_mismatch_exit(monkeypatch, capsys):
    table = cli.load_expected()
    table["f-plus"] = {"examined": 31, "survivors": 0}
    monkeypatch.setattr(cli, "load_expected", lambda: table)
    assert cli.main(["f-plus", "--strict"]) == cli.EXIT_MISMATCH
    assert "mismatch" in capsys.readouterr().err
    assert cli.main(["f-plus"]) == cli.EXIT_OK


def test_density_suite(capsys):
    assert cli.main(["density-suite", "--strict"]) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert "matchpath_lemma=true" in out
    assert "digraph=W3 arcs=9 arc_bound=false digon_forest=true" in out


def test_run_config_validation():
    with pytest.raises(ValueError):
        cli.RunConfig("check").validate()
    with pytest.raises(ValueError):
        cli.RunConfig("enumerate", max_acyclic=0).validate()
    cli.RunConfig("enumerate", max_acyclic=7, threads=8).validate()
