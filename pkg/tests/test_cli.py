import json

from etcs.dsl.cli import main


def test_nothing_to_do(capsys):
    assert main([]) == 2
    assert "nothing to do" in capsys.readouterr().err


def test_missing_file(capsys, tmp_path):
    assert main([str(tmp_path / "absent.etcs")]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_check_axioms_json(capsys):
    assert main(["--check-axioms", "--size", "1", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["version"] == 1 and len(doc["reports"]) == 18
    assert {r["verdict"] for r in doc["reports"]} == {"pass", "prefix-verified"}


def test_check_axioms_with_mutation_fails(capsys):
    assert main(["--check-axioms", "--size", "2", "--mutation", "break_curry"]) == 1
    lines = capsys.readouterr().out.splitlines()
    assert [ln.split()[0] for ln in lines if " fail " in ln] == ["A6"]


def test_timing_flag_prints_seconds(capsys):
    main(["--check-axioms", "--size", "1", "--timing"])
    assert "elapsed=-" not in capsys.readouterr().out


def test_script_errors_skip_suite(capsys, tmp_path):
    bad = tmp_path / "bad.etcs"
    bad.write_text("fn f : X -> X = {}\n")
    assert main([str(bad), "--check-axioms"]) == 2
    out = capsys.readouterr()
    assert out.out == "" and f"{bad}:1:8: error: unbound name 'X'" in out.err
