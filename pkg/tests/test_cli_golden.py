import json

import pytest

from golden_runner import FORMATS, run, scripts

SCRIPTS = scripts()


def test_corpus_is_large_enough_and_covers_every_statement_kind():
    from etcs.dsl import parse_with_diagnostics
    from etcs.dsl.syntax import KINDS, AssertCard, AssertEq, AssertValue, CheckStmt, ConstructStmt, FnDecl, SetDecl

    assert len(SCRIPTS) >= 10
    seen, kinds = set(), set()
    for path in SCRIPTS:
        script, _ = parse_with_diagnostics(path.read_text(encoding="utf-8"))
        for s in script.statements if script else ():
            seen.add(type(s))
            if isinstance(s, ConstructStmt):
                kinds.add(s.kind)
    assert seen == {SetDecl, FnDecl, ConstructStmt, CheckStmt, AssertEq, AssertCard, AssertValue}
    assert kinds == set(KINDS)


@pytest.mark.parametrize("path", SCRIPTS, ids=lambda p: p.stem)
@pytest.mark.parametrize("fmt", FORMATS)
def test_golden_output(path, fmt):
    proc = run(path, fmt)
    assert proc.stdout == path.with_suffix(f".{fmt}").read_text(encoding="utf-8")
    assert proc.stderr == path.with_suffix(".stderr").read_text(encoding="utf-8")
    assert proc.returncode == int(path.with_suffix(".exit").read_text())
    again = run(path, fmt)
    assert (again.stdout, again.stderr, again.returncode) == (proc.stdout, proc.stderr, proc.returncode)
    if fmt == "json":
        assert json.loads(proc.stdout)["version"] == 1


@pytest.mark.parametrize("path", SCRIPTS, ids=lambda p: p.stem)
def test_exit_code_contract(path):
    code = int(path.with_suffix(".exit").read_text())
    text = path.with_suffix(".text").read_text(encoding="utf-8")
    stderr = path.with_suffix(".stderr").read_text(encoding="utf-8")
    has_error = ": error: " in stderr
    has_failure = any(" fail " in line for line in text.splitlines())
    assert code == (2 if has_error else 1 if has_failure else 0)


def test_stdin_matches_file():
    path = SCRIPTS[0]
    via_stdin = run(path, "text", stdin=True)
    assert via_stdin.stdout == path.with_suffix(".text").read_text(encoding="utf-8")
