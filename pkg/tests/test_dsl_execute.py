import pytest

from etcs.dsl import RunConfig, execute, exit_status, parse


def run(src, **cfg):
    reports, diags = execute(parse(src), RunConfig(**cfg))
    return reports, diags


def verdicts(reports):
    return [r.verdict for r in reports]


def test_associativity_on_a_triple():
    src = """
set X = {a, b}
set Y = {0, 1}
fn f : X -> Y = { a |-> 0, b |-> 1 }
fn g : Y -> X = { 0 |-> b, 1 |-> b }
fn h : X -> Y = { a |-> 1, b |-> 0 }
let F = funcset(Y, X)
assert h . g . f == h . g . f
"""
    reports, diags = run(src)
    assert verdicts(reports) == ["pass"] and not diags


def test_funcset_cardinality():
    reports, _ = run("set X = {a, b}\nset Y = {0, 1}\nassert |funcset(X, Y)| == 4\n")
    assert verdicts(reports) == ["pass"]


def test_false_equation_names_distinguishing_element():
    src = "set X = {a, b}\nset Y = {0, 1}\nfn f : X -> Y = { a |-> 0, b |-> 1 }\nfn g : X -> Y = { a |-> 0, b |-> 0 }\nassert f == g\n"
    reports, diags = run(src)
    (r,) = reports
    assert r.verdict == "fail" and r.witness == {"element": "b", "lhs": "1", "rhs": "0"}
    assert exit_status(reports, diags) == 1


def test_checks_delegate_to_verifier_and_clamp():
    reports, diags = run("check A6 size 3\ncheck all size 1\n")
    assert [r.axiom_id for r in reports] == ["A6"] + [f"A{k}" for k in range(1, 11)]
    assert "sets of size <= 2" in reports[0].instance
    assert [d.severity for d in diags] == ["warning"]
    assert exit_status(reports, diags) == 0


def test_default_check_size_comes_from_config():
    reports, _ = run("check A2", size=1)
    assert "size <= 1" in reports[0].instance


def test_execution_error_stops_and_is_located():
    src = "set X = {a, b}\nset Y = {0, 1}\nfn f : X -> Y = { a |-> 0, b |-> 0 }\nassert |X| == 2\nlet i = choice(f)\nassert |Y| == 2\n"
    reports, diags = run(src)
    assert verdicts(reports) == ["pass"]
    (d,) = diags
    assert (d.line, d.col) == (5, 1) and "NotSurjective" in d.message
    assert exit_status(reports, diags) == 2


def test_nat_bound_is_configurable():
    src = "set X = {p}\nfn r : X -> X = { p |-> p }\nlet x = recurse(r, p)\nassert x(50) == p\n"
    assert verdicts(run(src)[0]) == ["pass"]
    reports, diags = run(src, nat_bound=50)
    assert not reports and "BoundExceeded" in diags[0].message
    _, diags = run("let Z, q = integers(10)\n", nat_bound=20)
    assert "nat-bound" in diags[0].hint


def test_integers_in_scripts():
    src = "let Z, q = integers(10)\nassert |Z| == 21\nassert q(2, 5) == q(0, 3)\nassert q(2, 5) == q(0, 4)\n"
    assert verdicts(run(src)[0]) == ["pass", "pass", "fail"]


def test_value_outside_domain_at_runtime():
    src = "set X = {a}\nlet P, p, q = product(X, X)\nassert p(a, b) == a\n"
    _, diags = run(src)
    assert "not in domain" in diags[0].message and diags[0].line == 3


@pytest.mark.parametrize("workers", [1, 2])
def test_deterministic_reports(workers):
    src = "check A1, A5, A8 size 2\n"
    one, _ = run(src, workers=workers)
    two, _ = run(src, workers=workers)
    assert [r.to_dict() for r in one] == [r.to_dict() for r in two]
