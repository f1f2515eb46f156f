"""One test per primary acceptance criterion; each prints a PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) or under pytest, where the
lines are repeated in the terminal summary.
"""

import itertools
import math
import random
import time

from conftest import record_criterion, sizes_upto
from golden_runner import FORMATS, run, scripts
from etcs import oracles
from etcs.constructions import (
    characteristic,
    classifier,
    curry,
    factor_through,
    function_set,
    inverse_image,
    is_inverse_image,
    is_terminal,
    mediate_product,
    product,
)
from etcs.core import all_functions, compose, elements, identity, is_isomorphism
from etcs.derived import build_integers, coproduct, indexed_product
from etcs.kernel import MUTATIONS
from etcs.nno import NatSystem, nat_arith
from etcs.values import Nat, Pair
from etcs.verifier import AXIOMS, check_all, check_axiom, mutate_and_check


def _criterion(name):
    def wrap(fn):
        def test():
            try:
                detail = fn()
            except AssertionError as e:
                record_criterion(name, False, str(e) or "assertion failed")
                raise
            record_criterion(name, True, detail or "")

        test.__name__ = fn.__name__
        return test

    return wrap


@_criterion("axiom suite: check all size 3 passes (A9 prefix-verified) in under 60 s")
def test_axiom_suite_under_a_minute():
    start = time.perf_counter()
    reports = check_all(3, ids=AXIOMS)
    elapsed = time.perf_counter() - start
    verdicts = {r.axiom_id: r.verdict for r in reports}
    assert verdicts.pop("A9") == "prefix-verified", "A9 not prefix-verified"
    assert set(verdicts.values()) == {"pass"}, f"failures: {verdicts}"
    assert elapsed < 60, f"took {elapsed:.1f}s"
    return f"{elapsed:.2f}s"


def _unique(candidates, predicate, constructed):
    hits = [c for c in candidates if predicate(c)]
    assert hits == [constructed], f"{len(hits)} mediators, constructed {constructed}"


@_criterion("uniqueness by counting: exactly one mediator per universal-property instance")
def test_uniqueness_by_counting():
    n = 0
    sets3 = sizes_upto(3)
    for X, Y, I in itertools.product(sets3, repeat=3):
        cone = product(X, Y)
        hs = list(all_functions(I, cone.obj))
        for f1 in all_functions(I, X):
            for f2 in all_functions(I, Y):
                m = mediate_product(cone, f1, f2)
                _unique(hs, lambda h: compose(cone.pr1, h) == f1 and compose(cone.pr2, h) == f2, m)
                n += 1
    sets2 = sizes_upto(2)
    for I, X, Y in itertools.product(sets2, repeat=3):
        fs = function_set(X, Y)
        IX = product(I, X)
        qbars = list(all_functions(I, fs.obj))
        for q in all_functions(IX.obj, Y):

            def transposes(qb, q=q):
                return all(qb(p.left)(p.right) == q(p) for p in IX.obj)

            _unique(qbars, transposes, curry(q, fs, I))
            n += 1
    for X, Y in itertools.product(sets3, repeat=2):
        for f in all_functions(X, Y):
            for y in Y:
                cone = inverse_image(f, y)
                for I in sets3:
                    qbars = list(all_functions(I, cone.obj))
                    for q in all_functions(I, X):
                        if all(f(v) == y for v in q.values):
                            _unique(qbars, lambda qb: compose(cone.incl, qb) == q, factor_through(cone, q))
                            n += 1
    cl = classifier()
    for A, X in itertools.product(sets3, repeat=2):
        chis = list(all_functions(X, cl.two))
        for j in all_functions(A, X):
            if j.is_injective():
                _unique(chis, lambda chi: is_inverse_image(j, chi, cl.truth_value), characteristic(j))
                n += 1
    return f"{n} instances"


@_criterion("cardinality laws for products, function sets, coproducts, right inverses, indexed products")
def test_cardinality_laws():
    for X, Y in itertools.product(sizes_upto(3), repeat=2):
        assert len(product(X, Y).obj) == len(X) * len(Y)
        assert len(coproduct(X, Y)[0]) == len(X) + len(Y)
        idY = identity(Y)
        sections = list(all_functions(Y, X))
        for s in all_functions(X, Y):
            count = sum(1 for i in sections if compose(s, i) == idY)
            assert count == math.prod(oracles.fibre_sizes(X.elements, Y.elements, s.table))
            assert count == oracles.count_sections(X.elements, Y.elements, s.table)
    for X, Y in itertools.product(sizes_upto(4), repeat=2):
        fs = function_set(X, Y).obj
        assert len(fs) == len(Y) ** len(X)
        assert len(fs.elements) == len(list(oracles.tables(X.elements, Y.elements)))
    for X, I in itertools.product(sizes_upto(4), sizes_upto(3)):
        for p in all_functions(X, I):
            assert len(indexed_product(p)) == math.prod(oracles.fibre_sizes(X.elements, I.elements, p.table))
    return "sizes <= 3; function and indexed products to 4"


@_criterion("oracle equivalence: coproduct iso, quotient partitions, indexed product iso")
def test_oracle_equivalence():
    runs = [("coproduct-iso", 2), ("quotient-oracle", 4), ("indexed-product-iso", 4)]
    for check_id, size in runs:
        r = check_axiom(check_id, size)
        assert r.verdict == "pass", f"{check_id}: {r.witness}"
    return ", ".join(f"{c} at {s}" for c, s in runs)


@_criterion("classifier has two elements; is_terminal(T) iff |T| = 1 for |T| <= 3")
def test_classifier_and_terminal():
    assert len(elements(classifier().two)) == 2
    for T in sizes_upto(3):
        assert is_terminal(T) == (len(T) == 1)
        assert (sum(1 for _ in all_functions(sizes_upto(3)[2], T)) == 1) == (len(T) == 1)
    assert check_axiom("terminal-iff-one", 3).verdict == "pass"
    assert check_axiom("classifier-two", 3).verdict == "pass"


@_criterion("integers: 2B+1 classes for B in {3, 10}; (2,5) ~ (0,3) and not ~ (0,4)")
def test_integers():
    for B in (3, 10):
        Z, _ = build_integers(B)
        assert len(Z) == 2 * B + 1, f"B={B}: {len(Z)} classes"
    # (2, 5) needs naturals up to 5, so the identifications are read at B = 10
    _, q = build_integers(10)
    assert q(Pair(Nat(2), Nat(5))) == q(Pair(Nat(0), Nat(3)))
    assert q(Pair(Nat(2), Nat(5))) != q(Pair(Nat(0), Nat(4)))
    return "pairs checked at B = 10"


@_criterion("arithmetic by recursion: exhaustive below 50, 1000 random pairs under the bound")
def test_arithmetic():
    native = {"add": lambda m, n: m + n, "mul": lambda m, n: m * n, "pow": lambda m, n: m**n}
    small = NatSystem(50)
    count = 0
    for op, fn in native.items():
        for m, n in itertools.product(range(50), repeat=2):
            if fn(m, n) < 50:
                assert nat_arith(op, m, n, small) == fn(m, n), (op, m, n)
                count += 1
    sys = NatSystem()
    rng = random.Random(20261017)
    drawn = 0
    while drawn < 1000:
        op = rng.choice(sorted(native))
        m, n = rng.randrange(sys.bound), rng.randrange(sys.bound)
        if op == "pow":
            m, n = rng.randrange(2, 100), rng.randrange(2, 14)
        want = native[op](m, n)
        if not 50 <= want < sys.bound:
            continue
        assert nat_arith(op, m, n, sys) == want, (op, m, n)
        drawn += 1
    return f"{count} exhaustive, {drawn} random"


@_criterion("mutation sensitivity: every mutation fails with a witness; unmutated run clean")
def test_mutation_sensitivity():
    for mutation, (construction, _, _, target) in sorted(MUTATIONS.items()):
        r = mutate_and_check(construction, mutation)
        assert r.verdict == "fail" and r.witness, f"{mutation} undetected"
        failing = [x.axiom_id for x in check_all(3, mutation=mutation) if x.failed]
        assert failing == [target], f"{mutation}: failing {failing}"
    assert not any(r.failed for r in check_all(3))
    return f"{len(MUTATIONS)} mutations"


@_criterion("CLI determinism: golden text and json outputs and exit codes")
def test_cli_determinism():
    paths = scripts()
    assert len(paths) >= 10
    for path in paths:
        for fmt in FORMATS:
            proc = run(path, fmt)
            assert proc.stdout == path.with_suffix(f".{fmt}").read_text(encoding="utf-8"), f"{path.name} {fmt}"
            assert proc.returncode == int(path.with_suffix(".exit").read_text()), f"{path.name} exit"
    return f"{len(paths)} scripts x {len(FORMATS)} formats"


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
