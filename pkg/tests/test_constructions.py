import itertools

import pytest

from conftest import atom_set, sizes_upto
from etcs.constructions import (
    ProductCone,
    characteristic,
    classifier,
    curry,
    empty,
    factor_through,
    function_set,
    inverse_image,
    is_inverse_image,
    is_terminal,
    is_terminal_by_definition,
    mediate_product,
    product,
    right_inverse,
    terminal,
    uncurry,
)
from etcs.core import TERMINAL, FnMor, SetObj, all_functions, compose, count_functions, elements, identity, is_isomorphism
from etcs.errors import NotInFibre, NotInjective, NotSurjective, ShapeMismatch, UnsupportedInfinite
from etcs.nno import NatSystem
from etcs.values import FALSE, TRUE, UNIT, Atom, Graph, Nat, Pair, TagL

a, b = Atom("a"), Atom("b")
x, y = Atom("x"), Atom("y")
n0, n1, n2, n3 = (Nat(k) for k in range(4))


def test_terminal_examples():
    assert terminal() == SetObj([UNIT])
    assert count_functions(atom_set("a b c"), terminal()) == 1
    assert count_functions(empty(), terminal()) == 1
    assert is_terminal(terminal())
    assert not is_terminal(empty())
    assert not is_terminal(atom_set("a b"))
    assert count_functions(terminal(), atom_set("a b")) == 2


def test_is_terminal_agrees_with_definition():
    probes = sizes_upto(3)
    for T in sizes_upto(3) + [terminal(), product(terminal(), terminal()).obj]:
        one = len(elements(T)) == 1
        assert is_terminal(T) == one == is_terminal_by_definition(T, probes)


def test_empty_examples():
    assert empty() == SetObj()
    assert elements(empty()) == []
    assert count_functions(empty(), atom_set("a b")) == 1


def test_product_examples():
    P = product(SetObj([a]), SetObj([n0, n1]))
    assert P.obj.elements == (Pair(a, n0), Pair(a, n1))
    X = atom_set("a b")
    P1 = product(X, terminal())
    assert is_isomorphism(FnMor(X, P1.obj, {v: Pair(v, UNIT) for v in X})) is not None
    assert product(empty(), X).obj == SetObj()


def test_mediate_product_examples():
    I = SetObj([Atom("t0")])
    X, Y = SetObj([a]), SetObj([n0])
    cone = product(X, Y)
    m = mediate_product(cone, FnMor(I, X, {Atom("t0"): a}), FnMor(I, Y, {Atom("t0"): n0}))
    assert m.values == (Pair(a, n0),)
    cone = product(atom_set("a b"), SetObj([n0, n1]))
    assert mediate_product(cone, cone.pr1, cone.pr2) == identity(cone.obj)
    E = empty()
    assert mediate_product(cone, FnMor(E, cone.left, {}), FnMor(E, cone.right, {})).values == ()


def test_product_cardinality_and_uniqueness():
    for X, Y in itertools.product(sizes_upto(3), repeat=2):
        cone = product(X, Y)
        assert len(cone.obj) == len(X) * len(Y)
        for I in sizes_upto(2, "uv"):
            for f1 in all_functions(I, X):
                for f2 in all_functions(I, Y):
                    m = mediate_product(cone, f1, f2)
                    assert compose(cone.pr1, m) == f1 and compose(cone.pr2, m) == f2


def _relabelled(cone: ProductCone) -> ProductCone:
    # same product, elements renamed by tagging
    P2 = SetObj(TagL(p) for p in cone.obj)
    back = {TagL(p): p for p in cone.obj}
    pr1 = FnMor(P2, cone.left, {q: cone.pr1(back[q]) for q in P2})
    pr2 = FnMor(P2, cone.right, {q: cone.pr2(back[q]) for q in P2})
    return ProductCone(P2, pr1, pr2)


def test_product_unique_up_to_unique_iso():
    for X, Y in itertools.product(sizes_upto(2), repeat=2):
        cone = product(X, Y)
        other = _relabelled(cone)
        isos = [
            i
            for i in all_functions(cone.obj, other.obj)
            if compose(other.pr1, i) == cone.pr1 and compose(other.pr2, i) == cone.pr2
        ]
        assert len(isos) == 1 and is_isomorphism(isos[0]) is not None


def test_function_set_examples_and_sizes():
    assert len(function_set(atom_set("a b"), SetObj([n0, n1])).obj) == 4
    assert len(function_set(empty(), atom_set("a b")).obj) == 1
    assert len(function_set(SetObj([a]), empty()).obj) == 0
    for X, Y in itertools.product(sizes_upto(4), repeat=2):
        fs = function_set(X, Y)
        assert len(fs.obj) == len(Y) ** len(X)
        if len(fs.obj) <= 256:
            assert len(fs.obj.elements) == count_functions(X, Y)


def test_curry_examples():
    X, Y = atom_set("a b"), SetObj([n0, n1])
    f = FnMor(X, Y, {a: n1, b: n0})
    fs = function_set(X, Y)
    oneX = product(TERMINAL, X).obj
    q = FnMor(oneX, Y, {p: f(p.right) for p in oneX})
    assert curry(q, fs).values == (Graph(f.table.items()),)
    E = empty()
    fsE = function_set(E, Y)
    I = atom_set("u v")
    qE = FnMor(product(I, E).obj, Y, {})
    assert curry(qE, fsE, I).values == (Graph([]), Graph([]))
    with pytest.raises(ShapeMismatch):
        curry(qE, fsE)


def test_uncurry_examples():
    X = SetObj([n0, n1])
    fs = function_set(X, X)
    I = atom_set("u v")
    ident = Graph([(n0, n0), (n1, n1)])
    q = uncurry(FnMor(I, fs.obj, {t: ident for t in I}), fs)
    assert all(q(p) == p.right for p in q.dom)
    E = empty()
    assert uncurry(FnMor(E, fs.obj, {}), fs).values == ()


def test_curry_uncurry_bijection():
    for I, X, Y in itertools.product(sizes_upto(2), sizes_upto(2, "xy"), sizes_upto(2, "pq")):
        fs = function_set(X, Y)
        IX = product(I, X).obj
        for q in all_functions(IX, Y):
            assert uncurry(curry(q, fs, I), fs) == q
        for qbar in all_functions(I, fs.obj):
            assert curry(uncurry(qbar, fs), fs, I) == qbar


def test_inverse_image_examples():
    X = SetObj([n1, n2, n3])
    f = FnMor(X, SetObj([x, y]), {n1: x, n2: x, n3: y})
    assert inverse_image(f, x).obj == SetObj([n1, n2])
    g = FnMor(X, SetObj([x, y]), {n1: x, n2: x, n3: x})
    assert inverse_image(g, y).obj == SetObj()
    for v in X:
        assert inverse_image(identity(X), v).obj == SetObj([v])


def test_factor_through_examples():
    X = SetObj([n1, n2, n3])
    f = FnMor(X, SetObj([x, y]), {n1: x, n2: x, n3: y})
    cone = inverse_image(f, x)
    T = SetObj([Atom("t0")])
    q = FnMor(T, X, {Atom("t0"): n1})
    assert factor_through(cone, q).values == (n1,)
    assert compose(cone.incl, factor_through(cone, q)) == q
    with pytest.raises(NotInFibre) as e:
        factor_through(cone, FnMor(T, X, {Atom("t0"): n3}))
    assert e.value.t == Atom("t0")
    assert factor_through(cone, FnMor(empty(), X, {})).values == ()


def _is_inverse_image_by_definition(j, f, yv) -> bool:
    # f . j constant at y, and every q with f . q constant at y factors uniquely through j
    if any(f(v) != yv for v in j.values):
        return False
    for I in sizes_upto(2, "uv"):
        for q in all_functions(I, f.dom):
            if any(f(v) != yv for v in q.values):
                continue
            if sum(1 for qb in all_functions(I, j.dom) if compose(j, qb) == q) != 1:
                return False
    return True


def test_is_inverse_image_matches_universal_property():
    for A, X in itertools.product(sizes_upto(2, "uv"), sizes_upto(2)):
        for Y in sizes_upto(2, "pq")[1:]:
            for f in all_functions(X, Y):
                for j in all_functions(A, X):
                    for yv in Y:
                        assert is_inverse_image(j, f, yv) == _is_inverse_image_by_definition(j, f, yv)


def test_classifier_examples():
    cl = classifier()
    assert cl.two == SetObj([FALSE, TRUE])
    assert len(elements(cl.two)) == 2
    assert cl.truth_value == TRUE


def test_characteristic_examples():
    X = atom_set("a b")
    assert characteristic(FnMor(SetObj([a]), X, {a: a})).table == {a: TRUE, b: FALSE}
    u, v = Atom("u"), Atom("v")
    UV = SetObj([u, v])
    assert set(characteristic(FnMor(UV, X, {u: b, v: a})).values) == {TRUE}
    with pytest.raises(NotInjective) as e:
        characteristic(FnMor(UV, X, {u: a, v: a}))
    assert (e.value.a, e.value.a2) == (u, v)


def test_classifier_uniqueness_by_enumeration():
    cl = classifier()
    for A, X in itertools.product(sizes_upto(3, "uvw"), sizes_upto(3)):
        for j in all_functions(A, X):
            if not j.is_injective():
                continue
            chis = [chi for chi in all_functions(X, cl.two) if inverse_image(chi, TRUE).obj == SetObj(j.values)]
            assert chis == [characteristic(j)]


def test_right_inverse_examples():
    X = SetObj([n1, n2, n3])
    s = FnMor(X, SetObj([x, y]), {n1: x, n2: x, n3: y})
    assert right_inverse(s).table == {x: n1, y: n3}
    assert right_inverse(identity(X)) == identity(X)
    s2 = FnMor(SetObj([n1, n2]), SetObj([x, y]), {n1: x, n2: x})
    with pytest.raises(NotSurjective) as e:
        right_inverse(s2)
    assert e.value.y == y


def test_infinite_sets_rejected():
    N = NatSystem(10)
    with pytest.raises(UnsupportedInfinite):
        product(N, atom_set("a"))
    with pytest.raises(UnsupportedInfinite):
        function_set(atom_set("a"), N)
