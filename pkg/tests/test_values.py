import pickle

import pytest
from hypothesis import given
from hypothesis import strategies as st

from etcs.values import FALSE, TRUE, UNIT, Atom, Bool, Graph, Nat, Pair, TagL, TagR, Unit, atoms

leaves = st.one_of(
    st.text("abcxyz", min_size=1, max_size=3).map(Atom),
    st.integers(0, 20).map(Nat),
    st.just(UNIT),
    st.booleans().map(Bool),
)
values = st.recursive(
    leaves,
    lambda inner: st.one_of(
        st.tuples(inner, inner).map(lambda p: Pair(*p)),
        inner.map(TagL),
        inner.map(TagR),
    ),
    max_leaves=6,
)


def test_constructor_rank_order():
    ordered = [Atom("z"), Nat(0), UNIT, FALSE, Pair(Atom("a"), Atom("a")), TagL(Atom("a")), TagR(Atom("a")), Graph([])]
    assert ordered == sorted(reversed(ordered))


def test_within_constructor_order():
    assert Atom("a") < Atom("b")
    assert Nat(2) < Nat(10)
    assert FALSE < TRUE
    assert Pair(Atom("a"), Nat(9)) < Pair(Atom("b"), Nat(0))
    assert Pair(Atom("a"), Nat(1)) < Pair(Atom("a"), Nat(2))


def test_display():
    assert str(Atom("a")) == "a"
    assert str(Nat(3)) == "#3"
    assert str(UNIT) == "()"
    assert (str(TRUE), str(FALSE)) == ("#t", "#f")
    assert str(Pair(Atom("a"), Nat(0))) == "(a, #0)"
    assert str(TagL(Atom("a"))) == "inl(a)" and str(TagR(Atom("a"))) == "inr(a)"
    assert str(Graph([(Atom("b"), Nat(1)), (Atom("a"), Nat(0))])) == "[a->#0, b->#1]"


def test_immutable():
    a = Atom("a")
    with pytest.raises(AttributeError):
        a.name = "b"


def test_graph_rejects_repeated_argument():
    with pytest.raises(ValueError):
        Graph([(Atom("a"), Nat(0)), (Atom("a"), Nat(1))])


def test_graph_lookup_and_sorted_constructor_agree():
    g = Graph([(Atom("b"), Nat(1)), (Atom("a"), Nat(0))])
    assert g(Atom("a")) == Nat(0)
    assert Graph._sorted(((Atom("a"), Nat(0)), (Atom("b"), Nat(1)))) == g


def test_bad_arguments():
    with pytest.raises(ValueError):
        Nat(-1)
    with pytest.raises(ValueError):
        Nat(True)
    with pytest.raises(TypeError):
        Atom("")


def test_atoms_helper():
    assert atoms("a b") == [Atom("a"), Atom("b")]


@given(values, values)
def test_order_is_total_and_consistent(x, y):
    assert (x < y) + (x == y) + (x > y) == 1
    assert (x == y) == (hash(x) == hash(y)) or x != y


@given(values)
def test_pickle_round_trip(v):
    assert pickle.loads(pickle.dumps(v)) == v


@given(st.lists(values, max_size=8))
def test_sorting_is_deterministic(vs):
    assert sorted(vs) == sorted(reversed(vs))
    assert [v.key for v in sorted(vs)] == sorted(v.key for v in vs)
