"""Everyday set equipment assembled from the universal constructions.

Subsets are functions into the classifier; images, quotients, disjoint
unions, the integers and indexed products are all produced by composing the
primitives in :mod:`etcs.constructions`. Each has an independent direct
counterpart in :mod:`etcs.oracles` that the verifier compares against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .constructions import (
    characteristic,
    classifier,
    curry,
    factor_through,
    function_set,
    inverse_image,
    mediate_product,
    product,
)
from .core import TERMINAL, FnMor, SetObj, compose, identity, is_isomorphism
from .errors import BoundaryMismatch, NotEquivalence
from .nno import NatSystem, nat_arith, nat_set
from .values import TRUE, Pair, TagL, TagR, Value

__all__ = [
    "Subset",
    "EquivRelation",
    "CoproductBuild",
    "subset_from_injection",
    "image",
    "image_factorization",
    "factors_through_subset",
    "quotient",
    "coproduct",
    "coproduct_builds",
    "build_integers",
    "family_from_map",
    "indexed_product",
    "to_terminal",
    "not_map",
    "and_map",
    "or_map",
]


@dataclass(frozen=True)
class Subset:
    """A subset of ``ambient``, held as its characteristic map into ``2``."""

    ambient: SetObj
    chi: FnMor

    def __post_init__(self):
        if self.chi.dom != self.ambient or self.chi.cod != classifier().two:
            raise BoundaryMismatch("a subset's map must go from the ambient set to the classifier")

    @property
    def members(self) -> SetObj:
        return inverse_image(self.chi, classifier().truth).obj

    @classmethod
    def from_members(cls, ambient: SetObj, members: Iterable[Value]) -> "Subset":
        A = SetObj(members)
        return cls(ambient, characteristic(FnMor(A, ambient, {a: a for a in A})))


def subset_from_injection(j: FnMor) -> Subset:
    return Subset(j.cod, characteristic(j))


def image_factorization(f: FnMor) -> tuple[SetObj, FnMor, FnMor]:
    """``f = incl . e`` with ``e`` onto the image and ``incl`` the inclusion."""
    A = SetObj(f.values)
    e = FnMor._trusted(f.dom, A, f.values)
    incl = FnMor._trusted(A, f.cod, A.elements)
    return A, e, incl


def image(f: FnMor) -> Subset:
    _, _, incl = image_factorization(f)
    return Subset(f.cod, characteristic(incl))


def factors_through_subset(f: FnMor, S: Subset) -> bool:
    """Whether ``f`` lands inside ``S``."""
    return all(S.chi(v) == TRUE for v in f.values)


class EquivRelation:
    """A relation on ``carrier`` held as a subset of ``carrier x carrier``."""

    def __init__(self, carrier: SetObj, rel: Subset):
        if rel.ambient != product(carrier, carrier).obj:
            raise BoundaryMismatch("relation must be a subset of carrier x carrier")
        self.carrier = carrier
        self.rel = rel
        self._related: dict[Value, set[Value]] = {x: set() for x in carrier.elements}
        for p, v in zip(rel.chi.dom.elements, rel.chi.values):
            if v == TRUE:
                self._related[p.left].add(p.right)

    @classmethod
    def from_pairs(cls, carrier: SetObj, pairs: Iterable[tuple[Value, Value]]) -> "EquivRelation":
        P = product(carrier, carrier).obj
        return cls(carrier, Subset.from_members(P, (Pair(a, b) for a, b in pairs)))

    @classmethod
    def from_blocks(cls, carrier: SetObj, blocks: Iterable[Iterable[Value]]) -> "EquivRelation":
        pairs = []
        for block in blocks:
            block = list(block)
            pairs.extend((a, b) for a in block for b in block)
        return cls.from_pairs(carrier, pairs)

    def holds(self, x: Value, y: Value) -> bool:
        return y in self._related[x]

    def pairs(self) -> list[tuple[Value, Value]]:
        return [(x, y) for x in self.carrier.elements for y in sorted(self._related[x])]

    def check(self) -> None:
        """Raise :class:`NotEquivalence` naming the first failing law."""
        R = self._related
        xs = self.carrier.elements
        for x in xs:
            if x not in R[x]:
                raise NotEquivalence("reflexive", (x,))
        for x in xs:
            for y in sorted(R[x]):
                if x not in R[y]:
                    raise NotEquivalence("symmetric", (x, y))
        for x in xs:
            for y in sorted(R[x]):
                extra = R[y] - R[x]
                if extra:
                    raise NotEquivalence("transitive", (x, y, min(extra)))


def quotient(rel: EquivRelation) -> tuple[SetObj, FnMor]:
    """``X/~`` and the quotient map.

    Currying the relation's characteristic map ``X x X -> 2`` gives
    ``X -> 2^X``, sending each element to its class; the quotient is the image
    of that map.
    """
    rel.check()
    X = rel.carrier
    classes = curry(rel.rel.chi, function_set(X, classifier().two), I=X)
    Q, q, _ = image_factorization(classes)
    return Q, q


def to_terminal(X: SetObj) -> FnMor:
    return FnMor._trusted(X, TERMINAL, TERMINAL.elements * len(X))


def not_map() -> FnMor:
    cl = classifier()
    false_elt = FnMor._trusted(TERMINAL, cl.two, (cl.two.elements[0],))
    return characteristic(false_elt)


def and_map() -> FnMor:
    cl = classifier()
    both = mediate_product(product(cl.two, cl.two), cl.truth, cl.truth)
    return characteristic(both)


def or_map() -> FnMor:
    cl = classifier()
    P = product(cl.two, cl.two)
    neg = not_map()
    negated = mediate_product(P, compose(neg, P.pr1), compose(neg, P.pr2))
    return compose(neg, compose(and_map(), negated))


def _singletons(X: SetObj, fs) -> FnMor:
    # x |-> {x}: curry the characteristic map of the diagonal
    diag = mediate_product(product(X, X), identity(X), identity(X))
    return curry(characteristic(diag), fs, I=X)


def _empty_subset(X: SetObj, fs) -> FnMor:
    # the element of 2^X classifying the empty injection into 1 x X
    oneX = product(TERMINAL, X).obj
    nothing = FnMor._trusted(SetObj._trusted(()), oneX, ())
    return curry(characteristic(nothing), fs, I=TERMINAL)


@dataclass(frozen=True)
class CoproductBuild:
    obj: SetObj
    inl: FnMor
    inr: FnMor
    axiomatic_obj: SetObj
    axiomatic_inl: FnMor
    axiomatic_inr: FnMor
    iso: FnMor


def _tagged_union(X: SetObj, Y: SetObj) -> tuple[SetObj, FnMor, FnMor]:
    S = SetObj([TagL(x) for x in X] + [TagR(y) for y in Y])
    inl = FnMor._trusted(X, S, tuple(TagL(x) for x in X.elements))
    inr = FnMor._trusted(Y, S, tuple(TagR(y) for y in Y.elements))
    return S, inl, inr


def _axiomatic_union(X: SetObj, Y: SetObj) -> tuple[SetObj, FnMor, FnMor]:
    # inside 2^X x 2^Y: X goes to ({x}, {}) and Y goes to ({}, {y})
    two = classifier().two
    fX, fY = function_set(X, two), function_set(Y, two)
    P = product(fX.obj, fY.obj)
    eX, eY = _empty_subset(X, fX), _empty_subset(Y, fY)
    inl = mediate_product(P, _singletons(X, fX), compose(eY, to_terminal(X)))
    inr = mediate_product(P, compose(eX, to_terminal(Y)), _singletons(Y, fY))
    P22 = product(two, two)
    either = compose(or_map(), mediate_product(P22, characteristic(inl), characteristic(inr)))
    U = inverse_image(either, classifier().truth)
    return U.obj, factor_through(U, inl), factor_through(U, inr)


def coproduct_builds(X: SetObj, Y: SetObj) -> CoproductBuild:
    """Both disjoint unions and the comparison isomorphism between them.

    The comparison is the copairing of the axiomatic injections. It is unique
    because the tagged injections jointly cover the tagged union, and it is
    checked to be invertible.
    """
    S, inl, inr = _tagged_union(X, Y)
    U, ainl, ainr = _axiomatic_union(X, Y)
    covered = set(inl.values) | set(inr.values)
    assert covered == set(S.elements), "tagged injections must be jointly surjective"
    table = dict(zip(inl.values, ainl.values))
    table.update(zip(inr.values, ainr.values))
    iso = FnMor(S, U, table)
    assert is_isomorphism(iso) is not None, "the two disjoint unions are not isomorphic"
    assert compose(iso, inl) == ainl and compose(iso, inr) == ainr
    return CoproductBuild(S, inl, inr, U, ainl, ainr, iso)


def coproduct(X: SetObj, Y: SetObj) -> tuple[SetObj, FnMor, FnMor]:
    """``X + Y`` with its two injections (the tagged build, checked against the
    axiomatic one)."""
    b = coproduct_builds(X, Y)
    return b.obj, b.inl, b.inr


def build_integers(bound: int) -> tuple[SetObj, FnMor]:
    """Pairs ``(m, n)`` of naturals up to ``bound`` modulo ``m + n' = m' + n``.

    Sums are computed with the recursion-defined addition. Because the pairs
    are truncated at ``bound``, the classes are those of the truncated
    relation; there are ``2 * bound + 1`` of them.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    sys = NatSystem(2 * bound + 2)
    N = nat_set(sys, bound)
    P = product(N, N).obj
    rel = EquivRelation.from_pairs(
        P,
        (
            (a, b)
            for a in P.elements
            for b in P.elements
            if nat_arith("add", a.left.k, b.right.k, sys) == nat_arith("add", b.left.k, a.right.k, sys)
        ),
    )
    return quotient(rel)


def family_from_map(p: FnMor) -> list[tuple[Value, SetObj]]:
    """The fibres of ``p: X -> I``, one per element of ``I``."""
    return [(i, inverse_image(p, i).obj) for i in p.cod.elements]


def indexed_product(p: FnMor) -> SetObj:
    """The product of the fibres of ``p: X -> I``, as a subset of ``X^I``.

    It is the inverse image, under post-composition with ``p``
    (``X^I -> I^I``), of the element of ``I^I`` naming the identity.
    """
    X, I = p.dom, p.cod
    fX, fI = function_set(I, X), function_set(I, I)
    post = curry(compose(p, fX.ev), fI, I=fX.obj)
    ident = curry(product(TERMINAL, I).pr2, fI, I=TERMINAL)
    return inverse_image(post, ident).obj
