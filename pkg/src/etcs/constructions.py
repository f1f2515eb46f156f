"""Universal constructions: terminal and empty sets, products, function sets,
inverse images, the subset classifier and right inverses of surjections.

Each construction is the canonical representative (``{()}``, sets of
``Pair`` values, sets of ``Graph`` values, literal subsets). The mediator
procedures here only produce the existence witness; uniqueness is checked by
enumeration in :mod:`etcs.verifier`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .core import (
    TERMINAL,
    FnMor,
    FunctionSpace,
    SetObj,
    all_functions,
    element,
)
from .errors import (
    BoundaryMismatch,
    NotAnElement,
    NotInFibre,
    NotInjective,
    NotSurjective,
    ShapeMismatch,
    UnsupportedInfinite,
)
from .values import FALSE, TRUE, Graph, Pair, Value

__all__ = [
    "ProductCone",
    "FunctionSetObj",
    "InverseImageCone",
    "ClassifierObj",
    "terminal",
    "is_terminal",
    "is_terminal_by_definition",
    "empty",
    "product",
    "mediate_product",
    "function_set",
    "curry",
    "uncurry",
    "inverse_image",
    "factor_through",
    "is_inverse_image",
    "classifier",
    "characteristic",
    "right_inverse",
]


def _need_finite(*sets) -> None:
    for S in sets:
        if isinstance(S, SetObj):
            continue
        if getattr(S, "is_infinite", False):
            raise UnsupportedInfinite(f"{S!r} is not a finite set")
        raise TypeError(f"expected a SetObj, got {type(S).__name__}")


def terminal() -> SetObj:
    return TERMINAL


def is_terminal(T: SetObj) -> bool:
    return len(T) == 1


def is_terminal_by_definition(T: SetObj, probes: Iterable[SetObj]) -> bool:
    """Exactly one function ``X -> T`` for every probe set ``X``."""
    return all(sum(1 for _ in all_functions(X, T)) == 1 for X in probes)


def empty() -> SetObj:
    return SetObj._trusted(())


@dataclass(frozen=True)
class ProductCone:
    obj: SetObj
    pr1: FnMor
    pr2: FnMor

    @property
    def left(self) -> SetObj:
        return self.pr1.cod

    @property
    def right(self) -> SetObj:
        return self.pr2.cod


def product(X: SetObj, Y: SetObj) -> ProductCone:
    _need_finite(X, Y)
    pairs = tuple(Pair(x, y) for x in X.elements for y in Y.elements)
    P = SetObj._trusted(pairs)
    pr1 = FnMor._trusted(P, X, tuple(p.left for p in pairs))
    pr2 = FnMor._trusted(P, Y, tuple(p.right for p in pairs))
    return ProductCone(P, pr1, pr2)


def mediate_product(cone: ProductCone, f1: FnMor, f2: FnMor) -> FnMor:
    """The pairing ``(f1, f2): I -> X x Y``, i.e. ``t |-> (f1(t), f2(t))``."""
    if f1.dom != f2.dom:
        raise BoundaryMismatch(f"pairing needs a common domain, got {f1.dom} and {f2.dom}")
    if f1.cod != cone.pr1.cod or f2.cod != cone.pr2.cod:
        raise BoundaryMismatch("pairing components do not land in the product's factors")
    values = tuple(Pair(a, b) for a, b in zip(f1.values, f2.values))
    for v in values:
        if v not in cone.obj:
            raise BoundaryMismatch(f"{v} is not an element of the product")
    return FnMor._trusted(f1.dom, cone.obj, values)


class FunctionSetObj:
    """``Y^X`` together with its evaluation map ``Y^X x X -> Y``."""

    def __init__(self, X: SetObj, Y: SetObj):
        self.dom = X
        self.cod = Y
        self.obj = FunctionSpace(X, Y)

    @cached_property
    def ev(self) -> FnMor:
        cone = product(self.obj, self.dom)
        return FnMor._trusted(cone.obj, self.cod, tuple(p.left(p.right) for p in cone.obj.elements))

    def __repr__(self):
        return f"FunctionSetObj({self.dom}, {self.cod})"


def function_set(X: SetObj, Y: SetObj) -> FunctionSetObj:
    _need_finite(X, Y)
    return FunctionSetObj(X, Y)


def _index_set(q: FnMor, X: SetObj, I: SetObj | None) -> SetObj:
    # recover I from a domain that should be exactly the canonical I x X
    if I is None:
        if len(X) == 0:
            raise ShapeMismatch("cannot recover the index set from an empty product; pass I")
        lefts = []
        for p in q.dom.elements:
            if not isinstance(p, Pair):
                raise ShapeMismatch(f"domain element {p} is not a pair")
            lefts.append(p.left)
        I = SetObj(lefts)
    if product(I, X).obj != q.dom:
        raise ShapeMismatch(f"domain {q.dom} is not the product of {I} and {X}")
    return I


def curry(q: FnMor, fs: FunctionSetObj, I: SetObj | None = None) -> FnMor:
    """``q: I x X -> Y`` to ``qbar: I -> Y^X`` with ``q(t, x) = qbar(t)(x)``.

    ``I`` is only needed when ``X`` is empty, where ``I x X`` forgets it.
    """
    if q.cod != fs.cod:
        raise ShapeMismatch(f"codomain {q.cod} differs from the function set's target {fs.cod}")
    I = _index_set(q, fs.dom, I)
    table = q.table
    xs = fs.dom.elements
    values = tuple(Graph._sorted(tuple((x, table[Pair(t, x)]) for x in xs)) for t in I.elements)
    return FnMor._trusted(I, fs.obj, values)


def uncurry(qbar: FnMor, fs: FunctionSetObj) -> FnMor:
    if qbar.cod != fs.obj:
        raise ShapeMismatch(f"codomain of {qbar} is not the function set {fs.obj}")
    P = product(qbar.dom, fs.dom).obj
    return FnMor._trusted(P, fs.cod, tuple(qbar(p.left)(p.right) for p in P.elements))


@dataclass(frozen=True)
class InverseImageCone:
    obj: SetObj
    incl: FnMor
    f: FnMor
    y: Value


def _element_value(S: SetObj, y) -> Value:
    if isinstance(y, FnMor):
        if y.dom != TERMINAL or y.cod != S:
            raise NotAnElement(f"{y!r} is not an element of {S}")
        return y.values[0]
    if y not in S:
        raise NotAnElement(f"{y} is not an element of {S}")
    return y


def inverse_image(f: FnMor, y: FnMor | Value) -> InverseImageCone:
    """The fibre ``{x | f(x) = y}`` as a literal subset with its inclusion."""
    yv = _element_value(f.cod, y)
    A = SetObj._trusted(tuple(x for x, v in zip(f.dom.elements, f.values) if v == yv))
    return InverseImageCone(A, FnMor._trusted(A, f.dom, A.elements), f, yv)


def factor_through(cone: InverseImageCone, q: FnMor) -> FnMor:
    """The unique ``qbar`` with ``q = incl . qbar``."""
    if q.cod != cone.incl.cod:
        raise BoundaryMismatch(f"{q} does not land in {cone.incl.cod}")
    f = cone.f
    for t, v in zip(q.dom.elements, q.values):
        if f(v) != cone.y:
            raise NotInFibre(t, v)
    return FnMor(q.dom, cone.obj, zip(q.dom.elements, q.values))


def is_inverse_image(j: FnMor, f: FnMor, y: Value) -> bool:
    """Whether ``j: A -> X`` is an inverse image of ``y`` under ``f: X -> Y``.

    For finite sets this holds exactly when ``j`` is injective with image the
    fibre of ``y``; the test suite checks that against the factorisation
    property itself.
    """
    if j.cod != f.dom:
        return False
    fibre = {x for x, v in zip(f.dom.elements, f.values) if v == y}
    return j.is_injective() and set(j.values) == fibre


@dataclass(frozen=True)
class ClassifierObj:
    two: SetObj
    truth: FnMor

    @property
    def truth_value(self) -> Value:
        return self.truth.values[0]


_TWO = SetObj._trusted((FALSE, TRUE))


def classifier() -> ClassifierObj:
    return ClassifierObj(_TWO, element(_TWO, TRUE))


def characteristic(j: FnMor) -> FnMor:
    """``chi: X -> 2`` sending exactly the image of the injection ``j`` to true."""
    seen: dict[Value, Value] = {}
    for a, v in zip(j.dom.elements, j.values):
        if v in seen:
            raise NotInjective(seen[v], a, v)
        seen[v] = a
    X = j.cod
    return FnMor._trusted(X, _TWO, tuple(TRUE if x in seen else FALSE for x in X.elements))


def right_inverse(s: FnMor) -> FnMor:
    """A section of the surjection ``s``: the least preimage of each element."""
    least: dict[Value, Value] = {}
    for x, y in zip(s.dom.elements, s.values):
        least.setdefault(y, x)
    for y in s.cod.elements:
        if y not in least:
            raise NotSurjective(y)
    return FnMor._trusted(s.cod, s.dom, tuple(least[y] for y in s.cod.elements))
