"""Sets, functions, composition and identities, plus the element view.

A :class:`SetObj` is a canonically ordered, duplicate-free tuple of values; two
sets are equal exactly when those tuples agree. A :class:`FnMor` is a total
table from its domain into an explicitly stored codomain. Elements of ``X`` are
the functions ``1 -> X`` out of the canonical terminal set ``{()}``, and
evaluating ``f`` at ``x`` is ``compose(f, x)``.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Iterator, Mapping

from .errors import BoundaryMismatch, CompositionMismatch, NotAnElement
from .values import UNIT, Graph, Value

__all__ = [
    "SetObj",
    "FunctionSpace",
    "FnMor",
    "TERMINAL",
    "compose",
    "identity",
    "elements",
    "element",
    "evaluate",
    "fn_equal",
    "is_isomorphism",
    "all_functions",
    "count_functions",
]


class SetObj:
    """A finite set of values in canonical order."""

    __slots__ = ("_elements", "_members")

    def __init__(self, elements: Iterable[Value] = ()):
        elems = list(elements)
        for e in elems:
            if not isinstance(e, Value):
                raise TypeError(f"set elements must be Values, got {type(e).__name__}")
        uniq = {e._key: e for e in elems}
        self._elements = tuple(uniq[k] for k in sorted(uniq))
        self._members = None

    @classmethod
    def _trusted(cls, elements: tuple) -> "SetObj":
        # elements must already be strictly ascending
        s = cls.__new__(cls)
        s._elements = elements
        s._members = None
        return s

    @property
    def elements(self) -> tuple[Value, ...]:
        return self._elements

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[Value]:
        return iter(self.elements)

    def __contains__(self, v) -> bool:
        if self._members is None:
            self._members = frozenset(self._elements)
        return v in self._members

    def _bounds(self):
        if not self._elements:
            return None, None
        return self._elements[0], self._elements[-1]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, SetObj):
            return NotImplemented
        if len(self) != len(other):
            return False
        if isinstance(other, FunctionSpace) and not isinstance(self, FunctionSpace):
            return other == self
        return self.elements == other.elements

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        # length and extreme elements only, so lazily enumerated sets hash without enumeration
        return hash((len(self),) + self._bounds())

    def __repr__(self):
        return f"SetObj({list(self.elements)!r})"

    def __str__(self):
        return "{" + ", ".join(str(e) for e in self.elements) + "}"


class FunctionSpace(SetObj):
    """All graphs of total functions ``dom -> cod``, enumerated on demand.

    Membership and size are answered without enumeration, which lets the
    quotient construction curry into ``2^X`` for sets far too large to list.
    """

    __slots__ = ("dom", "cod")

    ENUMERATION_LIMIT = 1 << 20

    def __init__(self, dom: SetObj, cod: SetObj):
        self.dom = dom
        self.cod = cod
        self._elements = None
        self._members = None

    @property
    def elements(self) -> tuple[Value, ...]:
        if self._elements is None:
            n = len(self)
            if n > self.ENUMERATION_LIMIT:
                raise OverflowError(f"function set with {n} elements is too large to enumerate")
            xs = self.dom.elements
            self._elements = tuple(
                Graph._sorted(tuple(zip(xs, ys)))
                for ys in itertools.product(self.cod.elements, repeat=len(xs))
            )
        return self._elements

    def __len__(self) -> int:
        return len(self.cod) ** len(self.dom)

    def __contains__(self, v) -> bool:
        if not isinstance(v, Graph) or len(v.entries) != len(self.dom):
            return False
        return all(x == d for (x, _), d in zip(v.entries, self.dom.elements)) and all(
            y in self.cod for _, y in v.entries
        )

    def _bounds(self):
        if len(self) == 0:
            return None, None
        xs = self.dom.elements
        lo, hi = self.cod.elements[:1], self.cod.elements[-1:]
        return (
            Graph._sorted(tuple((x, lo[0]) for x in xs)),
            Graph._sorted(tuple((x, hi[0]) for x in xs)),
        )

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, SetObj):
            return NotImplemented
        n = len(self)
        if n != len(other):
            return False
        if n <= 1:
            return self.elements == other.elements
        if isinstance(other, FunctionSpace):
            # with two or more graphs, the graphs determine both boundary sets
            return self.dom == other.dom and self.cod == other.cod
        return all(v in self for v in other.elements)

    def __hash__(self):
        return SetObj.__hash__(self)

    def __repr__(self):
        return f"FunctionSpace({self.dom!r}, {self.cod!r})"

    def __str__(self):
        if len(self) <= 16:
            return SetObj.__str__(self)
        return f"{self.cod}^{self.dom}"


TERMINAL = SetObj._trusted((UNIT,))


class FnMor:
    """A function ``dom -> cod`` given by its full table.

    ``table`` may be a mapping or an iterable of ``(x, y)`` pairs. It must be
    defined on exactly the elements of ``dom`` and land in ``cod``.
    """

    __slots__ = ("dom", "cod", "values", "_map", "_hash")

    def __init__(self, dom: SetObj, cod: SetObj, table: Mapping[Value, Value] | Iterable):
        if not isinstance(dom, SetObj) or not isinstance(cod, SetObj):
            raise TypeError("domain and codomain must be SetObj")
        mapping = dict(table.items() if isinstance(table, Mapping) else table)
        extra = [x for x in mapping if x not in dom]
        if extra:
            raise BoundaryMismatch(f"table has entries outside the domain: {extra[0]}")
        missing = [x for x in dom.elements if x not in mapping]
        if missing:
            raise BoundaryMismatch(f"table is not total: no value at {missing[0]}")
        values = tuple(mapping[x] for x in dom.elements)
        for x, y in zip(dom.elements, values):
            if y not in cod:
                raise BoundaryMismatch(f"value {y} at {x} is not in the codomain {cod}")
        self.dom = dom
        self.cod = cod
        self.values = values
        self._map = None
        self._hash = None

    @classmethod
    def _trusted(cls, dom: SetObj, cod: SetObj, values: tuple) -> "FnMor":
        f = cls.__new__(cls)
        f.dom = dom
        f.cod = cod
        f.values = values
        f._map = None
        f._hash = None
        return f

    @classmethod
    def from_callable(cls, dom: SetObj, cod: SetObj, fn: Callable[[Value], Value]) -> "FnMor":
        return cls(dom, cod, {x: fn(x) for x in dom.elements})

    @property
    def table(self) -> dict[Value, Value]:
        if self._map is None:
            self._map = dict(zip(self.dom.elements, self.values))
        return self._map

    def __call__(self, x: Value) -> Value:
        try:
            return self.table[x]
        except KeyError:
            raise NotAnElement(f"{x} is not an element of {self.dom}") from None

    def image(self) -> set[Value]:
        return set(self.values)

    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def is_surjective(self) -> bool:
        return len(set(self.values)) == len(self.cod)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FnMor):
            return NotImplemented
        return self.values == other.values and self.dom == other.dom and self.cod == other.cod

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.values, self.dom, self.cod))
        return self._hash

    def __repr__(self):
        return f"FnMor({self.dom}, {self.cod}, {self})"

    def __str__(self):
        return "[" + ", ".join(f"{x}->{y}" for x, y in zip(self.dom.elements, self.values)) + "]"


def compose(g: FnMor, f: FnMor) -> FnMor:
    """``g . f``: first ``f``, then ``g``."""
    if f.cod is not g.dom and f.cod != g.dom:
        raise CompositionMismatch(f.cod, g.dom)
    gt = g.table
    return FnMor._trusted(f.dom, g.cod, tuple(gt[v] for v in f.values))


def identity(X: SetObj) -> FnMor:
    return FnMor._trusted(X, X, X.elements)


def elements(X: SetObj) -> list[FnMor]:
    return [FnMor._trusted(TERMINAL, X, (x,)) for x in X.elements]


def element(X: SetObj, v: Value) -> FnMor:
    """The element ``1 -> X`` picking out ``v``."""
    if v not in X:
        raise NotAnElement(f"{v} is not an element of {X}")
    return FnMor._trusted(TERMINAL, X, (v,))


def evaluate(f: FnMor, x: FnMor) -> FnMor:
    if x.dom != TERMINAL:
        raise NotAnElement(f"{x!r} is not an element: its domain is not the terminal set")
    return compose(f, x)


def fn_equal(f: FnMor, g: FnMor) -> bool:
    if f.dom != g.dom or f.cod != g.cod:
        raise BoundaryMismatch(
            f"functions are not parallel: {f.dom} -> {f.cod} vs {g.dom} -> {g.cod}"
        )
    by_elements = all(evaluate(f, x) == evaluate(g, x) for x in elements(f.dom))
    by_table = f.values == g.values
    assert by_elements == by_table, "extensional and table equality disagree"
    return by_table


def is_isomorphism(f: FnMor) -> FnMor | None:
    """The inverse of ``f`` if there is one, else ``None``."""
    if len(f.dom) != len(f.cod) or not f.is_injective():
        return None
    back = {y: x for x, y in zip(f.dom.elements, f.values)}
    inv = FnMor._trusted(f.cod, f.dom, tuple(back[y] for y in f.cod.elements))
    assert compose(inv, f) == identity(f.dom) and compose(f, inv) == identity(f.cod)
    return inv


def all_functions(X: SetObj, Y: SetObj) -> Iterator[FnMor]:
    """Every function ``X -> Y``, in lexicographic order of their tables."""
    for values in itertools.product(Y.elements, repeat=len(X)):
        yield FnMor._trusted(X, Y, values)


def count_functions(X: SetObj, Y: SetObj) -> int:
    return len(Y) ** len(X)
