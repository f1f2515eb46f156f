"""Element universe for finite sets.

Every element of every set the kernel builds is a :class:`Value`. Values are
immutable, hashable and carry a precomputed sort key, so comparing two of
them is a plain tuple comparison. Constructors are ranked in the order

    Atom < Nat < Unit < Bool < Pair < TagL < TagR < Graph

and values of one constructor compare recursively on their fields.
"""

from __future__ import annotations

from typing import Iterable

__all__ = [
    "Value",
    "Atom",
    "Nat",
    "Unit",
    "Bool",
    "Pair",
    "TagL",
    "TagR",
    "Graph",
    "UNIT",
    "TRUE",
    "FALSE",
    "atoms",
]


class Value:
    __slots__ = ("_key", "_hash")

    _rank = -1

    def _init_key(self, key: tuple) -> None:
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def key(self) -> tuple:
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Value):
            return NotImplemented
        return self._key == other._key

    def __ne__(self, other):
        if not isinstance(other, Value):
            return NotImplemented
        return self._key != other._key

    def __lt__(self, other):
        if not isinstance(other, Value):
            return NotImplemented
        return self._key < other._key

    def __le__(self, other):
        if not isinstance(other, Value):
            return NotImplemented
        return self._key <= other._key

    def __gt__(self, other):
        if not isinstance(other, Value):
            return NotImplemented
        return self._key > other._key

    def __ge__(self, other):
        if not isinstance(other, Value):
            return NotImplemented
        return self._key >= other._key

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return (type(self), self._args())

    def _args(self) -> tuple:
        raise NotImplementedError


class Atom(Value):
    """A user-named element. Script literals are always atoms."""

    __slots__ = ("name",)
    _rank = 0

    def __init__(self, name: str):
        if not isinstance(name, str) or not name:
            raise TypeError("atom name must be a non-empty string")
        object.__setattr__(self, "name", name)
        self._init_key((0, name))

    def _args(self):
        return (self.name,)

    def __repr__(self):
        return f"Atom({self.name!r})"

    def __str__(self):
        return self.name


class Nat(Value):
    __slots__ = ("k",)
    _rank = 1

    def __init__(self, k: int):
        if not isinstance(k, int) or isinstance(k, bool) or k < 0:
            raise ValueError(f"Nat needs a nonnegative integer, got {k!r}")
        object.__setattr__(self, "k", k)
        self._init_key((1, k))

    def _args(self):
        return (self.k,)

    def __repr__(self):
        return f"Nat({self.k})"

    def __str__(self):
        return f"#{self.k}"


class Unit(Value):
    __slots__ = ()
    _rank = 2

    def __init__(self):
        self._init_key((2,))

    def _args(self):
        return ()

    def __repr__(self):
        return "Unit()"

    def __str__(self):
        return "()"


class Bool(Value):
    __slots__ = ("b",)
    _rank = 3

    def __init__(self, b: bool):
        b = bool(b)
        object.__setattr__(self, "b", b)
        self._init_key((3, b))

    def _args(self):
        return (self.b,)

    def __repr__(self):
        return f"Bool({self.b})"

    def __str__(self):
        return "#t" if self.b else "#f"


class Pair(Value):
    __slots__ = ("left", "right")
    _rank = 4

    def __init__(self, left: Value, right: Value):
        _need_value(left)
        _need_value(right)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        self._init_key((4, left._key, right._key))

    def _args(self):
        return (self.left, self.right)

    def __repr__(self):
        return f"Pair({self.left!r}, {self.right!r})"

    def __str__(self):
        return f"({self.left}, {self.right})"


class TagL(Value):
    __slots__ = ("v",)
    _rank = 5

    def __init__(self, v: Value):
        _need_value(v)
        object.__setattr__(self, "v", v)
        self._init_key((5, v._key))

    def _args(self):
        return (self.v,)

    def __repr__(self):
        return f"TagL({self.v!r})"

    def __str__(self):
        return f"inl({self.v})"


class TagR(Value):
    __slots__ = ("v",)
    _rank = 6

    def __init__(self, v: Value):
        _need_value(v)
        object.__setattr__(self, "v", v)
        self._init_key((6, v._key))

    def _args(self):
        return (self.v,)

    def __repr__(self):
        return f"TagR({self.v!r})"

    def __str__(self):
        return f"inr({self.v})"


class Graph(Value):
    """The graph of a finite function, used as an element of a function set.

    Entries are kept sorted by argument; arguments must be distinct.
    """

    __slots__ = ("entries", "_lookup")
    _rank = 7

    def __init__(self, entries: Iterable[tuple[Value, Value]]):
        items = sorted(entries, key=lambda e: e[0]._key)
        for x, y in items:
            _need_value(x)
            _need_value(y)
        for (x0, _), (x1, _) in zip(items, items[1:]):
            if x0 == x1:
                raise ValueError(f"graph has two entries for argument {x0}")
        entries = tuple((x, y) for x, y in items)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_lookup", None)
        self._init_key((7, tuple((x._key, y._key) for x, y in entries)))

    @classmethod
    def _sorted(cls, entries: tuple[tuple[Value, Value], ...]) -> "Graph":
        # caller guarantees entries are already sorted with distinct arguments
        g = cls.__new__(cls)
        object.__setattr__(g, "entries", entries)
        object.__setattr__(g, "_lookup", None)
        g._init_key((7, tuple((x._key, y._key) for x, y in entries)))
        return g

    def __call__(self, x: Value) -> Value:
        lookup = self._lookup
        if lookup is None:
            lookup = dict(self.entries)
            object.__setattr__(self, "_lookup", lookup)
        return lookup[x]

    def args(self) -> tuple[Value, ...]:
        return tuple(x for x, _ in self.entries)

    def _args(self):
        return (self.entries,)

    def __repr__(self):
        return f"Graph({list(self.entries)!r})"

    def __str__(self):
        return "[" + ", ".join(f"{x}->{y}" for x, y in self.entries) + "]"


def _need_value(v) -> None:
    if not isinstance(v, Value):
        raise TypeError(f"expected a Value, got {type(v).__name__}")


UNIT = Unit()
TRUE = Bool(True)
FALSE = Bool(False)


def atoms(names: str | Iterable[str]) -> list[Atom]:
    """``atoms("a b c")`` -> ``[Atom('a'), Atom('b'), Atom('c')]``."""
    if isinstance(names, str):
        names = names.split()
    return [Atom(n) for n in names]
