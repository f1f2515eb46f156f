"""A bounded natural number system and definition by recursion.

No finite model contains the natural numbers, so :class:`NatSystem` is
intensional: its elements are ``Nat(0) .. Nat(bound - 1)`` and the successor
is a rule, not a table. A sequence defined by recursion (:class:`RecFn`) is
evaluated by memoised iteration, and every result it returns satisfies the
defining equations on the prefix computed so far. Nothing is claimed past the
bound; asking for it raises :class:`~etcs.errors.BoundExceeded`.

Addition, multiplication and powers are all defined by recursion starting
from the successor alone.
"""

from __future__ import annotations

import threading
from array import array
from collections import OrderedDict
from typing import Callable, Sequence

from .core import TERMINAL, FnMor, SetObj, element
from .errors import BoundaryMismatch, BoundExceeded, NotAnElement
from .values import Nat

__all__ = [
    "DEFAULT_BOUND",
    "NatSystem",
    "NatMap",
    "RecFn",
    "recurse",
    "rec_eval",
    "prefix_unique",
    "agree_upto",
    "nat_arith",
    "nat_set",
]

DEFAULT_BOUND = 10_000


class NatSystem:
    """The truncated naturals ``0 .. bound-1`` with zero and successor."""

    is_infinite = True

    def __init__(self, bound: int = DEFAULT_BOUND):
        if not isinstance(bound, int) or bound < 1:
            raise ValueError(f"bound must be a positive integer, got {bound!r}")
        self.bound = bound
        self.zero = Nat(0)
        self._recs: OrderedDict = OrderedDict()
        self._recs_lock = threading.Lock()

    def check(self, n: int) -> int:
        if n < 0 or n >= self.bound:
            raise BoundExceeded(n, self.bound)
        return n

    def succ(self, n: int) -> int:
        return self.check(n + 1)

    @property
    def succ_map(self) -> "NatMap":
        return NatMap(self, self.succ, "succ")

    def _cached(self, key, make: Callable[[], "RecFn"]) -> "RecFn":
        with self._recs_lock:
            rec = self._recs.get(key)
            if rec is not None:
                self._recs.move_to_end(key)
                return rec
        rec = make()
        with self._recs_lock:
            rec = self._recs.setdefault(key, rec)
            if len(self._recs) > 256:
                self._recs.popitem(last=False)
        return rec

    def __repr__(self):
        return f"NatSystem(bound={self.bound})"


class NatMap:
    """An endomap of the naturals given by a rule on integers."""

    def __init__(self, sys: NatSystem, rule: Callable[[int], int], name: str = "rule"):
        self.sys = sys
        self.rule = rule
        self.name = name

    def __call__(self, n: int) -> int:
        return self.sys.check(self.rule(n))

    def __repr__(self):
        return f"NatMap({self.name})"


class RecFn:
    """The sequence ``x`` with ``x(0) = base`` and ``x(n+1) = step(x(n))``."""

    def __init__(self, sys: NatSystem, target, base, step):
        self.sys = sys
        self.target = target
        self.base = base
        self.step = step
        self._nat = isinstance(step, NatMap)
        if self._nat:
            self._memo = array("q", [base])
            self._next = step
        else:
            self._memo = [base]
            table = step.table
            self._next = table.__getitem__
        self._lock = threading.Lock()

    def _extend(self, n: int) -> None:
        with self._lock:
            memo = self._memo
            nxt = self._next
            x = memo[-1]
            for _ in range(len(memo), n + 1):
                x = nxt(x)
                memo.append(x)

    def at(self, n: int):
        """``x(n)``: a ``Value`` for finite targets, an ``int`` into the naturals."""
        if n < 0 or n >= self.sys.bound:
            raise BoundExceeded(n, self.sys.bound)
        if n >= len(self._memo):
            self._extend(n)
        return self._memo[n]

    def prefix(self, length: int) -> list:
        if length > 0:
            self.at(length - 1)
        return list(self._memo[:length])

    def __repr__(self):
        return f"RecFn(base={self.base}, step={self.step}, computed={len(self._memo)})"


def recurse(sys: NatSystem, a, r) -> RecFn:
    """The unique sequence with ``x(0) = a`` and ``x(n+1) = r(x(n))``.

    ``r`` is either a finite endofunction ``X -> X`` with ``a`` an element of
    ``X`` (a ``1 -> X`` function or a bare value), or a :class:`NatMap` with
    ``a`` a natural number.
    """
    if isinstance(r, NatMap):
        k = a.k if isinstance(a, Nat) else a
        if not isinstance(k, int):
            raise BoundaryMismatch(f"base {a!r} is not a natural number")
        return RecFn(sys, sys, sys.check(k), r)
    if r.dom != r.cod:
        raise BoundaryMismatch(f"step {r} is not an endofunction: {r.dom} -> {r.cod}")
    if isinstance(a, FnMor):
        if a.dom != TERMINAL:
            raise NotAnElement(f"{a!r} is not an element")
        if a.cod != r.dom:
            raise BoundaryMismatch(f"base lies in {a.cod}, step acts on {r.dom}")
        a = a.values[0]
    elif a not in r.dom:
        raise BoundaryMismatch(f"base {a} is not in {r.dom}")
    return RecFn(sys, r.dom, a, r)


def rec_eval(f: RecFn, n: int):
    """``x(n)``, as an element ``1 -> X`` (or a ``Nat`` for sequences of naturals)."""
    v = f.at(n)
    if f._nat:
        return Nat(v)
    return element(f.target, v)


def _as_value(x):
    if isinstance(x, FnMor):
        return x.values[0]
    if isinstance(x, Nat):
        return x.k
    return x


def prefix_unique(sys: NatSystem, a, r, candidate: Sequence) -> bool:
    """Whether ``candidate`` satisfies both defining equations along its length."""
    if len(candidate) > sys.bound:
        raise BoundExceeded(len(candidate), sys.bound)
    if not candidate:
        return True
    seq = [_as_value(x) for x in candidate]
    step = r if isinstance(r, NatMap) else r.table.__getitem__
    if seq[0] != _as_value(a):
        return False
    try:
        return all(step(seq[i]) == seq[i + 1] for i in range(len(seq) - 1))
    except (KeyError, BoundExceeded):
        return False


def agree_upto(f: RecFn, g: RecFn, n: int) -> bool:
    """Whether two sequences agree on indices ``0 .. n-1``.

    Only a finite comparison; agreement here says nothing past ``n``.
    """
    return all(f.at(i) == g.at(i) for i in range(n))


def _add_rec(sys: NatSystem, m: int) -> RecFn:
    # m + n: start at m, apply succ n times
    return sys._cached(("add", m), lambda: recurse(sys, m, sys.succ_map))


def _mul_rec(sys: NatSystem, m: int) -> RecFn:
    # m * n: start at 0, add m at each step
    add_m = _add_rec(sys, m)
    return sys._cached(("mul", m), lambda: recurse(sys, 0, NatMap(sys, add_m.at, f"add {m}")))


def _pow_rec(sys: NatSystem, m: int) -> RecFn:
    # m ** n: start at 1, multiply by m at each step
    mul_m = _mul_rec(sys, m)
    return sys._cached(("pow", m), lambda: recurse(sys, 1, NatMap(sys, mul_m.at, f"mul {m}")))


_OPS = {"add": _add_rec, "mul": _mul_rec, "pow": _pow_rec}


def nat_arith(op: str, m: int, n: int, sys: NatSystem | None = None) -> int:
    """``m + n``, ``m * n`` or ``m ** n`` computed by recursion from the successor."""
    if op not in _OPS:
        raise ValueError(f"unknown operation {op!r}; expected one of {sorted(_OPS)}")
    sys = sys or NatSystem()
    sys.check(m)
    sys.check(n)
    return _OPS[op](sys, m).at(n)


def nat_set(sys: NatSystem, upto: int) -> SetObj:
    """The finite set ``{Nat(0), .., Nat(upto)}`` inside the bounded naturals."""
    sys.check(upto)
    return SetObj(Nat(k) for k in range(upto + 1))
