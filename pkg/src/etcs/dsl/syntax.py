"""Syntax tree for ``.etcs`` scripts.

Source positions ride along on every node but are excluded from equality, so
a script compares equal to its own pretty-printed-and-reparsed copy.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

__all__ = [
    "Diagnostic",
    "ScriptError",
    "Ref",
    "Lit",
    "Num",
    "RelPair",
    "Relation",
    "MapEntry",
    "Call",
    "App",
    "Cardinal",
    "SetDecl",
    "FnDecl",
    "ConstructStmt",
    "CheckStmt",
    "AssertEq",
    "AssertCard",
    "AssertValue",
    "Script",
    "KINDS",
    "KEYWORDS",
]


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" or "warning"
    line: int
    col: int
    message: str
    hint: str | None = None

    def format(self, path: str = "<script>") -> str:
        out = f"{path}:{self.line}:{self.col}: {self.severity}: {self.message}"
        if self.hint:
            out += f"\n  hint: {self.hint}"
        return out


class ScriptError(Exception):
    """Raised by :func:`parse` when the source has error diagnostics."""

    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = diagnostics
        first = diagnostics[0] if diagnostics else None
        super().__init__(first.format() if first else "script error")


def _loc():
    return field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Ref:
    """A use or binding of a name."""

    name: str
    line: int = _loc()
    col: int = _loc()


@dataclass(frozen=True)
class Lit:
    """An element literal; its meaning depends on the set it is read in."""

    text: str
    line: int = _loc()
    col: int = _loc()


@dataclass(frozen=True)
class Num:
    value: int
    line: int = _loc()
    col: int = _loc()


@dataclass(frozen=True)
class RelPair:
    left: Lit
    right: Lit


@dataclass(frozen=True)
class Relation:
    """Generating pairs of an equivalence relation, ``{a ~ b, ...}``."""

    pairs: tuple[RelPair, ...]
    line: int = _loc()
    col: int = _loc()


@dataclass(frozen=True)
class MapEntry:
    key: Lit
    value: Lit


Arg = Union[Ref, Lit, Num, Relation]


@dataclass(frozen=True)
class Call:
    kind: str
    args: tuple[Arg, ...]
    line: int = _loc()
    col: int = _loc()


@dataclass(frozen=True)
class App:
    """``f(a)``, ``q(2, 5)`` (a pair argument) or ``x(3)`` for a sequence."""

    head: Ref
    args: tuple[Union[Lit, "App"], ...]


@dataclass(frozen=True)
class Cardinal:
    """``|X|``, ``|funcset(X, Y)|`` or a plain number."""

    term: Union[Ref, Call, Num]


@dataclass(frozen=True)
class SetDecl:
    name: Ref
    elements: tuple[Lit, ...]
    line: int = _loc()
    col: int = _loc()


@dataclass(frozen=True)
class FnDecl:
    name: Ref
    dom: Ref
    cod: Ref
    entries: tuple[MapEntry, ...]
    line: int = _loc()
    col: int = _loc()


@dataclass(frozen=True)
class ConstructStmt:
    names: tuple[Ref, ...]
    call: Call
    line: int = _loc()
    col: int = _loc()

    @property
    def kind(self) -> str:
        return self.call.kind


@dataclass(frozen=True)
class CheckStmt:
    ids: tuple[Ref, ...]  # a single Ref("all") means A1..A10
    size: int | None
    line: int = _loc()
    col: int = _loc()


@dataclass(frozen=True)
class AssertEq:
    lhs: tuple[Ref, ...]  # composition chain, outermost first
    rhs: tuple[Ref, ...]
    line: int = _loc()
    col: int = _loc()


@dataclass(frozen=True)
class AssertCard:
    lhs: Cardinal
    rhs: Cardinal
    line: int = _loc()
    col: int = _loc()


@dataclass(frozen=True)
class AssertValue:
    lhs: App
    rhs: Union[Lit, App]
    line: int = _loc()
    col: int = _loc()


Statement = Union[SetDecl, FnDecl, ConstructStmt, CheckStmt, AssertEq, AssertCard, AssertValue]


@dataclass(frozen=True)
class Script:
    statements: tuple[Statement, ...]
    diagnostics: tuple[Diagnostic, ...] = field(default=(), compare=False, repr=False)


# construction kind -> (argument kinds, result kinds)
KINDS: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    "product": (("set", "set"), ("set", "fn", "fn")),
    "funcset": (("set", "set"), ("set", "fn")),
    "fibre": (("fn", "lit"), ("set", "fn")),
    "classify": (("fn",), ("fn",)),
    "choice": (("fn",), ("fn",)),
    "quotient": (("set", "rel"), ("set", "fn")),
    "coproduct": (("set", "set"), ("set", "fn", "fn")),
    "indexedprod": (("fn",), ("set",)),
    "integers": (("num",), ("set", "fn")),
    "recurse": (("fn", "lit"), ("seq",)),
}

KEYWORDS = frozenset({"set", "fn", "let", "check", "assert", "size", "all", "true", "false"}) | frozenset(KINDS)
