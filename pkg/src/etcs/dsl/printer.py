"""Canonical text for scripts. ``parse(pretty(s)) == s`` for every well-formed ``s``."""

from __future__ import annotations

from .syntax import (
    App,
    AssertCard,
    AssertEq,
    AssertValue,
    Call,
    Cardinal,
    CheckStmt,
    ConstructStmt,
    FnDecl,
    Lit,
    Num,
    Ref,
    Relation,
    Script,
    SetDecl,
)

__all__ = ["pretty", "pretty_statement"]


def _arg(a) -> str:
    if isinstance(a, Ref):
        return a.name
    if isinstance(a, Lit):
        return a.text
    if isinstance(a, Num):
        return str(a.value)
    if isinstance(a, Relation):
        return "{" + ", ".join(f"{p.left.text} ~ {p.right.text}" for p in a.pairs) + "}"
    raise TypeError(f"not an argument: {a!r}")


def _call(c: Call) -> str:
    return f"{c.kind}({', '.join(_arg(a) for a in c.args)})"


def _value(v) -> str:
    if isinstance(v, App):
        return f"{v.head.name}({', '.join(_value(a) for a in v.args)})"
    return v.text


def _cardinal(c: Cardinal) -> str:
    t = c.term
    if isinstance(t, Num):
        return str(t.value)
    return "|" + (t.name if isinstance(t, Ref) else _call(t)) + "|"


def pretty_statement(s) -> str:
    if isinstance(s, SetDecl):
        return f"set {s.name.name} = {{{', '.join(e.text for e in s.elements)}}}"
    if isinstance(s, FnDecl):
        body = ", ".join(f"{e.key.text} |-> {e.value.text}" for e in s.entries)
        body = f"{{ {body} }}" if body else "{}"
        return f"fn {s.name.name} : {s.dom.name} -> {s.cod.name} = {body}"
    if isinstance(s, ConstructStmt):
        return f"let {', '.join(r.name for r in s.names)} = {_call(s.call)}"
    if isinstance(s, CheckStmt):
        out = "check " + ", ".join(r.name for r in s.ids)
        return out + (f" size {s.size}" if s.size is not None else "")
    if isinstance(s, AssertEq):
        return f"assert {' . '.join(r.name for r in s.lhs)} == {' . '.join(r.name for r in s.rhs)}"
    if isinstance(s, AssertCard):
        return f"assert {_cardinal(s.lhs)} == {_cardinal(s.rhs)}"
    if isinstance(s, AssertValue):
        return f"assert {_value(s.lhs)} == {_value(s.rhs)}"
    raise TypeError(f"not a statement: {s!r}")


def pretty(script: Script) -> str:
    return "".join(pretty_statement(s) + "\n" for s in script.statements)
