"""Tokenizer, parser and static checks for ``.etcs`` scripts.

Grammar, one statement per line (newlines inside braces and parentheses are
ignored, ``#`` starts a comment)::

    set X = {a, b}
    fn f : X -> Y = { a |-> 0, b |-> 1 }
    let P, p1, p2 = product(X, Y)
    let Q, q = quotient(X, {a ~ b})
    check all size 2
    check A1, A5
    assert g . f == h
    assert |P| == 4
    assert f(a) == b

Static checks run after a clean parse: names bind before use and never
rebind, arguments have the right kind, and declared functions are total with
values inside their codomain.
"""

from __future__ import annotations

import difflib
import re
from dataclasses import dataclass

from ..verifier import AXIOMS, CHECK_IDS
from .syntax import (
    KEYWORDS,
    KINDS,
    App,
    AssertCard,
    AssertEq,
    AssertValue,
    Call,
    Cardinal,
    CheckStmt,
    ConstructStmt,
    Diagnostic,
    FnDecl,
    Lit,
    MapEntry,
    Num,
    Ref,
    RelPair,
    Relation,
    Script,
    ScriptError,
    SetDecl,
)

__all__ = ["Token", "tokenize", "parse", "parse_with_diagnostics"]

WORD = r"[A-Za-z0-9_]+(?:-[A-Za-z0-9_]+)*"

_TOKEN_RE = re.compile(
    r"(?P<NL>\n)|(?P<WS>[ \t\r]+)|(?P<COMMENT>\#[^\n]*)"
    r"|(?P<SYM>\|->|->|==|[=\{\},:\(\)\.\|~])"
    rf"|(?P<WORD>{WORD})|(?P<BAD>.)"
)

_OPEN = {"{": "}", "(": ")"}


@dataclass(frozen=True)
class Token:
    kind: str  # WORD, SYM, NL or EOF
    text: str
    line: int
    col: int


def tokenize(source: str) -> tuple[list[Token], list[Diagnostic]]:
    tokens: list[Token] = []
    diags: list[Diagnostic] = []
    line, line_start, depth = 1, 0, 0
    for m in _TOKEN_RE.finditer(source):
        kind, text = m.lastgroup, m.group()
        col = m.start() - line_start + 1
        if kind == "NL":
            if depth == 0:
                tokens.append(Token("NL", text, line, col))
            line, line_start = line + 1, m.end()
        elif kind in ("WS", "COMMENT"):
            continue
        elif kind == "BAD":
            diags.append(Diagnostic("error", line, col, f"unknown token {text!r}"))
        else:
            if text in _OPEN:
                depth += 1
            elif text in ("}", ")"):
                depth = max(0, depth - 1)
            tokens.append(Token(kind, text, line, col))
    tokens.append(Token("EOF", "", line, len(source) - line_start + 1))
    return tokens, diags


class _Fail(Exception):
    def __init__(self, diag: Diagnostic):
        self.diag = diag


def _closest(word: str, options) -> str | None:
    hits = difflib.get_close_matches(word, list(options), n=1)
    return f"did you mean {hits[0]!r}?" if hits else None


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def fail(self, msg: str, tok: Token | None = None, hint: str | None = None):
        tok = tok or self.tok
        raise _Fail(Diagnostic("error", tok.line, tok.col, msg, hint))

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind == "SYM" and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.tok.text or "end of input"
            self.fail(f"expected {text!r}, found {found!r}")
        return self.advance()

    def word(self, what: str) -> Token:
        if self.tok.kind != "WORD":
            found = self.tok.text if self.tok.kind != "NL" else "end of line"
            self.fail(f"expected {what}, found {found or 'end of input'!r}")
        return self.advance()

    def name(self) -> Ref:
        t = self.word("a name")
        if t.text in KEYWORDS:
            self.fail(f"{t.text!r} is reserved and cannot be used as a name", t)
        return Ref(t.text, t.line, t.col)

    def lit(self) -> Lit:
        t = self.word("an element")
        return Lit(t.text, t.line, t.col)

    def num(self) -> Num:
        t = self.word("a number")
        if not t.text.isdigit():
            self.fail(f"expected a number, found {t.text!r}", t)
        return Num(int(t.text), t.line, t.col)

    def comma_list(self, close: str, item):
        out = []
        if self.at(close):
            return out
        out.append(item())
        while self.at(","):
            self.advance()
            out.append(item())
        return out

    # statements

    def script(self) -> tuple[list, list[Diagnostic]]:
        stmts, diags = [], []
        while self.tok.kind != "EOF":
            if self.tok.kind == "NL":
                self.advance()
                continue
            try:
                stmts.append(self.statement())
                if self.tok.kind not in ("NL", "EOF"):
                    self.fail(f"unexpected {self.tok.text!r} after statement")
            except _Fail as e:
                diags.append(e.diag)
                while self.tok.kind not in ("NL", "EOF"):
                    self.advance()
        return stmts, diags

    def statement(self):
        t = self.tok
        handlers = {
            "set": self.set_decl,
            "fn": self.fn_decl,
            "let": self.construct,
            "check": self.check,
            "assert": self.assertion,
        }
        if t.kind != "WORD" or t.text not in handlers:
            self.fail(
                f"expected a statement, found {t.text!r}",
                hint="statements start with set, fn, let, check or assert",
            )
        self.advance()
        return handlers[t.text](t)

    def set_decl(self, t: Token) -> SetDecl:
        name = self.name()
        self.expect("=")
        self.expect("{")
        elems = self.comma_list("}", self.lit)
        self.expect("}")
        return SetDecl(name, tuple(elems), t.line, t.col)

    def fn_decl(self, t: Token) -> FnDecl:
        name = self.name()
        self.expect(":")
        dom = self.name()
        self.expect("->")
        cod = self.name()
        self.expect("=")
        self.expect("{")

        def entry():
            k = self.lit()
            self.expect("|->")
            return MapEntry(k, self.lit())

        entries = self.comma_list("}", entry)
        self.expect("}")
        return FnDecl(name, dom, cod, tuple(entries), t.line, t.col)

    def call(self) -> Call:
        t = self.word("a construction")
        if t.text not in KINDS:
            self.fail(f"unknown construction {t.text!r}", t, _closest(t.text, KINDS))
        signature = KINDS[t.text][0]
        self.expect("(")
        args = []
        for n, kind in enumerate(signature):
            if n:
                self.expect(",")
            if kind in ("set", "fn"):
                args.append(self.name())
            elif kind == "lit":
                args.append(self.lit())
            elif kind == "num":
                args.append(self.num())
            else:
                args.append(self.relation())
        if self.at(","):
            self.fail(f"{t.text} takes {len(signature)} argument(s)")
        self.expect(")")
        return Call(t.text, tuple(args), t.line, t.col)

    def relation(self) -> Relation:
        t = self.expect("{")

        def pair():
            a = self.lit()
            self.expect("~")
            return RelPair(a, self.lit())

        pairs = self.comma_list("}", pair)
        self.expect("}")
        return Relation(tuple(pairs), t.line, t.col)

    def construct(self, t: Token) -> ConstructStmt:
        names = [self.name()]
        while self.at(","):
            self.advance()
            names.append(self.name())
        self.expect("=")
        call = self.call()
        results = KINDS[call.kind][1]
        if len(names) > len(results):
            self.fail(
                f"{call.kind} produces {len(results)} result(s), {len(names)} names given",
                Token("WORD", names[0].name, names[0].line, names[0].col),
            )
        return ConstructStmt(tuple(names), call, t.line, t.col)

    def check(self, t: Token) -> CheckStmt:
        ids = []
        first = self.word("'all' or a check id")
        ids.append(Ref(first.text, first.line, first.col))
        if first.text != "all":
            while self.at(","):
                self.advance()
                w = self.word("a check id")
                ids.append(Ref(w.text, w.line, w.col))
        size = None
        if self.tok.kind == "WORD" and self.tok.text == "size":
            self.advance()
            size = self.num()
            if size.value < 1:
                self.fail("size must be at least 1", Token("WORD", "", size.line, size.col))
            size = size.value
        return CheckStmt(tuple(ids), size, t.line, t.col)

    def chain(self) -> tuple[Ref, ...]:
        out = [self.name()]
        while self.at("."):
            self.advance()
            out.append(self.name())
        return tuple(out)

    def cardinal(self) -> Cardinal:
        if self.at("|"):
            self.advance()
            if self.toks[self.i + 1].kind == "SYM" and self.toks[self.i + 1].text == "(":
                term = self.call()
            else:
                term = self.name()
            self.expect("|")
            return Cardinal(term)
        return Cardinal(self.num())

    def app(self, head: Ref) -> App:
        self.expect("(")
        args = self.comma_list(")", self.value)
        if not 1 <= len(args) <= 2:
            self.fail("application takes one argument, or two for a pair")
        self.expect(")")
        return App(head, tuple(args))

    def value(self):
        t = self.word("an element")
        if self.at("("):
            if t.text in KEYWORDS:
                self.fail(f"{t.text!r} is reserved", t)
            return self.app(Ref(t.text, t.line, t.col))
        return Lit(t.text, t.line, t.col)

    def assertion(self, t: Token):
        if self.at("|") or (self.tok.kind == "WORD" and self.tok.text.isdigit()):
            lhs = self.cardinal()
            self.expect("==")
            return AssertCard(lhs, self.cardinal(), t.line, t.col)
        head = self.name()
        if self.at("("):
            lhs = self.app(head)
            self.expect("==")
            return AssertValue(lhs, self.value(), t.line, t.col)
        lhs = (head,)
        if self.at("."):
            self.advance()
            lhs = (head,) + self.chain()
        self.expect("==")
        return AssertEq(lhs, self.chain(), t.line, t.col)


@dataclass
class _Binding:
    kind: str  # set, fn, seq
    line: int
    elements: tuple[str, ...] | None = None  # literal sets only
    dom: str | None = None  # literal functions only
    cod: str | None = None


class _Binder:
    """Scope and totality checks over a parsed statement list."""

    def __init__(self):
        self.env: dict[str, _Binding] = {}
        self.diags: list[Diagnostic] = []

    def err(self, node, msg: str, hint: str | None = None) -> None:
        self.diags.append(Diagnostic("error", node.line, node.col, msg, hint))

    def warn(self, node, msg: str, hint: str | None = None) -> None:
        self.diags.append(Diagnostic("warning", node.line, node.col, msg, hint))

    def lookup(self, ref: Ref, *kinds: str) -> _Binding | None:
        b = self.env.get(ref.name)
        if b is None:
            self.err(ref, f"unbound name {ref.name!r}", _closest(ref.name, self.env))
            return None
        if kinds and b.kind not in kinds:
            self.err(ref, f"{ref.name!r} is a {_KIND_WORDS[b.kind]}, expected a {' or '.join(_KIND_WORDS[k] for k in kinds)}")
            return None
        return b

    def bind(self, ref: Ref, binding: _Binding) -> None:
        if ref.name in self.env:
            self.err(
                ref,
                f"{ref.name!r} is already bound (line {self.env[ref.name].line})",
                "names cannot be rebound; pick a fresh name",
            )
            return
        self.env[ref.name] = binding

    def elements_of(self, name: str | None) -> tuple[str, ...] | None:
        b = self.env.get(name) if name else None
        return b.elements if b is not None else None

    def member(self, lit: Lit, set_name: str | None, role: str) -> None:
        elems = self.elements_of(set_name)
        if elems is not None and lit.text not in elems:
            self.err(lit, f"value {lit.text!r} not in {role} {set_name}", _closest(lit.text, elems))

    def run(self, stmts) -> None:
        for s in stmts:
            getattr(self, "do_" + type(s).__name__)(s)

    def do_SetDecl(self, s: SetDecl) -> None:
        seen: list[str] = []
        for e in s.elements:
            if e.text in ("true", "false"):
                self.err(e, f"{e.text!r} is a truth value and cannot be declared as an element")
            elif e.text in seen:
                self.warn(e, f"duplicate element {e.text!r} in set {s.name.name}", "sets ignore repeats")
            else:
                seen.append(e.text)
        self.bind(s.name, _Binding("set", s.line, elements=tuple(seen)))

    def do_FnDecl(self, s: FnDecl) -> None:
        ok = True
        for ref in (s.dom, s.cod):
            b = self.lookup(ref, "set")
            if b is not None and b.elements is None:
                self.err(ref, f"{ref.name!r} was constructed; declared functions need sets declared with 'set'")
                b = None
            ok = ok and b is not None
        if ok:
            dom, cod = self.elements_of(s.dom.name), self.elements_of(s.cod.name)
            mapped: dict[str, str] = {}
            for e in s.entries:
                if e.key.text not in dom:
                    self.err(e.key, f"value {e.key.text!r} not in domain {s.dom.name}", _closest(e.key.text, dom))
                elif e.key.text in mapped and mapped[e.key.text] != e.value.text:
                    self.err(e.key, f"{e.key.text!r} is mapped twice")
                mapped.setdefault(e.key.text, e.value.text)
                if e.value.text not in cod:
                    self.err(e.value, f"value {e.value.text!r} not in codomain {s.cod.name}", _closest(e.value.text, cod))
            missing = [x for x in dom if x not in mapped]
            if missing:
                self.err(
                    s.name,
                    f"function {s.name.name} is not total: no value for {', '.join(missing)}",
                    "add an entry 'x |-> y' for each missing element",
                )
        self.bind(s.name, _Binding("fn", s.line, dom=s.dom.name, cod=s.cod.name))

    def check_call(self, c: Call) -> None:
        signature = KINDS[c.kind][0]
        first = None
        for kind, arg in zip(signature, c.args):
            if kind in ("set", "fn"):
                b = self.lookup(arg, kind)
                first = first or b
            elif kind == "lit" and first is not None and first.kind == "fn":
                set_name = first.cod if c.kind == "fibre" else first.dom
                self.member(arg, set_name, "codomain" if c.kind == "fibre" else "domain")
            elif kind == "rel" and first is not None:
                for p in arg.pairs:
                    self.member(p.left, c.args[0].name, "set")
                    self.member(p.right, c.args[0].name, "set")
        if c.kind == "recurse" and first is not None and first.dom is not None and first.dom != first.cod:
            self.err(c.args[0], f"{c.args[0].name} must map a set to itself")
        if c.kind == "integers" and c.args[0].value < 1:
            self.err(c.args[0], "the integer bound must be at least 1")

    def do_ConstructStmt(self, s: ConstructStmt) -> None:
        self.check_call(s.call)
        for ref, kind in zip(s.names, KINDS[s.kind][1]):
            self.bind(ref, _Binding(kind, s.line))

    def do_CheckStmt(self, s: CheckStmt) -> None:
        for ref in s.ids:
            if ref.name != "all" and ref.name not in CHECK_IDS:
                self.err(ref, f"unknown check {ref.name!r}", _closest(ref.name, CHECK_IDS + ("all",)))

    def do_AssertEq(self, s: AssertEq) -> None:
        for ref in s.lhs + s.rhs:
            self.lookup(ref, "fn")

    def do_AssertCard(self, s: AssertCard) -> None:
        for c in (s.lhs, s.rhs):
            if isinstance(c.term, Ref):
                self.lookup(c.term, "set")
            elif isinstance(c.term, Call):
                self.check_call(c.term)
                if KINDS[c.term.kind][1][0] != "set":
                    self.err(c.term, f"{c.term.kind} does not produce a set")

    def check_app(self, a: App) -> _Binding | None:
        b = self.lookup(a.head, "fn", "seq")
        if b is None:
            return None
        if b.kind == "seq":
            if len(a.args) != 1 or not isinstance(a.args[0], Lit) or not a.args[0].text.isdigit():
                self.err(a.head, f"sequence {a.head.name} takes one index, a number")
            return b
        for arg in a.args:
            if isinstance(arg, App):
                self.check_app(arg)
        if len(a.args) == 1 and isinstance(a.args[0], Lit):
            self.member(a.args[0], b.dom, "domain")
        return b

    def do_AssertValue(self, s: AssertValue) -> None:
        b = self.check_app(s.lhs)
        if isinstance(s.rhs, App):
            self.check_app(s.rhs)
        elif b is not None and b.kind == "fn":
            self.member(s.rhs, b.cod, "codomain")


_KIND_WORDS = {"set": "set", "fn": "function", "seq": "sequence"}


def parse_with_diagnostics(source: str) -> tuple[Script | None, list[Diagnostic]]:
    """Parse and check ``source``; the script is None when any error was found."""
    tokens, diags = tokenize(source)
    stmts, syntax_diags = _Parser(tokens).script()
    diags = sorted(diags + syntax_diags, key=lambda d: (d.line, d.col))
    if not diags:
        binder = _Binder()
        binder.run(stmts)
        diags = sorted(binder.diags, key=lambda d: (d.line, d.col))
    if any(d.severity == "error" for d in diags):
        return None, diags
    return Script(tuple(stmts), tuple(diags)), diags


def parse(source: str) -> Script:
    """Parse ``source`` into a :class:`Script` or raise :class:`ScriptError`.

    Warnings are kept on ``Script.diagnostics``.
    """
    script, diags = parse_with_diagnostics(source)
    if script is None:
        raise ScriptError([d for d in diags if d.severity == "error"])
    return script


def expand_check_ids(stmt: CheckStmt) -> tuple[str, ...]:
    if len(stmt.ids) == 1 and stmt.ids[0].name == "all":
        return AXIOMS
    return tuple(r.name for r in stmt.ids)
