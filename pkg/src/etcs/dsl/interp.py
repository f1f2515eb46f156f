"""Running a parsed script against the kernel."""

from __future__ import annotations

from dataclasses import dataclass

from .. import constructions as C
from .. import derived as D
from ..core import FnMor, SetObj, compose, fn_equal
from ..errors import ETCSError
from ..nno import NatSystem, RecFn, recurse
from ..report import Report
from ..values import FALSE, TRUE, Atom, Bool, Graph, Nat, Pair, Value
from ..verifier import MAX_SIZE, check_all
from .parser import expand_check_ids
from .printer import pretty_statement
from .syntax import (
    App,
    AssertCard,
    AssertEq,
    AssertValue,
    Call,
    CheckStmt,
    ConstructStmt,
    Diagnostic,
    FnDecl,
    Lit,
    Num,
    Ref,
    Script,
    SetDecl,
)

__all__ = ["RunConfig", "execute", "exit_status"]


@dataclass(frozen=True)
class RunConfig:
    nat_bound: int = 10_000
    size: int = 3  # size for check statements that do not give one
    format: str = "text"
    seed: int | None = None
    samples: int = 64
    workers: int = 1


class _Stop(Exception):
    def __init__(self, node, msg: str, hint: str | None = None):
        self.diag = Diagnostic("error", node.line, node.col, msg, hint)


def _resolve(lit: Lit, S: SetObj, role: str = "set") -> Value:
    """Read a literal as an element of ``S``: an atom, a number or a truth value."""
    t = lit.text
    candidates = [Atom(t)]
    if t.isdigit():
        candidates.append(Nat(int(t)))
    if t in ("true", "false"):
        candidates = [TRUE if t == "true" else FALSE]
    for v in candidates:
        if v in S:
            return v
    raise _Stop(lit, f"value {t!r} not in {role} {S}")


def _show(v: Value) -> str:
    # a subset (a graph into the truth values) prints as its members
    if isinstance(v, Graph) and v.entries and all(isinstance(y, Bool) for _, y in v.entries):
        return "{" + ", ".join(str(x) for x, y in v.entries if y == TRUE) + "}"
    return str(v)


def _closure(X: SetObj, pairs: list[tuple[Value, Value]]) -> set[tuple[Value, Value]]:
    # reflexive, symmetric, transitive closure by repeated composition
    rel = {(x, x) for x in X.elements} | set(pairs) | {(b, a) for a, b in pairs}
    while True:
        extra = {(a, d) for a, b in rel for c, d in rel if b == c} - rel
        if not extra:
            return rel
        rel |= extra


class _Interp:
    def __init__(self, config: RunConfig):
        self.cfg = config
        self.env: dict[str, object] = {}
        self.reports: list[Report] = []
        self.diags: list[Diagnostic] = []
        self.nats = NatSystem(config.nat_bound)

    def run(self, script: Script) -> None:
        for s in script.statements:
            try:
                getattr(self, "do_" + type(s).__name__)(s)
            except _Stop as e:
                self.diags.append(e.diag)
                return
            except ETCSError as e:
                self.diags.append(Diagnostic("error", s.line, s.col, f"{type(e).__name__}: {e}"))
                return

    def get(self, ref: Ref):
        try:
            return self.env[ref.name]
        except KeyError:
            raise _Stop(ref, f"unbound name {ref.name!r}") from None

    def do_SetDecl(self, s: SetDecl) -> None:
        self.env[s.name.name] = SetObj(Atom(e.text) for e in s.elements)

    def do_FnDecl(self, s: FnDecl) -> None:
        X, Y = self.get(s.dom), self.get(s.cod)
        table = {_resolve(e.key, X, "domain"): _resolve(e.value, Y, "codomain") for e in s.entries}
        self.env[s.name.name] = FnMor(X, Y, table)

    def call(self, c: Call) -> tuple:
        a = c.args
        k = c.kind
        if k == "product":
            cone = C.product(self.get(a[0]), self.get(a[1]))
            return cone.obj, cone.pr1, cone.pr2
        if k == "funcset":
            fs = C.function_set(self.get(a[0]), self.get(a[1]))
            return fs.obj, fs.ev
        if k == "fibre":
            f = self.get(a[0])
            cone = C.inverse_image(f, _resolve(a[1], f.cod, "codomain"))
            return cone.obj, cone.incl
        if k == "classify":
            return (C.characteristic(self.get(a[0])),)
        if k == "choice":
            return (C.right_inverse(self.get(a[0])),)
        if k == "quotient":
            X = self.get(a[0])
            pairs = [(_resolve(p.left, X), _resolve(p.right, X)) for p in a[1].pairs]
            return D.quotient(D.EquivRelation.from_pairs(X, sorted(_closure(X, pairs))))
        if k == "coproduct":
            return D.coproduct(self.get(a[0]), self.get(a[1]))
        if k == "indexedprod":
            return (D.indexed_product(self.get(a[0])),)
        if k == "integers":
            B = a[0].value
            if 2 * B + 2 > self.cfg.nat_bound:
                raise _Stop(a[0], f"integers({B}) needs naturals up to {2 * B + 1}, above the bound {self.cfg.nat_bound}",
                            "raise --nat-bound")
            return D.build_integers(B)
        if k == "recurse":
            r = self.get(a[0])
            return (recurse(self.nats, _resolve(a[1], r.dom, "domain"), r),)
        raise _Stop(c, f"unknown construction {k!r}")

    def do_ConstructStmt(self, s: ConstructStmt) -> None:
        results = self.call(s.call)
        for ref, v in zip(s.names, results):
            self.env[ref.name] = v

    def do_CheckStmt(self, s: CheckStmt) -> None:
        ids = expand_check_ids(s)
        size = s.size if s.size is not None else self.cfg.size
        explicit = not (len(s.ids) == 1 and s.ids[0].name == "all")
        for ref in s.ids if explicit else ():
            if s.size is not None and size > MAX_SIZE[ref.name]:
                self.diags.append(Diagnostic(
                    "warning", ref.line, ref.col,
                    f"{ref.name} runs at size {MAX_SIZE[ref.name]}, its maximum, not {size}",
                ))
        self.reports.extend(check_all(
            size, ids=ids, seed=self.cfg.seed, samples=self.cfg.samples, workers=self.cfg.workers
        ))

    def _assert(self, s, ok: bool, witness: dict | None, instances: int = 1) -> None:
        self.reports.append(Report(
            "assert",
            f"line {s.line}: {pretty_statement(s)}",
            "pass" if ok else "fail",
            None if ok else witness,
            {"instances": instances},
        ))

    def chain(self, refs: tuple[Ref, ...]) -> FnMor:
        fns = [self.get(r) for r in refs]
        out = fns[-1]
        for g in reversed(fns[:-1]):
            out = compose(g, out)
        return out

    def do_AssertEq(self, s: AssertEq) -> None:
        f, g = self.chain(s.lhs), self.chain(s.rhs)
        ok = fn_equal(f, g)
        witness = None
        if not ok:
            # extensionality: name an element where the two sides differ
            x = next(x for x, u, v in zip(f.dom.elements, f.values, g.values) if u != v)
            witness = {"element": _show(x), "lhs": _show(f(x)), "rhs": _show(g(x))}
        self._assert(s, ok, witness, len(f.dom))

    def cardinal(self, c) -> int:
        t = c.term
        if isinstance(t, Num):
            return t.value
        obj = self.get(t) if isinstance(t, Ref) else self.call(t)[0]
        return len(obj)

    def do_AssertCard(self, s: AssertCard) -> None:
        m, n = self.cardinal(s.lhs), self.cardinal(s.rhs)
        self._assert(s, m == n, {"lhs": m, "rhs": n})

    def value(self, v, S: SetObj | None, role: str) -> Value:
        if isinstance(v, Lit):
            if S is None:
                raise _Stop(v, f"cannot tell which set {v.text!r} belongs to")
            return _resolve(v, S, role)
        head = self.get(v.head)
        if isinstance(head, RecFn):
            arg = v.args[0]
            if not isinstance(arg, Lit) or not arg.text.isdigit():
                raise _Stop(v.head, f"sequence {v.head.name} takes a number")
            x = head.at(int(arg.text))
            return Nat(x) if head._nat else x
        if len(v.args) == 2:
            dom = head.dom
            lefts = SetObj(p.left for p in dom.elements if isinstance(p, Pair))
            rights = SetObj(p.right for p in dom.elements if isinstance(p, Pair))
            x = Pair(self.value(v.args[0], lefts, "domain"), self.value(v.args[1], rights, "domain"))
            if x not in dom:
                raise _Stop(v.head, f"{x} is not in the domain of {v.head.name}")
        else:
            x = self.value(v.args[0], head.dom, "domain")
        return head(x)

    def _target(self, app: App) -> SetObj | None:
        head = self.get(app.head)
        if isinstance(head, RecFn):
            if head._nat:
                return None
            return head.target
        return head.cod

    def do_AssertValue(self, s: AssertValue) -> None:
        lhs = self.value(s.lhs, None, "domain")
        if isinstance(s.rhs, Lit):
            target = self._target(s.lhs)
            if target is None:
                if not s.rhs.text.isdigit():
                    raise _Stop(s.rhs, f"{s.rhs.text!r} is not a natural number")
                rhs = Nat(int(s.rhs.text))
            else:
                rhs = _resolve(s.rhs, target, "codomain")
        else:
            rhs = self.value(s.rhs, None, "domain")
        self._assert(s, lhs == rhs, {"lhs": _show(lhs), "rhs": _show(rhs)})


def execute(script: Script, config: RunConfig = RunConfig()) -> tuple[list[Report], list[Diagnostic]]:
    """Run ``script`` in order; stop at the first execution error.

    Returns every report produced so far together with the script's warnings
    and any execution diagnostics.
    """
    it = _Interp(config)
    it.diags.extend(script.diagnostics)
    it.run(script)
    return it.reports, it.diags


def exit_status(reports: list[Report], diags: list[Diagnostic]) -> int:
    if any(d.severity == "error" for d in diags):
        return 2
    if any(r.failed for r in reports):
        return 1
    return 0

