"""Exhaustive verification of the axioms and derived constructions.

Each check walks every instance up to a size limit: all probe sets
``{}, {a}, {a, b}, ...``, all functions between them and all structure data.
Universal properties are tested by enumerating *every* candidate mediator and
counting the ones that satisfy the defining equations; the count must be
exactly one, and it must be the one the construction produced.

With a seed, probe sets grow by one and any hom-set larger than ``samples``
is replaced by a seeded random sample of it; mediator domains stay within the
exhaustive limit so that candidate counting stays exhaustive.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from . import oracles
from .constructions import is_inverse_image, is_terminal, is_terminal_by_definition
from .core import (
    FnMor,
    SetObj,
    all_functions,
    compose,
    elements,
    evaluate,
    fn_equal,
    identity,
    is_isomorphism,
)
from .derived import EquivRelation, build_integers, coproduct_builds, indexed_product, quotient
from .errors import BudgetExceeded, ETCSError, NotEquivalence, NotInjective, NotSurjective
from .kernel import DEFAULT_KERNEL, MUTATIONS, Kernel, mutated_kernel
from .nno import NatSystem, nat_arith, prefix_unique, rec_eval, recurse
from .report import Report
from .values import Atom, Pair

__all__ = [
    "AXIOMS",
    "DERIVED",
    "CHECK_IDS",
    "MAX_SIZE",
    "DEFAULT_CEILING",
    "probe_sets",
    "check_axiom",
    "check_all",
    "mutate_and_check",
]

AXIOMS = tuple(f"A{i}" for i in range(1, 11))
DERIVED = (
    "terminal-iff-one",
    "classifier-two",
    "choice-least",
    "coproduct-iso",
    "quotient-oracle",
    "indexed-product-iso",
    "integers",
    "arith-recursion",
)
CHECK_IDS = AXIOMS + DERIVED

MAX_SIZE = {i: 3 for i in CHECK_IDS}
MAX_SIZE.update({"A6": 2, "coproduct-iso": 2, "quotient-oracle": 4, "indexed-product-iso": 4})

DEFAULT_CEILING = 5_000_000
PREFIX_LENGTH = 5
ARITH_LIMIT = 50
POOL = "abcdefgh"


def probe_sets(n: int) -> list[SetObj]:
    return [SetObj(Atom(c) for c in POOL[:k]) for k in range(n + 1)]


def _fn(f: FnMor) -> str:
    return f"{f.dom} -> {f.cod} {f}"


class _Run:
    """Instance generation and accounting for one check."""

    def __init__(self, size: int, seed: int | None, samples: int, ceiling: int):
        self.size = size
        self.rng = random.Random(seed) if seed is not None else None
        self.samples = samples
        self.ceiling = ceiling
        self.count = 0
        self.sampled = 0

    def sets(self, cap: int | None = None) -> list[SetObj]:
        n = self.size if cap is None else min(self.size, cap)
        if self.rng is not None and cap is None:
            n += 1
        return probe_sets(n)

    def exhaustive_sets(self, cap: int | None = None) -> list[SetObj]:
        n = self.size if cap is None else min(self.size, cap)
        return probe_sets(n)

    def funcs(self, X: SetObj, Y: SetObj) -> list[FnMor]:
        total = len(Y) ** len(X)
        if self.rng is None or total <= self.samples:
            return list(all_functions(X, Y))
        self.sampled += self.samples
        ys = Y.elements
        return [
            FnMor._trusted(X, Y, tuple(self.rng.choice(ys) for _ in X.elements))
            for _ in range(self.samples)
        ]

    def tick(self, n: int = 1) -> None:
        self.count += n
        if self.count > self.ceiling:
            raise BudgetExceeded(self.count, self.ceiling)


# Each check returns None on success or a witness dict on the first failure.


def _check_a1(k: Kernel, run: _Run):
    sets = run.sets()
    for W, X, Y, Z in itertools.product(sets, repeat=4):
        fs, gs, hs = run.funcs(W, X), run.funcs(X, Y), run.funcs(Y, Z)
        if not (fs and gs and hs):
            continue
        hg = {(gi, hi): compose(h, g) for gi, g in enumerate(gs) for hi, h in enumerate(hs)}
        for f in fs:
            for gi, g in enumerate(gs):
                gf = compose(g, f)
                run.tick(len(hs))
                for hi, h in enumerate(hs):
                    if compose(h, gf) != compose(hg[gi, hi], f):
                        return {"law": "associativity", "f": _fn(f), "g": _fn(g), "h": _fn(h)}
    for X, Y in itertools.product(sets, repeat=2):
        iX, iY = identity(X), identity(Y)
        for f in run.funcs(X, Y):
            run.tick()
            if compose(f, iX) != f or compose(iY, f) != f:
                return {"law": "identity", "f": _fn(f)}
    return None


def _check_a2(k: Kernel, run: _Run):
    T = k.terminal()
    if not is_terminal(T):
        return {"terminal": str(T), "problem": "not a one-element set"}
    for X in run.sets():
        run.tick()
        n = sum(1 for _ in all_functions(X, T))
        if n != 1:
            return {"terminal": str(T), "X": str(X), "functions": n}
    return None


def _check_a3(k: Kernel, run: _Run):
    E = k.empty()
    if elements(E):
        return {"empty": str(E), "elements": [str(x) for x in E]}
    for Y in run.sets():
        run.tick()
        n = sum(1 for _ in all_functions(E, Y))
        if n != 1:
            return {"empty": str(E), "Y": str(Y), "functions": n}
    return None


def _check_a4(k: Kernel, run: _Run):
    sets = run.sets()
    for X, Y in itertools.product(sets, repeat=2):
        fs = run.funcs(X, Y)
        xs = elements(X)
        evals = [tuple(evaluate(f, x) for x in xs) for f in fs]
        for (f, ef), (g, eg) in itertools.product(zip(fs, evals), repeat=2):
            run.tick()
            if ef == eg and f != g:
                return {"f": _fn(f), "g": _fn(g), "problem": "agree on all elements but differ"}
            if fn_equal(f, g) != (ef == eg):
                return {"f": _fn(f), "g": _fn(g), "problem": "fn_equal disagrees with evaluation"}
    return None


def _check_a5(k: Kernel, run: _Run):
    for X, Y in itertools.product(run.sets(), repeat=2):
        cone = k.product(X, Y)
        if len(cone.obj) != len(X) * len(Y):
            return {"X": str(X), "Y": str(Y), "product": str(cone.obj), "problem": "size"}
        for I in run.exhaustive_sets():
            found = defaultdict(list)
            for h in all_functions(I, cone.obj):
                run.tick()
                key = (compose(cone.pr1, h).values, compose(cone.pr2, h).values)
                found[key].append(h)
            for f1 in run.funcs(I, X):
                for f2 in run.funcs(I, Y):
                    run.tick()
                    meds = found.get((f1.values, f2.values), [])
                    base = {"I": str(I), "f1": _fn(f1), "f2": _fn(f2)}
                    if len(meds) != 1:
                        return {**base, "mediators": [str(m) for m in meds]}
                    try:
                        m = k.mediate_product(cone, f1, f2)
                    except ETCSError as e:
                        return {**base, "error": str(e), "mediators": [str(meds[0])]}
                    if m != meds[0]:
                        return {**base, "constructed": str(m), "mediators": [str(meds[0])]}
    return None


def _check_a6(k: Kernel, run: _Run):
    for X, Y in itertools.product(run.sets(), repeat=2):
        fs = k.function_set(X, Y)
        if len(fs.obj) != len(Y) ** len(X):
            return {"X": str(X), "Y": str(Y), "size": len(fs.obj)}
        ev = fs.ev.table
        for g in fs.obj.elements:
            for x in X.elements:
                if ev[Pair(g, x)] != g(x):
                    return {"X": str(X), "Y": str(Y), "graph": str(g), "at": str(x)}
        for I in run.exhaustive_sets():
            IX = k.product(I, X).obj
            found = defaultdict(list)
            for qbar in all_functions(I, fs.obj):
                run.tick()
                key = tuple(ev[Pair(qbar(p.left), p.right)] for p in IX.elements)
                found[key].append(qbar)
            for q in run.funcs(IX, Y):
                run.tick()
                meds = found.get(q.values, [])
                base = {"I": str(I), "X": str(X), "q": _fn(q)}
                if len(meds) != 1:
                    return {**base, "mediators": [str(m) for m in meds]}
                try:
                    qbar = k.curry(q, fs, I)
                except ETCSError as e:
                    return {**base, "error": str(e), "mediators": [str(meds[0])]}
                if qbar != meds[0]:
                    return {**base, "constructed": str(qbar), "mediators": [str(meds[0])]}
                if k.uncurry(qbar, fs) != q:
                    return {**base, "constructed": str(qbar), "problem": "uncurry does not invert curry"}
    return None


def _check_a7(k: Kernel, run: _Run):
    sets = run.sets()
    probes = run.exhaustive_sets()
    for X, Y in itertools.product(sets, repeat=2):
        for f in run.funcs(X, Y):
            for y in Y.elements:
                cone = k.inverse_image(f, y)
                base = {"f": _fn(f), "y": str(y)}
                if any(f(v) != y for v in cone.incl.values) or not cone.incl.is_injective():
                    return {**base, "fibre": str(cone.obj), "problem": "inclusion leaves the fibre"}
                for I in probes:
                    found = defaultdict(list)
                    for qbar in all_functions(I, cone.obj):
                        run.tick()
                        found[compose(cone.incl, qbar).values].append(qbar)
                    for q in run.funcs(I, X):
                        if any(f(v) != y for v in q.values):
                            continue
                        run.tick()
                        meds = found.get(q.values, [])
                        wit = {**base, "I": str(I), "q": _fn(q)}
                        if len(meds) != 1:
                            return {**wit, "fibre": str(cone.obj), "mediators": [str(m) for m in meds]}
                        try:
                            qbar = k.factor_through(cone, q)
                        except ETCSError as e:
                            return {**wit, "error": str(e), "mediators": [str(meds[0])]}
                        if qbar != meds[0]:
                            return {**wit, "constructed": str(qbar), "mediators": [str(meds[0])]}
    return None


def _check_a8(k: Kernel, run: _Run):
    cl = k.classifier()
    t = cl.truth_value
    for A, X in itertools.product(run.sets(), repeat=2):
        chis = list(all_functions(X, cl.two))
        for j in run.funcs(A, X):
            run.tick()
            if not j.is_injective():
                try:
                    k.characteristic(j)
                except NotInjective:
                    continue
                return {"j": _fn(j), "problem": "non-injection was classified"}
            run.tick(len(chis))
            classifying = [chi for chi in chis if is_inverse_image(j, chi, t)]
            base = {"j": _fn(j), "truth": str(t)}
            if len(classifying) != 1:
                return {**base, "classifying": [str(c) for c in classifying]}
            chi = k.characteristic(j)
            if chi != classifying[0]:
                return {**base, "constructed": str(chi), "classifying": [str(classifying[0])]}
    return None


def _check_a9(k: Kernel, run: _Run):
    sys = NatSystem(max(PREFIX_LENGTH, 2) + 1)
    for X in run.sets():
        seqs = {n: list(itertools.product(X.elements, repeat=n)) for n in range(PREFIX_LENGTH + 1)}
        for r in run.funcs(X, X):
            for a in X.elements:
                x = recurse(sys, a, r)
                base = {"X": str(X), "a": str(a), "r": str(r)}
                if rec_eval(x, 0).values[0] != a:
                    return {**base, "problem": "x(0) != a"}
                for n in range(PREFIX_LENGTH - 1):
                    if x.at(n + 1) != r(x.at(n)):
                        return {**base, "problem": f"x({n + 1}) != r(x({n}))"}
                for n, candidates in seqs.items():
                    run.tick(len(candidates))
                    ok = [s for s in candidates if prefix_unique(sys, a, r, s)]
                    if len(ok) != 1 or list(ok[0]) != x.prefix(n):
                        return {**base, "length": n, "solutions": [" ".join(map(str, s)) for s in ok]}
    return None


def _check_a10(k: Kernel, run: _Run):
    for X, Y in itertools.product(run.sets(), repeat=2):
        iY = identity(Y)
        sections = list(all_functions(Y, X))
        for s in run.funcs(X, Y):
            run.tick()
            if not s.is_surjective():
                try:
                    k.right_inverse(s)
                except NotSurjective:
                    continue
                return {"s": _fn(s), "problem": "non-surjection was given a right inverse"}
            i = k.right_inverse(s)
            if compose(s, i) != iY:
                return {"s": _fn(s), "constructed": str(i), "problem": "s . i is not the identity"}
            run.tick(len(sections))
            n = sum(1 for c in sections if compose(s, c) == iY)
            expected = math.prod(oracles.fibre_sizes(X.elements, Y.elements, s.table))
            if n != expected:
                return {"s": _fn(s), "right_inverses": n, "fibre_product": expected}
    return None


def _check_terminal_iff_one(k: Kernel, run: _Run):
    probes = run.exhaustive_sets()
    cl = k.classifier()
    candidates = run.sets() + [k.terminal(), cl.two, k.product(k.terminal(), k.terminal()).obj]
    for T in candidates:
        run.tick()
        one = len(elements(T)) == 1
        if is_terminal(T) != one or is_terminal_by_definition(T, probes) != one:
            return {"T": str(T), "elements": len(T)}
    return None


def _check_classifier_two(k: Kernel, run: _Run):
    run.tick()
    n = len(elements(k.classifier().two))
    return None if n == 2 else {"two": str(k.classifier().two), "elements": n}


def _check_choice_least(k: Kernel, run: _Run):
    for X, Y in itertools.product(run.sets(), repeat=2):
        for s in run.funcs(X, Y):
            if not s.is_surjective():
                continue
            run.tick()
            i = k.right_inverse(s)
            least = oracles.least_preimages(X.elements, Y.elements, s.table)
            if i.table != least:
                return {"s": _fn(s), "constructed": str(i), "least": str(FnMor(Y, X, least))}
    return None


def _check_coproduct(k: Kernel, run: _Run):
    sets = run.exhaustive_sets(MAX_SIZE["coproduct-iso"])
    for X, Y in itertools.product(sets, repeat=2):
        run.tick()
        b = coproduct_builds(X, Y)
        base = {"X": str(X), "Y": str(Y)}
        if len(b.obj) != len(X) + len(Y) or len(b.obj) != len(oracles.tagged_union(X.elements, Y.elements)):
            return {**base, "size": len(b.obj)}
        comparisons = []
        for phi in all_functions(b.obj, b.axiomatic_obj):
            run.tick()
            if compose(phi, b.inl) == b.axiomatic_inl and compose(phi, b.inr) == b.axiomatic_inr:
                comparisons.append(phi)
        if len(comparisons) != 1 or is_isomorphism(comparisons[0]) is None:
            return {**base, "comparisons": [str(c) for c in comparisons]}
        for Z in sets:
            found = defaultdict(int)
            for h in all_functions(b.obj, Z):
                run.tick()
                found[compose(h, b.inl).values, compose(h, b.inr).values] += 1
            for f in all_functions(X, Z):
                for g in all_functions(Y, Z):
                    if found.get((f.values, g.values), 0) != 1:
                        return {**base, "f": _fn(f), "g": _fn(g), "copairings": found.get((f.values, g.values), 0)}
    return None


def _is_equivalence(xs, pairs) -> bool:
    rel = set(pairs)
    return (
        all((x, x) in rel for x in xs)
        and all((b, a) in rel for a, b in rel)
        and all((a, d) in rel for a, b in rel for c, d in rel if b == c)
    )


def _check_quotient(k: Kernel, run: _Run):
    for X in run.exhaustive_sets(MAX_SIZE["quotient-oracle"]):
        xs = X.elements
        for blocks in oracles.set_partitions(xs):
            run.tick()
            rel = EquivRelation.from_blocks(X, blocks)
            Q, q = quotient(rel)
            expected = oracles.union_find_partition(xs, rel.pairs())
            got = oracles.fibre_partition(xs, q.values)
            base = {"X": str(X), "relation": [f"{a}~{b}" for a, b in rel.pairs()]}
            if got != expected or not q.is_surjective():
                return {**base, "quotient": str(Q)}
            for a, b in itertools.product(xs, repeat=2):
                if (q(a) == q(b)) != rel.holds(a, b):
                    return {**base, "pair": f"{a},{b}"}
        if len(xs) <= 3:
            # every relation on X: quotient succeeds exactly on the equivalences
            square = list(itertools.product(xs, repeat=2))
            for bits in itertools.product((False, True), repeat=len(square)):
                run.tick()
                pairs = [p for p, keep in zip(square, bits) if keep]
                rel = EquivRelation.from_pairs(X, pairs)
                try:
                    quotient(rel)
                    accepted = True
                except NotEquivalence:
                    accepted = False
                if accepted != _is_equivalence(xs, pairs):
                    return {"X": str(X), "relation": [f"{a}~{b}" for a, b in pairs], "accepted": accepted}
    return None


def _check_indexed_product(k: Kernel, run: _Run):
    cap = MAX_SIZE["indexed-product-iso"]
    for X in run.exhaustive_sets(cap):
        for I in run.exhaustive_sets(min(cap, 3)):
            for p in all_functions(X, I):
                run.tick()
                prod = indexed_product(p)
                brute = oracles.fibre_product(X.elements, I.elements, p.table)
                as_tuples = {tuple(g(i) for i in I.elements) for g in prod.elements}
                expected = math.prod(oracles.fibre_sizes(X.elements, I.elements, p.table))
                if as_tuples != set(brute) or len(prod) != len(brute) or len(prod) != expected:
                    return {"p": _fn(p), "product": str(prod), "expected_size": len(brute)}
    return None


def _check_integers(k: Kernel, run: _Run):
    for B in range(1, max(run.size, 1) + 1):
        run.tick()
        Z, q = build_integers(B)
        pairs = q.dom.elements
        expected = oracles.fibre_partition(pairs, [p.left.k - p.right.k for p in pairs])
        got = oracles.fibre_partition(pairs, q.values)
        if len(Z) != 2 * B + 1 or got != expected:
            return {"bound": B, "classes": len(Z), "expected": 2 * B + 1}
    return None


def _check_arith(k: Kernel, run: _Run):
    sys = NatSystem(ARITH_LIMIT)
    native = {"add": lambda m, n: m + n, "mul": lambda m, n: m * n, "pow": lambda m, n: m**n}
    for op, fn in native.items():
        for m in range(ARITH_LIMIT):
            for n in range(ARITH_LIMIT):
                if fn(m, n) >= ARITH_LIMIT:
                    continue
                run.tick()
                got = nat_arith(op, m, n, sys)
                if got != fn(m, n):
                    return {"op": op, "m": m, "n": n, "got": got, "native": fn(m, n)}
    if run.rng is not None:
        big = NatSystem()
        for _ in range(run.samples):
            op = run.rng.choice(sorted(native))
            m, n = _random_operands(run.rng, op, big.bound)
            run.tick()
            run.sampled += 1
            if nat_arith(op, m, n, big) != native[op](m, n):
                return {"op": op, "m": m, "n": n, "native": native[op](m, n)}
    return None


def _random_operands(rng: random.Random, op: str, bound: int) -> tuple[int, int]:
    if op == "add":
        m = rng.randrange(bound)
        return m, rng.randrange(bound - m)
    if op == "mul":
        m = rng.randrange(1, bound)
        return m, rng.randrange((bound - 1) // m + 1)
    m = rng.randrange(2, 100)
    n = 0
    while m ** (n + 1) < bound:
        n += 1
    return m, rng.randrange(n + 1)


_CHECKS: dict[str, tuple[Callable, str]] = {
    "A1": (_check_a1, "associativity and identity laws over all composable triples"),
    "A2": (_check_a2, "exactly one function from every probe set into the terminal set"),
    "A3": (_check_a3, "empty set has no elements and one function into every probe set"),
    "A4": (_check_a4, "functions agreeing on all elements are equal, all parallel pairs"),
    "A5": (_check_a5, "every pairing (f1, f2) has exactly one mediator"),
    "A6": (_check_a6, "every q: I x X -> Y has exactly one curried transpose"),
    "A7": (_check_a7, "every map into a fibre factors uniquely through the inclusion"),
    "A8": (_check_a8, "every injection has exactly one classifying map"),
    "A9": (_check_a9, f"recursion equations and uniqueness on prefixes of length <= {PREFIX_LENGTH}"),
    "A10": (_check_a10, "every surjection has a right inverse; count = product of fibre sizes"),
    "terminal-iff-one": (_check_terminal_iff_one, "terminal exactly when one element"),
    "classifier-two": (_check_classifier_two, "the classifier has exactly two elements"),
    "choice-least": (_check_choice_least, "right inverses choose the least preimage"),
    "coproduct-iso": (_check_coproduct, "axiomatic disjoint union uniquely isomorphic to the tagged union"),
    "quotient-oracle": (_check_quotient, "quotient classes match the union-find partition"),
    "indexed-product-iso": (_check_indexed_product, "indexed product matches the brute-force fibre product"),
    "integers": (_check_integers, "(N x N)/~ has 2B+1 classes, one per difference m - n"),
    "arith-recursion": (_check_arith, f"recursive add/mul/pow equal native arithmetic below {ARITH_LIMIT}"),
}


def _run_check(
    check_id: str,
    size: int,
    kernel: Kernel,
    seed: int | None,
    samples: int,
    ceiling: int,
) -> Report:
    fn, what = _CHECKS[check_id]
    run = _Run(size, seed, samples, ceiling)
    instance = f"{what}; sets of size <= {size}"
    if kernel.mutation:
        instance += f"; mutation {kernel.mutation}"
    start = time.perf_counter()
    try:
        witness = fn(kernel, run)
    except BudgetExceeded as e:
        witness = {"error": "BudgetExceeded", "instances": e.count, "ceiling": e.ceiling}
    elapsed = time.perf_counter() - start
    stats = {"instances": run.count, "elapsed": elapsed}
    if seed is not None:
        stats["seed"] = seed
        stats["sampled"] = run.sampled
    if witness is not None:
        verdict = "fail"
    elif check_id == "A9":
        verdict = "prefix-verified"
    else:
        verdict = "pass"
    return Report(check_id, instance, verdict, witness, stats)


def check_axiom(
    axiom_id: str,
    size_limit: int = 3,
    *,
    kernel: Kernel = DEFAULT_KERNEL,
    seed: int | None = None,
    samples: int = 64,
    ceiling: int = DEFAULT_CEILING,
) -> Report:
    """Run one check at ``size_limit``.

    Raises ``ValueError`` when ``size_limit`` exceeds that check's configured
    maximum (see ``MAX_SIZE``).
    """
    if axiom_id not in _CHECKS:
        raise ValueError(f"unknown check {axiom_id!r}; expected one of {', '.join(CHECK_IDS)}")
    if size_limit < 1:
        raise ValueError("size_limit must be positive")
    if size_limit > MAX_SIZE[axiom_id]:
        raise ValueError(f"size {size_limit} exceeds the maximum {MAX_SIZE[axiom_id]} for {axiom_id}")
    return _run_check(axiom_id, size_limit, kernel, seed, samples, ceiling)


def _run_entry(args) -> Report:
    check_id, size, mutation, seed, samples, ceiling = args
    kernel = DEFAULT_KERNEL
    if mutation is not None and MUTATIONS[mutation][3] == check_id:
        kernel = mutated_kernel(MUTATIONS[mutation][0], mutation)
    return _run_check(check_id, size, kernel, seed, samples, ceiling)


def check_all(
    size_limit: int = 3,
    *,
    ids: tuple[str, ...] = CHECK_IDS,
    mutation: str | None = None,
    seed: int | None = None,
    samples: int = 64,
    ceiling: int = DEFAULT_CEILING,
    workers: int = 1,
) -> list[Report]:
    """One report per check, in ``ids`` order.

    Each check runs at ``min(size_limit, MAX_SIZE[id])``. A ``mutation``
    (see :data:`etcs.kernel.MUTATIONS`) is injected only into the check it
    targets, so every other report exercises the unmodified constructions.
    """
    if mutation is not None and mutation not in MUTATIONS:
        mutated_kernel("", mutation)  # raises InapplicableMutation
    jobs = [(i, min(size_limit, MAX_SIZE[i]), mutation, seed, samples, ceiling) for i in ids]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_entry, jobs))
    return [_run_entry(job) for job in jobs]


def mutate_and_check(construction_id: str, mutation: str, size_limit: int = 3) -> Report:
    """Run the check targeted by ``mutation`` against a corrupted construction."""
    kernel = mutated_kernel(construction_id, mutation)
    target = MUTATIONS[mutation][3]
    return _run_check(target, min(size_limit, MAX_SIZE[target]), kernel, None, 64, DEFAULT_CEILING)
