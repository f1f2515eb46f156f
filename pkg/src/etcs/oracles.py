"""Direct, construction-free reference computations.

Nothing here calls :mod:`etcs.constructions` or :mod:`etcs.derived`; inputs
and outputs are plain Python containers of values, so a bug in a
construction cannot leak into the answer it is checked against.
"""

from __future__ import annotations

import itertools
from typing import Hashable, Iterable, Iterator, Sequence


class UnionFind:
    def __init__(self, items: Iterable[Hashable]):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def blocks(self) -> frozenset[frozenset]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), set()).add(x)
        return frozenset(frozenset(b) for b in out.values())


def union_find_partition(items: Iterable, pairs: Iterable[tuple]) -> frozenset[frozenset]:
    uf = UnionFind(items)
    for a, b in pairs:
        uf.union(a, b)
    return uf.blocks()


def fibre_partition(domain: Sequence, values: Sequence) -> frozenset[frozenset]:
    """Blocks of equal value for the table ``domain[i] |-> values[i]``."""
    out: dict = {}
    for x, v in zip(domain, values):
        out.setdefault(v, set()).add(x)
    return frozenset(frozenset(b) for b in out.values())


def set_partitions(items: Sequence) -> Iterator[list[list]]:
    """All partitions of ``items`` via restricted growth strings."""
    n = len(items)
    if n == 0:
        yield []
        return

    def grow(prefix: list[int], top: int):
        if len(prefix) == n:
            blocks: list[list] = [[] for _ in range(top + 1)]
            for x, b in zip(items, prefix):
                blocks[b].append(x)
            yield blocks
            return
        for b in range(top + 2):
            yield from grow(prefix + [b], max(top, b))

    yield from grow([0], 0)


def tables(dom: Sequence, cod: Sequence) -> Iterator[dict]:
    """Every total mapping ``dom -> cod`` as a dict."""
    for vals in itertools.product(cod, repeat=len(dom)):
        yield dict(zip(dom, vals))


def fibre_product(dom: Sequence, index: Sequence, p: dict) -> list[tuple]:
    """Brute-force product of the fibres of ``p``: tuples ordered like ``index``."""
    fibres = [[x for x in dom if p[x] == i] for i in index]
    return list(itertools.product(*fibres))


def count_sections(dom: Sequence, cod: Sequence, s: dict) -> int:
    """Number of ``i: cod -> dom`` with ``s(i(y)) = y``, by direct enumeration."""
    return sum(1 for t in tables(cod, dom) if all(s[t[y]] == y for y in cod))


def fibre_sizes(dom: Sequence, cod: Sequence, s: dict) -> list[int]:
    return [sum(1 for x in dom if s[x] == y) for y in cod]


def least_preimages(dom: Sequence, cod: Sequence, s: dict) -> dict:
    return {y: min(x for x in dom if s[x] == y) for y in cod}


def tagged_union(xs: Sequence, ys: Sequence) -> list[tuple]:
    return [("L", x) for x in xs] + [("R", y) for y in ys]
