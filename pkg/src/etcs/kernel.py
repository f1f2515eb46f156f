"""The bundle of constructions a verification run exercises, and the
deliberately broken variants used as negative controls.

Every mutation here is a module-level function so mutated kernels can be
shipped to worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable

from . import constructions as C
from .core import FnMor, SetObj, element
from .errors import InapplicableMutation
from .values import FALSE, Graph

__all__ = ["Kernel", "MUTATIONS", "DEFAULT_KERNEL", "mutated_kernel"]


@dataclass(frozen=True)
class Kernel:
    terminal: Callable = C.terminal
    empty: Callable = C.empty
    product: Callable = C.product
    mediate_product: Callable = C.mediate_product
    function_set: Callable = C.function_set
    curry: Callable = C.curry
    uncurry: Callable = C.uncurry
    inverse_image: Callable = C.inverse_image
    factor_through: Callable = C.factor_through
    classifier: Callable = C.classifier
    characteristic: Callable = C.characteristic
    right_inverse: Callable = C.right_inverse
    mutation: str | None = None


DEFAULT_KERNEL = Kernel()


def _swapped_product(X: SetObj, Y: SetObj) -> C.ProductCone:
    # the projections trade places; only type-correct when X == Y
    cone = C.product(X, Y)
    if X != Y:
        return cone
    return C.ProductCone(cone.obj, cone.pr2, cone.pr1)


def _broken_curry(q: FnMor, fs: C.FunctionSetObj, I: SetObj | None = None) -> FnMor:
    # each curried graph gets its first value bumped to the next codomain element
    qbar = C.curry(q, fs, I)
    ys = fs.cod.elements
    if not fs.dom.elements or len(ys) < 2:
        return qbar
    bumped = []
    for g in qbar.values:
        (x0, y0), rest = g.entries[0], g.entries[1:]
        y1 = ys[(ys.index(y0) + 1) % len(ys)]
        bumped.append(Graph._sorted(((x0, y1),) + rest))
    return FnMor._trusted(qbar.dom, qbar.cod, tuple(bumped))


def _short_inverse_image(f: FnMor, y) -> C.InverseImageCone:
    # the greatest element of every nonempty fibre goes missing
    cone = C.inverse_image(f, y)
    if not cone.obj.elements:
        return cone
    A = SetObj._trusted(cone.obj.elements[:-1])
    return C.InverseImageCone(A, FnMor._trusted(A, f.dom, A.elements), cone.f, cone.y)


def _false_classifier() -> C.ClassifierObj:
    cl = C.classifier()
    return C.ClassifierObj(cl.two, element(cl.two, FALSE))


def _greatest_right_inverse(s: FnMor) -> FnMor:
    C.right_inverse(s)  # same surjectivity check
    best = {}
    for x, y in zip(s.dom.elements, s.values):
        best[y] = x  # domain is ascending, so the last one wins
    return FnMor._trusted(s.cod, s.dom, tuple(best[y] for y in s.cod.elements))


# mutation -> (construction it corrupts, kernel field, replacement, report it targets)
MUTATIONS: dict[str, tuple[str, str, Callable, str]] = {
    "swap_projection": ("product", "product", _swapped_product, "A5"),
    "break_curry": ("function_set", "curry", _broken_curry, "A6"),
    "drop_fibre_element": ("inverse_image", "inverse_image", _short_inverse_image, "A7"),
    "wrong_truth_element": ("classifier", "classifier", _false_classifier, "A8"),
    "non_least_choice": ("right_inverse", "right_inverse", _greatest_right_inverse, "choice-least"),
}


def mutated_kernel(construction_id: str, mutation: str) -> Kernel:
    if mutation not in MUTATIONS:
        raise InapplicableMutation(f"unknown mutation {mutation!r}")
    target, field, fn, _ = MUTATIONS[mutation]
    if construction_id != target:
        raise InapplicableMutation(f"{mutation} applies to {target}, not {construction_id}")
    return replace(DEFAULT_KERNEL, **{field: fn, "mutation": mutation})
