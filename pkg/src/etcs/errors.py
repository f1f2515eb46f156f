"""Exception hierarchy. Errors that have a natural witness carry it."""

from __future__ import annotations


class ETCSError(Exception):
    """Base class for kernel errors."""


class CompositionMismatch(ETCSError):
    def __init__(self, f_cod, g_dom):
        self.f_cod = f_cod
        self.g_dom = g_dom
        super().__init__(
            f"cannot compose: codomain {f_cod} of the first function "
            f"differs from domain {g_dom} of the second"
        )


class BoundaryMismatch(ETCSError):
    pass


class NotAnElement(ETCSError):
    pass


class ShapeMismatch(ETCSError):
    pass


class NotInFibre(ETCSError):
    def __init__(self, t, value):
        self.t = t
        self.value = value
        super().__init__(f"{t} is sent to {value}, which lies outside the fibre")


class NotInjective(ETCSError):
    def __init__(self, a, a2, value):
        self.a = a
        self.a2 = a2
        self.value = value
        super().__init__(f"not injective: {a} and {a2} both map to {value}")


class NotSurjective(ETCSError):
    def __init__(self, y):
        self.y = y
        super().__init__(f"not surjective: nothing maps to {y}")


class BoundExceeded(ETCSError):
    def __init__(self, n, bound):
        self.n = n
        self.bound = bound
        super().__init__(f"index {n} is outside the truncated naturals 0..{bound - 1}")


class UnsupportedInfinite(ETCSError):
    pass


class NotEquivalence(ETCSError):
    def __init__(self, law: str, witness: tuple):
        self.law = law
        self.witness = witness
        shown = ", ".join(str(w) for w in witness)
        super().__init__(f"relation is not {law}: witness ({shown})")


class BudgetExceeded(ETCSError):
    def __init__(self, count: int, ceiling: int):
        self.count = count
        self.ceiling = ceiling
        super().__init__(f"instance count {count} exceeds the ceiling {ceiling}")


class InapplicableMutation(ETCSError):
    pass
