"""Executable set theory over finite sets: the ten axioms as constructions,
derived set equipment, an exhaustive verifier and a small script language."""

from .core import (
    TERMINAL,
    FnMor,
    FunctionSpace,
    SetObj,
    all_functions,
    compose,
    count_functions,
    element,
    elements,
    evaluate,
    fn_equal,
    identity,
    is_isomorphism,
)
from .constructions import (
    characteristic,
    classifier,
    curry,
    empty,
    factor_through,
    function_set,
    inverse_image,
    is_inverse_image,
    is_terminal,
    mediate_product,
    product,
    right_inverse,
    terminal,
    uncurry,
)
from .derived import (
    EquivRelation,
    Subset,
    build_integers,
    coproduct,
    image,
    indexed_product,
    quotient,
)
from .errors import ETCSError
from .nno import NatSystem, nat_arith, rec_eval, recurse
from .report import Report, render_report
from .values import FALSE, TRUE, UNIT, Atom, Bool, Graph, Nat, Pair, TagL, TagR, Unit, Value, atoms
from .verifier import check_all, check_axiom, mutate_and_check

__version__ = "0.1.0"
