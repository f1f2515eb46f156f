"""Products, function sets and fibres, with their mediators counted by hand.

Every universal property says "there is exactly one function such that ...".
Here we build each construction, ask it for the mediator, and then list every
function with the right boundary to see that the one we got is the only one.
"""

from etcs import (
    FnMor,
    SetObj,
    all_functions,
    atoms,
    compose,
    curry,
    function_set,
    inverse_image,
    factor_through,
    mediate_product,
    product,
)

X = SetObj(atoms("a b"))
Y = SetObj(atoms("0 1 2"))
I = SetObj(atoms("s t"))

# the product X x Y and a pairing of two functions out of I
cone = product(X, Y)
print("X x Y =", cone.obj)
f1 = FnMor(I, X, dict(zip(I, atoms("a b"))))
f2 = FnMor(I, Y, dict(zip(I, atoms("2 2"))))
m = mediate_product(cone, f1, f2)
print("(f1, f2) =", m)

candidates = [h for h in all_functions(I, cone.obj) if compose(cone.pr1, h) == f1 and compose(cone.pr2, h) == f2]
print(f"functions I -> X x Y with both projections right: {len(candidates)} of {len(list(all_functions(I, cone.obj)))}")

# currying: I x X -> Y corresponds to I -> Y^X
fs = function_set(X, Y)
q = FnMor(product(I, X).obj, Y, {p: Y.elements[(I.elements.index(p.left) + X.elements.index(p.right)) % 3] for p in product(I, X).obj})
qbar = curry(q, fs, I)
print("\nq    =", q)
print("qbar =", qbar)
print("|Y^X| =", len(fs.obj), "= 3^2")

# a fibre and a map that factors through it
f = FnMor(Y, X, dict(zip(Y, atoms("a a b"))))
fib = inverse_image(f, X.elements[0])
print("\nfibre of a under", f, "is", fib.obj)
g = FnMor(I, Y, dict(zip(I, atoms("1 0"))))
print("g factors as", factor_through(fib, g))
