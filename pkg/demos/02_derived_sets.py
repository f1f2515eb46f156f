"""Set equipment assembled from the primitives.

Quotients come from currying a relation's characteristic map, disjoint unions
are carved out of a product of power sets, and the integers are pairs of
naturals identified when their differences agree.
"""

from etcs import EquivRelation, FnMor, SetObj, atoms, build_integers, indexed_product, nat_arith, quotient
from etcs.derived import coproduct_builds
from etcs.values import Nat, Pair

X = SetObj(atoms("1 2 3 4"))
rel = EquivRelation.from_blocks(X, [atoms("1 2"), atoms("3"), atoms("4")])
Q, q = quotient(rel)
print(f"{X} / ~ has {len(Q)} classes")
for x in X:
    print(f"  class of {x}:", " ".join(str(y) for y, v in q(x).entries if v.b))

b = coproduct_builds(SetObj(atoms("a")), SetObj(atoms("a b")))
print("\ntagged union      :", b.obj)
print("built from axioms :", len(b.axiomatic_obj), "elements inside 2^X x 2^Y")
print("comparison map    :", b.iso)

Z, cls = build_integers(10)
print(f"\n(N x N)/~ at bound 10 has {len(Z)} classes")
same = cls(Pair(Nat(2), Nat(5))) == cls(Pair(Nat(0), Nat(3)))
diff = cls(Pair(Nat(2), Nat(5))) == cls(Pair(Nat(0), Nat(4)))
print("(2,5) ~ (0,3):", same, "  (2,5) ~ (0,4):", diff)

p = FnMor(SetObj(atoms("a b c d e")), SetObj(atoms("i j")), dict(zip(atoms("a b c d e"), atoms("i i j j j"))))
print("\nproduct of fibres of sizes 2 and 3 has", len(indexed_product(p)), "elements")

print("\n2^10 by iterated successor:", nat_arith("pow", 2, 10))
