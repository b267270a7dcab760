"""Refined multiplication on the pentagon: L = a + a, M crossing a."""

from clusterchar import ArcCategory, cc
from clusterchar.multverify import verify_palu, verify_refined

C = ArcCategory(2)  # A2, pentagon with the fan at vertex 1
a, m = C.obj((2, 4)), C.obj((3, 5))
L = a + a

print("Hom(L, SM) has dimension", C.hom_dim(L, m))

# a line inside the 2-dim space
r = verify_refined(C, L, m, [[1, 0]])
print(r.dump(C))

# the whole space: every point of P^1 has the same cone
r = verify_refined(C, L, m, [[1, 0], [0, 1]])
print(r.dump(C))

# a single crossing gives back the exchange relation
r = verify_palu(C, a, m)
print("CC(a) CC(m) =", r.lhs)
print("           =", r.rhs)

# characters of all arcs, for reference
for x in C.indecomposables():
    print(C.format_object(x).strip(), "->", cc(C, x))
