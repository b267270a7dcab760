"""Setting x3 = 1 in A3: every character specializes to a character of A2."""

from clusterchar import ArcCategory, cc
from clusterchar.specialize import check_specialization_closure, cy_reduce, specialize_cc

C = ArcCategory(3)  # hexagon, T = (1,3), (1,4), (1,5)
ctx = cy_reduce(C, 2)  # cut along the ear (1,5)
print("removed arc", ctx.arc, "-> reduced polygon with", ctx.reduced.N, "vertices")

for x in C.indecomposables():
    value, cert = specialize_cc(ctx, x)
    print()
    print(f"sigma(CC{x.labels}) = {value}")
    print("\n".join(cert.render(C, ctx)))

# the other direction: the image is the whole cluster algebra of A2
report = check_specialization_closure(C.module.quiver, 2)
print()
print("closure", report.verdict)
for v, expansion in report.expansions.items():
    terms = [f"{c}*" + ("*".join(f"({w})" for w in mono) or "1") for mono, c in expansion.items()]
    print(f"sigma({v}) = " + " + ".join(terms))

# a direct check on one object
x = C.obj((2, 6))
print(ctx.sigma(cc(C, x)) == specialize_cc(ctx, x)[0])
