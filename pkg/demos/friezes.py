"""Friezes of type A from triangulations, and lifting them one rank up."""

from clusterchar import ArcCategory
from clusterchar.frieze import enumerate_friezes, frieze_entries, friezes_from_clusters, lift_frieze, triangulations

# the Conway-Coxeter table of one triangulation of the hexagon
N = 6
t = triangulations(N)[0]
m = frieze_entries(N, t)
print("triangulation", t)
for i in range(1, N + 1):
    print(" ".join(f"{m[(i, (i + k - 1) % N + 1)]:2d}" for k in range(N + 1)))

for n in range(1, 5):
    q = ArcCategory(n).module.quiver
    fs = enumerate_friezes(q)
    same = [f.initial for f in fs] == [f.initial for f in friezes_from_clusters(q)]
    print(f"A{n}: {len(fs)} friezes, cluster route agrees: {same}")

# every frieze of A2 lifts uniquely to A3 with x3 = 1
q3 = ArcCategory(3).module.quiver
big = enumerate_friezes(q3)
for g in enumerate_friezes(ArcCategory(2).module.quiver):
    rep = lift_frieze(q3, 2, g, big)
    print(g.initial, "->", rep.frieze.initial, rep.verdict)
