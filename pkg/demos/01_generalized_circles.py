"""Generalized circles: the unit "circle" of each catalog functional.

Every phs functional N is positively homogeneous, so {z : N(z) = r} is a scaled
copy of one closed curve. Q*(phi) measures how far the phs square of a unit
vector drifts from the unit curve.
"""
import math

from vecquad.functionals import CATALOG, n_of_phi, q_star

angles = [k * math.pi / 8 for k in range(5)]

print("N(phi) on the first quadrant")
print("functional".ljust(14) + "".join(f"{a:>9.4f}" for a in angles))
for f in CATALOG:
    print(str(f).ljust(14) + "".join(f"{n_of_phi(f, a):>9.4f}" for a in angles))

# For the Euclidean norm Q* is identically 1; everywhere else it wobbles.
print("\nQ*(phi) = N(phi)^2 / N(2 phi)")
for f in CATALOG:
    vals = [q_star(f, a) for a in angles[1:4]]
    print(str(f).ljust(14) + "".join(f"{v:>9.4f}" for v in vals))
