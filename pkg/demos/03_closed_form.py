"""Closed-form roots of z^2 + p z + q 1 in the circular and hyperbolic planes."""
from vecquad.algebra import CIRCULAR, HYPERBOLIC, QuadraticCoeffs, format_vec
from vecquad.solvers import solve


def show(alg, p, q):
    report = solve(alg, QuadraticCoeffs(p, q))
    print(f"{alg}  p={p} q={q}  D={report.discriminant:g}")
    if report.no_solution_certified:
        print("   no vector zero exists")
    for root in report.roots:
        extra = "" if root.hyp_domain_ok is None else f" hyp_domain_ok={root.hyp_domain_ok}"
        print(f"   {format_vec(root.z):>28}  {root.kind:11} residual={root.residual:.1e}{extra}")


# Negative discriminant: a conjugate pair off the axis.
show(CIRCULAR, 2, 5)
# Positive discriminant: two real roots, nothing accompanies them.
show(CIRCULAR, -3, 1)
# The hyperbolic plane gives real roots plus a second pair (x, +-y).
show(HYPERBOLIC, -4, 3)
# ...and nothing at all when the real discriminant is negative.
show(HYPERBOLIC, 0, 1)
