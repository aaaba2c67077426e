"""Roots over phs algebras: a 1-D angle equation replaces the 2-D search.

A root at angle phi must have radius sqrt(q N(2 phi)) / N(phi), so scanning phi
for sign changes of the angle equation finds every accompanied root.
"""
from vecquad.algebra import QuadraticCoeffs, format_vec, phs
from vecquad.solvers import find_phi_roots, solve

cases = [("euclidean", 1.0, 1.0), ("lp:1", 1.0, 1.0), ("max", 1.0, 1.0), ("lp:0.5", -3.0, 1.0)]
for name, p, q in cases:
    alg, c = phs(name), QuadraticCoeffs(p, q)
    report = solve(alg, c)
    phis = find_phi_roots(alg.functional, c)
    print(f"{name} p={p:g} q={q:g}: {len(phis)} angle roots, {len(report.roots)} vector zeros")
    for root in report.roots:
        flag = "" if root.locus_ok is None else f" locus_ok={root.locus_ok}"
        print(f"   {format_vec(root.z):>30}  {root.kind:11} residual={root.residual:.1e}{flag}")

# The real axis is special: Q((x, 0)) equals N(0), so a weighted functional
# rescales the real roots.
print("\nwlp:2:2:1, p=-3, q=1 real roots:")
for root in solve(phs("wlp:2:2:1"), QuadraticCoeffs(-3.0, 1.0)).roots:
    if root.kind == "real-axis":
        print("  ", format_vec(root.z))
