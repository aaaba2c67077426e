"""Cross-check the solver against a brute-force residual grid."""
from vecquad.algebra import QuadraticCoeffs, phs
from vecquad.oracle import GridSpec, grid_search, match_roots
from vecquad.solvers import solve

for name, p, q in [("lp:1", 1, 1), ("lp:3", 2, 5), ("max", -1, 2)]:
    alg, c = phs(name), QuadraticCoeffs(p, q)
    spec = GridSpec.default_for(c)
    roots = solve(alg, c).points()
    findings = grid_search(alg, c, spec)
    agreement = match_roots(roots, findings, spec)
    good = sum(1 for g in findings if g.residual < 1e-6)
    print(f"{name:6} p={p:2} q={q}: {len(roots)} solver roots, {good} grid roots, agree={agreement.ok}")
