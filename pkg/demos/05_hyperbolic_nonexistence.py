"""In the hyperbolic plane a negative real discriminant rules out every root.

The solver certifies this in closed form; here a dense grid agrees that the
residual never approaches zero.
"""
from vecquad.algebra import HYPERBOLIC, QuadraticCoeffs
from vecquad.oracle import GridSpec, grid_search_full
from vecquad.solvers import solve

for p, q in [(0.0, 1.0), (1.0, 2.0), (-2.0, 1.5)]:
    c = QuadraticCoeffs(p, q)
    report = solve(HYPERBOLIC, c)
    grid = grid_search_full(HYPERBOLIC, c, GridSpec.default_for(c))
    print(f"p={p:5} q={q:4}  D={report.discriminant:6.2f}  certified={report.no_solution_certified}"
          f"  grid minimum |f|={grid.min_residual:.3f}")
