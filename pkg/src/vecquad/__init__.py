"""Vector zeros of quadratic polynomials over plane algebras.

A scalar quadratic ``x**2 + p x + q`` without real zeros is paired with an
accompanying variable ``y``; the pair ``z = (x, y)`` then solves the vector
equation ``z^2 + p z + q ONE = o`` where the square is taken with one of
several vector products on the plane.
"""

from .algebra import (
    CIRCULAR,
    HYPERBOLIC,
    II,
    ONE,
    ORIGIN,
    Algebra,
    QuadraticCoeffs,
    Vec2,
    add,
    circ_mul,
    eval_poly,
    hyp_mul,
    mul,
    parse_algebra,
    phs,
    phs_mul,
    scale,
    square,
)
from .errors import (
    ConditionNotMet,
    DegenerateFunctionalError,
    DomainError,
    ParseError,
    UnsupportedRegime,
    VecquadError,
)
from .functionals import (
    CATALOG,
    EUCLIDEAN,
    MAX_NORM,
    PhsFunctional,
    lp,
    n_of_phi,
    parse_functional,
    q_of_z,
    q_star,
    weighted_lp,
)
from .oracle import GridFinding, GridSpec, check_laws, grid_search, grid_search_full, match_roots
from .solvers import (
    ACCOMPANIED,
    REAL_AXIS,
    PolarSolution,
    Root,
    RootReport,
    SolveOptions,
    circular_polar,
    find_phi_roots,
    residual,
    solve,
    solve_circular,
    solve_hyperbolic,
    solve_phs,
    solve_real,
)

__version__ = "0.1.0"
