"""Vector zeros of ``f(z) = z^2 + p z + q ONE`` under each product.

The real, circular and hyperbolic cases have closed forms.  The generalized
(phs) case reduces, away from the real axis, to a one-dimensional equation
in the polar angle::

    g(phi) = Q*(phi) cos(phi)**2 - p**2 / (4 q) = 0,
    r      = sqrt(q N(2 phi)) / N(phi),

which is solved by a uniform scan followed by bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from scipy.optimize import bisect

from .algebra import (
    CIRCULAR,
    HYPERBOLIC,
    Algebra,
    QuadraticCoeffs,
    Vec2,
    eval_poly,
    phs,
)
from .errors import ConditionNotMet, UnsupportedRegime
from .functionals import PhsFunctional, n_of_phi, q_star

__all__ = [
    "Root",
    "PolarSolution",
    "RootReport",
    "SolveOptions",
    "REAL_AXIS",
    "ACCOMPANIED",
    "residual",
    "solve_real",
    "solve_circular",
    "circular_polar",
    "solve_phs",
    "solve_hyperbolic",
    "solve",
    "find_phi_roots",
    "phi_equation",
]

REAL_AXIS = "real-axis"
ACCOMPANIED = "accompanied"

TWO_PI = 2.0 * math.pi
DEDUP_DISTANCE = 1e-9
# Brackets smaller than this are not worth bisecting further; scipy rejects
# relative tolerances below 4 eps.
_RTOL = 4.0 * 2.220446049250313e-16
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SolveOptions:
    scan_intervals: int = 4096
    phi_tol: float = 1e-14
    residual_tol: float = 1e-9
    exclusion_radius: float = 1e-6
    locus_tol: float = 1e-8
    tangent_tol: float = 1e-12
    # When false, solve_phs only returns real-axis roots and accepts q <= 0.
    accompanied: bool = True

    def __post_init__(self) -> None:
        if self.scan_intervals < 2:
            raise ValueError("scan_intervals must be at least 2")
        if not 0.0 < self.phi_tol < 1.0:
            raise ValueError("phi_tol must lie in (0, 1)")
        if self.residual_tol <= 0.0:
            raise ValueError("residual_tol must be positive")
        if not 0.0 < self.exclusion_radius < math.pi / 4.0:
            raise ValueError("exclusion_radius must lie in (0, pi/4)")


@dataclass(frozen=True)
class Root:
    z: Vec2
    kind: str
    residual: float
    hyp_domain_ok: Optional[bool] = None
    locus_ok: Optional[bool] = None

    @property
    def phi(self) -> float:
        return _angle(self.z)


@dataclass(frozen=True)
class PolarSolution:
    r: float
    phi: float

    def to_vec(self) -> Vec2:
        return Vec2.polar(self.r, self.phi)


@dataclass
class RootReport:
    algebra: Algebra
    coeffs: QuadraticCoeffs
    roots: list[Root] = field(default_factory=list)
    polar: list[PolarSolution] = field(default_factory=list)
    discriminant: float = 0.0
    no_solution_certified: bool = False
    method: str = "closed-form"

    def points(self) -> list[Vec2]:
        return [root.z for root in self.roots]


def residual(alg: Algebra, c: QuadraticCoeffs, z: Vec2) -> float:
    """Euclidean length of ``f(z)``; zero exactly at a vector zero."""
    return eval_poly(alg, c, z).norm()


def _angle(z: Vec2) -> float:
    phi = math.atan2(z.y, z.x)
    if phi < 0.0:
        phi += TWO_PI
    return 0.0 if phi >= TWO_PI else phi


_KIND_ORDER = {REAL_AXIS: 0, ACCOMPANIED: 1}


def _finish(roots: list[Root]) -> list[Root]:
    """Merge roots closer than ``DEDUP_DISTANCE`` and sort by angle, kind, radius."""
    kept: list[Root] = []
    for root in sorted(roots, key=lambda r: (r.residual, _KIND_ORDER[r.kind])):
        if all(root.z.dist(k.z) >= DEDUP_DISTANCE for k in kept):
            kept.append(root)
    kept.sort(key=lambda r: (r.phi, _KIND_ORDER[r.kind], r.z.norm()))
    return kept


def _real_zeros(a: float, p: float, q: float) -> list[float]:
    """Zeros of ``a x**2 + p x + q`` (``a > 0``) without cancellation."""
    disc = p * p / 4.0 - a * q
    if disc < 0.0:
        return []
    s = math.sqrt(disc)
    if s == 0.0:
        return [-p / (2.0 * a)]
    # Larger-magnitude root first, the other from the product of roots.
    big = (-p / 2.0 - math.copysign(s, p)) / a
    return [big, q / (a * big)]


def _real_axis_roots(alg: Algebra, c: QuadraticCoeffs, lead: float = 1.0) -> list[Root]:
    return [
        Root(z, REAL_AXIS, residual(alg, c, z))
        for z in (Vec2(x, 0.0) for x in _real_zeros(lead, c.p, c.q))
    ]


def solve_real(c: QuadraticCoeffs) -> RootReport:
    """Real zeros ``x = -p/2 -+ sqrt(p**2/4 - q)``, placed on the first axis.

    Residuals are those of the circular polynomial, which agrees with the
    scalar polynomial on the real axis.
    """
    roots = _real_axis_roots(CIRCULAR, c)
    return RootReport(
        algebra=CIRCULAR,
        coeffs=c,
        roots=_finish(roots),
        discriminant=c.discriminant,
        no_solution_certified=not roots,
    )


def solve_circular(c: QuadraticCoeffs) -> RootReport:
    """Zeros under the circular product.

    With ``q - p**2/4 > 0`` these are ``-(p/2) ONE -+ sqrt(q - p**2/4) II``;
    otherwise they are the real zeros placed on the first axis.
    """
    d = c.discriminant
    polar: list[PolarSolution] = []
    if d < 0.0:
        x = -c.p / 2.0
        y = math.sqrt(-d)
        roots = [
            Root(z, ACCOMPANIED, residual(CIRCULAR, c, z))
            for z in (Vec2(x, y), Vec2(x, -y))
        ]
        polar = circular_polar(c)
    else:
        roots = _real_axis_roots(CIRCULAR, c)
    return RootReport(CIRCULAR, c, _finish(roots), polar, d, False)


def circular_polar(c: QuadraticCoeffs) -> list[PolarSolution]:
    """Polar form of the accompanied circular zeros: ``r = sqrt(q)``,
    ``cos(phi) = -p / (2 sqrt(q))``, ``sin(phi) = -+ sqrt(1 - p**2 / (4q))``.
    """
    if not (c.q > 0.0 and c.discriminant < 0.0):
        raise ConditionNotMet(
            f"polar form needs q - p^2/4 > 0 and q > 0 (p={c.p!r}, q={c.q!r})"
        )
    r = math.sqrt(c.q)
    cos_phi = -c.p / (2.0 * r)
    sin_phi = math.sqrt(max(0.0, 1.0 - c.p * c.p / (4.0 * c.q)))
    upper = math.atan2(sin_phi, cos_phi)
    return [PolarSolution(r, upper), PolarSolution(r, TWO_PI - upper)]


def solve_hyperbolic(c: QuadraticCoeffs) -> RootReport:
    """Zeros under the hyperbolic product.

    None when ``q - p**2/4 > 0``.  Otherwise the real zeros ``x ONE`` and the
    accompanied pair ``-(p/2) ONE -+ sqrt(p**2/4 - q) II``.  Every root is
    flagged with whether it lies in the cone ``|y| < x``.
    """
    d = c.discriminant
    if d < 0.0:
        return RootReport(HYPERBOLIC, c, [], [], d, True)
    candidates = [(Vec2(x, 0.0), REAL_AXIS) for x in _real_zeros(1.0, c.p, c.q)]
    s = math.sqrt(d)
    candidates += [(Vec2(-c.p / 2.0, s), ACCOMPANIED), (Vec2(-c.p / 2.0, -s), ACCOMPANIED)]
    roots = [
        Root(z, kind, residual(HYPERBOLIC, c, z), hyp_domain_ok=abs(z.y) < z.x)
        for z, kind in candidates
    ]
    return RootReport(HYPERBOLIC, c, _finish(roots), [], d, False)


def phi_equation(f: PhsFunctional, c: QuadraticCoeffs) -> Callable[[float], float]:
    """``g(phi) = Q*(phi) cos(phi)**2 - p**2/(4q)`` for ``q > 0``."""
    target = c.p * c.p / (4.0 * c.q)

    def g(phi: float) -> float:
        cos_phi = math.cos(phi)
        return q_star(f, phi) * cos_phi * cos_phi - target

    return g


def _golden_min(h: Callable[[float], float], a: float, b: float, tol: float) -> float:
    """Minimizer of a unimodal ``h`` on ``[a, b]`` to bracket width ``tol``."""
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    hc, hd = h(c), h(d)
    while b - a > tol:
        if hc <= hd:
            b, d, hd = d, c, hc
            c = b - _GOLDEN * (b - a)
            hc = h(c)
        else:
            a, c, hc = c, d, hd
            d = a + _GOLDEN * (b - a)
            hd = h(d)
        if c >= d:
            break
    return c if hc <= hd else d


def _upper_phi_roots(f: PhsFunctional, c: QuadraticCoeffs, opts: SolveOptions) -> list[float]:
    g = phi_equation(f, c)
    eps = opts.exclusion_radius
    half = max(1, opts.scan_intervals // 2)
    lo, hi = eps, math.pi - eps
    step = (hi - lo) / half
    grid = [lo + k * step for k in range(half)] + [hi]
    vals = [g(phi) for phi in grid]
    found: list[float] = []
    bracketed = set()
    for k in range(half):
        ga, gb = vals[k], vals[k + 1]
        if ga == 0.0:
            found.append(grid[k])
            bracketed.add(k)
        elif ga * gb < 0.0:
            found.append(bisect(g, grid[k], grid[k + 1], xtol=opts.phi_tol, rtol=_RTOL))
            bracketed.update((k, k + 1))
    if vals[half] == 0.0:
        found.append(grid[half])
        bracketed.add(half)
    for k in range(1, half):
        if k in bracketed or k - 1 in bracketed or k + 1 in bracketed:
            continue
        a = abs(vals[k])
        if a <= abs(vals[k - 1]) and a <= abs(vals[k + 1]):
            phi = _golden_min(lambda t: abs(g(t)), grid[k - 1], grid[k + 1], opts.phi_tol)
            if abs(g(phi)) <= opts.tangent_tol:
                found.append(phi)
    found.sort()
    return found


def find_phi_roots(
    f: PhsFunctional, c: QuadraticCoeffs, opts: SolveOptions = SolveOptions()
) -> list[float]:
    """Zeros of ``g`` on ``(0, 2 pi)`` away from ``0`` and ``pi``.

    Sign changes between scan points are bisected.  Scan points that are
    local minima of ``|g|`` without an adjacent sign change are refined by a
    golden-section search and kept when ``|g|`` drops to ``opts.tangent_tol``;
    this catches zeros where ``g`` touches the axis, e.g. ``p = 0``.

    Every catalog functional is even in ``y``, so ``g(2 pi - phi) = g(phi)``:
    the upper half is scanned and its zeros are mirrored.
    """
    if c.q <= 0.0:
        raise UnsupportedRegime(f"angle equation needs q > 0, got q={c.q!r}")
    upper = _upper_phi_roots(f, c, opts)
    return upper + [TWO_PI - phi for phi in reversed(upper)]


def _locus_deviation(z: Vec2, c: QuadraticCoeffs) -> float:
    """``|(x + h)**2 + y**2 - h**2| / h**2`` with ``h = q/p``, in a form that
    neither overflows for small ``p`` nor cancels for large ``h``."""
    k = c.p / c.q
    return abs((z.x * z.x + z.y * z.y) * k * k + 2.0 * z.x * k)


def solve_phs(
    f: PhsFunctional | str,
    c: QuadraticCoeffs,
    opts: SolveOptions = SolveOptions(),
) -> RootReport:
    """Zeros under the generalized product of the functional ``f``.

    Real-axis zeros solve ``N(0) x**2 + p x + q = 0``; for every functional
    normalized so that ``||(1, 0)|| = 1`` these are the ordinary real zeros.
    Accompanied zeros come from the angle equation; each is kept only if the
    sign condition ``r Q*(phi) cos(phi) = -p/2`` holds and its residual is
    below ``opts.residual_tol``.
    """
    alg = phs(f)
    f = alg.functional
    if c.q <= 0.0 and opts.accompanied:
        raise UnsupportedRegime(
            f"accompanied search under phs needs q > 0, got q={c.q!r}; "
            "request real-axis roots only to proceed"
        )
    # Q((x, 0)) = ||(x, 0)||**2 / ||(x**2, 0)|| = N(0) for the symmetric catalog.
    roots = _real_axis_roots(alg, c, lead=n_of_phi(f, 0.0))
    polar_of: dict[Root, PolarSolution] = {}
    if opts.accompanied:
        for phi in _upper_phi_roots(f, c, opts):
            cos_phi = math.cos(phi)
            n = n_of_phi(f, phi)
            n2 = n_of_phi(f, 2.0 * phi)
            r = math.sqrt(c.q * n2) / n
            qs = n * n / n2
            consistent = abs(r * qs * cos_phi + c.p / 2.0) <= opts.locus_tol * (1.0 + abs(c.p))
            # Squaring admitted r Q* cos(phi) = +p/2 as well; those roots are
            # dropped unless p is so small that both signs agree to tolerance.
            wrong_side = c.p != 0.0 and math.copysign(1.0, cos_phi) == math.copysign(1.0, c.p)
            if not consistent or (wrong_side and abs(c.p) > opts.locus_tol):
                continue
            z = Vec2.polar(r, phi)
            res = residual(alg, c, z)
            if res > opts.residual_tol:
                continue
            locus_ok = None
            if c.p != 0.0:
                locus_ok = _locus_deviation(z, c) <= opts.locus_tol
            # The conjugate is a zero with the same residual (symmetric functionals).
            for w, angle in ((z, phi), (Vec2(z.x, -z.y), TWO_PI - phi)):
                root = Root(w, ACCOMPANIED, res, locus_ok=locus_ok)
                roots.append(root)
                polar_of[root] = PolarSolution(r, angle)
    roots = _finish(roots)
    polar = sorted((polar_of[r] for r in roots if r in polar_of), key=lambda s: s.phi)
    return RootReport(alg, c, roots, polar, c.discriminant, False, method="polar-scan")


def solve(alg: Algebra, c: QuadraticCoeffs, opts: SolveOptions = SolveOptions()) -> RootReport:
    """Dispatch to the solver of ``alg``."""
    if alg.kind == "circular":
        return solve_circular(c)
    if alg.kind == "hyperbolic":
        return solve_hyperbolic(c)
    return solve_phs(alg.functional, c, opts)
