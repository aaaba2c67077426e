"""Brute-force checks that do not share code paths with the solvers.

* :func:`grid_search` maps ``|f|`` on a polar ``(r, phi)`` grid, picks the
  discrete local minima, and refines each by coordinate-wise golden-section
  line searches, a Nelder-Mead polish and radial searches along the nearby
  grid rays.  Thin bands of geometrically spaced angles hug the coordinate
  axes, where antinorm residual valleys can be narrower than one grid cell.
  It knows nothing about the angle equation or the closed forms.
* :func:`check_laws` runs randomized algebraic-law checks on a product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from scipy.optimize import minimize

from .algebra import (
    CIRCULAR,
    ORIGIN,
    Algebra,
    QuadraticCoeffs,
    Vec2,
    mul,
)
from .solvers import residual

__all__ = [
    "GridSpec",
    "GridFinding",
    "GridResult",
    "LawStat",
    "LawReport",
    "residual",
    "residual_grid",
    "grid_search",
    "grid_search_full",
    "match_roots",
    "check_laws",
]

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_POLISH_RESTARTS = 4
_BAND_STEPS = 40
_BAND_INNER = 1e-10
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class GridSpec:
    r_min: float
    r_max: float
    r_steps: int = 512
    phi_steps: int = 2048
    refine_iters: int = 60

    def __post_init__(self) -> None:
        if not 0.0 < self.r_min < self.r_max:
            raise ValueError(f"need 0 < r_min < r_max, got {self.r_min}, {self.r_max}")
        if self.r_steps < 16 or self.phi_steps < 16:
            raise ValueError("r_steps and phi_steps must be at least 16")
        if self.refine_iters < 0:
            raise ValueError("refine_iters must be non-negative")

    @classmethod
    def default_for(cls, c: QuadraticCoeffs, **overrides) -> GridSpec:
        """Window ``r in [1e-2, 2 (1 + |p| + sqrt|q|)]``; holds every closed-form root."""
        params = dict(r_min=1e-2, r_max=2.0 * (1.0 + abs(c.p) + math.sqrt(abs(c.q))))
        params.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**params)

    def radii(self) -> np.ndarray:
        return np.linspace(self.r_min, self.r_max, self.r_steps)

    def angles(self) -> np.ndarray:
        return np.arange(self.phi_steps) * (TWO_PI / self.phi_steps)


@dataclass(frozen=True)
class GridFinding:
    z: Vec2
    residual: float
    cell: tuple[int, int]


@dataclass
class GridResult:
    findings: list[GridFinding]
    min_residual: float
    spec: GridSpec


def _unit_squares(alg: Algebra, phi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Square of the unit vector at each angle under ``alg``."""
    c, s = np.cos(phi), np.sin(phi)
    if alg.kind == "hyperbolic":
        return c * c + s * s, 2.0 * c * s
    sx, sy = c * c - s * s, 2.0 * c * s
    if alg.kind == "phs":
        f = alg.functional
        # ||u||**2 / ||u (*) u||, which equals Q(r u) for every r > 0.
        k = f.evaluate(c, s) ** 2 / f.evaluate(sx, sy)
        sx, sy = k * sx, k * sy
    return sx, sy


def residual_grid(alg: Algebra, c: QuadraticCoeffs, spec: GridSpec, squared: bool = False) -> np.ndarray:
    """``|f(r cos phi, r sin phi)|`` with shape ``(r_steps, phi_steps)``."""
    return _residual_on(alg, c, spec.radii(), spec.angles(), squared)


def _residual_on(
    alg: Algebra, c: QuadraticCoeffs, radii: np.ndarray, phi: np.ndarray, squared: bool = False
) -> np.ndarray:
    r = radii[:, None]
    sx, sy = _unit_squares(alg, phi)
    r2 = r * r
    pr = c.p * r
    fx = r2 * sx
    tmp = pr * np.cos(phi)
    fx += tmp
    fx += c.q
    fy = r2 * sy
    np.multiply(pr, np.sin(phi), out=tmp)
    fy += tmp
    fx *= fx
    fy *= fy
    fx += fy
    return fx if squared else np.sqrt(fx, out=fx)


def _local_minima(grid: np.ndarray) -> list[tuple[int, int]]:
    """Cells no larger than any neighbour; ``phi`` wraps, ``r`` does not."""
    left = np.roll(grid, 1, axis=1)
    right = np.roll(grid, -1, axis=1)
    rows, cols = np.nonzero((grid <= left) & (grid <= right))
    n_r, n_phi = grid.shape
    centre = grid[rows, cols]
    ok = np.ones(rows.shape, dtype=bool)
    for di in (-1, 1):
        nb = rows + di
        inside = (nb >= 0) & (nb < n_r)
        nb = np.clip(nb, 0, n_r - 1)
        for dj in (-1, 0, 1):
            ok &= ~inside | (centre <= grid[nb, (cols + dj) % n_phi])
    return [(int(i), int(j)) for i, j in zip(rows[ok], cols[ok])]


def _band_minima(alg: Algebra, c: QuadraticCoeffs, spec: GridSpec) -> list[tuple[int, float, float]]:
    """Strict off-axis local minima on angle bands around the four axes.

    Offsets run geometrically from ``_BAND_INNER`` up to one grid step on both
    sides of each axis.  Returns ``(radius index, angle, offset)`` triples.
    """
    dphi = TWO_PI / spec.phi_steps
    off = np.geomspace(_BAND_INNER, dphi, _BAND_STEPS)
    offsets = np.concatenate([-off[::-1], [0.0], off])
    radii = spec.radii()
    out: list[tuple[int, float, float]] = []
    for k in range(4):
        phi = k * (math.pi / 2.0) + offsets
        g = _residual_on(alg, c, radii, phi, squared=True)
        pad = np.pad(g, 1, constant_values=np.inf)
        n_r, n_a = g.shape
        ok = np.ones(g.shape, dtype=bool)
        for di in (-1, 0, 1):
            for dj in (-1, 0, 1):
                nb = pad[1 + di : 1 + di + n_r, 1 + dj : 1 + dj + n_a]
                if dj:
                    # strict across angles, so rounding plateaus do not count
                    ok &= g < nb
                elif di:
                    ok &= g <= nb
        # the axis itself and the outer edges are already on the main grid
        ok[:, [0, _BAND_STEPS, -1]] = False
        out.extend((int(i), float(phi[j]), float(offsets[j])) for i, j in zip(*np.nonzero(ok)))
    return out


def _line_min(h: Callable[[float], float], a: float, b: float, tol: float) -> tuple[float, float]:
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
    # Endpoints are never evaluated by golden section; check them for
    # minima that sit on the bracket boundary.
    best = (c, hc) if hc <= hd else (d, hd)
    for t in (a, b):
        ht = h(t)
        if ht < best[1]:
            best = (t, ht)
    return best


def _refine(
    h: Callable[[float, float], float],
    r_box: tuple[float, float],
    phi_box: tuple[float, float],
    r0: float,
    phi0: float,
    sweeps: int,
) -> tuple[float, float]:
    r, phi = r0, phi0
    best = h(r, phi)
    r_tol = 1e-15 * max(1.0, r_box[1])
    phi_tol = 1e-15 * max(1.0, abs(phi_box[1]))
    for _ in range(sweeps):
        before = (r, phi)
        t, val = _line_min(lambda t: h(t, phi), *r_box, r_tol)
        if val < best:
            r, best = t, val
        t, val = _line_min(lambda t: h(r, t), *phi_box, phi_tol)
        if val < best:
            phi, best = t, val
        if (r, phi) == before or best == 0.0:
            break
    return r, phi


def _cartesian_residual(alg: Algebra, c: QuadraticCoeffs) -> Callable[[float, float], float]:
    """``|f(x, y)|`` on plain floats for speed.

    Mirrors the product definitions directly; the residual reported for a
    finding is recomputed through :func:`vecquad.algebra.eval_poly`.
    """
    p, q = c.p, c.q
    hypot = math.hypot

    if alg.kind == "circular":

        def h(x: float, y: float) -> float:
            return hypot(x * x - y * y + p * x + q, 2.0 * x * y + p * y)

    elif alg.kind == "hyperbolic":

        def h(x: float, y: float) -> float:
            return hypot(x * x + y * y + p * x + q, 2.0 * x * y + p * y)

    else:
        norm = alg.functional._eval

        def h(x: float, y: float) -> float:
            sx, sy = x * x - y * y, 2.0 * x * y
            ns = norm(sx, sy)
            if ns == 0.0:
                return hypot(p * x + q, p * y)
            n = norm(x, y)
            k = n * n / ns
            return hypot(k * sx + p * x + q, k * sy + p * y)

    return h


def _polish(
    h: Callable[[float, float], float],
    x: float,
    y: float,
    size: float,
    window: tuple[float, float],
) -> tuple[float, float]:
    """Nelder-Mead restarts from ``(x, y)`` with shrinking initial simplices.

    Coordinate-wise searches stall in valleys that run obliquely to the
    polar axes and on the kinks of non-smooth functionals; the simplex
    adapts its shape to both.  Points outside the radial window count as
    infinitely bad so the search stays where the grid looked.
    """
    r_lo, r_hi = window

    def objective(v: np.ndarray) -> float:
        if not r_lo <= math.hypot(v[0], v[1]) <= r_hi:
            return math.inf
        return h(v[0], v[1])

    best = h(x, y)
    for _ in range(_POLISH_RESTARTS):
        if best == 0.0 or size < 1e-14:
            break
        simplex = np.array([[x, y], [x + size, y], [x, y + size]])
        res = minimize(
            objective,
            np.array([x, y]),
            method="Nelder-Mead",
            options={
                "initial_simplex": simplex,
                "xatol": 1e-14 * max(1.0, r_hi),
                "fatol": 0.0,
                "maxiter": 300,
            },
        )
        if not res.fun < best:
            size *= 1e-2
            continue
        moved = math.hypot(res.x[0] - x, res.x[1] - y)
        x, y, best = float(res.x[0]), float(res.x[1]), float(res.fun)
        size = max(moved, 1e-3 * size)
    return x, y


def _grid_direction(j: int, n: int) -> tuple[float, float]:
    """Unit vector of grid angle ``j``; exact on the coordinate axes."""
    j %= n
    if (4 * j) % n == 0:
        return ((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0))[4 * j // n]
    a = j * (TWO_PI / n)
    return math.cos(a), math.sin(a)


def _ray_search(
    h: Callable[[float, float], float],
    x: float,
    y: float,
    n: int,
    half_width: float,
    window: tuple[float, float],
) -> tuple[float, float]:
    """Radial line searches along the grid rays next to ``(x, y)``.

    Near a ray where the functional has a kink (the axes, for antinorms) the
    residual valley narrows towards the ray like a cusp and 2-D searches
    stall inside it; a search along the ray itself reaches its bottom.
    """
    best = h(x, y)
    r = math.hypot(x, y)
    j = round(math.atan2(y, x) / (TWO_PI / n))
    lo, hi = max(window[0], r - half_width), min(window[1], r + half_width)
    for jj in (j - 1, j, j + 1):
        ux, uy = _grid_direction(jj, n)
        t, val = _line_min(lambda t: h(t * ux, t * uy), lo, hi, 1e-15 * max(1.0, hi))
        if val < best:
            x, y, best = t * ux, t * uy, val
    return x, y


def grid_search_full(
    alg: Algebra, c: QuadraticCoeffs, spec: Optional[GridSpec] = None
) -> GridResult:
    """Like :func:`grid_search` but also reports the smallest residual seen."""
    spec = spec or GridSpec.default_for(c)
    grid = residual_grid(alg, c, spec, squared=True)
    radii = spec.radii()
    angles = spec.angles()
    dphi = TWO_PI / spec.phi_steps
    dr = float(radii[1] - radii[0])
    window = (spec.r_min, spec.r_max)
    # coordinate-wise refinement already reached rounding level
    converged = 1e-13 * (1.0 + abs(c.p) + abs(c.q))
    hc = _cartesian_residual(alg, c)

    def h(r: float, phi: float) -> float:
        return hc(r * math.cos(phi), r * math.sin(phi))

    findings: list[GridFinding] = []
    for i, j in _local_minima(grid):
        phi0 = float(angles[j])
        r, phi = _refine(
            h,
            (float(radii[max(i - 1, 0)]), float(radii[min(i + 1, len(radii) - 1)])),
            (phi0 - dphi, phi0 + dphi),
            float(radii[i]),
            phi0,
            spec.refine_iters,
        )
        x, y = r * math.cos(phi), r * math.sin(phi)
        if hc(x, y) > converged:
            x, y = _polish(hc, x, y, max(dr, r * dphi), window)
        x, y = _ray_search(hc, x, y, spec.phi_steps, 2.0 * dr, window)
        z = Vec2(x, y)
        findings.append(GridFinding(z, residual(alg, c, z), (i, j)))
    if alg.kind == "phs":
        for i, phi, offset in _band_minima(alg, c, spec):
            r = float(radii[i])
            x, y = r * math.cos(phi), r * math.sin(phi)
            x, y = _polish(hc, x, y, r * abs(offset), window)
            x, y = _ray_search(hc, x, y, spec.phi_steps, 2.0 * dr, window)
            z = Vec2(x, y)
            j = round(phi / dphi) % spec.phi_steps
            findings.append(GridFinding(z, residual(alg, c, z), (i, j)))
    findings.sort(key=lambda g: (g.residual, g.cell))
    unique: list[GridFinding] = []
    for g in findings:
        if all(g.z.dist(u.z) > 1e-8 for u in unique):
            unique.append(g)
    grid_min = math.sqrt(float(grid.min()))
    min_res = min([grid_min] + [g.residual for g in unique])
    return GridResult(unique, min_res, spec)


def grid_search(
    alg: Algebra, c: QuadraticCoeffs, spec: Optional[GridSpec] = None
) -> list[GridFinding]:
    """Refined local minima of the residual over a polar grid, best first."""
    return grid_search_full(alg, c, spec).findings


@dataclass
class Agreement:
    solver_to_grid: bool
    grid_to_solver: bool
    unmatched_roots: list[Vec2] = field(default_factory=list)
    unmatched_findings: list[Vec2] = field(default_factory=list)
    out_of_window: list[Vec2] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.solver_to_grid and self.grid_to_solver


def match_roots(
    roots: list[Vec2],
    findings: list[GridFinding],
    spec: GridSpec,
    finding_tol: float = 1e-6,
    distance: float = 1e-4,
) -> Agreement:
    """Two-way match between solver roots and findings with residual below ``finding_tol``.

    Roots outside the grid window cannot be seen by the grid and are listed
    separately instead of counting as misses.
    """
    good = [g.z for g in findings if g.residual < finding_tol]
    inside = [z for z in roots if spec.r_min <= z.norm() <= spec.r_max]
    outside = [z for z in roots if not spec.r_min <= z.norm() <= spec.r_max]
    missed_roots = [z for z in inside if not any(z.dist(g) <= distance for g in good)]
    missed_findings = [g for g in good if not any(g.dist(z) <= distance for z in roots)]
    return Agreement(not missed_roots, not missed_findings, missed_roots, missed_findings, outside)


# --- algebraic laws ---------------------------------------------------------


@dataclass
class LawStat:
    trials: int = 0
    failures: int = 0
    worst: float = 0.0

    def record(self, deviation: float, tol: float, ok: bool = True) -> None:
        self.trials += 1
        if not math.isfinite(deviation):
            deviation = math.inf
        self.worst = max(self.worst, deviation)
        if not ok or deviation > tol:
            self.failures += 1

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass
class LawReport:
    algebra: Algebra
    trials: int
    seed: int
    tol: float
    laws: dict[str, LawStat]

    @property
    def passed(self) -> bool:
        return all(stat.passed for stat in self.laws.values())


def _scaled(a: Vec2, b: Vec2, *scales: float) -> float:
    """``|a - b|`` relative to the magnitude of the quantities involved."""
    return a.dist(b) / max(1.0, a.norm(), b.norm(), *scales)


def _hyperbola_point(rng: np.random.Generator, r: float) -> Vec2:
    t = rng.uniform(-3.0, 3.0)
    return Vec2(r * math.cosh(t), r * math.sinh(t))


def _plane_point(rng: np.random.Generator) -> Vec2:
    while True:
        z = Vec2(*(float(v) for v in rng.uniform(-10.0, 10.0, size=2)))
        if z.norm() > 1e-6:
            return z


def check_laws(alg: Algebra, trials: int = 1000, seed: int = 0, tol: float = 1e-12) -> LawReport:
    """Randomized check of the algebraic laws of ``alg``'s product.

    Each law records the worst deviation, measured relative to the size of
    the vectors involved so that rounding in large products is not counted
    against the law.  Laws checked:

    ``commutativity``, ``associativity``, ``scaling_nonneg`` and
    ``scaling_real`` (``(la) (mb) = (lm)(ab)``), ``zero_product``,
    ``circle_closure`` (Euclidean circles for circular, half hyperbolas for
    hyperbolic) and ``unit_circle_closure`` (phs only).

    The hyperbolic product has zero divisors such as ``(1, 1)`` and
    ``(1, -1)``, so its zero-product law is checked on the cone ``|y| < x``.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = np.random.default_rng(seed)
    names = ["commutativity", "associativity", "scaling_nonneg", "scaling_real", "zero_product"]
    if alg.kind in ("circular", "hyperbolic"):
        names.append("circle_closure")
    if alg.kind == "phs":
        names.append("unit_circle_closure")
    laws = {name: LawStat() for name in names}
    hyperbolic = alg.kind == "hyperbolic"

    for _ in range(trials):
        a, b, c = _plane_point(rng), _plane_point(rng), _plane_point(rng)

        ab = mul(alg, a, b)
        laws["commutativity"].record(_scaled(ab, mul(alg, b, a)), tol)

        left = mul(alg, ab, c)
        right = mul(alg, a, mul(alg, b, c))
        laws["associativity"].record(_scaled(left, right, a.norm() * b.norm() * c.norm()), tol)

        lam, mu = (float(v) for v in rng.uniform(0.0, 10.0, size=2))
        lhs = mul(alg, lam * a, mu * b)
        laws["scaling_nonneg"].record(
            _scaled(lhs, (lam * mu) * ab, lam * mu * a.norm() * b.norm()), tol
        )
        lam, mu = (float(v) for v in rng.uniform(-10.0, 10.0, size=2))
        lhs = mul(alg, lam * a, mu * b)
        laws["scaling_real"].record(
            _scaled(lhs, (lam * mu) * ab, abs(lam * mu) * a.norm() * b.norm()), tol
        )

        if hyperbolic:
            u = _hyperbola_point(rng, float(rng.uniform(0.1, 5.0)))
            v = _hyperbola_point(rng, float(rng.uniform(0.1, 5.0)))
        else:
            u, v = a, b
        zero_side = mul(alg, u, ORIGIN).norm() + mul(alg, ORIGIN, v).norm()
        laws["zero_product"].record(zero_side, 0.0, ok=not mul(alg, u, v).is_zero)

        if alg.kind == "circular":
            r1 = float(rng.uniform(0.1, 10.0))
            t1, t2 = (float(v) for v in rng.uniform(0.0, TWO_PI, size=2))
            prod = mul(alg, Vec2.polar(r1, t1), Vec2.polar(1.0, t2))
            laws["circle_closure"].record(abs(prod.norm() - r1) / max(1.0, r1), tol)
        elif hyperbolic:
            r1 = float(rng.uniform(0.1, 5.0))
            prod = mul(alg, _hyperbola_point(rng, r1), _hyperbola_point(rng, 1.0))
            dev = abs(prod.x * prod.x - prod.y * prod.y - r1 * r1) / (prod.x**2 + prod.y**2)
            laws["circle_closure"].record(dev, tol, ok=prod.x > 0.0)
        else:
            f = alg.functional
            ua = (1.0 / f(a)) * a
            ub = (1.0 / f(b)) * b
            laws["unit_circle_closure"].record(abs(f(mul(alg, ua, ub)) - 1.0), tol)

    return LawReport(alg, trials, seed, tol, laws)


def law_algebras() -> list[Algebra]:
    """The algebras exercised by the law harness: circular, hyperbolic, each catalog functional."""
    from .algebra import HYPERBOLIC, phs
    from .functionals import CATALOG

    return [CIRCULAR, HYPERBOLIC] + [phs(f) for f in CATALOG]
