"""Vector products on the plane and the vector quadratic polynomial.

Three products are available:

* circular, ``(x1 x2 - y1 y2, x1 y2 + x2 y1)``, which moves points along
  Euclidean circles;
* generalized (phs), the circular product rescaled by
  ``||a|| ||b|| / ||a (*) b||`` so that the unit circle of the functional
  ``||.||`` is preserved;
* hyperbolic, ``(x1 x2 + y1 y2, x1 y2 + x2 y1)``, which moves points along
  the hyperbolas ``x**2 - y**2 = r**2``.

Points are :class:`Vec2` values.  They are deliberately not complex
numbers: ``ONE = (1, 0)`` and the real number 1 are different objects.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import DegenerateFunctionalError, DomainError, ParseError
from .functionals import EUCLIDEAN, PhsFunctional, format_number, parse_functional

__all__ = [
    "Vec2",
    "ORIGIN",
    "ONE",
    "II",
    "QuadraticCoeffs",
    "Algebra",
    "CIRCULAR",
    "HYPERBOLIC",
    "phs",
    "parse_algebra",
    "add",
    "scale",
    "circ_mul",
    "phs_mul",
    "hyp_mul",
    "mul",
    "square",
    "eval_poly",
]


@dataclass(frozen=True, slots=True)
class Vec2:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"Vec2 components must be finite, got ({self.x!r}, {self.y!r})")

    def __iter__(self) -> Iterator[float]:
        yield self.x
        yield self.y

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Vec2:
        return Vec2(-self.x, -self.y)

    def __rmul__(self, lam: float) -> Vec2:
        return Vec2(lam * self.x, lam * self.y)

    def norm(self) -> float:
        """Euclidean length."""
        return math.hypot(self.x, self.y)

    def dist(self, other: Vec2) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    @property
    def is_zero(self) -> bool:
        return self.x == 0.0 and self.y == 0.0

    @classmethod
    def polar(cls, r: float, phi: float) -> Vec2:
        return cls(r * math.cos(phi), r * math.sin(phi))


ORIGIN = Vec2(0.0, 0.0)
ONE = Vec2(1.0, 0.0)
II = Vec2(0.0, 1.0)


@dataclass(frozen=True)
class QuadraticCoeffs:
    """Coefficients of ``f(z) = z^2 + p z + q ONE``."""

    p: float
    q: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.p) and math.isfinite(self.q)):
            raise DomainError(f"coefficients must be finite, got p={self.p!r}, q={self.q!r}")
        object.__setattr__(self, "p", float(self.p))
        object.__setattr__(self, "q", float(self.q))

    @property
    def discriminant(self) -> float:
        """``p**2/4 - q``; non-negative exactly when ``x^2 + px + q`` has real zeros."""
        return self.p * self.p / 4.0 - self.q


@dataclass(frozen=True)
class Algebra:
    """Which product is in force: ``circular``, ``hyperbolic`` or ``phs``."""

    kind: str
    functional: Optional[PhsFunctional] = None

    def __post_init__(self) -> None:
        if self.kind not in ("circular", "hyperbolic", "phs"):
            raise ParseError(f"unknown algebra kind {self.kind!r}")
        if (self.kind == "phs") != (self.functional is not None):
            raise ParseError("a functional is required for, and only for, the phs algebra")

    def __str__(self) -> str:
        if self.kind == "phs":
            return f"phs:{self.functional}"
        return self.kind


CIRCULAR = Algebra("circular")
HYPERBOLIC = Algebra("hyperbolic")


def phs(f: PhsFunctional | str) -> Algebra:
    if isinstance(f, str):
        f = parse_functional(f)
    return Algebra("phs", f)


def parse_algebra(text: str) -> Algebra:
    """Parse ``circular``, ``hyperbolic`` or ``phs:<functional-spec>``."""
    if text == "circular":
        return CIRCULAR
    if text == "hyperbolic":
        return HYPERBOLIC
    if text.startswith("phs:"):
        return phs(parse_functional(text[4:]))
    raise ParseError(f"cannot parse algebra spec {text!r}")


def add(a: Vec2, b: Vec2) -> Vec2:
    return Vec2(a.x + b.x, a.y + b.y)


def scale(lam: float, z: Vec2) -> Vec2:
    return Vec2(lam * z.x, lam * z.y)


def circ_mul(a: Vec2, b: Vec2) -> Vec2:
    return Vec2(a.x * b.x - a.y * b.y, a.x * b.y + b.x * a.y)


def hyp_mul(a: Vec2, b: Vec2) -> Vec2:
    return Vec2(a.x * b.x + a.y * b.y, a.x * b.y + b.x * a.y)


def phs_mul(f: PhsFunctional, a: Vec2, b: Vec2) -> Vec2:
    """Generalized product ``(||a|| ||b|| / ||a (*) b||) (a (*) b)``.

    Returns the origin when either factor is the origin.  For the Euclidean
    norm the rescaling factor is identically one and the circular product is
    returned unchanged.
    """
    if f == EUCLIDEAN:
        return circ_mul(a, b)
    if a.is_zero or b.is_zero:
        return ORIGIN
    # Bring both factors to unit magnitude by exact powers of two so the
    # intermediate circular product cannot underflow or overflow.
    ea = math.frexp(max(abs(a.x), abs(a.y)))[1]
    eb = math.frexp(max(abs(b.x), abs(b.y)))[1]
    ax, ay = math.ldexp(a.x, -ea), math.ldexp(a.y, -ea)
    bx, by = math.ldexp(b.x, -eb), math.ldexp(b.y, -eb)
    cx, cy = ax * bx - ay * by, ax * by + bx * ay
    denom = f._eval(cx, cy)
    if denom == 0.0:
        raise DegenerateFunctionalError(f"||a (*) b|| = 0 for a={a}, b={b} under {f}")
    k = f._eval(ax, ay) * f._eval(bx, by) / denom
    return Vec2(math.ldexp(k * cx, ea + eb), math.ldexp(k * cy, ea + eb))


def mul(alg: Algebra, a: Vec2, b: Vec2) -> Vec2:
    if alg.kind == "circular":
        return circ_mul(a, b)
    if alg.kind == "hyperbolic":
        return hyp_mul(a, b)
    return phs_mul(alg.functional, a, b)


def square(alg: Algebra, z: Vec2) -> Vec2:
    return mul(alg, z, z)


def eval_poly(alg: Algebra, c: QuadraticCoeffs, z: Vec2) -> Vec2:
    """``z^2 + p z + q ONE`` under the product of ``alg``."""
    s = square(alg, z)
    return Vec2(s.x + c.p * z.x + c.q, s.y + c.p * z.y)


def format_vec(z: Vec2) -> str:
    return f"({format_number(z.x)}, {format_number(z.y)})"
