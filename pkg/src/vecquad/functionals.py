"""Positively homogeneous functionals on the plane.

A functional ``||.||`` from the catalog below is positively homogeneous,
positive definite, and has a unit disc that is star-shaped about the
origin.  It parameterizes the generalized product in :mod:`vecquad.algebra`.

Text grammar::

    euclidean | lp:<e> | wlp:<e>:<wx>:<wy> | max

with ``0 < e <= 64`` and positive weights.  Exponents below one give
antinorms (non-convex unit discs).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ParseError

__all__ = [
    "PhsFunctional",
    "EUCLIDEAN",
    "MAX_NORM",
    "lp",
    "weighted_lp",
    "parse_functional",
    "format_number",
    "n_of_phi",
    "q_star",
    "q_of_z",
    "CATALOG",
]

MAX_EXPONENT = 64.0

_KINDS = ("euclidean", "lp", "wlp", "max")


def format_number(value: float) -> str:
    """Shortest round-trippable text for ``value`` (``1.0`` prints as ``1``)."""
    text = repr(float(value))
    if text.endswith(".0"):
        text = text[:-2]
    return text


@dataclass(frozen=True)
class PhsFunctional:
    """A catalog functional; use the module-level constructors.

    ``kind`` is one of ``euclidean``, ``lp``, ``wlp`` or ``max``.  The
    exponent and weights are only meaningful for the lp family.
    """

    kind: str
    exponent: float = 2.0
    wx: float = 1.0
    wy: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ParseError(f"unknown functional kind {self.kind!r}")
        for name in ("exponent", "wx", "wy"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ParseError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, float(value))
        if self.kind in ("lp", "wlp"):
            if not 0.0 < self.exponent <= MAX_EXPONENT:
                raise ParseError(
                    f"exponent must lie in (0, {format_number(MAX_EXPONENT)}], "
                    f"got {format_number(self.exponent)}"
                )
            if self.wx <= 0.0 or self.wy <= 0.0:
                raise ParseError("weights must be positive")

    def __str__(self) -> str:
        if self.kind == "euclidean":
            return "euclidean"
        if self.kind == "max":
            return "max"
        if self.kind == "lp":
            return f"lp:{format_number(self.exponent)}"
        return "wlp:{}:{}:{}".format(
            format_number(self.exponent), format_number(self.wx), format_number(self.wy)
        )

    @property
    def is_antinorm(self) -> bool:
        return self.kind in ("lp", "wlp") and self.exponent < 1.0

    def __call__(self, z) -> float:
        """Evaluate ``||z||`` for a point ``z`` given as ``Vec2`` or an ``(x, y)`` pair."""
        x, y = z
        x = float(x)
        y = float(y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise DomainError(f"non-finite input ({x!r}, {y!r})")
        return self._eval(x, y)

    def _eval(self, x: float, y: float) -> float:
        if self.kind == "euclidean":
            return math.hypot(x, y)
        ax, ay = abs(x), abs(y)
        if self.kind == "max":
            return max(ax, ay)
        # Factor out the larger coordinate so |x|**e cannot overflow.
        m = max(ax, ay)
        if m == 0.0:
            return 0.0
        e = self.exponent
        s = self.wx * (ax / m) ** e + self.wy * (ay / m) ** e
        return m * s ** (1.0 / e)

    def evaluate(self, x, y) -> np.ndarray:
        """Vectorized evaluation over arrays of coordinates."""
        x = np.abs(np.asarray(x, dtype=float))
        y = np.abs(np.asarray(y, dtype=float))
        if self.kind == "euclidean":
            return np.hypot(x, y)
        if self.kind == "max":
            return np.maximum(x, y)
        m = np.maximum(x, y)
        safe = np.where(m > 0.0, m, 1.0)
        e = self.exponent
        s = self.wx * (x / safe) ** e + self.wy * (y / safe) ** e
        return np.where(m > 0.0, m * s ** (1.0 / e), 0.0)


EUCLIDEAN = PhsFunctional("euclidean")
MAX_NORM = PhsFunctional("max")


def lp(exponent: float) -> PhsFunctional:
    return PhsFunctional("lp", exponent)


def weighted_lp(exponent: float, wx: float, wy: float) -> PhsFunctional:
    return PhsFunctional("wlp", exponent, wx, wy)


def _parse_float(text: str, what: str) -> float:
    if not text or text.strip() != text:
        raise ParseError(f"malformed {what}: {text!r}")
    try:
        value = float(text)
    except ValueError:
        raise ParseError(f"malformed {what}: {text!r}") from None
    if not math.isfinite(value):
        raise ParseError(f"{what} must be finite, got {text!r}")
    return value


def parse_functional(text: str) -> PhsFunctional:
    """Parse the functional grammar, e.g. ``"lp:1.5"`` or ``"wlp:0.5:2:1"``."""
    parts = text.split(":")
    head, args = parts[0], parts[1:]
    if head == "euclidean" and not args:
        return EUCLIDEAN
    if head == "max" and not args:
        return MAX_NORM
    if head == "lp" and len(args) == 1:
        return lp(_parse_float(args[0], "exponent"))
    if head == "wlp" and len(args) == 3:
        e, wx, wy = (_parse_float(a, w) for a, w in zip(args, ("exponent", "wx", "wy")))
        return weighted_lp(e, wx, wy)
    raise ParseError(f"cannot parse functional spec {text!r}")


def n_of_phi(f: PhsFunctional, phi: float) -> float:
    """Value of the functional on the Euclidean unit vector at angle ``phi``."""
    return f._eval(math.cos(phi), math.sin(phi))


def q_star(f: PhsFunctional, phi: float) -> float:
    """Polar rescaling factor ``N(phi)**2 / N(2 phi)``."""
    n = n_of_phi(f, phi)
    return n * n / n_of_phi(f, 2.0 * phi)


def q_of_z(f: PhsFunctional, z) -> float:
    """Rescaling factor ``||z||**2 / ||z (*) z||`` of the generalized square.

    Scale invariant in ``z``; undefined at the origin.
    """
    x, y = z
    norm = f((x, y))
    if norm == 0.0:
        raise DomainError("Q(z) is 0/0 at the origin")
    denom = f._eval(x * x - y * y, 2.0 * x * y)
    if denom == 0.0:
        raise DomainError(f"||z (*) z|| vanished for z = ({x!r}, {y!r})")
    return norm * norm / denom


# Representative members of each catalog family, used by tests and the
# law harness.
CATALOG: tuple[PhsFunctional, ...] = (
    EUCLIDEAN,
    lp(0.5),
    lp(1.0),
    lp(1.5),
    lp(3.0),
    MAX_NORM,
    weighted_lp(2.0, 2.0, 1.0),
    weighted_lp(0.5, 2.0, 1.0),
)
