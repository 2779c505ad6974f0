"""Moebius transformation algebra on the extended complex plane.

A map is a 2x2 complex matrix (a, b; c, d) with nonzero determinant,
acting projectively on points: z -> (az + b)/(cz + d). Proportional
matrices act identically, so "equality" of maps is projective equality.

The point at infinity is a first-class value (INFINITY): cz + d = 0
sends z to it, and it maps to a/c. Classification is by the trace of the
determinant-1 normalization: |tr| < 2 elliptic, = 2 parabolic, > 2
hyperbolic. Non-real normalized traces are rejected, since such maps are
not isometries of the disk.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from enum import Enum

# Tolerances for double-precision inputs assembled from closed forms.
TRACE_IMAG_TOL = 1e-6
CLASS_BOUNDARY_TOL = 1e-9
DET_ONE_TOL = 1e-9
# |Im det| below this fraction of |det| is rounding noise; snapping the
# determinant to the real axis keeps the principal sqrt branch stable.
_DET_REAL_SNAP = 1e-13


class _Infinity:
    """Singleton marker for the point at infinity."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()

Point = complex | _Infinity


def is_infinite(z: Point) -> bool:
    return z is INFINITY


class MapClass(Enum):
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class MoebiusMap:
    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.det == 0:
            raise ValueError("degenerate map: determinant is zero")

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> complex:
        return self.a + self.d


IDENTITY = MoebiusMap(1, 0, 0, 1)


def compose(m1: MoebiusMap, m2: MoebiusMap) -> MoebiusMap:
    """Matrix product m1*m2, realizing the composition m1 after m2."""
    return MoebiusMap(
        m1.a * m2.a + m1.b * m2.c,
        m1.a * m2.b + m1.b * m2.d,
        m1.c * m2.a + m1.d * m2.c,
        m1.c * m2.b + m1.d * m2.d,
    )


def apply(m: MoebiusMap, z: Point) -> Point:
    """Evaluate (az + b)/(cz + d) on a finite point or INFINITY."""
    if is_infinite(z):
        if m.c == 0:
            return INFINITY
        return m.a / m.c
    denom = m.c * z + m.d
    if denom == 0:
        return INFINITY
    return (m.a * z + m.b) / denom


def normalize(m: MoebiusMap) -> MoebiusMap:
    """Divide entries by a principal square root of det, giving det 1.

    The principal branch (argument in (-pi, pi]) makes the output
    deterministic; the projective action is unchanged.
    """
    det = m.det
    if abs(det.imag) <= _DET_REAL_SNAP * abs(det):
        det = complex(det.real, 0.0)
    s = cmath.sqrt(det)
    return MoebiusMap(m.a / s, m.b / s, m.c / s, m.d / s)


def classify(m: MoebiusMap) -> MapClass:
    """Trace classification of the normalized map.

    Raises ValueError when the normalized trace is not real to within
    TRACE_IMAG_TOL (the map is then not a disk isometry up to scale).
    """
    tr = normalize(m).trace
    if abs(tr.imag) > TRACE_IMAG_TOL:
        raise ValueError(
            f"normalized trace {tr:.6g} is not real: no isometry class"
        )
    t = abs(tr.real)
    if abs(t - 2.0) <= CLASS_BOUNDARY_TOL:
        return MapClass.PARABOLIC
    if t < 2.0:
        return MapClass.ELLIPTIC
    return MapClass.HYPERBOLIC


def inverse(m: MoebiusMap) -> MoebiusMap:
    """Adjugate matrix: projectively the inverse map (same action)."""
    return MoebiusMap(m.d, -m.b, -m.c, m.a)


def projectively_equal(m1: MoebiusMap, m2: MoebiusMap, tol: float = 1e-9) -> bool:
    """True when m1 and m2 differ by a scalar factor.

    Checks m1 * m2^-1 against lambda*I by normalizing its (0, 0) entry,
    which avoids entrywise ratios of near-zero entries.
    """
    return projective_distance(m1, m2) <= tol


def projective_distance(m1: MoebiusMap, m2: MoebiusMap) -> float:
    """Max entrywise deviation of m1*m2^-1 from the identity, rescaled."""
    q = compose(m1, inverse(m2))
    lam = q.a
    if lam == 0:
        return float("inf")
    return max(
        abs(q.b / lam), abs(q.c / lam), abs(q.d / lam - 1.0)
    )


def fixed_points(m: MoebiusMap) -> list[Point]:
    """Solutions of (az + b)/(cz + d) = z for a non-identity map.

    Parabolic maps have one fixed point, all others two. Raises
    ValueError on the identity (every point is fixed).
    """
    n = normalize(m)
    a, b, c, d = n.a, n.b, n.c, n.d
    if abs(b) <= 1e-12 and abs(c) <= 1e-12 and abs(a - d) <= 1e-12:
        raise ValueError("identity map: every point is fixed")
    if c == 0:
        # infinity is fixed; a second finite point exists unless a = d
        if abs(a - d) <= CLASS_BOUNDARY_TOL:
            return [INFINITY]
        return [b / (d - a), INFINITY]
    disc = n.trace * n.trace - 4 * n.det
    if abs(disc) <= 4 * CLASS_BOUNDARY_TOL:
        return [(a - d) / (2 * c)]
    s = cmath.sqrt(disc)
    return [((a - d) + s) / (2 * c), ((a - d) - s) / (2 * c)]
