"""Poincare disk geometry.

Geodesics of the unit-disk model are diameters or circular arcs meeting
the unit circle at right angles (|center|^2 = 1 + radius^2). This module
builds geodesics between points, finds the geodesic apex (the point of
the geodesic closest to the origin), constructs the order-2 elliptic map
pairing a side with itself, and computes Gauss-Bonnet areas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .moebius import (
    INFINITY,
    MoebiusMap,
    Point,
    apply,
    is_infinite,
    normalize,
)

COLLINEAR_TOL = 1e-9
IDEAL_TOL = 1e-9
ON_GEODESIC_TOL = 1e-6


@dataclass(frozen=True)
class GeodesicArc:
    """A disk geodesic through two points.

    kind "arc": circular arc with the given center and radius, orthogonal
    to the unit circle. kind "diameter": straight chord through the
    origin with the given unit direction.
    """

    kind: str  # "arc" | "diameter"
    endpoints: tuple[complex, complex]
    center: complex | None = None
    radius: float | None = None
    direction: complex | None = None


@dataclass(frozen=True)
class HyperbolicPolygon:
    """Vertex-ordered polygon; side i joins vertex i to vertex i+1."""

    vertices: tuple[complex, ...]
    sides: tuple[GeodesicArc, ...]
    ideal: tuple[bool, ...]


def cross_ratio(z1: Point, z2: Point, z3: Point, z4: Point) -> complex:
    """(z1-z2)(z3-z4) / ((z2-z3)(z4-z1)), with infinity by cancellation.

    At most one argument may be INFINITY; the two factors containing it
    are replaced by their limit ratio -1.
    """
    pts = [z1, z2, z3, z4]
    infinite = [is_infinite(p) for p in pts]
    if sum(infinite) > 1:
        raise ValueError("coincident points in cross-ratio")
    for i in range(4):
        for j in range(i + 1, 4):
            if not infinite[i] and not infinite[j] and pts[i] == pts[j]:
                raise ValueError("coincident points in cross-ratio")
    if infinite[0]:
        num, den = -(z3 - z4), (z2 - z3)
    elif infinite[1]:
        num, den = -(z3 - z4), (z4 - z1)
    elif infinite[2]:
        num, den = -(z1 - z2), (z4 - z1)
    elif infinite[3]:
        num, den = -(z1 - z2), (z2 - z3)
    else:
        num = (z1 - z2) * (z3 - z4)
        den = (z2 - z3) * (z4 - z1)
    if den == 0:
        raise ValueError("cross-ratio denominator vanished")
    return num / den


def geodesic_between(z1: complex, z2: complex) -> GeodesicArc:
    """The unique geodesic through two distinct points with |z| <= 1."""
    z1, z2 = complex(z1), complex(z2)
    if z1 == z2:
        raise ValueError("coincident points determine no geodesic")
    for z in (z1, z2):
        if abs(z) > 1 + IDEAL_TOL:
            raise ValueError(f"point {z:.6g} lies outside the closed disk")
    # z1, z2, 0 collinear exactly when Im(conj(z1) z2) = 0
    if abs((z1.conjugate() * z2).imag) <= COLLINEAR_TOL:
        u = (z2 - z1) / abs(z2 - z1)
        if u.real < 0 or (u.real == 0 and u.imag < 0):
            u = -u
        return GeodesicArc("diameter", (z1, z2), direction=u)
    # orthogonality |C|^2 = R^2 + 1 plus incidence |z_i - C| = R reduce to
    # the linear system 2 Re(conj(C) z_i) = |z_i|^2 + 1
    x1, y1 = z1.real, z1.imag
    x2, y2 = z2.real, z2.imag
    det = x1 * y2 - x2 * y1
    r1 = (abs(z1) ** 2 + 1.0) / 2.0
    r2 = (abs(z2) ** 2 + 1.0) / 2.0
    center = complex((r1 * y2 - r2 * y1) / det, (x1 * r2 - x2 * r1) / det)
    radius = math.sqrt(abs(center) ** 2 - 1.0)
    return GeodesicArc("arc", (z1, z2), center=center, radius=radius)


def geodesic_apex(z1: complex, z2: complex) -> complex:
    """Point of the geodesic through z1, z2 with minimal modulus.

    For ideal endpoints e^(i t1), e^(i t2) this is
    ((1 - sin a)/cos a) e^(i (t1+t2)/2) with a = |t1 - t2|/2; diameters
    give the origin.
    """
    g = geodesic_between(z1, z2)
    if g.kind == "diameter":
        return 0j
    return g.center * (1.0 - g.radius / abs(g.center))


def point_on_geodesic(z: complex, g: GeodesicArc) -> float:
    """Distance of z from the full geodesic circle/line (Euclidean)."""
    if g.kind == "diameter":
        return abs((z * g.direction.conjugate()).imag)
    return abs(abs(z - g.center) - g.radius)


def side_pairing_elliptic(z1: complex, z2: complex, m: complex) -> MoebiusMap:
    """Order-2 elliptic map swapping z1 and z2 and fixing m.

    m must lie on the geodesic through z1 and z2; the result is
    normalized (det 1) with trace exactly 0, so it is an involution.
    """
    z1, z2, m = complex(z1), complex(z2), complex(m)
    if z1 == z2 or m == z1 or m == z2:
        raise ValueError("side pairing needs three distinct points")
    g = geodesic_between(z1, z2)
    if point_on_geodesic(m, g) > ON_GEODESIC_TOL:
        raise ValueError("fixed point is not on the geodesic through the endpoints")
    p = z1 * (m - z2) ** 2
    q = z2 * (m - z1) ** 2
    a = p - q
    b = z2 * q - z1 * p
    c = (m - z2) ** 2 - (m - z1) ** 2
    return normalize(MoebiusMap(a, b, c, -a))


def triangle_area(alpha: float, beta: float, gamma: float) -> float:
    """Gauss-Bonnet: area of a hyperbolic triangle is pi minus angle sum."""
    for ang in (alpha, beta, gamma):
        if ang < 0:
            raise ValueError("negative angle")
    total = alpha + beta + gamma
    if total >= math.pi:
        raise ValueError("angle sum >= pi: not a hyperbolic triangle")
    return math.pi - total


def polygon_area(poly: HyperbolicPolygon | Sequence[float]) -> float:
    """Gauss-Bonnet area (p - 2)*pi - (sum of interior angles).

    Accepts either a HyperbolicPolygon (ideal vertices contribute angle
    0, finite vertices the angle between the adjacent side tangents) or
    a plain sequence of interior angles. An ideal p-gon yields exactly
    (p - 2)*pi.
    """
    if isinstance(poly, HyperbolicPolygon):
        angles = interior_angles(poly)
    else:
        angles = list(poly)
    p = len(angles)
    if p < 3:
        raise ValueError("polygon needs at least 3 vertices")
    for ang in angles:
        if ang < 0 or ang >= math.pi:
            raise ValueError("interior angles must lie in [0, pi)")
    return (p - 2) * math.pi - sum(angles)


def interior_angles(poly: HyperbolicPolygon) -> list[float]:
    """Interior angle at each vertex; flagged ideal vertices give 0."""
    p = len(poly.vertices)
    angles = []
    for i in range(p):
        if poly.ideal[i]:
            angles.append(0.0)
            continue
        v = poly.vertices[i]
        # both tangents point away from v along their side, so the angle
        # between them is the interior angle directly
        t_in = _tangent_at(poly.sides[(i - 1) % p], v)
        t_out = _tangent_at(poly.sides[i], v)
        cosang = (t_in.conjugate() * t_out).real
        angles.append(math.acos(max(-1.0, min(1.0, cosang))))
    return angles


def _tangent_at(side: GeodesicArc, v: complex) -> complex:
    """Unit tangent of a side at its endpoint v, pointing along the side."""
    e1, e2 = side.endpoints
    other = e2 if abs(v - e1) <= abs(v - e2) else e1
    if side.kind == "diameter":
        t = other - v
    else:
        t = 1j * (v - side.center)
        if ((other - v) * t.conjugate()).real < 0:
            t = -t
    return t / abs(t)


def vertex_cycle_angle_check(angles: Sequence[float], m: int) -> bool:
    """True when the angle sum equals 2*pi/m within 1e-9."""
    if not angles:
        raise ValueError("empty angle list")
    if m < 1:
        raise ValueError("m must be a positive integer")
    return abs(sum(angles) - 2.0 * math.pi / m) <= 1e-9


def polygon_from_vertices(vertices: Sequence[complex]) -> HyperbolicPolygon:
    """Polygon with geodesic sides joining consecutive vertices."""
    verts = tuple(complex(v) for v in vertices)
    if len(verts) < 3:
        raise ValueError("polygon needs at least 3 vertices")
    p = len(verts)
    sides = tuple(
        geodesic_between(verts[i], verts[(i + 1) % p]) for i in range(p)
    )
    ideal = tuple(abs(abs(v) - 1.0) <= IDEAL_TOL for v in verts)
    return HyperbolicPolygon(verts, sides, ideal)
