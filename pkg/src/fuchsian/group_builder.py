"""Boundary-vertex construction of the uniformizing group.

Steps: place the 2g+1 curve roots on the unit circle; join cyclically
adjacent roots by geodesics; pair each side with the order-2 elliptic
map fixing the side's apex (the boundary group); multiply a fixed side
map (default the first) by every other one, checking the 2g products
are hyperbolic (the surface group); juxtapose a reflected copy of the
root polygon to get the 4g-sided ideal fundamental polygon.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import HyperellipticCurve, roots
from .disk_geometry import (
    HyperbolicPolygon,
    geodesic_apex,
    geodesic_between,
    polygon_from_vertices,
    side_pairing_elliptic,
)
from .moebius import (
    MapClass,
    MoebiusMap,
    classify,
    compose,
    normalize,
)

DET_TOL = 1e-9
TRACE_TOL = 1e-8
INVOLUTION_TOL = 1e-8


class NonHyperbolicProductError(RuntimeError):
    """A product of side maps failed the hyperbolicity check."""


@dataclass(frozen=True)
class FuchsianGroupSpec:
    kind: str  # "boundary" | "surface"
    generators: tuple[MoebiusMap, ...]
    curve: HyperellipticCurve
    fixed_index: int | None = None


@dataclass(frozen=True)
class VerifyEntry:
    label: str
    det_residual: float
    trace: complex
    map_class: str
    involution_residual: float | None
    passed: bool


@dataclass(frozen=True)
class VerifyReport:
    entries: tuple[VerifyEntry, ...]
    passed: bool


def boundary_generators(curve: HyperellipticCurve) -> FuchsianGroupSpec:
    """One elliptic side map per cyclically adjacent root pair."""
    rs = roots(curve)
    n = len(rs)
    gens = []
    for j in range(n):
        z1, z2 = rs[j], rs[(j + 1) % n]
        gens.append(side_pairing_elliptic(z1, z2, geodesic_apex(z1, z2)))
    return FuchsianGroupSpec("boundary", tuple(gens), curve)


def subgroup_generators(base: FuchsianGroupSpec, k: int = 1) -> FuchsianGroupSpec:
    """Products of the fixed side map (1-based index k, on the left)
    with every other one, ascending; all must be hyperbolic.

    Raises NonHyperbolicProductError if any product fails the check.
    """
    if base.kind != "boundary":
        raise ValueError("subgroup construction needs the boundary group")
    n = len(base.generators)
    if not 1 <= k <= n:
        raise ValueError(f"fixed index {k} outside 1..{n}")
    fixed = base.generators[k - 1]
    products = []
    for j in range(1, n + 1):
        if j == k:
            continue
        prod = normalize(compose(fixed, base.generators[j - 1]))
        if classify(prod) is not MapClass.HYPERBOLIC:
            raise NonHyperbolicProductError(
                f"product of side maps {k} and {j} is not hyperbolic"
            )
        products.append(prod)
    return FuchsianGroupSpec("surface", tuple(products), base.curve, fixed_index=k)


def fundamental_polygon(curve: HyperellipticCurve) -> HyperbolicPolygon:
    """Ideal 4g-gon: the root polygon plus its reflection across the
    first side, vertices counterclockwise from the first root.
    """
    rs = roots(curve)
    n = len(rs)
    side = geodesic_between(rs[0], rs[1])
    # adjacent roots are never collinear with the origin for n >= 3
    center, radius = side.center, side.radius

    def reflect(z: complex) -> complex:
        return center + radius**2 / (z - center).conjugate()

    vertices = [rs[0]]
    vertices.extend(reflect(rs[j]) for j in range(n - 1, 1, -1))
    vertices.extend(rs[1:])
    return polygon_from_vertices(vertices)


def verify_group(spec: FuchsianGroupSpec) -> VerifyReport:
    """Per-generator contract check.

    boundary kind: det 1 (1e-9), trace 0 (1e-8), elliptic, involution
    residual (max entrywise |T*T + I|) below 1e-8. surface kind: det 1
    and hyperbolic.
    """
    entries = []
    for idx, gen in enumerate(spec.generators, start=1):
        det_res = abs(gen.det - 1.0)
        try:
            cls = classify(gen)
            cls_name = cls.value
        except ValueError:
            cls = None
            cls_name = "unclassifiable"
        inv_res: float | None = None
        if spec.kind == "boundary":
            sq = compose(gen, gen)
            inv_res = max(
                abs(sq.a + 1.0), abs(sq.b), abs(sq.c), abs(sq.d + 1.0)
            )
            ok = (
                det_res <= DET_TOL
                and abs(gen.trace) <= TRACE_TOL
                and cls is MapClass.ELLIPTIC
                and inv_res <= INVOLUTION_TOL
            )
        else:
            ok = det_res <= DET_TOL and cls is MapClass.HYPERBOLIC
        entries.append(
            VerifyEntry(
                label=f"{spec.kind}[{idx}]",
                det_residual=det_res,
                trace=gen.trace,
                map_class=cls_name,
                involution_residual=inv_res,
                passed=ok,
            )
        )
    return VerifyReport(tuple(entries), all(e.passed for e in entries))
