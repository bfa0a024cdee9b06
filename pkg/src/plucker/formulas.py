"""Invariants of a generic plane curve computed from its Newton polygon.

The headline counts (inflection points, bitangents), the tropical fan and
Newton polygon of the dual curve, and the Euler characteristic are all
evaluated by exact integer/rational arithmetic on the polygon.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import (
    LOWER_ARROWS,
    UPPER_ARROWS,
    ARROWS,
    LatticePolygon,
    Point,
    WeightedFan,
    add,
    boundary_lattice_points,
    dilate,
    doubled_area,
    edge_fan,
    interior_lattice_points,
    mixed_volume,
    neg,
    negate,
    sort_rays_ccw,
    standard_triangle,
    support_length,
    volume,
)


class FormulaInternalError(AssertionError):
    """A structural identity (balancing, closure, double-entry area) failed.

    This would falsify either the implementation or the theorems it encodes,
    so it is never caught silently.
    """


def _arrow_sums(P: LatticePolygon) -> tuple[int, int]:
    lower = sum(support_length(P, g) for g in LOWER_ARROWS)
    upper = sum(support_length(P, g) for g in UPPER_ARROWS)
    return lower, upper


def inflection_count(P: LatticePolygon) -> int:
    """6 vol(P) - 2 (len down + len ne + len left) - (len up + len sw + len right).

    The value is the true inflection count of a generic curve supported on P
    when the genericity assumptions are verified.
    """
    P.require_dim2()
    lower, upper = _arrow_sums(P)
    return 3 * doubled_area(P) - 2 * lower - upper


def dual_fan(P: LatticePolygon) -> WeightedFan:
    """Tropical fan of the dual curve.

    Weights: 2 vol - len P^g + len P^-g on the three lower arrows, zero on
    the upper arrows, and len P^-g on every other primitive direction g.
    """
    P.require_dim2()
    da = doubled_area(P)
    rays: dict[Point, int] = {}
    for g in LOWER_ARROWS:
        rays[g] = da - support_length(P, g) + support_length(P, neg(g))
    for n, w in edge_fan(P).rays:
        if n in ARROWS:
            continue
        rays[neg(n)] = w
    fan = WeightedFan.from_dict(rays)
    if any(w < 0 for _, w in fan.rays):
        raise FormulaInternalError(f"negative dual-fan weight for {P.vertices}")
    fan = fan.normalized()
    if not fan.is_balanced():
        raise FormulaInternalError(f"dual fan does not balance for {P.vertices}")
    return fan


def dual_polygon(P: LatticePolygon) -> LatticePolygon:
    """Newton polygon of the dual curve, reconstructed from its normal fan.

    Each ray (g, w) contributes an edge with outer normal g and lattice
    length w; balancing guarantees the edge walk closes.  The result is
    anchored with its lexicographically minimal vertex at the origin.
    """
    fan = dual_fan(P).as_dict()
    order = sort_rays_ccw(fan.keys())
    verts: list[Point] = [(0, 0)]
    for u, v in order:
        w = fan[(u, v)]
        verts.append(add(verts[-1], (-v * w, u * w)))
    if verts[-1] != verts[0]:
        raise FormulaInternalError(f"dual polygon edge walk does not close for {P.vertices}")
    return LatticePolygon.hull(verts[:-1]).canonical()


# Edges of the standard triangle, keyed by their outer normals.
_DELTA_EDGES: dict[Point, LatticePolygon] = {
    (0, -1): LatticePolygon(((0, 0), (1, 0))),
    (1, 1): LatticePolygon(((1, 0), (0, 1))),
    (-1, 0): LatticePolygon(((0, 0), (0, 1))),
}


def dual_area_closed(P: LatticePolygon) -> Fraction:
    """Area of the dual polygon from the closed formula.

    Evaluates vol of the virtual polygon
    2S*Delta + (-P) - l_down*E(down) - l_ne*E(ne) - l_left*E(left)
    by bilinearity of the mixed volume, and cross-checks the result against
    the shoelace area of the reconstructed dual polygon.
    """
    P.require_dim2()
    da = doubled_area(P)  # = 2S
    terms: list[tuple[int, LatticePolygon]] = [
        (da, standard_triangle()),
        (1, negate(P)),
    ]
    for g in LOWER_ARROWS:
        terms.append((-support_length(P, g), _DELTA_EDGES[g]))
    # vol(X) = vol(X,X)/2 with the mixed volume expanded as a bilinear form
    # over the formal combination; note mixed_volume(A,A) = 2 vol(A).
    total = Fraction(0)
    for ci, Ai in terms:
        for cj, Aj in terms:
            total += Fraction(ci * cj) * mixed_volume(Ai, Aj)
    area = total / 2
    recon = volume(dual_polygon(P))
    if area != recon:
        raise FormulaInternalError(
            f"closed dual area {area} != reconstructed {recon} for {P.vertices}"
        )
    return area


def bitangent_count(P: LatticePolygon) -> Fraction:
    """-10 vol(P) + vol(dual) + 3 (lower arrow lengths) + (upper arrow lengths).

    Returned as an exact rational; integrality is only guaranteed when the
    genericity assumptions are verified.
    """
    P.require_dim2()
    lower, upper = _arrow_sums(P)
    return -5 * doubled_area(P) + dual_area_closed(P) + 3 * lower + upper


def vertical_tangent_count(P: LatticePolygon) -> int:
    """2 vol(P) - len P^down - len P^up."""
    return doubled_area(P) - support_length(P, (0, -1)) - support_length(P, (0, 1))


def euler_characteristic(P: LatticePolygon) -> int:
    """-2 vol(P) plus the lattice perimeter (the compactified curve's
    Euler characteristic)."""
    return -doubled_area(P) + boundary_lattice_points(P)


def hessian_polytope(P: LatticePolygon) -> LatticePolygon:
    """Newton polygon of x^2 y^2 hess(f) for generic f supported on P: 3P."""
    return dilate(P, 3)


@dataclass(frozen=True)
class PluckerReport:
    polygon: LatticePolygon
    vol: Fraction
    inflections: int
    bitangents: Fraction
    dual_fan: WeightedFan
    dual_polygon: LatticePolygon
    dual_vol: Fraction
    euler_char: int
    genus: int
    vertical_tangents: int


def plucker_report(P: LatticePolygon) -> PluckerReport:
    P.require_dim2()
    dvol = dual_area_closed(P)  # also cross-checks the reconstruction
    return PluckerReport(
        polygon=P,
        vol=volume(P),
        inflections=inflection_count(P),
        bitangents=bitangent_count(P),
        dual_fan=dual_fan(P),
        dual_polygon=dual_polygon(P),
        dual_vol=dvol,
        euler_char=euler_characteristic(P),
        genus=interior_lattice_points(P),
        vertical_tangents=vertical_tangent_count(P),
    )
