"""Tri-state genericity checks for a Newton polygon.

The three assumptions behind the invariant formulas are decided by a
battery of sufficient combinatorial criteria.  Failure of the battery
yields Unknown, never FailsKnown, except for the second assumption where
an exact classification (the thin-triangle family) is available.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, Optional

from .lattice import (
    DOWN,
    LOWER_ARROWS,
    UP,
    Diagram,
    Face,
    LatticePolygon,
    Point,
    add,
    contains_translate,
    cross,
    dilate,
    lattice_points,
    rotate_r,
    standard_triangle,
    sub,
    support_set,
)

DEFAULT_SEARCH_BUDGET = 200_000


class Verdict(str, Enum):
    VERIFIED = "Verified"
    UNKNOWN = "Unknown"
    FAILS_KNOWN = "FailsKnown"


Evidence = list[tuple[str, int, str]]  # (criterion name, direction 0|1|2, outcome)


@dataclass(frozen=True)
class ThinTriangleWitness:
    """P (possibly after some power of the rotation) is a translate of the
    triangle with vertices (1,0), (2,0), (1-k, 1+2k)."""

    k: int
    translation: Point
    rotation_power: int = 0


@dataclass
class AssumptionReport:
    a1: Verdict
    a2: Verdict
    a3: Verdict
    evidence: Evidence = field(default_factory=list)
    thin_witness: Optional[ThinTriangleWitness] = None

    @property
    def all_verified(self) -> bool:
        return (
            self.a1 is Verdict.VERIFIED
            and self.a2 is Verdict.VERIFIED
            and self.a3 is Verdict.VERIFIED
        )


def is_thin(P: LatticePolygon) -> Optional[ThinTriangleWitness]:
    """Witness that P is a lattice translate of conv{(1,0),(2,0),(1-k,1+2k)}."""
    verts = P.vertices
    if len(verts) != 3:
        return None
    for p in verts:
        for q in verts:
            if sub(q, p) != (1, 0):
                continue
            t = sub(p, (1, 0))
            (apex,) = [v for v in verts if v not in (p, q)]
            a, b = sub(apex, t)
            if b >= 1 and (b - 1) % 2 == 0 and a == 1 - (b - 1) // 2:
                return ThinTriangleWitness(k=(b - 1) // 2, translation=t)
    return None


def assumption2_holds(
    P: LatticePolygon,
) -> tuple[Verdict, Optional[ThinTriangleWitness]]:
    """Exact classification: fails iff P, r(P) or r^2(P) is thin."""
    P.require_dim2()
    Pk = P
    for k in range(3):
        w = is_thin(Pk)
        if w is not None:
            return Verdict.FAILS_KNOWN, ThinTriangleWitness(
                k=w.k, translation=w.translation, rotation_power=k
            )
        Pk = rotate_r(Pk)
    return Verdict.VERIFIED, None


def delta_is_summand(M: LatticePolygon) -> bool:
    """Edge criterion: the standard triangle is a Minkowski summand of M
    iff M is 2-dimensional and its three lower-arrow support sets are edges."""
    if M.dim < 2:
        return False
    return all(support_set(M, g).kind == "edge" for g in LOWER_ARROWS)


def is_class_Qd(Q: Iterable[Point], d: int) -> bool:
    """Sufficient criterion for the no-line diagram class of size d:
    d points fitting in (d-1)*Delta such that no subset's hull has the
    standard triangle as a Minkowski summand."""
    if d < 3:
        raise ValueError("class only defined for d >= 3")
    pts = sorted(set(Q))
    if len(pts) != d:
        return False
    if contains_translate(standard_triangle(d - 1), pts) is None:
        return False
    for r in range(3, d + 1):
        for subset in combinations(pts, r):
            if delta_is_summand(LatticePolygon.hull(subset)):
                return False
    return True


def _point_on_face(p: Point, face: Face) -> bool:
    if face.kind == "vertex":
        return p == face.endpoints[0]
    a, b = face.endpoints
    if cross(a, b, p) != 0:
        return False
    lo = (min(a[0], b[0]), min(a[1], b[1]))
    hi = (max(a[0], b[0]), max(a[1], b[1]))
    return lo[0] <= p[0] <= hi[0] and lo[1] <= p[1] <= hi[1]


def _face_ok(Q: Iterable[Point], P: LatticePolygon, g: Optional[Point]) -> bool:
    """Q's support set at g must lie on P's face at g (no-op when g is None)."""
    if g is None:
        return True
    pts = list(Q)
    u, v = g
    best = max(u * x + v * y for x, y in pts)
    face = support_set(P, g)
    return all(
        _point_on_face(p, face) for p in pts if u * p[0] + v * p[1] == best
    )


def _staircase_shapes(d: int) -> list[tuple[Point, ...]]:
    """All monotone lattice paths of d points with steps right/up, plus the
    diagonal segment.  Each is a diagram of the no-line class."""
    shapes: list[tuple[Point, ...]] = []
    for mask in range(2 ** (d - 1)):
        path = [(0, 0)]
        for i in range(d - 1):
            step = (1, 0) if (mask >> i) & 1 == 0 else (0, 1)
            path.append(add(path[-1], step))
        shapes.append(tuple(path))
    shapes.append(tuple((i, -i) for i in range(d)))
    return shapes


def find_Qd_subdiagram(
    P: LatticePolygon,
    d: int,
    face_constraint: Optional[Point] = None,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> Optional[Diagram]:
    result, _ = _find_Qd(P, d, face_constraint, budget)
    return result


def _find_Qd(
    P: LatticePolygon,
    d: int,
    face_constraint: Optional[Point],
    budget: int,
) -> tuple[Optional[Diagram], bool]:
    """Search for a d-point no-line-class subdiagram of P.

    Staircase and segment candidates are tried first; a budget-capped
    exhaustive search over lattice-point subsets is the fallback.  The
    second return value reports budget exhaustion (result None then means
    "not found within budget", not "does not exist").
    """
    if d not in (4, 5, 6):
        raise ValueError("subdiagram search supports d in {4, 5, 6}")
    pts = lattice_points(P)
    ptset = set(pts)
    for p in pts:
        for shape in _staircase_shapes(d):
            cand = [add(p, s) for s in shape]
            if not all(q in ptset for q in cand):
                continue
            if not _face_ok(cand, P, face_constraint):
                continue
            if is_class_Qd(cand, d):
                return frozenset(cand), False
    spent = 0
    for subset in combinations(pts, d):
        spent += 1
        if spent > budget:
            return None, True
        if _face_ok(subset, P, face_constraint) and is_class_Qd(subset, d):
            return frozenset(subset), False
    return None, False


def _unimodular_parallelograms(bound: int) -> Iterable[LatticePolygon]:
    rng = range(-bound, bound + 1)
    seen: set[tuple[Point, ...]] = set()
    for ux in rng:
        for uy in rng:
            for vx in rng:
                for vy in rng:
                    if abs(ux * vy - uy * vx) != 1:
                        continue
                    R = LatticePolygon.hull(
                        [(0, 0), (ux, uy), (vx, vy), (ux + vx, uy + vy)]
                    ).canonical()
                    if R.vertices in seen:
                        continue
                    seen.add(R.vertices)
                    yield R


def _contains_5R(P: LatticePolygon) -> bool:
    """Appendix criterion: P contains a 5-fold dilate of some unimodular
    parallelogram."""
    (xl, yl), (xh, yh) = P.bounding_box()
    diam = max(xh - xl, yh - yl)
    bound = max(1, math.ceil(diam / 5))
    for R in _unimodular_parallelograms(bound):
        if contains_translate(P, dilate(R, 5)) is not None:
            return True
    return False


def check_assumption1(
    P: LatticePolygon, budget: int = DEFAULT_SEARCH_BUDGET
) -> tuple[Verdict, Evidence]:
    """Nodes-and-cusps-only battery: subdiagram classes of size 6, 5, 4,
    per-direction boundary-tangency exclusions, and the thin classification."""
    P.require_dim2()
    ev: Evidence = []
    ok = True

    q6, exhausted6 = _find_Qd(P, 6, None, budget)
    if q6 is not None:
        ev.append(("no-tritangents", 0, "Q6-generalized subdiagram found"))
    elif _contains_5R(P):
        ev.append(("no-tritangents", 0, "contains 5R for a unimodular parallelogram"))
    else:
        ok = False
        note = "budget exhausted" if exhausted6 else "no Q6 subdiagram, no 5R"
        ev.append(("no-tritangents", 0, note))

    for d, name in ((5, "no-inflected-bitangents"), (4, "no-higher-flexes")):
        qd, exhausted = _find_Qd(P, d, None, budget)
        if qd is not None:
            ev.append((name, 0, f"Q{d} subdiagram found"))
        else:
            ok = False
            note = "budget exhausted" if exhausted else f"no Q{d} subdiagram"
            ev.append((name, 0, note))

    Pk = P
    for k in range(3):
        cond = _boundary_bitangent_excluded(Pk, budget)
        if cond is not None:
            ev.append(("no-boundary-bitangents", k, cond))
        else:
            ok = False
            ev.append(("no-boundary-bitangents", k, "no condition fired"))
        if is_thin(Pk) is None:
            ev.append(("no-inflections-at-infinity", k, "not a thin triangle"))
        else:
            ok = False
            ev.append(("no-inflections-at-infinity", k, "thin triangle"))
        Pk = rotate_r(Pk)

    if P.dim == 2 and P.canonical().vertices != standard_triangle().vertices:
        ev.append(("no-corner-bitangents", 0, "2-dimensional and not the unit triangle"))
    else:
        ok = False
        ev.append(("no-corner-bitangents", 0, "polygon is the unit triangle"))

    return (Verdict.VERIFIED if ok else Verdict.UNKNOWN), ev


def _boundary_bitangent_excluded(
    Pk: LatticePolygon, budget: int
) -> Optional[str]:
    """One of the three sufficient conditions against a tangency point
    escaping to the bottom boundary orbit."""
    bottom = support_set(Pk, DOWN)
    if bottom.kind == "vertex":
        return "bottom face is a vertex"
    q4 = find_Qd_subdiagram(Pk, 4, face_constraint=DOWN, budget=budget)
    if q4 is not None:
        return "Q4 subdiagram aligned with the bottom edge"
    y0 = bottom.endpoints[0][1]
    rows: dict[int, int] = {}
    for _, y in lattice_points(Pk):
        rows[y] = rows.get(y, 0) + 1
    if any(y >= y0 + 2 and n >= 2 for y, n in rows.items()):
        return "two lattice points on a row at height >= 2 above the bottom edge"
    return None


def check_assumption3(P: LatticePolygon) -> tuple[Verdict, Evidence]:
    """No degenerate tangent is a bitangent, an inflection tangent, or an
    asymptote, checked in each of the three directions via the rotation."""
    P.require_dim2()
    ev: Evidence = []
    ok = True
    Pk = P
    for k in range(3):
        ys = sorted({y for _, y in lattice_points(Pk)})
        consecutive4 = any(
            all(y + i in ys for i in range(4)) for y in ys
        )
        span_le3 = ys[-1] - ys[0] <= 3
        if consecutive4:
            ev.append(("no-vertical-bitangents", k, "4 consecutive ordinates"))
        elif span_le3:
            ev.append(("no-vertical-bitangents", k, "vertical degree at most 3"))
        else:
            ok = False
            ev.append(("no-vertical-bitangents", k, "no condition fired"))
        if len(ys) >= 3:
            ev.append(("no-vertical-inflections", k, "at least 3 ordinates"))
        else:
            ok = False
            ev.append(("no-vertical-inflections", k, "fewer than 3 ordinates"))
        if len(ys) >= 3 or support_set(Pk, UP).kind == "vertex":
            ev.append(("no-tangent-asymptotes", k, "3 ordinates or top face is a vertex"))
        else:
            ok = False
            ev.append(("no-tangent-asymptotes", k, "no condition fired"))
        Pk = rotate_r(Pk)
    return (Verdict.VERIFIED if ok else Verdict.UNKNOWN), ev


def full_assumption_report(
    P: LatticePolygon,
    budget: int = DEFAULT_SEARCH_BUDGET,
    fast_path: bool = True,
) -> AssumptionReport:
    """Decide all three assumptions.

    If P contains a translate of 5*Delta all three hold; otherwise the
    per-assumption batteries run.  ``fast_path=False`` forces the batteries
    (used to cross-check the containment shortcut).
    """
    P.require_dim2()
    if fast_path and contains_translate(P, dilate(standard_triangle(), 5)) is not None:
        return AssumptionReport(
            a1=Verdict.VERIFIED,
            a2=Verdict.VERIFIED,
            a3=Verdict.VERIFIED,
            evidence=[("contains-5-delta", 0, "contains a translate of 5*Delta")],
        )
    a1, ev1 = check_assumption1(P, budget)
    a2, witness = assumption2_holds(P)
    ev2: Evidence = [
        (
            "thin-classification",
            witness.rotation_power if witness else 0,
            "thin triangle" if witness else "not in the thin orbit",
        )
    ]
    a3, ev3 = check_assumption3(P)
    return AssumptionReport(
        a1=a1, a2=a2, a3=a3, evidence=ev1 + ev2 + ev3, thin_witness=witness
    )
