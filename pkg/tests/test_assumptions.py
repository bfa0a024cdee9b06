import random
from itertools import combinations

import pytest

from conftest import random_polygon
from plucker.assumptions import (
    Verdict,
    assumption2_holds,
    check_assumption3,
    delta_is_summand,
    find_Qd_subdiagram,
    full_assumption_report,
    is_class_Qd,
    is_thin,
)
from plucker.lattice import (
    LatticePolygon,
    contains_translate,
    dilate,
    lattice_points,
    minkowski_sum,
    rectangle,
    rotate_r,
    standard_triangle,
)


def thin_triangle(k: int) -> LatticePolygon:
    return LatticePolygon.hull([(1, 0), (2, 0), (1 - k, 1 + 2 * k)])


def brute_delta_summand(M: LatticePolygon) -> bool:
    """Erosion check: the hull of {p : p + Delta inside M}, re-dilated by
    Delta, must give M back exactly when Delta is a lattice summand."""
    D = standard_triangle()
    eroded = [
        p
        for p in lattice_points(M)
        if all((p[0] + d[0], p[1] + d[1]) in M for d in D.vertices)
    ]
    if not eroded:
        return False
    S = LatticePolygon.hull(eroded)
    return minkowski_sum(S, D).canonical().vertices == M.canonical().vertices


class TestThin:
    @pytest.mark.parametrize("k", range(6))
    def test_family(self, k):
        w = is_thin(thin_triangle(k))
        assert w is not None and w.k == k

    def test_translated(self):
        w = is_thin(thin_triangle(2).translate((-4, 9)))
        assert w is not None and w.k == 2 and w.translation == (-4, 9)

    def test_worked_cubic(self):
        w = is_thin(LatticePolygon.hull([(0, 3), (1, 0), (2, 0)]))
        assert w is not None and w.k == 1

    def test_delta_is_thin(self):
        assert is_thin(standard_triangle()) is not None

    def test_rectangle_not_thin(self):
        assert is_thin(rectangle(3, 4)) is None


class TestAssumption2:
    def test_cubic_fails(self):
        v, w = assumption2_holds(LatticePolygon.hull([(0, 3), (1, 0), (2, 0)]))
        assert v is Verdict.FAILS_KNOWN and w is not None

    def test_5delta_verified(self):
        v, w = assumption2_holds(dilate(standard_triangle(), 5))
        assert v is Verdict.VERIFIED and w is None

    def test_rectangle_verified(self):
        v, _ = assumption2_holds(rectangle(3, 4))
        assert v is Verdict.VERIFIED

    def test_brute_force_orbit_in_box(self):
        # every triangle in a small box: FailsKnown iff its canonical form
        # appears in the rotation orbit of the thin family
        orbit: set[tuple] = set()
        for k in range(0, 12):
            T = thin_triangle(k)
            for _ in range(3):
                orbit.add(T.canonical().vertices)
                T = rotate_r(T)
        box = [(x, y) for x in range(5) for y in range(7)]
        checked = 0
        for tri in combinations(box, 3):
            P = LatticePolygon.hull(tri)
            if P.dim != 2:
                continue
            checked += 1
            v, _ = assumption2_holds(P)
            expected = P.canonical().vertices in orbit
            assert (v is Verdict.FAILS_KNOWN) == expected, tri
        assert checked > 1000


class TestMinkowskiSummand:
    def test_matches_brute_force_on_2delta(self):
        pts = lattice_points(dilate(standard_triangle(), 2))
        for r in range(3, len(pts) + 1):
            for subset in combinations(pts, r):
                M = LatticePolygon.hull(subset)
                assert delta_is_summand(M) == brute_delta_summand(M), subset


FIGURE_Q6 = [
    [(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (5, 0)],
    [(0, 4), (1, 3), (2, 2), (2, 1), (2, 0), (3, 2)],
    [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2)],
    [(0, 0), (1, 0), (2, 0), (0, 3), (0, 4), (0, 5)],
]


class TestClassQd:
    def test_horizontal_segment(self):
        for d in (4, 5, 6):
            assert is_class_Qd([(i, 0) for i in range(d)], d)

    @pytest.mark.parametrize("Q", FIGURE_Q6)
    def test_figure_diagrams(self, Q):
        assert is_class_Qd(Q, 6)

    def test_full_2delta_is_not(self):
        assert not is_class_Qd(
            [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)], 6
        )

    def test_wrong_cardinality(self):
        assert not is_class_Qd([(0, 0), (1, 0)], 5)


class TestSubdiagramSearch:
    def test_5delta_has_q6(self):
        Q = find_Qd_subdiagram(dilate(standard_triangle(), 5), 6)
        assert Q is not None and is_class_Qd(Q, 6)

    def test_rectangle_has_q6(self):
        Q = find_Qd_subdiagram(rectangle(3, 4), 6)
        assert Q is not None and is_class_Qd(Q, 6)

    def test_delta_has_no_q4(self):
        assert find_Qd_subdiagram(standard_triangle(), 4) is None


class TestAssumption3:
    def test_5delta(self):
        v, _ = check_assumption3(dilate(standard_triangle(), 5))
        assert v is Verdict.VERIFIED

    def test_rectangle(self):
        v, ev = check_assumption3(rectangle(3, 4))
        assert v is Verdict.VERIFIED

    def test_strip_unknown(self):
        v, _ = check_assumption3(rectangle(9, 1))
        assert v is Verdict.UNKNOWN


class TestFullReport:
    def test_5delta_all_verified(self):
        assert full_assumption_report(dilate(standard_triangle(), 5)).all_verified

    def test_rectangle_all_verified(self):
        assert full_assumption_report(rectangle(3, 4)).all_verified

    def test_7delta_fast_path(self):
        rep = full_assumption_report(dilate(standard_triangle(), 7))
        assert rep.all_verified
        assert rep.evidence[0][0] == "contains-5-delta"

    def test_cubic_a2_fails(self):
        rep = full_assumption_report(LatticePolygon.hull([(0, 3), (1, 0), (2, 0)]))
        assert rep.a2 is Verdict.FAILS_KNOWN

    def test_battery_consistent_with_containment(self):
        rng = random.Random(55)
        done = 0
        while done < 10:
            P = random_polygon(rng, box=9)
            if contains_translate(P, dilate(standard_triangle(), 5)) is None:
                continue
            done += 1
            rep = full_assumption_report(P, fast_path=False)
            assert rep.all_verified, P.vertices

    def test_evidence_nonempty(self):
        rep = full_assumption_report(rectangle(3, 4))
        assert rep.evidence
        names = {e[0] for e in rep.evidence}
        assert "no-tritangents" in names and "no-vertical-bitangents" in names
