import random
from fractions import Fraction

import pytest

from conftest import random_polygon
from plucker.formulas import dual_polygon, inflection_count, vertical_tangent_count
from plucker.lattice import (
    LatticePolygon,
    dilate,
    lattice_points,
    mixed_volume,
    rectangle,
    standard_triangle,
)
from plucker.oracle import (
    DegenerateSampleError,
    OracleConfig,
    SparsePoly,
    count_torus_solutions,
    hessian_curve,
    implicitize_dual,
    inflection_oracle,
    resultant_y,
    sample_dual_points,
    sample_poly,
    vertical_tangent_oracle,
)

CFG = OracleConfig(seed=12345)
GOLDEN = LatticePolygon.hull([(0, 0), (0, 1), (1, 1)])
GOLDEN_POLY = SparsePoly.from_int_terms({(1, 1): 1, (0, 1): 1, (0, 0): 1})


def poly(terms):
    return SparsePoly.from_int_terms(terms)


class TestSparsePoly:
    def test_zero_coefficients_dropped(self):
        p = poly({(0, 0): 1, (1, 0): 0})
        assert (1, 0) not in p.terms

    def test_arithmetic(self):
        p = poly({(1, 0): 1})
        q = poly({(0, 1): 1})
        assert (p + q).terms == {(1, 0): 1, (0, 1): 1}
        assert (p * q).terms == {(1, 1): 1}
        assert not (p - p)

    def test_diff(self):
        p = poly({(3, 2): 5})
        assert p.diff("x").terms == {(2, 2): 15}
        assert p.diff("y").terms == {(3, 1): 10}

    def test_strip_monomial(self):
        p = poly({(2, 3): 1, (4, 5): -2})
        assert p.strip_monomial().terms == {(0, 0): 1, (2, 2): -2}

    def test_evaluate(self):
        assert GOLDEN_POLY.evaluate(1, -0.5) == pytest.approx(0.0)


class TestSamplePoly:
    def test_deterministic(self):
        P = rectangle(3, 4)
        assert sample_poly(P, CFG).terms == sample_poly(P, CFG).terms

    def test_term_count_and_shift(self):
        f = sample_poly(rectangle(3, 4), CFG)
        assert len(f.terms) == 20
        assert all(ex >= 2 and ey >= 2 for ex, ey in f.terms)
        assert all(
            1 <= abs(c) <= CFG.coeff_bound for c in f.terms.values()
        )

    def test_support_is_translate_of_polygon(self):
        P = dilate(standard_triangle(), 3)
        f = sample_poly(P, CFG)
        assert (
            f.newton_polygon().canonical().vertices == P.canonical().vertices
        )


class TestHessianCurve:
    def test_monomial_formula(self):
        a, alpha, beta = 7, 3, 4
        h = hessian_curve(poly({(alpha, beta): a}))
        coeff = Fraction(a ** 3 * alpha * beta * (alpha + beta))
        assert h.terms == {(3 * alpha - 2 + 2, 3 * beta - 2 + 2): coeff}

    def test_newton_polygon_triples(self):
        for P in (dilate(standard_triangle(), 2), rectangle(2, 3)):
            f = sample_poly(P, CFG)
            h = hessian_curve(f)
            assert (
                h.newton_polygon().canonical().vertices
                == dilate(f.newton_polygon(), 3).canonical().vertices
            )

    def test_rejects_small_exponents(self):
        with pytest.raises(ValueError):
            hessian_curve(GOLDEN_POLY)


class TestResultant:
    def test_two_lines(self):
        R = resultant_y(poly({(0, 1): 1, (1, 0): -1}), poly({(0, 1): 1, (1, 0): -2}))
        exps = sorted(e[0] for e in R.terms)
        assert exps == [1]  # proportional to x

    def test_parabola_and_axis(self):
        R = resultant_y(poly({(0, 2): 1, (1, 0): -1}), poly({(0, 1): 1, (0, 0): -1}))
        # common root iff x = 1
        xs = {e[0]: c for e, c in R.terms.items()}
        assert sum(xs.values()) == 0

    def test_degree_matches_mixed_volume(self):
        P = dilate(standard_triangle(), 2)
        f = sample_poly(P, CFG).strip_monomial()
        g = f.diff("y")
        R = resultant_y(f, g)
        bound = mixed_volume(f.newton_polygon(), g.newton_polygon())
        assert max(e[0] for e in R.terms) <= 2 * bound


class TestCountTorusSolutions:
    def test_two_lines_one_point(self):
        f = poly({(1, 0): 1, (0, 1): 1, (0, 0): -3})
        g = poly({(1, 0): 1, (0, 1): -1, (0, 0): -1})
        assert count_torus_solutions(f, g, CFG) == 1

    def test_parabola_two_points(self):
        f = poly({(0, 1): 1, (2, 0): -1})
        g = poly({(0, 1): 1, (0, 0): -1})
        assert count_torus_solutions(f, g, CFG) == 2

    def test_origin_solutions_excluded(self):
        f = poly({(0, 1): 1, (1, 0): -1})  # y = x
        g = poly({(0, 1): 1, (2, 0): -1})  # y = x^2
        # intersections (0,0) and (1,1); only the torus one counts
        assert count_torus_solutions(f, g, CFG) == 1

    def test_common_factor_degenerate(self):
        f = poly({(1, 1): 1, (0, 1): 1})
        g = poly({(0, 1): 1})
        with pytest.raises((DegenerateSampleError, ValueError)):
            count_torus_solutions(f, g, CFG)

    def test_bkk_upper_bound(self):
        rng = random.Random(99)
        for _ in range(3):
            P = random_polygon(rng, box=3)
            f = sample_poly(P, OracleConfig(seed=rng.randint(0, 2**32)))
            g = f.diff("y")
            if g.degree_y() == 0:
                continue
            n = count_torus_solutions(f, g, CFG)
            assert n <= mixed_volume(f.newton_polygon(), g.newton_polygon())


class TestOracleCounts:
    def test_vertical_conic(self):
        assert vertical_tangent_oracle(dilate(standard_triangle(), 2), CFG) == 2

    def test_vertical_golden(self):
        assert vertical_tangent_oracle(GOLDEN, CFG) == 0

    def test_vertical_rectangle(self):
        P = rectangle(3, 4)
        assert vertical_tangent_oracle(P, CFG) == vertical_tangent_count(P) == 18

    def test_inflection_golden(self):
        assert inflection_oracle(GOLDEN, CFG) == 0

    def test_inflection_cubic(self):
        P = dilate(standard_triangle(), 3)
        assert inflection_oracle(P, CFG) == inflection_count(P) == 9


class TestDualSampling:
    def test_points_satisfy_tangency(self):
        # every sampled (a,b) must land on the known dual equation
        sample = sample_dual_points(GOLDEN_POLY, 12, CFG)
        for a, b in sample.points:
            # dual equation of xy + y + 1
            res = a * a + 4 * a * b - 2 * a + 1
            assert abs(res) < 1e-9

    def test_empty_sample(self):
        assert sample_dual_points(GOLDEN_POLY, 0, CFG).points == ()

    def test_deterministic(self):
        s1 = sample_dual_points(GOLDEN_POLY, 6, CFG)
        s2 = sample_dual_points(GOLDEN_POLY, 6, CFG)
        assert s1 == s2


class TestImplicitize:
    def test_golden_coefficients(self):
        rec, observed = implicitize_dual(GOLDEN, CFG, poly=GOLDEN_POLY)
        # proportional to a^2 + 4ab - 2a + 1
        scale = rec.terms[(1, 1)] / 4
        expected = {(2, 0): 1.0, (1, 1): 4.0, (1, 0): -2.0, (0, 0): 1.0}
        assert set(rec.terms) == set(expected)
        for e, c in expected.items():
            assert abs(rec.terms[e] / scale - c) < 1e-6
        assert observed.canonical().vertices == LatticePolygon.hull(
            [(0, 0), (2, 0), (1, 1)]
        ).canonical().vertices

    def test_conic_dual_is_conic(self):
        P = dilate(standard_triangle(), 2)
        _, observed = implicitize_dual(P, CFG)
        assert (
            observed.canonical().vertices
            == dual_polygon(P).canonical().vertices
        )

    def test_sampled_small_polygon(self):
        P = LatticePolygon.hull([(0, 0), (1, 0), (1, 1), (0, 1)])
        rec, observed = implicitize_dual(P, CFG)
        assert observed.canonical().vertices == dual_polygon(P).canonical().vertices
        assert len(lattice_points(observed)) >= len(rec.terms)
