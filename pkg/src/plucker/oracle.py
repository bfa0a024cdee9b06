"""Analytic cross-check of the combinatorial formulas.

Samples a random integer-coefficient curve supported on a polygon, counts
its inflection points (via the bordered Hessian) and vertical tangents by
exact resultant elimination followed by numeric root finding, and recovers
the dual curve's equation at tiny scale by evaluating monomials of the
predicted dual support on sampled tangency data.

Elimination and squarefree parts are exact over the rationals; floating
point enters only for univariate root finding and is followed by Newton
polishing against the exact polynomial.
"""
from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

import mpmath
import numpy as np
import sympy

from .formulas import dual_polygon
from .lattice import LatticePolygon, Point, lattice_points

_x, _y = sympy.symbols("x y")


class OracleError(RuntimeError):
    pass


class DegenerateSampleError(OracleError):
    """The sampled curve hit a degeneracy (zero resultant, ambiguous root
    clusters, wrong kernel dimension); the caller should resample."""


class RetriesExhaustedError(OracleError):
    pass


@dataclass(frozen=True)
class OracleConfig:
    seed: int
    coeff_bound: int = 1000
    root_tol: float = 1e-6
    torus_tol: float = 1e-8
    retries: int = 5

    def __post_init__(self) -> None:
        if self.coeff_bound <= 0 or self.root_tol <= 0 or self.torus_tol <= 0:
            raise ValueError("all oracle bounds must be positive")


class SparsePoly:
    """Bivariate polynomial as a map from lattice exponents to coefficients.

    Exact constructors store Fractions; numeric coefficients (the output of
    implicitization) are kept as given.  Zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Point, object]):
        self.terms = {e: c for e, c in terms.items() if c != 0}

    @staticmethod
    def from_int_terms(terms: dict[Point, int]) -> "SparsePoly":
        return SparsePoly({e: Fraction(c) for e, c in terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SparsePoly) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"SparsePoly({self.terms!r})"

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(out)

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return SparsePoly(out)

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        out: dict[Point, object] = {}
        for (ax, ay), ac in self.terms.items():
            for (bx, by), bc in other.terms.items():
                e = (ax + bx, ay + by)
                out[e] = out.get(e, 0) + ac * bc
        return SparsePoly(out)

    def scale(self, c) -> "SparsePoly":
        return SparsePoly({e: c * v for e, v in self.terms.items()})

    def diff(self, var: str) -> "SparsePoly":
        i = 0 if var == "x" else 1
        out: dict[Point, object] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = (e[0] - 1, e[1]) if i == 0 else (e[0], e[1] - 1)
            out[ne] = out.get(ne, 0) + c * e[i]
        return SparsePoly(out)

    def shift(self, dx: int, dy: int) -> "SparsePoly":
        return SparsePoly({(e[0] + dx, e[1] + dy): c for e, c in self.terms.items()})

    def strip_monomial(self) -> "SparsePoly":
        """Divide out the largest common monomial factor; a no-op on the
        curve inside the torus."""
        if not self.terms:
            return self
        mx = min(e[0] for e in self.terms)
        my = min(e[1] for e in self.terms)
        return self.shift(-mx, -my)

    def newton_polygon(self) -> LatticePolygon:
        if not self.terms:
            raise ValueError("zero polynomial has no Newton polygon")
        return LatticePolygon.hull(self.terms.keys())

    def evaluate(self, x: complex, y: complex) -> complex:
        return sum(complex(c) * x ** ex * y ** ey for (ex, ey), c in self.terms.items())

    def y_coeffs_at(self, x0: complex) -> list[complex]:
        """Coefficients of self(x0, y) as a dense list, highest y-degree first."""
        by_deg: dict[int, complex] = {}
        for (ex, ey), c in self.terms.items():
            by_deg[ey] = by_deg.get(ey, 0) + complex(c) * x0 ** ex
        top = max(by_deg)
        return [by_deg.get(d, 0j) for d in range(top, -1, -1)]

    def degree_y(self) -> int:
        return max(e[1] for e in self.terms)

    def to_sympy(self) -> sympy.Expr:
        return sympy.Add(
            *[
                sympy.Rational(c) * _x ** ex * _y ** ey
                for (ex, ey), c in self.terms.items()
            ]
        )


def sample_poly(P: LatticePolygon, cfg: OracleConfig) -> SparsePoly:
    """Random nonzero integer coefficient per lattice point of P, with the
    support translated so every exponent is at least 2 (which is enough for
    the Hessian support identity to hold)."""
    P.require_dim2()
    rng = random.Random(cfg.seed)
    (xl, yl), _ = P.bounding_box()
    terms: dict[Point, int] = {}
    for px, py in lattice_points(P):
        c = rng.randint(1, cfg.coeff_bound) * rng.choice((-1, 1))
        terms[(px - xl + 2, py - yl + 2)] = c
    return SparsePoly.from_int_terms(terms)


def hessian_curve(f: SparsePoly) -> SparsePoly:
    """x^2 y^2 times the bordered Hessian determinant of f.

    For generic f with all exponents >= 2 the result has Newton polygon
    3 * newt(f)."""
    if any(ex < 2 or ey < 2 for ex, ey in f.terms):
        raise ValueError("hessian_curve expects all exponents >= 2")
    fx = f.diff("x")
    fy = f.diff("y")
    fxx = fx.diff("x")
    fxy = fx.diff("y")
    fyy = fy.diff("y")
    h = (fxy * fx * fy).scale(2) - fxx * fy * fy - fyy * fx * fx
    return h.shift(2, 2)


def _clear_denominators(f: SparsePoly) -> SparsePoly:
    den = math.lcm(*[Fraction(c).denominator for c in f.terms.values()]) if f else 1
    return f.scale(Fraction(den))


def resultant_y(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    """Resultant of f and g with respect to y: a univariate polynomial in x
    with exact integer coefficients (inputs are scaled integral first)."""
    if not f or not g:
        raise ValueError("resultant of a zero polynomial")
    if f.degree_y() == 0 or g.degree_y() == 0:
        raise ValueError("resultant_y needs positive y-degree on both sides")
    fe = _clear_denominators(f).to_sympy()
    ge = _clear_denominators(g).to_sympy()
    res = sympy.resultant(fe, ge, _y)
    poly = sympy.Poly(res, _x)
    terms = {
        (int(mono[0]), 0): Fraction(int(c))
        for mono, c in poly.terms()
    }
    return SparsePoly(terms)


def _int_coeffs_desc(R: SparsePoly) -> list[int]:
    """Dense integer coefficient list of a univariate-in-x poly, highest
    degree first, with the trailing power of x stripped."""
    exps = {e[0]: int(c) for e, c in R.terms.items()}
    low = min(exps)
    high = max(exps)
    return [exps.get(d, 0) for d in range(high, low - 1, -1)]


def _scaled_float(c: int, shift: int) -> float:
    if shift <= 0:
        return float(c)
    return float(c >> shift) if c >= 0 else -float((-c) >> shift)


def _polish_root(coeffs: list[int], dcoeffs: list[int], z0: complex, prec: int) -> complex:
    with mpmath.workprec(prec):
        z = mpmath.mpc(z0)
        for _ in range(60):
            pv = mpmath.polyval(coeffs, z)
            dv = mpmath.polyval(dcoeffs, z)
            if dv == 0:
                break
            step = pv / dv
            z = z - step
            if abs(step) <= 1e-18 * (1 + abs(z)):
                break
        return complex(z)


def roots_of_int_poly(coeffs: list[int]) -> list[complex]:
    """Roots of a squarefree integer polynomial: companion-matrix start on
    scaled coefficients, then Newton polishing at sufficient precision."""
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return []
    maxbits = max(abs(c).bit_length() for c in coeffs if c)
    shift = max(0, maxbits - 500)
    start = np.roots([_scaled_float(c, shift) for c in coeffs])
    prec = maxbits + 64
    dcoeffs = [c * (len(coeffs) - 1 - i) for i, c in enumerate(coeffs[:-1])]
    polished = [_polish_root(coeffs, dcoeffs, complex(z), prec) for z in start]
    for i, a in enumerate(polished):
        for b in polished[i + 1 :]:
            if abs(a - b) <= 1e-9 * (1 + abs(a)):
                raise DegenerateSampleError("root cluster ambiguous after polishing")
    return polished


def _squarefree_int_coeffs(coeffs: list[int]) -> list[int]:
    p = sympy.Poly(coeffs, _x)
    return [int(c) for c in p.sqf_part().all_coeffs()]


def _polished_poly_roots(coeffs: list[complex]) -> list[complex]:
    """Roots of a complex-coefficient univariate poly with one Newton pass."""
    arr = np.array(coeffs, dtype=complex)
    nz = np.nonzero(np.abs(arr) > 1e-300)[0]
    if len(nz) == 0:
        return []
    arr = arr[nz[0] :]
    if len(arr) <= 1:
        return []
    roots = np.roots(arr)
    der = np.polyder(arr)
    out = []
    for z in roots:
        for _ in range(20):
            dv = np.polyval(der, z)
            if dv == 0:
                break
            step = np.polyval(arr, z) / dv
            z = z - step
            if abs(step) <= 1e-15 * (1 + abs(z)):
                break
        out.append(complex(z))
    return out


_CONFIRM_PREC = 220  # bits; residual thresholds below assume this
_ACCEPT_RESIDUAL = 1e-18
_REJECT_RESIDUAL = 1e-10


def _mp_y_coeffs(p: SparsePoly, x0: "mpmath.mpc") -> list["mpmath.mpc"]:
    by_deg: dict[int, object] = {}
    for (ex, ey), c in p.terms.items():
        cc = mpmath.mpf(c.numerator) / c.denominator if isinstance(c, Fraction) else mpmath.mpmathify(c)
        by_deg[ey] = by_deg.get(ey, 0) + cc * x0 ** ex
    top = max(by_deg)
    return [by_deg.get(d, mpmath.mpc(0)) for d in range(top, -1, -1)]


def _mp_newton(coeffs: list, z0: complex, steps: int = 100) -> "mpmath.mpc":
    dcoeffs = [c * (len(coeffs) - 1 - i) for i, c in enumerate(coeffs[:-1])]
    z = mpmath.mpc(z0)
    for _ in range(steps):
        dv = mpmath.polyval(dcoeffs, z)
        if dv == 0:
            break
        step = mpmath.polyval(coeffs, z) / dv
        z = z - step
        if abs(step) <= mpmath.mpf(2) ** (-mpmath.mp.prec + 10) * (1 + abs(z)):
            break
    return z


def _relative_residual(p: SparsePoly, x0, y0) -> float:
    val = mpmath.mpc(0)
    scale = mpmath.mpf(0)
    ax, ay = abs(x0), abs(y0)
    for (ex, ey), c in p.terms.items():
        cc = mpmath.mpf(c.numerator) / c.denominator if isinstance(c, Fraction) else mpmath.mpmathify(c)
        term = cc * x0 ** ex * y0 ** ey
        val += term
        scale += abs(cc) * ax ** ex * ay ** ey
    if scale == 0:
        return 0.0
    return float(abs(val) / scale)


def count_torus_solutions(f: SparsePoly, g: SparsePoly, cfg: OracleConfig) -> int:
    """Number of distinct common zeroes of f and g with both coordinates in
    the torus (away from zero at the configured tolerance).

    Candidate x come from the exact squarefree resultant; at each of them
    every y-root of g is polished at high precision and accepted only when
    the residual of f confirms a genuine common zero.  Residuals falling in
    the ambiguous band between the accept and reject thresholds abort the
    sample as degenerate.
    """
    f = f.strip_monomial()
    g = g.strip_monomial()
    R = resultant_y(f, g)
    if not R:
        raise DegenerateSampleError("identically-zero resultant (common factor)")
    rcoeffs = _squarefree_int_coeffs(_int_coeffs_desc(R))
    count = 0
    # coordinates below torus_tol sit on the axes, those above 1/torus_tol
    # are degree-drop artifacts escaping to infinity; neither is a torus point
    hi = 1.0 / cfg.torus_tol
    with mpmath.workprec(_CONFIRM_PREC):
        for x0f in roots_of_int_poly(rcoeffs):
            if not cfg.torus_tol < abs(x0f) < hi:
                continue
            x0 = _mp_newton([mpmath.mpf(c) for c in rcoeffs], x0f)
            gcoeffs = _mp_y_coeffs(g, x0)
            accepted: list[complex] = []
            for y0f in _polished_poly_roots(g.y_coeffs_at(complex(x0))):
                if not cfg.torus_tol < abs(y0f) < hi:
                    continue
                y0 = _mp_newton(gcoeffs, y0f)
                if not cfg.torus_tol < abs(y0) < hi:
                    continue
                res = _relative_residual(f, x0, y0)
                if res >= _REJECT_RESIDUAL:
                    continue
                if res > _ACCEPT_RESIDUAL:
                    raise DegenerateSampleError(
                        f"ambiguous residual {res:.2e} at a candidate solution"
                    )
                y0c = complex(y0)
                if any(
                    abs(y0c - prev) <= cfg.root_tol * (1 + abs(y0c))
                    for prev in accepted
                ):
                    continue
                accepted.append(y0c)
            count += len(accepted)
    return count


def _with_attempt_seed(cfg: OracleConfig, attempt: int) -> OracleConfig:
    return replace(cfg, seed=cfg.seed + 0x9E3779B9 * attempt)


def inflection_oracle(P: LatticePolygon, cfg: OracleConfig) -> int:
    """Count torus intersections of a sampled curve with its Hessian curve."""
    P.require_dim2()
    last: Optional[Exception] = None
    for attempt in range(cfg.retries):
        acfg = _with_attempt_seed(cfg, attempt)
        f = sample_poly(P, acfg)
        try:
            return count_torus_solutions(f, hessian_curve(f), acfg)
        except DegenerateSampleError as exc:
            last = exc
    raise RetriesExhaustedError(f"inflection oracle retries exhausted: {last}")


def vertical_tangent_oracle(P: LatticePolygon, cfg: OracleConfig) -> int:
    """Count torus solutions of f = df/dy = 0 for a sampled curve."""
    P.require_dim2()
    last: Optional[Exception] = None
    for attempt in range(cfg.retries):
        acfg = _with_attempt_seed(cfg, attempt)
        f = sample_poly(P, acfg)
        try:
            return count_torus_solutions(f, f.diff("y"), acfg)
        except DegenerateSampleError as exc:
            last = exc
    raise RetriesExhaustedError(f"vertical tangent oracle retries exhausted: {last}")


@dataclass(frozen=True)
class DualSample:
    points: tuple[tuple[complex, complex], ...]


def sample_dual_points(f: SparsePoly, n: int, cfg: OracleConfig) -> DualSample:
    """Points (a,b) on the dual curve: for random x near the unit circle,
    solve f(x,.) = 0 and map each torus root through the tangency
    parametrization (a,b) = -(f_x, f_y) / (x f_x + y f_y)."""
    if not f or f.newton_polygon().dim != 2:
        raise ValueError("need a genuinely bivariate polynomial")
    rng = random.Random(cfg.seed ^ 0xD1A15A3B)
    fx = f.diff("x")
    fy = f.diff("y")
    points: list[tuple[complex, complex]] = []
    tries = 0
    while len(points) < n:
        tries += 1
        if tries > 50 + 20 * max(n, 1):
            raise OracleError("insufficient valid dual samples")
        radius = 1 + 0.3 * (rng.random() - 0.5)
        x0 = radius * cmath.exp(2j * math.pi * rng.random())
        for y0 in _polished_poly_roots(f.y_coeffs_at(x0)):
            if len(points) >= n:
                break
            if abs(y0) <= cfg.torus_tol or abs(x0) <= cfg.torus_tol:
                continue
            vx = fx.evaluate(x0, y0)
            vy = fy.evaluate(x0, y0)
            den = x0 * vx + y0 * vy
            if abs(den) <= cfg.torus_tol:
                continue
            points.append((-vx / den, -vy / den))
    return DualSample(tuple(points))


def implicitize_dual(
    P: LatticePolygon,
    cfg: OracleConfig,
    poly: Optional[SparsePoly] = None,
) -> tuple[SparsePoly, LatticePolygon]:
    """Recover the dual curve's equation numerically on the predicted
    support and return it with its observed Newton polygon.

    The evaluation matrix of the predicted dual monomials at sampled dual
    points must have a one-dimensional kernel; that simultaneously pins the
    coefficients and validates the predicted polygon.
    """
    predicted = dual_polygon(P)
    support = lattice_points(predicted)
    if len(support) > 40:
        raise ValueError("dual support too large for implicitization")
    last: Optional[Exception] = None
    for attempt in range(cfg.retries):
        acfg = _with_attempt_seed(cfg, attempt)
        f = poly if poly is not None else sample_poly(P, acfg)
        try:
            return _implicitize_once(f, predicted, support, acfg)
        except DegenerateSampleError as exc:
            last = exc
            if poly is not None:
                raise
    raise RetriesExhaustedError(f"implicitization retries exhausted: {last}")


def _implicitize_once(
    f: SparsePoly,
    predicted: LatticePolygon,
    support: list[Point],
    cfg: OracleConfig,
) -> tuple[SparsePoly, LatticePolygon]:
    sample = sample_dual_points(f, 2 * len(support) + 4, cfg)
    A = np.array(
        [[a ** u * b ** v for (u, v) in support] for a, b in sample.points],
        dtype=complex,
    )
    _, s, vh = np.linalg.svd(A)
    if s[-1] > 1e-8 * s[0] or (len(s) > 1 and s[-2] < 1e-5 * s[0]):
        raise DegenerateSampleError("kernel dimension != 1 in dual implicitization")
    kernel = vh[-1].conj()
    kernel = kernel / kernel[np.argmax(np.abs(kernel))]
    terms = {
        e: complex(c)
        for e, c in zip(support, kernel)
        if abs(c) > 1e-6
    }
    observed = LatticePolygon.hull(terms.keys())
    if observed.canonical().vertices != predicted.canonical().vertices:
        raise DegenerateSampleError(
            "observed dual support does not match the predicted polygon"
        )
    return SparsePoly(terms), observed
