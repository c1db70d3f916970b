import math
from fractions import Fraction

import pytest

from apparent import (
    NoEigenvalueInWindowError,
    PointKind,
    PolymerParams,
    PrecisionExhaustedError,
    RatPoly,
    apparent_location,
    classify_point,
    deform,
    eigenfunction_samples,
    frobenius_series,
    indicial_exponents,
    is_apparent,
    polymer_deformed,
    polymer_ode,
    solve_spectrum,
    wronskian_mismatch,
)

F = Fraction


@pytest.fixture(scope="module")
def small_spectrum():
    p = PolymerParams(b=F(2), W=F(1, 4))
    return p, solve_spectrum(
        p, F(1, 10), F(30), count=2, precision_bits=128, series_order=120, grid_points=48
    )


def test_polymer_ode_coefficients():
    p = PolymerParams(b=F(100), W=F(1, 4))
    assert p.kappa == 25
    ode = polymer_ode(p, F(40))
    assert ode.coeffs == (
        RatPoly([0, -1, 1]),
        RatPoly([F(-3, 2), F(255, 2), -25]),
        RatPoly([-15, -4985]),
    )


def test_polymer_exponent_structure():
    p = PolymerParams(b=F(100), W=F(1, 4))
    ode = polymer_ode(p, F(40))
    assert set(indicial_exponents(ode, F(0)).exponents) == {F(0), F(-1, 2)}
    assert set(indicial_exponents(ode, F(1)).exponents) == {F(0), -F(100)}


def test_series_heads_at_both_endpoints():
    # independent rational anchors for the local expansions
    p = PolymerParams(b=F(100), W=F(1, 4))
    ode = polymer_ode(p, F(40))
    at0 = frobenius_series(ode, F(0), F(0), 3)
    assert at0.coeffs[:3] == (F(1), F(-10), F(-1222))
    at1 = frobenius_series(ode, F(1), F(0), 3)
    assert at1.coeffs[:3] == (F(1), F(5000, 101), F(8371995, 6868))


def test_apparent_location_formula():
    b, kappa, nu = F(100), F(25), F(40)
    q = apparent_location(b, kappa, nu)
    assert q == (nu - kappa) / (nu - kappa - 2 * b * kappa)
    p = PolymerParams(b=b, W=F(1, 4))
    trail = polymer_ode(p, nu).coeffs[-1]
    assert trail(q) == 0


def test_deformed_equation_dual_construction():
    p = PolymerParams(b=F(7), W=F(1, 3))
    nu = F(9, 2)
    direct = polymer_deformed(p, nu)
    assert direct == deform(polymer_ode(p, nu)).ode
    q = apparent_location(p.b, p.kappa, nu)
    verdict = is_apparent(direct, q)
    assert verdict.is_apparent and sorted(verdict.exponents) == [F(0), F(2)]
    assert classify_point(polymer_ode(p, nu), q).kind is PointKind.ORDINARY


def test_small_parameter_spectrum(small_spectrum):
    p, res = small_spectrum
    assert res.eigenvalues == pytest.approx((7.157674592, 20.090909620), rel=1e-8)
    assert res.t_rel == pytest.approx(float(p.b) / res.eigenvalues[0], rel=1e-12)
    assert res.warnings == ()
    assert len(res.wronskian_samples) >= 2
    for nu, mism in res.wronskian_samples:
        assert math.isfinite(nu) and math.isfinite(mism)


def test_strict_mode_reports_nonzero_endpoint_limits(small_spectrum):
    # the exponent-0 branches tend to constants at the endpoints, so no
    # eigenfunction literally vanishes there; strict mode surfaces this
    p, res = small_spectrum
    assert res.endpoint_values == ()
    strict = solve_spectrum(
        p, F(1, 10), F(10), count=1, precision_bits=128, series_order=120,
        grid_points=48, strict=True,
    )
    assert strict.eigenvalues[0] == pytest.approx(res.eigenvalues[0], rel=1e-9)
    assert len(strict.endpoint_values) == 1
    w0, w1 = strict.endpoint_values[0]
    assert w0 == 1.0
    assert math.isfinite(w1) and w1 != 0.0


def test_mismatch_vanishes_only_at_eigenvalues(small_spectrum):
    p, res = small_spectrum
    nu1 = res.eigenvalues[0]
    at = wronskian_mismatch(p, nu1, precision_bits=128, series_order=160)
    off = wronskian_mismatch(p, nu1 + 0.7, precision_bits=128, series_order=160)
    assert abs(at) < 1e-9
    assert abs(off) > 1e-3


def test_matched_eigenfunction_solves_equation(small_spectrum):
    p, res = small_spectrum
    nu1 = res.eigenvalues[0]
    b = float(p.b)
    kappa = float(p.kappa)
    zs = [0.11, 0.31, 0.5, 0.68, 0.9]
    samples = eigenfunction_samples(p, nu1, zs, precision_bits=128, series_order=160)
    assert len(samples) == len(zs)
    for z, w, dw, d2w in samples:
        p0 = z * (z - 1.0)
        p1 = -kappa * z * z + (kappa + b + 2.5) * z - 1.5
        p2 = (nu1 - kappa) * (z - 1.0) - 2.0 * b * kappa * z
        resid = p0 * d2w + p1 * dw + p2 * w
        scale = max(abs(p0 * d2w), abs(p1 * dw), abs(p2 * w), 1e-30)
        assert abs(resid) / scale < 1e-8
    # the two branches glue smoothly: Taylor step from the left branch
    # across the matching point reproduces the right branch
    mid = eigenfunction_samples(p, nu1, [0.499, 0.501], precision_bits=128, series_order=160)
    _, w_l, dw_l, d2w_l = mid[0]
    step = 0.002
    predicted = w_l + step * dw_l + 0.5 * step * step * d2w_l
    assert mid[1][1] == pytest.approx(predicted, rel=1e-7)


def test_custom_relaxation_scale():
    p = PolymerParams(b=F(2), W=F(1, 4), tau=F(3))
    res = solve_spectrum(p, F(5), F(10), count=1, precision_bits=96, series_order=100, grid_points=24)
    assert res.t_rel == pytest.approx(6.0 / res.eigenvalues[0], rel=1e-12)


def test_auto_retry_escalates_series_order():
    p = PolymerParams(b=F(2), W=F(1, 4))
    res = solve_spectrum(
        p, F(1, 10), F(30), count=1, precision_bits=64, series_order=24, grid_points=48
    )
    assert res.series_order > 24
    assert res.eigenvalues[0] == pytest.approx(7.157674592, rel=1e-6)


def test_empty_window_raises():
    p = PolymerParams(b=F(2), W=F(1, 4))
    with pytest.raises(NoEigenvalueInWindowError):
        solve_spectrum(p, F(25), F(27), count=1, precision_bits=128, series_order=120, grid_points=32)


def test_precision_guard_trips_near_far_matching_point():
    p = PolymerParams(b=F(100), W=F(1, 4))
    with pytest.raises(PrecisionExhaustedError):
        wronskian_mismatch(
            p, F(40), precision_bits=64, series_order=60, matching_point=F(19, 20)
        )
