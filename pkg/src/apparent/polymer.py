"""Coil-stretch spectral problem for a polymer chain in elongational flow.

The stationary model is the order-2 equation

    z(z-1) w'' + [-kappa z(z-1) + (3/2)(z-1) + (b+1) z] w'
               + [(nu-kappa)(z-1) - 2 b kappa z] w = 0

on [0, 1], with kappa = b W (W the dimensionless stretching strength,
b the chain flexibility) and spectral parameter nu.  Both endpoints are
regular singular: exponents {0, -1/2} at z = 0 and {0, -b} at z = 1, so
no nontrivial solution literally vanishes at an endpoint; the physical
boundary condition is boundedness, i.e. the exponent-0 branch at each
end.  Infinity is an irregular point (confluent degree pattern).

nu is an eigenvalue when the bounded-at-0 and bounded-at-1 branches are
proportional; the first eigenvalue nu_1 sets the relaxation time
T_rel = b tau / nu_1, which grows as W approaches the coil-stretch
transition at W = 1/2.

Numerics: two-sided Frobenius-series shooting in arbitrary-precision
binary floating point (HighFloat below).  Coefficients at the z = 1 end
reach size 2^b, which ordinary doubles cannot represent for large b;
series truncation is monitored and the solver retries with doubled
order and more bits on PrecisionExhausted, up to a cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import transform
from .errors import (
    DegenerateApparentPointError,
    NoEigenvalueInWindowError,
    PrecisionExhaustedError,
)
from .odemodel import LinearODE, make_ode
from .polyrat import RatPoly, as_fraction

# arbitrary-precision binary float; precision is set per computation
# through mpmath.workprec and is never below 64 bits
HighFloat = mpmath.mpf

_ORDER_CAP = 6400
_BITS_CAP = 4096
_TAIL_TOL_EXP = -16  # relative truncation-tail tolerance 1e-16
_MAX_RETRIES = 6


@dataclass(frozen=True)
class PolymerParams:
    """Model parameters: flexibility b, stretching W, base time tau.

    kappa = b W is always derived, never stored.  Pass Fractions or
    decimal strings ("0.35") to keep parameters exact; floats are
    converted via their exact binary value.
    """

    b: Fraction
    W: Fraction
    tau: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("b", "W", "tau"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.b <= 0 or self.W <= 0 or self.tau <= 0:
            raise ValueError("b, W, tau must all be positive")

    @property
    def kappa(self) -> Fraction:
        return self.b * self.W


@dataclass(frozen=True)
class SpectralResult:
    """Eigenvalues and diagnostics of one spectral solve.

    eigenvalues: strictly increasing; t_rel = b tau / eigenvalues[0].
    wronskian_samples: (nu, scale-normalized mismatch) over the scan
    grid; the mismatch changes sign across each reported eigenvalue.
    series_order / precision_bits: the values actually used (they may
    exceed the request after automatic retries).
    endpoint_values: filled only under strict mode; one (w(0+), w(1-))
    pair of matched-eigenfunction limits per eigenvalue.  Both limits
    are finite and nonzero (the exponent-0 branches tend to constants),
    so a literal vanishing condition at the endpoints has no nontrivial
    solution; strict mode makes that visible instead of hiding it.
    """

    eigenvalues: tuple[float, ...]
    t_rel: float
    wronskian_samples: tuple[tuple[float, float], ...]
    series_order: int
    precision_bits: int
    warnings: tuple[str, ...] = ()
    endpoint_values: tuple[tuple[float, float], ...] = ()


def polymer_ode(p: PolymerParams, nu) -> LinearODE:
    """The exact order-2 equation for rational parameters and nu."""
    nu = as_fraction(nu)
    kappa = p.kappa
    z = RatPoly([0, 1])
    zm1 = RatPoly([-1, 1])
    p0 = z * zm1
    p1 = -kappa * z * zm1 + Fraction(3, 2) * zm1 + (p.b + 1) * z
    p2 = (nu - kappa) * zm1 - 2 * p.b * kappa * z
    return make_ode([p0, p1, p2])


def apparent_location(b, kappa, nu) -> Fraction:
    """Root of the trailing coefficient: q = (nu-kappa)/(nu-kappa-2b kappa)."""
    b, kappa, nu = as_fraction(b), as_fraction(kappa), as_fraction(nu)
    denom = nu - kappa - 2 * b * kappa
    if denom == 0:
        raise DegenerateApparentPointError(
            "trailing coefficient degenerates to degree zero",
            nu=str(nu),
            kappa=str(kappa),
        )
    return (nu - kappa) / denom


def polymer_deformed(p: PolymerParams, nu) -> LinearODE:
    """Equation for u = w', cleared by (z - q).

    Built twice: once from the one-step formulas with the logarithmic
    derivative P_2'/P_2 = 1/(z-q) substituted and cleared, once through
    the general transform; the two must agree identically.
    """
    nu = as_fraction(nu)
    q = apparent_location(p.b, p.kappa, nu)  # raises when degenerate
    base = polymer_ode(p, nu)
    p0, p1, p2 = base.coeffs
    zq = RatPoly([-q, 1])
    direct = make_ode(
        [
            zq * p0,
            zq * (p1 + p0.derivative()) - p0,
            zq * (p2 + p1.derivative()) - p1,
        ]
    )
    general = transform.deform(base).ode
    if direct != general:
        raise AssertionError("one-step and general deform paths disagree")
    return direct


def _local_rows(b, kappa, nu, at_one: bool):
    """Coefficient polynomials (in the index) of the endpoint recurrence.

    At each endpoint the exponent-0 Taylor coefficients satisfy
        a_M c1(M) = -(a_{M-1} c2(M-1) + a_{M-2} c3(M-2)),
    with c1(M) nonzero for all M >= 1 (the other exponents, -1/2 and
    -b, are negative, so the recurrence never hits a resonance).
    Returns (c1, c2, c3) as ascending mpf coefficient lists.
    """
    one = mpmath.mpf(1)
    half = one / 2
    if at_one:
        c1 = [mpmath.mpf(0), b, one]                      # s(s+b)
        c2 = [-2 * b * kappa, b + 1 + half - kappa, one]  # s(s-1)+(b+5/2-kappa)s-2bk
        c3 = [nu - kappa - 2 * b * kappa, -kappa]
    else:
        c1 = [mpmath.mpf(0), -half, -one]                 # -s(s+1/2)
        c2 = [kappa - nu, kappa + b + 1 + half, one]      # s(s-1)+(kappa+b+5/2)s-(nu-kappa)
        c3 = [nu - kappa - 2 * b * kappa, -kappa]
    return c1, c2, c3


def _horner(cs, x):
    acc = mpmath.mpf(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _branch_values(b, kappa, nu, at_one: bool, x, order: int):
    """Exponent-0 branch value and derivative at offset x from the endpoint.

    Raises PrecisionExhausted when the truncation tail is not
    negligible at the requested order.
    """
    c1, c2, c3 = _local_rows(b, kappa, nu, at_one)
    zero = mpmath.mpf(0)
    a_prev2, a_prev1 = zero, mpmath.mpf(1)
    w = mpmath.mpf(1)
    dw = zero
    xpow = mpmath.mpf(1)  # x^(M-1) entering step M
    peak = mpmath.mpf(1)
    recent = []
    for m_idx in range(1, order + 1):
        rhs = -(a_prev1 * _horner(c2, mpmath.mpf(m_idx - 1)))
        if m_idx >= 2:
            rhs -= a_prev2 * _horner(c3, mpmath.mpf(m_idx - 2))
        a_m = rhs / _horner(c1, mpmath.mpf(m_idx))
        dw += m_idx * a_m * xpow
        xpow *= x
        w += a_m * xpow
        t = abs(a_m * xpow) * m_idx
        if t > peak:
            peak = t
        recent.append(t)
        if len(recent) > 8:
            recent.pop(0)
        a_prev2, a_prev1 = a_prev1, a_m
    tol = peak * mpmath.mpf(10) ** _TAIL_TOL_EXP
    if max(recent) > tol:
        raise PrecisionExhaustedError(
            "series tail not negligible at this order",
            order=order,
            endpoint=1 if at_one else 0,
        )
    return w, dw


def _mismatch(b, kappa, nu, z_match, order: int):
    """Scale-normalized Wronskian of the two bounded branches at z_match."""
    x0 = z_match
    x1 = z_match - 1
    w0, dw0 = _branch_values(b, kappa, nu, False, x0, order)
    w1, dw1 = _branch_values(b, kappa, nu, True, x1, order)
    raw = w0 * dw1 - dw0 * w1
    scale = (abs(w0) + abs(dw0)) * (abs(w1) + abs(dw1))
    if scale == 0:
        return mpmath.mpf(0)
    return raw / scale


def solve_spectrum(
    p: PolymerParams,
    nu_min,
    nu_max,
    count: int = 1,
    *,
    precision_bits: int = 256,
    series_order: int = 200,
    grid_points: int = 64,
    matching_point=Fraction(1, 2),
    auto_retry: bool = True,
    strict: bool = False,
) -> SpectralResult:
    """Scan [nu_min, nu_max] for eigenvalues of the bounded problem.

    The mismatch D(nu) (Wronskian of the bounded-at-0 and bounded-at-1
    branches at the matching point) is sampled on a uniform grid; sign
    changes are bracketed and refined by bisection to relative width
    1e-10.  Up to `count` eigenvalues are returned, ascending.  On
    PrecisionExhausted the solve restarts with doubled series order and
    1.5x precision bits (auto_retry=True) up to hard caps.

    strict=True additionally reports the endpoint limits of each
    matched eigenfunction in endpoint_values; see SpectralResult.
    """
    if not nu_min < nu_max:
        raise ValueError("need nu_min < nu_max")
    if count < 1:
        raise ValueError("need count >= 1")
    if grid_points < 2:
        raise ValueError("need at least two grid points")
    order = series_order
    bits = max(precision_bits, 64)
    attempts = _MAX_RETRIES if auto_retry else 1
    last_exc = None
    for _attempt in range(attempts):
        try:
            return _solve_once(
                p, nu_min, nu_max, count, bits, order, grid_points, matching_point, strict
            )
        except PrecisionExhaustedError as exc:
            last_exc = exc
            if order >= _ORDER_CAP and bits >= _BITS_CAP:
                break
            order = min(order * 2, _ORDER_CAP)
            bits = min(bits + bits // 2, _BITS_CAP)
    raise PrecisionExhaustedError(
        "series did not converge within the order and precision caps",
        order=order,
        bits=bits,
    ) from last_exc


def _to_mpf(v):
    """Exact-as-possible conversion of rationals/strings/floats to mpf."""
    if isinstance(v, (str, float)):
        return mpmath.mpf(str(v))
    fr = as_fraction(v)
    return mpmath.mpf(fr.numerator) / fr.denominator


def _solve_once(p, nu_min, nu_max, count, bits, order, grid_points, matching_point, strict=False):
    with mpmath.workprec(bits):
        b = _to_mpf(p.b)
        kappa = _to_mpf(p.kappa)
        z_match = _to_mpf(as_fraction(matching_point))
        lo = _to_mpf(nu_min)
        hi = _to_mpf(nu_max)

        def d_of(nu):
            return _mismatch(b, kappa, nu, z_match, order)

        step = (hi - lo) / grid_points
        grid = [lo + i * step for i in range(grid_points + 1)]
        values = [d_of(nu) for nu in grid]

        samples = tuple((float(nu), float(val)) for nu, val in zip(grid, values))
        eigenvalues: list[float] = []
        rtol = mpmath.mpf(10) ** -10
        warnings: list[str] = []
        for i in range(grid_points):
            if len(eigenvalues) >= count:
                break
            va, vb = values[i], values[i + 1]
            if va == 0:
                ev = float(grid[i])
                if not eigenvalues or abs(ev - eigenvalues[-1]) > 1e-9 * max(abs(ev), 1):
                    eigenvalues.append(ev)
                continue
            if va * vb >= 0:
                continue
            a, fb_a = grid[i], va
            b_end = grid[i + 1]
            for _ in range(300):
                mid = (a + b_end) / 2
                if (b_end - a) <= rtol * max(abs(mid), mpmath.mpf(1) / 10**6):
                    break
                fm = d_of(mid)
                if fm == 0:
                    a = b_end = mid
                    break
                if fm * fb_a < 0:
                    b_end = mid
                else:
                    a, fb_a = mid, fm
            eigenvalues.append(float((a + b_end) / 2))
        if values[-1] == 0 and len(eigenvalues) < count:
            eigenvalues.append(float(grid[-1]))
        if not eigenvalues:
            raise NoEigenvalueInWindowError(
                "no sign change of the matching Wronskian in the window",
                nu_min=float(lo),
                nu_max=float(hi),
            )
        if len(eigenvalues) < count:
            warnings.append(f"requested {count} eigenvalues, found {len(eigenvalues)}")
        t_rel = float(_to_mpf(p.b) * _to_mpf(p.tau) / eigenvalues[0])
        endpoints = []
        if strict:
            # matched function = bounded-at-0 branch (value 1 at z=0)
            # glued at z_match to the bounded-at-1 branch (value 1 at
            # z=1) scaled by w0_m/w1_m, hence the limits below
            for ev in eigenvalues:
                nu_v = mpmath.mpf(ev)
                w0_m, _ = _branch_values(b, kappa, nu_v, False, z_match, order)
                w1_m, _ = _branch_values(b, kappa, nu_v, True, z_match - 1, order)
                at_one = w0_m / w1_m if w1_m != 0 else mpmath.inf
                endpoints.append((1.0, float(at_one)))
        return SpectralResult(
            eigenvalues=tuple(eigenvalues),
            t_rel=t_rel,
            wronskian_samples=samples,
            series_order=order,
            precision_bits=bits,
            warnings=tuple(warnings),
            endpoint_values=tuple(endpoints),
        )


def wronskian_mismatch(
    p: PolymerParams,
    nu,
    *,
    precision_bits: int = 256,
    series_order: int = 400,
    matching_point=Fraction(1, 2),
) -> float:
    """Normalized eigencondition value at one nu (diagnostic)."""
    with mpmath.workprec(max(precision_bits, 64)):
        return float(
            _mismatch(
                _to_mpf(p.b),
                _to_mpf(p.kappa),
                _to_mpf(nu),
                _to_mpf(as_fraction(matching_point)),
                series_order,
            )
        )


def eigenfunction_samples(
    p: PolymerParams,
    nu,
    zs,
    *,
    precision_bits: int = 256,
    series_order: int = 400,
    matching_point=Fraction(1, 2),
):
    """Matched eigenfunction samples (z, w, w', w'') at points of (0, 1).

    Points at or left of the matching point use the bounded-at-0
    branch; points right of it use the bounded-at-1 branch scaled so
    the two values agree at the matching point.  At an eigenvalue the
    derivative then glues as well, up to the residual mismatch.
    Returns a list of float tuples.
    """
    bits = max(precision_bits, 64)
    with mpmath.workprec(bits):
        b = _to_mpf(p.b)
        kappa = _to_mpf(p.kappa)
        z_match = _to_mpf(as_fraction(matching_point))
        nu_v = _to_mpf(nu)
        w0_m, _ = _branch_values(b, kappa, nu_v, False, z_match, series_order)
        w1_m, _ = _branch_values(b, kappa, nu_v, True, z_match - 1, series_order)
        if w1_m == 0:
            raise ZeroDivisionError("bounded-at-1 branch vanishes at the matching point")
        ratio = w0_m / w1_m

        out = []
        for z_raw in zs:
            z = _to_mpf(z_raw)
            if not 0 < z < 1:
                raise ValueError("sample points must lie strictly inside (0, 1)")
            at_one = z > z_match
            x = z - 1 if at_one else z
            c1, c2, c3 = _local_rows(b, kappa, nu_v, at_one)
            a_prev2, a_prev1 = mpmath.mpf(0), mpmath.mpf(1)
            w = mpmath.mpf(1)
            dw = mpmath.mpf(0)
            d2w = mpmath.mpf(0)
            xpow_lo = mpmath.mpf(0)  # x^(M-2) at step M
            xpow = mpmath.mpf(1)     # x^(M-1) at step M
            for m_idx in range(1, series_order + 1):
                rhs = -(a_prev1 * _horner(c2, mpmath.mpf(m_idx - 1)))
                if m_idx >= 2:
                    rhs -= a_prev2 * _horner(c3, mpmath.mpf(m_idx - 2))
                a_m = rhs / _horner(c1, mpmath.mpf(m_idx))
                if m_idx >= 2:
                    d2w += m_idx * (m_idx - 1) * a_m * xpow_lo
                dw += m_idx * a_m * xpow
                xpow_lo = xpow if m_idx == 1 else xpow_lo * x
                xpow *= x
                w += a_m * xpow
                a_prev2, a_prev1 = a_prev1, a_m
            if at_one:
                w, dw, d2w = ratio * w, ratio * dw, ratio * d2w
            out.append((float(z), float(w), float(dw), float(d2w)))
        return out
