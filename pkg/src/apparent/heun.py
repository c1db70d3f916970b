"""Constructors for the second- and third-order equation families.

All families are order-n equations sum P_k w^{(n-k)} = 0 with explicit
polynomial coefficients; parameters are exact rationals.  Exponent-sum
constraints are enforced at construction: for an order-2 Fuchsian
equation with s singular points the exponents must add up to s - 2,
which pins sum(theta_k) + theta_inf + alpha to 2 for the four-point
family and to m - 1 for the m-point family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import frobenius
from .errors import (
    DegenerateGeometryError,
    FuchsianIdentityError,
    NotConfluentClassError,
)
from .odemodel import INFINITY, LinearODE, PointKind, make_ode
from .polyrat import RatPoly, as_fraction, exact_div


@dataclass(frozen=True)
class HeunParams:
    """Four regular points 0, 1, t, infinity; accessory location q.

    Exponents are {0, theta_k} at the finite points and {alpha,
    theta_inf} at infinity, tied by sum(theta) + theta_inf + alpha = 2.
    """

    t: Fraction
    theta1: Fraction
    theta2: Fraction
    theta3: Fraction
    theta_inf: Fraction
    alpha: Fraction
    q: Fraction

    def __post_init__(self):
        for name in ("t", "theta1", "theta2", "theta3", "theta_inf", "alpha", "q"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))


@dataclass(frozen=True)
class MultiHeunParams:
    """m distinct finite regular points and m - 2 accessory locations."""

    zs: tuple[Fraction, ...]
    thetas: tuple[Fraction, ...]
    theta_inf: Fraction
    alpha: Fraction
    qs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "zs", tuple(as_fraction(z) for z in self.zs))
        object.__setattr__(self, "thetas", tuple(as_fraction(v) for v in self.thetas))
        object.__setattr__(self, "theta_inf", as_fraction(self.theta_inf))
        object.__setattr__(self, "alpha", as_fraction(self.alpha))
        object.__setattr__(self, "qs", tuple(as_fraction(v) for v in self.qs))

    @property
    def m(self) -> int:
        return len(self.zs)


@dataclass(frozen=True)
class ThirdOrderParams:
    """Parameters of the order-3 four-point equation with accessory q."""

    t: Fraction
    alpha: Fraction
    beta: Fraction
    theta2: Fraction
    theta3: Fraction
    kappa: Fraction
    q: Fraction

    def __post_init__(self):
        for name in ("t", "alpha", "beta", "theta2", "theta3", "kappa", "q"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))


@dataclass(frozen=True)
class ConfluentHeunParams:
    """Raw coefficients for the confluent degree pattern.

    The pattern is deg P_0 <= 2, deg P_1 = 2, deg P_2 = 1; the trailing
    coefficient is alpha (z - q).  Coalescence limits that produce
    these equations are not modeled; the pattern is taken as given.
    """

    p0: RatPoly
    p1: RatPoly
    alpha: Fraction
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "p0", self.p0 if isinstance(self.p0, RatPoly) else RatPoly(self.p0))
        object.__setattr__(self, "p1", self.p1 if isinstance(self.p1, RatPoly) else RatPoly(self.p1))
        object.__setattr__(self, "alpha", as_fraction(self.alpha))
        object.__setattr__(self, "q", as_fraction(self.q))


def _sum_check(observed: Fraction, expected: Fraction):
    if observed != expected:
        raise FuchsianIdentityError(
            "exponent parameters violate the Fuchsian sum constraint",
            observed=str(observed),
            expected=str(expected),
        )


def general_heun(p: HeunParams) -> LinearODE:
    """Order-2 equation with regular points 0, 1, t and infinity.

    P_0 = z(z-1)(z-t), P_1 = sum_k (1-theta_k) P_0/(z-z_k),
    P_2 = alpha theta_inf (z-q).
    """
    if p.t == 0 or p.t == 1:
        raise DegenerateGeometryError("t must differ from 0 and 1", t=str(p.t))
    total = p.theta1 + p.theta2 + p.theta3 + p.theta_inf + p.alpha
    _sum_check(total, Fraction(2))
    zs = (Fraction(0), Fraction(1), p.t)
    thetas = (p.theta1, p.theta2, p.theta3)
    p0 = RatPoly.from_roots(zs)
    p1 = RatPoly()
    for z_k, th in zip(zs, thetas):
        p1 = p1 + (1 - th) * exact_div(p0, RatPoly([-z_k, 1]))
    p2 = p.alpha * p.theta_inf * RatPoly([-p.q, 1])
    return make_ode([p0, p1, p2])


def multi_heun(p: MultiHeunParams) -> LinearODE:
    """Order-2 equation with m distinct finite regular points.

    P_0 = prod (z - z_j), P_1 = sum_k (1-theta_k) P_0/(z-z_k),
    P_2 = alpha theta_inf prod (z - q_j) over the m-2 accessory
    locations (repetitions allowed: a repeated q_j is a multiple root).
    """
    m = p.m
    if m < 3:
        raise DegenerateGeometryError("need at least three finite points", m=m)
    if len(set(p.zs)) != m:
        raise DegenerateGeometryError("finite singular locations must be distinct")
    if len(p.thetas) != m:
        raise ValueError("one theta per finite point is required")
    if len(p.qs) != m - 2:
        raise ValueError("exactly m - 2 accessory locations are required")
    total = sum(p.thetas, Fraction(0)) + p.theta_inf + p.alpha
    _sum_check(total, Fraction(m - 1))
    p0 = RatPoly.from_roots(p.zs)
    p1 = RatPoly()
    for z_k, th in zip(p.zs, p.thetas):
        p1 = p1 + (1 - th) * exact_div(p0, RatPoly([-z_k, 1]))
    p2 = p.alpha * p.theta_inf * RatPoly.from_roots(p.qs)
    return make_ode([p0, p1, p2])


def third_order_example(p: ThirdOrderParams) -> LinearODE:
    """Order-3 four-point equation with one accessory location.

    Exponents: {0, alpha, beta} at 0, {0, 1, 2+theta2} at 1,
    {0, 1, 2+theta3} at t; at infinity they satisfy
    e1 = -(alpha+beta+theta2+theta3), e2 = alpha beta + theta2 + theta3,
    e3 = kappa (elementary symmetric functions).
    """
    if p.t == 0 or p.t == 1:
        raise DegenerateGeometryError("t must differ from 0 and 1", t=str(p.t))
    z = RatPoly([0, 1])
    z1 = RatPoly([-1, 1])
    zt = RatPoly([-p.t, 1])
    p0 = z * z * z1 * zt
    p1 = (3 - p.alpha - p.beta) * z * z1 * zt - p.theta2 * z * z * zt - p.theta3 * z * z * z1
    p2 = (p.alpha - 1) * (p.beta - 1) * z1 * zt
    p3 = p.kappa * RatPoly([-p.q, 1])
    return make_ode([p0, p1, p2, p3])


def confluent_heun(p: ConfluentHeunParams) -> LinearODE:
    """Order-2 equation of the confluent degree pattern.

    Validates deg P_0 <= 2 (nonzero), deg P_1 = 2, alpha != 0 (so
    P_2 = alpha (z-q) has degree exactly 1), then checks that the
    pattern indeed produces an irregular point at infinity.
    """
    if p.p0.is_zero:
        raise NotConfluentClassError("P_0 must be nonzero")
    if p.p0.degree > 2:
        raise NotConfluentClassError("P_0 degree must be at most 2", degree=p.p0.degree)
    if p.p1.degree != 2:
        raise NotConfluentClassError("P_1 degree must be exactly 2", degree=p.p1.degree)
    if p.alpha == 0:
        raise NotConfluentClassError("alpha must be nonzero")
    p2 = p.alpha * RatPoly([-p.q, 1])
    ode = make_ode([p.p0, p.p1, p2])
    if frobenius.classify_point(ode, INFINITY).kind is not PointKind.IRREGULAR:
        raise NotConfluentClassError("pattern did not produce an irregular point at infinity")
    return ode
