"""Local analysis at a point: indicial data, Frobenius series, and the
apparent-singularity decision procedure.

Conventions.  Recenter the equation at z_0 (zeta = z - z_0) and write
T_k for the shifted coefficient polynomials with entries t_{k,i}.  The
operator acts on zeta^s as

    sum_k T_k (zeta^s)^{(n-k)} = sum_{j >= j_0} C_j(s) zeta^{s - n + j},

    C_j(s) = sum_k t_{k, j-k} * s(s-1)...(s - (n-k) + 1),

where j_0 = min_k (ord T_k + k).  The point is ordinary or regular
singular exactly when j_0 = ord T_0; the indicial polynomial is then
C_{j_0}, of degree exactly n, and its roots are the characteristic
exponents.  A series w = sum a_M zeta^(rho+M) satisfies the coefficient
recurrence a_M C_{j_0}(rho+M) = -sum_{m<M} a_m C_{j_0+M-m}(rho+m).

The point at infinity is always handled by the pullback z = 1/zeta and
analysis at zeta = 0; an exponent rho there describes w ~ z^(-rho).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import odemodel
from ._linalg import nullity
from .errors import (
    IrregularPointError,
    NotAnExponentError,
    NotSingularError,
)
from .odemodel import INFINITY, LinearODE, PointKind, SingularPoint, _InfinityType
from .polyrat import RatPoly, as_fraction, rational_roots


def _falling(m: int) -> RatPoly:
    """s(s-1)...(s-m+1) as a polynomial in s; 1 for m = 0."""
    p = RatPoly([1])
    for i in range(m):
        p = p * RatPoly([-i, 1])
    return p


class _LocalData:
    """Shifted-coefficient tables for one finite point."""

    def __init__(self, ode: LinearODE, point: Fraction):
        self.point = point
        self.n = ode.order
        shifted = [p.shifted(point) for p in ode.coeffs]
        self.v0 = shifted[0].valuation()
        j0 = None
        jmax = 0
        for k, t in enumerate(shifted):
            if t.is_zero:
                continue
            lo = t.valuation() + k
            hi = t.degree + k
            j0 = lo if j0 is None else min(j0, lo)
            jmax = max(jmax, hi)
        self.j0 = j0
        self.jmax = jmax
        falls = [_falling(self.n - k) for k in range(self.n + 1)]
        self.cpolys: list[RatPoly] = []
        for j in range(j0, jmax + 1):
            acc = RatPoly()
            for k, t in enumerate(shifted):
                i = j - k
                if 0 <= i <= t.degree:
                    acc = acc + t.coeffs[i] * falls[k]
            self.cpolys.append(acc)

    @property
    def is_regular(self) -> bool:
        # covers ordinary points too: there j0 = v0 = 0
        return self.j0 == self.v0

    @property
    def is_ordinary(self) -> bool:
        return self.v0 == 0

    def c(self, j: int) -> RatPoly:
        if self.j0 <= j <= self.jmax:
            return self.cpolys[j - self.j0]
        return RatPoly()

    @property
    def indicial(self) -> RatPoly:
        return self.cpolys[0]


def _local(ode: LinearODE, point) -> tuple[_LocalData, object]:
    """Local data at a finite point or, via pullback, at infinity.

    Returns (data, reported_location).
    """
    if isinstance(point, _InfinityType):
        pulled = odemodel.moebius_transform(ode, (0, 1, 1, 0))
        return _LocalData(pulled, Fraction(0)), INFINITY
    return _LocalData(ode, as_fraction(point)), as_fraction(point)


@dataclass(frozen=True)
class IndicialExponents:
    """Roots of the indicial polynomial at one point.

    exponents: the rational roots, sorted ascending, repeated per
    multiplicity.  residual: monic factor holding any non-rational
    roots (degree 0 when none).  complete: True when all n exponents
    are listed in `exponents`.
    """

    location: object
    exponents: tuple[Fraction, ...]
    residual: RatPoly
    complete: bool
    indicial: RatPoly


@dataclass(frozen=True)
class FrobeniusSolution:
    """Truncated local series solution zeta^rho sum a_M zeta^M.

    a_0 = 1.  obstructions lists (offset, value) for every resonance
    offset M >= 1 where the recurrence denominator C_{j0}(rho+M)
    vanishes; the value is the right-hand side that must be zero for a
    log-free continuation.  Nonzero values mean the honest solution
    with this exponent needs a logarithm; by convention the free
    coefficient is set to zero and the attempt continues formally.
    """

    point: Fraction
    exponent: Fraction
    coeffs: tuple[Fraction, ...]
    truncation: int
    obstructions: tuple[tuple[int, Fraction], ...]

    @property
    def log_free(self) -> bool:
        return all(v == 0 for _off, v in self.obstructions)


@dataclass(frozen=True)
class ApparentVerdict:
    """Outcome of the apparency test at a singular point.

    holomorphic_dim is the dimension of the space of holomorphic local
    solutions; the point is apparent exactly when it equals the order.
    """

    is_apparent: bool
    exponents: tuple[Fraction, ...]
    failed_condition: str | None
    holomorphic_dim: int | None


def indicial_polynomial(ode: LinearODE, point) -> RatPoly:
    """The degree-n indicial polynomial C_{j0}(s) at a regular point."""
    data, loc = _local(ode, point)
    if not data.is_regular:
        raise IrregularPointError(f"irregular singular point at {loc}")
    return data.indicial


def indicial_exponents(ode: LinearODE, point) -> IndicialExponents:
    """Characteristic exponents at an ordinary or regular singular point."""
    data, loc = _local(ode, point)
    if not data.is_regular:
        raise IrregularPointError(f"irregular singular point at {loc}")
    roots, residual = rational_roots(data.indicial)
    flat: list[Fraction] = []
    for r, m in roots:
        flat.extend([r] * m)
    return IndicialExponents(
        location=loc,
        exponents=tuple(flat),
        residual=residual,
        complete=residual.degree <= 0,
        indicial=data.indicial,
    )


def frobenius_series(ode: LinearODE, point, exponent, n_terms: int) -> FrobeniusSolution:
    """Series coefficients a_0..a_N at a finite regular point.

    exponent must be a root of the indicial polynomial.  At each
    resonance the obstruction value is recorded; see FrobeniusSolution.
    """
    point = as_fraction(point)
    exponent = as_fraction(exponent)
    if n_terms < 1:
        raise ValueError("series needs at least one computed term")
    data = _LocalData(ode, point)
    if not data.is_regular:
        raise IrregularPointError(f"irregular singular point at {point}")
    ind = data.indicial
    if ind(exponent) != 0:
        raise NotAnExponentError(
            f"{exponent} is not an indicial root at {point}",
            indicial=ind.pretty("s"),
        )
    width = data.jmax - data.j0
    coeffs = [Fraction(1)]
    obstructions: list[tuple[int, Fraction]] = []
    for m_idx in range(1, n_terms + 1):
        rhs = Fraction(0)
        for m in range(max(0, m_idx - width), m_idx):
            cj = data.c(data.j0 + m_idx - m)
            if not cj.is_zero:
                rhs -= coeffs[m] * cj(exponent + m)
        denom = ind(exponent + m_idx)
        if denom == 0:
            obstructions.append((m_idx, rhs))
            coeffs.append(Fraction(0))
        else:
            coeffs.append(rhs / denom)
    return FrobeniusSolution(
        point=point,
        exponent=exponent,
        coeffs=tuple(coeffs),
        truncation=n_terms,
        obstructions=tuple(obstructions),
    )


def substitution_rows(ode: LinearODE, sol: FrobeniusSolution, upto: int | None = None) -> list[Fraction]:
    """Residual rows of a truncated series pushed through the equation.

    Row t is the coefficient of zeta^(rho - n + j0 + t) of the image of
    the truncated series; rows 0..N vanish exactly for a log-free
    solution (rows above N involve missing coefficients and are not
    meaningful).
    """
    data = _LocalData(ode, sol.point)
    width = data.jmax - data.j0
    top = sol.truncation if upto is None else upto
    rows = []
    for t in range(top + 1):
        acc = Fraction(0)
        for m in range(max(0, t - width), min(t, sol.truncation) + 1):
            cj = data.c(data.j0 + t - m)
            if not cj.is_zero:
                acc += sol.coeffs[m] * cj(sol.exponent + m)
        rows.append(acc)
    return rows


def _verdict(data: _LocalData) -> ApparentVerdict:
    """Apparency decision from local data at a singular point."""
    n = data.n
    roots, residual = rational_roots(data.indicial)
    flat: list[Fraction] = []
    for r, m in roots:
        flat.extend([r] * m)
    exponents = tuple(flat)
    if residual.degree > 0:
        return ApparentVerdict(False, exponents, "non-rational exponent", None)
    if any(e.denominator != 1 for e in exponents):
        return ApparentVerdict(False, exponents, "non-integer exponent", None)
    if any(e < 0 for e in exponents):
        return ApparentVerdict(False, exponents, "negative exponent", None)
    if len(set(exponents)) != n:
        return ApparentVerdict(False, exponents, "repeated exponents", None)

    # Holomorphic solution count.  A power series solution is pinned by
    # its jet a_0..a_E with E = max exponent: beyond E the indicial
    # factor C_{j0}(M) is nonzero and the recurrence is forced.  Rows
    # t = 0..E of the substitution constrain exactly that jet, so the
    # nullity of the (E+1)x(E+1) system is the holomorphic dimension.
    # Counting dimensions (rather than per-exponent obstruction values)
    # is what "n independent holomorphic solutions" means: a free
    # parameter introduced at an earlier resonance can cancel a later
    # obstruction, which per-exponent bookkeeping would miss.
    top = int(max(exponents))
    matrix = []
    for t in range(top + 1):
        row = []
        for m in range(top + 1):
            cj = data.c(data.j0 + t - m) if m <= t else RatPoly()
            row.append(cj(Fraction(m)) if not cj.is_zero else Fraction(0))
        matrix.append(row)
    dim = nullity(matrix, top + 1)
    if dim == n:
        return ApparentVerdict(True, exponents, None, dim)
    return ApparentVerdict(False, exponents, "nonzero log obstruction", dim)


def is_apparent(ode: LinearODE, point) -> ApparentVerdict:
    """Decide whether a singular point is apparent.

    Apparent means every local solution is holomorphic: all n exponents
    are distinct nonnegative integers and the holomorphic solution
    space has full dimension n.  Ordinary points are rejected with
    NotSingular (the question is vacuous there), irregular points with
    IrregularPoint.
    """
    data, loc = _local(ode, point)
    if data.is_ordinary:
        raise NotSingularError(f"{loc} is an ordinary point")
    if not data.is_regular:
        raise IrregularPointError(f"irregular singular point at {loc}")
    return _verdict(data)


def classify_point(ode: LinearODE, point) -> SingularPoint:
    """Full classification of one point (finite rational or infinity)."""
    data, loc = _local(ode, point)
    if data.is_ordinary:
        return SingularPoint(location=loc, kind=PointKind.ORDINARY)
    if not data.is_regular:
        return SingularPoint(location=loc, kind=PointKind.IRREGULAR)
    verdict = _verdict(data)
    roots, residual = rational_roots(data.indicial)
    flat: list[Fraction] = []
    for r, m in roots:
        flat.extend([r] * m)
    kind = PointKind.APPARENT if verdict.is_apparent else PointKind.REGULAR
    return SingularPoint(
        location=loc,
        kind=kind,
        exponents=tuple(flat),
        residual=residual if residual.degree > 0 else None,
    )
