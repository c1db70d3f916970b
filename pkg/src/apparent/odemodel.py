"""Equation data model and global singularity analysis.

A LinearODE is the operator sum_{k=0..n} P_k(z) w^{(n-k)} applied to w,
held in canonical form so that "equal up to a nonzero constant factor"
collapses to plain equality: the coefficients share no common polynomial
factor and the leading coefficient polynomial P_0 is monic.

The point at infinity is always analyzed through the pullback z = 1/zeta
rather than by separate degree-counting rules: one code path, one set of
conventions.  An exponent rho at infinity describes behavior w ~ z^(-rho).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import (
    DegenerateLeadingError,
    NotAnODEError,
    NotFuchsianError,
    SingularMoebiusError,
)
from .polyrat import ONE, RatPoly, as_fraction, exact_div, poly_gcd, rational_roots


class _InfinityType:
    """Singleton marker for the point at infinity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infinity"

    def __str__(self):
        return "inf"


INFINITY = _InfinityType()


class PointKind(str, Enum):
    ORDINARY = "Ordinary"
    REGULAR = "RegularSingular"
    IRREGULAR = "IrregularSingular"
    APPARENT = "ApparentSingular"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class LinearODE:
    """Canonical-form linear ODE sum P_k(z) w^{(n-k)} = 0.

    coeffs: (P_0, ..., P_n) with P_0 nonzero and monic, no common
    polynomial factor among all coefficients.
    degree_convention: True when deg P_0 is maximal among the P_k and
    exceeds the order n (the regularity-at-infinity degree pattern of
    the all-singularities-regular families; confluent equations break
    it and are still accepted).
    """

    coeffs: tuple[RatPoly, ...]
    degree_convention: bool = field(compare=False, default=False)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> RatPoly:
        return self.coeffs[0]

    def __repr__(self):
        inner = ", ".join(p.pretty() for p in self.coeffs)
        return f"LinearODE([{inner}])"


@dataclass(frozen=True)
class SingularPoint:
    """Classified point: location, kind, and exponents when defined.

    exponents are present exactly for the regular-singular and apparent
    kinds.  residual is the monic non-rational factor of the indicial
    polynomial when some exponents are irrational (exponents then lists
    only the rational ones and the point is flagged incomplete).
    """

    location: Fraction | _InfinityType
    kind: PointKind
    exponents: tuple[Fraction, ...] | None = None
    residual: RatPoly | None = None

    @property
    def is_complete(self) -> bool:
        return self.residual is None or self.residual.degree <= 0


@dataclass(frozen=True)
class RiemannColumn:
    location: Fraction | _InfinityType
    exponents: tuple[Fraction, ...]
    residual: RatPoly | None = None


@dataclass(frozen=True)
class RiemannSymbol:
    """Singular points with exponents, plus the extra-location column.

    apparent_params lists (location, role): role "apparent" for genuine
    apparent singular points, role "accessory" for zeros of P_n that are
    ordinary points of the equation (they become apparent under the
    derivative transform).
    """

    columns: tuple[RiemannColumn, ...]
    apparent_params: tuple[tuple[Fraction, str], ...]

    def pretty(self) -> str:
        """Matrix-style text layout: locations on top, exponents below."""
        cells: list[list[str]] = []
        for col in self.columns:
            body = [str(e) for e in col.exponents]
            if col.residual is not None and col.residual.degree > 0:
                body.append(f"roots of {col.residual.pretty('s')}")
            cells.append([str(col.location)] + body)
        if not cells:
            cells = [["-"]]
        extra = [f"{loc} ({role})" for loc, role in self.apparent_params]
        height = max(len(c) for c in cells)
        widths = [max(len(s) for s in c) for c in cells]
        lines = []
        for row in range(height):
            entries = [
                (c[row] if row < len(c) else "").ljust(w)
                for c, w in zip(cells, widths)
            ]
            body = "  ".join(entries).rstrip()
            if row == 0:
                tail = ("  | " + ", ".join(extra)) if extra else ""
                lines.append(f"P(  {body}{tail}  ; z )")
            else:
                lines.append(f"    {body}")
        return "\n".join(lines)


@dataclass(frozen=True)
class FuchsReport:
    """Outcome of the global regularity and exponent-sum checks.

    exponent_sum is the sum of all characteristic exponents over the s
    singular points (infinity included when singular), computed from the
    indicial polynomials by Vieta so irrational exponents contribute
    exactly.  expected_sum = (s-2) n(n-1)/2.  complete is False when
    P_0 has a non-rational factor whose roots could not be enumerated;
    the report then covers only the enumerated points.
    """

    is_fuchsian: bool
    points: tuple[SingularPoint, ...]
    num_singular: int
    exponent_sum: Fraction | None
    expected_sum: Fraction | None
    identity_holds: bool
    unresolved_factor: RatPoly | None
    complete: bool


def make_ode(coeffs) -> LinearODE:
    """Validate and canonicalize a coefficient list [P_0 .. P_n].

    Canonical form: divide out the common polynomial factor of all
    coefficients, then scale so P_0 is monic.  The degree-convention
    flag records whether deg P_0 is maximal and exceeds the order.
    """
    polys = [c if isinstance(c, RatPoly) else RatPoly(c) for c in coeffs]
    if len(polys) < 2:
        raise NotAnODEError("an ODE needs at least two coefficient polynomials")
    if polys[0].is_zero:
        raise DegenerateLeadingError("leading coefficient polynomial is zero")
    nonzero = [p for p in polys if not p.is_zero]
    g = nonzero[0]
    for p in nonzero[1:]:
        g = poly_gcd(g, p)
    if g.degree > 0:
        polys = [p if p.is_zero else exact_div(p, g) for p in polys]
    lead = polys[0].leading
    if lead != 1:
        polys = [p / lead for p in polys]
    n = len(polys) - 1
    d0 = polys[0].degree
    convention = d0 > n and all(p.degree <= d0 for p in polys)
    return LinearODE(tuple(polys), convention)


def leading_residual(ode: LinearODE) -> RatPoly:
    """Monic factor of P_0 carrying the non-rational roots (1 if none)."""
    _roots, residual = rational_roots(ode.leading)
    return residual


def moebius_transform(ode: LinearODE, m) -> LinearODE:
    """Change of variable z = (a zeta + b)/(c zeta + d), ad - bc != 0.

    With r(zeta) = (c zeta + d)^2 / (ad - bc) the derivative transforms
    as d/dz = r d/dzeta, so the operator pulls back through the
    expansion (r d/dzeta)^m = sum_j c_{m,j} d^j/dzeta^j with polynomial
    c_{m,j} given by c_{m,j} = r (c_{m-1,j-1} + c_{m-1,j}').  Composed
    coefficients P_k(z(zeta)) are cleared of their (c zeta + d) powers,
    and the result is canonicalized.
    """
    a, b, c, d = (as_fraction(v) for v in m)
    det = a * d - b * c
    if det == 0:
        raise SingularMoebiusError("Moebius matrix has zero determinant")
    n = ode.order
    num = RatPoly([b, a])
    den = RatPoly([d, c])
    r = den * den / det

    # rows[m][j] = c_{m,j}; row 0 is the identity operator
    rows = [[ONE]]
    for _ in range(n):
        prev = rows[-1]
        cur = []
        for j in range(len(prev) + 1):
            left = prev[j - 1] if j - 1 >= 0 else RatPoly()
            right = prev[j].derivative() if j < len(prev) else RatPoly()
            cur.append(r * (left + right))
        rows.append(cur)

    # P_k(z(zeta)) * den^D is polynomial for D = max deg P_k
    big_d = max(p.degree for p in ode.coeffs if not p.is_zero)

    def compose_cleared(p: RatPoly) -> RatPoly:
        out = RatPoly()
        for i, ci in enumerate(p.coeffs):
            if ci == 0:
                continue
            out = out + ci * num**i * den ** (big_d - i)
        return out

    composed = [compose_cleared(p) for p in ode.coeffs]
    new_coeffs = []
    for j in range(n, -1, -1):
        acc = RatPoly()
        for k in range(n + 1):
            row = rows[n - k]
            if j < len(row):
                acc = acc + composed[k] * row[j]
        new_coeffs.append(acc)
    return make_ode(new_coeffs)


def singular_points(ode: LinearODE) -> list[SingularPoint]:
    """Every rational singular location plus infinity, classified.

    Ordinary points are omitted.  Finite candidates are the rational
    roots of P_0; a non-rational factor of P_0 (see leading_residual)
    hides further singular points this scan cannot enumerate.
    """
    from . import frobenius

    roots, _residual = rational_roots(ode.leading)
    out = []
    for r, _m in roots:
        sp = frobenius.classify_point(ode, r)
        if sp.kind is not PointKind.ORDINARY:
            out.append(sp)
    sp_inf = frobenius.classify_point(ode, INFINITY)
    if sp_inf.kind is not PointKind.ORDINARY:
        out.append(sp_inf)
    return out


def _exponent_sum_at(ode: LinearODE, location) -> Fraction:
    """Sum of the n indicial roots at a regular point, by Vieta."""
    from . import frobenius

    ind = frobenius.indicial_polynomial(ode, location)
    return -ind.coeffs[-2] / ind.coeffs[-1] if ind.degree >= 1 else Fraction(0)


def fuchs_check(ode: LinearODE) -> FuchsReport:
    """Global regularity plus the exponent-sum identity.

    For an order-n equation with s singular points (infinity counted
    when singular), the sum of all characteristic exponents of a
    Fuchsian equation equals (s-2) n(n-1)/2.  The sum is taken from the
    indicial polynomials' subleading coefficients, so irrational
    exponents are handled exactly.
    """
    points = tuple(singular_points(ode))
    residual = leading_residual(ode)
    complete = residual.degree <= 0
    is_fuchsian = complete and all(
        p.kind in (PointKind.REGULAR, PointKind.APPARENT) for p in points
    )
    n = ode.order
    s = len(points)
    if not is_fuchsian:
        return FuchsReport(
            is_fuchsian=False,
            points=points,
            num_singular=s,
            exponent_sum=None,
            expected_sum=None,
            identity_holds=False,
            unresolved_factor=None if complete else residual,
            complete=complete,
        )
    total = Fraction(0)
    for p in points:
        total += _exponent_sum_at(ode, p.location)
    expected = Fraction((s - 2) * n * (n - 1), 2)
    return FuchsReport(
        is_fuchsian=True,
        points=points,
        num_singular=s,
        exponent_sum=total,
        expected_sum=expected,
        identity_holds=total == expected,
        unresolved_factor=None,
        complete=True,
    )


def riemann_symbol(ode: LinearODE) -> RiemannSymbol:
    """Generalized Riemann symbol of a Fuchsian equation.

    One column per singular point with its n exponents; the extra
    column lists apparent points and the accessory zeros of P_n (zeros
    that are ordinary points of the equation).  Raises NotFuchsian when
    any enumerated point is irregular or P_0 has non-rational roots.
    """
    from . import frobenius

    residual = leading_residual(ode)
    if residual.degree > 0:
        raise NotFuchsianError(
            "leading coefficient has non-rational roots; cannot tabulate",
            unresolved_factor=residual.pretty(),
        )
    points = singular_points(ode)
    for p in points:
        if p.kind is PointKind.IRREGULAR:
            raise NotFuchsianError(
                f"irregular singular point at {p.location}", location=str(p.location)
            )
    columns = []
    for p in points:
        ind = frobenius.indicial_exponents(ode, p.location)
        columns.append(
            RiemannColumn(
                location=p.location,
                exponents=ind.exponents,
                residual=None if ind.complete else ind.residual,
            )
        )
    extra = []
    trailing = ode.coeffs[-1]
    if not trailing.is_zero:
        p0 = ode.leading
        for r, _m in rational_roots(trailing)[0]:
            if p0(r) != 0:
                extra.append((r, "accessory"))
    for p in points:
        if p.kind is PointKind.APPARENT:
            extra.append((p.location, "apparent"))
    return RiemannSymbol(tuple(columns), tuple(extra))
