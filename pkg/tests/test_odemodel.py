import random
from fractions import Fraction

import pytest

from apparent import (
    INFINITY,
    DegenerateLeadingError,
    HeunParams,
    NotAnODEError,
    PointKind,
    RatPoly,
    SingularMoebiusError,
    deform,
    fuchs_check,
    general_heun,
    indicial_exponents,
    make_ode,
    moebius_transform,
    riemann_symbol,
    singular_points,
)

from _gen import heun_params

F = Fraction


def sample_heun():
    return general_heun(
        HeunParams(
            t=F(2),
            theta1=F(1, 2),
            theta2=F(1, 3),
            theta3=F(1, 5),
            theta_inf=F(1, 7),
            alpha=2 - F(1, 2) - F(1, 3) - F(1, 5) - F(1, 7),
            q=F(5),
        )
    )


def test_canonical_scaling_makes_leading_monic():
    ode = make_ode([[2], [0], [2]])
    assert ode.coeffs == (RatPoly([1]), RatPoly([0]), RatPoly([1]))


def test_canonical_form_strips_common_factor():
    shared = RatPoly([-5, 1])
    a = RatPoly([0, -1, 1])
    b = RatPoly([3, 2])
    c = RatPoly([7])
    ode = make_ode([shared * a * 3, shared * b * 3, shared * c * 3])
    assert ode.coeffs == (a, b, c)


def test_make_ode_rejects_degenerate_input():
    with pytest.raises(DegenerateLeadingError):
        make_ode([[0], [1]])
    with pytest.raises(NotAnODEError):
        make_ode([[1]])


def test_degree_convention_flag():
    # Heun: deg P_0 = 3 exceeds the order and dominates the rest
    assert sample_heun().degree_convention
    # constant-coefficient equation: deg P_0 = 0 never exceeds the order
    assert not make_ode([[2], [0], [2]]).degree_convention


def test_heun_singular_set():
    pts = singular_points(sample_heun())
    locs = {sp.location for sp in pts}
    assert locs == {F(0), F(1), F(2), INFINITY}
    assert all(sp.kind is PointKind.REGULAR for sp in pts)


def test_deformed_heun_gains_one_apparent_point():
    ode = sample_heun()
    res = deform(ode)
    pts = singular_points(res.ode)
    locs = {sp.location for sp in pts}
    assert locs == {F(0), F(1), F(2), F(5), INFINITY}
    kinds = {sp.location: sp.kind for sp in pts}
    assert kinds[F(5)] is PointKind.APPARENT
    assert all(kinds[z] is PointKind.REGULAR for z in (F(0), F(1), F(2)))


def test_fuchs_check_on_heun():
    report = fuchs_check(sample_heun())
    assert report.is_fuchsian and report.complete and report.identity_holds
    assert report.num_singular == 4
    assert report.exponent_sum == 2
    assert report.expected_sum == 2


def test_fuchs_check_flags_irregular():
    # constant P_0 with quadratic P_1 forces an irregular point at infinity
    report = fuchs_check(make_ode([[1], [0, 0, 1], [1]]))
    assert not report.is_fuchsian


def test_moebius_inversion_swaps_zero_and_infinity():
    ode = sample_heun()
    flipped = moebius_transform(ode, (0, 1, 1, 0))  # z -> 1/zeta
    at_zero = indicial_exponents(flipped, F(0))
    at_inf = indicial_exponents(ode, INFINITY)
    assert sorted(at_zero.exponents) == sorted(at_inf.exponents)
    # and the finite points land on their reciprocals
    locs = {sp.location for sp in singular_points(flipped)}
    assert locs == {F(0), F(1), F(1, 2), INFINITY}


def test_moebius_translation_moves_exponents():
    rng = random.Random(3)
    ode = general_heun(heun_params(rng))
    shift = moebius_transform(ode, (1, -3, 0, 1))  # z = zeta - 3
    orig = indicial_exponents(ode, F(0))
    moved = indicial_exponents(shift, F(3))
    assert sorted(orig.exponents) == sorted(moved.exponents)


def test_moebius_rejects_singular_matrix():
    with pytest.raises(SingularMoebiusError):
        moebius_transform(sample_heun(), (1, 2, 2, 4))


def test_riemann_symbol_layout():
    ode = deform(sample_heun()).ode
    sym = riemann_symbol(ode)
    cols = {c.location: set(c.exponents) for c in sym.columns}
    # derivative shifts the nonzero exponent down by one at each base point
    assert cols[F(0)] == {F(0), F(1, 2) - 1}
    assert cols[F(1)] == {F(0), F(1, 3) - 1}
    assert cols[F(5)] == {F(0), F(2)}
    assert sym.apparent_params == ((F(5), "apparent"),)
    text = sym.pretty()
    assert "inf" in text and "5 (apparent)" in text


def test_fuchs_sum_shifts_by_two_under_deform():
    # one extra finite point, exponents {0, 2}: the identity stays exact
    ode = sample_heun()
    report = fuchs_check(deform(ode).ode)
    assert report.is_fuchsian and report.identity_holds
    assert report.num_singular == 5
    assert report.exponent_sum == 3
