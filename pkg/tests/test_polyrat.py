import random
from fractions import Fraction

import pytest

from apparent import (
    RatFunc,
    RatPoly,
    ZeroPolynomialError,
    exact_div,
    poly_gcd,
    radical,
    rational_roots,
)

F = Fraction


def rand_poly(rng, degree):
    coeffs = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(degree)]
    coeffs.append(F(rng.randint(1, 9), rng.randint(1, 9)))
    return RatPoly(coeffs)


def test_construction_and_basic_ops():
    p = RatPoly([F(1, 2), 0, 1])  # z^2 + 1/2
    assert p.degree == 2
    assert p(F(2)) == F(9, 2)
    assert p.coeff(0) == F(1, 2) and p.coeff(5) == 0
    assert (p - p).is_zero
    assert RatPoly([0, 0, 3, 1]).valuation() == 2
    assert RatPoly([2, 4]).monic() == RatPoly([F(1, 2), 1])


def test_shift_evaluates_at_offset():
    p = RatPoly([1, -2, 1])  # (z-1)^2
    s = p.shifted(F(1))
    assert s == RatPoly([0, 0, 1])


def test_gcd_of_shared_linear_factor():
    a = RatPoly.from_roots((F(3), F(3), F(-1)))
    b = RatPoly.from_roots((F(3), F(5)))
    assert poly_gcd(a, b) == RatPoly([-3, 1])


def test_gcd_coprime_is_one():
    assert poly_gcd(RatPoly([1, 1]), RatPoly([2, 1])) == RatPoly([1])


def test_radical_strips_multiplicity():
    p = RatPoly([0, 0, 0, -1, 1])  # z^3 (z - 1)
    assert radical(p) == RatPoly([0, -1, 1])


def test_rational_roots_with_multiplicities():
    p = RatPoly.from_roots((F(2), F(2), F(-1, 3)))
    roots, residual = rational_roots(p)
    assert set(roots) == {(F(2), 2), (F(-1, 3), 1)}
    assert residual == RatPoly([1])


def test_rational_roots_leaves_irrational_residual():
    # (z^2 - 2)(z - 1): only the rational root comes out
    p = RatPoly([-2, 0, 1]) * RatPoly([-1, 1])
    roots, residual = rational_roots(p)
    assert roots == [(F(1), 1)]
    assert residual == RatPoly([-2, 0, 1])


def test_rational_roots_rejects_zero():
    with pytest.raises(ZeroPolynomialError):
        rational_roots(RatPoly())


def test_exact_div_detects_remainder():
    with pytest.raises(ValueError):
        exact_div(RatPoly([1, 1]), RatPoly([0, 1]))


def test_gcd_and_radical_properties():
    rng = random.Random(20250825)
    for _ in range(25):
        g = rand_poly(rng, rng.randint(0, 2))
        a = rand_poly(rng, rng.randint(0, 3)) * g
        b = rand_poly(rng, rng.randint(0, 3)) * g
        d = poly_gcd(a, b)
        assert d.leading == 1
        assert exact_div(a, d) * d == a
        assert exact_div(b, d) * d == b
        assert exact_div(d, g.monic()) * g.monic() == d  # g divides the gcd

        r = radical(a)
        assert poly_gcd(r, r.derivative()).degree == 0
        assert rational_roots(r)[0] == [(root, 1) for root, _ in rational_roots(a)[0]]


def test_derivative_leibniz_property():
    rng = random.Random(7)
    for _ in range(25):
        p = rand_poly(rng, rng.randint(0, 4))
        q = rand_poly(rng, rng.randint(0, 4))
        assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


def test_root_factorization_reconstructs():
    rng = random.Random(99)
    for _ in range(20):
        roots = [F(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(rng.randint(1, 4))]
        lead = F(rng.randint(1, 5), rng.randint(1, 5))
        p = lead * RatPoly.from_roots(roots)
        found, residual = rational_roots(p)
        rebuilt = RatPoly([lead])
        for root, mult in found:
            rebuilt = rebuilt * RatPoly([-root, 1]) ** mult
        assert rebuilt * residual == p


def test_ratfunc_reduces_common_factors():
    z1 = RatPoly([-1, 1])
    f = RatFunc(z1 * RatPoly([2, 1]), z1 * RatPoly([3, 1]))
    assert f == RatFunc(RatPoly([2, 1]), RatPoly([3, 1]))
    assert not f.is_polynomial
    assert RatFunc(z1 * z1, z1).is_polynomial


def test_ratfunc_arithmetic():
    z = RatPoly([0, 1])
    one = RatPoly([1])
    f = RatFunc(one, z) + RatFunc(one, RatPoly([-1, 1]))
    assert f == RatFunc(RatPoly([-1, 2]), z * RatPoly([-1, 1]))
    g = RatFunc(z, one)
    assert (f * g).derivative() == (f * g).derivative()
    assert RatFunc(z, z) == RatFunc(one, one)


def test_pretty_round_trips_signs():
    p = RatPoly([F(-1, 2), 0, 1])
    text = p.pretty()
    assert "z^2" in text and "1/2" in text
