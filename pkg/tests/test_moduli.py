import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sig3.errors import DomainError
from sig3.moduli import (
    invariants,
    midpoints,
    modulus_from_kappa,
    p_from_s_c,
    params_from_p,
    trimidiation,
)
from oracles import rel_err

SQRT3 = math.sqrt(3.0)
SQRT7 = math.sqrt(7.0)


def exact_invariants(kappa):
    """(g2, g3) on the exact binary value of kappa, in rational arithmetic."""
    t = Fraction(kappa) ** 2
    g2 = Fraction(4, 27) * (9 - 8 * t)
    g3 = Fraction(8, 729) * (27 - 36 * t + 8 * t * t)
    return float(g2), float(g3)


# ----------------------------------------------------------- moduli ----


def test_modulus_self_complementary_point():
    mod = modulus_from_kappa(1.0 / math.sqrt(2.0))
    assert rel_err(mod.lam, 1.0 / math.sqrt(2.0)) < 1e-15
    assert rel_err(mod.theta, math.pi / 4.0) < 1e-15


@pytest.mark.parametrize("kappa", [0.0, 1.0, -0.3, 1.7])
def test_modulus_rejects_endpoints(kappa):
    with pytest.raises(DomainError):
        modulus_from_kappa(kappa)


def test_modulus_at_transfer_half():
    # kappa(p=1/2) = 9 sqrt(21)/49; its trisected sine is sqrt3/(2 sqrt7).
    mod = modulus_from_kappa(9.0 * math.sqrt(21.0) / 49.0)
    assert rel_err(math.sin(mod.theta / 3.0), SQRT3 / (2.0 * SQRT7)) < 1e-15


def test_modulus_complement_is_involutive():
    mod = modulus_from_kappa(0.3)
    assert rel_err(mod.complement.complement.kappa, 0.3) < 1e-15


# ------------------------------------------------ parametrization ----


def test_params_at_half_reproduce_exact_rationals():
    params = params_from_p(0.5)
    assert params.alpha == 5.0 / 32.0  # dyadic, exact
    assert rel_err(params.beta, 243.0 / 343.0) < 1e-15
    assert rel_err(params.r2, 32.0 / 49.0) < 1e-15
    assert rel_err(params.s ** 2, 3.0 / 28.0) < 1e-15
    assert rel_err(params.X, 177.0 / 98.0) < 1e-15
    assert rel_err(params.s3c, 15.0 * SQRT3 / 784.0) < 1e-15
    # the midpoint-route modulus agrees with alpha (both equal 5/32)
    assert rel_err(params.k2, 5.0 / 32.0) < 1e-14


def test_params_small_p_limits():
    params = params_from_p(1e-3)
    assert params.alpha < 1e-8
    assert params.beta < 1e-5
    assert abs(params.r2 - 1.0) < 5e-3


@pytest.mark.parametrize("p", [0.0, 1.0, -0.2, 1.01])
def test_params_domain(p):
    with pytest.raises(DomainError):
        params_from_p(p)


def test_p_from_s_c_exact_surds():
    assert rel_err(p_from_s_c(SQRT3 / (2.0 * SQRT7), 5.0 / (2.0 * SQRT7)), 0.5) < 1e-15


def test_p_from_s_c_small_s():
    s = 1e-4
    assert 0.0 < p_from_s_c(s, math.sqrt(1.0 - s * s)) < 1e-3


def test_p_from_s_c_rejects_bad_input():
    with pytest.raises(DomainError):
        p_from_s_c(0.5, math.sqrt(0.75))  # theta = pi/2 endpoint
    with pytest.raises(DomainError):
        p_from_s_c(0.0, 1.0)
    with pytest.raises(DomainError):
        p_from_s_c(0.3, 0.3)  # not a sine/cosine pair


@given(p=st.floats(min_value=1e-3, max_value=0.999))
@settings(max_examples=80, deadline=None)
def test_parametrization_round_trip(p):
    params = params_from_p(p)
    assert abs(p_from_s_c(params.s, params.c) - p) <= 1e-14


@pytest.mark.parametrize("p", [i / 10.0 for i in range(1, 10)])
def test_parametrization_round_trip_on_the_decade_grid(p):
    params = params_from_p(p)
    assert abs(p_from_s_c(params.s, params.c) - p) <= 1e-14


@pytest.mark.parametrize("p", [i / 10.0 for i in range(1, 10)])
def test_dual_routes_on_the_decade_grid(p):
    # alpha against the midpoint-ratio modulus, beta against the trisected
    # sine route; params_from_p enforces both internally, asserted here too.
    params = params_from_p(p)
    kappa_s = params.s * (3.0 - 4.0 * params.s ** 2)
    assert abs(params.alpha - params.k2) <= 1e-14 * params.alpha
    assert abs(params.beta - kappa_s ** 2) <= 1e-14 * params.beta


@given(p=st.floats(min_value=1e-3, max_value=0.999))
@settings(max_examples=80, deadline=None)
def test_transfer_arguments_stay_in_range(p):
    params = params_from_p(p)
    assert 0.0 < params.alpha < 1.0
    assert 0.0 < params.beta < 1.0
    assert params.r2 > 0.0


# ------------------------------------------------------ invariants ----


def test_invariants_small_modulus_limit():
    inv = invariants(modulus_from_kappa(1e-8))
    assert rel_err(inv.g2, 4.0 / 3.0) < 1e-14
    assert rel_err(inv.g3, 8.0 / 27.0) < 1e-14


def test_invariants_match_exact_rational_arithmetic():
    for kappa in (0.1, 0.3, 0.6, 0.8):
        inv = invariants(modulus_from_kappa(kappa))
        g2x, g3x = exact_invariants(kappa)
        assert rel_err(inv.g2, g2x) < 1e-15
        assert rel_err(inv.g3, g3x) < 1e-15


def test_invariants_complementary_form_agreement():
    for kappa in (0.1, 0.25, 0.5, 0.75, 0.9):
        mod = modulus_from_kappa(kappa)
        inv = invariants(mod)
        u = mod.lam ** 2
        g2_alt = (4.0 / 27.0) * (8.0 * u + 1.0)
        g3_alt = (8.0 / 729.0) * (8.0 * u * u + 20.0 * u - 1.0)
        assert rel_err(inv.g2, g2_alt) < 1e-15
        assert abs(inv.g3 - g3_alt) < 1e-15 * (8.0 / 729.0) * (27.0 + 36.0 * kappa ** 2)


def test_discriminant_positive_inside_the_family():
    for kappa in (0.05, 0.3, 0.6, 0.9, 0.99):
        inv = invariants(modulus_from_kappa(kappa))
        assert inv.discriminant > 0.0


# ------------------------------------------------------- midpoints ----


def test_midpoints_at_transfer_half():
    params = params_from_p(0.5)
    mod = modulus_from_kappa(math.sqrt(params.beta))
    mids = midpoints(mod)
    assert rel_err(mids.e1, 59.0 / 147.0) < 1e-14


def test_midpoints_collapse_toward_zero_modulus():
    mids = midpoints(modulus_from_kappa(1e-4))
    assert abs(mids.e1 - 2.0 / 3.0) < 1e-8
    assert abs(mids.e2 + 1.0 / 3.0) < 1e-8
    assert abs(mids.e3 + 1.0 / 3.0) < 1e-8
    assert mids.e2 > mids.e3  # the gap closes but never crosses


@pytest.mark.parametrize("kappa", [0.3, 0.6, 0.9])
def test_midpoints_are_cubic_roots(kappa):
    mod = modulus_from_kappa(kappa)
    inv = invariants(mod)
    mids = midpoints(mod)
    for e in (mids.e1, mids.e2, mids.e3):
        assert abs(4.0 * e ** 3 - inv.g2 * e - inv.g3) <= 1e-13 * max(1.0, abs(inv.g3))
    assert abs(mids.e1 + mids.e2 + mids.e3) <= 1e-14


# Above p ~ 0.95 the arcsin route through kappa = sqrt(beta) -> 1 amplifies
# rounding by 1/lambda and the 1e-14 budget no longer holds.
@given(p=st.floats(min_value=1e-3, max_value=0.95))
@settings(max_examples=60, deadline=None)
def test_midpoint_spread_matches_parametrization(p):
    params = params_from_p(p)
    mids = midpoints(modulus_from_kappa(math.sqrt(params.beta)))
    assert abs(mids.spread - params.r2) <= 1e-14


# ---------------------------------------------------- trimidiation ----


def test_trimidiation_b_is_exact():
    assert trimidiation(modulus_from_kappa(0.35)).b == -1.0 / 3.0


def test_trimidiation_closed_forms():
    tri = trimidiation(modulus_from_kappa(0.6))
    t = Fraction(0.6) ** 2
    assert rel_err(tri.h2, float(Fraction(4, 3) * (1 + 8 * t))) < 1e-15
    assert rel_err(tri.h3, float(Fraction(8, 27) * (1 - 20 * t - 8 * t * t))) < 1e-15


def test_trimidiation_b_route_agreement():
    for kappa in (0.35, 0.6, 1.0 / math.sqrt(2.0)):
        mod = modulus_from_kappa(kappa)
        inv = invariants(mod)
        tri = trimidiation(mod)
        b = -1.0 / 3.0
        assert rel_err(tri.h2, 120.0 * b * b - 9.0 * inv.g2) < 1e-14
        h3_b = 280.0 * b ** 3 - 42.0 * b * inv.g2 - 27.0 * inv.g3
        assert abs(tri.h3 - h3_b) < 1e-14 * max(1.0, abs(tri.h3))


def test_trimidiation_complementary_relations():
    # h2 = 9 g2(lambda), h3 = -27 g3(lambda): the quarter-turn rescaling.
    for kappa in (0.4, 0.7, 1.0 / math.sqrt(2.0)):
        mod = modulus_from_kappa(kappa)
        tri = trimidiation(mod)
        inv_lam = invariants(mod.complement)
        assert rel_err(tri.h2, 9.0 * inv_lam.g2) < 1e-14
        assert rel_err(tri.h3, -27.0 * inv_lam.g3) < 1e-14


def test_trimidiation_self_complementary_value():
    tri = trimidiation(modulus_from_kappa(1.0 / math.sqrt(2.0)))
    assert rel_err(tri.h2, 20.0 / 3.0) < 1e-14
