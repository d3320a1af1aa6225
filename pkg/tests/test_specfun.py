"""Error-function kin, ray quadrature, tail bounds, extrapolation."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import mp

from borelsum.specfun import (
    RayContour,
    dawson,
    dawson_deficit,
    e_mod,
    e_mod_deficit,
    erfi,
    fit_poly_coeffs,
    gaussian_tail,
    integrate_segment,
    ray_integrate,
    richardson_limit,
)

moderate_reals = st.floats(
    min_value=-6, max_value=6, allow_nan=False, allow_infinity=False
)


@pytest.mark.parametrize("x", ["0.3", "1", "2.5", "-1.7"])
def test_dawson_against_direct_quadrature(x):
    z = mp.mpf(x)
    with mp.workdps(40):
        oracle = mp.exp(-z * z) * mp.quad(lambda t: mp.exp(t * t), [0, z])
    assert abs(dawson(z) - oracle) < mp.mpf("1e-22")


def test_dawson_complex_against_quadrature():
    z = mp.mpc(1, 2)
    with mp.workdps(40):
        oracle = mp.exp(-z * z) * mp.quad(lambda t: mp.exp(t * t), [0, z])
    assert abs(dawson(z) - oracle) < mp.mpf("1e-22")


@pytest.mark.parametrize("x", ["0.5", "1.3", "3"])
def test_erfi_matches_library(x):
    z = mp.mpf(x)
    assert abs(erfi(z) - mp.erfi(z)) < mp.mpf("1e-22") * (1 + abs(mp.erfi(z)))


def test_erfi_complex_matches_library():
    z = mp.mpc("0.7", "1.1")
    assert abs(erfi(z) - mp.erfi(z)) < mp.mpf("1e-22") * (1 + abs(mp.erfi(z)))


@pytest.mark.parametrize("x", ["2", "9", "9.5", "30"])
def test_dawson_deficit_definition_across_branches(x):
    """2 z D(z) - 1 formed at raised precision equals the branch value."""
    z = mp.mpf(x)
    got = dawson_deficit(z)
    with mp.workdps(80):
        direct = 2 * mp.mpf(x) * dawson(mp.mpf(x)) - 1
    assert abs(got - direct) < mp.mpf("1e-22")


def test_dawson_deficit_decay():
    assert abs(dawson_deficit(40)) < mp.mpf("4e-4")
    assert abs(dawson_deficit(40) - mp.mpf(1) / 3200) < mp.mpf("1e-6")


@pytest.mark.parametrize("x", ["1.5", "8", "25"])
def test_e_mod_deficit_definition(x):
    z = mp.mpf(x)
    got = e_mod_deficit(z)
    with mp.workdps(90):
        zb = mp.mpf(x)
        direct = (zb * zb * (2 * zb * dawson(zb) - 1) - mp.mpf(1) / 2) / mp.sqrt(mp.pi)
    assert abs(got - direct) < mp.mpf("1e-21")


def test_e_mod_limit_and_offset():
    cap = 1 / (2 * mp.sqrt(mp.pi))
    assert abs(e_mod(25) - cap) < mp.mpf("1e-3")
    assert abs(e_mod(mp.mpf("1.2")) - e_mod_deficit(mp.mpf("1.2")) - cap) < mp.mpf("1e-24")


def test_e_mod_deficit_is_even():
    z = mp.mpc("1.1", "0.4")
    assert abs(e_mod_deficit(z) - e_mod_deficit(-z)) < mp.mpf("1e-22")


def test_integrate_segment_polynomial():
    val = integrate_segment(lambda z: z**3, 0, 1)
    assert abs(val - mp.mpf(1) / 4) < mp.mpf("1e-24")


def test_ray_integrate_exponential():
    """Closed form for int e^{-z} dz along a tilted segment."""
    contour = RayContour(mp.mpf("0.2"), "0.01", "30")
    a, b = contour.point(contour.r_min), contour.point(contour.r_max)
    val, err = ray_integrate(lambda z: mp.exp(-z), contour, "1e-20")
    assert err < mp.mpf("1e-19")
    assert abs(val - (mp.exp(-a) - mp.exp(-b))) < mp.mpf("1e-18")


def test_ray_integrate_from_zero_terminates():
    contour = RayContour(0, 0, 2)
    val, _ = ray_integrate(lambda z: z, contour, "1e-16")
    assert abs(val - 2) < mp.mpf("1e-14")


def test_ray_contour_validation():
    with pytest.raises(ValueError):
        RayContour(0, 2, 1)
    with pytest.raises(ValueError):
        RayContour(0, -1, 1)


def test_ray_contour_distance():
    ray = RayContour(mp.pi / 2, "0.1", "5")
    assert abs(ray.distance_to(mp.mpc(0, 3))) < mp.mpf("1e-24")
    assert abs(ray.distance_to(mp.mpc(2, 3)) - 2) < mp.mpf("1e-24")
    assert abs(ray.distance_to(mp.mpc(0, -4)) - 4) < mp.mpf("1e-24")


@given(
    n_cut=st.integers(min_value=3, max_value=60),
    beta_10x=st.integers(min_value=2, max_value=40),
    s=st.integers(min_value=0, max_value=2),
)
def test_gaussian_tail_bounds_the_actual_tail(n_cut, beta_10x, s):
    beta = mp.mpf(beta_10x) / 10
    actual = mp.fsum(
        mp.mpf(n) ** s * mp.exp(-beta * n * n) for n in range(n_cut + 1, n_cut + 400)
    )
    assert actual <= gaussian_tail(n_cut, beta, s)


def test_gaussian_tail_decreases_in_cutoff():
    vals = [gaussian_tail(n, mp.mpf("0.5"), 1) for n in (5, 10, 20)]
    assert vals[0] > vals[1] > vals[2] > 0


def test_richardson_exact_on_polynomials():
    hs = [mp.mpf(1) / 2**j for j in range(5)]
    vals = [7 + 3 * h + 2 * h**2 - h**3 for h in hs]
    limit, err = richardson_limit(hs, vals)
    assert abs(limit - 7) < mp.mpf("1e-20")
    assert err < mp.mpf("1e-18")


def test_richardson_input_validation():
    with pytest.raises(ValueError):
        richardson_limit([1], [1])
    with pytest.raises(ValueError):
        richardson_limit([1, 2], [0, 0])
    with pytest.raises(ValueError):
        richardson_limit([1, 0], [0, 0])


def test_fit_poly_coeffs_recovers_polynomial():
    coeffs = [Fraction(2), Fraction(-1, 3), Fraction(5, 7)]
    xs = [mp.mpf(1) / 3, mp.mpf(1) / 5, mp.mpf(1) / 7]
    ys = [
        mp.fsum(mp.mpf(c.numerator) / c.denominator * x**j for j, c in enumerate(coeffs))
        for x in xs
    ]
    got = fit_poly_coeffs(xs, ys)
    for g, c in zip(got, coeffs):
        assert abs(g - mp.mpf(c.numerator) / c.denominator) < mp.mpf("1e-20")


def test_fit_poly_coeffs_validation():
    with pytest.raises(ValueError):
        fit_poly_coeffs([], [])
    with pytest.raises(ValueError):
        fit_poly_coeffs([1, 2], [1])
