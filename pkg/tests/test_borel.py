"""Branch-point sums in the Borel plane and their Taylor data."""

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import mp

from borelsum.borel import (
    TERM_BUDGET,
    SheetedPoint,
    SqrtBranched,
    TailLaw,
    periodic_power_sum,
    poincare_appendix_direct,
    poincare_borel,
    poincare_coefficient_trig,
    taylor_coeffs,
    trefoil_bn_exact,
    trefoil_borel,
    trefoil_taylor_exact,
)
from borelsum.errors import ConvergenceError, OnCutError
from borelsum.invariants import poincare_coeffs, trefoil_coeffs

TREFOIL_B = (
    Fraction(23, 24),
    Fraction(1681, 1152),
    Fraction(257543, 165888),
    Fraction(67637281, 47775744),
)


@pytest.mark.parametrize("n,value", list(enumerate(TREFOIL_B)))
def test_trefoil_taylor_first_values(n, value):
    assert trefoil_bn_exact(n) == value


def test_trefoil_taylor_exact_list():
    assert trefoil_taylor_exact(3) == list(TREFOIL_B)


@pytest.mark.parametrize("n", range(0, 9))
def test_taylor_matches_rescaled_asymptotic_coefficients(n):
    """Dual route: b_n from the closed form vs a_{n+1}/(n! 24^{n+1})."""
    a = trefoil_coeffs(n + 2).a
    assert trefoil_bn_exact(n) == a[n + 1] / (factorial(n) * 24 ** (n + 1))


def test_module_level_wrapper_is_exact_for_trefoil():
    vals = taylor_coeffs(trefoil_borel(), 4)
    assert vals == list(TREFOIL_B)
    assert all(isinstance(v, Fraction) for v in vals)


def test_numeric_taylor_agrees_with_exact():
    got = trefoil_borel().taylor_coeffs(4, tol="1e-10")
    for v, b in zip(got, TREFOIL_B):
        assert abs(v - mp.mpf(b.numerator) / b.denominator) < mp.mpf("1e-10")


def test_poincare_taylor_periodic_route():
    """The 60-periodic coefficients let the Taylor sums close exactly."""
    got = poincare_borel().taylor_coeffs(3, tol="1e-20")
    a = poincare_coeffs(4).a
    for n in range(3):
        b = a[n + 1] / (factorial(n + 1) * factorial(n) * 120 ** (n + 1))
        assert abs(got[n] - mp.mpf(b.numerator) / b.denominator) < mp.mpf("1e-20")


def test_trefoil_singularity_layout():
    mdl = trefoil_borel()
    sings = mdl.singularities(12)
    for s in sings:
        assert abs(s.location - mp.pi**2 * s.index**2 / 6) < mp.mpf("1e-20")
        if s.index % 2 == 0 or s.index % 3 == 0:
            assert s.coefficient == 0
    assert sings[0].coefficient > 0 and sings[4].coefficient < 0


def test_eta_and_coeff_reject_index_zero():
    mdl = trefoil_borel()
    with pytest.raises(ValueError):
        mdl.eta(0)
    with pytest.raises(ValueError):
        mdl.coeff(0)


def test_eval_at_origin_is_b0():
    mdl = trefoil_borel()
    b0 = TREFOIL_B[0]
    got = mdl.eval(0, tol="1e-10")
    assert abs(got - mp.mpf(b0.numerator) / b0.denominator) < mp.mpf("1e-10")


def test_eval_second_sheet_flips_sign():
    mdl = trefoil_borel()
    p = mp.mpf("0.37")
    assert mdl.eval(p, sheet=1) == -mdl.eval(p, sheet=0)
    assert mdl.eval(SheetedPoint(p, 1)) == mdl.eval(p, sheet=1)


def test_eval_sheet_conflicts_and_validation():
    mdl = trefoil_borel()
    with pytest.raises(ValueError):
        mdl.eval(SheetedPoint(0.2, 1), sheet=0)
    with pytest.raises(ValueError):
        mdl.eval(0.2, sheet=2)
    with pytest.raises(ValueError):
        SheetedPoint(0.2, 3)


def test_eval_refuses_the_cut():
    mdl = trefoil_borel()
    with pytest.raises(OnCutError):
        mdl.eval(mdl.eta(1))
    with pytest.raises(OnCutError):
        mdl.eval(mdl.eta(1) + 5)


def test_eval_above_cut_is_finite():
    mdl = trefoil_borel()
    v = mdl.eval(mdl.eta(1) + mp.j * mp.mpf("0.3"), tol="1e-8")
    assert mp.isfinite(v)


def test_power_law_tail_caps_accuracy():
    with pytest.raises(ConvergenceError):
        trefoil_borel().eval(mp.mpf("0.1"), tol="1e-30")


def test_budget_message_names_the_model():
    with pytest.raises(ConvergenceError, match="trefoil"):
        trefoil_borel().eval(mp.mpf("0.1"), tol="1e-30")


@given(n=st.integers(min_value=1, max_value=400))
def test_tail_law_envelopes_hold(n):
    for mdl in (trefoil_borel(), poincare_borel()):
        law = mdl.tail
        assert abs(mdl.coeff(n)) <= law.coeff_bound * n**law.power + mp.mpf("1e-20")
        assert law.eta_lower * n**2 <= mdl.eta(n) <= law.eta_upper * n**2


@pytest.mark.parametrize("n", range(1, 61))
def test_poincare_coefficient_trig_route(n):
    """Character-table coefficients equal the product-of-cosines form."""
    assert abs(poincare_borel().coeff(n) - poincare_coefficient_trig(n)) < mp.mpf(
        "1e-22"
    )


def test_poincare_coefficients_have_period_sixty():
    mdl = poincare_borel()
    assert mdl.period == 60
    for n in range(1, 61):
        assert mdl.coeff(n) == mdl.coeff(n + 60)


def test_periodic_power_sum_matches_partial_sums():
    mdl = poincare_borel()
    s = mp.mpf(2)
    closed = periodic_power_sum(mdl, s)
    n_cut = 4000
    partial = mp.fsum(
        mdl.coeff(n) * mdl.eta(n) ** (-s) for n in range(1, n_cut + 1)
    )
    # tail of sum c_n (nu n^2)^{-2} is below bound * integral n^{-4}
    tail = mp.mpf(mdl.tail.coeff_bound) * mp.mpf(mdl.tail.eta_lower) ** (-s) * (
        n_cut ** (-3) / 3
    )
    assert abs(closed - partial) <= tail


def test_periodic_power_sum_requires_period():
    with pytest.raises(ValueError):
        periodic_power_sum(trefoil_borel(), 2)


def test_appendix_route_conversion_factor():
    """Matched truncations make the slowly-converging ratio exact."""
    p = mp.mpf("0.1")
    mdl = poincare_borel()
    for terms in (500, 4000):
        partial = mp.fsum(
            mdl.coeff(n) * mp.power(mdl.eta(n) - p, mp.mpf("-1.5"))
            for n in range(1, terms + 1)
        )
        ratio = partial / poincare_appendix_direct(p, terms=terms)
        assert abs(ratio + 900) < mp.mpf("1e-9") * 900


def test_term_budget_is_generous():
    assert TERM_BUDGET >= 10_000


def test_tail_law_is_frozen():
    law = TailLaw(1.0, 0, 0.5, 0.6)
    with pytest.raises(AttributeError):
        law.coeff_bound = 2.0
