"""Acceptance gate: one test and one printed pass/fail line per criterion.

Each test exercises the full advertised tolerance of its criterion; the
printed line carries the measured worst case so a red run says how far off
it landed.
"""

import time
from fractions import Fraction
from math import factorial

from mpmath import mp

from borelsum.borel import poincare_borel, trefoil_bn_exact
from borelsum.characters import chi12, l_series_partial, l_value_exact
from borelsum.invariants import phi, poincare_coeffs, trefoil_coeffs
from borelsum.modular import eta_tilde, eta_tilde_radial, zagier_g, zagier_g_taylor
from borelsum.summation import cross_routes, dirichlet_delta, radial_limit, sum_erfi
from borelsum.transseries import closed_bn, exact_bn, extract_ckl, normalized_residual

SCALED_F = (
    Fraction(1),
    Fraction(23, 24),
    Fraction(1681, 1152),
    Fraction(257543, 82944),
    Fraction(67637281, 7962624),
)

TAYLOR_B = (
    Fraction(23, 24),
    Fraction(1681, 1152),
    Fraction(257543, 165888),
    Fraction(67637281, 47775744),
)


def _line(num: int, ok: bool, detail: str) -> None:
    print(f"criterion {num:02d}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num:02d} failed: {detail}"


def _to_mpf(q: Fraction):
    return mp.mpf(q.numerator) / q.denominator


def test_criterion_01_exact_coefficient_suite():
    start = time.perf_counter()
    table = trefoil_coeffs(5)
    series_ok = tuple(table.scaled(n) for n in range(5)) == SCALED_F
    taylor_ok = tuple(trefoil_bn_exact(n) for n in range(4)) == TAYLOR_B
    elapsed = time.perf_counter() - start
    _line(
        1,
        series_ok and taylor_ok and elapsed < 1.0,
        f"exact rational equality, zero tolerance, {elapsed:.3f}s",
    )


def test_criterion_02_cross_route_coefficients():
    start = time.perf_counter()
    gen = trefoil_coeffs(41, route="generating-function").a
    bern = trefoil_coeffs(41, route="bernoulli-closed-form").a
    a_ok = gen == bern
    b_ok = all(exact_bn(n) == closed_bn(n) for n in range(31))
    elapsed = time.perf_counter() - start
    _line(
        2,
        a_ok and b_ok and elapsed < 10.0,
        f"a_n exact to n=40 and b_n exact to n=30, {elapsed:.1f}s",
    )


def test_criterion_03_l_value_suite():
    start = time.perf_counter()
    chi = chi12()
    worst = mp.mpf(0)
    # the tightest certified tail (s = 52, 400 terms) is near 1e-133, so the
    # partials are summed at 150 digits to keep roundoff out of the comparison
    with mp.workdps(150):
        for n in range(26):
            r, s = l_value_exact(n)
            closed = _to_mpf(r) * mp.pi**s / mp.sqrt(3)
            for terms in (50, 400):
                value, tail = l_series_partial(chi, s, terms)
                gap = abs(closed - value)
                assert gap <= tail
                worst = max(worst, gap / tail)
    r0, s0 = l_value_exact(0)
    l2 = _to_mpf(r0) * mp.pi**s0 / mp.sqrt(3)
    l2_gap = abs(l2 - mp.pi**2 / (6 * mp.sqrt(3)))
    elapsed = time.perf_counter() - start
    _line(
        3,
        worst <= 1 and l2_gap < mp.mpf("1e-12") and elapsed < 5.0,
        f"partials inside certified tails (worst fill {mp.nstr(worst, 3)}), "
        f"L(2) gap {mp.nstr(l2_gap, 3)}, {elapsed:.1f}s",
    )


def test_criterion_04_summation_cross_routes():
    start = time.perf_counter()
    grid = [
        mp.mpf("0.6"), mp.mpf(1), mp.mpf(2), mp.mpf("3.5"), mp.mpf(5),
        mp.mpf(8), mp.mpf(12), mp.mpf(20), mp.mpf(35), mp.mpf(50),
        mp.mpc(1, "0.8"), mp.mpc(1, "-0.8"), mp.mpc(2, "1.5"),
        mp.mpc(2, "-1.5"), mp.mpc(5, 3), mp.mpc(5, -3), mp.mpc("0.5", 2),
        mp.mpc("0.5", -2), mp.mpc(3, 4), mp.mpc(8, 2),
    ]
    assert len(grid) == 20
    worst = mp.mpf(0)
    for x in grid:
        routes = cross_routes("trefoil", x, tol="1e-9")
        values = list(routes.values())
        for i, a in enumerate(values):
            for b in values[i + 1:]:
                worst = max(worst, abs(a - b))
    elapsed = time.perf_counter() - start
    _line(
        4,
        worst < mp.mpf("1e-8") and elapsed < 120.0,
        f"three routes on 20 points, worst gap {mp.nstr(worst, 3)}, {elapsed:.1f}s",
    )


def test_criterion_05_reality_and_conjugation():
    start = time.perf_counter()
    reals = [mp.mpf("0.5") + mp.mpf("49.5") * j / 9 for j in range(10)]
    worst_im = max(abs(mp.im(sum_erfi("trefoil", x, tol="1e-12").value))
                   for x in reals)
    points = [mp.mpc(1, "0.8"), mp.mpc(2, "1.5"), mp.mpc(5, 3),
              mp.mpc("0.7", "-1.2"), mp.mpc(3, "2.4")]
    worst_conj = mp.mpf(0)
    for x in points:
        left = mp.conj(sum_erfi("trefoil", x, kind="mul", tol="1e-12").value)
        right = sum_erfi("trefoil", mp.conj(x), kind="mur", tol="1e-12").value
        worst_conj = max(worst_conj, abs(left - right))
    elapsed = time.perf_counter() - start
    _line(
        5,
        worst_im <= mp.mpf("1e-10") and worst_conj <= mp.mpf("1e-8")
        and elapsed < 60.0,
        f"worst Im {mp.nstr(worst_im, 3)} on 10 real points, worst lateral "
        f"conjugation gap {mp.nstr(worst_conj, 3)} on 5 points, {elapsed:.1f}s",
    )


def test_criterion_06_asymptoticity():
    start = time.perf_counter()
    table = trefoil_coeffs(7)
    ok = True
    worst_ratio = mp.mpf(0)
    for x in (mp.mpf(10), mp.mpf(20), mp.mpf(40)):
        s_med = sum_erfi("trefoil", x, tol="1e-16").value
        for n_top in range(6):
            partial = mp.fsum(
                _to_mpf(table.scaled(n)) / x**n for n in range(n_top)
            )
            omitted = abs(_to_mpf(table.scaled(n_top))) / x**n_top
            gap = abs(s_med - partial)
            ok = ok and gap <= 2 * omitted
            worst_ratio = max(worst_ratio, gap / omitted)
    elapsed = time.perf_counter() - start
    _line(
        6,
        ok and elapsed < 30.0,
        f"remainders within twice the first omitted term (worst ratio "
        f"{mp.nstr(worst_ratio, 3)}), {elapsed:.1f}s",
    )


def test_criterion_07_radial_limits():
    start = time.perf_counter()
    worst = mp.mpf(0)
    for alpha in (Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(2)):
        got = radial_limit(alpha).value
        worst = max(worst, abs(got - phi(alpha)))
    elapsed = time.perf_counter() - start
    _line(
        7,
        worst < mp.mpf("1e-4") and elapsed < 300.0,
        f"extrapolated boundary values, worst gap {mp.nstr(worst, 3)}, "
        f"{elapsed:.1f}s",
    )


def test_criterion_08_lateral_difference_identities():
    start = time.perf_counter()
    x = mp.mpf(1)
    delta = dirichlet_delta("trefoil", x, tol="1e-20")
    theta_form = (mp.j * mp.sqrt(2) * (mp.pi * x) ** mp.mpf("1.5")
                  * eta_tilde(2 * mp.pi * mp.j * x))
    delta_gap = abs(delta - theta_form)

    strange = mp.mpf(0)
    for alpha in (Fraction(1), Fraction(1, 2)):
        limit, _ = eta_tilde_radial(alpha)
        strange = max(strange, abs(limit + 2 * phi(alpha)))

    modular = mp.mpf(0)
    for alpha in (Fraction(1), Fraction(2), Fraction(1, 2)):
        a_mp = _to_mpf(alpha)
        left = zagier_g(alpha, tol="1e-16")
        right = mp.power(mp.j * a_mp, mp.mpf("-1.5")) * zagier_g(
            Fraction(-1) / alpha, tol="1e-16"
        )
        modular = max(modular, abs(left - right))

    coeffs = zagier_g_taylor(4)
    a = trefoil_coeffs(4).a
    deriv = mp.mpf(0)
    for n in range(4):
        target = (-mp.pi * mp.j / 12) ** n * _to_mpf(a[n])
        deriv = max(deriv, abs(coeffs[n] - target) / abs(target))

    elapsed = time.perf_counter() - start
    _line(
        8,
        delta_gap < mp.mpf("1e-12") and strange < mp.mpf("1e-4")
        and modular < mp.mpf("1e-6") and deriv < mp.mpf("1e-3")
        and elapsed < 300.0,
        f"lateral difference vs weighted theta {mp.nstr(delta_gap, 3)}, "
        f"radial boundary {mp.nstr(strange, 3)}, inversion "
        f"{mp.nstr(modular, 3)}, derivative rel {mp.nstr(deriv, 3)}, "
        f"{elapsed:.1f}s",
    )


def test_criterion_09_poincare_suite():
    start = time.perf_counter()
    table = poincare_coeffs(8)
    first_ok = table.a[0] == 1 and table.a[1] == 119
    mdl = poincare_borel()
    got = mdl.taylor_coeffs(7, tol="1e-14")
    taylor = mp.mpf(0)
    for n in range(7):
        b = table.a[n + 1] / (factorial(n + 1) * factorial(n) * 120 ** (n + 1))
        taylor = max(taylor, abs(got[n] - _to_mpf(b)))
    oracle_a1 = 120 * got[0]
    grid = [mp.mpf(3), mp.mpc(8, 2), mp.mpf("0.6"), mp.mpc(1, "0.8"),
            mp.mpc("0.4", "1.1")]
    cross = mp.mpf(0)
    for x in grid:
        routes = cross_routes("poincare", x, tol="1e-9")
        cross = max(cross, abs(routes["erfi-series"]
                               - routes["finite-part-quadrature"]))
    elapsed = time.perf_counter() - start
    _line(
        9,
        first_ok and abs(oracle_a1 - 119) < mp.mpf("1e-12")
        and taylor < mp.mpf("1e-8") and cross < mp.mpf("1e-8")
        and elapsed < 120.0,
        f"a_0, a_1 against the resummed oracle (gap "
        f"{mp.nstr(abs(oracle_a1 - 119), 3)}), Taylor worst {mp.nstr(taylor, 3)} "
        f"to order 6, cross-route worst {mp.nstr(cross, 3)} on 5 points, "
        f"{elapsed:.1f}s",
    )


def test_criterion_10_transseries_window():
    start = time.perf_counter()
    table = extract_ckl(7, 6, route="fit")
    active = sorted({k for (k, _), v in table.c.items() if v})
    window_ok = active == [1, 5, 7]
    n = 50
    exact = _to_mpf(exact_bn(n))
    rel = abs(table.reconstruct(n) - exact) / abs(exact)

    residuals = [normalized_residual(m) for m in range(30, 38)]
    ratios = [b / a for a, b in zip(residuals, residuals[1:])]
    mean_ratio = sum(ratios) / len(ratios)
    decay_ok = abs(mean_ratio - mp.mpf(1) / 25) < mp.mpf("0.2") / 25

    elapsed = time.perf_counter() - start
    _line(
        10,
        window_ok and rel < mp.mpf("1e-6") and decay_ok and elapsed < 60.0,
        f"reconstruction at n=50 rel {mp.nstr(rel, 3)}, residual decay "
        f"{mp.nstr(mean_ratio, 4)} vs 1/25, {elapsed:.1f}s",
    )
