"""Generalized summation of the factorially divergent series, three ways.

closed route: the median Laplace transform of each branch term
(eta - p)^{-k/2} reduces to Dawson-integral expressions,

    k = 3:  eta^{-1/2} * 2 (2 sqrt(y) D(sqrt y) - 1),        y = eta x,
    k = 5:  eta^{-3/2} * (4/3) (y (2 sqrt(y) D(sqrt y) - 1) - 1/2),

summed over the singularities together with the constant term.  The result
is real on x > 0 (the median value) and analytic on Re x > 0, so the same
formula is the analytic continuation of the median everywhere it converges.
The lateral values differ from it by the explicit exponentially small series
dirichlet_delta, with

    mur = median + delta,   mul = median - delta.

For the 5/2-power model the slowly convergent algebraic part is accelerated:
the two leading orders 3/(4 z^2) + 15/(8 z^4) of each term are subtracted
and their full sums restored exactly through closed-form Dirichlet L-values,
which cuts the term count near the boundary Re x -> 0 by orders of magnitude.

integral route (5/2-power model only): the weight-3/2 theta integral

    sqrt(3) x^{3/2} int_ray eta(2 pi i z) (x - z)^{-3/2} dz

along a ray at angle arg(x) -+ eps_ray (mul below, mur above the point x).
It converges for boundary x on the imaginary axis, where the closed route
diverges, and includes the constant term automatically.

radial route: median values on a ladder x_j = eps_j + i y extrapolated to
the boundary point i y; at y = 1/(2 pi alpha) the limit is the unit-circle
boundary value at angle alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import ceil, sqrt

from mpmath import mp

from .borel import (
    TERM_BUDGET,
    SqrtBranched,
    periodic_power_sum,
    poincare_borel,
    trefoil_borel,
)
from .characters import l_value_exact
from .errors import (
    ConvergenceError,
    DomainError,
    RayGeometryError,
    ToleranceError,
)
from .modular import eta
from .specfun import (
    RayContour,
    _adaptive_segment,
    _emodd_tail2,
    dawson_deficit,
    e_mod_deficit,
    gaussian_tail,
    ray_integrate,
    richardson_limit,
)

__all__ = [
    "AverageKind",
    "SummationResult",
    "averaged_value",
    "sum_erfi",
    "sum_eta_integral",
    "dirichlet_delta",
    "cross_routes",
    "sum_median",
    "radial_limit",
    "median_laplace_unit",
    "median_laplace_unit_closed",
]


class AverageKind(Enum):
    MUL = "mul"
    MUR = "mur"
    MEDIAN = "median"


_DELTA_FACTOR = {AverageKind.MUL: -1, AverageKind.MEDIAN: 0, AverageKind.MUR: 1}


@dataclass(frozen=True)
class SummationResult:
    """Value of one summation route at one point, with its context.

    err_estimate is an a-posteriori bound: the requested tolerance, or the
    measured cross-route discrepancy when one was computed."""

    model: str
    x: object
    kind: AverageKind
    route: str
    value: object
    err_estimate: object


def _kind(kind) -> AverageKind:
    if isinstance(kind, AverageKind):
        return kind
    return AverageKind(str(kind))


def _resolve_model(model) -> SqrtBranched:
    if isinstance(model, SqrtBranched):
        return model
    if model == "trefoil":
        return trefoil_borel()
    if model == "poincare":
        return poincare_borel()
    raise ValueError("model must be 'trefoil', 'poincare', or a SqrtBranched")


def _require_right_half(x):
    xz = mp.mpc(x)
    if mp.re(xz) <= 0:
        raise DomainError(
            "closed-route sums converge only for Re x > 0; "
            "use the integral or radial route at the boundary"
        )
    return xz


def _chi12_l_value(j: int):
    # L(2j+2) for the period-12 sign table, exact up to the working precision
    r, s = l_value_exact(j)
    return mp.mpf(r.numerator) / r.denominator * mp.pi**s / mp.sqrt(3)


def median_laplace_unit_closed(k: int, y):
    """Median Laplace transform of (1 - p)^{-k/2} against e^{-y p}, k in {3, 5}."""
    z = mp.sqrt(mp.mpc(y))
    if k == 3:
        return 2 * dawson_deficit(z)
    if k == 5:
        return mp.mpf(4) / 3 * mp.sqrt(mp.pi) * e_mod_deficit(z)
    raise ValueError("k must be 3 or 5")


def median_laplace_unit(k: int, y, tol="1e-10", rungs: int = 9):
    """Same transform by finite-part quadrature: integrate up to 1 - s,
    subtract the divergent endpoint terms, extrapolate in sqrt(s)."""
    if k not in (3, 5):
        raise ValueError("k must be 3 or 5")
    yz = mp.mpc(y)
    tol = mp.mpf(tol)
    k_half = mp.mpf(k) / 2
    hs = []
    vals = []
    s = mp.mpf(1) / 16
    for _ in range(rungs):
        t = 1 - s
        integral = _adaptive_segment(
            lambda p: mp.exp(-yz * p) * mp.power(1 - p, -k_half), 0, t, tol / 50, 40
        )
        endpoint = mp.exp(-yz * t)
        if k == 3:
            f = integral - 2 * endpoint / mp.sqrt(s)
        else:
            f = integral - endpoint * (
                mp.mpf(2) / 3 * s ** mp.mpf("-1.5") + mp.mpf(4) / 3 * yz / mp.sqrt(s)
            )
        hs.append(mp.sqrt(s))
        vals.append(f)
        s /= 4
    limit, _ = richardson_limit(hs, vals)
    return limit


def dirichlet_delta(model, x, tol="1e-16"):
    """Exponentially small lateral difference: median - mul = mur - median.

    Equals i^k Gamma(1 - k/2) x^{k/2-1} sum_n c_n e^{-eta_n x}; the sum is a
    weighted theta series, so the cutoff is Gaussian in n."""
    mdl = _resolve_model(model)
    xz = _require_right_half(x)
    tol = mp.mpf(tol)
    k = mdl.k
    pref = mp.j**k * mp.gamma(1 - mp.mpf(k) / 2) * mp.power(xz, mp.mpf(k) / 2 - 1)
    law = mdl.tail
    beta = mp.mpf(law.eta_lower) * mp.re(xz)
    target = tol / (2 * abs(pref) * law.coeff_bound)
    n_terms = 8
    while gaussian_tail(n_terms, beta, law.power) > target:
        n_terms = int(n_terms * 1.4) + 4
        if n_terms > TERM_BUDGET:
            raise ConvergenceError("lateral difference: Re x too small for the budget")
    acc = mp.mpc(0)
    for n in range(1, n_terms + 1):
        c = mdl.coeff(n)
        if c == 0:
            continue
        acc += c * mp.exp(-mdl.eta(n) * xz)
    return pref * acc


def _closed_base_trefoil(mdl: SqrtBranched, x, tol):
    law = mdl.tail
    nu_l = mp.mpf(law.eta_lower)
    nu_u = mp.mpf(law.eta_upper)
    a_bound = mp.mpf(law.coeff_bound)
    ax = abs(x)
    beta = nu_l * mp.re(x)
    # tail pieces: algebraic remainder past the two subtracted orders, and
    # the two Gaussian envelopes from the oscillatory completion
    c_alg = mp.mpf(4) / 3 * a_bound * nu_l ** mp.mpf("-4.5") / ax**3
    c_g0 = mp.mpf(8) / 3 * mp.sqrt(mp.pi) * a_bound * nu_l ** mp.mpf("-1.5")
    c_g1 = c_g0 * (nu_u / nu_l) ** mp.mpf("1.5") * ax ** mp.mpf("1.5")
    n_terms = max(8, ceil(3 / sqrt(float(nu_l * ax))))
    while (
        c_alg * mp.mpf(n_terms) ** -7
        + c_g0 * gaussian_tail(n_terms, beta, 0)
        + c_g1 * gaussian_tail(n_terms, beta, 1)
    ) > tol:
        n_terms = int(n_terms * 1.4) + 4
        if n_terms > TERM_BUDGET:
            raise ConvergenceError("trefoil closed route: tolerance out of reach")
    kappa = 3 * mp.pi / (2 * mp.sqrt(2))
    nu = mp.pi**2 / 6
    exact = (
        kappa * nu ** mp.mpf("-2.5") * _chi12_l_value(1) / x
        + mp.mpf("2.5") * kappa * nu ** mp.mpf("-3.5") * _chi12_l_value(2) / x**2
    )
    acc = mp.mpc(0)
    four_thirds = mp.mpf(4) / 3
    for n in range(1, n_terms + 1):
        c = mdl.coeff(n)
        if c == 0:
            continue
        eta_n = mdl.eta(n)
        z = mp.sqrt(eta_n * x)
        acc += c * four_thirds * eta_n ** mp.mpf("-1.5") * _emodd_tail2(z)
    return 1 + exact + acc


def _closed_base_poincare(mdl: SqrtBranched, x, tol):
    # two algebraic orders of 2 z D(z) - 1 are peeled off each transform and
    # restored through Hurwitz-zeta sums, leaving n^{-7} term decay
    law = mdl.tail
    nu_l = mp.mpf(law.eta_lower)
    nu_u = mp.mpf(law.eta_upper)
    a_bound = mp.mpf(law.coeff_bound)
    ax = abs(x)
    beta = nu_l * mp.re(x)
    c_alg = a_bound * mp.mpf("3.75") * nu_l ** mp.mpf("-3.5") / ax**3
    c_g = 10 * a_bound * mp.sqrt(nu_u / nu_l) * mp.sqrt(ax)
    n_terms = max(8, ceil(2 / sqrt(float(nu_l * ax))))
    while (c_alg * mp.mpf(n_terms) ** -6 + c_g * gaussian_tail(n_terms, beta, 0)) > tol:
        n_terms = int(n_terms * 1.4) + 4
        if n_terms > TERM_BUDGET:
            raise ConvergenceError("poincare closed route: tolerance out of reach")
    readd = (periodic_power_sum(mdl, mp.mpf(3) / 2) / x
             + mp.mpf(3) / 2 * periodic_power_sum(mdl, mp.mpf(5) / 2) / x**2)
    boost = 8 + max(0, int(-4 * mp.log10(nu_l * ax)))
    with mp.extradps(boost):
        acc = mp.mpc(0)
        for n in range(1, n_terms + 1):
            c = mdl.coeff(n)
            if c == 0:
                continue
            eta_n = mdl.eta(n)
            z2 = eta_n * x
            peeled = 1 / (2 * z2) + 3 / (4 * z2**2)
            acc += c * 2 * (dawson_deficit(mp.sqrt(z2)) - peeled) / mp.sqrt(eta_n)
    return 1 + readd + acc


def _closed_value(mdl: SqrtBranched, xz, kind: AverageKind, tol):
    factor = _DELTA_FACTOR[kind]
    part = tol / 2 if factor == 0 else tol / 3
    if mdl.k == 5:
        base = _closed_base_trefoil(mdl, xz, part)
    elif mdl.k == 3:
        base = _closed_base_poincare(mdl, xz, part)
    else:
        raise ValueError("closed route knows k = 3 and k = 5 only")
    if factor:
        base += factor * dirichlet_delta(mdl, xz, part)
    return base


def sum_erfi(model, x, kind="median", tol="1e-12") -> SummationResult:
    """Closed-route value of the summed series at x, Re x > 0.

    Per singularity, the constant term bookkeeping makes the value tend
    to 1 as Re x grows; the lateral kinds add or subtract the
    exponentially small series on top of the median."""
    mdl = _resolve_model(model)
    xz = _require_right_half(x)
    tol = mp.mpf(tol)
    knd = _kind(kind)
    value = _closed_value(mdl, xz, knd, tol)
    return SummationResult(mdl.label, xz, knd, "erfi-series", value, tol)


def _eta_integral_value(xz, side, tol, eps_ray):
    if side == "median":
        lo = _eta_integral_value(xz, "mul", tol, eps_ray)
        hi = _eta_integral_value(xz, "mur", tol, eps_ray)
        return (lo + hi) / 2
    if side not in ("mul", "mur"):
        raise ValueError("side must be 'mul', 'mur', or 'median'")
    orient = -1 if side == "mul" else 1
    eps = mp.pi / 16 if eps_ray is None else mp.mpf(eps_ray)
    arg_x = mp.arg(xz)
    dist_floor = mp.sqrt(tol)
    theta = None
    while eps < mp.pi / 2:
        cand = arg_x + orient * eps
        if mp.cos(cand) > 0 and abs(xz) * mp.sin(eps) >= dist_floor:
            theta = cand
            break
        eps *= 2
    if theta is None:
        raise RayGeometryError(
            f"no admissible ray for side '{side}' at arg x = {mp.nstr(arg_x)}"
        )
    cos_t = mp.cos(theta)
    dist = abs(xz) * mp.sin(eps)
    digits = mp.dps + 8 + max(0, int(-1.5 * mp.log10(dist))) + int(1.5 * mp.log10(1 + abs(xz)))
    ln10 = mp.log(10)
    r_min = cos_t / (24 * digits * ln10)
    r_max = 6 * digits * ln10 / (mp.pi**2 * cos_t)
    contour = RayContour(theta, r_min, r_max)
    phase = mp.expj(-mp.mpf(3) / 2 * theta)
    x_rot = xz * mp.expj(-theta)

    def integrand(z):
        # (x - z)^{-3/2} tracked as e^{-3 i theta/2} (x e^{-i theta} - r)^{-3/2};
        # the rotated difference keeps a constant imaginary part along the ray,
        # so the principal power never crosses its cut
        r = abs(z)
        return eta(2 * mp.pi * mp.j * z) * phase * mp.power(x_rot - r, mp.mpf("-1.5"))

    scale = mp.sqrt(3) * abs(xz) ** mp.mpf("1.5")
    integral, _ = ray_integrate(integrand, contour, tol / scale)
    return mp.sqrt(3) * mp.power(xz, mp.mpf("1.5")) * integral


def sum_eta_integral(x, side="mul", tol="1e-16", eps_ray=None) -> SummationResult:
    """Integral-route value for the 5/2-power model, constant term included.

    Quadrature of the weight-1/2 theta series against (x - z)^{-3/2} along
    a ray at angle arg(x) -+ eps_ray (mul below, mur above); 'median'
    averages the two sides.  The starting eps_ray is doubled while the
    ray-to-x distance |x| sin(eps) stays below sqrt(tol)."""
    xz = mp.mpc(x)
    if xz == 0:
        raise DomainError("x must be nonzero")
    tol = mp.mpf(tol)
    value = _eta_integral_value(xz, side, tol, eps_ray)
    kind = AverageKind.MEDIAN if side == "median" else AverageKind(side)
    return SummationResult("trefoil", xz, kind, "eta-integral", value, tol)


def cross_routes(model, x, tol="1e-10"):
    """All independent median values at x, as a dict keyed by route.

    Trefoil: the closed route, the average of the two eta-integral
    laterals, and eta-integral mul plus the explicit lateral difference.
    Poincare: the closed route and a variant with the first transforms
    swapped for finite-part quadrature values."""
    mdl = _resolve_model(model)
    xz = _require_right_half(x)
    tol = mp.mpf(tol)
    closed = _closed_value(mdl, xz, AverageKind.MEDIAN, tol)
    routes = {"erfi-series": closed}
    if mdl.k == 5:
        part = tol / 4
        mul = _eta_integral_value(xz, "mul", part, None)
        mur = _eta_integral_value(xz, "mur", part, None)
        routes["eta-integral-average"] = (mul + mur) / 2
        routes["eta-integral-mul-plus-delta"] = mul + dirichlet_delta(mdl, xz, part)
    else:
        # swap the first three nonzero closed-form transforms for quadrature
        other = closed
        swapped = 0
        n = 0
        while swapped < 3:
            n += 1
            c = mdl.coeff(n)
            if c == 0:
                continue
            eta_n = mdl.eta(n)
            closed_term = median_laplace_unit_closed(mdl.k, eta_n * xz)
            quad = median_laplace_unit(mdl.k, eta_n * xz, tol=tol / 8)
            other += c * eta_n ** (-mp.mpf(mdl.k) / 2 + 1) * (quad - closed_term)
            swapped += 1
        routes["finite-part-quadrature"] = other
    return routes


def sum_median(model, x, tol="1e-12", cross_check: bool = False,
               cross_tol=None) -> SummationResult:
    """Median value at x by the closed route.

    With cross_check the independent routes are also evaluated and the
    largest discrepancy is folded into err_estimate; if cross_tol is
    given, exceeding it raises ToleranceError."""
    mdl = _resolve_model(model)
    xz = _require_right_half(x)
    tol = mp.mpf(tol)
    if not cross_check:
        value = _closed_value(mdl, xz, AverageKind.MEDIAN, tol)
        return SummationResult(mdl.label, xz, AverageKind.MEDIAN,
                               "erfi-series", value, tol)
    check_tol = mp.mpf(cross_tol) if cross_tol is not None else max(
        tol * 100, mp.mpf("1e-10"))
    routes = cross_routes(mdl, xz, tol=check_tol / 4)
    value = routes["erfi-series"]
    gap = max(abs(value - v) for v in routes.values())
    if cross_tol is not None and gap > check_tol:
        raise ToleranceError(
            f"median routes disagree by {mp.nstr(gap)} (allowed {mp.nstr(check_tol)})"
        )
    return SummationResult(mdl.label, xz, AverageKind.MEDIAN, "erfi-series",
                           value, max(gap, tol))


def averaged_value(model, avg, p, tol="1e-10"):
    """Lateral or median continuation of the transform at real p >= 0.

    Median keeps only the branch terms whose singularity lies beyond p
    (real for real coefficients); mur/mul add the purely imaginary
    contribution of the crossed terms, as the limits of eval from the
    upper/lower half plane respectively.  The arithmetic mean of mur and
    mul equals the median exactly for odd weight."""
    mdl = _resolve_model(model)
    knd = _kind(avg)
    pr = mp.mpf(p)
    if pr < 0:
        raise DomainError("p must be nonnegative")
    law = mdl.tail
    nu_l = mp.mpf(law.eta_lower)
    decay = mdl.k - law.power - 1
    scale = mp.mpf(law.coeff_bound) * (2 / nu_l) ** (mp.mpf(mdl.k) / 2)
    n_min = int(ceil(sqrt(2 * float(pr) / law.eta_lower))) + 1
    n_terms = max(mdl._terms_for(decay, scale, mp.mpf(tol)), n_min)
    expo = -mp.mpf(mdl.k) / 2
    ahead = mp.mpf(0)
    crossed = mp.mpf(0)
    for n in range(1, n_terms + 1):
        c = mdl.coeff(n)
        if c == 0:
            continue
        eta_n = mdl.eta(n)
        if eta_n == pr:
            raise DomainError(f"p coincides with the singularity at {mp.nstr(eta_n)}")
        if eta_n > pr:
            ahead += c * mp.power(eta_n - pr, expo)
        else:
            crossed += c * mp.power(pr - eta_n, expo)
    if knd is AverageKind.MEDIAN:
        return ahead
    phase = mp.j**mdl.k if knd is AverageKind.MUR else (-mp.j) ** mdl.k
    return ahead + phase * crossed


def radial_limit(alpha, eps_seq=None, rungs: int = 9, ratio: int = 2,
                 eps0=None, tol="1e-10") -> SummationResult:
    """Boundary value at the point i/(2 pi alpha) by a radial median ladder.

    Median values at x_j = eps_j + i y are Richardson-extrapolated in eps;
    the limit is the unit-circle boundary value at angle alpha.  The error
    series in eps grows with the denominator of alpha, so the default start
    shrinks as y / denominator^2.  eps_seq overrides the ladder entirely."""
    if hasattr(alpha, "numerator"):
        a = mp.mpf(alpha.numerator) / alpha.denominator
        den = abs(alpha.denominator)
    else:
        a = mp.mpf(alpha)
        den = 1
    if a == 0:
        raise DomainError("alpha must be nonzero")
    y = 1 / (2 * mp.pi * a)
    if eps_seq is None:
        if rungs < 2:
            raise ValueError("need at least two rungs")
        start = abs(y) / (50 * den**2) if eps0 is None else mp.mpf(eps0)
        eps_seq = [start / ratio**j for j in range(rungs)]
    hs = [mp.mpf(e) for e in eps_seq]
    if len(hs) < 2 or any(e <= 0 for e in hs) or any(
            b >= a_ for a_, b in zip(hs, hs[1:])):
        raise ValueError("eps_seq must be positive and strictly decreasing")
    mdl = trefoil_borel()
    inner = min(mp.mpf(tol) / 10, mp.mpf("1e-14"))
    vals = [_closed_value(mdl, e + mp.j * y, AverageKind.MEDIAN, inner) for e in hs]
    limit, err = richardson_limit(hs, vals)
    return SummationResult("trefoil", mp.mpc(0, y), AverageKind.MEDIAN,
                           "radial", limit, err)
