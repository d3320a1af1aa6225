"""Theta series built on the period-12 sign table, and the boundary function g.

eta(tau) is the weight-1/2 theta sum chi(n) e^{pi i n^2 tau/12} over n >= 1,
equal to the familiar infinite product e^{pi i tau/12} prod (1 - e^{2 pi i n
tau}); both routes are exposed so they can be checked against each other.
For |tau| < 1 the theta route applies eta(-1/tau) = sqrt(tau/i) eta(tau)
once, which keeps term counts small uniformly along rays approaching 0.

eta_tilde is the companion weighted by an extra factor n.  Its radial limits
at rational points are finite even though the unweighted series has none,
which is what the boundary identities in the tests probe.

zagier_g(x) is the lateral Laplace value at i/(2 pi x): the sum side is
"mul" for x > 0 and "mur" for x < 0, so that g picks up the boundary
values of the unit-disk function continuously from either half plane.
g(-x) is the conjugate of g(x) for real x.  A direct route integrates
(z - x)^{-3/2} eta(z) along a ray rotated into the upper half plane; its
ratio to the lateral value is a fixed constant, measured by the verify
suite rather than folded in here.
"""

from __future__ import annotations

from math import ceil, sqrt

from mpmath import mp

from .characters import chi12
from .errors import ConvergenceError, DomainError
from .specfun import RayContour, fit_poly_coeffs, gaussian_tail, ray_integrate

__all__ = [
    "eta",
    "eta_tilde",
    "eta_tilde_radial",
    "eta_prime",
    "zagier_g",
    "zagier_g_taylor",
]

_SERIES_BUDGET = 2_000_000


def _gauss_cutoff(beta, s: int, target) -> int:
    n = max(8, int(ceil(sqrt(float((mp.dps + 5) * mp.log(10) / beta)))))
    while gaussian_tail(n, beta, s) > target:
        n = int(n * 1.3) + 1
        if n > _SERIES_BUDGET:
            raise ConvergenceError("theta series cutoff exceeded the term budget")
    return n


def _theta_sum(tau, weight: int):
    chi = chi12()
    beta = mp.pi * mp.im(tau) / 12
    target = mp.exp(-beta) * mp.mpf(10) ** (-(mp.dps + 5))
    n_terms = _gauss_cutoff(beta, weight, target)
    acc = mp.mpc(0)
    for n in range(1, n_terms + 1):
        s = chi(n)
        if s == 0:
            continue
        term = mp.expjpi(mp.mpf(n) ** 2 * tau / 12)
        if weight:
            term *= mp.mpf(n) ** weight
        acc += s * term
    return acc


def eta(tau, route: str = "theta"):
    """Value on the upper half plane by the requested route."""
    tz = mp.mpc(tau)
    if mp.im(tz) <= 0:
        raise DomainError("tau must have positive imaginary part")
    if route == "theta":
        if abs(tz) < 1:
            return eta(-1 / tz, route) / mp.sqrt(tz / mp.j)
        return _theta_sum(tz, 0)
    if route != "product":
        raise ValueError("route must be 'theta' or 'product'")
    decay = 2 * mp.pi * mp.im(tz)
    n_terms = int(ceil(float((mp.dps + 5) * mp.log(10) / decay))) + 1
    if n_terms > _SERIES_BUDGET:
        raise ConvergenceError("product route needs Im tau not too small")
    q = mp.expjpi(2 * tz)
    acc = mp.expjpi(tz / 12)
    power = mp.mpc(1)
    for _ in range(n_terms):
        power *= q
        acc *= 1 - power
    return acc


def eta_tilde(tau):
    """Theta sum with an extra weight n; direct series, no inversion step."""
    tz = mp.mpc(tau)
    if mp.im(tz) <= 0:
        raise DomainError("tau must have positive imaginary part")
    return _theta_sum(tz, 1)


def eta_tilde_radial(alpha, eps0=None, rungs: int = 9, ratio: int = 2):
    """Radial limit of eta_tilde at the real point alpha.

    Values on the vertical ladder alpha + i eps_j, eps_j geometric, are
    Richardson-extrapolated to eps = 0.  The error series blows up with the
    denominator of alpha, so the default start shrinks as 1/denominator^2.
    Returns (limit, err_estimate)."""
    from .specfun import richardson_limit

    if hasattr(alpha, "numerator"):
        a = mp.mpf(alpha.numerator) / alpha.denominator
        den = abs(alpha.denominator)
    else:
        a = mp.mpf(alpha)
        den = 1
    if rungs < 2:
        raise ValueError("need at least two rungs")
    eps = mp.mpf("0.002") / den**2 if eps0 is None else mp.mpf(eps0)
    hs = []
    vals = []
    for _ in range(rungs):
        hs.append(eps)
        vals.append(eta_tilde(a + mp.j * eps))
        eps /= ratio
    return richardson_limit(hs, vals)


def eta_prime(tau):
    """Termwise derivative of eta, (pi i/12) sum chi(n) n^2 e^{pi i n^2 tau/12}.

    No inversion step, so keep Im tau away from 0."""
    tz = mp.mpc(tau)
    if mp.im(tz) <= 0:
        raise DomainError("tau must have positive imaginary part")
    return mp.pi * mp.j / 12 * _theta_sum(tz, 2)


def _g_direct(xr, tol, theta=None):
    # branch point z = x sits on the closed original contour for x > 0;
    # the ray into the upper half plane keeps Im(z - x) > 0 throughout,
    # so the principal power never meets its cut
    th = 3 * mp.pi / 8 if theta is None else mp.mpf(theta)
    if not 0 < th < mp.pi:
        raise DomainError("ray angle must point into the upper half plane")
    digits = mp.dps + 8
    ln10 = mp.log(10)
    r_min = mp.pi * mp.sin(th) / (12 * digits * ln10)
    r_max = 12 * digits * ln10 / (mp.pi * mp.sin(th))
    contour = RayContour(th, r_min, r_max)

    def integrand(z):
        return mp.power(z - xr, mp.mpf("-1.5")) * eta(z)

    value, _ = ray_integrate(integrand, contour, mp.mpf(tol))
    return value


def zagier_g(x, tol="1e-16", eps_ray=None, route: str = "laplace"):
    """Boundary function at real x != 0.

    The default route delegates to the lateral Laplace value at i/(2 pi x),
    side mul for x > 0 and mur for x < 0.  route="direct" integrates the
    kernel (z - x)^{-3/2} against eta(z) along a rotated ray instead; the
    two routes differ by a fixed x-independent constant."""
    from .summation import sum_eta_integral

    a = mp.mpf(x.numerator) / x.denominator if hasattr(x, "numerator") else mp.mpf(x)
    if a == 0:
        raise DomainError("x must be nonzero")
    if route == "direct":
        return _g_direct(a, tol)
    if route != "laplace":
        raise ValueError("route must be 'laplace' or 'direct'")
    point = mp.j / (2 * mp.pi * a)
    side = "mul" if a > 0 else "mur"
    return sum_eta_integral(point, side=side, tol=tol, eps_ray=eps_ray).value


def zagier_g_taylor(count: int = 4, h="1e-3", tol="1e-20"):
    """First `count` Taylor coefficients of g at 0.

    Degree-7 polynomial fit through g(+-j s), j = 1..4, with the negative
    half supplied by conjugation, at the three scales s = h, h/2, h/4.
    The fit error for c_n starts at order 8-n (even n) or 9-n (odd n), in
    even steps, so each coefficient gets two Richardson eliminations at
    its true orders.  Noise amplification grows like s^{-n}; the high end
    of the window is only good to a few digits."""
    if not 1 <= count <= 8:
        raise ValueError("count must be in 1..8")
    with mp.workdps(max(mp.dps, 25) + 10):
        step = mp.mpf(h)
        cache: dict = {}

        def g_at(u):
            if u not in cache:
                cache[u] = zagier_g(u, tol=tol)
            return cache[u]

        def coeffs_at(scale):
            gs = [g_at(j * scale) for j in (1, 2, 3, 4)]
            xs = [-4, -3, -2, -1, 1, 2, 3, 4]
            ys = [mp.conj(g) for g in gs[::-1]] + gs
            in_units = fit_poly_coeffs(xs, ys)
            return [in_units[n] / scale**n for n in range(8)]

        fits = [coeffs_at(step), coeffs_at(step / 2), coeffs_at(step / 4)]
        out = []
        for n in range(count):
            m1 = 8 - n if (8 - n) % 2 == 0 else 9 - n
            rungs = [
                fits[i + 1][n] + (fits[i + 1][n] - fits[i][n]) / (2**m1 - 1)
                for i in (0, 1)
            ]
            out.append(rungs[1] + (rungs[1] - rungs[0]) / (2 ** (m1 + 2) - 1))
    return [+c for c in out]
