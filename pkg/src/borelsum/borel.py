"""Borel-plane models: sparse sums of half-integer-power branch terms.

Both models have the form

    G(p) = sum_{n >= 1} c_n (eta_n - p)^{-k/2},   eta_n = nu n^2,

with k odd, coefficients c_n drawn from a sign table with period 12 or 60,
and branch points accumulating along [eta_1, oo).  Principal powers are used
throughout, so the first sheet is the cut plane C \\ [eta_1, oo).  The second
determination negates every (eta_n - p)^{1/2} at once; with k odd that is a
global sign flip of the whole sum.

Truncation of the tail sum_{n > N} uses |eta_n - p| >= eta_n/2 once
eta_{N+1} >= 2|p|, which gives the explicit bound

    tail <= A (2/nu)^{k/2} N^{s-k+1} / (k - s - 1),   |c_n| <= A n^s.

The tail decays only like a power of N, so the reachable tolerance is limited
by the term budget; eval raises ConvergenceError rather than exceeding it.

trefoil:  k = 5, nu = pi^2/6,  c_n = (3 pi / (2 sqrt 2)) chi(n) n with the
          period-12 sign table.
poincare: k = 3, nu = pi^2/30, c_n = -sqrt(30) (c1 chi1(n) + c2 chi2(n)),
          c1 = sqrt(6 (5 + sqrt 5))/120, c2 = sqrt(6 (5 - sqrt 5))/120, with
          the two period-60 sign tables.  Equivalently, for odd n,
          c_n = (2 sqrt(30)/30) (-1)^{(n-1)/2} cos(n pi/6) cos(3 n pi/10).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import ceil, sqrt

from mpmath import mp

from .characters import chi12, chi60
from .errors import ConvergenceError, OnCutError
from .series import bernoulli_poly

__all__ = [
    "TERM_BUDGET",
    "TailLaw",
    "Singularity",
    "SheetedPoint",
    "SqrtBranched",
    "trefoil_borel",
    "poincare_borel",
    "poincare_coefficient_trig",
    "trefoil_bn_exact",
    "trefoil_taylor_exact",
    "taylor_coeffs",
    "poincare_appendix_direct",
]

TERM_BUDGET = 100_000


@dataclass(frozen=True)
class TailLaw:
    """Loose envelope |c_n| <= coeff_bound * n^power and
    eta_lower * n^2 <= eta_n <= eta_upper * n^2."""

    coeff_bound: float
    power: int
    eta_lower: float
    eta_upper: float


@dataclass(frozen=True)
class Singularity:
    index: int
    location: object
    coefficient: object


@dataclass(frozen=True)
class SheetedPoint:
    p: object
    sheet: int = 0

    def __post_init__(self) -> None:
        if self.sheet not in (0, 1):
            raise ValueError("sheet must be 0 or 1")


class SqrtBranched:
    """One of the branch-term sums above, evaluated lazily at the current
    working precision (eta/coeff recompute their constants on every call)."""

    def __init__(self, label: str, k: int, a0, eta_fn, coeff_fn, tail: TailLaw,
                 period: int | None = None):
        if k % 2 == 0 or k < 3:
            raise ValueError("k must be odd and >= 3")
        self.label = label
        self.k = k
        self.a0 = a0
        self.tail = tail
        self.period = period
        self._eta_fn = eta_fn
        self._coeff_fn = coeff_fn

    def eta(self, n: int):
        if n < 1:
            raise ValueError("singularities are indexed from 1")
        return self._eta_fn(n)

    def coeff(self, n: int):
        if n < 1:
            raise ValueError("singularities are indexed from 1")
        return self._coeff_fn(n)

    def singularity(self, n: int) -> Singularity:
        return Singularity(n, self.eta(n), self.coeff(n))

    def singularities(self, count: int) -> list[Singularity]:
        return [self.singularity(n) for n in range(1, count + 1)]

    def _terms_for(self, decay: int, scale, tol) -> int:
        # smallest N with scale * N^{-decay} / decay <= tol
        n = int(ceil((scale / (decay * mp.mpf(tol))) ** (mp.mpf(1) / decay)))
        n = max(n, 8)
        if n > TERM_BUDGET:
            raise ConvergenceError(
                f"{self.label}: tolerance {mp.nstr(mp.mpf(tol))} needs {n} terms "
                f"(budget {TERM_BUDGET}); power-law tails cap the reachable accuracy"
            )
        return n

    def eval(self, point, tol="1e-8", sheet: int | None = None):
        """Value at p on the requested sheet, within absolute tolerance tol."""
        if isinstance(point, SheetedPoint):
            if sheet is not None and sheet != point.sheet:
                raise ValueError("conflicting sheet selections")
            p, sheet = mp.mpc(point.p), point.sheet
        else:
            p = mp.mpc(point)
            sheet = 0 if sheet is None else sheet
        if sheet not in (0, 1):
            raise ValueError("sheet must be 0 or 1")
        if mp.im(p) == 0 and mp.re(p) >= self.eta(1):
            raise OnCutError("real p >= eta_1 lies on the branch cut")

        law = self.tail
        nu_l = mp.mpf(law.eta_lower)
        decay = self.k - law.power - 1
        scale = mp.mpf(law.coeff_bound) * (2 / nu_l) ** (mp.mpf(self.k) / 2)
        n_min = int(ceil(sqrt(2 * float(abs(p)) / law.eta_lower))) + 1
        n_terms = max(self._terms_for(decay, scale, tol), n_min)
        if n_terms > TERM_BUDGET:
            raise ConvergenceError(f"{self.label}: |p| too large for the term budget")

        expo = -mp.mpf(self.k) / 2
        acc = mp.mpc(0)
        for n in range(1, n_terms + 1):
            c = self._coeff_fn(n)
            if c == 0:
                continue
            acc += c * mp.power(self._eta_fn(n) - p, expo)
        return -acc if sheet == 1 else acc

    def taylor_coeffs(self, count: int, tol="1e-8") -> list:
        """b_0..b_{count-1} with G(p) = sum b_j p^j near p = 0.

        b_j = (k/2)_j / j! * sum_n c_n eta_n^{-k/2-j}; for periodic
        coefficients the inner sum is exact (Hurwitz zeta), otherwise it is
        truncated under the same envelope law as eval.
        """
        law = self.tail
        nu_l = mp.mpf(law.eta_lower)
        out = []
        k_half = mp.mpf(self.k) / 2
        for j in range(count):
            m = self.k + 2 * j
            if self.period:
                acc = periodic_power_sum(self, mp.mpf(m) / 2)
            else:
                decay = m - law.power - 1
                scale = mp.mpf(law.coeff_bound) * nu_l ** (-mp.mpf(m) / 2)
                n_terms = self._terms_for(decay, scale, tol)
                expo = -mp.mpf(m) / 2
                acc = mp.mpf(0)
                for n in range(1, n_terms + 1):
                    c = self._coeff_fn(n)
                    if c == 0:
                        continue
                    acc += c * mp.power(self._eta_fn(n), expo)
            out.append(mp.rf(k_half, j) / mp.factorial(j) * acc)
        return out


_PERIODIC_SUM_CACHE: dict = {}


def periodic_power_sum(g: SqrtBranched, s):
    """sum_n c_n eta_n^{-s} when c_n has period g.period and eta_n = nu n^2.

    Reduces to Hurwitz zeta values at the residues, exact at working
    precision; cached per (model, s, precision)."""
    if not g.period:
        raise ValueError("model has no periodic coefficient structure")
    key = (g.label, str(s), mp.prec)
    hit = _PERIODIC_SUM_CACHE.get(key)
    if hit is not None:
        return hit
    s2 = 2 * mp.mpf(s)
    total = mp.mpf(0)
    for a in range(1, g.period + 1):
        c = g.coeff(a)
        if c:
            total += c * mp.zeta(s2, mp.mpf(a) / g.period)
    value = g.eta(1) ** (-mp.mpf(s)) * mp.power(g.period, -s2) * total
    _PERIODIC_SUM_CACHE[key] = value
    return value


@cache
def trefoil_bn_exact(n: int) -> Fraction:
    """Exact Taylor coefficient b_n of the trefoil transform at p = 0.

    Closed form in Bernoulli-polynomial differences at 1/12 and 5/12;
    purely rational despite the transcendental branch-point data.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = 2 * n + 4
    delta = bernoulli_poly(m, Fraction(1, 12)) - bernoulli_poly(m, Fraction(5, 12))
    return Fraction(6 * (-6) ** (n + 1),
                    math.factorial(n + 2) * math.factorial(n)) * delta


def trefoil_taylor_exact(order: int) -> list[Fraction]:
    """b_0..b_order of the trefoil transform, exact."""
    return [trefoil_bn_exact(n) for n in range(order + 1)]


def taylor_coeffs(g: SqrtBranched, count: int, tol="1e-8") -> list:
    """Taylor coefficients of g at p = 0.

    Exact rationals for the trefoil instance; numerically summed values
    with the envelope-law truncation otherwise.
    """
    if g.label == "trefoil":
        return trefoil_taylor_exact(count - 1)
    return g.taylor_coeffs(count, tol=tol)


def trefoil_borel() -> SqrtBranched:
    chi = chi12()

    def eta(n: int):
        return mp.pi**2 * n**2 / 6

    def coeff(n: int):
        s = chi(n)
        if s == 0:
            return mp.mpf(0)
        return s * n * 3 * mp.pi / (2 * mp.sqrt(2))

    # |c_n| <= 3.34 n; 1.64 n^2 <= eta_n <= 1.645 n^2
    return SqrtBranched("trefoil", 5, 1, eta, coeff, TailLaw(3.34, 1, 1.64, 1.645))


def poincare_coefficient_trig(n: int):
    """Trigonometric form of the poincare coefficient; zero at even n."""
    if n % 2 == 0:
        return mp.mpf(0)
    sign = -1 if ((n - 1) // 2) % 2 else 1
    return (
        sign
        * (2 * mp.sqrt(30) / 30)
        * mp.cos(n * mp.pi / 6)
        * mp.cos(3 * n * mp.pi / 10)
    )


def poincare_borel() -> SqrtBranched:
    chi1 = chi60(1)
    chi2 = chi60(2)

    def eta(n: int):
        return mp.pi**2 * n**2 / 30

    def coeff(n: int):
        s1, s2 = chi1(n), chi2(n)
        if s1 == 0 and s2 == 0:
            return mp.mpf(0)
        root5 = mp.sqrt(5)
        c1 = mp.sqrt(6 * (5 + root5)) / 120
        c2 = mp.sqrt(6 * (5 - root5)) / 120
        return -mp.sqrt(30) * (c1 * s1 + c2 * s2)

    # |c_n| <= sqrt(30)(c1 + c2) < 0.44; 0.32 n^2 <= eta_n <= 0.33 n^2
    return SqrtBranched("poincare", 3, 1, eta, coeff,
                        TailLaw(0.44, 0, 0.32, 0.33), period=60)


def poincare_appendix_direct(p, terms: int = 3000):
    """Literal two-character form of the poincare transform.

    Evaluates c1 * sum chi1(n) (-30p + n^2 pi^2)^{-3/2} plus the chi2
    twin, exactly as printed, with no normalization conversion.  The
    ratio eval/appendix_direct is the measured conversion factor; it is
    recorded in the verification report, not silently absorbed.
    """
    chi1 = chi60(1)
    chi2 = chi60(2)
    root5 = mp.sqrt(5)
    c1 = mp.sqrt(6 * (5 + root5)) / 120
    c2 = mp.sqrt(6 * (5 - root5)) / 120
    pp = mp.mpc(p)
    acc1 = mp.mpc(0)
    acc2 = mp.mpc(0)
    for n in range(1, terms + 1):
        s1, s2 = chi1(n), chi2(n)
        if s1 == 0 and s2 == 0:
            continue
        base = mp.power(-30 * pp + n**2 * mp.pi**2, mp.mpf(-3) / 2)
        acc1 += s1 * base
        acc2 += s2 * base
    return c1 * acc1 + c2 * acc2
