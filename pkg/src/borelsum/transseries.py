"""Transseries structure of the trefoil Borel Taylor coefficients.

The exact coefficients b_n split into blocks indexed by the support of
the mod-12 character: a dominant k=1 block growing like
(6/pi^2)^n n^{3/2} (gamma_0 + gamma_1/n + ...) and exponentially
suppressed blocks at k = 5, 7, 11, ...  This module extracts the block
coefficients c[k, l], reconstructs b_n from a finite (k, l) window, and
measures how the residuals decay.

Two independent routes produce the gamma ladder:

* ``stirling_gamma_fit`` fits exact factorial ratios at large n with a
  Richardson peel (the primary route; self-validated on two disjoint
  n ranges).
* ``stirling_gammas`` manipulates the Stirling series in exact rational
  arithmetic and returns g_l with gamma_l = g_l / sqrt(pi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from mpmath import mp

from .borel import trefoil_bn_exact
from .characters import chi12, l_value_exact
from .errors import ToleranceError
from .series import bernoulli_number
from .specfun import richardson_limit

__all__ = [
    "exact_bn",
    "closed_bn",
    "block_term",
    "normalized_residual",
    "stirling_gammas",
    "GammaFit",
    "stirling_gamma_fit",
    "predicted_ckl",
    "TransseriesTable",
    "extract_ckl",
    "TransseriesReport",
    "verify_transseries",
]


def exact_bn(n: int) -> Fraction:
    """Exact b_n, delegated to the Bernoulli-difference closed form."""
    return trefoil_bn_exact(n)


def closed_bn(n: int) -> Fraction:
    """Exact b_n assembled from the L-value route.

    Equals ``exact_bn`` identically; kept as an independent derivation
    for cross-route tests.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    r, _ = l_value_exact(n + 1)
    comb = Fraction(math.factorial(2 * n + 3),
                    math.factorial(n + 1) * math.factorial(n))
    return 9 * Fraction(3, 2) ** n * comb * r


_PREFACTOR_CACHE: dict[int, object] = {}


def _prefactor() -> object:
    """9*sqrt(3)/pi^4, the overall scale of every character block."""
    key = mp.prec
    if key not in _PREFACTOR_CACHE:
        _PREFACTOR_CACHE[key] = 9 * mp.sqrt(3) / mp.pi ** 4
    return _PREFACTOR_CACHE[key]


def block_term(k: int, n: int) -> object:
    """Full contribution of the k-th character block to b_n.

    The blocks sum to b_n exactly: each carries the entire factorial
    ratio, so subtracting the k=1 block leaves only the exponentially
    smaller k >= 5 blocks.
    """
    chi = chi12()(k)
    if chi == 0:
        return mp.mpf(0)
    comb = Fraction(math.factorial(2 * n + 3),
                    math.factorial(n + 1) * math.factorial(n))
    scale = Fraction(3 ** n, 2 ** n) * comb / Fraction(k ** (2 * n + 4))
    value = mp.mpf(scale.numerator) / mp.mpf(scale.denominator)
    return _prefactor() * chi * value / mp.pi ** (2 * n)


def normalized_residual(n: int) -> object:
    """(b_n - k=1 block) with the leading growth divided out.

    Successive ratios approach 1/25, the suppression set by the next
    populated block at k=5.  The two terms agree to roughly 1.4 (2n + 4)
    digits, so the difference is formed at raised precision.
    """
    b = exact_bn(n)
    with mp.workdps(int(mp.mpf("0.7") * (2 * n + 4)) + mp.dps + 10):
        bn = mp.mpf(b.numerator) / mp.mpf(b.denominator)
        resid = bn - block_term(1, n)
        out = resid * (mp.pi ** 2 / 6) ** n / mp.power(n, mp.mpf(3) / 2)
    return +out


def _frac_pow_series(coeffs: Sequence[Fraction], alpha: Fraction,
                     order: int) -> list[Fraction]:
    """Coefficients of P(t)**alpha through t**order; requires P(0) = 1."""
    if coeffs[0] != 1:
        raise ValueError("series must have constant term 1")
    out = [Fraction(1)]
    for m in range(1, order + 1):
        acc = Fraction(0)
        for j in range(1, m + 1):
            p_j = coeffs[j] if j < len(coeffs) else Fraction(0)
            acc += ((alpha + 1) * j - m) * p_j * out[m - j]
        out.append(acc / m)
    return out


def stirling_gammas(count: int) -> list[Fraction]:
    """Exact g_l for l < count, where gamma_l = g_l / sqrt(pi).

    The factorial ratio (2n+3)!/((n+1)! n!) equals
    (8/sqrt(pi)) 4^n Gamma(n+5/2)/Gamma(n+1), and the gamma-ratio
    asymptotic in 1/n has coefficients binom(3/2, l) times values of
    the order-5/2 generalized Bernoulli polynomial at 5/2.  Everything
    stays rational; g_0 = 8 and g_1 = 15.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    order = count - 1
    base = [bernoulli_number(j) / math.factorial(j) for j in range(order + 1)]
    powered = _frac_pow_series(base, Fraction(5, 2), order)
    shift = [Fraction(5, 2) ** j / math.factorial(j) for j in range(order + 1)]
    out = []
    binom = Fraction(1)
    for el in range(count):
        poly_val = sum(powered[j] * shift[el - j] for j in range(el + 1))
        poly_val *= math.factorial(el)
        if el > 0:
            binom *= (Fraction(3, 2) - (el - 1)) / el
        out.append(8 * binom * poly_val)
    return out


def _factorial_ratio_scaled(n: int) -> object:
    """(2n+3)!/((n+1)! n! 4^n n^{3/2}); tends to gamma_0 = 8/sqrt(pi)."""
    q = Fraction(math.factorial(2 * n + 3),
                 math.factorial(n + 1) * math.factorial(n) * 4 ** n)
    val = mp.mpf(q.numerator) / mp.mpf(q.denominator)
    return val / mp.power(n, mp.mpf(3) / 2)


def _peel_gammas(ns: Sequence[int], l_max: int) -> list[object]:
    hs = [mp.mpf(1) / n for n in ns]
    work = [_factorial_ratio_scaled(n) for n in ns]
    out = []
    for _ in range(l_max + 1):
        limit, _ = richardson_limit(hs, work)
        out.append(limit)
        work = [(w - limit) / h for w, h in zip(work, hs)]
    return out


def _geometric_ns(start: int, ratio: float, points: int) -> list[int]:
    ns: list[int] = []
    x = float(start)
    for _ in range(points):
        n = int(round(x))
        if ns and n <= ns[-1]:
            n = ns[-1] + 1
        ns.append(n)
        x *= ratio
    return ns


@dataclass(frozen=True)
class GammaFit:
    """Gamma ladder fitted from exact factorial ratios.

    ``cross_gap`` is the largest disagreement between the two disjoint
    n ranges used for self-validation.
    """

    values: tuple
    cross_gap: object


def stirling_gamma_fit(l_max: int,
                       ranges: Sequence[tuple[int, float, int]] = (
                           (400, 1.3, 16), (700, 1.3, 16)),
                       agreement: str | float = "1e-9") -> GammaFit:
    """Fit gamma_0..gamma_{l_max} by Richardson peeling at large n.

    Runs the peel on each n range independently and raises
    ToleranceError if any coefficient differs across ranges by more
    than ``agreement``.
    """
    tol = mp.mpf(agreement)
    with mp.workdps(mp.dps + 40):
        fits = [_peel_gammas(_geometric_ns(*r), l_max) for r in ranges]
        gap = mp.mpf(0)
        for row in fits[1:]:
            for a, b in zip(fits[0], row):
                gap = max(gap, abs(a - b))
        if gap > tol:
            raise ToleranceError(
                f"gamma fit ranges disagree by {mp.nstr(gap, 5)} "
                f"(allowed {mp.nstr(tol, 5)})")
        values = tuple(+g for g in fits[0])
    return GammaFit(values=values, cross_gap=+gap)


def predicted_ckl(k: int, l: int) -> object:
    """Block coefficient c[k, l] from the exact gamma route."""
    chi = chi12()(k)
    if chi == 0:
        return mp.mpf(0)
    g = stirling_gammas(l + 1)[l]
    gamma_l = (mp.mpf(g.numerator) / mp.mpf(g.denominator)) / mp.sqrt(mp.pi)
    return _prefactor() * chi * gamma_l / mp.mpf(k) ** 4


@dataclass(frozen=True)
class TransseriesTable:
    """Finite (k, l) window of transseries block coefficients.

    ``normalization`` records which k-power convention ``reconstruct``
    uses for the exponential monomial; it is a measured fact, set by
    checking which convention actually reproduces b_n.
    """

    c: Mapping[tuple[int, int], object]
    base: object
    power: object
    k_max: int
    l_max: int
    normalization: str = "k^-2n"
    gamma_gap: object = None

    def value(self, k: int, l: int) -> object:
        return self.c.get((k, l), mp.mpf(0))

    def reconstruct(self, n: int, l_cap: int | None = None,
                    k_cap: int | None = None,
                    normalization: str | None = None) -> object:
        """Windowed transseries value at index n."""
        l_top = self.l_max if l_cap is None else min(l_cap, self.l_max)
        k_top = self.k_max if k_cap is None else min(k_cap, self.k_max)
        conv = self.normalization if normalization is None else normalization
        if conv not in ("k^-2n", "k^-n"):
            raise ValueError(f"unknown normalization {conv!r}")
        expo = 2 * n if conv == "k^-2n" else n
        nn = mp.mpf(n)
        total = mp.mpf(0)
        for k in range(1, k_top + 1):
            inner = mp.mpf(0)
            for l in range(l_top + 1):
                coeff = self.c.get((k, l))
                if coeff:
                    inner += coeff / nn ** l
            if inner:
                total += inner / mp.mpf(k) ** expo
        return mp.power(self.base, n) * mp.power(nn, self.power) * total


def extract_ckl(k_max: int, l_max: int, route: str = "fit") -> TransseriesTable:
    """Assemble the c[k, l] window for k <= k_max, l <= l_max.

    The k dependence is exact (character value over k^4, with the
    squared-index exponential); the 1/n ladder comes from the gamma
    fit, or from the exact Stirling route when ``route='exact'``.
    """
    if k_max < 1 or l_max < 0:
        raise ValueError("window must satisfy k_max >= 1, l_max >= 0")
    if route == "fit":
        fit = stirling_gamma_fit(l_max)
        gammas = list(fit.values)
        gap = fit.cross_gap
    elif route == "exact":
        sqrt_pi = mp.sqrt(mp.pi)
        gammas = [(mp.mpf(g.numerator) / mp.mpf(g.denominator)) / sqrt_pi
                  for g in stirling_gammas(l_max + 1)]
        gap = mp.mpf(0)
    else:
        raise ValueError(f"unknown route {route!r}")
    chi = chi12()
    pref = _prefactor()
    table: dict[tuple[int, int], object] = {}
    for k in range(1, k_max + 1):
        weight = pref * chi(k) / mp.mpf(k) ** 4
        for l in range(l_max + 1):
            table[(k, l)] = weight * gammas[l] if chi(k) else mp.mpf(0)
    return TransseriesTable(c=table, base=6 / mp.pi ** 2,
                            power=mp.mpf(3) / 2, k_max=k_max, l_max=l_max,
                            normalization="k^-2n", gamma_gap=gap)


def _as_mpf(q: Fraction) -> object:
    return mp.mpf(q.numerator) / mp.mpf(q.denominator)


@dataclass(frozen=True)
class TransseriesReport:
    """Reconstruction quality over an n range.

    * ``rel_errors``: relative error of the full-window reconstruction.
    * ``omitted_ratio``: those errors divided by the size of the first
      omitted k=1 monomial; order 1 when the window is honest.
    * ``l_decay``: per truncation level L, the fitted exponent of the
      residual power law next to the expected 3/2 - (L+1).
    * ``residual_ratios``: successive ratios of the k=1-block residual;
      they approach 1/25.
    * ``normalization_measured``: which k-power convention reproduced
      b_n.
    """

    ns: tuple
    rel_errors: tuple
    omitted_ratio: tuple
    l_decay: tuple
    residual_ratios: tuple
    c10_trend: tuple
    normalization_measured: str
    passed: bool = field(default=True)


def verify_transseries(table: TransseriesTable,
                       n_range: Sequence[int] = tuple(range(30, 61, 5)),
                       ) -> TransseriesReport:
    """Measure how well the windowed table reconstructs exact b_n."""
    ns = tuple(int(n) for n in n_range)
    exact = {n: _as_mpf(exact_bn(n)) for n in ns}

    rel_errors = []
    omitted = []
    g_next = stirling_gammas(table.l_max + 2)[table.l_max + 1]
    gamma_next = _as_mpf(g_next) / mp.sqrt(mp.pi)
    c_next = _prefactor() * gamma_next
    for n in ns:
        err = abs(table.reconstruct(n) - exact[n]) / abs(exact[n])
        rel_errors.append(err)
        first_omitted = abs(c_next) / mp.mpf(n) ** (table.l_max + 1)
        scale = abs(exact[n]) / (mp.power(table.base, n)
                                 * mp.power(n, table.power))
        omitted.append(err * scale / first_omitted)

    l_decay = []
    n_lo, n_hi = ns[0], ns[-1]
    for level in range(table.l_max):
        r_lo = abs(exact[n_lo] - table.reconstruct(n_lo, l_cap=level, k_cap=1))
        r_hi = abs(exact[n_hi] - table.reconstruct(n_hi, l_cap=level, k_cap=1))
        r_lo *= mp.power(table.base, -n_lo)
        r_hi *= mp.power(table.base, -n_hi)
        fitted = mp.log(r_hi / r_lo) / mp.log(mp.mpf(n_hi) / n_lo)
        l_decay.append((level, fitted, mp.mpf(3) / 2 - (level + 1)))

    residual_ratios = []
    prev = None
    for n in range(ns[0], ns[0] + 8):
        cur = normalized_residual(n)
        if prev is not None and prev != 0:
            residual_ratios.append(cur / prev)
        prev = cur

    c10_trend = tuple(exact[n] * mp.power(table.base, -n)
                      / mp.power(n, table.power) for n in ns)

    # the k-block suppression is read off the residual ratios: quadratic
    # normalization predicts 1/25 per step, linear would predict 1/5
    mean_ratio = sum(residual_ratios) / len(residual_ratios)
    if abs(mean_ratio - mp.mpf(1) / 25) < abs(mean_ratio - mp.mpf(1) / 5):
        measured = "k^-2n"
    else:
        measured = "k^-n"

    passed = bool(max(rel_errors) < mp.mpf("1e-6")
                  and measured == table.normalization)
    return TransseriesReport(
        ns=ns,
        rel_errors=tuple(rel_errors),
        omitted_ratio=tuple(omitted),
        l_decay=tuple(l_decay),
        residual_ratios=tuple(residual_ratios),
        c10_trend=c10_trend,
        normalization_measured=measured,
        passed=passed,
    )
