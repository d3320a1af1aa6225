"""Exact truncated power series and Bernoulli machinery.

Conventions:

- Every coefficient is a fractions.Fraction (lowest terms, positive
  denominator are guaranteed by Fraction itself).
- A FormalSeries is a fixed-length truncation.  coeffs[n] multiplies
  x^{-n} when variable_kind == "inverse-x" and p^n when variable_kind == "p".
  Trailing zero coefficients are allowed; `order` is the number of stored
  coefficients.  Operations never extend a truncation silently: a result's
  order is the minimum of its inputs' orders unless documented otherwise.
- Bernoulli numbers use the B(1) = -1/2 convention and are cached.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

__all__ = [
    "FormalSeries",
    "BernoulliCache",
    "bernoulli_number",
    "bernoulli_poly",
    "borel_transform",
    "hadamard_product",
    "series_product",
    "series_quotient_even",
    "cos_series",
    "sin_series",
]

_KINDS = ("inverse-x", "p")


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"exact coefficient expected, got {type(value).__name__}")


@dataclass(frozen=True)
class FormalSeries:
    """Truncated power series with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]
    variable_kind: str

    def __post_init__(self) -> None:
        if self.variable_kind not in _KINDS:
            raise ValueError(f"variable_kind must be one of {_KINDS}")
        object.__setattr__(self, "coeffs", tuple(_as_fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least one coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]


@dataclass
class BernoulliCache:
    """B_0 .. B_max_index, extended on demand by bernoulli_number."""

    numbers: list[Fraction] = field(default_factory=lambda: [Fraction(1)])

    @property
    def max_index(self) -> int:
        return len(self.numbers) - 1

    def extend_to(self, n: int) -> None:
        while self.max_index < n:
            m = self.max_index + 1
            # B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k
            acc = sum(Fraction(comb(m + 1, k)) * self.numbers[k] for k in range(m))
            self.numbers.append(-acc / (m + 1))


_CACHE = BernoulliCache()


def bernoulli_number(n: int, cache: BernoulliCache | None = None) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    c = cache if cache is not None else _CACHE
    c.extend_to(n)
    return c.numbers[n]


def bernoulli_poly(n: int, x: Fraction | int | str) -> Fraction:
    """Exact Bernoulli polynomial B_n(x) at a rational point."""
    if n < 0:
        raise ValueError("n must be >= 0")
    xq = _as_fraction(x)
    return sum(
        Fraction(comb(n, k)) * bernoulli_number(k) * xq ** (n - k) for k in range(n + 1)
    )


def borel_transform(series: FormalSeries) -> FormalSeries:
    """Map sum a_n x^{-n} (order N) to sum a_{n+1} p^n / n! (order N-1).

    The constant term a_0 is dropped; callers are responsible for carrying it
    through whatever resummation they perform afterwards.
    """
    if series.variable_kind != "inverse-x":
        raise ValueError("borel_transform expects an inverse-x series")
    if series.order < 2:
        raise ValueError("need at least order 2 to transform")
    out = []
    fact = Fraction(1)
    for n in range(series.order - 1):
        if n > 0:
            fact *= n
        out.append(series.coeffs[n + 1] / fact)
    return FormalSeries(tuple(out), "p")


def hadamard_product(f: FormalSeries, g: FormalSeries) -> FormalSeries:
    """Coefficientwise product; identity element is the all-ones series."""
    if f.variable_kind != g.variable_kind:
        raise ValueError("hadamard_product needs matching variable kinds")
    n = min(f.order, g.order)
    return FormalSeries(tuple(f.coeffs[i] * g.coeffs[i] for i in range(n)), f.variable_kind)


def series_product(f: FormalSeries, g: FormalSeries) -> FormalSeries:
    """Cauchy product truncated to min(f.order, g.order)."""
    if f.variable_kind != g.variable_kind:
        raise ValueError("series_product needs matching variable kinds")
    n = min(f.order, g.order)
    out = [Fraction(0)] * n
    for i in range(n):
        fi = f.coeffs[i]
        if not fi:
            continue
        for j in range(n - i):
            out[i + j] += fi * g.coeffs[j]
    return FormalSeries(tuple(out), f.variable_kind)


def series_quotient_even(num: FormalSeries, den: FormalSeries) -> FormalSeries:
    """Long division num/den of truncated series in p.

    Intended for the even/odd trigonometric quotients that produce the
    coefficient tables; works for any parity.  Rejects denominators with zero
    constant term, for which no power-series quotient exists.
    """
    if num.variable_kind != "p" or den.variable_kind != "p":
        raise ValueError("series_quotient_even operates on p-series")
    if den.coeffs[0] == 0:
        raise ValueError("denominator has zero constant term")
    n = min(num.order, den.order)
    q = [Fraction(0)] * n
    d0 = den.coeffs[0]
    for i in range(n):
        acc = num.coeffs[i]
        for j in range(1, i + 1):
            acc -= den.coeffs[j] * q[i - j]
        q[i] = acc / d0
    return FormalSeries(tuple(q), "p")


def cos_series(m: int, order: int) -> FormalSeries:
    """Truncation of cos(m p) to the given order (number of coefficients)."""
    out = [Fraction(0)] * order
    fact = Fraction(1)
    for i in range(order):
        if i > 0:
            fact *= i
        if i % 2 == 0:
            out[i] = Fraction((-1) ** (i // 2) * m**i) / fact
    return FormalSeries(tuple(out), "p")


def sin_series(m: int, order: int) -> FormalSeries:
    """Truncation of sin(m p) to the given order."""
    out = [Fraction(0)] * order
    fact = Fraction(1)
    for i in range(order):
        if i > 0:
            fact *= i
        if i % 2 == 1:
            out[i] = Fraction((-1) ** ((i - 1) // 2) * m**i) / fact
    return FormalSeries(tuple(out), "p")
