"""Dirichlet-type residue tables and the L-values that price the tails.

The mod-12 character chi is the real primitive character (+1 at 1,11; -1 at
5,7).  The two mod-60 tables are sign patterns read off residue classes; they
are not multiplicative and are kept as plain tables on purpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from mpmath import mp

from .series import bernoulli_poly

__all__ = [
    "DirichletCharacter",
    "chi12",
    "chi60",
    "l_value_exact",
    "l_series_partial",
]


@dataclass(frozen=True)
class DirichletCharacter:
    """Periodic sign table: value at n is table[n % modulus]."""

    modulus: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1 or len(self.table) != self.modulus:
            raise ValueError("table length must equal the modulus")
        if any(v not in (-1, 0, 1) for v in self.table):
            raise ValueError("table entries must be in {-1, 0, 1}")

    def __call__(self, n: int) -> int:
        return self.table[n % self.modulus]


def _table(modulus: int, plus: tuple[int, ...], minus: tuple[int, ...]) -> DirichletCharacter:
    tab = [0] * modulus
    for r in plus:
        tab[r] = 1
    for r in minus:
        tab[r] = -1
    return DirichletCharacter(modulus, tuple(tab))


_CHI12 = _table(12, plus=(1, 11), minus=(5, 7))
_CHI60_1 = _table(60, plus=(37, 43, 47, 53), minus=(7, 13, 17, 23))
_CHI60_2 = _table(60, plus=(31, 41, 49, 59), minus=(1, 11, 19, 29))


def chi12() -> DirichletCharacter:
    return _CHI12


def chi60(which: int) -> DirichletCharacter:
    """Sign tables mod 60 used by the weight-3 model; which is 1 or 2."""
    if which == 1:
        return _CHI60_1
    if which == 2:
        return _CHI60_2
    raise ValueError("which must be 1 or 2")


def l_value_exact(n: int) -> tuple[Fraction, int]:
    """Exact even L-value of the mod-12 character.

    Returns (r, s) with s = 2n + 2 and L(s, chi) = r * pi^s / sqrt(3).
    The rational r comes from the Bernoulli-polynomial difference
    B_s(1/12) - B_s(5/12):

        r = (-4)^n / ((2n+1)! (n+1)) * (B_{2n+2}(1/12) - B_{2n+2}(5/12))

    so e.g. n=0 gives r = 1/6, i.e. L(2, chi) = pi^2 / (6 sqrt 3).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    s = 2 * n + 2
    delta = bernoulli_poly(s, Fraction(1, 12)) - bernoulli_poly(s, Fraction(5, 12))
    r = Fraction((-4) ** n, factorial(2 * n + 1) * (n + 1)) * delta
    return r, s


def l_series_partial(chi: DirichletCharacter, s: float, terms: int):
    """Partial sum of sum_{n>=1} chi(n) n^{-s} with a certified tail bound.

    Returns (value, tail_bound); the tail bound is the crude integral
    comparison modulus * terms^{1-s} / (s-1), valid for s > 1.  Rejects
    s <= 1 where the bound (and for these tables the series) degenerates.
    """
    if not s > 1:
        raise ValueError("need s > 1")
    if terms < 1:
        raise ValueError("need at least one term")
    sm = mp.mpf(s)
    total = mp.mpf(0)
    for n in range(1, terms + 1):
        v = chi(n)
        if v:
            total += v * mp.power(n, -sm)
    tail = chi.modulus * mp.power(terms, 1 - sm) / (sm - 1)
    return total, tail
