"""Exact-arithmetic checks for the formal series toolkit."""

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from borelsum.series import (
    BernoulliCache,
    FormalSeries,
    bernoulli_number,
    bernoulli_poly,
    borel_transform,
    cos_series,
    hadamard_product,
    series_product,
    series_quotient_even,
    sin_series,
)

# classic table, checked against the Akiyama-Tanigawa recurrence by hand
BERNOULLI_TABLE = {
    0: Fraction(1),
    1: Fraction(-1, 2),
    2: Fraction(1, 6),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
    12: Fraction(-691, 2730),
}

small_fractions = st.fractions(
    min_value=Fraction(-5), max_value=Fraction(5), max_denominator=12
)


@pytest.mark.parametrize("n,value", sorted(BERNOULLI_TABLE.items()))
def test_bernoulli_number_table(n, value):
    assert bernoulli_number(n) == value


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 21])
def test_bernoulli_number_odd_vanishes(n):
    assert bernoulli_number(n) == 0


def test_bernoulli_cache_grows_and_reuses():
    cache = BernoulliCache()
    assert bernoulli_number(20, cache) == Fraction(-174611, 330)
    assert cache.max_index >= 20
    assert bernoulli_number(4, cache) == Fraction(-1, 30)


@given(
    n=st.integers(min_value=1, max_value=12),
    x=small_fractions,
)
def test_bernoulli_poly_forward_difference(n, x):
    """B_n(x+1) - B_n(x) = n x^{n-1} characterises the polynomials."""
    lhs = bernoulli_poly(n, x + 1) - bernoulli_poly(n, x)
    assert lhs == n * x ** (n - 1)


@given(n=st.integers(min_value=0, max_value=12), x=small_fractions)
def test_bernoulli_poly_reflection(n, x):
    assert bernoulli_poly(n, 1 - x) == (-1) ** n * bernoulli_poly(n, x)


def test_bernoulli_poly_at_zero_gives_numbers():
    for n in range(0, 13):
        assert bernoulli_poly(n, 0) == bernoulli_number(n)


def test_formal_series_validation():
    with pytest.raises(ValueError):
        FormalSeries((Fraction(1),), "q")
    with pytest.raises(ValueError):
        FormalSeries((), "p")
    s = FormalSeries((Fraction(1), Fraction(2)), "p")
    assert s.order == 2
    assert s[1] == 2


def test_borel_transform_shifts_and_divides():
    src = FormalSeries(
        (Fraction(7), Fraction(1), Fraction(4), Fraction(9), Fraction(16)),
        "inverse-x",
    )
    out = borel_transform(src)
    assert out.variable_kind == "p"
    assert out.coeffs == (
        Fraction(1),
        Fraction(4, 1),
        Fraction(9, 2),
        Fraction(16, 6),
    )


def test_borel_transform_requires_inverse_series():
    with pytest.raises(ValueError):
        borel_transform(FormalSeries((Fraction(1), Fraction(2)), "p"))


@given(
    a=st.lists(small_fractions, min_size=1, max_size=6),
    b=st.lists(small_fractions, min_size=1, max_size=6),
)
def test_hadamard_product_commutes(a, b):
    f = FormalSeries(tuple(a), "p")
    g = FormalSeries(tuple(b), "p")
    left = hadamard_product(f, g)
    right = hadamard_product(g, f)
    assert left.coeffs == right.coeffs
    n = min(len(a), len(b))
    assert left.coeffs == tuple(a[i] * b[i] for i in range(n))


@given(
    a=st.lists(small_fractions, min_size=1, max_size=5),
    b=st.lists(small_fractions, min_size=1, max_size=5),
)
def test_series_product_matches_convolution(a, b):
    f = FormalSeries(tuple(a), "p")
    g = FormalSeries(tuple(b), "p")
    prod = series_product(f, g)
    n = min(len(a), len(b))
    for i in range(n):
        expect = sum(
            (a[j] * b[i - j] for j in range(i + 1) if j < len(a) and i - j < len(b)),
            Fraction(0),
        )
        assert prod[i] == expect


def test_quotient_times_denominator_restores_numerator():
    num = sin_series(2, 12)
    den = cos_series(3, 12)
    q = series_quotient_even(num, den)
    back = series_product(q, den)
    assert back.coeffs == num.coeffs[: back.order]


def test_quotient_rejects_zero_constant_term():
    with pytest.raises(ValueError):
        series_quotient_even(cos_series(1, 4), sin_series(1, 4))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_trig_series_coefficients(m):
    c = cos_series(m, 9)
    s = sin_series(m, 9)
    for i in range(9):
        if i % 2 == 0:
            assert c[i] == Fraction((-1) ** (i // 2) * m**i, factorial(i))
            assert s[i] == 0
        else:
            assert s[i] == Fraction((-1) ** ((i - 1) // 2) * m**i, factorial(i))
            assert c[i] == 0


def test_trig_pythagoras_through_truncation():
    order = 10
    c = cos_series(5, order)
    s = sin_series(5, order)
    total = [
        series_product(c, c)[i] + series_product(s, s)[i] for i in range(order)
    ]
    assert total[0] == 1
    assert all(v == 0 for v in total[1:])
