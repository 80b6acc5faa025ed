from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adnilpotent.exact_math import (
    BiPoly,
    TruncatedSeries,
    UniPoly,
    binomial,
    catalan,
    chebyshev_U,
    det_cofactor,
    det_exact,
    fibonacci,
    series_divide,
    series_invert,
    t_binomial,
)


def test_binomial_examples():
    assert binomial(5, 2) == 10
    assert binomial(-1, 0) == 1
    assert binomial(3, 5) == 0


def test_binomial_convention_edges():
    # n = 0 wins over everything, negative n is zero, negative m with n > 0 is zero
    assert binomial(-7, 0) == 1
    assert binomial(4, -1) == 0
    assert binomial(-3, 2) == 0
    assert binomial(0, 0) == 1


@given(st.integers(0, 60), st.integers(0, 60))
def test_binomial_matches_math_comb(m, n):
    assert binomial(m, n) == math.comb(m, n)


@given(st.integers(0, 60), st.integers(0, 60))
def test_binomial_symmetry(m, n):
    if n <= m:
        assert binomial(m, n) == binomial(m, m - n)


def test_catalan_and_fibonacci():
    assert [catalan(m) for m in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert fibonacci(0) == 1
    assert fibonacci(1) == 1
    assert fibonacci(4) == 5
    assert fibonacci(6) == 13
    assert fibonacci(10) == 89


def test_t_binomial_examples():
    assert t_binomial(2, 1) == UniPoly([1, 1], "t")
    assert str(t_binomial(2, 1)) == "1 + t"
    for m in (-3, 0, 5):
        assert t_binomial(m, 0) == UniPoly([1], "t")
    assert t_binomial(1, 2).is_zero()


@given(st.integers(0, 14), st.integers(0, 14))
def test_t_binomial_at_one_is_binomial(m, n):
    assert t_binomial(m, n)(1) == binomial(m, n)


@given(st.integers(1, 12), st.integers(1, 12))
def test_t_binomial_is_palindromic(m, n):
    c = list(t_binomial(m, n))
    assert c == c[::-1]


def test_unipoly_arithmetic():
    x = UniPoly([0, 1])
    p = (x + 1) * (x - 1)
    assert p == UniPoly([-1, 0, 1])
    assert p.degree == 2
    assert (p - p).degree == -1
    assert p(3) == 8
    assert str(UniPoly([], "t")) == "0"


def test_chebyshev_examples():
    assert chebyshev_U(0) == UniPoly([1])
    assert chebyshev_U(1) == UniPoly([0, 2])
    assert chebyshev_U(2) == UniPoly([-1, 0, 4])


@pytest.mark.parametrize("n", range(2, 31))
def test_chebyshev_recurrence(n):
    x2 = UniPoly([0, 2])
    assert chebyshev_U(n) == x2 * chebyshev_U(n - 1) - chebyshev_U(n - 2)


def test_series_invert_examples():
    assert list(series_invert(TruncatedSeries([1, -1], 4))) == [1, 1, 1, 1, 1]
    assert list(series_invert(TruncatedSeries([1, -3, 1], 4))) == [1, 3, 8, 21, 55]
    assert list(series_invert(TruncatedSeries([1], 6))) == [1, 0, 0, 0, 0, 0, 0]


def test_series_invert_needs_unit():
    with pytest.raises(ValueError):
        series_invert(TruncatedSeries([2, 1], 3))


@given(st.lists(st.integers(-5, 5), min_size=0, max_size=6), st.sampled_from([1, -1]), st.integers(1, 10))
def test_series_invert_roundtrip(tail, c0, order):
    s = TruncatedSeries([c0, *tail], order)
    prod = s * series_invert(s)
    assert list(prod) == [1] + [0] * order


def test_series_divide():
    num = TruncatedSeries([1, -2], 5)
    den = TruncatedSeries([1, -3, 1], 5)
    assert list(series_divide(num, den)) == [1, 1, 2, 5, 13, 34]


def test_det_examples():
    assert det_exact([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert det_exact([[1, 2], [3, 4]]) == -2
    with pytest.raises(ValueError):
        det_exact([[1, 2]])
    with pytest.raises(ValueError):
        det_exact([])


def test_det_needs_pivoting():
    assert det_exact([[0, 1], [1, 0]]) == -1
    assert det_exact([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1
    assert det_exact([[1, 2], [2, 4]]) == 0


@settings(max_examples=200)
@given(st.integers(1, 4).flatmap(
    lambda k: st.lists(st.lists(st.integers(-9, 9), min_size=k, max_size=k), min_size=k, max_size=k)))
def test_det_matches_cofactor(m):
    assert det_exact(m) == det_cofactor(m)


def test_det_big_integers():
    big = 10**40
    assert det_exact([[big, 1], [1, big]]) == big * big - 1


def test_bipoly_basics():
    p = BiPoly({(0, 0): 1, (1, 1): 1, (1, 2): 2, (2, 3): 1})
    assert str(p) == "1 + qt + 2qt^2 + q^2t^3"
    assert p.evaluate(1, 1) == 5
    assert p.coefficient(1, 2) == 2
    assert p.coefficient(5, 5) == 0
    assert BiPoly.from_json(p.to_json()) == p
    assert p.specialize_q(1) == UniPoly([1, 1, 2, 1], "t")
    assert (p - p) == BiPoly()


@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-4, 4), max_size=5),
       st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-4, 4), max_size=5),
       st.integers(-2, 2), st.integers(-2, 2))
def test_bipoly_product_evaluates(a, b, q, t):
    pa, pb = BiPoly(a), BiPoly(b)
    assert (pa * pb).evaluate(q, t) == pa.evaluate(q, t) * pb.evaluate(q, t)
    assert (pa + pb).evaluate(q, t) == pa.evaluate(q, t) + pb.evaluate(q, t)
