from __future__ import annotations

from fractions import Fraction

import pytest

from adnilpotent.enumeration import (
    BRUTE_CAP_ENV,
    METHODS,
    InfeasibleError,
    atmost_matrix,
    chain_term,
    classify_bruteforce,
    corollary_counts,
    count_atmost,
    count_atmost_det,
    count_atmost_reflection,
    count_atmost_sum,
    count_class,
    count_exact_class,
    has_inner_repeat,
    index_sequences,
    reflection_terms,
    series_chebyshev,
    series_contfrac,
)
from adnilpotent.exact_math import catalan, fibonacci
from adnilpotent.nilpotence import class_fast
from adnilpotent.staircase import enumerate_all

# the determinant of (4.5) as printed does not count ideals; see the notes
DET45_MISPRINT = pytest.mark.xfail(strict=True, reason="printed (4.5) matrix is not the class <= h count")


def tally(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in enumerate_all(n):
        k = class_fast(p)
        out[k] = out.get(k, 0) + 1
    return out


def test_exact_class_examples():
    assert [count_exact_class(3, k) for k in range(4)] == [1, 7, 5, 1]
    assert count_exact_class(4, 1) == 15
    assert count_exact_class(2, 2) == 1
    assert count_exact_class(3, 7) == 0


def test_atmost_sum_examples():
    assert count_atmost_sum(3, 2) == 13
    assert all(count_atmost_sum(n, 0) == 1 for n in range(1, 10))
    assert count_atmost_sum(3, 3) == 14


def test_det_examples():
    assert count_atmost_det(3, 2, "4.4") == 13
    assert count_atmost_det(1, 1, "4.4") == 2
    assert count_atmost_det(1, 1, "4.5") == 2


@DET45_MISPRINT
def test_det45_example():
    assert count_atmost_det(3, 2, "4.5") == 13


def test_det45_values_as_printed():
    # frozen so a change in the matrix construction is noticed
    # entries C(i - j + 3, j - i + 1) worked by hand; det = 3*8 - 1*3
    assert atmost_matrix(3, 2, "4.5") == [[3, 1, 0], [1, 3, 1], [0, 1, 3]]
    assert [count_atmost_det(n, 2, "4.5") for n in (2, 3)] == [8, 21]


def test_atmost_matrix_rejects_unknown_variant():
    with pytest.raises(ValueError):
        atmost_matrix(3, 2, "4.7")


def test_reflection_examples():
    assert count_atmost_reflection(3, 2) == 13
    terms = dict(reflection_terms(3, 2))
    assert terms[0] == 14 and terms[-1] == -1
    assert count_atmost_reflection(3, 1) == 8
    for n in range(1, 11):
        for h in range(n, n + 3):
            assert count_atmost_reflection(n, h) == catalan(n + 1)


def test_reflection_terms_are_fractions():
    assert all(isinstance(v, Fraction) for _, v in reflection_terms(6, 3))


def test_series_examples():
    assert list(series_chebyshev(2, 5)) == [1, 1, 2, 5, 13, 34]
    assert list(series_chebyshev(0, 6)) == [1] * 7
    assert list(series_chebyshev(1, 5)) == [1, 1, 2, 4, 8, 16]
    assert list(series_contfrac(0, 6)) == [1] * 7
    assert list(series_contfrac(1, 5)) == [1, 1, 2, 4, 8, 16]
    assert series_contfrac(2, 5) == series_chebyshev(2, 5)


@pytest.mark.parametrize("h", range(0, 8))
def test_series_agree(h):
    assert series_chebyshev(h, 14) == series_contfrac(h, 14)


def test_corollary_examples():
    c = corollary_counts(3)
    assert (c.abelian, c.atmost2, c.atmost3) == (8, 13, 14)
    c = corollary_counts(1)
    assert (c.abelian, c.atmost2, c.atmost3) == (2, 2, 2)
    c = corollary_counts(5)
    assert (c.abelian, c.atmost2, c.atmost3) == (32, 89, 122)


@pytest.mark.parametrize("n", range(1, 21))
def test_corollary_against_sum(n):
    c = corollary_counts(n)
    assert count_atmost_sum(n, 1) == c.abelian == 2**n
    assert count_atmost_sum(n, 2) == c.atmost2 == fibonacci(2 * n)
    assert count_atmost_sum(n, 3) == c.atmost3


def test_bruteforce_examples():
    assert classify_bruteforce(3) == {0: 1, 1: 7, 2: 5, 3: 1}
    assert classify_bruteforce(1) == {0: 1, 1: 1}
    assert classify_bruteforce(2) == {0: 1, 1: 3, 2: 1}


def test_bruteforce_parallel_matches_serial():
    assert classify_bruteforce(7, jobs=2) == classify_bruteforce(7, jobs=1)


def test_bruteforce_cap(monkeypatch):
    monkeypatch.setenv(BRUTE_CAP_ENV, "3")
    with pytest.raises(InfeasibleError):
        classify_bruteforce(4)
    assert sum(classify_bruteforce(4, force=True).values()) == 42


@pytest.mark.parametrize("n", range(1, 9))
def test_methods_agree_with_enumeration(n):
    t = tally(n)
    for h in range(n + 1):
        want = sum(v for k, v in t.items() if k <= h)
        for m in METHODS:
            if m == "det45":
                continue
            assert count_atmost(n, h, m) == want, (n, h, m)
        assert count_exact_class(n, h) == t.get(h, 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_filtered_and_unfiltered_sums_agree(n):
    # the weakly increasing sum is unchanged if sequences with an interior
    # repeat are dropped, since those terms vanish
    for h in range(n + 1):
        seqs = list(index_sequences(n, h, strict=False))
        full = sum(chain_term(s) for s in seqs)
        filtered = sum(chain_term(s) for s in seqs if not has_inner_repeat(s))
        assert full == filtered == count_atmost_sum(n, h)


def test_count_class_by_difference():
    want = [tally(5).get(k, 0) for k in range(6)]
    for m in ("sum", "det44", "reflection", "genfun", "contfrac", "brute"):
        assert [count_class(5, k, m) for k in range(6)] == want, m


def test_unknown_method():
    with pytest.raises(ValueError):
        count_atmost(3, 2, "magic")


def test_large_n_is_exact():
    # far beyond floating point; the routes must still agree exactly
    n, h = 60, 4
    v = count_atmost_sum(n, h)
    assert v > 2**64
    assert v == count_atmost_reflection(n, h) == count_atmost_det(n, h, "4.4")
    assert v == series_chebyshev(h, n + 1)[n + 1] == series_contfrac(h, n + 1)[n + 1]
