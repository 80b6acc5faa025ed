from __future__ import annotations

import pytest

from adnilpotent.exact_math import BiPoly, catalan
from adnilpotent.nilpotence import class_fast
from adnilpotent.qt_catalan import (
    CornerComposition,
    Theta_max,
    Theta_max_search,
    Theta_min,
    balanced_composition,
    compositions,
    extremal_witness,
    qt_catalan_bruteforce,
    qt_catalan_formula,
    qt_formula_terms,
    theta_max,
    theta_min,
    witness_of_dimension,
)
from adnilpotent.staircase import enumerate_all, full_staircase

C2 = BiPoly({(0, 0): 1, (1, 1): 1, (1, 2): 2, (2, 3): 1})


def test_small_polynomials():
    assert qt_catalan_formula(1) == BiPoly({(0, 0): 1, (1, 1): 1})
    assert qt_catalan_formula(2) == C2
    assert str(qt_catalan_formula(2)) == "1 + qt + 2qt^2 + q^2t^3"
    assert qt_catalan_formula(4).evaluate(1, 1) == 42
    assert qt_catalan_bruteforce(2) == C2
    assert qt_catalan_bruteforce(1) == BiPoly({(0, 0): 1, (1, 1): 1})
    assert qt_catalan_bruteforce(3).evaluate(1, 1) == 14


@pytest.mark.parametrize("n", range(1, 10))
def test_formula_matches_bruteforce(n):
    assert qt_catalan_formula(n) == qt_catalan_bruteforce(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_transfer_matches_subset_sum(n):
    assert qt_catalan_formula(n) == qt_formula_terms(n)


@pytest.mark.parametrize("n", range(1, 16))
def test_catalan_specialization(n):
    assert qt_catalan_formula(n).evaluate(1, 1) == catalan(n + 1)


def test_theta_examples():
    for n in range(1, 12):
        assert theta_min(n, 1) == 1
        assert theta_max(n, n) == n * (n + 1) // 2
        assert theta_min(n, 0) == theta_max(n, 0) == 0
    assert theta_min(13, 3) == 26
    assert theta_min(3, 3) == 6
    assert theta_max(9, 3) == 37
    assert theta_max(3, 1) == 4
    assert theta_max(13, 3) == 73
    with pytest.raises(ValueError):
        theta_min(3, 4)
    with pytest.raises(ValueError):
        theta_max(3, -1)


def test_Theta_examples():
    assert Theta_min(3, 3) == 1
    assert Theta_min(3, 6) == 3
    assert Theta_max(3, 3) == 1
    assert Theta_max(3, 6) == 3
    assert Theta_max(13, 26) == 3
    for n in range(1, 8):
        assert Theta_min(n, 0) == Theta_max(n, 0) == 0
    with pytest.raises(ValueError):
        Theta_max(3, 7)


@pytest.mark.parametrize("n", range(1, 40))
def test_Theta_max_closed_form_matches_search(n):
    for a in range(n * (n + 1) // 2 + 1):
        assert Theta_max(n, a) == Theta_max_search(n, a)


@pytest.mark.parametrize("n", range(1, 10))
def test_extrema_against_bruteforce(n):
    poly = qt_catalan_bruteforce(n)
    by_class: dict[int, list[int]] = {}
    by_dim: dict[int, list[int]] = {}
    for k, a in poly.terms:
        by_class.setdefault(k, []).append(a)
        by_dim.setdefault(a, []).append(k)
    for k, ds in by_class.items():
        assert (theta_min(n, k), theta_max(n, k)) == (min(ds), max(ds))
        # every dimension in between occurs
        assert sorted(ds) == list(range(min(ds), max(ds) + 1))
    for a, ks in by_dim.items():
        assert (Theta_min(n, a), Theta_max(n, a)) == (min(ks), max(ks))


def test_witness_examples():
    lo, hi = extremal_witness(3, 3)
    assert lo == hi == full_staircase(3)
    _, hi = extremal_witness(9, 3)
    assert hi.size == 37 and class_fast(hi) == 3
    lo, _ = extremal_witness(13, 3)
    assert lo.size == 26 and class_fast(lo) == 3


@pytest.mark.parametrize("n", range(1, 14))
def test_witnesses_verify(n):
    for k in range(1, n + 1):
        lo, hi = extremal_witness(n, k)
        assert (class_fast(lo), lo.size) == (k, theta_min(n, k))
        assert (class_fast(hi), hi.size) == (k, theta_max(n, k))


def test_balanced_composition():
    assert sorted(balanced_composition(9, 3).parts) == [2, 2, 3, 3]
    assert balanced_composition(9, 3).size() == 37


@pytest.mark.parametrize("n", range(1, 9))
def test_corner_compositions(n):
    # every composition gives a partition of the stated size with all outer
    # corners on the antidiagonal, hence class = number of parts - 1
    for count in range(2, n + 2):
        for parts in compositions(n + 1, count):
            c = CornerComposition(n, parts)
            p = c.to_partition()
            assert p.size == c.size()
            assert class_fast(p) == c.k


@pytest.mark.parametrize("n", range(1, 8))
def test_balanced_is_best_composition(n):
    for k in range(1, n + 1):
        best = max(CornerComposition(n, c).size() for c in compositions(n + 1, k + 1))
        assert best == balanced_composition(n, k).size() == theta_max(n, k)


def test_corner_composition_validation():
    with pytest.raises(ValueError):
        CornerComposition(3, (2, 1))
    with pytest.raises(ValueError):
        CornerComposition(3, (4, 0))


@pytest.mark.parametrize("n", range(1, 8))
def test_witness_of_dimension(n):
    pairs = {(class_fast(p), p.size) for p in enumerate_all(n)}
    for k in range(n + 1):
        for a in range(n * (n + 1) // 2 + 1):
            w = witness_of_dimension(n, k, a)
            assert (w is not None) == ((k, a) in pairs)
            if w is not None:
                assert (class_fast(w), w.size) == (k, a)
