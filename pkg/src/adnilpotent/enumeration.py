"""Counting ideals by class of nilpotence.

Each count is produced by several unrelated routes (index sums, two
determinants, a reflection-principle sum, a Chebyshev quotient, a continued
fraction, and brute force) so that they can be checked against each other.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from .exact_math import (
    TruncatedSeries,
    UniPoly,
    binomial,
    chebyshev_U,
    det_exact,
    fibonacci,
    series_divide,
    series_invert,
)
from .nilpotence import class_of_parts
from .parallel import map_shards
from .staircase import iter_parts

BRUTE_CAP_ENV = "ADNIL_BRUTE_CAP"
DEFAULT_BRUTE_CAP = 12


class InfeasibleError(RuntimeError):
    """Brute force requested above the configured rank bound."""


def brute_cap() -> int:
    raw = os.environ.get(BRUTE_CAP_ENV)
    return int(raw) if raw else DEFAULT_BRUTE_CAP


def check_feasible(n: int, force: bool = False) -> None:
    cap = brute_cap()
    if n > cap and not force:
        raise InfeasibleError(
            f"brute force at n={n} exceeds the bound {cap}; "
            f"pass force=True (CLI: --force) or raise {BRUTE_CAP_ENV}"
        )


def _chain_sum(n: int, length: int, strict: bool) -> int:
    """Sum over ``0 = i_0 (<|<=) i_1 ... i_length (<|<=) i_{length+1} = n+1`` of
    ``prod_j C(i_{j+2} - i_j - 1, i_{j+1} - i_j)``.

    Each factor only sees three consecutive indices, so the sum is a transfer
    over pairs ``(i_j, i_{j+1})`` instead of an enumeration of all sequences.
    """
    if length == 0:
        return 1
    top = n + 1
    step = 1 if strict else 0
    hi = n if strict else n + 1

    @lru_cache(maxsize=None)
    def tail(a: int, b: int, remaining: int) -> int:
        # a = i_j, b = i_{j+1}; `remaining` free indices still to place after b
        if remaining == 0:
            return binomial(top - a - 1, b - a)
        total = 0
        for c in range(b + step, hi + 1):
            w = binomial(c - a - 1, b - a)
            if w:
                total += w * tail(b, c, remaining - 1)
        return total

    return sum(tail(0, b, length - 1) for b in range(step, hi + 1))


def count_exact_class(n: int, k: int) -> int:
    """Ideals of rank ``n`` with class of nilpotence exactly ``k``."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if k > n:
        return 0
    return _chain_sum(n, k, strict=True)


def count_atmost_sum(n: int, h: int) -> int:
    """Ideals with class at most ``h``, from the weakly increasing index sum."""
    if n < 1 or h < 0:
        raise ValueError("need n >= 1 and h >= 0")
    return _chain_sum(n, h, strict=False)


def index_sequences(n: int, length: int, strict: bool) -> Iterator[tuple[int, ...]]:
    """All ``(i_0, ..., i_{length+1})`` with the fixed endpoints ``0`` and ``n+1``."""
    if strict:
        inner = combinations(range(1, n + 1), length)
    else:
        inner = combinations_with_replacement(range(0, n + 2), length)
    for mid in inner:
        yield (0, *mid, n + 1)


def chain_term(seq: tuple[int, ...]) -> int:
    out = 1
    for j in range(len(seq) - 2):
        out *= binomial(seq[j + 2] - seq[j] - 1, seq[j + 1] - seq[j])
        if not out:
            break
    return out


def has_inner_repeat(seq: tuple[int, ...]) -> bool:
    """True if ``i_j == i_{j+1}`` somewhere past the leading run of zeros."""
    start = 0
    while start + 1 < len(seq) and seq[start + 1] == 0:
        start += 1
    return any(seq[j] == seq[j + 1] for j in range(start + 1, len(seq) - 1))


def atmost_matrix(n: int, h: int, variant: str) -> list[list[int]]:
    """The ``n x n`` matrices whose determinants count ideals of class ``<= h``.

    ``"4.4"``: entries ``C(i - max(0, j-h) + 1, j - i + 1)``;
    ``"4.5"``: entries ``C(i - j + h + 1, j - i + 1)``.
    """
    rng = range(1, n + 1)
    if variant == "4.4":
        return [[binomial(i - max(0, j - h) + 1, j - i + 1) for j in rng] for i in rng]
    if variant == "4.5":
        return [[binomial(i - j + h + 1, j - i + 1) for j in rng] for i in rng]
    raise ValueError(f"unknown determinant variant {variant!r}; use '4.4' or '4.5'")


def count_atmost_det(n: int, h: int, variant: str = "4.5") -> int:
    if n < 1 or h < 0:
        raise ValueError("need n >= 1 and h >= 0")
    return det_exact(atmost_matrix(n, h, variant))


def reflection_terms(n: int, h: int) -> list[tuple[int, Fraction]]:
    """Nonzero summands ``(k, (2k(h+3)+1)/(2n+3) * C(2n+3, n+1-k(h+3)))``."""
    period = h + 3
    bound = (2 * n + 3) // period + 1
    out = []
    for k in range(-bound, bound + 1):
        b = binomial(2 * n + 3, n + 1 - k * period)
        if b and 0 <= n + 1 - k * period:
            out.append((k, Fraction(2 * k * period + 1, 2 * n + 3) * b))
    return out


def count_atmost_reflection(n: int, h: int) -> int:
    if n < 1 or h < 0:
        raise ValueError("need n >= 1 and h >= 0")
    total = sum((v for _, v in reflection_terms(n, h)), Fraction(0))
    if total.denominator != 1:
        raise ArithmeticError(f"reflection sum is not integral at n={n}, h={h}: {total}")
    return total.numerator


def chebyshev_numerator(m: int) -> UniPoly:
    """``x**(m/2) * U_m(1/(2 sqrt x))`` as an integer polynomial in ``x``."""
    u = chebyshev_U(m)
    coeffs = [u[m - 2 * j] // 2 ** (m - 2 * j) for j in range(m // 2 + 1)]
    return UniPoly(coeffs, "x")


def series_chebyshev(h: int, order: int) -> TruncatedSeries:
    """``1 + sum_n alpha_n(h) x^{n+1}`` as the quotient of Chebyshev polynomials."""
    if h < 0 or order < 1:
        raise ValueError("need h >= 0 and order >= 1")
    num = TruncatedSeries.from_poly(chebyshev_numerator(h + 1), order)
    den = TruncatedSeries.from_poly(chebyshev_numerator(h + 2), order)
    return series_divide(num, den)


def series_contfrac(h: int, order: int) -> TruncatedSeries:
    """``1/(1 - x/(1 - x/(... /(1 - x))))`` with ``h + 1`` occurrences of ``x``."""
    if h < 0 or order < 1:
        raise ValueError("need h >= 0 and order >= 1")
    one = TruncatedSeries([1], order)
    x = TruncatedSeries([0, 1], order)
    den = one - x
    for _ in range(h):
        den = one - x * series_invert(den)
    return series_invert(den)


@dataclass(frozen=True)
class CorollaryCounts:
    abelian: int
    atmost2: int
    atmost3: int


def corollary_counts(n: int) -> CorollaryCounts:
    """Closed forms for class at most 1, 2, 3: ``2^n``, ``F_{2n}``, ``(3^n+1)/2``."""
    if n < 1:
        raise ValueError("need n >= 1")
    return CorollaryCounts(2**n, fibonacci(2 * n), (3**n + 1) // 2)


def _class_shard(n: int, first: int) -> Counter:
    return Counter(class_of_parts(p) for p in iter_parts(n, first))


def classify_bruteforce(n: int, jobs: int | None = 1, force: bool = False) -> dict[int, int]:
    """Tally of ideals by class of nilpotence, by enumerating them all."""
    if n < 1:
        raise ValueError("need n >= 1")
    check_feasible(n, force)
    tally = map_shards(_class_shard, n, jobs)
    return {k: tally[k] for k in sorted(tally)}


def atmost_from_tally(tally: dict[int, int], h: int) -> int:
    return sum(v for k, v in tally.items() if k <= h)


METHODS = ("sum", "det44", "det45", "reflection", "genfun", "contfrac", "brute")


def count_atmost(n: int, h: int, method: str = "sum", jobs: int | None = 1, force: bool = False) -> int:
    """Ideals with class ``<= h`` via the named method."""
    if h < 0:
        return 0
    if method == "sum":
        return count_atmost_sum(n, h)
    if method == "det44":
        return count_atmost_det(n, h, "4.4")
    if method == "det45":
        return count_atmost_det(n, h, "4.5")
    if method == "reflection":
        return count_atmost_reflection(n, h)
    if method == "genfun":
        return series_chebyshev(h, n + 1)[n + 1]
    if method == "contfrac":
        return series_contfrac(h, n + 1)[n + 1]
    if method == "brute":
        return atmost_from_tally(classify_bruteforce(n, jobs, force), h)
    raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


def count_class(n: int, k: int, method: str = "sum", jobs: int | None = 1, force: bool = False) -> int:
    """Ideals with class exactly ``k``; non-sum methods go through differences."""
    if method == "sum":
        return count_exact_class(n, k)
    if method == "brute":
        return classify_bruteforce(n, jobs, force).get(k, 0)
    return count_atmost(n, k, method) - count_atmost(n, k - 1, method)
