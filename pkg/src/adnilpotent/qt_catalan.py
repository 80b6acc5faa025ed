"""The (q,t)-Catalan polynomial counting ideals by class (``q``) and dimension
(``t``), and the extremal dimension/class results it encodes."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import isqrt

from .enumeration import check_feasible
from .exact_math import BiPoly, binomial, t_binomial
from .nilpotence import TouchSequence, class_of_parts, interval_bounds, partition_from_touch, rectangles
from .parallel import map_shards
from .staircase import StaircasePartition, iter_parts


def qt_catalan_formula(n: int) -> BiPoly:
    """Sum over touch sequences of ``q^k`` times a product of shifted Gaussian
    binomials, one per rectangle of the interval.

    The factor for ``j`` is ``t^{i_{j+1}(i_{j+3} - i_{j+2})} [i_{j+2}-i_j-1, i_{j+1}-i_j]_t``
    with ``i_0 = 0``, ``i_{k+1} = n+1``, ``i_{k+2} = n+2``.  It depends on four
    consecutive indices, so the sum is evaluated as a memoized transfer over
    triples rather than over all ``2^n`` subsets.
    """
    if n < 1:
        raise ValueError("need n >= 1")

    @lru_cache(maxsize=None)
    def tail(a: int, b: int, c: int) -> BiPoly:
        # factors j, j+1, ... given (i_j, i_{j+1}, i_{j+2}) = (a, b, c)
        gauss = t_binomial(c - a - 1, b - a)
        if c == n + 1:
            return BiPoly.from_t_poly(gauss, 1, b)
        total = BiPoly()
        for d in range(c + 1, n + 2):
            total = total + BiPoly.from_t_poly(gauss, 1, b * (d - c)) * tail(b, c, d)
        return total

    total = BiPoly.one()
    for b in range(1, n + 1):
        for c in range(b + 1, n + 2):
            total = total + tail(0, b, c)
    return total


def qt_formula_terms(n: int) -> BiPoly:
    """The same sum, expanded subset by subset.  Exponential; reference use."""
    total = BiPoly()
    for k in range(n + 1):
        for mid in combinations(range(1, n + 1), k):
            i = [0, *mid, n + 1, n + 2]
            term = BiPoly({(k, 0): 1})
            for j in range(k):
                g = t_binomial(i[j + 2] - i[j] - 1, i[j + 1] - i[j])
                term = term * BiPoly.from_t_poly(g, 0, i[j + 1] * (i[j + 3] - i[j + 2]))
            total = total + term
    return total


def _qt_shard(n: int, first: int) -> Counter:
    return Counter((class_of_parts(p), sum(p)) for p in iter_parts(n, first))


def qt_catalan_bruteforce(n: int, jobs: int | None = 1, force: bool = False) -> BiPoly:
    """``sum q^class t^dimension`` over all ideals, by enumeration."""
    if n < 1:
        raise ValueError("need n >= 1")
    check_feasible(n, force)
    return BiPoly(map_shards(_qt_shard, n, jobs))


def _check_class(n: int, k: int) -> None:
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"class {k} out of range 0..{n}")


def theta_min(n: int, k: int) -> int:
    """Smallest dimension of an ideal of class ``k``."""
    _check_class(n, k)
    if k == 0:
        return 0
    return binomial(k + 1, 2) + (k - 1) * (n - k)


def theta_max(n: int, k: int) -> int:
    """Largest dimension of an ideal of class ``k``."""
    _check_class(n, k)
    if k == 0:
        return 0
    f = (n + 1) // (k + 1)
    return binomial(n + 1, 2) - (n + 1) * f + (k + 1) * binomial(f + 1, 2)


def _check_dim(n: int, a: int) -> None:
    if n < 1 or not 0 <= a <= n * (n + 1) // 2:
        raise ValueError(f"dimension {a} out of range 0..{n * (n + 1) // 2}")


def Theta_min(n: int, a: int) -> int:
    """Smallest class among ideals of dimension ``a``."""
    _check_dim(n, a)
    k = 0
    while theta_max(n, k) < a:
        k += 1
    return k


def Theta_max(n: int, a: int) -> int:
    """Largest class among ideals of dimension ``a``:
    ``floor(n + 3/2 - sqrt(4n^2 + 4n + 9 - 8a) / 2)`` in integer arithmetic."""
    _check_dim(n, a)
    disc = 4 * n * n + 4 * n + 9 - 8 * a
    s = isqrt(disc)
    m = 2 * n + 3 - s
    if s * s == disc:
        return m // 2
    # sqrt(disc) lies strictly between s and s + 1
    return (m - 1) // 2


def Theta_max_search(n: int, a: int) -> int:
    """``max{k : theta_min(n, k) <= a}``, by direct search."""
    _check_dim(n, a)
    return max(k for k in range(n + 1) if theta_min(n, k) <= a)


@dataclass(frozen=True)
class CornerComposition:
    """Composition ``(mu_0, ..., mu_k)`` of ``n + 1`` encoding the partition
    whose outer corners all lie on the antidiagonal.

    The distinct nonzero parts are ``v_1 > ... > v_k`` with
    ``v_1 = n + 1 - mu_0``, ``v_{s+1} = v_s - mu_s`` and ``v_k = mu_k``; part
    ``v_s`` is repeated ``mu_{s-1}`` times.
    """

    n: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts) or sum(self.parts) != self.n + 1:
            raise ValueError(f"{self.parts} is not a composition of {self.n + 1} into positive parts")

    @property
    def k(self) -> int:
        return len(self.parts) - 1

    def touch(self) -> TouchSequence:
        acc, out = 0, []
        for p in reversed(self.parts[1:]):
            acc += p
            out.append(acc)
        return TouchSequence(self.n, tuple(out))

    def to_partition(self) -> StaircasePartition:
        return interval_bounds(self.touch())[1]

    def size(self) -> int:
        return ((self.n + 1) ** 2 - sum(p * p for p in self.parts)) // 2


def compositions(total: int, count: int):
    """Compositions of ``total`` into ``count`` positive parts."""
    for cuts in combinations(range(1, total), count - 1):
        bounds = (0, *cuts, total)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(count))


def balanced_composition(n: int, k: int) -> CornerComposition:
    """``k + 1`` parts of sizes ``floor`` and ``ceil`` of ``(n+1)/(k+1)``, larger parts first."""
    f = (n + 1) // (k + 1)
    big = n + 1 - (k + 1) * f
    return CornerComposition(n, tuple([f + 1] * big + [f] * (k + 1 - big)))


def extremal_witness(n: int, k: int) -> tuple[StaircasePartition, StaircasePartition]:
    """Ideals of class ``k`` realizing the smallest and the largest dimension.

    The small one is the lower end of the interval for touch sequence
    ``(1, 2, ..., k)``; the large one comes from the balanced corner composition.
    """
    if n < 1 or not 1 <= k <= n:
        raise ValueError(f"class {k} out of range 1..{n}")
    p_min = interval_bounds(TouchSequence(n, tuple(range(1, k + 1))))[0]
    p_max = balanced_composition(n, k).to_partition()
    return p_min, p_max


def witness_of_dimension(n: int, k: int, a: int) -> StaircasePartition | None:
    """Some ideal of class ``k`` and dimension ``a``, or ``None``.

    Each interval fills its rectangles independently, so its dimensions form
    a contiguous range; pick an interval covering ``a`` and fill greedily.
    """
    for mid in combinations(range(1, n + 1), k):
        ts = TouchSequence(n, mid)
        lo, hi = interval_bounds(ts)
        if not lo.size <= a <= hi.size:
            continue
        need = a - lo.size
        fills = []
        for rect in rectangles(ts):
            fill = []
            for _ in range(rect.rows):
                v = min(need, rect.cols)
                fill.append(v)
                need -= v
            fills.append(fill)
        return partition_from_touch(ts, fills)
    return None
