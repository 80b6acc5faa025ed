"""Class of nilpotence: the tableau filling, the fast recursion, touch sequences,
the interval decomposition of the staircase lattice and the affine-permutation
window attached to each ideal.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

from .exact_math import binomial
from .staircase import StaircasePartition, make_partition


@dataclass(frozen=True)
class NilpotenceFilling:
    """``rows[i-1][j-1]`` is the largest ``m`` with the root of cell ``(i, j)``
    occurring in the ``m``-th term of the descending central series."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __call__(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def cells(self) -> Iterator[tuple[int, int, int]]:
        for i, row in enumerate(self.rows, start=1):
            for j, v in enumerate(row, start=1):
                yield i, j, v

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        width = max((len(str(v)) for _, _, v in self.cells()), default=1)
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self.rows)


def filling_rows(parts: Sequence[int]) -> list[list[int]]:
    """Raw filling of the staircase for a part tuple (0-indexed lists)."""
    n = len(parts)
    t = [[0] * (n - i) for i in range(n)]
    # each entry needs its right neighbours in the row and cells lower down in
    # the same column, so rows bottom-up and columns right-to-left suffice
    for i in range(n - 1, -1, -1):
        lam = parts[i]
        below = parts[i + 1] if i + 1 < n else 0
        row = t[i]
        for j in range(lam - 1, -1, -1):
            if j == lam - 1 and below < lam:
                row[j] = 1
                continue
            best = 0
            for k in range(j + 1, n - i):
                v = row[k] + t[n - k][j]
                if v > best:
                    best = v
            row[j] = best
    return t


def compute_filling(p: StaircasePartition) -> NilpotenceFilling:
    return NilpotenceFilling(p.n, tuple(tuple(r) for r in filling_rows(p.parts)))


def class_tableau(p: StaircasePartition) -> int:
    """Class of nilpotence read off the top-left entry of the filling."""
    if p.n == 0:
        return 0
    return filling_rows(p.parts)[0][0]


def class_of_parts(parts: Sequence[int]) -> int:
    """Fast recursion on a raw part tuple: strip to ``(lambda_{n+2-lambda_1}, ...,
    lambda_n)``, now of rank ``lambda_1 - 1``, and add one."""
    k = 0
    while parts and parts[0]:
        parts = parts[len(parts) + 1 - parts[0]:]
        k += 1
    return k


def reduce_once(p: StaircasePartition) -> StaircasePartition:
    """One step of the fast recursion, as a validated partition of the new rank."""
    if p.is_zero():
        raise ValueError("the zero partition has no reduction")
    a = p[1]
    return StaircasePartition(a - 1, tuple(p.parts[p.n + 1 - a:]))


def class_fast(p: StaircasePartition) -> int:
    k = 0
    while not p.is_zero():
        p = reduce_once(p)
        k += 1
    return k


@dataclass(frozen=True)
class TouchSequence:
    """Strictly increasing indices ``0 < i_1 < ... < i_k < n+1``."""

    n: int
    indices: tuple[int, ...]

    def __post_init__(self):
        prev = 0
        for v in self.indices:
            if not prev < v <= self.n:
                raise ValueError(f"invalid touch sequence {self.indices} for rank {self.n}")
            prev = v

    @property
    def k(self) -> int:
        return len(self.indices)

    def padded(self) -> list[int]:
        """``[i_0, i_1, ..., i_k, i_{k+1}]`` with ``i_0 = 0`` and ``i_{k+1} = n+1``."""
        return [0, *self.indices, self.n + 1]

    def __len__(self) -> int:
        return len(self.indices)


def touch_indices(parts: Sequence[int]) -> tuple[int, ...]:
    n = len(parts)
    out: list[int] = []
    i = parts[0] if n else 0
    while i:
        out.append(i)
        row = n - i + 2
        i = parts[row - 1] if row <= n else 0
    return tuple(reversed(out))


def touch_sequence(p: StaircasePartition) -> TouchSequence:
    """Indices where the zig-zag line meets the antidiagonal ``x + y = n + 1``."""
    return TouchSequence(p.n, touch_indices(p.parts))


def _bounds_parts(n: int, idx: Sequence[int]) -> tuple[list[int], list[int]]:
    k = len(idx)
    if k == 0:
        return [0] * n, [0] * n
    i = [0, *idx, n + 1]
    upper: list[int] = []
    for j in range(k, 0, -1):
        upper += [i[j]] * (i[j + 1] - i[j])
    upper += [0] * (i[1] - 1)
    lower = [i[k]]
    for j in range(k - 1, -1, -1):
        lower += [i[j]] * (i[j + 2] - i[j + 1])
    lower = (lower + [0] * n)[:n]
    return lower, upper


def interval_bounds(ts: TouchSequence) -> tuple[StaircasePartition, StaircasePartition]:
    """``(lower, upper)``: the smallest and largest partitions whose zig-zag line
    touches the antidiagonal exactly at ``ts``."""
    lo, hi = _bounds_parts(ts.n, ts.indices)
    return StaircasePartition(ts.n, tuple(lo)), StaircasePartition(ts.n, tuple(hi))


@dataclass(frozen=True)
class Rectangle:
    """Free region of an interval: rows ``first_row..first_row+rows-1`` and
    columns ``first_col..first_col+cols-1``."""

    first_row: int
    rows: int
    first_col: int
    cols: int


def rectangles(ts: TouchSequence) -> list[Rectangle]:
    """The independent rectangles of the interval for ``ts``, top to bottom.

    Rectangle ``j`` spans rows ``n-i_{j+1}+3 .. n-i_j+1`` and columns
    ``i_{j-1}+1 .. i_j``.
    """
    i = ts.padded()
    n, k = ts.n, ts.k
    return [
        Rectangle(n - i[j + 1] + 3, i[j + 1] - i[j] - 1, i[j - 1] + 1, i[j] - i[j - 1])
        for j in range(k, 0, -1)
    ]


def interval_size(ts: TouchSequence) -> int:
    """Product of binomials counting partitions in each rectangle."""
    i = ts.padded()
    out = 1
    for j in range(ts.k):
        out *= binomial(i[j + 2] - i[j] - 1, i[j + 1] - i[j])
    return out


def _partitions_in_box(rows: int, cols: int) -> Iterator[tuple[int, ...]]:
    if rows == 0:
        yield ()
        return

    def rec(r: int, cap: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if r == rows:
            yield tuple(acc)
            return
        for v in range(cap, -1, -1):
            acc.append(v)
            yield from rec(r + 1, v, acc)
            acc.pop()

    yield from rec(0, cols, [])


def iter_interval(ts: TouchSequence) -> Iterator[StaircasePartition]:
    """Enumerate the interval by filling each rectangle independently."""
    boxes = [list(_partitions_in_box(r.rows, r.cols)) for r in rectangles(ts)]
    for fills in product(*boxes):
        yield partition_from_touch(ts, fills)


def all_touch_sequences(n: int) -> Iterator[TouchSequence]:
    for k in range(n + 1):
        for combo in combinations(range(1, n + 1), k):
            yield TouchSequence(n, combo)


def decomposition(n: int) -> list[tuple[TouchSequence, StaircasePartition, StaircasePartition]]:
    """One interval ``[lower, upper]`` per subset of ``{1..n}``; together they
    partition the set of all ideals of rank ``n``."""
    if n < 1:
        raise ValueError("rank must be positive")
    out = []
    for ts in all_touch_sequences(n):
        lo, hi = interval_bounds(ts)
        out.append((ts, lo, hi))
    return out


@dataclass(frozen=True)
class AffineWindow:
    """Window ``(w^{-1}(1), ..., w^{-1}(n+1))`` of an affine permutation."""

    n: int
    values: tuple[int, ...]

    def sum_ok(self) -> bool:
        return sum(self.values) == (self.n + 2) * (self.n + 1) // 2

    def residues_ok(self) -> bool:
        return len({v % (self.n + 1) for v in self.values}) == self.n + 1

    def __call__(self, i: int) -> int:
        """Value at any integer ``i``, using ``w(i + n + 1) = w(i) + n + 1``."""
        q, r = divmod(i - 1, self.n + 1)
        return self.values[r] + q * (self.n + 1)


def affine_window(p: StaircasePartition) -> AffineWindow:
    n = p.n
    t = filling_rows(p.parts)

    def tt(i: int, j: int) -> int:
        return t[i - 1][j - 1]

    values = []
    for i in range(1, n + 2):
        up = sum(tt(j, n - i + 2) for j in range(1, i))
        down = sum(tt(i, n - j + 2) for j in range(i + 1, n + 2))
        values.append(i + up - down)
    return AffineWindow(n, tuple(values))


def inversion_levels(p: StaircasePartition) -> tuple[tuple[tuple[int, int], int], ...]:
    """Pairs ``((i, j), h)`` with ``1 <= h <= t_{i,j}``: the inversions
    ``-tau_ij + h*delta``, with the imaginary root kept as the level ``h``."""
    f = compute_filling(p)
    return tuple(((i, j), h) for i, j, v in f.cells() for h in range(1, v + 1))


def inversion_table_ok(p: StaircasePartition) -> bool:
    """``floor((w^{-1}(j) - w^{-1}(i)) / (n+1)) == t_{i, n-j+2}`` for all ``i < j``."""
    n = p.n
    w = affine_window(p).values
    t = filling_rows(p.parts)
    for i in range(1, n + 2):
        for j in range(i + 1, n + 2):
            if (w[j - 1] - w[i - 1]) // (n + 1) != t[i - 1][n - j + 1]:
                return False
    return True


def partition_from_touch(ts: TouchSequence, fills: Sequence[Sequence[int]]) -> StaircasePartition:
    """Rebuild a partition from the rectangle contents (top rectangle first)."""
    lo, _ = interval_bounds(ts)
    parts = list(lo.parts)
    for rect, fill in zip(rectangles(ts), fills):
        if len(fill) != rect.rows:
            raise ValueError("rectangle fill has wrong number of rows")
        for off, v in enumerate(fill):
            parts[rect.first_row - 1 + off] = rect.first_col - 1 + v
    return make_partition(parts, ts.n)
