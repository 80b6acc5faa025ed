"""Ad-nilpotent ideals of the Borel subalgebra of sl(n+1) as staircase partitions.

The positive root ``alpha_i + ... + alpha_{n-j+1}`` sits in cell ``(i, j)`` of
the staircase diagram ``(n, n-1, ..., 1)``; an ideal is a set of cells forming
a Ferrers diagram inside the staircase.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .exact_math import catalan


class PartitionError(ValueError):
    """Raised when a part list does not describe a staircase partition."""


@dataclass(frozen=True, order=True)
class StaircasePartition:
    """Partition with exactly ``n`` parts, contained in ``(n, n-1, ..., 1)``."""

    n: int
    parts: tuple[int, ...]

    def __post_init__(self):
        _check(self.parts, self.n)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        """1-indexed part; rows past ``n`` read as 0."""
        return self.parts[i - 1] if 1 <= i <= self.n else 0

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def is_zero(self) -> bool:
        return not self.parts or self.parts[0] == 0

    def contains(self, other: "StaircasePartition") -> bool:
        """Cell-wise inclusion ``other <= self``."""
        return self.n == other.n and all(a >= b for a, b in zip(self.parts, other.parts))


def _check(parts: Sequence[int], n: int) -> None:
    if n < 0:
        raise PartitionError(f"rank must be non-negative, got {n}")
    if len(parts) != n:
        raise PartitionError(f"expected {n} parts, got {len(parts)}")
    prev = None
    for i, p in enumerate(parts, start=1):
        if p < 0:
            raise PartitionError(f"part {i} is negative ({p})")
        if p > n - i + 1:
            raise PartitionError(f"part {i} = {p} exceeds staircase bound {n - i + 1}")
        if prev is not None and p > prev:
            raise PartitionError(f"parts not weakly decreasing at position {i} ({prev} < {p})")
        prev = p


def make_partition(parts: Sequence[int], n: int) -> StaircasePartition:
    """Validate ``parts`` and pad with zeros to exactly ``n`` parts."""
    if n < 1:
        raise PartitionError(f"rank must be positive, got {n}")
    parts = [int(p) for p in parts]
    while len(parts) > n and parts[-1] == 0:
        parts.pop()
    if len(parts) > n:
        raise PartitionError(f"more than {n} nonzero parts: {parts}")
    parts += [0] * (n - len(parts))
    return StaircasePartition(n, tuple(parts))


def parse_partition(text: str, n: int) -> StaircasePartition:
    """Parse the comma-separated literal used on the command line."""
    text = text.strip()
    try:
        parts = [int(tok) for tok in text.split(",") if tok.strip()] if text else []
    except ValueError as exc:
        raise PartitionError(f"cannot parse partition literal {text!r}") from exc
    return make_partition(parts, n)


def zero_partition(n: int) -> StaircasePartition:
    return StaircasePartition(n, (0,) * n)


def full_staircase(n: int) -> StaircasePartition:
    return StaircasePartition(n, tuple(range(n, 0, -1)))


def iter_parts(n: int, first_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Part tuples of every staircase partition of rank ``n``, lexicographically
    increasing.  ``first_part`` restricts to one shard (fixed ``lambda_1``)."""
    buf = [0] * n

    def rec(i: int, cap: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(buf)
            return
        for v in range(min(cap, n - i) + 1):
            buf[i] = v
            yield from rec(i + 1, v)

    if n == 0:
        yield ()
        return
    firsts = range(n + 1) if first_part is None else [first_part]
    for a in firsts:
        buf[0] = a
        yield from rec(1, a)


def shard_keys(n: int) -> list[int]:
    """Independent sub-ranges of the enumeration, keyed by the first part."""
    return list(range(n + 1))


def enumerate_all(n: int, first_part: int | None = None) -> Iterator[StaircasePartition]:
    """Every ideal of rank ``n`` exactly once, in lexicographic order of parts."""
    if n < 1:
        raise PartitionError(f"rank must be positive, got {n}")
    for parts in iter_parts(n, first_part):
        yield StaircasePartition(n, parts)


def count_all(n: int) -> int:
    """Number of ideals of rank ``n``: the Catalan number ``C_{n+1}``."""
    return catalan(n + 1)


@dataclass(frozen=True, order=True)
class RootCell:
    """Cell ``(row, col)`` of the staircase, i.e. the root
    ``alpha_row + ... + alpha_{n-col+1}``."""

    row: int
    col: int
    n: int

    def __post_init__(self):
        if not (1 <= self.row <= self.n and 1 <= self.col <= self.n - self.row + 1):
            raise PartitionError(f"cell ({self.row},{self.col}) outside staircase of rank {self.n}")

    @property
    def interval(self) -> tuple[int, int]:
        """Indices ``(a, b)`` of the simple roots ``alpha_a + ... + alpha_b``."""
        return (self.row, self.n - self.col + 1)

    def simple_root_coefficients(self) -> tuple[int, ...]:
        a, b = self.interval
        return tuple(1 if a <= r <= b else 0 for r in range(1, self.n + 1))

    def as_pair(self) -> tuple[int, int]:
        return (self.row, self.col)


def ideal_roots(p: StaircasePartition) -> frozenset[RootCell]:
    """The cells (roots) spanning the ideal."""
    return frozenset(RootCell(i, j, p.n) for i in range(1, p.n + 1) for j in range(1, p[i] + 1))


def corner_cells(p: StaircasePartition) -> list[RootCell]:
    """Cells with nothing to the right and nothing below, top to bottom."""
    return [RootCell(i, p[i], p.n) for i in range(1, p.n + 1) if p[i] > 0 and p[i + 1] < p[i]]


def from_corners(corners: Sequence[RootCell], n: int) -> StaircasePartition:
    """Smallest partition containing the given cells."""
    parts = [0] * n
    for c in corners:
        for i in range(c.row):
            parts[i] = max(parts[i], c.col)
    return StaircasePartition(n, tuple(parts))


def dimension(p: StaircasePartition) -> int:
    """Dimension of the ideal: the number of its root spaces, ``|lambda|``."""
    return p.size
