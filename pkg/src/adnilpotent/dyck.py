"""Dyck paths, their height and area, and two maps from ideals to paths.

``rotation_path`` reads the border of the Ferrers diagram (it turns dimension
into area); ``height_bijection`` grows a path rectangle by rectangle so that
class of nilpotence ``k`` becomes height ``k + 1``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .nilpotence import TouchSequence, partition_from_touch, rectangles, touch_sequence
from .staircase import StaircasePartition

UP, DOWN = "U", "D"
_ALIASES = {"U": UP, "D": DOWN, "3": UP, "4": DOWN, "u": UP, "d": DOWN}


class PathError(ValueError):
    """Raised for step sequences that are not Dyck paths."""


@dataclass(frozen=True)
class DyckPath:
    steps: str

    def __post_init__(self):
        level = 0
        for pos, s in enumerate(self.steps):
            if s == UP:
                level += 1
            elif s == DOWN:
                level -= 1
            else:
                raise PathError(f"invalid step {s!r} at position {pos}")
            if level < 0:
                raise PathError(f"path goes below the axis at step {pos}")
        if level != 0:
            raise PathError("path does not return to the axis")

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def levels(self) -> list[int]:
        """Ordinates of all ``2m + 1`` lattice points."""
        out = [0]
        for s in self.steps:
            out.append(out[-1] + (1 if s == UP else -1))
        return out

    def to_json(self) -> list[str]:
        return list(self.steps)


def parse_path(text: str | Sequence[str]) -> DyckPath:
    """Accept ``"UDUD"``, the digit form ``"3434"``, or a JSON array of steps."""
    if isinstance(text, str):
        raw = text.strip()
        if raw.startswith("["):
            try:
                seq = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise PathError(f"malformed JSON path: {exc}") from exc
        else:
            seq = list(raw)
    else:
        seq = list(text)
    try:
        steps = "".join(_ALIASES[str(s)] for s in seq)
    except KeyError as exc:
        raise PathError(f"invalid step {exc.args[0]!r}") from None
    return DyckPath(steps)


def height(p: DyckPath) -> int:
    return max(p.levels())


def twice_area(p: DyckPath) -> int:
    """Geometric area under the path with unit diagonal steps.

    Each step contributes the trapezoid ``(y_before + y_after) / 2``; the sum
    equals the sum of all vertex ordinates, which is an integer.
    """
    return sum(p.levels())


@dataclass(frozen=True)
class PathStats:
    height: int
    twice_area: int


def path_stats(p: DyckPath) -> PathStats:
    return PathStats(height(p), twice_area(p))


def iter_dyck_paths(semilength: int) -> Iterator[DyckPath]:
    """All Dyck paths with ``semilength`` up-steps."""
    buf: list[str] = []

    def rec(ups: int, downs: int) -> Iterator[str]:
        if ups == downs == semilength:
            yield "".join(buf)
            return
        if ups < semilength:
            buf.append(UP)
            yield from rec(ups + 1, downs)
            buf.pop()
        if downs < ups:
            buf.append(DOWN)
            yield from rec(ups, downs + 1)
            buf.pop()

    for s in rec(0, 0):
        yield DyckPath(s)


def border_word(parts: Sequence[int], width: int) -> str:
    """Border of a diagram inside a box of ``width`` columns, read from the
    top-right corner to the bottom-left as letters ``l`` (left) and ``d`` (down).

    Row ``r`` contributes ``(previous - parts[r])`` lefts then a down, starting
    from ``previous = width``; the remaining ``parts[-1]`` lefts close the word.
    """
    out = []
    prev = width
    for v in parts:
        out.append("l" * (prev - v) + "d")
        prev = v
    out.append("l" * prev)
    return "".join(out)


def word_runs(word: str) -> list[int]:
    """``[a_0, ..., a_r]`` for a word ``l^{a_0} d l^{a_1} d ... d l^{a_r}``."""
    return [len(chunk) for chunk in word.split("d")]


def rotation_path(p: StaircasePartition) -> DyckPath:
    """Rotate the border of ``p`` (inside the staircase) into a path of length
    ``2n + 2``: the empty ideal gives the pyramid, the full staircase the zig-zag."""
    word = border_word(list(p.parts) + [0], p.n + 1)
    return DyckPath("".join(UP if c == "d" else DOWN for c in reversed(word)))


def _highest_peaks(steps: Sequence[str]) -> list[int]:
    """Positions ``i`` with ``steps[i:i+2] == UD`` at the maximal level."""
    level, top, peaks = 0, 0, []
    for i, s in enumerate(steps):
        level += 1 if s == UP else -1
        if s == UP and i + 1 < len(steps) and steps[i + 1] == DOWN:
            if level > top:
                top, peaks = level, [i]
            elif level == top:
                peaks.append(i)
    return peaks


def _insert_at_peaks(steps: list[str], counts: Sequence[int]) -> list[str]:
    peaks = _highest_peaks(steps)
    if len(peaks) != len(counts):
        raise AssertionError(
            f"stage needs {len(counts)} highest peaks but the path has {len(peaks)}"
        )
    out = list(steps)
    # right to left so earlier positions stay valid
    for pos, a in sorted(zip(peaks, counts), reverse=True):
        out[pos + 1:pos + 1] = [UP, DOWN] * a
    return out


def height_bijection_stages(p: StaircasePartition) -> list[DyckPath]:
    """The path after the initial zig-zag and after each rectangle, in order."""
    ts = touch_sequence(p)
    n = p.n
    if ts.k == 0:
        return [DyckPath((UP + DOWN) * (n + 1))]
    steps = [UP, DOWN] * (n + 1 - ts.indices[-1])
    stages = [DyckPath("".join(steps))]
    for rect in rectangles(ts):
        lo = rect.first_col - 1
        fill = [max(0, min(p[r] - lo, rect.cols)) for r in range(rect.first_row, rect.first_row + rect.rows)]
        steps = _insert_at_peaks(steps, word_runs(border_word(fill, rect.cols)))
        stages.append(DyckPath("".join(steps)))
    return stages


def height_bijection(p: StaircasePartition) -> DyckPath:
    """Path of length ``2n + 2`` and height ``class + 1`` attached to ``p``."""
    return height_bijection_stages(p)[-1]


def height_bijection_inverse(d: DyckPath, n: int) -> StaircasePartition:
    """Undo :func:`height_bijection`: peel insertions level by level from the top."""
    if len(d) != 2 * n + 2:
        raise PathError(f"path length {len(d)} does not match rank {n} (expected {2 * n + 2})")
    steps = list(d.steps)
    h = height(d)
    words: list[list[int]] = []
    for top in range(h, 1, -1):
        steps, counts = _flatten_level(steps, top)
        words.append(counts)
    # steps is now a zig-zag of height 1
    m = len(steps) // 2
    i_k = n + 1 - m
    if h == 1:
        return StaircasePartition(n, (0,) * n)
    # words[-1] belongs to the top rectangle; columns of each rectangle are
    # the number of up-down pieces it inserted
    stage_words = list(reversed(words))
    indices = [i_k]
    for counts in stage_words[:-1]:
        indices.append(indices[-1] - sum(counts))
    if indices[-1] - sum(stage_words[-1]) != 0:
        raise PathError("inconsistent stage structure")
    ts = TouchSequence(n, tuple(reversed(indices)))
    fills = [_fill_from_runs(counts) for counts in stage_words]
    return partition_from_touch(ts, fills)


def _flatten_level(steps: Sequence[str], top: int) -> tuple[list[str], list[int]]:
    """Collapse each ``U (UD)^a D`` whose apexes sit at ``top`` back to ``UD``.

    ``counts`` lists ``a`` for every peak of the flattened path at level
    ``top - 1``, left to right.
    """
    out: list[str] = []
    counts: list[int] = []
    level = 0
    for s in steps:
        nxt = level + (1 if s == UP else -1)
        if level == top - 1 and nxt == top:
            counts[-1] += 1
        elif level == top and nxt == top - 1:
            pass
        else:
            if s == UP and nxt == top - 1:
                counts.append(0)
            out.append(s)
        level = nxt
    return out, counts


def _fill_from_runs(runs: Sequence[int]) -> list[int]:
    """Inverse of ``word_runs(border_word(fill, cols))``: recover the row lengths."""
    fill = []
    acc = 0
    for a in reversed(runs[1:]):
        acc += a
        fill.append(acc)
    return list(reversed(fill))


def paths_by_height(semilength: int) -> dict[int, int]:
    tally: dict[int, int] = {}
    for p in iter_dyck_paths(semilength):
        h = height(p)
        tally[h] = tally.get(h, 0) + 1
    return dict(sorted(tally.items()))

