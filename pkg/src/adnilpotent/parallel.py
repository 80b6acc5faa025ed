"""Fan a per-shard tally over the staircase enumeration and merge the results.

Shards are keyed by the first part, so they are disjoint and their union is the
whole enumeration.  Tallies are ``Counter`` objects; merging by addition is
associative and commutative, hence independent of scheduling.
"""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from .staircase import shard_keys

ShardFn = Callable[[int, int], Counter]


def default_jobs() -> int:
    return os.cpu_count() or 1


def map_shards(fn: ShardFn, n: int, jobs: int | None = None) -> Counter:
    """Apply ``fn(n, first_part)`` to every shard and sum the counters.

    ``fn`` must be a module-level function so worker processes can import it.
    """
    jobs = default_jobs() if jobs is None else max(1, jobs)
    keys = shard_keys(n)
    total: Counter = Counter()
    if jobs == 1 or len(keys) == 1:
        for key in keys:
            total.update(fn(n, key))
        return total
    with ProcessPoolExecutor(max_workers=min(jobs, len(keys))) as pool:
        for part in pool.map(fn, [n] * len(keys), keys):
            total.update(part)
    return total
