"""Cross-checks run by ``adnil verify``.

Every check compares two independently computed quantities and stops at the
first disagreement, which is returned in full as the counterexample.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from .dyck import (
    height,
    height_bijection,
    height_bijection_inverse,
    height_bijection_stages,
    iter_dyck_paths,
    rotation_path,
    twice_area,
)
from .enumeration import (
    classify_bruteforce,
    corollary_counts,
    count_atmost,
    count_atmost_sum,
    count_exact_class,
)
from .exact_math import catalan
from .nilpotence import (
    affine_window,
    class_fast,
    class_of_parts,
    class_tableau,
    compute_filling,
    filling_rows,
    inversion_table_ok,
    touch_indices,
    touch_sequence,
)
from .parallel import map_shards
from .qt_catalan import (
    Theta_max,
    Theta_min,
    extremal_witness,
    qt_catalan_bruteforce,
    qt_catalan_formula,
    theta_max,
    theta_min,
)
from .staircase import enumerate_all, iter_parts, make_partition

EXAMPLE_N = 13
EXAMPLE_PARTS = (10, 10, 9, 6, 5, 4, 4, 3, 1, 1, 1, 1, 0)
EXAMPLE_TOUCH = (1, 5, 10)
EXAMPLE_PATH = "UDUUUDDDUUDUUDDUUUDDUDDDUUDD"
EXAMPLE_STAGE = "UDUUDDUUDUDUDDUUDD"

N4_FILLINGS = {
    (2, 1, 0, 0): [[1, 1, 0, 0], [1, 0, 0], [0, 0], [0]],
    (3, 3, 2, 1): [[3, 2, 1, 0], [3, 2, 1], [2, 1], [1]],
    (4, 3, 2, 1): [[4, 3, 2, 1], [3, 2, 1], [2, 1], [1]],
}

FAULTS = ("class", "count", "qt")

# the closed forms are cheap, so they are always checked to these ranks
COROLLARY_N = 20
CATALAN_N = 15


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    counterexample: dict | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "pass": self.passed, "detail": self.detail}
        if self.counterexample is not None:
            out["counterexample"] = {k: _plain(v) for k, v in self.counterexample.items()}
        return out


def _plain(v):
    # counts can be arbitrarily large, so integers travel as decimal strings
    return v if isinstance(v, bool) or v is None else str(v)


def _fail(name: str, detail: str, **cx) -> CheckResult:
    return CheckResult(name, False, detail, cx)


@dataclass
class Context:
    n_max: int
    fault: str | None = None
    jobs: int | None = 1
    tallies: dict = field(default_factory=dict)

    def class_fast(self, p) -> int:
        k = class_fast(p)
        if self.fault == "class" and p.n >= 2 and p.parts == tuple(range(p.n, 0, -1)):
            k += 1
        return k

    def count(self, n: int, h: int, method: str) -> int:
        c = count_atmost(n, h, method, self.jobs, force=True)
        if self.fault == "count" and method == "reflection" and n >= 2 and h == n:
            c += 1
        return c

    def qt_formula(self, n: int):
        f = qt_catalan_formula(n)
        if self.fault == "qt" and n >= 2:
            f = f + f.one().shift(1, 0)
        return f

    def tally(self, n: int) -> dict[int, int]:
        if n not in self.tallies:
            self.tallies[n] = classify_bruteforce(n, self.jobs, force=True)
        return self.tallies[n]


def _agreement_shard(n: int, first: int) -> Counter:
    out: Counter = Counter()
    for parts in iter_parts(n, first):
        a = filling_rows(parts)[0][0]
        b, c = class_of_parts(parts), len(touch_indices(parts))
        out["ideals"] += 1
        if not a == b == c:
            out[("mismatch", parts, a, b, c)] += 1
    return out


def class_agreement(n: int, jobs: int | None = None) -> tuple[int, list[tuple]]:
    """Ideal count at rank ``n`` and every ``(parts, tableau, fast, touch)`` that disagrees."""
    tally = map_shards(_agreement_shard, n, jobs)
    bad = sorted(k[1:] for k in tally if k != "ideals")
    return tally["ideals"], bad


def check_worked_example(ctx: Context) -> CheckResult:
    name = "worked_example"
    p = make_partition(EXAMPLE_PARTS, EXAMPLE_N)
    got = (ctx.class_fast(p), class_tableau(p), touch_sequence(p).indices)
    want = (3, 3, EXAMPLE_TOUCH)
    if got != want:
        return _fail(name, "class/touch mismatch", n=EXAMPLE_N, partition=str(p), expected=str(want), got=str(got))
    stages = [s.steps for s in height_bijection_stages(p)]
    if stages[-1] != EXAMPLE_PATH or EXAMPLE_STAGE not in stages:
        return _fail(name, "path mismatch", n=EXAMPLE_N, partition=str(p), expected=EXAMPLE_PATH, got=stages[-1])
    return CheckResult(name, True, "class 3, touch (1,5,10), path and intermediate stage reproduced")


def check_fillings_n4(ctx: Context) -> CheckResult:
    name = "fillings_n4"
    for parts, table in N4_FILLINGS.items():
        got = compute_filling(make_partition(parts, 4)).as_lists()
        if got != table:
            return _fail(name, "filling mismatch", n=4, partition=",".join(map(str, parts)), expected=str(table), got=str(got))
    return CheckResult(name, True, "3 tables match cell for cell")


def check_class_algorithms(ctx: Context) -> CheckResult:
    name = "class_algorithms"
    total = 0
    for n in range(1, ctx.n_max + 1):
        for p in enumerate_all(n):
            a, b, c = class_tableau(p), ctx.class_fast(p), touch_sequence(p).k
            if not a == b == c:
                return _fail(name, "tableau/fast/touch disagree", n=n, partition=str(p),
                             expected=a, got=f"fast={b} touch={c}")
            total += 1
    return CheckResult(name, True, f"{total} ideals, n <= {ctx.n_max}")


def _count_check(ctx: Context, name: str, methods: tuple[str, ...]) -> CheckResult:
    pairs = 0
    for n in range(1, ctx.n_max + 1):
        tally = ctx.tally(n)
        for h in range(n + 1):
            want = sum(v for k, v in tally.items() if k <= h)
            for m in methods:
                got = ctx.count(n, h, m)
                if got != want:
                    return _fail(name, f"method {m} disagrees with brute force", n=n, h=h,
                                 method=m, expected=want, got=got)
            pairs += 1
    return CheckResult(name, True, f"{len(methods)} methods x {pairs} (n, h) pairs match brute force")


def check_counts(ctx: Context) -> CheckResult:
    return _count_check(ctx, "counts", ("sum", "det44", "reflection", "genfun", "contfrac"))


def check_count_det45(ctx: Context) -> CheckResult:
    return _count_check(ctx, "count_det45", ("det45",))


def check_corollary(ctx: Context) -> CheckResult:
    name = "corollary"
    for n in range(1, max(ctx.n_max, COROLLARY_N) + 1):
        c = corollary_counts(n)
        for h, want in ((1, c.abelian), (2, c.atmost2), (3, c.atmost3)):
            got = count_atmost_sum(n, h)
            if got != want:
                return _fail(name, "closed form disagrees with index sum", n=n, h=h, expected=want, got=got)
            if n <= ctx.n_max:
                got = sum(v for k, v in ctx.tally(n).items() if k <= h)
                if got != want:
                    return _fail(name, "closed form disagrees with brute force", n=n, h=h, expected=want, got=got)
    return CheckResult(name, True, f"2^n, F_2n, (3^n+1)/2 for n <= {max(ctx.n_max, COROLLARY_N)}")


def check_catalan_total(ctx: Context) -> CheckResult:
    name = "catalan_total"
    for n in range(1, max(ctx.n_max, CATALAN_N) + 1):
        want = catalan(n + 1)
        got = sum(count_exact_class(n, k) for k in range(n + 1))
        if got != want:
            return _fail(name, "class counts do not sum to Catalan", n=n, expected=want, got=got)
        got = ctx.qt_formula(n).evaluate(1, 1)
        if got != want:
            return _fail(name, "C_n(1,1) is not Catalan", n=n, expected=want, got=got)
    return CheckResult(name, True, f"n <= {max(ctx.n_max, CATALAN_N)}")


def check_dyck_bijection(ctx: Context) -> CheckResult:
    name = "dyck_bijection"
    for n in range(1, ctx.n_max + 1):
        seen: set[str] = set()
        for p in enumerate_all(n):
            d = height_bijection(p)
            k = ctx.class_fast(p)
            if height(d) != k + 1:
                return _fail(name, "height is not class + 1", n=n, partition=str(p), expected=k + 1, got=height(d))
            back = height_bijection_inverse(d, n)
            if back != p:
                return _fail(name, "round trip failed", n=n, partition=str(p), expected=str(p), got=str(back))
            seen.add(d.steps)
        every = {d.steps for d in iter_dyck_paths(n + 1)}
        if seen != every:
            return _fail(name, "image is not all Dyck paths", n=n, expected=len(every), got=len(seen))
    return CheckResult(name, True, f"bijective with height = class + 1, n <= {ctx.n_max}")


def check_qt_formula(ctx: Context) -> CheckResult:
    name = "qt_formula"
    for n in range(1, ctx.n_max + 1):
        f = ctx.qt_formula(n)
        b = qt_catalan_bruteforce(n, ctx.jobs, force=True)
        if f != b:
            diff = (f - b).sorted_terms()
            qd, td, _ = diff[0]
            return _fail(name, f"coefficient of q^{qd} t^{td} differs", n=n,
                         expected=b.coefficient(qd, td), got=f.coefficient(qd, td))
    return CheckResult(name, True, f"formula equals brute-force tally for n <= {ctx.n_max}")


def check_area_identity(ctx: Context) -> CheckResult:
    name = "area_identity"
    for n in range(1, ctx.n_max + 1):
        seen: set[str] = set()
        for p in enumerate_all(n):
            d = rotation_path(p)
            want = (n + 1) ** 2 - 2 * p.size
            if twice_area(d) != want:
                return _fail(name, "twice_area mismatch", n=n, partition=str(p), expected=want, got=twice_area(d))
            seen.add(d.steps)
        if len(seen) != catalan(n + 1):
            return _fail(name, "rotation is not injective", n=n, expected=catalan(n + 1), got=len(seen))
    return CheckResult(name, True, f"n <= {ctx.n_max}")


def check_extremal(ctx: Context) -> CheckResult:
    name = "extremal"
    for n in range(1, ctx.n_max + 1):
        poly = qt_catalan_bruteforce(n, ctx.jobs, force=True)
        dims: dict[int, set[int]] = {}
        classes: dict[int, set[int]] = {}
        for (k, a) in poly.terms:
            dims.setdefault(k, set()).add(a)
            classes.setdefault(a, set()).add(k)
        for k, ds in sorted(dims.items()):
            got = (theta_min(n, k), theta_max(n, k))
            want = (min(ds), max(ds))
            if got != want:
                return _fail(name, "theta_min/theta_max", n=n, k=k, expected=str(want), got=str(got))
            if ds != set(range(want[0], want[1] + 1)):
                return _fail(name, "dimension support has a gap", n=n, k=k, expected=str(want), got=str(sorted(ds)))
            if k:
                for p, a in zip(extremal_witness(n, k), got):
                    if class_fast(p) != k or p.size != a:
                        return _fail(name, "witness does not verify", n=n, partition=str(p),
                                     expected=f"class {k} dim {a}", got=f"class {class_fast(p)} dim {p.size}")
        for a, ks in sorted(classes.items()):
            got = (Theta_min(n, a), Theta_max(n, a))
            want = (min(ks), max(ks))
            if got != want:
                return _fail(name, "Theta_min/Theta_max", n=n, dim=a, expected=str(want), got=str(got))
    return CheckResult(name, True, f"extrema, witnesses and support for n <= {ctx.n_max}")


def check_affine(ctx: Context) -> CheckResult:
    name = "affine"
    total = 0
    for n in range(1, ctx.n_max + 1):
        for p in enumerate_all(n):
            w = affine_window(p)
            if not (w.sum_ok() and w.residues_ok() and inversion_table_ok(p)):
                return _fail(name, "window invariant failed", n=n, partition=str(p),
                             expected="sum, residues, inversion table", got=str(w.values))
            total += 1
    return CheckResult(name, True, f"{total} windows, n <= {ctx.n_max}")


CHECKS: dict[str, Callable[[Context], CheckResult]] = {
    "worked_example": check_worked_example,
    "fillings_n4": check_fillings_n4,
    "class_algorithms": check_class_algorithms,
    "counts": check_counts,
    "count_det45": check_count_det45,
    "corollary": check_corollary,
    "catalan_total": check_catalan_total,
    "dyck_bijection": check_dyck_bijection,
    "qt_formula": check_qt_formula,
    "area_identity": check_area_identity,
    "extremal": check_extremal,
    "affine": check_affine,
}

HARD_CAP = 12


def run_checks(n_max: int, only=None, skip=(), fault: str | None = None, jobs: int | None = 1) -> list[CheckResult]:
    if not 1 <= n_max <= HARD_CAP:
        raise ValueError(f"n_max must be in 1..{HARD_CAP}")
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}")
    names = list(only) if only else list(CHECKS)
    unknown = [x for x in [*names, *skip] if x not in CHECKS]
    if unknown:
        raise ValueError(f"unknown check(s): {', '.join(unknown)}; choose from {', '.join(CHECKS)}")
    ctx = Context(n_max, fault, jobs)
    return [CHECKS[x](ctx) for x in names if x not in skip]
