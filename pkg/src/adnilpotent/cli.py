"""Command-line front end: ``adnil <command> ...``.

Every command builds one report dict with the keys ``command, n, inputs,
results, checks, timing_ms`` and renders it as JSON, CSV or text.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Sequence

from .dyck import (
    PathError,
    height,
    height_bijection,
    height_bijection_inverse,
    height_bijection_stages,
    parse_path,
    rotation_path,
    twice_area,
)
from .enumeration import METHODS, InfeasibleError, count_atmost, count_class, count_exact_class
from .exact_math import catalan
from .nilpotence import (
    affine_window,
    class_fast,
    class_tableau,
    compute_filling,
    interval_bounds,
    inversion_levels,
    inversion_table_ok,
    touch_sequence,
)
from .qt_catalan import (
    Theta_max,
    Theta_max_search,
    Theta_min,
    extremal_witness,
    qt_catalan_bruteforce,
    qt_catalan_formula,
    theta_max,
    theta_min,
    witness_of_dimension,
)
from .staircase import StaircasePartition, parse_partition
from .verify import CHECKS, FAULTS, run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

METHOD_LABELS = {
    "sum": "index sum over weakly increasing sequences (4.3)",
    "det44": "determinant (4.4)",
    "det45": "determinant (4.5)",
    "reflection": "reflection-principle sum (4.6)",
    "genfun": "Chebyshev quotient series coefficient",
    "contfrac": "continued fraction series coefficient",
    "brute": "exhaustive enumeration",
}


def _check(name: str, ok: bool, detail: str = "") -> dict:
    return {"name": name, "pass": bool(ok), "detail": detail}


def _parts(p: StaircasePartition) -> list[int]:
    return list(p.parts)


def cmd_classify(args) -> dict:
    p = parse_partition(args.partition, args.n)
    fast, tab = class_fast(p), class_tableau(p)
    ts = touch_sequence(p)
    lo, hi = interval_bounds(ts)
    results = {
        "class": fast,
        "class_tableau": tab,
        "filling": compute_filling(p).as_lists(),
        "touch_sequence": list(ts.indices),
        "interval_lower": _parts(lo),
        "interval_upper": _parts(hi),
        "dimension": p.size,
    }
    checks = [
        _check("class_agreement", fast == tab == ts.k, f"fast={fast} tableau={tab} touch={ts.k}"),
        _check("in_interval", p.contains(lo) and hi.contains(p),
               f"{lo} <= {p} <= {hi}"),
    ]
    return {"n": args.n, "inputs": {"partition": _parts(p)}, "results": results, "checks": checks}


def cmd_count(args) -> dict:
    if args.exact is not None:
        value = count_class(args.n, args.exact, args.method, args.jobs, args.force)
        selector = {"class": args.exact}
    else:
        value = count_atmost(args.n, args.at_most, args.method, args.jobs, args.force)
        selector = {"at_most": args.at_most}
    return {
        "n": args.n,
        "inputs": {**selector, "method": args.method},
        "results": {"count": str(value), "formula": METHOD_LABELS[args.method]},
        "checks": [],
    }


def cmd_table(args) -> dict:
    poly = qt_catalan_bruteforce(args.n, args.jobs, args.force)
    entries = [{"dimension": a, "class": k, "count": str(c)} for k, a, c in
               sorted(poly.sorted_terms(), key=lambda x: (x[1], x[0]))]
    class_sums: dict[int, int] = {}
    dim_sums: dict[int, int] = {}
    for k, a, c in poly.sorted_terms():
        class_sums[k] = class_sums.get(k, 0) + c
        dim_sums[a] = dim_sums.get(a, 0) + c
    formula = qt_catalan_formula(args.n)
    by_class = [count_exact_class(args.n, k) for k in range(args.n + 1)]
    checks = [
        _check("class_sums", [class_sums.get(k, 0) for k in range(args.n + 1)] == by_class,
               "column sums against the exact-class count"),
        _check("dimension_sums", formula.specialize_q(1) == poly.specialize_q(1),
               "row sums against the formula at q = 1"),
        _check("total", sum(class_sums.values()) == catalan(args.n + 1), f"C_{args.n + 1} = {catalan(args.n + 1)}"),
    ]
    return {
        "n": args.n,
        "inputs": {},
        "results": {
            "entries": entries,
            "class_sums": {str(k): str(v) for k, v in sorted(class_sums.items())},
            "dimension_sums": {str(a): str(v) for a, v in sorted(dim_sums.items())},
        },
        "checks": checks,
        "_rows": [["dimension", "class", "count"]] + [[e["dimension"], e["class"], e["count"]] for e in entries],
    }


def cmd_dyck(args) -> dict:
    if args.invert is not None:
        d = parse_path(args.invert)
        p = height_bijection_inverse(d, args.n)
        k = class_fast(p)
        back = height_bijection(p)
        return {
            "n": args.n,
            "inputs": {"path": d.steps},
            "results": {"partition": _parts(p), "class": k},
            "checks": [
                _check("round_trip", back == d, back.steps),
                _check("height_is_class_plus_one", height(d) == k + 1, f"height {height(d)}, class {k}"),
            ],
        }
    if args.partition is None:
        raise ValueError("give a partition literal or --invert PATH")
    p = parse_partition(args.partition, args.n)
    stages = height_bijection_stages(p)
    d = stages[-1]
    k = class_fast(p)
    rot = rotation_path(p)
    return {
        "n": args.n,
        "inputs": {"partition": _parts(p)},
        "results": {
            "path": d.steps,
            "height": height(d),
            "twice_area": twice_area(d),
            "class": k,
            "stages": [s.steps for s in stages],
            "rotation_path": rot.steps,
            "rotation_twice_area": twice_area(rot),
        },
        "checks": [
            _check("height_is_class_plus_one", height(d) == k + 1, f"height {height(d)}, class {k}"),
            _check("round_trip", height_bijection_inverse(d, args.n) == p, "inverse recovers the partition"),
            _check("area_law", twice_area(rot) == (args.n + 1) ** 2 - 2 * p.size,
                   "twice area of the rotated border is (n+1)^2 - 2|p|"),
        ],
    }


def cmd_qt(args) -> dict:
    f = qt_catalan_formula(args.n)
    results = {"polynomial": str(f), "terms": f.to_json()}
    checks = [_check("catalan_at_one", f.evaluate(1, 1) == catalan(args.n + 1), f"C_{args.n + 1}")]
    if args.brute:
        b = qt_catalan_bruteforce(args.n, args.jobs, args.force)
        results["brute"] = str(b)
        results["brute_terms"] = b.to_json()
        checks.append(_check("formula_equals_brute", f == b, "coefficientwise"))
    rows = [["q", "t", "coeff"]] + [[q, t, str(c)] for q, t, c in f.sorted_terms()]
    return {"n": args.n, "inputs": {"brute": bool(args.brute)}, "results": results, "checks": checks, "_rows": rows}


def cmd_affine(args) -> dict:
    p = parse_partition(args.partition, args.n)
    w = affine_window(p)
    return {
        "n": args.n,
        "inputs": {"partition": _parts(p)},
        "results": {"window": list(w.values), "inversions": len(inversion_levels(p))},
        "checks": [
            _check("window_sum", w.sum_ok(), f"sum = {sum(w.values)}"),
            _check("distinct_residues", w.residues_ok(), f"mod {args.n + 1}"),
            _check("inversion_table", inversion_table_ok(p), "floor differences reproduce the filling"),
        ],
    }


def _witness(p: StaircasePartition | None, k: int, a: int) -> tuple[dict | None, dict]:
    if p is None:
        return None, _check(f"witness_class_{k}_dim_{a}", False, "no witness found")
    got = (class_fast(p), p.size)
    return {"partition": _parts(p), "class": got[0], "dimension": got[1]}, \
        _check(f"witness_class_{k}_dim_{a}", got == (k, a), f"recomputed class {got[0]}, dimension {got[1]}")


def cmd_extremal(args) -> dict:
    n = args.n
    if args.exact is not None:
        k = args.exact
        lo, hi = theta_min(n, k), theta_max(n, k)
        results = {"theta_min": lo, "theta_max": hi}
        checks = []
        if k:
            wmin, wmax = extremal_witness(n, k)
            results["witness_min"], c1 = _witness(wmin, k, lo)
            results["witness_max"], c2 = _witness(wmax, k, hi)
            checks += [c1, c2]
        return {"n": n, "inputs": {"class": k}, "results": results, "checks": checks}
    a = args.dim
    kmin, kmax = Theta_min(n, a), Theta_max(n, a)
    results = {"Theta_min": kmin, "Theta_max": kmax}
    checks = [_check("Theta_max_search", kmax == Theta_max_search(n, a), "closed form against direct search")]
    results["witness_min"], c1 = _witness(witness_of_dimension(n, kmin, a), kmin, a)
    results["witness_max"], c2 = _witness(witness_of_dimension(n, kmax, a), kmax, a)
    checks += [c1, c2]
    return {"n": n, "inputs": {"dim": a}, "results": results, "checks": checks}


def cmd_verify(args) -> dict:
    res = run_checks(args.n_max, args.only, args.skip or (), args.inject_fault, args.jobs)
    return {
        "n": args.n_max,
        "inputs": {"n_max": args.n_max, "only": args.only or [], "skip": args.skip or []},
        "results": {"passed": sum(r.passed for r in res), "failed": sum(not r.passed for r in res)},
        "checks": [r.to_json() for r in res],
        "_verify": True,
    }


COMMANDS = {
    "classify": cmd_classify,
    "count": cmd_count,
    "table": cmd_table,
    "dyck": cmd_dyck,
    "qt": cmd_qt,
    "affine": cmd_affine,
    "extremal": cmd_extremal,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--jobs", type=int, default=None, help="worker processes for brute force (default: all CPUs)")
    common.add_argument("--force", action="store_true", help="allow brute force above the rank bound")

    parser = argparse.ArgumentParser(prog="adnil", description="Ad-nilpotent ideals of a Borel subalgebra of sl(n+1).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help)

    p = add("classify", "class of nilpotence, filling and interval of a partition")
    p.add_argument("partition", help="comma-separated parts, e.g. 3,1,0")
    p.add_argument("--n", type=int, required=True)

    p = add("count", "number of ideals by class")
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--class", dest="exact", type=int)
    g.add_argument("--at-most", dest="at_most", type=int)
    p.add_argument("--method", choices=METHODS, default="sum")

    p = add("table", "dimension x class tally by enumeration")
    p.add_argument("--n", type=int, required=True)

    p = add("dyck", "height-preserving Dyck path of a partition, or its inverse")
    p.add_argument("partition", nargs="?")
    p.add_argument("--invert", metavar="PATH")
    p.add_argument("--n", type=int, required=True)

    p = add("qt", "(q,t)-Catalan polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--brute", action="store_true", help="also tally by enumeration and compare")

    p = add("affine", "affine permutation window of a partition")
    p.add_argument("partition")
    p.add_argument("--n", type=int, required=True)

    p = add("extremal", "extremal dimensions for a class, or extremal classes for a dimension")
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--class", dest="exact", type=int)
    g.add_argument("--dim", type=int)

    p = add("verify", "run the cross-checks up to a rank")
    p.add_argument("--n-max", dest="n_max", type=int, default=8)
    p.add_argument("--only", nargs="+", choices=list(CHECKS), metavar="CHECK")
    p.add_argument("--skip", nargs="+", choices=list(CHECKS), metavar="CHECK")
    p.add_argument("--inject-fault", dest="inject_fault", choices=FAULTS, help=argparse.SUPPRESS)
    return parser


def _csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if "_rows" in report:
        w.writerows(report["_rows"])
    elif report.get("_verify"):
        w.writerow(["name", "pass", "detail"])
        for c in report["checks"]:
            w.writerow([c["name"], c["pass"], c["detail"]])
    else:
        w.writerow(["key", "value"])
        for k, v in report["results"].items():
            w.writerow([k, v if isinstance(v, str) else json.dumps(v)])
    return buf.getvalue()


def _text(report: dict) -> str:
    lines = []
    if not report.get("_verify"):
        lines.append(f"{report['command']} (n = {report['n']})")
        for k, v in report["results"].items():
            if k == "filling":
                lines.append("filling:")
                lines += ["  " + " ".join(map(str, row)) for row in v]
            elif k == "entries":
                lines.append("dimension class count")
                lines += [f"{e['dimension']} {e['class']} {e['count']}" for e in v]
            elif k in ("terms", "brute_terms"):
                continue
            else:
                lines.append(f"{k}: {v if isinstance(v, (str, int)) else json.dumps(v)}")
    for c in report["checks"]:
        lines.append(f"{'PASS' if c['pass'] else 'FAIL'} {c['name']}: {c['detail']}")
        if "counterexample" in c:
            cx = " ".join(f"{k}={v}" for k, v in c["counterexample"].items())
            lines.append(f"  counterexample: {cx}")
    if report.get("_verify"):
        r = report["results"]
        lines.append(f"{r['passed']} passed, {r['failed']} failed in {report['timing_ms']} ms")
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        public = {k: report[k] for k in ("command", "n", "inputs", "results", "checks", "timing_ms")}
        return json.dumps(public, indent=2) + "\n"
    if fmt == "csv":
        return _csv(report)
    return _text(report)


def run(argv: Sequence[str] | None = None) -> tuple[int, dict | None]:
    """Parse and execute; returns the exit code and the report (if any)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report = COMMANDS[args.command](args)
    except (ValueError, PathError, InfeasibleError) as exc:
        print(f"adnil {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE, None
    report = {"command": args.command, **report, "timing_ms": round((time.perf_counter() - start) * 1000, 3)}
    sys.stdout.write(render(report, args.format))
    failed = [c for c in report["checks"] if not c["pass"]]
    if failed and failed[0].get("counterexample"):
        cx = " ".join(f"{k}={v}" for k, v in failed[0]["counterexample"].items())
        print(f"first counterexample ({failed[0]['name']}): {cx}", file=sys.stderr)
    return (EXIT_FAIL if failed else EXIT_OK), report


def main(argv: Sequence[str] | None = None) -> int:
    try:
        code, _ = run(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors
        return int(exc.code or 0)
    return code


if __name__ == "__main__":
    sys.exit(main())
