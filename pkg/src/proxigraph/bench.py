"""Timing harness for the O(n log n) pipeline, with per-stage wall times
and a backend comparison (compiled kernels against the pure-Python twins)."""

from __future__ import annotations

import csv
import io
import time

from . import backend as _backend
from .beta_skeleton import build_elimination_forest, contract_forest
from .cdt import build_cdt
from .cmst_constraints import extract_constraints
from .gabriel import is_locally_gabriel
from .generators import random_forest
from .mst import spanning_trees_of_cdt

CSV_FIELDS = ("family", "backend", "n", "seed", "stage", "seconds")


def _now():
    return time.perf_counter()


def bench_cmst(n, seed, kern):
    """Stage times for the constrained-MST extraction pipeline on a random
    plane forest: cdt, mst (both spanning trees), extract (link/cut loop)."""
    f = random_forest(n, seed=seed, m=n - 1)
    t0 = _now()
    tri = build_cdt(f, backend=kern)
    t1 = _now()
    t_prime, c_tree = spanning_trees_of_cdt(tri)
    t2 = _now()
    extract_constraints(f, t_prime, c_tree, kern)
    t3 = _now()
    return {
        "cdt": t1 - t0,
        "mst": t2 - t1,
        "extract": t3 - t2,
        "total": t3 - t0,
    }


def extraction_time(n, seed, kern=None):
    """Wall time of the link/cut extraction stage alone."""
    kern = kern or _backend.get_backend()
    return bench_cmst(n, seed, kern)["extract"]


def bench_gabriel(n, seed, kern):
    f = random_forest(n, seed=seed, m=n - 1)
    t0 = _now()
    tri = build_cdt(f, backend=kern)
    t1 = _now()
    for e in f.edges:
        is_locally_gabriel(tri, e)
    t2 = _now()
    return {"cdt": t1 - t0, "scan": t2 - t1, "total": t2 - t0}


def bench_beta(n, seed, kern, beta=2):
    f = random_forest(n, seed=seed, m=n - 1)
    t0 = _now()
    tri = build_cdt(f, backend=kern)
    t1 = _now()
    forest = build_elimination_forest(tri, beta)
    t2 = _now()
    contract_forest(forest, f.edges)
    t3 = _now()
    return {
        "cdt": t1 - t0,
        "forest": t2 - t1,
        "contract": t3 - t2,
        "total": t3 - t0,
        "touches": forest.touches,
    }


_FAMILIES = {"cmst": bench_cmst, "gabriel": bench_gabriel, "beta": bench_beta}


def run_bench(sizes, seeds=(0,), backends=("auto",), family="cmst"):
    """Rows of (family, backend, n, seed, stage, seconds)."""
    fn = _FAMILIES[family]
    rows = []
    for name in backends:
        kern = _backend.get_backend(name)
        for n in sizes:
            for seed in seeds:
                stages = fn(n, seed, kern)
                for stage, secs in stages.items():
                    rows.append(
                        {
                            "family": family,
                            "backend": kern.BACKEND,
                            "n": n,
                            "seed": seed,
                            "stage": stage,
                            "seconds": secs,
                        }
                    )
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS)
    w.writeheader()
    for r in rows:
        w.writerow({k: r[k] for k in CSV_FIELDS})
    return buf.getvalue()


def format_table(rows) -> str:
    out = [f"{'family':<8} {'backend':<9} {'n':>8} {'seed':>5} {'stage':<9} {'seconds':>12}"]
    for r in rows:
        out.append(
            f"{r['family']:<8} {r['backend']:<9} {r['n']:>8} {r['seed']:>5} "
            f"{r['stage']:<9} {r['seconds']:>12.6f}"
        )
    return "\n".join(out)
