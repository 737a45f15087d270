"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line.  Tolerances are pinned here, not deferred.

Criterion 10 measures the selected kernel backend; building the compiled
extension is part of the supported install (pure-Python fallback is not
expected to hold the n = 1e5 wall-time bound).
"""

import random
import time

import pytest

from proxigraph.backend import current_backend_name
from proxigraph.bench import bench_cmst, extraction_time
from proxigraph.beta_skeleton import beta_constraints
from proxigraph.cdt import build_cdt, is_locally_delaunay
from proxigraph.cmst_constraints import (
    cmst_constraints_fast,
    cmst_constraints_reference,
)
from proxigraph.dynamic_tree import DynamicTree
from proxigraph.gabriel import gabriel_constraints, is_locally_gabriel
from proxigraph.generators import figure2, figure3, random_forest, random_plane_graph, zigzag
from proxigraph.geometry import in_diametral_circle
from proxigraph.mst import mst_of_cdt, mst_visibility
from proxigraph.oracle import (
    oracle_min_constraints,
    verify_constraint_hierarchy,
    verify_hierarchy,
)
from proxigraph.planegraph import visibility_matrix

from test_dynamic_tree import NaiveForest, _random_script


def report(num, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {num:>2}: {status} - {detail}")
    assert ok, f"criterion {num}: {detail}"


def test_criterion_01_figure2():
    f = figure2()
    s = cmst_constraints_fast(f)
    exact = s.edges == ((0, 1), (1, 2))
    best = min(
        (lambda t0: (cmst_constraints_fast(f), time.perf_counter() - t0))(
            time.perf_counter()
        )[1]
        for _ in range(5)
    )
    ok = exact and best < 1e-3
    report(1, ok, f"figure-2 set {s.edges}, best extraction {best * 1e3:.3f} ms")


def test_criterion_02_figure3():
    f = figure3()
    s = cmst_constraints_fast(f)
    oracle = oracle_min_constraints(f, "cmst")  # enumerates all 2^3 subsets
    ok = s.edges == ((1, 2),) and oracle.edges == s.edges
    report(2, ok, f"figure-3 set {s.edges} equals exhaustive minimum")


def test_criterion_03_zigzag():
    bad = [
        n
        for n in range(4, 13)
        if len(cmst_constraints_fast(zigzag(n)).edges) != n - 1
    ]
    report(3, not bad, f"zigzag sizes 4..12 all need n-1 constraints (bad: {bad})")


def test_criterion_04_fast_equals_reference():
    mismatches = 0
    for seed in range(500):
        n = random.Random(seed).randint(3, 60)
        kind = "vis" if seed % 4 == 0 else "dt"
        if kind == "vis":
            from proxigraph.generators import random_visible_forest

            f = random_visible_forest(min(n, 40), seed=seed)
        else:
            f = random_forest(n, seed=seed)
        if cmst_constraints_fast(f).edges != cmst_constraints_reference(f).edges:
            mismatches += 1
    report(4, mismatches == 0, f"500 seeded forests, {mismatches} mismatches")


def test_criterion_05_minimum_vs_oracle():
    t0 = time.perf_counter()
    mismatches = 0
    for seed in range(200):
        rng = random.Random(7000 + seed)
        n = rng.randint(4, 12)
        f = random_forest(n, seed=7000 + seed, m=min(n - 1, 10))
        assert f.m <= 10
        if cmst_constraints_fast(f).edges != oracle_min_constraints(f, "cmst").edges:
            mismatches += 1
    dt = time.perf_counter() - t0
    ok = mismatches == 0 and dt < 60
    report(5, ok, f"200 forests vs exhaustive oracle, {mismatches} mismatches, {dt:.1f}s")


def test_criterion_06_gabriel_local_test_soundness():
    mismatches = 0
    for seed in range(200):
        n = random.Random(3000 + seed).randint(4, 12)
        g = random_plane_graph(n, seed=3000 + seed, m=8)
        tri = build_cdt(g)
        adj = visibility_matrix(g)
        for a, b in g.edges:
            global_ok = True
            for w in range(g.n):
                if w in (a, b):
                    continue
                if (
                    in_diametral_circle(g.points[a], g.points[b], g.points[w])
                    and a in adj[w]
                    and b in adj[w]
                ):
                    global_ok = False
                    break
            if is_locally_gabriel(tri, (a, b)) != global_ok:
                mismatches += 1
    report(6, mismatches == 0, f"200 graphs, local vs global Gabriel test, {mismatches} mismatches")


def test_criterion_07_beta_endpoints():
    mismatches = 0
    for seed in range(200):
        n = random.Random(5000 + seed).randint(4, 12)
        g = random_plane_graph(n, seed=5000 + seed, m=8)
        if beta_constraints(g, 1).edges != gabriel_constraints(g).edges:
            mismatches += 1
        if (
            beta_constraints(g, 2).edges
            != oracle_min_constraints(g, "beta", beta=2).edges
        ):
            mismatches += 1
    report(7, mismatches == 0, f"200 instances, beta endpoints, {mismatches} mismatches")


def test_criterion_08_hierarchies():
    betas = (1, "5/4", "3/2", 2)
    violations = []
    for seed in range(100):
        n = random.Random(4000 + seed).randint(3, 25)
        f = random_forest(n, seed=4000 + seed)
        rep = verify_hierarchy(f, betas)
        if not rep.ok:
            violations += rep.failures
    for seed in range(100):
        n = random.Random(4500 + seed).randint(3, 12)
        f = random_forest(n, seed=4500 + seed)
        rep = verify_constraint_hierarchy(f, betas)
        if not rep.ok:
            violations += rep.failures
    report(8, not violations, f"100+100 forests, both chains, violations: {violations[:2]}")


def test_criterion_09_linkcut_differential():
    t0 = time.perf_counter()
    rng = random.Random(424242)
    n = 128
    checked = _random_script(DynamicTree(n), NaiveForest(n), rng, 100_000, n)
    dt = time.perf_counter() - t0
    ok = dt < 30 and checked > 20_000
    report(9, ok, f"1e5 ops on n=128, {checked} checked queries, {dt:.1f}s")


def test_criterion_10_scaling():
    backend = current_backend_name()
    big = extraction_time(100_000, 0)
    ratios = []
    for seed in range(3):
        small = min(extraction_time(25_000, 100 + seed) for _ in range(2))
        double = min(extraction_time(50_000, 100 + seed) for _ in range(2))
        ratios.append(double / small)
    avg = sum(ratios) / len(ratios)
    ok = big <= 10.0 and avg <= 2.6
    report(
        10,
        ok,
        f"[{backend}] extraction at 1e5: {big:.2f}s (<=10s); "
        f"doubling ratio avg {avg:.2f} (<=2.6)",
    )


def test_criterion_11_cdt_validity():
    bad_edges = 0
    for seed in range(100):
        n = random.Random(6000 + seed).randint(3, 60)
        f = random_forest(n, seed=6000 + seed)
        tri = build_cdt(f)
        for e in tri.edges():
            if tri.is_constrained(e):
                if not f.has_edge(*e):
                    bad_edges += 1
            elif not is_locally_delaunay(tri, e):
                bad_edges += 1
    inclusion_bad = 0
    for seed in range(40):
        n = random.Random(6500 + seed).randint(3, 30)
        f = random_forest(n, seed=6500 + seed)
        tri = build_cdt(f)
        cdt_edges = set(tri.edges())
        t_prime = mst_visibility(f).edge_pairs()
        if not t_prime <= cdt_edges:
            inclusion_bad += 1
        if mst_of_cdt(tri).edge_pairs() != t_prime:
            inclusion_bad += 1
    ok = bad_edges == 0 and inclusion_bad == 0
    report(
        11,
        ok,
        f"100 forests locally-Delaunay clean ({bad_edges} bad), "
        f"MST(EVG) inside CDT exact ({inclusion_bad} bad)",
    )
