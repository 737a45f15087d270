"""Command-line interface.

Subcommands: constraints (extract minimum constraint sets), render (SVG
figures), bench (timing harness), generate (fixtures and random instances),
verify (oracle cross-checks), cdt (dump the triangulation).

Exit codes: 0 ok, 2 parse error, 3 geometry violation, 4 oracle guard
exceeded, 5 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import backend as _backend
from .beta_skeleton import beta_constraints
from .cdt import build_cdt
from .cmst_constraints import cmst_constraints_fast, verify_containment
from .constraints import ConstraintSet
from .errors import (
    GeometryError,
    OracleGuardError,
    ParseError,
    ProxigraphError,
)
from .formats import emit_text, emit_triangulation, load_graph, save_graph
from .gabriel import gabriel_constraints
from .generators import figure2, figure3, random_forest, zigzag
from .geometry import BetaParam, in_beta_disks
from .mst import cmst
from .oracle import (
    ORACLE_EDGE_GUARD,
    oracle_cbeta,
    oracle_cgg,
    oracle_min_constraints,
    verify_constraint_hierarchy,
    verify_hierarchy,
)
from .planegraph import is_forest, visible
from .svg import render_svg

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_GEOMETRY = 3
EXIT_GUARD = 4
EXIT_VERIFY = 5


@dataclass
class RunConfig:
    input: str
    family: str
    beta: BetaParam = None
    output: str = None
    json_output: str = None
    svg: str = None
    verify: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.family == "beta":
            if self.beta is None:
                self.beta = BetaParam.of(2)
        elif self.beta is not None:
            raise ValueError("--beta only applies to the beta family")


def _seed_from_env(seed):
    env = os.environ.get("PROXI_SEED")
    return int(env) if env else seed


def _extract(cfg: RunConfig, g) -> ConstraintSet:
    if cfg.family == "cmst":
        if not is_forest(g):
            raise GeometryError("cmst constraints need a forest input")
        return cmst_constraints_fast(g)
    if cfg.family == "gabriel":
        return gabriel_constraints(g)
    return beta_constraints(g, cfg.beta)


def _constraints_text(s: ConstraintSet, g) -> str:
    lines = [f"# family={s.family}" + (f" beta={s.beta}" if s.beta else "")]
    lines.append(str(len(s.edges)))
    for idx, (a, b) in zip(s.edge_indices(g), s.edges):
        lines.append(f"{idx} {a} {b}")
    return "\n".join(lines) + "\n"


def _constraints_json(s: ConstraintSet, g) -> str:
    doc = {
        "family": s.family,
        "beta": str(s.beta) if s.beta else None,
        "count": len(s.edges),
        "constraints": [
            {"index": idx, "u": a, "v": b}
            for idx, (a, b) in zip(s.edge_indices(g), s.edges)
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def _beta_containment_ok(g, s: ConstraintSet, beta: BetaParam) -> bool:
    """Direct definition check that I is inside CG_beta(V, S): a non-forced
    input edge must have no vertex of its beta-neighbourhood visible (with
    respect to S) to both endpoints."""
    sub = type(g)(g.points, list(s.edges), validate="none")
    xs, ys = g.xs, g.ys
    for a, b in g.edges:
        if (a, b) in s:
            continue
        for p in range(g.n):
            if p in (a, b):
                continue
            if not in_beta_disks(
                xs[a], ys[a], xs[b], ys[b], xs[p], ys[p], beta.num, beta.den
            ):
                continue
            if visible(sub, p, a) and visible(sub, p, b):
                return False
    return True


def _verify_result(cfg: RunConfig, g, s: ConstraintSet):
    """Containment always; oracle minimality when the guard allows."""
    if cfg.family == "cmst":
        if not verify_containment(g, s):
            return f"containment failed: F is not inside CMST(V, S) for S={s.edges}"
    else:
        beta = cfg.beta if cfg.family == "beta" else BetaParam.of(1)
        if not _beta_containment_ok(g, s, beta):
            return "containment failed: input not inside the constrained graph"
    if g.m <= ORACLE_EDGE_GUARD:
        kwargs = {"beta": cfg.beta} if cfg.family == "beta" else {}
        minimum = oracle_min_constraints(g, cfg.family, **kwargs)
        if tuple(minimum.edges) != tuple(s.edges):
            return (
                f"minimality mismatch: oracle found {minimum.edges}, "
                f"extraction produced {s.edges}"
            )
    return None


def _run_constraints_one(cfg: RunConfig) -> int:
    g = load_graph(cfg.input)
    s = _extract(cfg, g)
    text = _constraints_text(s, g)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if cfg.json_output:
        with open(cfg.json_output, "w", encoding="utf-8") as fh:
            fh.write(_constraints_json(s, g))
    if cfg.svg:
        with open(cfg.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(g, constraint_edges=s.edges))
    if cfg.verify:
        problem = _verify_result(cfg, g, s)
        if problem:
            print(f"VERIFY FAIL [{cfg.input}]: {problem}", file=sys.stderr)
            return EXIT_VERIFY
        print(f"verify ok [{cfg.input}]: |S| = {len(s.edges)}", file=sys.stderr)
    return EXIT_OK


def _worker(args):
    cfg_dict, path, outdir = args
    cfg = RunConfig(**cfg_dict)
    cfg.input = path
    if outdir:
        base = os.path.splitext(os.path.basename(path))[0]
        cfg.output = os.path.join(outdir, base + ".constraints.txt")
        cfg.json_output = os.path.join(outdir, base + ".constraints.json")
    return _run_constraints_one(cfg)


def cmd_constraints(args) -> int:
    beta = BetaParam.of(args.beta) if args.beta is not None else None
    cfg = RunConfig(
        input="",
        family=args.family,
        beta=beta,
        output=args.output,
        json_output=args.json,
        svg=args.svg,
        verify=args.verify,
    )
    inputs = args.inputs
    if len(inputs) == 1:
        cfg.input = inputs[0]
        return _run_constraints_one(cfg)
    if args.output or args.json or args.svg:
        raise ParseError("with multiple inputs use --output-dir")
    outdir = args.output_dir or "."
    os.makedirs(outdir, exist_ok=True)
    cfg_dict = {
        "input": "",
        "family": cfg.family,
        "beta": cfg.beta,
        "verify": cfg.verify,
    }
    jobs = [(cfg_dict, path, outdir) for path in inputs]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            codes = list(pool.map(_worker, jobs))
    else:
        codes = [_worker(j) for j in jobs]
    return max(codes)


def cmd_render(args) -> int:
    g = load_graph(args.input)
    computed = None
    constraints = None
    if args.overlay == "cmst":
        constraints = cmst_constraints_fast(g).edges
        computed = sorted(cmst(g).edge_pairs())
    elif args.overlay == "gabriel":
        constraints = gabriel_constraints(g).edges
        computed = sorted(oracle_cgg(g))
    elif args.overlay == "beta":
        beta = BetaParam.of(args.beta if args.beta is not None else 2)
        constraints = beta_constraints(g, beta).edges
        computed = sorted(oracle_cbeta(g, beta))
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(render_svg(g, computed_edges=computed, constraint_edges=constraints))
    return EXIT_OK


def cmd_bench(args) -> int:
    from .bench import format_table, rows_to_csv, run_bench

    sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    seeds = [int(tok) for tok in args.seeds.split(",") if tok]
    seeds = [_seed_from_env(s) for s in seeds]
    backends = (
        _backend.available_backends() if args.backend == "both" else [args.backend]
    )
    rows = run_bench(sizes, seeds=seeds, backends=backends, family=args.family)
    print(format_table(rows))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(rows_to_csv(rows))
    return EXIT_OK


def cmd_generate(args) -> int:
    seed = _seed_from_env(args.seed)
    if args.kind == "figure2":
        g = figure2()
    elif args.kind == "figure3":
        g = figure3()
    elif args.kind == "zigzag":
        g = zigzag(args.n)
    else:
        g = random_forest(args.n, seed=seed, m=args.m)
    if args.output:
        save_graph(g, args.output)
    else:
        sys.stdout.write(emit_text(g))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(args.input)
    failures = []
    rep = verify_hierarchy(g)
    failures += rep.failures
    rep = verify_constraint_hierarchy(g)
    failures += rep.failures
    if g.m <= ORACLE_EDGE_GUARD:
        for family in ("gabriel", "beta", "cmst"):
            if family == "cmst" and not is_forest(g):
                continue
            kwargs = {"beta": BetaParam.of(2)} if family == "beta" else {}
            fast = (
                cmst_constraints_fast(g)
                if family == "cmst"
                else gabriel_constraints(g)
                if family == "gabriel"
                else beta_constraints(g, 2)
            )
            minimum = oracle_min_constraints(g, family, **kwargs)
            if tuple(minimum.edges) != tuple(fast.edges):
                failures.append(
                    f"{family}: oracle {minimum.edges} != extraction {fast.edges}"
                )
    if failures:
        for f in failures:
            print(f"FAIL: {f}", file=sys.stderr)
        return EXIT_VERIFY
    print(f"verify ok: n={g.n} m={g.m} (hierarchies + oracle cross-checks)")
    return EXIT_OK


def cmd_cdt(args) -> int:
    g = load_graph(args.input)
    tri = build_cdt(g)
    text = emit_triangulation(tri)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="proxigraph",
        description="Minimum constraint sets for edge-constrained proximity graphs",
    )
    ap.add_argument(
        "--backend",
        choices=("auto", "python", "compiled"),
        default=None,
        help="force a kernel backend (default: compiled when available)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("constraints", help="extract a minimum constraint set")
    c.add_argument("family", choices=("cmst", "gabriel", "beta"))
    c.add_argument("inputs", nargs="+")
    c.add_argument("--beta", help="beta as p/q or decimal in [1,2] (beta family)")
    c.add_argument("-o", "--output", help="text output path (default stdout)")
    c.add_argument("--json", help="JSON output path")
    c.add_argument("--svg", help="render the input with constraints in bold")
    c.add_argument("--verify", action="store_true", help="containment + oracle checks")
    c.add_argument("--output-dir", help="output directory for multiple inputs")
    c.add_argument("--jobs", type=int, default=1, help="parallel workers across input files")
    c.set_defaults(fn=cmd_constraints)

    r = sub.add_parser("render", help="render a graph to SVG")
    r.add_argument("input")
    r.add_argument("-o", "--output", required=True)
    r.add_argument("--overlay", choices=("none", "cmst", "gabriel", "beta"), default="none")
    r.add_argument("--beta")
    r.set_defaults(fn=cmd_render)

    b = sub.add_parser("bench", help="time the pipeline stages")
    b.add_argument("--sizes", default="1000,10000")
    b.add_argument("--seeds", default="0")
    b.add_argument("--family", choices=("cmst", "gabriel", "beta"), default="cmst")
    b.add_argument("--backend", choices=("auto", "python", "compiled", "both"), default="auto")
    b.add_argument("--csv")
    b.set_defaults(fn=cmd_bench)

    g = sub.add_parser("generate", help="emit fixtures and random instances")
    g.add_argument("kind", choices=("random-forest", "zigzag", "figure2", "figure3"))
    g.add_argument("--n", type=int, default=16)
    g.add_argument("--m", type=int, default=None)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(fn=cmd_generate)

    v = sub.add_parser("verify", help="oracle verification of an input graph")
    v.add_argument("input")
    v.set_defaults(fn=cmd_verify)

    d = sub.add_parser("cdt", help="dump the constrained Delaunay triangulation")
    d.add_argument("input")
    d.add_argument("-o", "--output")
    d.set_defaults(fn=cmd_cdt)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.backend:
        os.environ["PROXIGRAPH_BACKEND"] = args.backend  # for --jobs workers
        _backend.set_backend(args.backend)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OracleGuardError as exc:
        print(f"oracle guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except GeometryError as exc:
        print(f"geometry violation: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except ValueError as exc:
        print(f"bad arguments: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ProxigraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
