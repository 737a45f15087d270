"""Graph text and JSON formats.

Text format: first line `n m`, then n coordinate lines `x y`, then m edge
lines `i j` (0-based).  Coordinates are integers, decimals, or rationals
`p/q`; everything is parsed to exact rationals.  Lines starting with `#`
and blank lines are ignored.  JSON mirror: {"points": [[x, y], ...],
"edges": [[i, j], ...]} with non-integer coordinates as "p/q" strings.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import ParseError
from .planegraph import PlaneGraph


def parse_rational(token):
    """Exact coordinate from an `int`, `p/q`, or decimal literal."""
    try:
        if isinstance(token, str):
            token = token.strip()
        value = Fraction(token)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ParseError(f"bad rational literal {token!r}") from exc
    return value.numerator if value.denominator == 1 else value


def format_coord(c) -> str:
    d = getattr(c, "denominator", 1)
    return str(c) if d == 1 else f"{c.numerator}/{c.denominator}"


def parse_text(text, validate="edges") -> PlaneGraph:
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError(f"bad header {lines[0]!r}") from exc
    if len(lines) != 1 + n + m:
        raise ParseError(
            f"expected {1 + n + m} lines for n={n}, m={m}, got {len(lines)}"
        )
    points = []
    for ln in lines[1 : 1 + n]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"bad coordinate line {ln!r}")
        points.append((parse_rational(parts[0]), parse_rational(parts[1])))
    edges = []
    for ln in lines[1 + n :]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"bad edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"bad edge line {ln!r}") from exc
    return PlaneGraph(points, edges, validate=validate)


def emit_text(g: PlaneGraph) -> str:
    out = [f"{g.n} {g.m}"]
    for p in g.points:
        out.append(f"{format_coord(p.x)} {format_coord(p.y)}")
    for a, b in g.edges:
        out.append(f"{a} {b}")
    return "\n".join(out) + "\n"


def _coord_to_json(c):
    return c if isinstance(c, int) else f"{c.numerator}/{c.denominator}"


def parse_json(text, validate="edges") -> PlaneGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from exc
    if not isinstance(doc, dict) or "points" not in doc:
        raise ParseError("JSON graph needs a 'points' field")
    points = []
    for entry in doc["points"]:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise ParseError(f"bad point entry {entry!r}")
        points.append((parse_rational(entry[0]), parse_rational(entry[1])))
    edges = [(int(a), int(b)) for a, b in doc.get("edges", [])]
    return PlaneGraph(points, edges, validate=validate)


def emit_json(g: PlaneGraph) -> str:
    doc = {
        "points": [[_coord_to_json(p.x), _coord_to_json(p.y)] for p in g.points],
        "edges": [[a, b] for a, b in g.edges],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_graph(path, validate="edges") -> PlaneGraph:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if str(path).endswith(".json"):
        return parse_json(text, validate=validate)
    return parse_text(text, validate=validate)


def save_graph(g: PlaneGraph, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_json(g) if str(path).endswith(".json") else emit_text(g))


def emit_triangulation(tri) -> str:
    """Shared text format plus a constrained-flag column per edge."""
    g = tri.graph
    edges = tri.edges()
    out = [f"{g.n} {len(edges)}"]
    for p in g.points:
        out.append(f"{format_coord(p.x)} {format_coord(p.y)}")
    for a, b in edges:
        out.append(f"{a} {b} {1 if tri.is_constrained((a, b)) else 0}")
    return "\n".join(out) + "\n"
