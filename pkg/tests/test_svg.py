import time

from proxigraph.cli import main
from proxigraph.cmst_constraints import cmst_constraints_fast
from proxigraph.generators import figure2, figure3, random_forest, zigzag
from proxigraph.planegraph import PlaneGraph
from proxigraph.svg import render_svg


def test_render_deterministic():
    for g in (figure2(), figure3(), zigzag(8)):
        s = cmst_constraints_fast(g)
        a = render_svg(g, constraint_edges=s.edges)
        b = render_svg(g, constraint_edges=s.edges)
        assert a == b
        assert a.startswith("<?xml")
        assert "<svg" in a and a.rstrip().endswith("</svg>")


def test_render_empty_graph_axes_only():
    g = PlaneGraph([], [])
    out = render_svg(g)
    assert out.count("<line") == 2  # the two axes
    assert "<circle" not in out


def test_render_styles():
    g = figure3()
    out = render_svg(g, computed_edges=[(0, 3)], constraint_edges=[(1, 2)])
    assert 'stroke-dasharray="6 4"' in out
    assert 'stroke-width="3.5"' in out
    assert out.count('stroke-width="1.5"') == 3  # the input edges


def test_render_thousand_points_quickly():
    g = random_forest(1000, seed=1)
    t0 = time.perf_counter()
    out = render_svg(g)
    assert time.perf_counter() - t0 < 1.0
    assert out.count("<circle") == 1000


def test_cli_render_golden(tmp_path):
    inp = tmp_path / "g.txt"
    assert main(["generate", "figure3", "-o", str(inp)]) == 0
    out1 = tmp_path / "a.svg"
    out2 = tmp_path / "b.svg"
    for out in (out1, out2):
        assert (
            main(["render", str(inp), "-o", str(out), "--overlay", "cmst"]) == 0
        )
    assert out1.read_bytes() == out2.read_bytes()
    text = out1.read_text()
    assert 'stroke="#cc0000"' in text  # the forced middle edge
