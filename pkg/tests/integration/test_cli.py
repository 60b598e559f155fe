"""Integration tests: gen, plan, verify and render through the command line."""

import json

import pytest

from storyplan.cli.main import EXIT_OK, main
from storyplan.graph.io import read_graph

pytestmark = pytest.mark.integration

ROUND_TRIPS = [
    ("petersen", "forest", "subcubic"),
    ("petersen", "forest", "auto"),
    ("k3,4", "forest", "bipartite"),
    ("grid:4,4", "forest", "bipartite"),
    ("grid:4,4", "forest", "planar"),
    ("cube", "forest", "planar"),
    ("cube", "outerplanar", "subcubic"),
    ("c8", "forest", "outer-face"),
    ("random-2tree:12,3", "outerplanar", "two-tree"),
    ("random-cubic:20,1", "outerplanar", "subcubic"),
    ("c7", "outerplanar", "auto"),
    ("stacked-example", "planar", "auto"),
]


@pytest.mark.parametrize("family,mode,algorithm", ROUND_TRIPS)
def test_gen_plan_verify(tmp_path, capsys, family, mode, algorithm):
    """Test a generated graph gets a plan that verifies in its mode."""
    graph_path = tmp_path / "g.txt"
    plan_path = tmp_path / "plan.json"

    assert main(["gen", "--family", family, "-o", str(graph_path)]) == EXIT_OK
    assert (
        main(["plan", "-i", str(graph_path), "--mode", mode, "--algorithm", algorithm, "-o", str(plan_path)])
        == EXIT_OK
    )
    assert main(["verify", "-g", str(graph_path), "-p", str(plan_path), "--mode", mode]) == EXIT_OK
    assert "OK: valid" in capsys.readouterr().out


@pytest.mark.parametrize("family", ["petersen", "cube", "grid:3,5"])
def test_render_writes_every_frame(tmp_path, family):
    """Test rendering writes 2n - 1 SVG files."""
    graph_path = tmp_path / "g.txt"
    plan_path = tmp_path / "plan.json"
    out_dir = tmp_path / "frames"
    main(["gen", "--family", family, "-o", str(graph_path)])
    main(["plan", "-i", str(graph_path), "-o", str(plan_path)])

    assert main(["render", "-g", str(graph_path), "-p", str(plan_path), "-o", str(out_dir)]) == EXIT_OK

    n = read_graph(graph_path).n
    files = sorted(out_dir.glob("*.svg"))
    assert len(files) == 2 * n - 1
    assert (out_dir / f"frame_{n}.svg").exists()
    assert not (out_dir / f"frame_{n}_prime.svg").exists()
    assert "<svg" in files[0].read_text()


def test_plan_document_matches_graph(tmp_path):
    """Test the written plan covers every vertex with a position."""
    graph_path = tmp_path / "g.txt"
    plan_path = tmp_path / "plan.json"
    main(["gen", "--family", "dodecahedron", "-o", str(graph_path)])
    main(["plan", "-i", str(graph_path), "--algorithm", "planar", "-o", str(plan_path)])

    doc = json.loads(plan_path.read_text())

    assert doc["n"] == 20
    assert sorted(doc["order"]) == list(range(20))
    assert set(doc["positions"]) == {str(v) for v in range(20)}
    assert doc["algorithm"] == "planar"


@pytest.mark.parametrize(
    "family,graph_class,expected",
    [
        ("k4", "outerplanar", "infeasible"),
        ("platonic:octa", "outerplanar", "infeasible"),
        ("blown-cycle:5,2", "outerplanar", "feasible"),
        ("cube", "forest", "feasible"),
    ],
)
def test_decide_from_graph_file(tmp_path, capsys, family, graph_class, expected):
    """Test verdicts on generated graph files."""
    graph_path = tmp_path / "g.txt"
    main(["gen", "--family", family, "-o", str(graph_path)])
    capsys.readouterr()

    code = main(["decide", "-i", str(graph_path), "--class", graph_class])

    assert capsys.readouterr().out.startswith(f"{graph_class}: {expected} ")
    assert code == (EXIT_OK if expected == "feasible" else 1)
