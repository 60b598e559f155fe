"""Command-line entry point: gen, plan, verify, decide and render.

Exit codes: 0 on success or a feasible verdict, 1 on a negative verdict or a
failed verification, 2 on bad usage or bad input.
"""

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

import structlog

from storyplan.cli.models import RenderConfig
from storyplan.cli.render import render_plan
from storyplan.config import settings
from storyplan.exceptions import (
    ConfigurationError,
    GraphError,
    NoApplicablePlannerError,
    PlanFormatError,
    PreconditionError,
    StoryplanError,
)
from storyplan.graph.generators import generate_from_spec
from storyplan.graph.io import format_graph, read_graph
from storyplan.graph.models import Graph
from storyplan.model.document import dump_plan, load_plan
from storyplan.model.models import PlanMode
from storyplan.model.verifier import verify_storyplan
from storyplan.oracle.models import SearchOptions
from storyplan.oracle.search import decide_storyplan
from storyplan.planners.factory import AUTO_ORDER, create_plan
from storyplan.utils.logging import setup_logging
from storyplan.utils.metrics import metrics

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

ALGORITHMS = ["auto", "bipartite", "two-tree", "subcubic", "outer-face", "planar"]
MODES = [m.value for m in PlanMode]


def load_graph(source: str) -> Graph:
    """Read a graph file, or generate a family spec when no such file exists."""
    if Path(source).exists():
        return read_graph(source)
    return generate_from_spec(source, default_seed=settings.seed)


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_gen(args: argparse.Namespace) -> int:
    g = generate_from_spec(args.family, default_seed=args.seed, exclude_k4=args.exclude_k4)
    _write(format_graph(g), args.output)
    logger.info("Graph generated", family=args.family, n=g.n, m=g.m)
    return EXIT_OK


def cmd_plan(args: argparse.Namespace) -> int:
    g = load_graph(args.input)
    try:
        plan = create_plan(g, args.mode, args.algorithm)
    except NoApplicablePlannerError as e:
        for name, reason in e.diagnostics.items():
            print(f"  {name}: {reason}", file=sys.stderr)
        raise
    _write(dump_plan(plan) + "\n", args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    plan = load_plan(args.plan, g)
    report = verify_storyplan(g, plan, args.mode)
    print(report.table())
    if report.ok:
        print(f"OK: valid {report.mode.value} storyplan, at most {report.max_edges} edges per frame")
        return EXIT_OK
    print(f"FAIL: {report.first_violation}")
    return EXIT_NEGATIVE


def cmd_decide(args: argparse.Namespace) -> int:
    g = load_graph(args.input)
    options = SearchOptions.from_settings(
        max_n=args.max_n, symmetry=args.symmetry, jobs=args.jobs, node_budget=args.budget
    )
    verdict = decide_storyplan(g, args.graph_class, options)
    print(f"{verdict.summary()} [combinatorial]")
    return EXIT_OK if verdict.feasible else EXIT_NEGATIVE


def cmd_render(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    plan = load_plan(args.plan, g)
    config = RenderConfig.from_file(args.config) if args.config else RenderConfig()
    written = render_plan(plan, args.output, config)
    print(f"Wrote {len(written)} files to {args.output}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="storyplan", description=__doc__)
    parser.add_argument("--log-level", default=None, help="Override the configured log level")
    parser.add_argument("--metrics-out", default=None, help="Write Prometheus metrics here on exit")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="Generate a graph of a named family")
    gen.add_argument("--family", required=True, help="Family spec, e.g. petersen or blown-cycle:5,2")
    gen.add_argument("--seed", type=int, default=settings.seed, help="Seed for random families")
    gen.add_argument("--exclude-k4", action="store_true", help="Reject K4 from random cubic graphs")
    gen.add_argument("-o", "--output", default=None, help="Output file (default: stdout)")
    gen.set_defaults(handler=cmd_gen)

    plan = commands.add_parser("plan", help="Build a storyplan")
    plan.add_argument("-i", "--input", required=True, help="Graph file or family spec")
    plan.add_argument("--mode", choices=MODES, default=PlanMode.FOREST.value)
    plan.add_argument(
        "--algorithm",
        choices=ALGORITHMS,
        default="auto",
        help="Planner; auto tries " + "; ".join(f"{m}: {', '.join(o)}" for m, o in AUTO_ORDER.items()),
    )
    plan.add_argument("-o", "--output", default=None, help="Plan JSON file (default: stdout)")
    plan.set_defaults(handler=cmd_plan)

    verify = commands.add_parser("verify", help="Verify a storyplan")
    verify.add_argument("-g", "--graph", required=True, help="Graph file")
    verify.add_argument("-p", "--plan", required=True, help="Plan JSON file")
    verify.add_argument("--mode", choices=MODES, default=None, help="Class to check (default: the plan's)")
    verify.set_defaults(handler=cmd_verify)

    decide = commands.add_parser("decide", help="Decide whether some order keeps all frames in a class")
    decide.add_argument("-i", "--input", required=True, help="Graph file or family spec")
    decide.add_argument("--class", dest="graph_class", choices=MODES, required=True)
    decide.add_argument("--max-n", type=int, default=None, help="Largest accepted vertex count")
    decide.add_argument(
        "--symmetry", action=argparse.BooleanOptionalAction, default=None, help="Use orbit representatives"
    )
    decide.add_argument("--jobs", type=int, default=None, help="Worker processes")
    decide.add_argument("--budget", type=int, default=None, help="Node budget")
    decide.set_defaults(handler=cmd_decide)

    render = commands.add_parser("render", help="Write SVG frames of a storyplan")
    render.add_argument("-g", "--graph", required=True, help="Graph file")
    render.add_argument("-p", "--plan", required=True, help="Plan JSON file")
    render.add_argument("-o", "--output", required=True, help="Output directory")
    render.add_argument("--config", default=None, help="Render options (YAML or JSON)")
    render.set_defaults(handler=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit code."""
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)
    try:
        code = args.handler(args)
    except (PreconditionError, GraphError, PlanFormatError, ConfigurationError) as e:
        print(f"error: {e}", file=sys.stderr)
        code = EXIT_USAGE
    except StoryplanError as e:
        logger.error("Command failed", command=args.command, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        code = EXIT_NEGATIVE
    if args.metrics_out:
        Path(args.metrics_out).write_bytes(metrics.export())
    return code


if __name__ == "__main__":
    sys.exit(main())
