"""Prometheus metrics for planners, the verifier and the oracle."""

from prometheus_client import CollectorRegistry, Counter, Histogram, generate_latest

# Create registry
registry = CollectorRegistry()

plans_total = Counter(
    "storyplan_plans_total",
    "Storyplans produced",
    ["algorithm", "mode"],
    registry=registry,
)

plan_duration_seconds = Histogram(
    "storyplan_plan_duration_seconds",
    "Time spent building a storyplan",
    ["algorithm"],
    registry=registry,
)

verify_total = Counter(
    "storyplan_verify_total",
    "Storyplan verifications",
    ["mode", "result"],
    registry=registry,
)

oracle_nodes_total = Counter(
    "storyplan_oracle_nodes_total",
    "Search nodes explored by the oracle",
    ["graph_class"],
    registry=registry,
)

placement_fallbacks_total = Counter(
    "storyplan_placement_fallbacks_total",
    "Placements or picks resolved outside the primary case analysis",
    ["planner"],
    registry=registry,
)


class Metrics:
    """Metrics wrapper for easy access."""

    def __init__(self):
        self.plans_total = plans_total
        self.plan_duration_seconds = plan_duration_seconds
        self.verify_total = verify_total
        self.oracle_nodes_total = oracle_nodes_total
        self.placement_fallbacks_total = placement_fallbacks_total
        self.registry = registry

    def export(self) -> bytes:
        """Render the registry in the Prometheus text exposition format."""
        return generate_latest(self.registry)


metrics = Metrics()
