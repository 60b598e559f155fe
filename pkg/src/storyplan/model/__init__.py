"""Storyplan data model, frame derivation and verification."""

from storyplan.model.document import load_plan, plan_from_document, plan_to_document, save_plan
from storyplan.model.frames import FrameTracker, frame_graphs, frames, lifespans
from storyplan.model.models import (
    Frame,
    FrameCheck,
    FrameGraph,
    Lifespan,
    PlanDocument,
    PlanMode,
    Storyplan,
    VerifyReport,
)
from storyplan.model.verifier import restrict_plan, verify_storyplan

__all__ = [
    "Frame",
    "FrameCheck",
    "FrameGraph",
    "FrameTracker",
    "Lifespan",
    "PlanDocument",
    "PlanMode",
    "Storyplan",
    "VerifyReport",
    "frame_graphs",
    "frames",
    "lifespans",
    "load_plan",
    "plan_from_document",
    "plan_to_document",
    "restrict_plan",
    "save_plan",
    "verify_storyplan",
]
