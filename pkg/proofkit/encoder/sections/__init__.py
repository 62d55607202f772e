"""Constraint sections of the proof encoding."""

from .base import EncodingSection, StepSection
from .shape import ContentsShapeSection, StepSkeletonSection
from .assumption import AssumptionSection
from .modus_ponens import ModusPonensSection
from .cases import CaseSplitSection
from .closing import ClosingSection
from .visibility import VisibilitySection
from .goal import GoalSection
from .abducts import AbductSection
from .hints import HintSection

__all__ = [
    "EncodingSection",
    "StepSection",
    "ContentsShapeSection",
    "StepSkeletonSection",
    "AssumptionSection",
    "ModusPonensSection",
    "CaseSplitSection",
    "ClosingSection",
    "VisibilitySection",
    "GoalSection",
    "AbductSection",
    "HintSection",
]
