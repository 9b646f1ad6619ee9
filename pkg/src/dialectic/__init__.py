"""Deterministic belief-optimization engine for multi-agent dialectical
debate: graph-structured belief documents, strength propagation, patch-based
revision, adjudicated challenge-rebuttal exchanges, and analytics."""

__version__ = "0.1.0"

from .model import Belief, NodeId, NodeKind, Thesis  # noqa: F401
from .serialize import load_belief, save_belief  # noqa: F401
from .strength import StrengthParams, thesis_strength  # noqa: F401
from .validation import validate_belief  # noqa: F401
