from .codec import check_diagram, parse_diagram, serialize_diagram
from .model import (
    CrossingConstraint,
    CrossingKind,
    CrossingPass,
    DiagramCode,
    DiagramKind,
    PassKind,
    Role,
    Semiarc,
    Sign,
)
from .moves import Move, perturb
from .orientation import orientations, reverse_components
from .semiarcs import crossing_constraints, semiarcs

__all__ = [
    "CrossingConstraint",
    "CrossingKind",
    "CrossingPass",
    "DiagramCode",
    "DiagramKind",
    "Move",
    "PassKind",
    "Role",
    "Semiarc",
    "Sign",
    "check_diagram",
    "crossing_constraints",
    "parse_diagram",
    "orientations",
    "perturb",
    "reverse_components",
    "semiarcs",
    "serialize_diagram",
]
