from .solver import (
    Coloring,
    ColoringSet,
    brute_force_colorings,
    check_flavor,
    counting_invariant,
    crossing_relation,
    enumerate_colorings,
)

__all__ = [
    "Coloring",
    "ColoringSet",
    "brute_force_colorings",
    "check_flavor",
    "counting_invariant",
    "crossing_relation",
    "enumerate_colorings",
]
