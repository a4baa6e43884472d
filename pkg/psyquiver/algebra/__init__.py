from .constructors import make_alexander_biquandle, make_jablan_psyquandle
from .parser import parse_algebra, serialize_algebra
from .tables import (
    FiniteAlgebra,
    Flavor,
    OpId,
    classical_fragment,
    kink_map,
    op_apply,
)
from .validation import AxiomViolation, ValidationReport, validate, witness_reproduces

__all__ = [
    "AxiomViolation",
    "FiniteAlgebra",
    "Flavor",
    "OpId",
    "ValidationReport",
    "classical_fragment",
    "kink_map",
    "make_alexander_biquandle",
    "make_jablan_psyquandle",
    "op_apply",
    "parse_algebra",
    "serialize_algebra",
    "validate",
    "witness_reproduces",
]
