from .maps import EndoMap, EndoSet, compose, is_automorphism
from .parser import parse_endo_set, serialize_endo_set
from .search import (
    EndoCheck,
    Witness,
    constant_endomorphisms,
    enumerate_endomorphisms,
    is_endomorphism,
    is_monoid,
)

__all__ = [
    "EndoCheck",
    "EndoMap",
    "EndoSet",
    "Witness",
    "compose",
    "constant_endomorphisms",
    "enumerate_endomorphisms",
    "is_automorphism",
    "is_endomorphism",
    "is_monoid",
    "parse_endo_set",
    "serialize_endo_set",
]
