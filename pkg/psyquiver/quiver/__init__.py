from .export import EdgeRecord, VertexRecord, export_dot, export_json_lines, quiver_records
from .isomorphism import quiver_to_networkx, quivers_isomorphic
from .model import Edge, Quiver, build_quiver
from .polynomial import InDegreePolynomial, in_degree_polynomial, parse_polynomial, polynomial_to_string

__all__ = [
    "Edge",
    "EdgeRecord",
    "InDegreePolynomial",
    "Quiver",
    "VertexRecord",
    "build_quiver",
    "export_dot",
    "export_json_lines",
    "in_degree_polynomial",
    "parse_polynomial",
    "polynomial_to_string",
    "quiver_records",
    "quiver_to_networkx",
    "quivers_isomorphic",
]
