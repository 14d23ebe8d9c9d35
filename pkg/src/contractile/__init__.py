"""Induced-structure detection, recognition and colouring for perfectly contractile graph classes."""

from __future__ import annotations

__version__ = "0.1.0"

from .coloring import Coloring, color_class_a, is_even_pair_definitional, is_even_pair_via_berge
from .errors import BudgetExceeded, ContractileError, GraphParseError, GraphUsageError, InvariantViolation, PreconditionError
from .graph import Graph, complement, encode_graph6, parse_edge_list, parse_graph, parse_graph6
from .holes import find_long_antihole, find_long_hole, is_berge_desk
from .oracle import build_lg_subdivided_k4, oracle_find, oracle_has
from .parity import (
    detect_even_prism,
    detect_lg_bipartite_subdivision_k4,
    detect_lg_proper_subdivision_k4,
    detect_odd_prism,
)
from .prism_pyramid import detect_pyramid_or_prism_v1, detect_pyramid_or_prism_v2, three_exits
from .recognize import RecognitionReport, recognize_class_a, recognize_class_a_prime
from .structures import HoleWitness, LGK4Witness, PrismWitness, PyramidWitness, witness_from_dict

__all__ = [
    "BudgetExceeded",
    "Coloring",
    "ContractileError",
    "Graph",
    "GraphParseError",
    "GraphUsageError",
    "HoleWitness",
    "InvariantViolation",
    "LGK4Witness",
    "PreconditionError",
    "PrismWitness",
    "PyramidWitness",
    "RecognitionReport",
    "build_lg_subdivided_k4",
    "color_class_a",
    "complement",
    "detect_even_prism",
    "detect_lg_bipartite_subdivision_k4",
    "detect_lg_proper_subdivision_k4",
    "detect_odd_prism",
    "detect_pyramid_or_prism_v1",
    "detect_pyramid_or_prism_v2",
    "encode_graph6",
    "find_long_antihole",
    "find_long_hole",
    "is_berge_desk",
    "is_even_pair_definitional",
    "is_even_pair_via_berge",
    "oracle_find",
    "oracle_has",
    "parse_edge_list",
    "parse_graph",
    "parse_graph6",
    "recognize_class_a",
    "recognize_class_a_prime",
    "three_exits",
    "witness_from_dict",
]
