"""Executable intrinsic-linking mathematics: the Petersen family, minor
tests, intrinsically 3-linked constructions, mod-2 linking on crossing
diagrams and 3-link witness searches."""

from .certify import check_witness
from .constructions import (
    build_m,
    double_star,
    edge_identify,
    five_edge_join,
    k44_attach,
    named_graph,
    six_cycle_connect,
    star_identify,
    vertex_identify,
)
from .cycles import Cycle, disjoint_cycle_tuples, enumerate_cycles
from .diagram import Diagram, Passage, diagram_from_drawing, diagram_from_points, moment_curve_points, validate_diagram
from .enm import check_enm_criterion, generate_enm, min_enm
from .errors import LinkforgeError
from .family import FAMILY_ORDER, family_member, petersen_family
from .fm import fm_diagram
from .graph import Graph, contract_edge, delete_edge
from .isomorphism import is_isomorphic
from .minors import MinorModel, find_minor, is_intrinsically_linked, is_minor_minimal_il, verify_minor_model
from .moves import MoveSite, move_closure, nabla_y_move, y_nabla_move
from .spatial import (
    Witness,
    k44_edge_link_check,
    linked_pairs,
    mod2_linking,
    pairwise_linked_triples,
    verify_no_3link_certificate,
    witness_shared_arc,
    witness_shared_vertex_path,
    witness_two_path,
)

__version__ = "0.1.0"

__all__ = [
    "Cycle",
    "Diagram",
    "FAMILY_ORDER",
    "Graph",
    "LinkforgeError",
    "MinorModel",
    "MoveSite",
    "Passage",
    "Witness",
    "build_m",
    "check_enm_criterion",
    "check_witness",
    "contract_edge",
    "delete_edge",
    "diagram_from_drawing",
    "diagram_from_points",
    "disjoint_cycle_tuples",
    "double_star",
    "edge_identify",
    "enumerate_cycles",
    "family_member",
    "find_minor",
    "five_edge_join",
    "fm_diagram",
    "generate_enm",
    "is_intrinsically_linked",
    "is_isomorphic",
    "is_minor_minimal_il",
    "k44_attach",
    "k44_edge_link_check",
    "linked_pairs",
    "min_enm",
    "mod2_linking",
    "moment_curve_points",
    "move_closure",
    "nabla_y_move",
    "named_graph",
    "pairwise_linked_triples",
    "petersen_family",
    "six_cycle_connect",
    "star_identify",
    "validate_diagram",
    "verify_minor_model",
    "verify_no_3link_certificate",
    "vertex_identify",
    "witness_shared_arc",
    "witness_shared_vertex_path",
    "witness_two_path",
    "y_nabla_move",
]
