"""Group-ring code constructions over GF(2) and GF(4)."""

from .fields import GF2, GF4, Field, field_make
from .groups import Cyclic, DirectProduct, GeneralizedDihedral, cyclic_tower, dihedral
from .groupring import GroupRingElement
from .linalg import FieldMatrix
from .constructions import (
    ConstructionError,
    DifferenceSet,
    FamilySpec,
    WitnessSearchError,
    build_element,
    build_generator_element,
    check_element,
    claimed_params,
    diffset_char2_check,
    family_profile,
    parse_spec,
    qr_difference_set,
    witness_codeword,
)
from .codes import (
    CodeReport,
    DistanceCapError,
    FourCycleReport,
    LinearCode,
    QuantumParams,
    analyze,
    code_from_element,
    dual_code,
    family_code,
    four_cycle_report,
    is_dual_containing,
    is_self_dual,
    min_distance_exhaustive,
    min_distance_search,
    quantum_params,
    weight_distribution,
)
from .cli import cli_main

__all__ = [
    "GF2", "GF4", "Field", "field_make",
    "Cyclic", "DirectProduct", "GeneralizedDihedral", "cyclic_tower", "dihedral",
    "GroupRingElement", "FieldMatrix",
    "ConstructionError", "DifferenceSet", "FamilySpec", "WitnessSearchError",
    "build_element", "build_generator_element", "check_element",
    "claimed_params", "diffset_char2_check", "family_profile", "parse_spec",
    "qr_difference_set", "witness_codeword",
    "CodeReport", "DistanceCapError", "FourCycleReport", "LinearCode",
    "QuantumParams", "analyze", "code_from_element", "dual_code",
    "family_code", "four_cycle_report", "is_dual_containing", "is_self_dual",
    "min_distance_exhaustive", "min_distance_search", "quantum_params",
    "weight_distribution",
    "cli_main",
]
