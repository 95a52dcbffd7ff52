"""Finite quandles and biquandles: structures, Hom-objects, quotients and knot colorings."""
from .core import (
    AxiomError,
    FiniteBiquandle,
    FiniteQuandle,
    FormatError,
    OperationTable,
    associated_quandle,
    automorphism_group,
    biquandle_isomorphism,
    quandle_as_biquandle,
    quandle_isomorphism,
    validate_biquandle,
    validate_quandle,
)
from .perm import Permutation
from .structures import (
    BiquandleStructure,
    classify_structures,
    enumerate_structures,
    extract_structure,
    induce_biquandle,
)

__all__ = [
    "AxiomError",
    "BiquandleStructure",
    "FiniteBiquandle",
    "FiniteQuandle",
    "FormatError",
    "OperationTable",
    "Permutation",
    "associated_quandle",
    "automorphism_group",
    "biquandle_isomorphism",
    "classify_structures",
    "enumerate_structures",
    "extract_structure",
    "induce_biquandle",
    "quandle_as_biquandle",
    "quandle_isomorphism",
    "validate_biquandle",
    "validate_quandle",
]
