"""Shifted plactic monoid: shifted tableaux, mixed and SK insertion, and shifted LR coefficients."""

from .core import ShiftedTableau, SkewStandardShiftedTableau, StandardShiftedTableau, content
from .insertion import mixed_insertion, mread, p_mix, q_mix, rsk_insertion, special_recording_tableau
from .rewriting import enumerate_plactic_classes, enumerate_shifted_classes, equivalent_by_relations
from .ssdt import DecompositionTableau, phi, psi, read, sk_insertion

__all__ = [
    "DecompositionTableau",
    "ShiftedTableau",
    "SkewStandardShiftedTableau",
    "StandardShiftedTableau",
    "content",
    "enumerate_plactic_classes",
    "enumerate_shifted_classes",
    "equivalent_by_relations",
    "mixed_insertion",
    "mread",
    "p_mix",
    "phi",
    "psi",
    "q_mix",
    "read",
    "rsk_insertion",
    "sk_insertion",
    "special_recording_tableau",
]
