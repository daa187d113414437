"""
Пакет критериев и мер запутанности: отрицательность, отрицательность перестановки,
критерий редукции и диагностические множители F, G, H
"""

from entanglement.criteria import (
    min_pt_eigenvalue,
    negativity,
    realignment_negativity,
    reduction_matrices,
    reduction_negativity,
    reduction_negativity_sides,
)
from entanglement.factors import (
    FactorizationCheck,
    PatternViolationError,
    pattern_mass,
    pt_factor_F,
    pt_minors_and_det,
    reduction_diagonal,
    reduction_factors_GH,
)
from entanglement.report import CSV_HEADER, EntanglementReport, analyze
