"""
Пакет плотной комплексной линейной алгебры для малых матриц (размерность <= 81)
"""

from matkit.linalg import (
    CMatrix,
    DTYPE,
    MatKitError,
    NonSquareError,
    NotHermitianError,
    as_cmatrix,
    determinant,
    hermitian_eigenvalues,
    hermiticity_residual,
    identity,
    kron,
    leading_principal_minors,
    matrix_unit,
    singular_values,
    trace_norm,
)
