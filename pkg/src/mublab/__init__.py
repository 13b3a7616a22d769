"""mublab: exact certification and search tools for mutually unbiased Hadamard matrices."""

__version__ = "0.1.0"

from .cyclo import CyclotomicInteger, cyclotomic_polynomial, root_sum_is_zero, root_sum_norm_is
from .phases import PhaseScalar, PhaseVector
from .hadamard import (
    HadamardMatrix,
    MatrixFormatError,
    MuhSystem,
    fourier_matrix,
    is_hadamard,
    is_unbiased_pair,
    kron,
    load_matrix,
    load_system,
    normalize,
    prime_complete_system,
    save_json,
)

__all__ = [
    "CyclotomicInteger",
    "HadamardMatrix",
    "MatrixFormatError",
    "MuhSystem",
    "PhaseScalar",
    "PhaseVector",
    "cyclotomic_polynomial",
    "fourier_matrix",
    "is_hadamard",
    "is_unbiased_pair",
    "kron",
    "load_matrix",
    "load_system",
    "normalize",
    "prime_complete_system",
    "root_sum_is_zero",
    "root_sum_norm_is",
    "save_json",
]
