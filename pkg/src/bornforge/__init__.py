"""Exact verification and construction of Born structures on Lie algebras."""

from .linalg import ContractError, Matrix, Signature, kernel, signature_of_symmetric, solve_linear
from .lie import LieAlgebra, Subspace, check_jacobi, parse_salamon, print_salamon

__version__ = "0.1.0"

__all__ = [
    "ContractError",
    "LieAlgebra",
    "Matrix",
    "Signature",
    "Subspace",
    "check_jacobi",
    "kernel",
    "parse_salamon",
    "print_salamon",
    "signature_of_symmetric",
    "solve_linear",
]
