"""Exact K-theory calculator for Cuntz-Krieger algebras.

Computes K0 and K1 of the algebra of a 0-1 matrix -- finite, or infinite
with an eventually periodic presentation -- together with the unitized
variants, the spectrum's accumulation columns, unitality detection,
relation checking, and an independent brute-force oracle.  All arithmetic
is exact.
"""

__version__ = "0.1.0"

from .epseq import EpSeq, delta, finite_support_data, masked_sum
from .errors import CkError, GuardExceeded, InternalInvariantError, InvalidPresentation
from .intlinalg import (
    FgAbelianGroup,
    IntMatrix,
    SmithCertificate,
    cokernel_invariants,
    hnf,
    kernel_basis,
    snf,
    solve_linear,
)
from .ktheory import (
    KTheoryResult,
    k0_infinite,
    k1_infinite,
    k_groups,
    k_groups_finite,
    k_groups_unital,
)
from .presentation import (
    Classification,
    EpPresentation,
    FiniteMatrix,
    MatrixPresentation,
    classify,
    parse_document,
    truncate,
)
from .spectrum import SpectrumDescription, gamma_description, is_unital

__all__ = [
    "__version__",
    "CkError",
    "Classification",
    "EpPresentation",
    "EpSeq",
    "FgAbelianGroup",
    "FiniteMatrix",
    "GuardExceeded",
    "IntMatrix",
    "InternalInvariantError",
    "InvalidPresentation",
    "KTheoryResult",
    "MatrixPresentation",
    "SmithCertificate",
    "SpectrumDescription",
    "classify",
    "cokernel_invariants",
    "delta",
    "finite_support_data",
    "gamma_description",
    "hnf",
    "is_unital",
    "k0_infinite",
    "k1_infinite",
    "k_groups",
    "k_groups_finite",
    "k_groups_unital",
    "kernel_basis",
    "masked_sum",
    "parse_document",
    "snf",
    "solve_linear",
    "truncate",
]
