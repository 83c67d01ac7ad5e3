"""Exact verification of the exterior-square Dirichlet series on GL(n)."""

from .algebra import BiSeries, SymPoly, poly_add, poly_mul, quotient_normalize, series_inverse, series_mul
from .identities import (
    VerificationReport,
    verify_bf,
    verify_hecke,
    verify_littlewood,
    verify_reindexing,
    verify_theorem1,
)
from .lseries import SatakeData, global_coefficient, load_satake, local_coefficient, numeric_verify_theorem1
from .symmetric import FourierIndex, Partition, conjugate, lambda_of_index, schur, schur_oracle

__version__ = "0.1.0"
