"""Quantum Schur-Weyl transform built from cascaded Pieri transforms."""

from .insertion import (
    InsertionOutcome,
    RskPair,
    dual_rsk_insert,
    dual_rsk_word,
    q_insert,
    rsk_insert,
    rsk_inverse,
    rsk_word,
)
from .pieri import pieri_column, pieri_matrix, reduced_wigner_transform, wigner, wigner_recursive
from .qarith import DivergentLimitError, LogScalar, QParam, qint, qint_ratio, qpow_half
from .schurweyl import (
    SchurBasisLabel,
    crystal_limit_transform,
    schur_apply,
    schur_basis,
    schur_transform_dense,
    verify_intertwiner_hecke,
    verify_intertwiner_qgroup,
)
from .tableaux import Partition, SemiStandardTableau, StandardTableau, enumerate_ssyt, enumerate_syt

__version__ = "0.1.0"

__all__ = [
    "DivergentLimitError", "InsertionOutcome", "LogScalar", "Partition", "QParam", "RskPair",
    "SchurBasisLabel", "SemiStandardTableau", "StandardTableau", "crystal_limit_transform",
    "dual_rsk_insert", "dual_rsk_word", "enumerate_ssyt", "enumerate_syt", "pieri_column",
    "pieri_matrix", "q_insert", "qint", "qint_ratio", "qpow_half", "reduced_wigner_transform",
    "rsk_insert", "rsk_inverse", "rsk_word", "schur_apply", "schur_basis", "schur_transform_dense",
    "verify_intertwiner_hecke", "verify_intertwiner_qgroup", "wigner", "wigner_recursive",
]
