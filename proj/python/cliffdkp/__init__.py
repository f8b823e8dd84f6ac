"""Exact projector-basis Clifford algebra, DKP generators and field-equation tools."""

from ._core import (
    AlgebraError,
    Element,
    adjoint,
    basis,
    bracket,
    contract,
    derive_dwh,
    dim_zp,
    dkp_generator,
    embed_covector,
    embed_vector,
    in_zp,
    parse_expr,
    projector_P,
    projector_Pi,
    run_cli,
    unit,
    verify,
    zp_basis,
)

__all__ = [
    "AlgebraError",
    "Element",
    "adjoint",
    "basis",
    "bracket",
    "contract",
    "derive_dwh",
    "dim_zp",
    "dkp_generator",
    "embed_covector",
    "embed_vector",
    "in_zp",
    "parse_expr",
    "projector_P",
    "projector_Pi",
    "run_cli",
    "unit",
    "verify",
    "zp_basis",
]
