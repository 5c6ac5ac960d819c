"""Alternating multivariate exponential functions and their transforms."""

from ._core import (
    DimensionError,
    DomainError,
    Error,
    FormatError,
    GridSpec,
    SizeLimitError,
    affine_reduce,
    alternating_group,
    alternating_group_order,
    eval_E,
    eval_E_minus,
    eval_E_plus,
    forward,
    hermite_1d_transform,
    hermite_polynomial,
    interpolate,
    inverse,
    is_semidominant,
    laplace_eigenvalues,
    sample,
    semidominant_normalize,
    stabilizer_order,
    stated_hermite_eigenvalue,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
