"""Eisenstein series, Sczech cocycles and Hecke L-values over imaginary quadratic fields."""

from ._core import (
    DomainError,
    Error,
    PoleError,
    RecognitionError,
    UnderflowError,
    UnsupportedError,
    UsageError,
    Value,
    class_number,
    cocycle,
    dedekind_sum,
    g2,
    kronecker,
    lvalue,
    normalize_discriminant,
    table,
    verify,
)

__all__ = [
    "DomainError",
    "Error",
    "PoleError",
    "RecognitionError",
    "UnderflowError",
    "UnsupportedError",
    "UsageError",
    "Value",
    "class_number",
    "cocycle",
    "dedekind_sum",
    "g2",
    "kronecker",
    "lvalue",
    "normalize_discriminant",
    "table",
    "verify",
]
