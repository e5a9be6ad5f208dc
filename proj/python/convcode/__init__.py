"""Convertible MDS codes: finite fields, extended GRS codes, conversion plans."""

from ._convcode import (
    CorruptionError,
    DomainError,
    ExtGrsSpec,
    Field,
    InsufficientDataError,
    ParameterError,
    UsageError,
    bounds,
    build_plan,
    convert,
    encode,
    generator,
    initial_codes,
    is_codeword,
    is_mds,
    parity_check,
    puncture,
    recover_erasures,
    verify,
)

__all__ = [
    "CorruptionError",
    "DomainError",
    "ExtGrsSpec",
    "Field",
    "InsufficientDataError",
    "ParameterError",
    "UsageError",
    "bounds",
    "build_plan",
    "convert",
    "encode",
    "generator",
    "initial_codes",
    "is_codeword",
    "is_mds",
    "parity_check",
    "puncture",
    "recover_erasures",
    "verify",
]
