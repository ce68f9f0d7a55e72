"""Exact rigidity certificates for rank-two compact Hermitian symmetric spaces.

Thin python layer over the C++ core: model registry, decomposition tables,
module-expression decomposition and the full vanishing pipeline.
"""

from chssrig._core import (  # noqa: F401
    decompose,
    models,
    second_fundamental_form,
    tables,
    verify,
    verify_json,
)

__all__ = [
    "decompose",
    "models",
    "second_fundamental_form",
    "tables",
    "verify",
    "verify_json",
]
