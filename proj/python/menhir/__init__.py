"""Menhir calculus for relativistic velocity composition."""

from ._core import (
    MenhirError,
    __version__,
    compose,
    golden_scan,
    menhir_of,
    run,
    schema_version,
    verify,
)

__all__ = [
    "MenhirError",
    "__version__",
    "compose",
    "golden_scan",
    "menhir_of",
    "run",
    "schema_version",
    "verify",
]
