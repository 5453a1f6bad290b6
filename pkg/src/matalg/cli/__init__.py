"""Document I/O, verification suites, and the command-line entry point."""

from .documents import (
    BasisDocument,
    DocumentError,
    format_rational,
    parse_basis_document,
    parse_rational,
    serialize_basis_document,
)
from .main import main
from .suites import (
    SUITE_NAMES,
    CheckRecord,
    VerificationReport,
    corpus_algebras,
    enumerate_unit_pattern_subalgebras,
    run_verification,
    suite_supported_ns,
)

__all__ = [
    "BasisDocument",
    "DocumentError",
    "format_rational",
    "parse_basis_document",
    "parse_rational",
    "serialize_basis_document",
    "CheckRecord",
    "VerificationReport",
    "SUITE_NAMES",
    "suite_supported_ns",
    "corpus_algebras",
    "enumerate_unit_pattern_subalgebras",
    "run_verification",
    "main",
]
