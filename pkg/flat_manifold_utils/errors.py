"""
Error Types for Flat Manifold Utils
===================================

Every documented failure of the computational modules is a subclass of
FlatManifoldError. The ``code`` attribute keys into config.constants.ERROR_CODES
and is what the CLI and HTTP layers report.
"""

from typing import Any, Dict, Optional


class FlatManifoldError(Exception):
    """Base class for all library errors."""

    code = "INTERNAL_ERROR"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_payload(self) -> Dict[str, Any]:
        """Error payload in the shape used by every report."""
        return {"code": self.code, "message": self.message, "details": self.details}


class DimensionMismatch(FlatManifoldError):
    code = "DIMENSION_MISMATCH"


class ContainmentError(FlatManifoldError):
    code = "CONTAINMENT_VIOLATION"


class NotSaturated(FlatManifoldError):
    code = "NOT_SATURATED"


class InvalidGram(FlatManifoldError):
    code = "INVALID_GRAM"


class GroupNotFinite(FlatManifoldError):
    code = "GROUP_NOT_FINITE"

    def __init__(self, bound: int, message: Optional[str] = None):
        super().__init__(
            message or f"group closure exceeded {bound} elements",
            {"bound": bound},
        )
        self.bound = bound


class NotUnimodular(FlatManifoldError):
    code = "NOT_UNIMODULAR"


class NotInvariant(FlatManifoldError):
    code = "NOT_INVARIANT"


class NotIsometric(FlatManifoldError):
    code = "NOT_ISOMETRIC"


class InconsistentVectorSystem(FlatManifoldError):
    code = "INCONSISTENT_VECTOR_SYSTEM"


class HasTorsion(FlatManifoldError):
    code = "HAS_TORSION"


class InvalidSubspace(FlatManifoldError):
    code = "INVALID_SUBSPACE"


class SearchExhausted(FlatManifoldError):
    code = "SEARCH_EXHAUSTED"

    def __init__(self, limit: int):
        super().__init__(f"no generic coset among the first {limit} candidates", {"limit": limit})
        self.limit = limit


class NotComplementary(FlatManifoldError):
    code = "NOT_COMPLEMENTARY"


class NotGeneric(FlatManifoldError):
    code = "NOT_GENERIC"


class InvalidGroupTable(FlatManifoldError):
    code = "INVALID_GROUP_TABLE"


class InvalidDocument(FlatManifoldError):
    code = "INVALID_DOCUMENT"


class OracleMismatch(FlatManifoldError):
    code = "ORACLE_MISMATCH"
