"""
Wire models: input documents, HTTP request bodies and command reports
"""

from .documents import (
    GroupDocument,
    GroupTableDocument,
    MatrixGroupDocument,
    SubspaceDocument,
    parse_rat,
    rat_str,
)
from .reports import (
    ComplementResponse,
    CorpusResponse,
    DecompositionResponse,
    ErrorResponse,
    FoliationResponse,
    IntersectionResponse,
    ReductionResponse,
    ValidationResponse,
)

__all__ = [
    # Documents
    "GroupDocument",
    "GroupTableDocument",
    "MatrixGroupDocument",
    "SubspaceDocument",
    "parse_rat",
    "rat_str",

    # Reports
    "ComplementResponse",
    "CorpusResponse",
    "DecompositionResponse",
    "ErrorResponse",
    "FoliationResponse",
    "IntersectionResponse",
    "ReductionResponse",
    "ValidationResponse",
]
