"""
HTTP Request Bodies
===================

Each body bundles the documents the matching CLI command reads from files.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from .documents import GroupDocument, GroupTableDocument, MatrixGroupDocument, SubspaceDocument


class ValidateRequest(BaseModel):
    group: GroupDocument


class ReduceRequest(BaseModel):
    group: Dict[str, Any] = Field(description="Group document; read as a bare matrix group when matrices_only is set")
    matrices_only: bool = Field(default=False, description="Skip Bieberbach validation and search the bare matrix group")
    norm_bound: Optional[int] = Field(default=None, ge=0, description="Override of the orbit-span search bound; 0 skips the orbit stage")


class FoliateRequest(BaseModel):
    group: GroupDocument
    subspace: SubspaceDocument
    cosets: List[List[str]] = Field(default_factory=list, description="Rational points whose cosets are analysed")


class IntersectRequest(BaseModel):
    group: GroupDocument
    v1: SubspaceDocument
    v2: SubspaceDocument
    oracle: bool = Field(default=False, description="Also run both brute-force counts")


class KleinRequest(BaseModel):
    n: int = Field(ge=2, description="Dimension of the generalized Klein bottle")


class RegularRepRequest(BaseModel):
    table: GroupTableDocument


class DecomposeRequest(BaseModel):
    group: MatrixGroupDocument
    subspace: Optional[SubspaceDocument] = Field(default=None, description="Defaults to the full lattice")
    norm_bound: Optional[int] = Field(default=None, ge=0)


class ComplementRequest(BaseModel):
    group: MatrixGroupDocument
    subspace: SubspaceDocument
