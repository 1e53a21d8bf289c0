"""
Report Models
=============

Machine-readable results of every command. Field order is the output key
order, so identical inputs serialize to identical bytes.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from .documents import GroupDocument, SubspaceDocument


class ErrorResponse(BaseModel):
    """Structured error payload"""
    code: str = Field(description="Error code")
    message: str = Field(description="Human-readable message")
    details: Dict[str, Any] = Field(default_factory=dict, description="Additional error details")


class ValidationResponse(BaseModel):
    label: Optional[str] = Field(default=None, description="Label of the validated document")
    dimension: int = Field(description="Dimension n")
    order: int = Field(description="Order of the holonomy group")
    torsion_free: bool = Field(description="No nontrivial finite-order element exists")
    orientable: bool = Field(description="Every holonomy element has determinant 1")
    holonomy_determinants: List[int] = Field(description="Determinant of every holonomy element, in element order")


class ReductionResponse(BaseModel):
    found: bool = Field(description="Whether a proper invariant subspace was found")
    norm_bound: int = Field(description="Sup-norm bound of the orbit-span search")
    dimension: int = Field(description="Dimension of the acting group")
    group_order: int = Field(description="Order of the acting group")
    subspace: Optional[SubspaceDocument] = Field(default=None, description="The invariant subspace found")


class LeafGroupSummary(BaseModel):
    """A leaf Bieberbach group and how it sits in the ambient lattice."""
    group: GroupDocument = Field(description="Leaf group in leaf-lattice coordinates")
    holonomy_order: int = Field(description="Order of the leaf holonomy")
    orientable: bool = Field(description="Leaf orientability")
    lattice_basis: List[List[str]] = Field(description="Leaf lattice basis columns in ambient lattice coordinates")
    lattice_index: int = Field(description="Index of L' in the leaf lattice")
    embedding: List[List[int]] = Field(description="Pairs [ambient holonomy index, leaf holonomy index]")


class SigmaEntryModel(BaseModel):
    index: int = Field(description="Holonomy element index")
    translation: List[str] = Field(description="Lattice vector lambda0; the solution coset is lambda0 + L'")
    shift: List[str] = Field(description="Translational part b(A) + lambda0, lying in V'")


class CosetAnalysis(BaseModel):
    point: List[str] = Field(description="Requested point x0")
    representative: List[str] = Field(description="Gram-orthogonal representative of x0 + V'")
    stabilizer_index: int = Field(description="Index of Sigma' in the coset stabilizer")
    generic: bool = Field(description="Whether the coset is generic")
    stabilizing: List[int] = Field(description="Holonomy indices of stabilizing elements")
    leaf_group: LeafGroupSummary = Field(description="Leaf group of this coset")


class OrbifoldSummary(BaseModel):
    dimension: int = Field(description="Dimension of V/V'")
    quotient_gram: List[List[str]] = Field(description="Induced inner product on V/V' in L/L' coordinates")
    induced_matrices: List[List[List[int]]] = Field(description="Distinct induced matrices on L/L'")
    induced_vectors: List[List[str]] = Field(description="Projected translational part for each induced matrix")
    base: GroupDocument = Field(description="The induced action over the effective lattice")
    base_order: int = Field(description="Order of the effective point group")
    lattice_index: int = Field(description="Index of L/L' in the effective lattice")
    relative_covolume: str = Field(description="Covolume of the effective lattice relative to L/L'")
    torsion_free: bool = Field(description="True in the fibration case; false signals orbifold singularities")


class IsotropyDiagnostic(BaseModel):
    k_prime: List[int] = Field(description="Holonomy elements acting trivially on the orthogonal complement")
    alpha_sigma: List[int] = Field(description="Holonomy image of the generic isotropy group")
    equal: bool = Field(description="Whether the two groups coincide")
    index: int = Field(description="Index of alpha(Sigma') in K'")


class FoliationResponse(BaseModel):
    dimension: int = Field(description="Dimension n")
    rank: int = Field(description="Dimension of V'")
    subspace: SubspaceDocument = Field(description="The saturated subspace V'")
    complement: SubspaceDocument = Field(description="Gram-orthogonal complement of V'")
    k_prime: List[int] = Field(description="K' as holonomy indices")
    alpha_sigma: List[int] = Field(description="Contributing holonomy indices of Sigma'")
    sigma: List[SigmaEntryModel] = Field(description="Translation coset of every contributing element")
    leaf_group: LeafGroupSummary = Field(description="Generic leaf group")
    covering_degree: int = Field(description="Order of the generic leaf holonomy")
    leaf_orientable: bool = Field(description="Orientability of the generic leaves")
    generic_witness: List[str] = Field(description="A rational point with a generic coset")
    cosets: List[CosetAnalysis] = Field(default_factory=list, description="Requested coset analyses")
    orbifold: OrbifoldSummary = Field(description="Leaf space")
    diagnostic: IsotropyDiagnostic = Field(description="K' compared with alpha(Sigma')")


class IntersectionResponse(BaseModel):
    t: int = Field(description="Points of the torus intersection, |L/(L'+L'')|")
    hhat: int = Field(description="|H / alpha(Sigma') alpha(Sigma'')|")
    m: int = Field(description="Points of the manifold intersection")
    oracle_t: Optional[int] = Field(default=None, description="Brute-force torus count")
    oracle_m: Optional[int] = Field(default=None, description="Brute-force manifold count")
    oracle_agrees: Optional[bool] = Field(default=None, description="Both brute-force counts agree with the formulas")
    witness1: List[str] = Field(description="Generic point for V'")
    witness2: List[str] = Field(description="Generic point for V''")
    product_subgroup: List[int] = Field(description="alpha(Sigma') alpha(Sigma'') as holonomy indices")
    injective: bool = Field(description="No class of L/(L'+L'') is realized by a translation in Sigma' Sigma''")


class CorpusResponse(BaseModel):
    group: GroupDocument = Field(description="Group document for downstream commands")
    v1: SubspaceDocument = Field(description="First invariant subspace")
    v2: SubspaceDocument = Field(description="Second invariant subspace")


class DecompositionFactorModel(BaseModel):
    subspace: SubspaceDocument
    certified: bool = Field(description="True for rank one; otherwise minimal only at the search bound")


class DecompositionResponse(BaseModel):
    norm_bound: int = Field(description="Sup-norm bound of the search")
    factors: List[DecompositionFactorModel] = Field(description="Invariant summands")


class ComplementResponse(BaseModel):
    subspace: SubspaceDocument = Field(description="Input subspace, saturated")
    complement: SubspaceDocument = Field(description="Invariant complement")
    projector: List[List[str]] = Field(description="Averaged projector onto the subspace")
