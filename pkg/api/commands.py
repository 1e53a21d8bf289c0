"""
Command Dispatch
================

One function per batch operation. The CLI and the HTTP routes both call
these; each takes parsed documents plus the runtime settings and returns a
report model. Library errors propagate unchanged so the caller can map them
to an exit code or a status code.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence, Type, TypeVar

from pydantic import BaseModel, ValidationError
from sympy import ImmutableMatrix

from config.settings import Settings
from flat_manifold_utils.bieberbach import holonomy_determinants, is_orientable, is_torsion_free
from flat_manifold_utils.corpus import klein_bottle, regular_rep
from flat_manifold_utils.errors import DimensionMismatch, InvalidDocument, OracleMismatch
from flat_manifold_utils.exactlin import column, identity, zeros
from flat_manifold_utils.foliation import (
    FoliationContext,
    LeafGroup,
    alpha_sigma,
    coset_stabilizer,
    covering_degree,
    kprime_diagnostic,
    leaf_group_generic,
    leaf_orientable,
    leaf_space_orbifold,
    sample_generic_coset,
)
from flat_manifold_utils.intersect import injectivity_violations, intersection_numbers
from flat_manifold_utils.invariant import (
    averaged_projector,
    find_proper_invariant_subspace,
    invariant_complement,
    minimal_decomposition,
)
from flat_manifold_utils.lattice import Sublattice
from models.documents import (
    GroupDocument,
    GroupTableDocument,
    MatrixGroupDocument,
    SubspaceDocument,
    parse_rat,
    rat_list,
    rat_rows,
    rat_str,
)
from models.reports import (
    ComplementResponse,
    CorpusResponse,
    CosetAnalysis,
    DecompositionFactorModel,
    DecompositionResponse,
    FoliationResponse,
    IntersectionResponse,
    IsotropyDiagnostic,
    LeafGroupSummary,
    OrbifoldSummary,
    ReductionResponse,
    SigmaEntryModel,
    ValidationResponse,
)

logger = logging.getLogger(__name__)

DocT = TypeVar("DocT", bound=BaseModel)


def parse_document(model: Type[DocT], raw: Dict[str, Any], source: str = "document") -> DocT:
    """Validate a raw JSON object, reporting failures as InvalidDocument."""
    try:
        return model.model_validate(raw)
    except ValidationError as e:
        errors = [
            {"location": ".".join(str(p) for p in err["loc"]), "message": err["msg"]}
            for err in e.errors()
        ]
        raise InvalidDocument(f"{source} is not a valid {model.__name__}", details={"errors": errors})


def parse_point(values: Sequence[Any], n: int) -> ImmutableMatrix:
    try:
        point = column([parse_rat(v) for v in values])
    except ValueError as e:
        raise InvalidDocument(str(e), details={"point": [str(v) for v in values]})
    if point.rows != n:
        raise DimensionMismatch(f"coset point has {point.rows} coordinates, expected {n}")
    return point


def _columns(m: ImmutableMatrix) -> List[List[str]]:
    return [rat_list(m.col(j)) for j in range(m.cols)]


def _leaf_summary(leaf: LeafGroup, settings: Settings) -> LeafGroupSummary:
    return LeafGroupSummary(
        group=GroupDocument.from_group(leaf.group, schema_version=settings.schema_version),
        holonomy_order=leaf.group.order,
        orientable=is_orientable(leaf.group),
        lattice_basis=_columns(leaf.basis),
        lattice_index=leaf.lattice_index,
        embedding=[[a, b] for a, b in leaf.embedding],
    )


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_validate(doc: GroupDocument, settings: Settings) -> ValidationResponse:
    g = doc.to_group(settings.group_order_bound)
    logger.info(f"Validated group of dimension {g.n}, holonomy order {g.order}")
    return ValidationResponse(
        label=doc.label,
        dimension=g.n,
        order=g.order,
        torsion_free=is_torsion_free(g),
        orientable=is_orientable(g),
        holonomy_determinants=list(holonomy_determinants(g)),
    )


def cmd_reduce(
    raw: Dict[str, Any],
    settings: Settings,
    norm_bound: Optional[int] = None,
    matrices_only: bool = False,
) -> ReductionResponse:
    """Search for a proper invariant subspace of the holonomy group (or a bare matrix group)."""
    bound = settings.reduce_norm_bound if norm_bound is None else norm_bound
    if matrices_only:
        hol = parse_document(MatrixGroupDocument, raw, "group").to_holonomy(settings.group_order_bound)
    else:
        hol = parse_document(GroupDocument, raw, "group").to_group(settings.group_order_bound).hol

    found = find_proper_invariant_subspace(hol, bound)
    return ReductionResponse(
        found=found is not None,
        norm_bound=bound,
        dimension=hol.n,
        group_order=hol.order,
        subspace=SubspaceDocument.from_sublattice(found) if found is not None else None,
    )


def cmd_foliate(
    group_doc: GroupDocument,
    subspace_doc: SubspaceDocument,
    cosets: Sequence[Sequence[Any]],
    settings: Settings,
) -> FoliationResponse:
    g = group_doc.to_group(settings.group_order_bound)
    ctx = FoliationContext(g, subspace_doc.to_sublattice())

    analyses = []
    for values in cosets:
        point = parse_point(values, g.n)
        stab = coset_stabilizer(ctx, point)
        analyses.append(
            CosetAnalysis(
                point=rat_list(point),
                representative=rat_list(stab.representative),
                stabilizer_index=stab.index,
                generic=stab.index == 1,
                stabilizing=list(stab.stabilizing),
                leaf_group=_leaf_summary(stab.leaf_group, settings),
            )
        )

    orb = leaf_space_orbifold(ctx)
    orbifold = OrbifoldSummary(
        dimension=orb.dimension,
        quotient_gram=rat_rows(orb.quotient_gram),
        induced_matrices=[[[int(x) for x in m.row(i)] for i in range(m.rows)] for m in orb.induced_matrices],
        induced_vectors=[rat_list(v) for v in orb.induced_vectors],
        base=GroupDocument.from_group(orb.base, schema_version=settings.schema_version),
        base_order=orb.base.order,
        lattice_index=orb.lattice_index,
        relative_covolume=rat_str(orb.relative_covolume),
        torsion_free=orb.torsion_free,
    )

    report = FoliationResponse(
        dimension=g.n,
        rank=ctx.vprime.rank,
        subspace=SubspaceDocument.from_sublattice(ctx.vprime),
        complement=SubspaceDocument.from_sublattice(ctx.complement),
        k_prime=sorted(ctx.kprime),
        alpha_sigma=sorted(alpha_sigma(ctx)),
        sigma=[
            SigmaEntryModel(index=e.index, translation=rat_list(e.translation), shift=rat_list(e.shift))
            for e in ctx.sigma
        ],
        leaf_group=_leaf_summary(leaf_group_generic(ctx), settings),
        covering_degree=covering_degree(ctx),
        leaf_orientable=leaf_orientable(ctx),
        generic_witness=rat_list(sample_generic_coset(ctx, settings.generic_search_limit)),
        cosets=analyses,
        orbifold=orbifold,
        diagnostic=IsotropyDiagnostic(**kprime_diagnostic(ctx)),
    )
    logger.info(f"Foliation of rank {report.rank}: covering degree {report.covering_degree}")
    return report


def cmd_intersect(
    group_doc: GroupDocument,
    v1_doc: SubspaceDocument,
    v2_doc: SubspaceDocument,
    oracle: bool,
    settings: Settings,
) -> IntersectionResponse:
    """Intersection numbers of generic leaves; with ``oracle`` a disagreement raises OracleMismatch."""
    g = group_doc.to_group(settings.group_order_bound)
    v1, v2 = v1_doc.to_sublattice(), v2_doc.to_sublattice()
    report = intersection_numbers(g, v1, v2, with_oracle=oracle, search_limit=settings.generic_search_limit)

    if oracle and not report.oracle_agrees:
        raise OracleMismatch(
            "intersection formula disagrees with enumeration",
            details={
                "t": report.t,
                "m": report.m,
                "oracle_t": report.oracle_t,
                "oracle_m": report.oracle_m,
            },
        )

    return IntersectionResponse(
        t=report.t,
        hhat=report.hhat,
        m=report.m,
        oracle_t=report.oracle_t,
        oracle_m=report.oracle_m,
        oracle_agrees=report.oracle_agrees,
        witness1=rat_list(report.witness1),
        witness2=rat_list(report.witness2),
        product_subgroup=sorted(report.product_subgroup),
        injective=not injectivity_violations(g, v1, v2),
    )


def cmd_klein(n: int, settings: Settings) -> CorpusResponse:
    group, v_const, v_zeroavg = klein_bottle(n)
    label = f"klein-{n}"
    return CorpusResponse(
        group=GroupDocument.from_group(group, label=label, schema_version=settings.schema_version),
        v1=SubspaceDocument.from_sublattice(v_const, label=f"{label}: constants"),
        v2=SubspaceDocument.from_sublattice(v_zeroavg, label=f"{label}: zero average"),
    )


def cmd_regular_rep(table_doc: GroupTableDocument, settings: Settings) -> CorpusResponse:
    """
    Regular representation of a finite group with its two coset subspaces.

    The group document carries the standard Gram matrix and zero translational
    parts; it is a matrix-group input for reduce --matrices-only, decompose and
    complement, not a Bieberbach group.
    """
    rep = regular_rep(table_doc.as_table(), table_doc.subgroup)
    size = rep.ambient.n
    mats = rep.hol.generator_matrices()
    label = table_doc.label or f"regular representation of order {size}"
    return CorpusResponse(
        group=GroupDocument.from_data(
            identity(size),
            mats,
            [zeros(size, 1) for _ in mats],
            label=label,
            schema_version=settings.schema_version,
        ),
        v1=SubspaceDocument.from_sublattice(rep.v1, label="constant on cosets"),
        v2=SubspaceDocument.from_sublattice(rep.v2, label="zero sum on cosets"),
    )


def cmd_decompose(
    group_doc: MatrixGroupDocument,
    subspace_doc: Optional[SubspaceDocument],
    settings: Settings,
    norm_bound: Optional[int] = None,
) -> DecompositionResponse:
    bound = settings.reduce_norm_bound if norm_bound is None else norm_bound
    hol = group_doc.to_holonomy(settings.group_order_bound)
    s0 = subspace_doc.to_sublattice() if subspace_doc is not None else Sublattice.full(hol.n)
    if s0.n != hol.n:
        raise DimensionMismatch(f"subspace dimension {s0.n} differs from group dimension {hol.n}")

    factors = minimal_decomposition(s0, hol, bound)
    logger.info(f"Decomposed a rank-{s0.rank} sublattice into {len(factors)} factors")
    return DecompositionResponse(
        norm_bound=bound,
        factors=[
            DecompositionFactorModel(subspace=SubspaceDocument.from_sublattice(f.sublattice), certified=f.certified)
            for f in factors
        ],
    )


def cmd_complement(
    group_doc: MatrixGroupDocument,
    subspace_doc: SubspaceDocument,
    settings: Settings,
) -> ComplementResponse:
    hol = group_doc.to_holonomy(settings.group_order_bound)
    s = subspace_doc.to_sublattice()
    if s.n != hol.n:
        raise DimensionMismatch(f"subspace dimension {s.n} differs from group dimension {hol.n}")

    complement = invariant_complement(s, hol)
    return ComplementResponse(
        subspace=SubspaceDocument.from_sublattice(s),
        complement=SubspaceDocument.from_sublattice(complement),
        projector=rat_rows(averaged_projector(s, hol)),
    )
