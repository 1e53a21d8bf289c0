"""
Intersection Numbers
====================

Intersection counts of generic leaves of two complementary invariant
L-subspaces V' and V'':

    t    = |L / (L' + L'')|               points of the torus intersection
    hhat = |H / alpha(Sigma') alpha(Sigma'')|
    m    = t * hhat                       points of the manifold intersection

Both counts are also recomputed by brute-force enumeration of intersection
points, so every formula can be checked against geometry.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Optional, Tuple

from sympy import ImmutableMatrix

from .bieberbach import BieberbachGroup, orbit_key, same_orbit
from .errors import NotComplementary, NotGeneric
from .exactlin import is_integral, snf, submatrix_rows, zeros
from .foliation import (
    DEFAULT_SEARCH_LIMIT,
    FoliationContext,
    alpha_sigma,
    is_generic_coset,
    sample_generic_coset,
)
from .lattice import Sublattice, meet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntersectionReport:
    t: int
    hhat: int
    m: int
    witness1: ImmutableMatrix
    witness2: ImmutableMatrix
    product_subgroup: FrozenSet[int]
    oracle_t: Optional[int] = None
    oracle_m: Optional[int] = None

    @property
    def oracle_agrees(self) -> Optional[bool]:
        if self.oracle_t is None or self.oracle_m is None:
            return None
        return self.oracle_t == self.t and self.oracle_m == self.m


def _check_complementary(g: BieberbachGroup, v1: Sublattice, v2: Sublattice) -> None:
    details = {"n": g.n, "rank1": v1.rank, "rank2": v2.rank}
    if v1.n != g.n or v2.n != g.n:
        raise NotComplementary("subspaces do not live in the group's dimension", details=details)
    if v1.rank + v2.rank != g.n or meet(v1, v2).rank != 0:
        raise NotComplementary("subspaces are not complementary", details=details)


def _summand_lattice(v1: Sublattice, v2: Sublattice) -> Sublattice:
    return Sublattice(v1.n, v1.basis.row_join(v2.basis))


def coset_representatives(sub: Sublattice) -> Iterator[ImmutableMatrix]:
    """One lattice vector per class of Z^n / sub, for a full-rank sub."""
    s, u, _ = snf(sub.basis)
    u_inv = u.inv()
    digits = [range(int(s[i, i])) for i in range(sub.n)]
    for y in itertools.product(*digits):
        yield ImmutableMatrix(u_inv * ImmutableMatrix(sub.n, 1, list(y)))


def _meeting_point(
    v1: Sublattice, v2: Sublattice, base1: ImmutableMatrix, base2: ImmutableMatrix
) -> ImmutableMatrix:
    """The unique point of (base1 + V') and (base2 + V'')."""
    system = v1.basis.row_join(-v2.basis)
    coeffs = system.inv() * (base2 - base1)
    return ImmutableMatrix(base1 + v1.basis * submatrix_rows(coeffs, 0, v1.rank))


def intersection_numbers(
    g: BieberbachGroup,
    v1: Sublattice,
    v2: Sublattice,
    with_oracle: bool = False,
    search_limit: int = DEFAULT_SEARCH_LIMIT,
) -> IntersectionReport:
    """
    Intersection numbers of generic leaves of two complementary subspaces.

    Args:
        g: Bieberbach group
        v1: First invariant subspace
        v2: Second invariant subspace, complementary to v1
        with_oracle: Also recount both numbers by enumeration
        search_limit: Candidate limit for the generic witnesses

    Returns:
        IntersectionReport with t, hhat, m = t * hhat and the witnesses used

    Raises:
        NotComplementary: If v1 and v2 do not split the space
        SearchExhausted: If no generic witness is found within the limit
    """
    _check_complementary(g, v1, v2)
    ctx1 = FoliationContext(g, v1)
    ctx2 = FoliationContext(g, v2)

    t = _summand_lattice(v1, v2).index_in(Sublattice.full(g.n))
    product = g.hol.subgroup_closure(alpha_sigma(ctx1) | alpha_sigma(ctx2))
    hhat = g.order // len(product)
    x1 = sample_generic_coset(ctx1, search_limit)
    x2 = sample_generic_coset(ctx2, search_limit)

    oracle_t = oracle_m = None
    if with_oracle:
        oracle_t = oracle_torus_count(g, v1, v2)
        oracle_m = oracle_manifold_count(g, v1, v2, x1, x2)

    logger.info(f"Intersection numbers: t={t}, hhat={hhat}, m={t * hhat}")
    return IntersectionReport(
        t=t,
        hhat=hhat,
        m=t * hhat,
        witness1=x1,
        witness2=x2,
        product_subgroup=product,
        oracle_t=oracle_t,
        oracle_m=oracle_m,
    )


def oracle_torus_count(g: BieberbachGroup, v1: Sublattice, v2: Sublattice) -> int:
    """Count points of V' meeting V'' + L, modulo L, by direct enumeration."""
    _check_complementary(g, v1, v2)
    origin = zeros(g.n, 1)
    residues = set()
    for lam in coset_representatives(_summand_lattice(v1, v2)):
        point = _meeting_point(v1, v2, origin, lam)
        residues.add(orbit_key(point))
    return len(residues)


def oracle_manifold_count(
    g: BieberbachGroup,
    v1: Sublattice,
    v2: Sublattice,
    x1: ImmutableMatrix,
    x2: ImmutableMatrix,
) -> int:
    """Count intersection points of two generic leaves in the manifold by enumeration."""
    _check_complementary(g, v1, v2)
    for v, x in ((v1, x1), (v2, x2)):
        if not is_generic_coset(FoliationContext(g, v), x):
            raise NotGeneric(
                "witness coset is not generic",
                details={"point": [str(c) for c in x]},
            )

    points: List[ImmutableMatrix] = []
    seen = set()
    for lam in coset_representatives(_summand_lattice(v1, v2)):
        for a in range(g.order):
            moved = g.linear(a) * x2 + g.b(a) + lam
            point = _meeting_point(v1, v2, ImmutableMatrix(x1), ImmutableMatrix(moved))
            key = orbit_key(point)
            if key in seen:
                continue
            seen.add(key)
            points.append(point)

    classes: List[ImmutableMatrix] = []
    for p in points:
        if not any(same_orbit(p, q, g) is not None for q in classes):
            classes.append(p)
    logger.debug(f"Manifold oracle: {len(points)} residues, {len(classes)} orbit classes")
    return len(classes)


def injectivity_violations(
    g: BieberbachGroup, v1: Sublattice, v2: Sublattice
) -> List[Tuple[int, int, ImmutableMatrix]]:
    """Pure translations in Sigma' Sigma'' lying outside L' + L''; empty when the map is injective."""
    _check_complementary(g, v1, v2)
    ctx1 = FoliationContext(g, v1)
    ctx2 = FoliationContext(g, v2)
    summand = _summand_lattice(v1, v2)
    violations = []
    for e1 in ctx1.sigma:
        for e2 in ctx2.sigma:
            if g.hol.mult[e1.index][e2.index] != 0:
                continue
            translation = ImmutableMatrix(g.linear(e1.index) * e2.shift + e1.shift)
            if not is_integral(translation) or not summand.contains(translation):
                violations.append((e1.index, e2.index, translation))
    return violations
