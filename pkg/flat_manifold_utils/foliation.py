"""
Foliation Module
================

Compact-leaf data of the foliation of a flat manifold by the cosets of an
invariant rational subspace V':

- K', the holonomy elements acting trivially on the orthogonal complement
- the generic isotropy group Sigma' and its holonomy image
- leaf Bieberbach groups, generic and at a given rational coset
- coset stabilizer indices and genericity
- covering degree and leaf orientability
- the leaf-space orbifold on V/V'

Points and cosets are given in lattice coordinates. A coset x0 + V' is always
analysed through its Gram-orthogonal representative, so that every generic
coset yields exactly the generic leaf group.
"""

import itertools
import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from sympy import ImmutableMatrix, Integer, Rational

from .bieberbach import BieberbachGroup, assemble, build, is_orientable, is_torsion_free
from .errors import DimensionMismatch, InvalidSubspace, NotInvariant, NotSaturated, SearchExhausted
from .exactlin import identity, is_integral, left_inverse
from .invariant import is_invariant
from .lattice import (
    QuotientLattice,
    Sublattice,
    is_saturated,
    lattice_index,
    orthogonal_complement,
    orthogonal_part,
    quotient_lattice,
    superlattice_basis,
)

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_LIMIT = 10_000


@dataclass(frozen=True)
class SigmaEntry:
    """A contributing holonomy element of Sigma'.

    ``translation`` is a lattice vector lambda0 with b(A) + lambda0 in V'; the
    full solution set is lambda0 + L'. ``shift`` is b(A) + lambda0.
    """

    index: int
    translation: ImmutableMatrix
    shift: ImmutableMatrix


@dataclass(frozen=True)
class LeafGroup:
    """A leaf Bieberbach group in the coordinates of its own translation lattice.

    ``basis`` gives the leaf lattice in ambient lattice coordinates (rational
    when the leaf lattice is finer than L'). ``embedding`` pairs each ambient
    holonomy index with the leaf holonomy index of its restriction.
    """

    group: BieberbachGroup
    basis: ImmutableMatrix
    embedding: Tuple[Tuple[int, int], ...]
    lattice_index: int


@dataclass(frozen=True)
class CosetStabilizer:
    index: int
    stabilizing: Tuple[int, ...]
    leaf_group: LeafGroup
    representative: ImmutableMatrix


@dataclass(frozen=True)
class OrbifoldData:
    """The leaf space of the foliation as a flat orbifold on V/V'.

    ``quotient_gram``, ``induced_matrices`` and ``induced_vectors`` are written
    in the coordinates of L/L'. ``base`` is the same action written over the
    effective translation lattice, whose index over L/L' is ``lattice_index``.
    """

    dimension: int
    quotient_gram: ImmutableMatrix
    induced_matrices: Tuple[ImmutableMatrix, ...]
    induced_vectors: Tuple[ImmutableMatrix, ...]
    induced_map: Tuple[int, ...]
    base: BieberbachGroup
    lattice_index: int
    relative_covolume: Rational
    torsion_free: bool


@dataclass(frozen=True)
class FoliationContext:
    """A Bieberbach group together with a proper invariant L-subspace, caches precomputed."""

    group: BieberbachGroup
    vprime: Sublattice
    complement: Sublattice = field(init=False, compare=False)
    quotient: QuotientLattice = field(init=False, compare=False)
    bleft: ImmutableMatrix = field(init=False, compare=False, repr=False)
    kprime: FrozenSet[int] = field(init=False, compare=False)
    sigma: Tuple[SigmaEntry, ...] = field(init=False, compare=False)

    def __post_init__(self):
        g, v = self.group, self.vprime
        if v.n != g.n:
            raise DimensionMismatch(f"subspace dimension {v.n} differs from group dimension {g.n}")
        if not 0 < v.rank < g.n:
            raise InvalidSubspace(
                "foliation requires a nonzero proper subspace",
                details={"rank": v.rank, "n": g.n},
            )
        if not is_saturated(v):
            raise NotSaturated("foliation requires a saturated sublattice")
        if not is_invariant(v, g.hol):
            raise NotInvariant("subspace is not invariant under the holonomy group")

        complement = orthogonal_complement(v, g.amb)
        quotient = quotient_lattice(v)
        object.__setattr__(self, "complement", complement)
        object.__setattr__(self, "quotient", quotient)
        object.__setattr__(self, "bleft", left_inverse(v.basis))

        c = complement.basis
        kprime = frozenset(i for i, a in enumerate(g.hol.elements) if a * c == c)
        object.__setattr__(self, "kprime", kprime)

        sigma = []
        for i in sorted(kprime):
            entry = self._lift_into_vprime(i, g.b(i))
            if entry is not None:
                sigma.append(entry)
        object.__setattr__(self, "sigma", tuple(sigma))
        logger.debug(
            f"Foliation context: rank {v.rank} in dimension {g.n}, "
            f"|K'|={len(kprime)}, |alpha(Sigma')|={len(sigma)}"
        )

    def _lift_into_vprime(self, index: int, c: ImmutableMatrix) -> Optional[SigmaEntry]:
        """Lattice vector lambda with c + lambda in V', when one exists."""
        coords = self.quotient.projection * c
        if not is_integral(coords):
            return None
        lam = ImmutableMatrix(-(self.quotient.lifts * coords))
        return SigmaEntry(index, lam, ImmutableMatrix(c + lam))

    def restrict(self, a: int) -> ImmutableMatrix:
        """Holonomy element a acting on V', in the basis of L'."""
        return ImmutableMatrix(self.bleft * self.group.linear(a) * self.vprime.basis)

    def vprime_coordinates(self, v: ImmutableMatrix) -> ImmutableMatrix:
        return ImmutableMatrix(self.bleft * v)


def k_prime(ctx: FoliationContext) -> FrozenSet[int]:
    return ctx.kprime


def generic_isotropy(ctx: FoliationContext) -> Dict[int, Optional[SigmaEntry]]:
    """For every holonomy element, its Sigma' coset data or None when it does not contribute."""
    entries = {e.index: e for e in ctx.sigma}
    return {i: entries.get(i) for i in range(ctx.group.order)}


def alpha_sigma(ctx: FoliationContext) -> FrozenSet[int]:
    """Holonomy image of Sigma'."""
    return frozenset(e.index for e in ctx.sigma)


def kprime_diagnostic(ctx: FoliationContext) -> Dict[str, object]:
    kp, alpha = sorted(ctx.kprime), sorted(alpha_sigma(ctx))
    return {
        "k_prime": kp,
        "alpha_sigma": alpha,
        "equal": kp == alpha,
        "index": len(kp) // len(alpha),
    }


def _leaf_group(
    ctx: FoliationContext, shifts: List[Tuple[int, ImmutableMatrix]]
) -> LeafGroup:
    """Leaf group from stabilizing holonomy indices and their V'-valued translations."""
    k = ctx.vprime.rank
    restricted = [(i, ctx.restrict(i), ctx.vprime_coordinates(s)) for i, s in shifts]
    ident = identity(k)
    translations = [tau for _, m, tau in restricted if m == ident]
    c = superlattice_basis(k, translations)
    c_inv = c.inv()

    point_gens: List[ImmutableMatrix] = []
    b_gens: List[ImmutableMatrix] = []
    seen = set()
    for _, m, tau in restricted:
        local = ImmutableMatrix(c_inv * m * c)
        if local in seen or local == ident:
            continue
        seen.add(local)
        point_gens.append(local)
        b_gens.append(ImmutableMatrix(c_inv * tau))

    gram = ImmutableMatrix(c.T * ctx.group.amb.restricted_gram(ctx.vprime.basis) * c)
    group = build(gram, point_gens, b_gens)
    embedding = tuple(
        (i, group.hol.index_of(ImmutableMatrix(c_inv * m * c))) for i, m, _ in restricted
    )
    return LeafGroup(
        group=group,
        basis=ImmutableMatrix(ctx.vprime.basis * c),
        embedding=embedding,
        lattice_index=lattice_index(c),
    )


def leaf_group_generic(ctx: FoliationContext) -> LeafGroup:
    """Bieberbach group of a generic leaf, over the lattice L' = L intersected with V'."""
    leaf = _leaf_group(ctx, [(e.index, e.shift) for e in ctx.sigma])
    logger.debug(f"Generic leaf group: dimension {leaf.group.n}, holonomy order {leaf.group.order}")
    return leaf


def _stabilizing_shifts(
    ctx: FoliationContext, x0: ImmutableMatrix
) -> Tuple[ImmutableMatrix, List[Tuple[int, ImmutableMatrix]]]:
    g = ctx.group
    x0 = ImmutableMatrix(x0)
    if x0.shape != (g.n, 1):
        raise DimensionMismatch(f"coset point has shape {x0.rows}x{x0.cols}, expected {g.n}x1")
    rep = orthogonal_part(x0, ctx.vprime, g.amb)
    shifts = []
    for i in range(g.order):
        c = (g.linear(i) - identity(g.n)) * rep + g.b(i)
        entry = ctx._lift_into_vprime(i, ImmutableMatrix(c))
        if entry is not None:
            shifts.append((i, entry.shift))
    return rep, shifts


def _kprime_coset_count(ctx: FoliationContext, indices: List[int]) -> int:
    mult = ctx.group.hol.mult
    cosets = {frozenset(mult[a][kk] for kk in ctx.kprime) for a in indices}
    return len(cosets)


def stabilizer_index(ctx: FoliationContext, x0: ImmutableMatrix) -> int:
    """Index of Sigma' in the stabilizer of the coset x0 + V'."""
    _, shifts = _stabilizing_shifts(ctx, x0)
    return _kprime_coset_count(ctx, [i for i, _ in shifts])


def coset_stabilizer(ctx: FoliationContext, x0: ImmutableMatrix) -> CosetStabilizer:
    """
    Stabilizer data of the coset x0 + V'.

    Args:
        ctx: Foliation context
        x0: Rational point in lattice coordinates

    Returns:
        Stabilizer index over Sigma', the stabilizing holonomy indices, the leaf
        group of the coset and the orthogonal representative used

    Raises:
        DimensionMismatch: If x0 is not a column of the group's dimension
    """
    rep, shifts = _stabilizing_shifts(ctx, x0)
    indices = [i for i, _ in shifts]
    return CosetStabilizer(
        index=_kprime_coset_count(ctx, indices),
        stabilizing=tuple(indices),
        leaf_group=_leaf_group(ctx, shifts),
        representative=rep,
    )


def is_generic_coset(ctx: FoliationContext, x0: ImmutableMatrix) -> bool:
    return stabilizer_index(ctx, x0) == 1


def quotient_candidates(dimension: int) -> Iterator[Tuple[Rational, ...]]:
    """Rational points of [0,1)^dimension by growing denominator, each listed once."""
    yield tuple(Integer(0) for _ in range(dimension))
    d = 2
    while True:
        for numerators in itertools.product(range(d), repeat=dimension):
            common = d
            for p in numerators:
                common = gcd(common, p)
            if common == 1:
                yield tuple(Rational(p, d) for p in numerators)
        d += 1


def sample_generic_coset(ctx: FoliationContext, limit: int = DEFAULT_SEARCH_LIMIT) -> ImmutableMatrix:
    """
    A rational point whose V'-coset is generic.

    Candidates run over quotient_candidates, lifted through the quotient
    lattice, so the first generic point found is deterministic.

    Args:
        ctx: Foliation context
        limit: Number of candidates tried before giving up

    Returns:
        The generic point as a column

    Raises:
        SearchExhausted: If no candidate within the limit is generic
    """
    lifts = ctx.quotient.lifts
    for tried, coords in enumerate(quotient_candidates(lifts.cols)):
        if tried >= limit:
            break
        x0 = ImmutableMatrix(lifts * ImmutableMatrix(len(coords), 1, list(coords)))
        if is_generic_coset(ctx, x0):
            logger.debug(f"Generic coset found after {tried + 1} candidates")
            return x0
    raise SearchExhausted(limit)


def covering_degree(ctx: FoliationContext) -> int:
    return leaf_group_generic(ctx).group.order


def leaf_orientable(ctx: FoliationContext) -> bool:
    return is_orientable(leaf_group_generic(ctx).group)


def leaf_space_orbifold(ctx: FoliationContext) -> OrbifoldData:
    """Induced action of the group on V/V' over the quotient lattice L/L'."""
    g = ctx.group
    lifts, projection = ctx.quotient
    q = lifts.cols

    normal_lifts = orthogonal_part(lifts, ctx.vprime, g.amb)
    quotient_gram = g.amb.restricted_gram(normal_lifts)

    induced = [ImmutableMatrix(projection * a * lifts) for a in g.hol.elements]
    vectors = [ImmutableMatrix(projection * g.b(i)) for i in range(g.order)]

    ident = identity(q)
    translations = [v for m, v in zip(induced, vectors) if m == ident]
    c = superlattice_basis(q, translations)
    c_inv = c.inv()

    distinct: List[ImmutableMatrix] = []
    distinct_vectors: List[ImmutableMatrix] = []
    for m, v in zip(induced, vectors):
        if m not in distinct:
            distinct.append(m)
            distinct_vectors.append(v)

    point_gens = [ImmutableMatrix(c_inv * m * c) for m in distinct if m != ident]
    b_gens = [ImmutableMatrix(c_inv * v) for m, v in zip(distinct, distinct_vectors) if m != ident]
    base = assemble(ImmutableMatrix(c.T * quotient_gram * c), point_gens, b_gens)
    induced_map = tuple(base.hol.index_of(ImmutableMatrix(c_inv * m * c)) for m in induced)

    index = lattice_index(c)
    torsion_free = is_torsion_free(base)
    logger.debug(
        f"Leaf space: dimension {q}, effective point group order {base.order}, "
        f"lattice index {index}, torsion free {torsion_free}"
    )
    return OrbifoldData(
        dimension=q,
        quotient_gram=quotient_gram,
        induced_matrices=tuple(distinct),
        induced_vectors=tuple(distinct_vectors),
        induced_map=induced_map,
        base=base,
        lattice_index=index,
        relative_covolume=Rational(1, index),
        torsion_free=torsion_free,
    )

