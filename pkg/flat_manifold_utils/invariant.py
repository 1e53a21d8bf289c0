"""
Invariant Subspaces
===================

Finite integer matrix groups and the algebra of their invariant lattice
subspaces: invariance tests, averaged complements, minimal decompositions and
the search for a proper invariant subspace.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy import ImmutableMatrix, Integer

from .errors import (
    DimensionMismatch,
    GroupNotFinite,
    InvalidSubspace,
    NotInvariant,
    NotSaturated,
    NotUnimodular,
)
from .exactlin import (
    from_columns,
    identity,
    int_rows,
    is_integral,
    kernel_rational,
    left_inverse,
    rank,
    vstack,
    zeros,
)
from .lattice import (
    Sublattice,
    completion_projector,
    is_saturated,
    span_of,
)

logger = logging.getLogger(__name__)

DEFAULT_ORDER_BOUND = 100_000
DEFAULT_NORM_BOUND = 3

_Key = Tuple[int, ...]


def _mul(a: _Key, b: _Key, n: int) -> _Key:
    return tuple(
        sum(a[i * n + t] * b[t * n + j] for t in range(n))
        for i in range(n)
        for j in range(n)
    )


def _key(m: ImmutableMatrix) -> _Key:
    return tuple(x for row in int_rows(m) for x in row)


@dataclass(frozen=True)
class MatrixGroup:
    """
    A finite group of unimodular integer matrices with its tables.

    Element 0 is the identity. ``mult[i][j]`` is the index of
    ``elements[i] * elements[j]`` and ``inv[i]`` the index of the inverse.
    ``generators`` holds the element indices the group was closed from.
    """

    n: int
    elements: Tuple[ImmutableMatrix, ...]
    mult: Tuple[Tuple[int, ...], ...]
    inv: Tuple[int, ...]
    generators: Tuple[int, ...] = ()
    _lookup: Dict[_Key, int] = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if not self._lookup:
            object.__setattr__(self, "_lookup", {_key(m): i for i, m in enumerate(self.elements)})

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, m: ImmutableMatrix) -> Optional[int]:
        if m.shape != (self.n, self.n) or not is_integral(m):
            return None
        return self._lookup.get(_key(m))

    def element_order(self, i: int) -> int:
        k, current = 1, i
        while current != 0:
            current = self.mult[current][i]
            k += 1
        return k

    def subgroup_closure(self, indices: Iterable[int]) -> FrozenSet[int]:
        """Indices of the subgroup generated by the given elements."""
        found = {0}
        frontier = [0]
        gens = sorted(set(indices))
        while frontier:
            current = frontier.pop()
            for g in gens:
                nxt = self.mult[current][g]
                if nxt not in found:
                    found.add(nxt)
                    frontier.append(nxt)
        return frozenset(found)

    def determinants(self) -> Tuple[int, ...]:
        return tuple(int(m.det()) if self.n else 1 for m in self.elements)

    def generator_matrices(self) -> Tuple[ImmutableMatrix, ...]:
        return tuple(self.elements[i] for i in self.generators)


def close_group(
    generators: Sequence[ImmutableMatrix],
    bound: int = DEFAULT_ORDER_BOUND,
    n: Optional[int] = None,
) -> MatrixGroup:
    """
    Close a set of unimodular integer matrices under multiplication.

    Args:
        generators: Square integer matrices of determinant +1 or -1
        bound: Largest group order accepted
        n: Dimension, required when there are no generators

    Returns:
        The closed group with its multiplication and inverse tables

    Raises:
        NotUnimodular: If a generator is not an invertible integer matrix
        GroupNotFinite: If closure exceeds the order bound
    """
    gens = [ImmutableMatrix(g) for g in generators]
    if n is None:
        if not gens:
            raise DimensionMismatch("dimension is required when no generators are given")
        n = gens[0].rows
    for g in gens:
        if g.shape != (n, n):
            raise DimensionMismatch(
                f"generator of shape {g.rows}x{g.cols} in dimension {n}",
                details={"expected": n},
            )
        if not is_integral(g) or abs(g.det()) != 1:
            raise NotUnimodular(
                "holonomy generators must be integer matrices of determinant +1 or -1",
                details={"generator": [[str(x) for x in g.row(i)] for i in range(n)]},
            )

    ident = _key(identity(n))
    gen_keys = [_key(g) for g in gens]
    keys: List[_Key] = [ident]
    lookup: Dict[_Key, int] = {ident: 0}
    position = 0
    while position < len(keys):
        current = keys[position]
        for g in gen_keys:
            product = _mul(current, g, n)
            if product not in lookup:
                if len(keys) >= bound:
                    raise GroupNotFinite(bound)
                lookup[product] = len(keys)
                keys.append(product)
        position += 1

    order = len(keys)
    mult = tuple(
        tuple(lookup[_mul(keys[i], keys[j], n)] for j in range(order))
        for i in range(order)
    )
    inv = tuple(row.index(0) for row in mult)
    elements = tuple(ImmutableMatrix(n, n, [Integer(x) for x in k]) for k in keys)
    logger.debug(f"Closed matrix group of dimension {n}: order {order}")
    return MatrixGroup(
        n=n,
        elements=elements,
        mult=mult,
        inv=inv,
        generators=tuple(lookup[k] for k in gen_keys),
        _lookup=lookup,
    )


def trivial_group(n: int) -> MatrixGroup:
    return close_group([], n=n)


# ---------------------------------------------------------------------------
# Invariance and averaging
# ---------------------------------------------------------------------------

def is_invariant(s: Sublattice, g: MatrixGroup) -> bool:
    if s.n != g.n:
        raise DimensionMismatch(f"subspace dimension {s.n} differs from group dimension {g.n}")
    if s.rank in (0, s.n):
        return True
    b = s.basis
    return all(rank(b.row_join(a * b)) == s.rank for a in g.elements)


def averaged_projector(s: Sublattice, g: MatrixGroup) -> ImmutableMatrix:
    """(1/|g|) sum of A P0 A^-1 for the completion projector P0 of s."""
    p0 = completion_projector(s)
    total = zeros(g.n, g.n)
    for i, a in enumerate(g.elements):
        total = total + a * p0 * g.elements[g.inv[i]]
    return ImmutableMatrix(total / g.order)


def invariant_complement(s: Sublattice, g: MatrixGroup) -> Sublattice:
    """An invariant saturated complement of an invariant saturated sublattice."""
    if not is_saturated(s):
        raise NotSaturated("invariant complement requires a saturated sublattice")
    if not is_invariant(s, g):
        raise NotInvariant("sublattice is not invariant under the group")
    if s.rank == 0:
        return Sublattice.full(s.n)
    if s.rank == s.n:
        return Sublattice.zero(s.n)
    p = averaged_projector(s, g)
    complement = span_of(s.n, kernel_rational(p))
    logger.debug(f"Invariant complement of a rank-{s.rank} sublattice has rank {complement.rank}")
    return complement


def restrict_group(g: MatrixGroup, s: Sublattice) -> Tuple[MatrixGroup, Tuple[int, ...]]:
    """
    The action of g on a saturated invariant sublattice, written in its basis.

    Returns the restricted group and, for every element of g, the index of its
    restriction.
    """
    if not is_invariant(s, g):
        raise NotInvariant("cannot restrict to a non-invariant sublattice")
    if s.rank == 0:
        raise InvalidSubspace("cannot restrict to the zero sublattice")
    b = s.basis
    bleft = left_inverse(b)
    restricted = [ImmutableMatrix(bleft * a * b) for a in g.elements]
    if not all(is_integral(m) for m in restricted):
        raise NotSaturated("restriction is not integral; sublattice is not saturated")
    sub = close_group([restricted[i] for i in g.generators], n=s.rank)
    element_map = tuple(sub.index_of(m) for m in restricted)
    return sub, element_map


def fixed_subspace(g: MatrixGroup) -> Sublattice:
    """Saturated sublattice of vectors fixed by every element."""
    gens = g.generator_matrices() or g.elements
    ident = identity(g.n)
    stacked = vstack(g.n, [a - ident for a in gens])
    return span_of(g.n, kernel_rational(stacked))


# ---------------------------------------------------------------------------
# Reducibility search
# ---------------------------------------------------------------------------

def search_vectors(n: int, norm_bound: int) -> Iterator[ImmutableMatrix]:
    """
    Primitive lattice vectors up to sign, shell by shell in sup-norm.

    Within a shell, vectors are ordered by l1 norm and then by descending
    coordinates, so e_1 comes first.
    """
    for radius in range(1, norm_bound + 1):
        shell = []
        for v in itertools.product(range(-radius, radius + 1), repeat=n):
            if max(abs(x) for x in v) != radius:
                continue
            first = next(x for x in v if x != 0)
            if first < 0 or reduce(gcd, v, 0) != 1:
                continue
            shell.append(v)
        shell.sort(key=lambda v: (sum(abs(x) for x in v), tuple(-x for x in v)))
        for v in shell:
            yield ImmutableMatrix(n, 1, [Integer(x) for x in v])


def _proper(s: Sublattice) -> bool:
    return 0 < s.rank < s.n


def find_proper_invariant_subspace(
    g: MatrixGroup, norm_bound: int = DEFAULT_NORM_BOUND
) -> Optional[Sublattice]:
    """
    Search for a proper invariant subspace.

    Candidates are tried in a fixed order: the fixed subspace, its invariant
    complement, then the orbit span of every primitive vector up to the norm
    bound.

    Args:
        g: Finite matrix group
        norm_bound: Sup-norm bound of the orbit-span stage

    Returns:
        A saturated invariant sublattice of rank strictly between 0 and n, or
        None when no candidate within the bound is proper
    """
    fixed = fixed_subspace(g)
    if _proper(fixed):
        logger.debug(f"Reducibility search: fixed subspace of rank {fixed.rank}")
        return fixed

    complement = invariant_complement(fixed, g)
    if _proper(complement):
        logger.debug(f"Reducibility search: complement of fixed subspace, rank {complement.rank}")
        return complement

    for v in search_vectors(g.n, norm_bound):
        orbit = from_columns(g.n, [a * v for a in g.elements])
        candidate = span_of(g.n, orbit)
        if _proper(candidate):
            logger.debug(f"Reducibility search: orbit span of {list(v)} has rank {candidate.rank}")
            return candidate

    logger.info(f"No proper invariant subspace found at norm bound {norm_bound}")
    return None


@dataclass(frozen=True)
class DecompositionFactor:
    """One summand of a minimal decomposition.

    ``certified`` is True when minimality is certain (rank one); otherwise the
    factor is minimal only relative to the search bound.
    """

    sublattice: Sublattice
    certified: bool


def minimal_decomposition(
    s0: Sublattice, g: MatrixGroup, norm_bound: int = DEFAULT_NORM_BOUND
) -> List[DecompositionFactor]:
    """
    Split an invariant saturated sublattice into invariant summands.

    Each split uses a proper invariant subspace of the restricted action and
    its averaged complement, so the factors form a direct sum equal to s0.

    Args:
        s0: Saturated invariant sublattice of positive rank
        g: Finite matrix group
        norm_bound: Bound handed to the reducibility search

    Returns:
        Factors in splitting order, each minimal relative to the search bound
    """
    if s0.rank == 0:
        raise InvalidSubspace("cannot decompose the zero sublattice")
    if not is_saturated(s0):
        raise NotSaturated("minimal decomposition requires a saturated sublattice")
    if not is_invariant(s0, g):
        raise NotInvariant("sublattice is not invariant under the group")

    factors: List[DecompositionFactor] = []
    pending = [s0]
    while pending:
        s = pending.pop(0)
        if s.rank == 1:
            factors.append(DecompositionFactor(s, True))
            continue
        restricted, _ = restrict_group(g, s)
        found = find_proper_invariant_subspace(restricted, norm_bound)
        if found is None:
            factors.append(DecompositionFactor(s, False))
            continue
        other = invariant_complement(found, restricted)
        pending[:0] = [
            Sublattice(s.n, s.basis * found.basis),
            Sublattice(s.n, s.basis * other.basis),
        ]

    logger.info(f"Decomposed rank-{s0.rank} sublattice into {len(factors)} invariant factors")
    return factors

