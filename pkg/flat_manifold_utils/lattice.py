"""
Lattice Module
==============

The ambient lattice L = Z^n with a rational inner product, its sublattices,
saturation, direct-summand tests and quotient structures.

Every geometric object is expressed in the fixed Z-basis of L. A saturated
sublattice stands for the rational subspace it spans; the zero subspace is an
n x 0 basis matrix.
"""

import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Tuple, Union

from sympy import ImmutableMatrix, Integer, Rational

from .errors import (
    ContainmentError,
    DimensionMismatch,
    InvalidGram,
    InvalidSubspace,
    NotSaturated,
)
from .exactlin import (
    column,
    common_denominator,
    determinant,
    from_columns,
    hnf,
    identity,
    invariant_factors,
    is_integral,
    kernel_rational,
    primitive,
    rank,
    snf,
    solve_integer,
    submatrix_columns,
    submatrix_rows,
    zeros,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ambient:
    """Dimension and Gram matrix of the ambient Euclidean lattice."""

    n: int
    gram: ImmutableMatrix

    def __post_init__(self):
        gram = ImmutableMatrix(self.gram)
        if gram.shape != (self.n, self.n):
            raise InvalidGram(f"Gram matrix must be {self.n}x{self.n}, got {gram.rows}x{gram.cols}")
        if gram != gram.T:
            raise InvalidGram("Gram matrix is not symmetric")
        for k in range(1, self.n + 1):
            if determinant(gram[:k, :k]) <= 0:
                raise InvalidGram(
                    "Gram matrix is not positive definite",
                    details={"failing_minor": k},
                )
        object.__setattr__(self, "gram", gram)

    @classmethod
    def standard(cls, n: int) -> "Ambient":
        return cls(n, identity(n))

    def inner(self, x: ImmutableMatrix, y: ImmutableMatrix) -> Rational:
        return Rational((x.T * self.gram * y)[0, 0])

    def restricted_gram(self, basis: ImmutableMatrix) -> ImmutableMatrix:
        """Gram matrix of the given basis columns."""
        return ImmutableMatrix(basis.T * self.gram * basis)


@dataclass(frozen=True)
class Sublattice:
    """
    A sublattice of Z^n held by its canonical column-HNF basis.

    Construction from any integer generating set is allowed; the basis is
    normalized on creation so that equality of values is equality of lattices.
    """

    n: int
    basis: ImmutableMatrix

    def __post_init__(self):
        m = ImmutableMatrix(self.basis) if self.basis.cols else zeros(self.n, 0)
        if m.rows != self.n:
            raise DimensionMismatch(f"basis has {m.rows} rows, ambient dimension is {self.n}")
        if not is_integral(m):
            raise InvalidSubspace("sublattice generators must be integral")
        if m.cols:
            h, _ = hnf(m)
            nonzero = [j for j in range(h.cols) if any(h[i, j] != 0 for i in range(h.rows))]
            m = submatrix_columns(h, 0, len(nonzero))
        object.__setattr__(self, "basis", m)

    @classmethod
    def from_columns(cls, n: int, columns: Sequence[Sequence[int]]) -> "Sublattice":
        return cls(n, from_columns(n, [column(c) for c in columns]))

    @classmethod
    def zero(cls, n: int) -> "Sublattice":
        return cls(n, zeros(n, 0))

    @classmethod
    def full(cls, n: int) -> "Sublattice":
        return cls(n, identity(n))

    @property
    def rank(self) -> int:
        return self.basis.cols

    def columns(self) -> Tuple[ImmutableMatrix, ...]:
        return tuple(self.basis[:, j] for j in range(self.rank))

    def contains(self, v: ImmutableMatrix) -> bool:
        """Membership of an integer vector in the Z-span."""
        if not is_integral(v):
            return False
        if self.rank == 0:
            return all(x == 0 for x in v)
        return solve_integer(self.basis, v) is not None

    def span_contains(self, v: ImmutableMatrix) -> bool:
        """Membership of a rational vector in the rational span."""
        if all(x == 0 for x in v):
            return True
        if self.rank == 0:
            return False
        return rank(self.basis.row_join(v)) == self.rank

    def is_subset(self, other: "Sublattice") -> bool:
        return all(other.contains(c) for c in self.columns())

    def index_in(self, other: "Sublattice") -> Optional[int]:
        """
        Index of this sublattice in a sublattice containing it.

        Args:
            other: Enclosing sublattice of the same dimension

        Returns:
            The order of other / self, or None when the quotient is infinite

        Raises:
            ContainmentError: If self is not contained in other
        """
        return quotient_group(self, other).order

    def as_lists(self):
        return [[int(x) for x in c] for c in self.columns()]


class FiniteAbelian(NamedTuple):
    """Z^free_rank x Z/d_1 x ... x Z/d_r with d_1 | d_2 | ... and each d_i >= 2."""

    factors: Tuple[int, ...]
    free_rank: int = 0

    @property
    def order(self) -> Optional[int]:
        if self.free_rank:
            return None
        total = 1
        for d in self.factors:
            total *= d
        return total


class QuotientLattice(NamedTuple):
    """Lifts whose images form a basis of L/L', and the integer projection onto those coordinates."""

    lifts: ImmutableMatrix
    projection: ImmutableMatrix


# ---------------------------------------------------------------------------
# Saturation and direct summands
# ---------------------------------------------------------------------------

def saturate(s: Sublattice) -> Sublattice:
    """L intersected with the rational span of s."""
    if s.rank == 0:
        return s
    _, u, _ = snf(s.basis)
    completed = u.inv()
    return Sublattice(s.n, submatrix_columns(completed, 0, s.rank))


def is_direct_summand(s: Sublattice) -> bool:
    if s.rank == 0:
        return True
    return all(d == 1 for d in invariant_factors(s.basis))


def is_saturated(s: Sublattice) -> bool:
    return is_direct_summand(s)


def span_of(n: int, vectors: ImmutableMatrix) -> Sublattice:
    """Saturated sublattice whose span is the rational column span of the given vectors."""
    if vectors.cols == 0:
        return Sublattice.zero(n)
    cols = [primitive(vectors[:, j]) for j in range(vectors.cols) if any(x != 0 for x in vectors[:, j])]
    if not cols:
        return Sublattice.zero(n)
    return saturate(Sublattice(n, from_columns(n, cols)))


def _check_same_dimension(a: Sublattice, b: Sublattice) -> None:
    if a.n != b.n:
        raise DimensionMismatch(
            f"sublattices live in dimensions {a.n} and {b.n}",
            details={"left": a.n, "right": b.n},
        )


def lattice_sum(a: Sublattice, b: Sublattice) -> Sublattice:
    """The saturated sublattice spanned by both arguments."""
    _check_same_dimension(a, b)
    return saturate(Sublattice(a.n, a.basis.row_join(b.basis)))


def meet(a: Sublattice, b: Sublattice) -> Sublattice:
    """Saturated basis of the intersection of the two rational spans."""
    _check_same_dimension(a, b)
    if a.rank == 0 or b.rank == 0:
        return Sublattice.zero(a.n)
    stacked = a.basis.row_join(-b.basis)
    kernel = kernel_rational(stacked)
    if kernel.cols == 0:
        return Sublattice.zero(a.n)
    alphas = submatrix_rows(kernel, 0, a.rank)
    return span_of(a.n, a.basis * alphas)


def quotient_group(
    a: Sublattice, b: Union[Sublattice, Ambient, None] = None
) -> FiniteAbelian:
    """Structure of b / a, where b defaults to the full lattice Z^n."""
    if b is None or isinstance(b, Ambient):
        b = Sublattice.full(a.n)
    _check_same_dimension(a, b)
    if a.rank == 0:
        return FiniteAbelian((), b.rank)
    coords = []
    for c in a.columns():
        x = solve_integer(b.basis, c)
        if x is None:
            raise ContainmentError(
                "sublattice is not contained in the enclosing lattice",
                details={"column": [str(v) for v in c]},
            )
        coords.append(x)
    relation = from_columns(b.rank, coords)
    factors = invariant_factors(relation)
    return FiniteAbelian(
        tuple(d for d in factors if d > 1), b.rank - len(factors)
    )


def quotient_lattice(s: Sublattice) -> QuotientLattice:
    if not is_saturated(s):
        raise NotSaturated("quotient lattice requires a saturated sublattice")
    n, k = s.n, s.rank
    if k == 0:
        return QuotientLattice(identity(n), identity(n))
    _, u, _ = snf(s.basis)
    completed = u.inv()
    return QuotientLattice(submatrix_columns(completed, k, n), submatrix_rows(u, k, n))


def orthogonal_complement(s: Sublattice, amb: Ambient) -> Sublattice:
    """Saturated sublattice spanning the Gram-orthogonal complement of span(s)."""
    if s.n != amb.n:
        raise DimensionMismatch(f"sublattice dimension {s.n} differs from ambient {amb.n}")
    if s.rank == 0:
        return Sublattice.full(s.n)
    return span_of(s.n, kernel_rational(s.basis.T * amb.gram))


def completion_projector(s: Sublattice) -> ImmutableMatrix:
    """Integer projection onto span(s) along the unimodular completion of its basis."""
    n, k = s.n, s.rank
    if k == 0:
        return zeros(n, n)
    _, u, _ = snf(s.basis)
    completed = u.inv()
    return ImmutableMatrix(submatrix_columns(completed, 0, k) * submatrix_rows(u, 0, k))


def orthogonal_part(x: ImmutableMatrix, s: Sublattice, amb: Ambient) -> ImmutableMatrix:
    """x minus its Gram-orthogonal projection onto span(s)."""
    if s.rank == 0:
        return ImmutableMatrix(x)
    b = s.basis
    return ImmutableMatrix(x - b * (b.T * amb.gram * b).inv() * b.T * amb.gram * x)


def superlattice_basis(k: int, vectors: Sequence[ImmutableMatrix]) -> ImmutableMatrix:
    """Basis of Z^k + sum of Z*t over the rational vectors t, as a k x k rational matrix."""
    if k == 0:
        return zeros(0, 0)
    gens = [identity(k)] + [ImmutableMatrix(v) for v in vectors]
    stacked = from_columns(k, gens)
    d = common_denominator(stacked)
    h, _ = hnf(stacked * d)
    return ImmutableMatrix(submatrix_columns(h, 0, k) / d)


def lattice_index(basis: ImmutableMatrix) -> int:
    """[Lambda : Z^k] for a superlattice basis returned by superlattice_basis."""
    if basis.rows == 0:
        return 1
    return int(abs(Integer(1) / determinant(basis)))


__all__ = [
    "Ambient",
    "Sublattice",
    "FiniteAbelian",
    "QuotientLattice",
    "saturate",
    "is_direct_summand",
    "is_saturated",
    "span_of",
    "lattice_sum",
    "meet",
    "quotient_group",
    "quotient_lattice",
    "orthogonal_complement",
    "completion_projector",
    "orthogonal_part",
    "superlattice_basis",
    "lattice_index",
]
