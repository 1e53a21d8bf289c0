"""
Example Corpus
==============

Constructors for the reference examples used by the regression suite and the
``klein`` / ``regular-rep`` commands: generalized Klein bottles, regular
representations of finite groups with their coset subspaces, flat tori and
product groups.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Tuple

from sympy import ImmutableMatrix, Integer, Rational

from .bieberbach import BieberbachGroup, build, direct_product
from .errors import InvalidDocument, InvalidGroupTable
from .exactlin import column, from_columns, identity, is_integral, matrix
from .invariant import MatrixGroup, close_group
from .lattice import Ambient, Sublattice

logger = logging.getLogger(__name__)

GroupTable = Sequence[Sequence[int]]


@dataclass(frozen=True)
class KleinSpec:
    """Parameters of a generalized Klein bottle."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise InvalidDocument(
                "generalized Klein bottle needs dimension at least 2",
                details={"n": self.n},
            )


class RegularRepresentation(NamedTuple):
    ambient: Ambient
    hol: MatrixGroup
    v1: Sublattice
    v2: Sublattice


class IntersectionFixture(NamedTuple):
    label: str
    group: BieberbachGroup
    v1: Sublattice
    v2: Sublattice


def _unit(n: int, i: int) -> List[int]:
    return [1 if k == i else 0 for k in range(n)]


def klein_standard_data(n: int) -> Tuple[ImmutableMatrix, ImmutableMatrix, ImmutableMatrix]:
    """Shift matrix, lattice basis and translation of the Klein bottle in the coordinates of R^n."""
    shift = matrix([[1 if i == (j + 1) % n else 0 for j in range(n)] for i in range(n)])
    basis = [[1] * n] + [
        [a - b for a, b in zip(_unit(n, j), _unit(n, 0))] for j in range(1, n)
    ]
    b_std = column([Rational(1, n)] * n)
    return shift, from_columns(n, [column(c) for c in basis]), b_std


def klein_bottle(n: int) -> Tuple[BieberbachGroup, Sublattice, Sublattice]:
    """
    The n-dimensional generalized Klein bottle in lattice coordinates.

    The lattice is {v in Z^n : n divides sum(v)} with basis u0 = (1,...,1),
    u_j = e_j - e_0; the holonomy is the cyclic coordinate shift. Returns the
    group, the constants line and the zero-average hyperplane.
    """
    params = KleinSpec(n)
    shift, basis, b_std = klein_standard_data(params.n)
    basis_inv = basis.inv()
    a = ImmutableMatrix(basis_inv * shift * basis)
    if not is_integral(a):
        raise InvalidDocument("shift does not preserve the Klein lattice", details={"n": n})
    gram = ImmutableMatrix(basis.T * basis)
    b = ImmutableMatrix(basis_inv * b_std)
    group = build(gram, [a], [b])

    v_const = Sublattice.from_columns(n, [_unit(n, 0)])
    v_zeroavg = Sublattice.from_columns(n, [_unit(n, j) for j in range(1, n)])
    logger.debug(f"Built Klein bottle of dimension {n}")
    return group, v_const, v_zeroavg


def torus(gram) -> BieberbachGroup:
    """Flat torus: the translation lattice alone."""
    gram = ImmutableMatrix(gram)
    return build(gram, [], [])


# ---------------------------------------------------------------------------
# Finite group tables
# ---------------------------------------------------------------------------

def validate_table(table: GroupTable) -> int:
    """Check a multiplication table and return the index of its identity."""
    size = len(table)
    if size == 0 or any(len(row) != size for row in table):
        raise InvalidGroupTable("multiplication table must be a nonempty square")
    symbols = set(range(size))
    for row in table:
        if set(row) != symbols:
            raise InvalidGroupTable("every row must be a permutation of the elements")
    for j in range(size):
        if {table[i][j] for i in range(size)} != symbols:
            raise InvalidGroupTable("every column must be a permutation of the elements")
    identities = [e for e in range(size) if all(table[e][x] == x and table[x][e] == x for x in range(size))]
    if not identities:
        raise InvalidGroupTable("multiplication table has no identity element")
    for x, y, z in itertools.product(range(size), repeat=3):
        if table[table[x][y]][z] != table[x][table[y][z]]:
            raise InvalidGroupTable(
                "multiplication is not associative",
                details={"triple": [x, y, z]},
            )
    return identities[0]


def generated_subgroup(table: GroupTable, elements) -> frozenset:
    identity_index = validate_table(table)
    found = {identity_index}
    frontier = [identity_index]
    gens = sorted(set(elements))
    while frontier:
        current = frontier.pop()
        for g in gens:
            nxt = table[current][g]
            if nxt not in found:
                found.add(nxt)
                frontier.append(nxt)
    return frozenset(found)


def validate_subgroup(table: GroupTable, subgroup: Sequence[int]) -> frozenset:
    identity_index = validate_table(table)
    members = frozenset(subgroup)
    if identity_index not in members:
        raise InvalidGroupTable("subgroup does not contain the identity")
    if any(x not in range(len(table)) for x in members):
        raise InvalidGroupTable("subgroup refers to unknown elements")
    if any(table[x][y] not in members for x in members for y in members):
        raise InvalidGroupTable("subgroup is not closed under multiplication")
    return members


def cyclic_table(n: int) -> List[List[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def symmetric_table(k: int) -> List[List[int]]:
    """Symmetric group on k letters, permutations in lexicographic order, (p q)(x) = p(q(x))."""
    perms = list(itertools.permutations(range(k)))
    position = {p: i for i, p in enumerate(perms)}
    return [
        [position[tuple(p[q[x]] for x in range(k))] for q in perms]
        for p in perms
    ]


def product_table(t1: GroupTable, t2: GroupTable) -> List[List[int]]:
    m = len(t2)
    size = len(t1) * m
    return [
        [t1[i // m][j // m] * m + t2[i % m][j % m] for j in range(size)]
        for i in range(size)
    ]


def all_subgroups(table: GroupTable) -> List[frozenset]:
    """Every subgroup, as joins of cyclic subgroups, sorted by order then members."""
    validate_table(table)
    found = {generated_subgroup(table, [x]) for x in range(len(table))}
    frontier = list(found)
    while frontier:
        current = frontier.pop()
        for other in list(found):
            joined = generated_subgroup(table, current | other)
            if joined not in found:
                found.add(joined)
                frontier.append(joined)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def regular_rep(table: GroupTable, subgroup: Sequence[int]) -> RegularRepresentation:
    """
    The regular representation of a finite group on Z^H with two invariant subspaces.

    Element a acts by f -> f(a .), i.e. row x of its matrix has a 1 in column
    a*x. v1 holds the functions constant on every left coset xK, v2 the
    functions summing to zero on every left coset.
    """
    members = validate_subgroup(table, subgroup)
    size = len(table)
    mats = [
        ImmutableMatrix(size, size, [Integer(1 if table[a][x] == y else 0) for x in range(size) for y in range(size)])
        for a in range(size)
    ]
    hol = close_group(mats, n=size)

    cosets = []
    seen = set()
    for x in range(size):
        if x in seen:
            continue
        coset = sorted(table[x][k] for k in members)
        seen.update(coset)
        cosets.append(coset)

    indicators = [[1 if y in coset else 0 for y in range(size)] for coset in cosets]
    differences = [
        [a - b for a, b in zip(_unit(size, y), _unit(size, coset[0]))]
        for coset in cosets
        for y in coset[1:]
    ]
    v1 = Sublattice.from_columns(size, indicators)
    v2 = Sublattice.from_columns(size, differences) if differences else Sublattice.zero(size)
    logger.debug(f"Regular representation of order {size}, subgroup order {len(members)}")
    return RegularRepresentation(Ambient.standard(size), hol, v1, v2)


def rotation_group_c4() -> MatrixGroup:
    """The quarter-turn rotation group on Z^2, irreducible over Q."""
    return close_group([matrix([[0, -1], [1, 0]])])


def klein_product_fixtures() -> List[IntersectionFixture]:
    """Complementary invariant pairs in products of Klein bottles and tori."""
    k2, _, _ = klein_bottle(2)
    k3, _, _ = klein_bottle(3)
    circle = torus(identity(1))
    k2_t1 = direct_product(k2, circle)
    k3_t1 = direct_product(k3, circle)
    k2_k2 = direct_product(k2, k2)

    def sub(n, *cols):
        return Sublattice.from_columns(n, list(cols))

    return [
        IntersectionFixture("klein2 x circle: plane | circle", k2_t1, sub(3, [1, 0, 0], [0, 1, 0]), sub(3, [0, 0, 1])),
        IntersectionFixture("klein2 x circle: circle | plane", k2_t1, sub(3, [0, 0, 1]), sub(3, [1, 0, 0], [0, 1, 0])),
        IntersectionFixture("klein2 x circle: constants | rest", k2_t1, sub(3, [1, 0, 0]), sub(3, [0, 1, 0], [0, 0, 1])),
        IntersectionFixture("klein2 x circle: fixed plane | reflected line", k2_t1, sub(3, [1, 0, 0], [0, 0, 1]), sub(3, [0, 1, 0])),
        IntersectionFixture("klein2 x circle: diagonal | rest", k2_t1, sub(3, [1, 0, 1]), sub(3, [0, 1, 0], [0, 0, 1])),
        IntersectionFixture("klein2 x circle: skew diagonal | rest", k2_t1, sub(3, [1, 0, 2]), sub(3, [0, 1, 0], [1, 0, 0])),
        IntersectionFixture("klein3 x circle: plane | line", k3_t1, sub(4, [0, 1, 0, 0], [0, 0, 1, 0]), sub(4, [1, 0, 0, 0], [0, 0, 0, 1])),
        IntersectionFixture("klein3 x circle: constants | rest", k3_t1, sub(4, [1, 0, 0, 0]), sub(4, [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1])),
        IntersectionFixture("klein2 x klein2: factors", k2_k2, sub(4, [1, 0, 0, 0], [0, 1, 0, 0]), sub(4, [0, 0, 1, 0], [0, 0, 0, 1])),
        IntersectionFixture("klein2 x klein2: mixed", k2_k2, sub(4, [1, 0, 0, 0], [0, 0, 0, 1]), sub(4, [0, 1, 0, 0], [0, 0, 1, 0])),
        IntersectionFixture("klein2 x klein2: constants | reflections", k2_k2, sub(4, [1, 0, 0, 0], [0, 0, 1, 0]), sub(4, [0, 1, 0, 0], [0, 0, 0, 1])),
    ]
