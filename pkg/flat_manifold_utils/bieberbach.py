"""
Bieberbach Groups
=================

A Bieberbach group is stored in lattice coordinates as an ambient lattice with
its Gram matrix, a finite holonomy group of unimodular matrices and a vector
system assigning each holonomy element a translational part modulo Z^n.

Group elements are pairs (holonomy index a, lattice vector lambda) acting by
x -> A_a x + b(a) + lambda.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy import ImmutableMatrix

from .errors import (
    DimensionMismatch,
    HasTorsion,
    InconsistentVectorSystem,
    NotIsometric,
)
from .exactlin import (
    block_diag,
    frac_part,
    identity,
    is_integral,
    solve_integer,
    vector_key,
    vstack,
    zeros,
)
from .invariant import DEFAULT_ORDER_BOUND, MatrixGroup, close_group
from .lattice import Ambient

logger = logging.getLogger(__name__)

# Canonical translational part of every holonomy element, entries in [0, 1).
VectorSystem = Tuple[ImmutableMatrix, ...]


@dataclass(frozen=True)
class BieberbachGroup:
    amb: Ambient
    hol: MatrixGroup
    vsys: VectorSystem

    @property
    def n(self) -> int:
        return self.amb.n

    @property
    def order(self) -> int:
        """Order of the holonomy group."""
        return self.hol.order

    def linear(self, a: int) -> ImmutableMatrix:
        return self.hol.elements[a]

    def b(self, a: int) -> ImmutableMatrix:
        return self.vsys[a]

    def generator_data(self) -> Tuple[Tuple[ImmutableMatrix, ...], Tuple[ImmutableMatrix, ...]]:
        """Point-group generators and their translational parts, as recorded at build time."""
        return (
            self.hol.generator_matrices(),
            tuple(self.vsys[i] for i in self.hol.generators),
        )


@dataclass(frozen=True)
class AffineElement:
    """The isometry x -> A_index x + b(index) + lam."""

    index: int
    lam: ImmutableMatrix


def _check_vectors(n: int, vectors: Sequence[ImmutableMatrix]) -> List[ImmutableMatrix]:
    out = []
    for v in vectors:
        v = ImmutableMatrix(v)
        if v.shape != (n, 1):
            raise DimensionMismatch(
                f"translational part has shape {v.rows}x{v.cols}, expected {n}x1"
            )
        out.append(v)
    return out


def _propagate(hol: MatrixGroup, gen_vectors: List[ImmutableMatrix]) -> VectorSystem:
    """Spread generator translations over the group along b(ij) = A_i b(j) + b(i)."""
    assigned = {0: zeros(hol.n, 1)}

    def assign(k: int, value: ImmutableMatrix, source: str) -> None:
        value = frac_part(value)
        if k in assigned:
            if assigned[k] != value:
                raise InconsistentVectorSystem(
                    "two derivations of a translational part disagree modulo the lattice",
                    details={
                        "element": k,
                        "first": [str(x) for x in assigned[k]],
                        "second": [str(x) for x in value],
                        "via": source,
                    },
                )
            return
        assigned[k] = value

    for j, (g, c) in enumerate(zip(hol.generators, gen_vectors)):
        assign(g, c, f"generator {j}")

    # every Cayley edge i -> i*g is checked once
    queue = [0]
    visited = {0}
    position = 0
    while position < len(queue):
        i = queue[position]
        position += 1
        for g in hol.generators:
            k = hol.mult[i][g]
            assign(k, hol.elements[i] * assigned[g] + assigned[i], f"edge {i}*{g}")
            if k not in visited:
                visited.add(k)
                queue.append(k)

    return tuple(assigned[i] for i in range(hol.order))


def assemble(
    gram: ImmutableMatrix,
    point_gens: Sequence[ImmutableMatrix],
    b_gens: Sequence[ImmutableMatrix],
    bound: int = DEFAULT_ORDER_BOUND,
) -> BieberbachGroup:
    """Crystallographic data with validated isometry and cocycle, torsion allowed."""
    gram = ImmutableMatrix(gram)
    amb = Ambient(gram.rows, gram)
    n = amb.n
    if len(point_gens) != len(b_gens):
        raise DimensionMismatch(
            "number of point-group generators and translational parts differ",
            details={"point_generators": len(point_gens), "vector_system_generators": len(b_gens)},
        )
    vectors = _check_vectors(n, b_gens)
    hol = close_group(point_gens, bound, n)
    for j, a in enumerate(hol.generator_matrices()):
        if a.T * amb.gram * a != amb.gram:
            raise NotIsometric(
                "point-group generator does not preserve the Gram matrix",
                details={"generator": j},
            )
    vsys = _propagate(hol, vectors)
    logger.debug(f"Assembled group of dimension {n} with holonomy order {hol.order}")
    return BieberbachGroup(amb, hol, vsys)


def build(
    gram: ImmutableMatrix,
    point_gens: Sequence[ImmutableMatrix],
    b_gens: Sequence[ImmutableMatrix],
    bound: int = DEFAULT_ORDER_BOUND,
) -> BieberbachGroup:
    """
    Build and fully validate a Bieberbach group, torsion-freeness included.

    Args:
        gram: Gram matrix of the lattice basis
        point_gens: Holonomy generators as integer matrices
        b_gens: Translational part of each generator
        bound: Largest holonomy order accepted

    Returns:
        The group with its full vector system

    Raises:
        NotIsometric: If a generator does not preserve the Gram matrix
        InconsistentVectorSystem: If the generator data violate the cocycle condition
        HasTorsion: If some element has finite order
    """
    group = assemble(gram, point_gens, b_gens, bound)
    witness = torsion_witness(group)
    if witness is not None:
        raise HasTorsion(
            "group contains a nontrivial element of finite order",
            details={"holonomy_index": witness, "holonomy_order": group.hol.element_order(witness)},
        )
    logger.info(f"Built Bieberbach group: n={group.n}, |H|={group.order}")
    return group


def verify_cocycle(g: BieberbachGroup) -> bool:
    """Check b(ij) = A_i b(j) + b(i) modulo Z^n for every pair."""
    for i in range(g.order):
        for j in range(g.order):
            k = g.hol.mult[i][j]
            if not is_integral(g.linear(i) * g.b(j) + g.b(i) - g.b(k)):
                return False
    return True


def norm_map(a: ImmutableMatrix, order: int) -> ImmutableMatrix:
    """I + A + ... + A^(order-1)."""
    total = identity(a.rows)
    power = identity(a.rows)
    for _ in range(order - 1):
        power = power * a
        total = total + power
    return total


def torsion_witness(g: BieberbachGroup) -> Optional[int]:
    """Index of a holonomy element carrying a finite-order affine element, if any."""
    for i in range(1, g.order):
        norm = norm_map(g.linear(i), g.hol.element_order(i))
        rhs = -(norm * g.b(i))
        if is_integral(rhs) and solve_integer(norm, rhs) is not None:
            return i
    return None


def is_torsion_free(g: BieberbachGroup) -> bool:
    return torsion_witness(g) is None


def holonomy_determinants(g: BieberbachGroup) -> Tuple[int, ...]:
    return g.hol.determinants()


def is_orientable(g: BieberbachGroup) -> bool:
    return all(d == 1 for d in holonomy_determinants(g))


# ---------------------------------------------------------------------------
# Affine elements
# ---------------------------------------------------------------------------

def identity_element(g: BieberbachGroup) -> AffineElement:
    return AffineElement(0, zeros(g.n, 1))


def translation(lam: ImmutableMatrix) -> AffineElement:
    return AffineElement(0, ImmutableMatrix(lam))


def carry(g: BieberbachGroup, a: int, c: int) -> ImmutableMatrix:
    """A_a b(c) + b(a) - b(ac), always a lattice vector."""
    return ImmutableMatrix(g.linear(a) * g.b(c) + g.b(a) - g.b(g.hol.mult[a][c]))


def compose(g: BieberbachGroup, e1: AffineElement, e2: AffineElement) -> AffineElement:
    """e1 after e2."""
    lam = g.linear(e1.index) * e2.lam + e1.lam + carry(g, e1.index, e2.index)
    return AffineElement(g.hol.mult[e1.index][e2.index], ImmutableMatrix(lam))


def inverse(g: BieberbachGroup, e: AffineElement) -> AffineElement:
    a_inv = g.hol.inv[e.index]
    back = g.linear(a_inv)
    mu = -(back * e.lam) - back * g.b(e.index) - g.b(a_inv)
    return AffineElement(a_inv, ImmutableMatrix(mu))


def act(e: AffineElement, x: ImmutableMatrix, g: BieberbachGroup) -> ImmutableMatrix:
    return ImmutableMatrix(g.linear(e.index) * x + g.b(e.index) + e.lam)


def same_orbit(x: ImmutableMatrix, y: ImmutableMatrix, g: BieberbachGroup) -> Optional[AffineElement]:
    """A group element carrying x to y, if the two points have the same image in the manifold."""
    for a in range(g.order):
        lam = y - g.linear(a) * x - g.b(a)
        if is_integral(lam):
            return AffineElement(a, ImmutableMatrix(lam))
    return None


def translation_lattice_elements(g: BieberbachGroup, radius: int = 1) -> Tuple[ImmutableMatrix, ...]:
    """
    Translation vectors of the pure translations among the group elements (a, lam)
    with lam in the box [-radius, radius]^n.

    Only the identity holonomy index has linear part I, and its translational
    part is zero, so the result is exactly the lattice points of the box.

    Args:
        g: Bieberbach group
        radius: Sup-norm bound on the lattice part lam

    Returns:
        Translation vectors, in enumeration order
    """
    ident = identity(g.n)
    origin = zeros(g.n, 1)
    found = []
    for a in range(g.order):
        if g.linear(a) != ident:
            continue
        for lam in itertools.product(range(-radius, radius + 1), repeat=g.n):
            e = AffineElement(a, ImmutableMatrix(g.n, 1, list(lam)))
            found.append(act(e, origin, g))
    return tuple(found)


def orbit_key(x: ImmutableMatrix) -> Tuple:
    """Residue of a point modulo the translation lattice."""
    return vector_key(frac_part(ImmutableMatrix(x)))


def direct_product(g1: BieberbachGroup, g2: BieberbachGroup) -> BieberbachGroup:
    """Riemannian product: block-diagonal Gram and holonomy H1 x H2."""
    n1, n2 = g1.n, g2.n
    mats1, vecs1 = g1.generator_data()
    mats2, vecs2 = g2.generator_data()
    point_gens = [block_diag(a, identity(n2)) for a in mats1]
    point_gens += [block_diag(identity(n1), a) for a in mats2]
    b_gens = [vstack(1, [v, zeros(n2, 1)]) for v in vecs1]
    b_gens += [vstack(1, [zeros(n1, 1), v]) for v in vecs2]
    return build(block_diag(g1.amb.gram, g2.amb.gram), point_gens, b_gens)
