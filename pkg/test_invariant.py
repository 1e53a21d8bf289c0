#!/usr/bin/env python3
"""
Test Invariant Subspaces
========================

Verify group closure, invariant complements, the averaged projector and the
search for proper invariant subspaces.
"""

import pytest

from flat_manifold_utils.corpus import (
    all_subgroups,
    cyclic_table,
    klein_bottle,
    klein_product_fixtures,
    product_table,
    regular_rep,
    rotation_group_c4,
    symmetric_table,
)
from flat_manifold_utils.errors import GroupNotFinite, NotInvariant, NotUnimodular
from flat_manifold_utils.exactlin import identity, matrix
from flat_manifold_utils.invariant import (
    averaged_projector,
    close_group,
    find_proper_invariant_subspace,
    fixed_subspace,
    invariant_complement,
    is_invariant,
    minimal_decomposition,
    restrict_group,
    search_vectors,
    trivial_group,
)
from flat_manifold_utils.lattice import Sublattice, is_saturated, lattice_sum, meet


def test_close_group_cyclic_shift():
    shift = matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    g = close_group([shift])
    assert g.order == 3
    assert g.elements[0] == identity(3)
    assert all(g.mult[0][i] == i for i in range(3))
    assert all(g.mult[i][g.inv[i]] == 0 for i in range(3))
    assert g.element_order(g.generators[0]) == 3
    assert g.subgroup_closure([g.generators[0]]) == frozenset(range(3))


def test_close_group_rejects_bad_generators():
    with pytest.raises(NotUnimodular):
        close_group([matrix([[2]])])
    with pytest.raises(GroupNotFinite) as exc:
        close_group([matrix([[1, 1], [0, 1]])], bound=50)
    assert exc.value.details == {"bound": 50}


def test_trivial_group():
    g = trivial_group(2)
    assert g.order == 1
    assert g.generators == ()


def test_fixed_subspace_of_klein_holonomy():
    group, v_const, _ = klein_bottle(4)
    assert fixed_subspace(group.hol) == v_const


def test_invariance():
    group, v_const, v_zeroavg = klein_bottle(3)
    assert is_invariant(v_const, group.hol)
    assert is_invariant(v_zeroavg, group.hol)
    assert not is_invariant(Sublattice.from_columns(3, [[0, 1, 0]]), group.hol)


def test_invariant_complement_of_constants():
    rep = regular_rep(cyclic_table(3), [0, 1, 2])
    assert invariant_complement(rep.v1, rep.hol) == rep.v2


def test_invariant_complement_requires_invariance():
    group, _, _ = klein_bottle(3)
    with pytest.raises(NotInvariant):
        invariant_complement(Sublattice.from_columns(3, [[0, 1, 0]]), group.hol)


def test_restrict_group():
    group, _, v_zeroavg = klein_bottle(3)
    restricted, element_map = restrict_group(group.hol, v_zeroavg)
    assert restricted.n == 2
    assert restricted.order == 3
    assert sorted(element_map) == [0, 1, 2]


def test_search_vectors_order():
    first = [tuple(int(x) for x in v) for v in search_vectors(2, 1)]
    assert first == [(1, 0), (0, 1), (1, 1), (1, -1)]
    assert len(list(search_vectors(2, 2))) == 8


def test_reduce_torus_and_klein():
    assert find_proper_invariant_subspace(trivial_group(2)) == Sublattice.from_columns(2, [[1, 0]])
    for n in (2, 3, 4):
        group, v_const, _ = klein_bottle(n)
        assert find_proper_invariant_subspace(group.hol) == v_const


def test_reduce_rotation_group_not_found():
    assert find_proper_invariant_subspace(rotation_group_c4(), 3) is None


def test_minimal_decomposition_of_klein3():
    group, v_const, v_zeroavg = klein_bottle(3)
    factors = minimal_decomposition(Sublattice.full(3), group.hol)
    assert [f.sublattice.rank for f in factors] == [1, 2]
    assert [f.certified for f in factors] == [True, False]
    assert factors[0].sublattice == v_const
    assert factors[1].sublattice == v_zeroavg


def _corpus_holonomies():
    for n in range(2, 7):
        group, _, _ = klein_bottle(n)
        yield pytest.param(group.hol, id=f"klein-{n}")
    seen = set()
    for fixture in klein_product_fixtures():
        name = fixture.label.split(":")[0]
        if name not in seen:
            seen.add(name)
            yield pytest.param(fixture.group.hol, id=name)


@pytest.mark.parametrize("hol", list(_corpus_holonomies()))
def test_reduce_every_corpus_holonomy(hol):
    found = find_proper_invariant_subspace(hol)
    assert found is not None
    assert 0 < found.rank < hol.n
    assert is_saturated(found)
    assert is_invariant(found, hol)


def _assert_direct_sum(factors, s0, hol):
    assert sum(f.sublattice.rank for f in factors) == s0.rank
    total = Sublattice.zero(s0.n)
    for f in factors:
        assert is_saturated(f.sublattice)
        assert is_invariant(f.sublattice, hol)
        assert f.sublattice.is_subset(s0)
        total = lattice_sum(total, f.sublattice)
    assert total.rank == s0.rank
    assert all(f.sublattice.rank == 1 for f in factors if f.certified)


def test_minimal_decomposition_of_s3_regular_representation():
    rep = regular_rep(symmetric_table(3), [0])
    factors = minimal_decomposition(Sublattice.full(6), rep.hol)
    assert sorted(f.sublattice.rank for f in factors) == [1, 1, 2, 2]
    _assert_direct_sum(factors, Sublattice.full(6), rep.hol)


@pytest.mark.parametrize("hol", list(_corpus_holonomies()))
def test_minimal_decomposition_is_a_direct_sum(hol):
    full = Sublattice.full(hol.n)
    _assert_direct_sum(minimal_decomposition(full, hol), full, hol)


def test_minimal_decomposition_of_regular_c4():
    rep = regular_rep(cyclic_table(4), [0])
    factors = minimal_decomposition(Sublattice.full(4), rep.hol)
    assert sorted(f.sublattice.rank for f in factors) == [1, 1, 2]
    _assert_direct_sum(factors, Sublattice.full(4), rep.hol)


# ---------------------------------------------------------------------------
# Complements over regular representations and corpus holonomies
# ---------------------------------------------------------------------------

C2 = cyclic_table(2)
SUBGROUP_TABLES = {
    "C2": C2,
    "C3": cyclic_table(3),
    "C4": cyclic_table(4),
    "C5": cyclic_table(5),
    "C6": cyclic_table(6),
    "C8": cyclic_table(8),
    "C2xC2": product_table(C2, C2),
    "S3": symmetric_table(3),
    "C4xC2": product_table(cyclic_table(4), C2),
    "C2^3": product_table(product_table(C2, C2), C2),
    "C3xC4": product_table(cyclic_table(3), cyclic_table(4)),
    "C2xC6": product_table(C2, cyclic_table(6)),
    "S3xC2": product_table(symmetric_table(3), C2),
    "S4": symmetric_table(4),
}


def _regular_rep_fixtures():
    for name, table in SUBGROUP_TABLES.items():
        for members in all_subgroups(table):
            subgroup = tuple(sorted(members))
            yield pytest.param(name, subgroup, id=f"{name}-{'.'.join(map(str, subgroup))}")


REGULAR_REP_FIXTURES = list(_regular_rep_fixtures())


def test_fixture_breadth():
    assert len(REGULAR_REP_FIXTURES) >= 100
    assert len(all_subgroups(SUBGROUP_TABLES["S4"])) == 30


def _assert_complement(s, hol):
    complement = invariant_complement(s, hol)
    assert is_saturated(complement)
    assert is_invariant(complement, hol)
    assert s.rank + complement.rank == hol.n
    assert meet(s, complement).rank == 0

    p = averaged_projector(s, hol)
    assert p * p == p
    assert p * s.basis == s.basis
    for a in hol.generator_matrices():
        assert a * p == p * a


@pytest.mark.parametrize("name,subgroup", REGULAR_REP_FIXTURES)
def test_invariant_complement_properties(name, subgroup):
    rep = regular_rep(SUBGROUP_TABLES[name], list(subgroup))
    for s in (rep.v1, rep.v2):
        _assert_complement(s, rep.hol)


def _corpus_subspaces():
    for n in range(2, 7):
        group, v_const, v_zeroavg = klein_bottle(n)
        yield pytest.param(group.hol, v_const, id=f"klein-{n}-constants")
        yield pytest.param(group.hol, v_zeroavg, id=f"klein-{n}-zero-average")
    for fixture in klein_product_fixtures():
        yield pytest.param(fixture.group.hol, fixture.v1, id=fixture.label)


@pytest.mark.parametrize("hol,s", list(_corpus_subspaces()))
def test_invariant_complement_on_corpus_holonomies(hol, s):
    _assert_complement(s, hol)
