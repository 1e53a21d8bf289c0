#!/usr/bin/env python3
"""
Test Example Corpus
===================

Verify the Klein bottle constructor, finite group tables and the regular
representation with its coset subspaces.
"""

import pytest
from sympy import Rational

from flat_manifold_utils.corpus import (
    all_subgroups,
    cyclic_table,
    generated_subgroup,
    klein_bottle,
    product_table,
    regular_rep,
    rotation_group_c4,
    symmetric_table,
    validate_subgroup,
    validate_table,
)
from flat_manifold_utils.errors import InvalidDocument, InvalidGroupTable
from flat_manifold_utils.exactlin import column
from flat_manifold_utils.invariant import find_proper_invariant_subspace, is_invariant
from flat_manifold_utils.lattice import meet


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_klein_lattice_data(n):
    group, v_const, v_zeroavg = klein_bottle(n)
    gram = group.amb.gram
    assert gram[0, 0] == n
    for j in range(1, n):
        assert gram[0, j] == 0
        for k in range(1, n):
            assert gram[j, k] == (2 if j == k else 1)
    mats, vecs = group.generator_data()
    assert len(mats) == 1
    assert vecs[0] == column([Rational(1, n)] + [0] * (n - 1))
    assert v_const.rank == 1
    assert v_zeroavg.rank == n - 1
    assert find_proper_invariant_subspace(group.hol, 3) is not None


def test_klein_needs_two_dimensions():
    with pytest.raises(InvalidDocument):
        klein_bottle(1)


def test_tables():
    assert validate_table(cyclic_table(5)) == 0
    assert validate_table(symmetric_table(3)) == 0
    assert len(product_table(cyclic_table(2), cyclic_table(3))) == 6
    assert len(all_subgroups(cyclic_table(4))) == 3
    assert len(all_subgroups(symmetric_table(3))) == 6
    assert len(all_subgroups(product_table(cyclic_table(2), cyclic_table(2)))) == 5
    assert generated_subgroup(cyclic_table(6), [2]) == frozenset({0, 2, 4})


def test_invalid_tables():
    with pytest.raises(InvalidGroupTable):
        validate_table([[0, 1], [1, 1]])
    with pytest.raises(InvalidGroupTable):
        validate_table([])
    with pytest.raises(InvalidGroupTable):
        validate_subgroup(cyclic_table(4), [0, 1])
    with pytest.raises(InvalidGroupTable):
        validate_subgroup(cyclic_table(4), [1, 3])


@pytest.mark.parametrize(
    "table,subgroup,cosets",
    [
        (cyclic_table(4), [0, 2], 2),
        (cyclic_table(3), [0], 3),
        (symmetric_table(3), [0, 1], 3),
        (symmetric_table(3), [0, 3, 4], 2),
    ],
)
def test_regular_rep(table, subgroup, cosets):
    rep = regular_rep(table, subgroup)
    size = len(table)
    assert rep.hol.order == size
    assert rep.v1.rank == cosets
    assert rep.v2.rank == size - cosets
    assert meet(rep.v1, rep.v2).rank == 0
    assert is_invariant(rep.v1, rep.hol)
    assert is_invariant(rep.v2, rep.hol)


def test_rotation_group():
    g = rotation_group_c4()
    assert g.order == 4
    assert all(d == 1 for d in g.determinants())
