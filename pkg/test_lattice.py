#!/usr/bin/env python3
"""
Test Lattice Algebra
====================

Verify sublattice canonical forms, saturation, quotients and the orthogonal
structure, plus randomized checks of the lattice identities.
"""

import pytest
from hypothesis import assume, given, settings as hsettings, strategies as st
from sympy import Rational

from flat_manifold_utils.errors import ContainmentError, InvalidGram, InvalidSubspace, NotSaturated
from flat_manifold_utils.exactlin import column, identity, matrix, rank
from flat_manifold_utils.lattice import (
    Ambient,
    Sublattice,
    completion_projector,
    is_direct_summand,
    is_saturated,
    lattice_index,
    lattice_sum,
    meet,
    orthogonal_complement,
    orthogonal_part,
    quotient_group,
    quotient_lattice,
    saturate,
    superlattice_basis,
)


def sub(n, *cols):
    return Sublattice.from_columns(n, list(cols))


def test_canonical_basis_makes_equal_lattices_equal():
    assert sub(2, [1, 1], [1, -1]) == sub(2, [1, 1], [0, 2])
    assert sub(2, [1, 1], [1, -1]).basis == matrix([[1, 0], [1, 2]])
    assert sub(3, [1, 0, 0], [2, 0, 0]).rank == 1


def test_rational_generators_rejected():
    with pytest.raises(InvalidSubspace):
        Sublattice(2, column([Rational(1, 2), 0]))


def test_saturation():
    s = sub(2, [2, 2])
    assert not is_saturated(s)
    assert saturate(s) == sub(2, [1, 1])
    assert is_saturated(sub(2, [1, 1]))
    assert saturate(sub(2, [2, 0], [0, 2])) == Sublattice.full(2)


def test_membership():
    s = sub(2, [1, 1], [1, -1])
    assert s.contains(column([2, 0]))
    assert not s.contains(column([1, 0]))
    assert s.span_contains(column([Rational(1, 2), 0]))
    assert sub(2, [1, 1]).span_contains(column([3, 3]))
    assert not sub(2, [1, 1]).span_contains(column([1, 0]))
    assert sub(2, [2, 0]).is_subset(sub(2, [1, 0]))


def test_quotient_group():
    q = quotient_group(sub(2, [1, 1], [1, -1]))
    assert q.factors == (2,)
    assert q.order == 2

    free = quotient_group(sub(3, [1, 0, 0]))
    assert free.free_rank == 2
    assert free.order is None

    inner = quotient_group(sub(2, [2, 0], [0, 6]), sub(2, [1, 0], [0, 2]))
    assert inner.factors == (6,)


def test_quotient_group_containment():
    with pytest.raises(ContainmentError):
        quotient_group(Sublattice.full(2), sub(2, [2, 0], [0, 2]))


def test_quotient_lattice():
    s = sub(3, [1, 1, 0])
    lifts, projection = quotient_lattice(s)
    assert lifts.shape == (3, 2)
    assert projection.shape == (2, 3)
    assert projection * s.basis == matrix([[0], [0]])
    assert projection * lifts == identity(2)
    with pytest.raises(NotSaturated):
        quotient_lattice(sub(2, [2, 0]))


def test_sum_and_meet():
    assert lattice_sum(sub(3, [1, 0, 0]), sub(3, [0, 1, 0])) == sub(3, [1, 0, 0], [0, 1, 0])
    assert meet(sub(3, [1, 0, 0], [0, 1, 0]), sub(3, [0, 1, 0], [0, 0, 1])) == sub(3, [0, 1, 0])
    assert meet(sub(2, [1, 0]), sub(2, [0, 1])).rank == 0


def test_orthogonal_complement():
    assert orthogonal_complement(sub(2, [1, 1]), Ambient.standard(2)) == sub(2, [1, -1])
    skew = Ambient(2, matrix([[2, 1], [1, 2]]))
    assert orthogonal_complement(sub(2, [1, 0]), skew) == sub(2, [1, -2])


def test_orthogonal_part():
    amb = Ambient.standard(2)
    x = column([Rational(1, 2), Rational(1, 2)])
    assert orthogonal_part(x, sub(2, [1, 1]), amb) == column([0, 0])
    assert orthogonal_part(column([1, 0]), sub(2, [1, 1]), amb) == column([Rational(1, 2), Rational(-1, 2)])


def test_invalid_gram():
    with pytest.raises(InvalidGram):
        Ambient(2, matrix([[1, 2], [2, 1]]))
    with pytest.raises(InvalidGram):
        Ambient(2, matrix([[1, 0], [1, 1]]))


def test_completion_projector():
    s = sub(3, [1, 1, 0], [0, 0, 1])
    p = completion_projector(s)
    assert p * p == p
    assert p * s.basis == s.basis
    assert all(x == int(x) for x in p)


def test_superlattice_basis():
    c = superlattice_basis(1, [column([Rational(1, 3)])])
    assert c == matrix([[Rational(1, 3)]])
    assert lattice_index(c) == 3
    c2 = superlattice_basis(2, [column([Rational(1, 2), Rational(1, 2)])])
    assert lattice_index(c2) == 2
    assert lattice_index(superlattice_basis(2, [])) == 1


# ---------------------------------------------------------------------------
# Randomized identities
# ---------------------------------------------------------------------------

small_ints = st.integers(min_value=-5, max_value=5)
vectors3 = st.lists(small_ints, min_size=3, max_size=3)
generator_sets = st.lists(vectors3, min_size=1, max_size=3)


@hsettings(max_examples=300, deadline=None)
@given(generator_sets)
def test_saturation_identities(cols):
    assume(any(any(x != 0 for x in c) for c in cols))
    s = Sublattice.from_columns(3, cols)
    sat = saturate(s)
    assert saturate(sat) == sat
    assert is_direct_summand(sat)
    assert sat.rank == s.rank == rank(matrix(cols).T)
    assert s.is_subset(sat)
    for c in sat.columns():
        assert s.span_contains(c)


@hsettings(max_examples=250, deadline=None)
@given(generator_sets, generator_sets)
def test_sum_and_meet_are_saturated(cols_a, cols_b):
    a = saturate(Sublattice.from_columns(3, cols_a))
    b = saturate(Sublattice.from_columns(3, cols_b))
    total = lattice_sum(a, b)
    common = meet(a, b)
    assert is_saturated(total)
    assert is_saturated(common)
    assert total.rank + common.rank == a.rank + b.rank
    assert a.is_subset(total) and b.is_subset(total)
    for c in common.columns():
        assert a.span_contains(c) and b.span_contains(c)


@hsettings(max_examples=200, deadline=None)
@given(generator_sets, generator_sets)
def test_modular_law(cols_a, cols_b):
    a = saturate(Sublattice.from_columns(3, cols_a))
    b = saturate(Sublattice.from_columns(3, cols_b))
    assert meet(a, lattice_sum(a, b)) == a
    assert lattice_sum(a, meet(a, b)) == a
    assert meet(a, b) == meet(b, a)
    assert lattice_sum(a, b) == lattice_sum(b, a)


def _positive_definite(rows):
    # M^T M + I is positive definite for any integer M
    m = matrix(rows)
    return m.T * m + identity(3)


grams = st.lists(vectors3, min_size=3, max_size=3).map(_positive_definite)


@hsettings(max_examples=250, deadline=None)
@given(generator_sets, grams)
def test_orthogonal_complement_identities(cols, gram):
    assume(any(any(x != 0 for x in c) for c in cols))
    amb = Ambient(3, gram)
    s = saturate(Sublattice.from_columns(3, cols))
    perp = orthogonal_complement(s, amb)
    assert is_saturated(perp)
    assert s.rank + perp.rank == 3
    assert meet(s, perp).rank == 0
    assert lattice_sum(s, perp).rank == 3
    for x in s.columns():
        for y in perp.columns():
            assert amb.inner(x, y) == 0
    assert orthogonal_complement(perp, amb) == s


@hsettings(max_examples=100, deadline=None)
@given(generator_sets)
def test_index_in_full_lattice(cols):
    assume(any(any(x != 0 for x in c) for c in cols))
    s = Sublattice.from_columns(3, cols)
    sat = saturate(s)
    full_index = sat.index_in(Sublattice.full(3))
    if sat.rank < 3:
        assert full_index is None
    else:
        assert full_index == 1
    index = s.index_in(sat)
    assert index is not None and index >= 1
    assert (index == 1) == is_saturated(s)


def test_index_in():
    assert sub(2, [2, 0], [0, 3]).index_in(Sublattice.full(2)) == 6
    assert sub(2, [2, 0]).index_in(sub(2, [1, 0])) == 2
    assert sub(2, [1, 0]).index_in(Sublattice.full(2)) is None
    with pytest.raises(ContainmentError):
        sub(2, [1, 0]).index_in(sub(2, [2, 0]))
