#!/usr/bin/env python3
"""
Test Exact Linear Algebra
=========================

Verify the normal forms, their transforms and the integer and rational solvers.
"""

from hypothesis import given, settings as hsettings, strategies as st
from sympy import Rational

from flat_manifold_utils.exactlin import (
    column,
    common_denominator,
    frac_part,
    hnf,
    invariant_factors,
    is_integral,
    kernel_rational,
    matrix,
    primitive,
    rank,
    snf,
    solve_integer,
)

small_ints = st.integers(min_value=-6, max_value=6)


def int_matrices(rows: int, cols: int):
    return st.lists(
        st.lists(small_ints, min_size=cols, max_size=cols), min_size=rows, max_size=rows
    ).map(matrix)


def test_hnf_of_diagonal_pair():
    m = matrix([[1, 1], [1, -1]])
    h, u = hnf(m)
    assert h == matrix([[1, 0], [1, 2]])
    assert h == m * u
    assert abs(u.det()) == 1


def test_hnf_drops_dependent_columns_to_the_right():
    m = matrix([[2, 4], [1, 2]])
    h, u = hnf(m)
    assert h == m * u
    assert all(h[i, 1] == 0 for i in range(2))
    assert h[0, 0] == 2 and h[1, 0] == 1


def test_snf_divisibility_chain():
    m = matrix([[2, 4], [6, 8]])
    s, u, v = snf(m)
    assert s == u * m * v
    assert s == matrix([[2, 0], [0, 4]])
    assert invariant_factors(m) == (2, 4)


def test_snf_needs_gcd_fix():
    # diag(2, 3) has Smith form diag(1, 6)
    m = matrix([[2, 0], [0, 3]])
    s, u, v = snf(m)
    assert s == u * m * v
    assert invariant_factors(m) == (1, 6)


def test_invariant_factors_of_rank_deficient_matrix():
    assert invariant_factors(matrix([[1, 1], [1, 1]])) == (1,)
    assert invariant_factors(matrix([[0, 0], [0, 0]])) == ()


def test_solve_integer():
    a = matrix([[2, 0], [0, 3]])
    assert solve_integer(a, column([4, 9])) == column([2, 3])
    assert solve_integer(a, column([1, 0])) is None
    assert solve_integer(a, column([Rational(1, 2), 0])) is None


def test_solve_integer_underdetermined():
    a = matrix([[1, 1]])
    x = solve_integer(a, column([5]))
    assert x is not None
    assert a * x == column([5])


def test_kernel_rational():
    a = matrix([[1, 1, 0]])
    k = kernel_rational(a)
    assert k.cols == 2
    assert a * k == matrix([[0, 0]])
    assert kernel_rational(matrix([[1, 0], [0, 1]])).cols == 0


def test_scalar_utilities():
    assert frac_part(column([Rational(-1, 3), Rational(5, 2), 3])) == column([Rational(2, 3), Rational(1, 2), 0])
    assert primitive(column([Rational(2, 3), Rational(4, 3)])) == column([1, 2])
    assert common_denominator(column([Rational(1, 4), Rational(1, 6)])) == 12
    assert is_integral(column([1, -2]))
    assert not is_integral(column([Rational(1, 2)]))
    assert rank(matrix([[1, 2], [2, 4]])) == 1


@hsettings(max_examples=60, deadline=None)
@given(int_matrices(3, 3))
def test_hnf_properties(m):
    h, u = hnf(m)
    assert h == m * u
    assert abs(u.det()) == 1

    nonzero = [j for j in range(h.cols) if any(h[i, j] != 0 for i in range(h.rows))]
    assert nonzero == list(range(len(nonzero)))
    assert len(nonzero) == rank(m)

    pivots = []
    for j in nonzero:
        i = next(i for i in range(h.rows) if h[i, j] != 0)
        assert h[i, j] > 0
        pivots.append(i)
        for k in range(j):
            assert 0 <= h[i, k] < h[i, j]
    assert pivots == sorted(set(pivots))


@hsettings(max_examples=60, deadline=None)
@given(int_matrices(2, 3))
def test_snf_properties(m):
    s, u, v = snf(m)
    assert s == u * m * v
    assert abs(u.det()) == 1
    assert abs(v.det()) == 1
    for i in range(s.rows):
        for j in range(s.cols):
            if i != j:
                assert s[i, j] == 0
    diagonal = [s[i, i] for i in range(min(s.shape))]
    assert all(d >= 0 for d in diagonal)
    for a, b in zip(diagonal, diagonal[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0
