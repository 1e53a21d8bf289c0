"""
Exact Linear Algebra
====================

Integer and rational linear algebra shared by every other module: column-style
Hermite normal form, Smith normal form with unimodular transforms, integer
solvability and rational kernels.

Scalars are sympy ``Rational`` values and matrices are sympy
``ImmutableMatrix`` values. The normal forms run over plain Python integers,
since their unimodular transforms are needed and must be exact.
"""

import logging
from functools import reduce
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy import ImmutableMatrix, Integer, Rational, floor, ilcm

logger = logging.getLogger(__name__)

# Value types. All three are sympy ImmutableMatrix instances; the aliases
# document which entries a caller may expect.
Rat = Rational
IntMatrix = ImmutableMatrix
RatMatrix = ImmutableMatrix
RatVector = ImmutableMatrix
IntVector = ImmutableMatrix


# ---------------------------------------------------------------------------
# Construction helpers
# ---------------------------------------------------------------------------

def matrix(rows: Sequence[Sequence]) -> ImmutableMatrix:
    """Build an exact matrix from nested rows of ints, Rationals or "p/q" strings."""
    rows = [list(r) for r in rows]
    if not rows:
        return ImmutableMatrix(0, 0, [])
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("ragged rows")
    return ImmutableMatrix(len(rows), width, [Rational(x) for r in rows for x in r])


def column(values: Iterable) -> ImmutableMatrix:
    """Build a column vector."""
    values = [Rational(x) for x in values]
    return ImmutableMatrix(len(values), 1, values)


def from_columns(n: int, columns: Sequence[ImmutableMatrix]) -> ImmutableMatrix:
    """Concatenate column vectors (or matrices) into an n-row matrix; n x 0 when empty."""
    cols: List[List] = []
    for c in columns:
        if c.rows != n:
            raise ValueError(f"column has {c.rows} rows, expected {n}")
        for j in range(c.cols):
            cols.append(list(c[:, j]))
    k = len(cols)
    return ImmutableMatrix(n, k, [cols[j][i] for i in range(n) for j in range(k)])


def zeros(rows: int, cols: int) -> ImmutableMatrix:
    return ImmutableMatrix(rows, cols, [Integer(0)] * (rows * cols))


def identity(n: int) -> ImmutableMatrix:
    return ImmutableMatrix(n, n, [Integer(1 if i == j else 0) for i in range(n) for j in range(n)])


def vstack(cols: int, blocks: Sequence[ImmutableMatrix]) -> ImmutableMatrix:
    """Stack blocks vertically; a 0 x cols matrix when there are none."""
    entries: List = []
    rows = 0
    for b in blocks:
        if b.cols != cols:
            raise ValueError("column count mismatch")
        entries.extend(b)
        rows += b.rows
    return ImmutableMatrix(rows, cols, entries)


def block_diag(a: ImmutableMatrix, b: ImmutableMatrix) -> ImmutableMatrix:
    n, m = a.rows, b.rows
    out = [[Integer(0)] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            out[i][j] = a[i, j]
    for i in range(m):
        for j in range(m):
            out[n + i][n + j] = b[i, j]
    return matrix(out) if n + m else ImmutableMatrix(0, 0, [])


def submatrix_columns(m: ImmutableMatrix, start: int, stop: int) -> ImmutableMatrix:
    cols = list(range(start, stop))
    return ImmutableMatrix(m.rows, len(cols), [m[i, j] for i in range(m.rows) for j in cols])


def submatrix_rows(m: ImmutableMatrix, start: int, stop: int) -> ImmutableMatrix:
    rows = list(range(start, stop))
    return ImmutableMatrix(len(rows), m.cols, [m[i, j] for i in rows for j in range(m.cols)])


def int_rows(m: ImmutableMatrix) -> List[List[int]]:
    """Entries as nested Python ints; the matrix must be integral."""
    if not is_integral(m):
        raise ValueError("matrix is not integral")
    return [[int(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def _from_int_rows(rows: List[List[int]], nrows: int, ncols: int) -> ImmutableMatrix:
    return ImmutableMatrix(nrows, ncols, [Integer(x) for r in rows for x in r])


# ---------------------------------------------------------------------------
# Scalar and vector utilities
# ---------------------------------------------------------------------------

def is_integral(m: ImmutableMatrix) -> bool:
    return all(Rational(x).q == 1 for x in m)


def frac_part(m: ImmutableMatrix) -> ImmutableMatrix:
    """Entrywise representative in [0, 1)."""
    return m.applyfunc(lambda x: Rational(x) - floor(Rational(x)))


def common_denominator(m: ImmutableMatrix) -> int:
    return int(reduce(ilcm, (Rational(x).q for x in m), 1))


def vector_key(m: ImmutableMatrix) -> Tuple[Rational, ...]:
    """Hashable canonical key of an exact matrix or vector."""
    return tuple(Rational(x) for x in m)


def rank(m: ImmutableMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return int(m.rank())


def left_inverse(b: ImmutableMatrix) -> ImmutableMatrix:
    """(B^T B)^-1 B^T for a full-column-rank B."""
    if b.cols == 0:
        return zeros(0, b.rows)
    return ImmutableMatrix((b.T * b).inv() * b.T)


def determinant(m: ImmutableMatrix) -> Rational:
    if m.rows == 0:
        return Integer(1)
    return Rational(m.det())


# ---------------------------------------------------------------------------
# Normal forms
# ---------------------------------------------------------------------------

def hnf(m: ImmutableMatrix) -> Tuple[ImmutableMatrix, ImmutableMatrix]:
    """
    Column-style Hermite normal form.

    The nonzero columns of h come first and form a lower staircase; each pivot
    is positive and the entries of the pivot row in earlier columns lie in
    [0, pivot).

    Args:
        m: Integer matrix of any shape

    Returns:
        (h, u) with h = m*u and u unimodular
    """
    r, c = m.shape
    a = int_rows(m)
    u = [[1 if i == j else 0 for j in range(c)] for i in range(c)]

    def swap(j: int, k: int) -> None:
        if j == k:
            return
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in u:
            row[j], row[k] = row[k], row[j]

    def addmul(j: int, k: int, q: int) -> None:
        # column j -= q * column k
        for row in a:
            row[j] -= q * row[k]
        for row in u:
            row[j] -= q * row[k]

    def negate(j: int) -> None:
        for row in a:
            row[j] = -row[j]
        for row in u:
            row[j] = -row[j]

    p = 0
    for i in range(r):
        if p == c:
            break
        while True:
            nonzero = [j for j in range(p, c) if a[i][j] != 0]
            if not nonzero:
                break
            swap(p, min(nonzero, key=lambda j: (abs(a[i][j]), j)))
            clean = True
            for j in range(p + 1, c):
                if a[i][j]:
                    addmul(j, p, a[i][j] // a[i][p])
                    if a[i][j]:
                        clean = False
            if clean:
                break
        if a[i][p] == 0:
            continue
        if a[i][p] < 0:
            negate(p)
        for j in range(p):
            q = a[i][j] // a[i][p]
            if q:
                addmul(j, p, q)
        p += 1

    return _from_int_rows(a, r, c), _from_int_rows(u, c, c)


def snf(m: ImmutableMatrix) -> Tuple[ImmutableMatrix, ImmutableMatrix, ImmutableMatrix]:
    """
    Smith normal form with both transforms.

    Pivots are chosen by smallest nonzero absolute value.

    Args:
        m: Integer matrix of any shape

    Returns:
        (s, u, v) with s = u*m*v, u and v unimodular, and s diagonal with
        d_1 | d_2 | ... >= 0
    """
    r, c = m.shape
    a = int_rows(m)
    u = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    v = [[1 if i == j else 0 for j in range(c)] for i in range(c)]

    def row_swap(i: int, k: int) -> None:
        if i != k:
            a[i], a[k] = a[k], a[i]
            u[i], u[k] = u[k], u[i]

    def col_swap(j: int, k: int) -> None:
        if j != k:
            for row in a:
                row[j], row[k] = row[k], row[j]
            for row in v:
                row[j], row[k] = row[k], row[j]

    def row_addmul(i: int, k: int, q: int) -> None:
        # row i -= q * row k
        a[i] = [x - q * y for x, y in zip(a[i], a[k])]
        u[i] = [x - q * y for x, y in zip(u[i], u[k])]

    def col_addmul(j: int, k: int, q: int) -> None:
        for row in a:
            row[j] -= q * row[k]
        for row in v:
            row[j] -= q * row[k]

    for t in range(min(r, c)):
        entries = [(abs(a[i][j]), i, j) for i in range(t, r) for j in range(t, c) if a[i][j]]
        if not entries:
            break
        _, i0, j0 = min(entries)
        row_swap(t, i0)
        col_swap(t, j0)
        while True:
            for i in range(t + 1, r):
                if a[i][t]:
                    row_addmul(i, t, a[i][t] // a[t][t])
            for j in range(t + 1, c):
                if a[t][j]:
                    col_addmul(j, t, a[t][j] // a[t][t])
            leftovers = [(abs(a[i][t]), 0, i) for i in range(t + 1, r) if a[i][t]]
            leftovers += [(abs(a[t][j]), 1, j) for j in range(t + 1, c) if a[t][j]]
            if leftovers:
                _, axis, k = min(leftovers)
                if axis == 0:
                    row_swap(t, k)
                else:
                    col_swap(t, k)
                continue
            bad = next(
                (i for i in range(t + 1, r) for j in range(t + 1, c) if a[i][j] % a[t][t]),
                None,
            )
            if bad is not None:
                row_addmul(t, bad, -1)
                continue
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return _from_int_rows(a, r, c), _from_int_rows(u, r, r), _from_int_rows(v, c, c)


def invariant_factors(m: ImmutableMatrix) -> Tuple[int, ...]:
    """Nonzero diagonal entries of the Smith normal form."""
    s, _, _ = snf(m)
    return tuple(int(s[i, i]) for i in range(min(s.shape)) if s[i, i] != 0)


# ---------------------------------------------------------------------------
# Solvers
# ---------------------------------------------------------------------------

def solve_integer(a: ImmutableMatrix, b: ImmutableMatrix) -> Optional[ImmutableMatrix]:
    """
    Solve a*x = b over the integers through the Smith normal form of a.

    Args:
        a: Integer matrix
        b: Right-hand side column

    Returns:
        An integer solution x, or None when none exists
    """
    if b.rows != a.rows:
        raise ValueError("right-hand side has the wrong length")
    if not is_integral(b):
        return None
    s, u, v = snf(a)
    target = u * b
    y = [Integer(0)] * a.cols
    for i in range(a.rows):
        d = s[i, i] if i < a.cols else 0
        if d == 0:
            if target[i] != 0:
                return None
            continue
        if target[i] % d != 0:
            return None
        y[i] = target[i] / d
    return ImmutableMatrix(v * ImmutableMatrix(a.cols, 1, y))


def kernel_rational(a: ImmutableMatrix) -> ImmutableMatrix:
    """Columns form a basis of {x : a*x = 0} over Q; n x 0 when the kernel is zero."""
    n = a.cols
    if a.rows == 0:
        return identity(n)
    if n == 0:
        return zeros(0, 0)
    basis = a.as_mutable().nullspace()
    return from_columns(n, [ImmutableMatrix(v) for v in basis])


def primitive(v: ImmutableMatrix) -> ImmutableMatrix:
    """Scale a nonzero rational column to a primitive integer column."""
    scaled = v * common_denominator(v)
    g = reduce(gcd, (int(x) for x in scaled), 0)
    return scaled / g if g else scaled
