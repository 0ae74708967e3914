"""Exact linear algebra over Q, delegated to sympy matrices.

Matrices travel through the kernel as lists of rows of ``Fraction``; these
helpers convert at the boundary so that hot loops never touch sympy objects.
"""
from fractions import Fraction

import sympy


def to_rational(value):
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    return sympy.nsimplify(value) if isinstance(value, float) else sympy.sympify(value)


def to_fraction(value):
    value = sympy.sympify(value)
    if not isinstance(value, sympy.Rational):
        value = sympy.expand(value)
    if not value.is_Rational:
        raise ArithmeticError("Non-rational value: {}".format(value))
    return Fraction(int(value.p), int(value.q))


def to_matrix(rows, n_cols=None):
    if not rows:
        return sympy.zeros(0, n_cols or 0)
    return sympy.Matrix([[to_rational(x) for x in row] for row in rows])


def from_matrix(matrix):
    return [[to_fraction(matrix[i, j]) for j in range(matrix.cols)] for i in range(matrix.rows)]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(n_rows, n_cols):
    return [[Fraction(0)] * n_cols for _ in range(n_rows)]


def transpose(rows):
    return [list(col) for col in zip(*rows)]


def matmul(a, b):
    b_t = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in b_t] for row in a]


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def trace(a):
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def invert(rows):
    matrix = to_matrix(rows)
    if matrix.det() == 0:
        raise ZeroDivisionError("Singular matrix of size {}".format(matrix.rows))
    return from_matrix(matrix.inv())


def rank(rows, n_cols=None):
    if not rows:
        return 0
    return to_matrix(rows, n_cols).rank()


def nullspace(rows):
    """Basis of the right kernel as a list of Fraction vectors."""
    return [[to_fraction(x) for x in vec] for vec in to_matrix(rows).nullspace()]


def solve(rows, rhs):
    """Solves ``rows * x = rhs`` exactly; returns None when inconsistent.

    Underdetermined systems return the solution with free parameters set to 0.
    """
    a = to_matrix(rows)
    b = sympy.Matrix([to_rational(x) for x in rhs])
    try:
        sol, params = a.gauss_jordan_solve(b)
    except ValueError:
        return None
    if params.shape[0]:
        sol = sol.subs({p: 0 for p in params})
    return [to_fraction(x) for x in sol]


def independent_rows(rows):
    """Indices of a maximal linearly independent subset of ``rows``, greedy in order."""
    if not rows:
        return []
    _, pivots = to_matrix(rows).T.rref()
    return list(pivots)


def same_span(vectors_a, vectors_b):
    """True when two families of coordinate vectors span the same space."""
    r_a = rank(vectors_a)
    r_b = rank(vectors_b)
    return r_a == r_b == rank(list(vectors_a) + list(vectors_b))
