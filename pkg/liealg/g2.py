"""The 14-dimensional exceptional algebra inside so_7.

The realisation lives in 7x7 matrices over Q(sqrt 2); the sl_3 part is the
image of E_ij under E_ij - E_(7-j)(7-i), and the six remaining letters are the
K^3 + (K^3)^* block. The invariant form is half the trace form, which makes
the Casimir equal to the quadratic invariant Delta_2 used throughout.
"""
from fractions import Fraction

import sympy

from liealg.algebras import BasisLabel, LieAlgebraSpec

G2_LETTERS = ['e1', 'e2', 'e3', 'f1', 'f2', 'f3', 'h1', 'h2', 'a', 'b', 'c', 'alpha', 'beta', 'gamma']
SQRT2 = sympy.sqrt(2)


def _mat(*entries):
    out = {}
    for coeff, i, j in entries:
        out[(i - 1, j - 1)] = out.get((i - 1, j - 1), 0) + sympy.sympify(coeff)
    return {key: v for key, v in out.items() if v != 0}


def _iota(i, j):
    """Image of E_ij of gl_3 (i != j)."""
    return [(1, i, j), (-1, 7 - j, 7 - i)]


def g2_matrices():
    letters = {
        'e1': _iota(1, 2), 'e2': _iota(2, 3), 'e3': _iota(1, 3),
        'f1': _iota(2, 1), 'f2': _iota(3, 2), 'f3': _iota(3, 1),
        'h1': [(1, 1, 1), (-1, 2, 2), (1, 5, 5), (-1, 6, 6)],
        'h2': [(1, 1, 1), (1, 2, 2), (-2, 3, 3), (2, 4, 4), (-1, 5, 5), (-1, 6, 6)],
        'a': [(SQRT2, 1, 7), (-1, 4, 2), (1, 5, 3), (-SQRT2, 7, 6)],
        'b': [(SQRT2, 2, 7), (1, 4, 1), (-1, 6, 3), (-SQRT2, 7, 5)],
        'c': [(SQRT2, 3, 7), (-1, 5, 1), (1, 6, 2), (-SQRT2, 7, 4)],
        'alpha': [(1, 2, 4), (-1, 3, 5), (SQRT2, 6, 7), (-SQRT2, 7, 1)],
        'beta': [(-1, 1, 4), (1, 3, 6), (SQRT2, 5, 7), (-SQRT2, 7, 2)],
        'gamma': [(1, 1, 5), (-1, 2, 6), (SQRT2, 4, 7), (-SQRT2, 7, 3)],
    }
    return [_mat(*letters[name]) for name in G2_LETTERS]


def build_g2():
    basis = [BasisLabel('g2', letter=name) for name in G2_LETTERS]
    cartan = [G2_LETTERS.index('h1'), G2_LETTERS.index('h2')]
    return LieAlgebraSpec('g2', basis, g2_matrices(), 7, cartan, form_scale=Fraction(1, 2),
                          family='g2', rank_n=None)


def project(spec, matrix):
    """Trace-orthogonal projection of a 7x7 matrix onto g2, as exact sympy coefficients."""
    out = {}
    for a, dual in enumerate(spec.duals):
        value = sympy.expand(sum((v * matrix.get((c, r), 0) for (r, c), v in dual.items()), sympy.Integer(0)))
        if value != 0:
            out[a] = value
    return out


def so7_element(i, j):
    """F_ij = E_ij - E_j'i' with the pairing i' = 7 - i (i <= 6), 7' = 7."""
    prime = lambda s: 7 if s == 7 else 7 - s
    return _mat((1, i, j), (-1, prime(j), prime(i)))
