from fractions import Fraction

from liealg import linalg
from liealg.algebras import get_algebra
from liealg.g2 import SQRT2, project, so7_element
from invariants.classical import MinorExpander
from sympoly.brackets import casimir_poly
from sympoly.poly import CommPoly

B_CONSTANT = Fraction(25, 108)


def _rational_entry(spec):
    """(i, j) -> pr(F_ij) with the sqrt(2) bookkeeping folded in.

    Entries of the last row and column are sqrt(2) times a rational element.
    Every surviving term of a principal minor through index 7 holds exactly one
    entry of row 7 and one of column 7, so the row-7 entry absorbs the factor 2
    and both are stored without sqrt(2).
    """

    def entry(i, j):
        coords = project(spec, so7_element(i, j))
        if i == 7 or j == 7:
            coords = {a: v / SQRT2 for a, v in coords.items()}
        out = {a: linalg.to_fraction(v) for a, v in coords.items()}
        if i == 7:
            out = {a: 2 * v for a, v in out.items()}
        return CommPoly.linear(out)

    return entry


def g2_invariants():
    """(Delta_2, Delta_6): the Casimir, and Delta_6 of gl_7 restricted through so_7."""
    spec = get_algebra('g2')
    if 'invariants' not in spec.cache:
        delta2 = casimir_poly(spec)
        delta6 = MinorExpander(_rational_entry(spec)).principal_sum(7, 6)
        spec.cache['invariants'] = (delta2, delta6)
    return spec.cache['invariants']


def g2_Htilde(b=B_CONSTANT):
    delta2, delta6 = g2_invariants()
    return delta6 - (delta2 ** 3) * b


def projection_of(i, j):
    """pr(F_ij) as sympy coordinates, for inspection and tests."""
    return project(get_algebra('g2'), so7_element(i, j))
