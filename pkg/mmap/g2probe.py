"""Spot checks of m_3 on the G2 invariants at the weight-(3 pi_1) cofactors e3^2 f1 and e3^2 f3."""
from fractions import Fraction

from invariants.g2inv import B_CONSTANT, g2_invariants
from liealg.algebras import get_algebra
from mmap.lift import identify_scalar
from mmap.matpoly import apply_matrix, m3_coefficient, sparse_ad_elem, sparse_add, sparse_matmul
from sympoly.poly import LoopVar
from uea.pbw import NCPoly, get_enveloping


def casimir_constant(spec):
    """(c1, eigenvalue): sum_a x_a [xi, x^a] = c1 xi in U(g), and the Casimir acting on g.

    c1 is read off at every basis vector xi and must agree across them; the
    Casimir must act on the adjoint module as a scalar.
    """
    engine = get_enveloping(spec)
    c1 = None
    for xi in range(spec.dim):
        total = NCPoly()
        for a, b, c in spec.casimir_terms():
            comm = spec.bracket_elems({xi: Fraction(1)}, {b: Fraction(1)})
            if comm:
                total = total + engine.lmul(LoopVar(0, 0, a), engine.from_linear(comm)).scale(c)
        value = identify_scalar(total, NCPoly.generator(LoopVar(0, 0, xi)))
        if c1 is None:
            c1 = value
        assert c1 == value, 'Casimir constant differs at basis vector {}'.format(spec.labels[xi])

    action = {}
    for a, b, c in spec.casimir_terms():
        action = sparse_add(action, sparse_matmul(sparse_ad_elem(spec, {a: 1}), sparse_ad_elem(spec, {b: 1})), c)
    eigenvalue = action.get((0, 0), Fraction(0))
    assert action == {(i, i): eigenvalue for i in range(spec.dim)}, 'Casimir is not scalar on the adjoint module'
    return c1, eigenvalue


def _letter(spec, name):
    return spec.index_of('g2:{}'.format(name))


def _cofactor(spec, names):
    return [LoopVar(0, 0, _letter(spec, name)) for name in names]


def _render(spec, vec):
    return {spec.labels[a]: str(v) for a, v in sorted(vec.items())}


def _scaled(vec, c):
    return {a: c * v for a, v in vec.items() if c * v}


def g2_probe_suite():
    """Evaluates the coefficient matrices of m_3(Delta_2^3) and m_3(Delta_6) at e3, a and h3.

    Returns:
        list of dicts {check, expected, actual, ok}
    """
    spec = get_algebra('g2')
    delta2, delta6 = g2_invariants()
    delta2_cubed = delta2 ** 3
    e3, f2, f3, a = (_letter(spec, name) for name in ('e3', 'f2', 'f3', 'a'))
    h3 = spec.bracket_elems({e3: Fraction(1)}, {f3: Fraction(1)})
    ad_f3 = sparse_ad_elem(spec, {f3: Fraction(1)})

    at_f1 = _cofactor(spec, ['e3', 'e3', 'f1'])
    at_f3 = _cofactor(spec, ['e3', 'e3', 'f3'])
    xi = m3_coefficient(spec, delta2_cubed, at_f1)
    eta = m3_coefficient(spec, delta2_cubed, at_f3)
    xi_t = m3_coefficient(spec, delta6, at_f1)
    eta_t = m3_coefficient(spec, delta6, at_f3)
    combined = sparse_add(eta_t, eta, -B_CONSTANT)

    e3_vec, a_vec = {e3: Fraction(1)}, {a: Fraction(1)}
    checks = [
        ('xi(e3)', apply_matrix(xi, e3_vec), _scaled({f2: Fraction(1)}, Fraction(6, 5))),
        ('eta(e3)', apply_matrix(eta, e3_vec), _scaled(apply_matrix(ad_f3, e3_vec), Fraction(48, 5))),
        ('eta(a)', apply_matrix(eta, a_vec), _scaled(apply_matrix(ad_f3, a_vec), Fraction(42, 5))),
        ('xi~(e3)', apply_matrix(xi_t, e3_vec), _scaled({f2: Fraction(1)}, Fraction(5, 18))),
        ('eta~(a)', apply_matrix(eta_t, a_vec), _scaled(apply_matrix(ad_f3, a_vec), Fraction(-2, 9))),
        ('eta~(h3)', apply_matrix(eta_t, h3), _scaled(apply_matrix(ad_f3, h3), Fraction(1, 18))),
        ('(eta~ - b eta)(a)', apply_matrix(combined, a_vec),
         _scaled(apply_matrix(ad_f3, a_vec), Fraction(-13, 6))),
        ('(eta~ - b eta)(h3)', apply_matrix(combined, h3),
         _scaled(apply_matrix(ad_f3, h3), Fraction(-13, 6))),
    ]
    return [{'check': name, 'expected': _render(spec, expected), 'actual': _render(spec, actual),
             'ok': actual == expected} for name, actual, expected in checks]
