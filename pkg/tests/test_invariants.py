from fractions import Fraction

import pytest

from invariants.classical import (delta_gl, delta_gl_from_sl, delta_sl, delta_sp, get_invariant, pfaffian, phi_so,
                                  skew_determinant, weyl_involution_poly)
from invariants.g2inv import B_CONSTANT, g2_Htilde, g2_invariants
from invariants.independence import independence_check
from liealg.algebras import get_algebra
from liealg.g2 import G2_LETTERS
from sympoly.brackets import casimir_poly, is_invariant
from sympoly.poly import CommPoly, LoopVar


def test_sl2_delta_is_a_multiple_of_casimir(sl2):
    assert casimir_poly(sl2) == delta_sl(2, 2) * -2


def test_traceless_linear_invariant_vanishes():
    assert not delta_sl(3, 1)
    assert not delta_sl(4, 1)


@pytest.mark.parametrize('family, n, build', [
    ('sl', 3, lambda: delta_sl(3, 3)),
    ('sl', 4, lambda: delta_sl(4, 4)),
    ('sp', 4, lambda: delta_sp(4, 1)),
    ('sp', 4, lambda: delta_sp(4, 2)),
    ('so', 5, lambda: phi_so(5, 1)),
    ('so', 5, lambda: phi_so(5, 2)),
    ('so_skew', 4, lambda: pfaffian(4)),
])
def test_invariance(family, n, build):
    assert is_invariant(get_algebra(family, n), build())


def test_degrees():
    assert delta_sl(4, 3).degree() == 3
    assert delta_sp(6, 3).degree() == 6
    assert phi_so(7, 2).degree() == 4
    assert pfaffian(6).degree() == 3


def test_pfaffian_squares_to_determinant():
    assert pfaffian(4) ** 2 == skew_determinant(4)


def test_pfaffian_term_count():
    assert len(pfaffian(8)) == 105


def test_reconstruction_from_traceless_part():
    for k in (1, 2, 3):
        assert delta_gl_from_sl(3, k) == delta_gl(3, k)


def test_weyl_involution_fixes_delta_gl():
    for k in (1, 2, 3):
        assert weyl_involution_poly(3, delta_gl(3, k)) == delta_gl(3, k) * (-1) ** k


def test_invalid_degrees():
    with pytest.raises(ValueError):
        delta_sl(3, 4)
    with pytest.raises(ValueError):
        delta_sp(4, 3)
    with pytest.raises(ValueError):
        pfaffian(5)
    with pytest.raises(AssertionError):
        get_invariant('Theta', 3, 2)


def test_get_invariant():
    spec, f = get_invariant('DeltaTilde', 3, 2)
    assert spec is get_algebra('sl', 3)
    assert f == delta_sl(3, 2)


def test_independence_check(sl3):
    d2, d3 = delta_sl(3, 2), delta_sl(3, 3)
    assert independence_check([d2, d3])
    assert not independence_check([d2, d2 ** 2 * Fraction(3)])
    assert independence_check([])


@pytest.mark.slow
def test_g2_invariants():
    spec = get_algebra('g2')
    delta2, delta6 = g2_invariants()
    assert delta2.degree() == 2 and delta6.degree() == 6
    assert is_invariant(spec, delta6)
    assert g2_Htilde() == delta6 - delta2 ** 3 * B_CONSTANT
    assert B_CONSTANT == Fraction(25, 108)
    assert independence_check([delta2, g2_Htilde()])


@pytest.mark.slow
def test_g2_invariant_terms():
    spec = get_algebra('g2')
    delta2, delta6 = g2_invariants()
    v = {name: LoopVar(0, 0, spec.index_of('g2:{}'.format(name))) for name in G2_LETTERS}
    assert delta2.coefficient([v['a'], v['alpha']]) == Fraction(-2, 3)
    assert delta2.coefficient([v['e1'], v['f1']]) == 2
    assert delta2.coefficient([v['h1'], v['h1']]) == Fraction(1, 2)
    assert delta6.coefficient([v['c']] * 3 + [v['e3']] * 2 + [v['f1']]) == Fraction(-4, 27)


@pytest.mark.slow
def test_g2_sextic_on_sl3():
    spec, sl3 = get_algebra('g2'), get_algebra('sl', 3)
    _, delta6 = g2_invariants()

    def image(label):
        return CommPoly.var(LoopVar(0, 0, sl3.index_of(label)))

    targets = {'e1': image('E[1,2]'), 'e2': image('E[2,3]'), 'e3': image('E[1,3]'),
               'f1': image('E[2,1]'), 'f2': image('E[3,2]'), 'f3': image('E[3,1]'),
               'h1': image('H[1]'), 'h2': image('H[1]') + image('H[2]') * 2}
    images = {LoopVar(0, 0, spec.index_of('g2:{}'.format(name))): targets.get(name, CommPoly())
              for name in G2_LETTERS}
    assert delta6.substitute(images) == -(delta_sl(3, 3) ** 2)
