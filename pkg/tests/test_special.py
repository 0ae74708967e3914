from fractions import Fraction

import pytest

from invariants.classical import delta_sl, delta_sp
from liealg.algebras import get_algebra
from special.gaudin import (check_points, commutativity_report, diagonal, gaudin_experiment, gaudin_quadratic,
                            gaudin_rho, two_point_generators, two_point_span_check)
from special.shifts import (casimir_word_identities, centralizer_dimension, diagonal_shift, g2_qmf, is_regular,
                            mf_span_check, qmf_generators, rho_mu_u, shift_values)
from ssvec.vectors import complete_set, ss_typeA
from sympoly.poly import LoopVar
from tests.utils import gen, random_word
from uea.pbw import NCPoly, get_enveloping

ZBAR = (1, 2, 4)


def test_check_points():
    assert check_points([1, '1/2']) == [Fraction(1), Fraction(1, 2)]
    for zbar in ([], [0, 1], [2, 2]):
        with pytest.raises(ValueError):
            check_points(zbar)


def test_gaudin_rho_on_a_generator(sl2):
    h = sl2.index_of('H[1]')
    image = gaudin_rho(sl2, gen(sl2, 'H[1]', -2), (2, 3))
    expected = NCPoly.generator(LoopVar(0, 1, h)).scale(Fraction(1, 4)) + \
        NCPoly.generator(LoopVar(0, 2, h)).scale(Fraction(1, 9))
    assert image == expected
    with pytest.raises(ValueError):
        gaudin_rho(sl2, gen(sl2, 'H[1]', 0), (2, 3))


def test_gaudin_rho_is_multiplicative(sl2, rng):
    engine = get_enveloping(sl2)
    for _ in range(5):
        a = engine.normal_order(random_word(sl2, rng, 2))
        b = engine.normal_order(random_word(sl2, rng, 1))
        left = gaudin_rho(sl2, engine.mul(a, b), ZBAR)
        right = engine.mul(gaudin_rho(sl2, a, ZBAR), gaudin_rho(sl2, b, ZBAR))
        assert left == right


def test_gaudin_quadratics(sl2):
    quadratics = [gaudin_quadratic(sl2, k, ZBAR) for k in range(1, 4)]
    assert commutativity_report(sl2, quadratics)['failures'] == 0
    assert not sum(quadratics, NCPoly())
    engine = get_enveloping(sl2)
    for a in range(sl2.dim):
        total = diagonal(sl2, {a: 1}, len(ZBAR))
        assert all(not engine.commutator(total, h) for h in quadratics)
    with pytest.raises(ValueError):
        gaudin_quadratic(sl2, 4, ZBAR)


@pytest.mark.slow
def test_gaudin_images_commute(sl3):
    images = [gaudin_rho(sl3, c.value, ZBAR) for c in complete_set('A', 3)]
    report = commutativity_report(sl3, images)
    assert report == {'pairs_checked': 1, 'failures': 0, 'failed_pairs': []}


def test_gaudin_experiment_rows(sl2):
    rows = gaudin_experiment(sl2, [ss_typeA(2, 2)], ZBAR)
    assert len(rows) == 1
    assert rows[0]['sites'] == 3
    assert rows[0]['failures'] == []


def test_two_point_algebra(sl2):
    H_list = [delta_sl(2, 2)]
    generators = two_point_generators(sl2, H_list)
    assert len(generators) == 3
    assert commutativity_report(sl2, generators)['failures'] == 0
    assert two_point_span_check(sl2, complete_set('A', 2), H_list)


def test_shift_values(sl3):
    with pytest.raises(ValueError):
        shift_values(sl3, [1, 2])
    with pytest.raises(ValueError):
        diagonal_shift(sl3, [1, 2])
    assert shift_values(sl3, {0: 0, 1: '1/2'}) == {1: Fraction(1, 2)}


def test_regular_shifts(sl3):
    assert is_regular(sl3, diagonal_shift(sl3, [1, 2, -3]))
    assert not is_regular(sl3, diagonal_shift(sl3, [1, 1, -2]))
    assert centralizer_dimension(sl3, diagonal_shift(sl3, [1, 1, -2])) == 4


def test_quantum_mf_generators_commute(sl3):
    mu = diagonal_shift(sl3, [1, 2, -3])
    generators = qmf_generators(sl3, mu, [delta_sl(3, 2), delta_sl(3, 3)])
    assert len(generators) == 5
    assert commutativity_report(sl3, generators)['failures'] == 0


def test_shift_map_spans(sl2):
    mu = diagonal_shift(sl2, [1, -1])
    assert mf_span_check(sl2, delta_sl(2, 2), [-1, -1], mu)
    assert mf_span_check(sl2, delta_sl(2, 2), [-1, -2], mu)
    with pytest.raises(ValueError):
        rho_mu_u(sl2, gen(sl2, 'H[1]', -1), mu, 0)


def test_shift_of_a_generator(sl2):
    mu = diagonal_shift(sl2, [1, -1])
    h = sl2.index_of('H[1]')
    image = rho_mu_u(sl2, gen(sl2, 'H[1]', -1), mu, 2)
    expected = NCPoly.generator(LoopVar(0, 0, h)).scale(Fraction(1, 2)) + NCPoly.one(mu[h])
    assert image == expected


def test_casimir_word_identities(sl2):
    nested, crossed = casimir_word_identities(sl2)
    assert not nested
    assert not crossed


@pytest.mark.slow
def test_g2_shift_algebra():
    spec = get_algebra('g2')
    for c0, c1 in ((1, 3), (2, 5), (1, 7)):
        h = {spec.cartan[0]: c0, spec.cartan[1]: c1}
        mu = {a: sum(spec.form[a][b] * v for b, v in h.items()) for a in range(spec.dim)}
        if is_regular(spec, mu):
            break
    result = g2_qmf(mu)
    assert result['centralizer_dim'] == 2
    assert len(result['generators']) == 8
    assert not result['failures']
    assert all(result['y_parts'].values())


@pytest.mark.slow
def test_gaudin_images_commute_with_quadratics(sl3):
    rows = gaudin_experiment(sl3, complete_set('A', 3), ZBAR)
    assert [row['failures'] for row in rows] == [[], []]


@pytest.mark.slow
def test_two_point_algebra_sl3(sl3):
    generators = two_point_generators(sl3, [delta_sl(3, 2), delta_sl(3, 3)])
    assert len(generators) == 7
    assert commutativity_report(sl3, generators)['failures'] == 0


@pytest.mark.slow
def test_quantum_mf_generators_sp4():
    spec = get_algebra('sp', 4)
    for entries in ((1, 2, -2, -1), (1, 2, -1, -2), (1, 3, -3, -1), (1, 3, -1, -3)):
        mu = diagonal_shift(spec, entries)
        if is_regular(spec, mu):
            break
    assert is_regular(spec, mu)
    generators = qmf_generators(spec, mu, [delta_sp(4, 1), delta_sp(4, 2)])
    assert len(generators) == 6
    assert commutativity_report(spec, generators)['failures'] == 0


@pytest.mark.slow
def test_shifted_images_of_central_vectors_commute(sl3):
    mu = diagonal_shift(sl3, [1, 2, -3])
    quadratic, cubic = complete_set('A', 3)
    images = [rho_mu_u(sl3, S.value, mu, u) for S in (quadratic, cubic) for u in (1, 2)]
    assert all(images)
    assert commutativity_report(sl3, images)['failures'] == 0
