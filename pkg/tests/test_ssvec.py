import json
from fractions import Fraction

import pytest

from invariants.classical import delta_sl, pfaffian
from invariants.g2inv import g2_Htilde
from liealg.algebras import get_algebra
from mmap.lift import G2_CONSTANTS
from ssvec.comlab import (bracket_lands_in, c_constants_probe, example_quartic, fit_positions, half_bracket,
                          m_sym_symbol, normalise_alpha, orbit_size, p_fs_check, position_columns, position_keys,
                          remainder, universal_check, w_element, x_decomposition)
from ssvec.vectors import (SSCandidate, central_report, complete_set, get_candidate, ss_g2, ss_generic, ss_pfaffian,
                           ss_typeA, ss_typeBD, ss_typeC, verify_central, verify_complete_set)
from tests.utils import gen, letter, random_linear
from uea.pbw import NCPoly, get_enveloping
from uea.symmetrise import symmetrize


# ---------------------------------------------------------------------------
# centrality

@pytest.mark.parametrize('n, k', [(2, 2), (3, 2), (3, 3)])
def test_type_a_is_central(n, k):
    assert not verify_central(ss_typeA(n, k))


@pytest.mark.slow
@pytest.mark.parametrize('n, k', [(4, 2), (4, 3), (4, 4)])
def test_type_a_rank_three_is_central(n, k):
    assert not verify_central(ss_typeA(n, k))


def test_type_c_is_central():
    assert not verify_central(ss_typeC(4, 1))


@pytest.mark.slow
@pytest.mark.parametrize('two_n, k', [(4, 2), (6, 2), (6, 3)])
def test_type_c_higher_is_central(two_n, k):
    assert not verify_central(ss_typeC(two_n, k))


def test_type_b_quadratic_is_central():
    assert not verify_central(ss_typeBD(7, 1))


@pytest.mark.slow
@pytest.mark.parametrize('n, k', [(7, 2), (8, 1), (8, 2)])
def test_types_bd_are_central(n, k):
    assert not verify_central(ss_typeBD(n, k))


@pytest.mark.slow
def test_pfaffian_vector_is_central():
    candidate = ss_pfaffian(8)
    assert len(candidate.value) == 105
    assert not verify_central(candidate)


@pytest.mark.slow
def test_generic_assembly_of_the_pfaffian():
    candidate = ss_generic(get_algebra('so_skew', 8), pfaffian(8), 'Pf')
    assert candidate.value == ss_pfaffian(8).value
    assert not verify_central(candidate)


@pytest.mark.slow
def test_g2_vector():
    candidate = ss_g2()
    assert G2_CONSTANTS['b'] == Fraction(25, 108)
    assert G2_CONSTANTS['R1'] == Fraction(-65, 4)
    assert G2_CONSTANTS['R2'] == Fraction(-325, 3)
    assert G2_CONSTANTS['R1'] == 15 * G2_CONSTANTS['m_Htilde']
    assert G2_CONSTANTS['R2'] == 15 * G2_CONSTANTS['m_Htilde'] * G2_CONSTANTS['m_Delta2_sq']
    assert candidate.symbol() == g2_Htilde()
    assert not verify_central(candidate)


def test_parallel_verification_agrees():
    candidate = ss_typeA(3, 3)
    assert verify_central(candidate, jobs=2) == verify_central(candidate)


def test_non_central_remainder_is_reported(sl2):
    assert central_report(ss_typeA(2, 2))['central']
    broken = SSCandidate(sl2, gen(sl2, 'H[1]', -1), {'name': 'h', 'family': 'A', 'n': 2, 'k': 1})
    report = central_report(broken)
    assert not report['central']
    assert report['remainder_terms'] > 0


# ---------------------------------------------------------------------------
# construction

def test_type_a_forms_coincide():
    for k in (2, 3):
        intro, ssym = ss_typeA(3, k, 'intro'), ss_typeA(3, k, 'ssym')
        assert intro.value == ssym.value
        assert intro.meta['terms'] == ssym.meta['terms']


def test_generic_construction_matches_type_a():
    spec = get_algebra('sl', 4)
    assert ss_generic(spec, delta_sl(4, 4)).value == ss_typeA(4, 4).value


def test_symbol_and_omega():
    for k in (2, 3):
        candidate = ss_typeA(3, k)
        assert candidate.symbol() == delta_sl(3, k)
        assert candidate.degree() == k
        assert candidate.is_omega_eigen()


def test_invalid_grids():
    with pytest.raises(ValueError):
        ss_typeA(1, 2)
    with pytest.raises(ValueError):
        ss_typeA(3, 4)
    with pytest.raises(AssertionError):
        ss_typeA(3, 3, 'other')
    with pytest.raises(ValueError):
        ss_typeC(5, 1)
    with pytest.raises(ValueError):
        ss_typeBD(8, 4)
    with pytest.raises(ValueError):
        get_candidate('A', None, 2)
    with pytest.raises(AssertionError):
        get_candidate('E')


def test_json_round_trip():
    candidate = ss_typeA(3, 3)
    loaded = SSCandidate.from_json(candidate.to_json())
    assert loaded.spec is candidate.spec
    assert loaded.value == candidate.value
    assert loaded.meta == json.loads(json.dumps(candidate.meta))


def test_complete_sets():
    assert verify_complete_set(complete_set('A', 3))
    assert not verify_complete_set([ss_typeA(3, 2), ss_typeA(3, 2)])
    with pytest.raises(ValueError):
        verify_complete_set([ss_typeA(3, 2), ss_typeC(4, 1)])
    with pytest.raises(ValueError):
        verify_complete_set([ss_typeA(3, 2)])
    with pytest.raises(ValueError):
        verify_complete_set([])
    with pytest.raises(ValueError):
        complete_set('BD', 8)


# ---------------------------------------------------------------------------
# commutator pieces

def test_cubic_remainder_vanishes(sl3):
    assert not x_decomposition(sl3, delta_sl(3, 3), [-1, -1, -1])
    with pytest.raises(ValueError):
        x_decomposition(sl3, delta_sl(3, 3), [-1, -1, 0])


def test_quartic_symbol_has_the_predicted_shape(sl2):
    F = delta_sl(2, 2) ** 2
    report = m_sym_symbol(sl2, F)
    assert report.symbol
    assert report.scale != 0
    assert report.symbol == report.predicted * report.scale


def test_position_keys():
    keys = position_keys(4)
    assert len(keys) == 6
    assert keys[0] == ('23', 1, 2) and keys[-1] == ('32', 2, 3)


def test_position_columns_reproduce_the_remainder(sl2):
    factors = [letter(sl2, 'E[1,2]', -1), letter(sl2, 'E[2,1]', -2), letter(sl2, 'H[1]', -3),
               letter(sl2, 'E[1,2]', -4)]
    fit = fit_positions(sl2, [factors])
    assert fit.solution is not None
    X = remainder(sl2, factors)
    columns = position_columns(sl2, factors)
    rebuilt = sum((columns[key].scale(c) for key, c in fit.solution.items()), NCPoly())
    assert rebuilt == X
    assert X.filtration_degree() <= 3


def test_position_constants():
    report = c_constants_probe(4)
    assert report['matches']
    assert report['rank'] == report['unknowns'] == 6
    assert report['c23'] == {(1, 2): Fraction(-1, 60), (1, 3): Fraction(-1, 40), (2, 3): 0}
    assert report['c32'] == {(1, 2): 0, (1, 3): Fraction(-1, 40), (2, 3): Fraction(-1, 60)}
    assert report['total'] < 0
    with pytest.raises(ValueError):
        c_constants_probe(3)


@pytest.mark.slow
def test_position_constants_degree_five():
    report = c_constants_probe(5)
    assert report['matches']
    c = report['c23']
    assert c[(1, 2)] == Fraction(-3, 720) and c[(2, 3)] == Fraction(-1, 720)
    assert c[(3, 4)] == 0


@pytest.mark.slow
def test_position_constants_degree_six():
    report = c_constants_probe(6)
    assert report['matches']
    listed = {(1, 2): 4, (1, 3): 7, (1, 4): 9, (1, 5): 10, (2, 3): 2, (2, 4): 3}
    for (j, p), value in report['c23'].items():
        assert -value == Fraction(listed.get((j, p), 0), 5040)
    for (j, p), value in report['c32'].items():
        assert value == report['c23'][(6 - p, 6 - j)]


def test_normalise_alpha():
    assert normalise_alpha([-1, -1, -2]) == ((-1, 2), (-2, 1))
    assert normalise_alpha([(-3, 1), (-1, 2)]) == ((-3, 1), (-1, 2))
    with pytest.raises(ValueError):
        normalise_alpha([0, -1])
    with pytest.raises(ValueError):
        normalise_alpha([(-1, 1), (-1, 2)])


def test_w_elements_with_two_blocks_vanish(sl2):
    w = w_element(sl2, delta_sl(2, 2), [(-1, 2), (-2, 1)], (0, 1))
    assert not w.value


def test_w_elements_satisfy_universal_relations(sl3):
    F = delta_sl(3, 3)
    alpha = [(-1, 2), (-2, 1), (-3, 1)]
    assert universal_check(sl3, F, alpha)
    forward = w_element(sl3, F, alpha, (0, 1)).value
    backward = w_element(sl3, F, alpha, (1, 0)).value
    assert forward == -backward


def test_universal_relations_on_random_multisets(sl2, rng, samples):
    for _ in range(samples):
        k = int(rng.integers(1, 3))
        F = delta_sl(2, 2) ** k * int(rng.integers(1, 5))
        s = int(rng.integers(2, 4))
        cuts = sorted(int(c) for c in rng.choice(range(1, 2 * k + 1), size=s - 1, replace=False))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [2 * k + 1])]
        degrees = [-int(d) for d in rng.choice(range(1, 6), size=s, replace=False)]
        alpha = list(zip(degrees, sizes))
        assert universal_check(sl2, F, alpha)
        w = w_element(sl2, F, alpha, (0, 1)).value
        assert w == -w_element(sl2, F, alpha, (1, 0)).value


def test_w_element_validation(sl2):
    with pytest.raises(ValueError):
        w_element(sl2, delta_sl(2, 2), [(-1, 2), (-2, 1)], (0, 0))
    with pytest.raises(ValueError):
        w_element(sl2, delta_sl(2, 2), [(-1, 1), (-2, 1)], (0, 1))


def test_half_bracket_cancels_on_the_diagonal(sl3, rng):
    for _ in range(5):
        y = random_linear(sl3, rng, -1)
        assert not half_bracket(sl3, y, -2, -1)


def test_half_bracket_splits_into_w_elements(sl2):
    lhs, rhs = p_fs_check(sl2, delta_sl(2, 2), [-1, -2], -1, -1)
    assert lhs == rhs


def test_orbit_size():
    assert orbit_size([-1, -1, -2]) == 3
    assert orbit_size([-1, -2, -3]) == 6


def test_bracket_lands_in_three_degrees(sl3):
    assert bracket_lands_in(sl3, delta_sl(3, 3))


def test_example_quartic(sl2):
    F = delta_sl(2, 2) ** 2
    B = example_quartic(sl2, F)
    assert B == Fraction(-5, 6)
    engine = get_enveloping(sl2)
    corrected = symmetrize(sl2, F.shift(-1)) + engine.casimir_loop(-2, -2).scale(B)
    assert not engine.commutator(engine.casimir_loop(-1, -1), corrected)
    assert engine.commutator(engine.casimir_loop(-1, -1), symmetrize(sl2, F.shift(-1)))
