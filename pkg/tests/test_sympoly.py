from fractions import Fraction

import pytest

from invariants.classical import delta_sl
from sympoly.brackets import (bi_degree_components, casimir_poly, directional_derivative, graded_scalar_product,
                              is_invariant, lie_action, poisson_bracket, polarize)
from sympoly.poly import CommPoly, LoopVar
from tests.utils import letter, random_linear


def test_arithmetic(sl2):
    e, f, h = (CommPoly.var(letter(sl2, x)) for x in ('E[1,2]', 'E[2,1]', 'H[1]'))
    p = e * f + h ** 2 * Fraction(1, 2)
    assert (p + e) - e == p
    assert p * 0 == CommPoly()
    assert (e + f) ** 2 == e ** 2 + e * f * 2 + f ** 2
    assert p.degree() == 2 and p.is_homogeneous()
    assert p.diff(letter(sl2, 'H[1]')) == h
    assert (p + 1).degrees() == {0, 2}


def test_shift_and_evaluate(sl2):
    h = letter(sl2, 'H[1]')
    p = CommPoly.var(h) ** 3
    shifted = p.shift(-2)
    assert shifted.variables() == [h.at(-2)]
    assert shifted.tdegree() == -6
    assert shifted.strip_grading() == p
    assert p.evaluate({h: Fraction(2)}) == 8


def test_json_round_trip(sl3):
    f = delta_sl(3, 3).shift(-1)
    assert CommPoly.from_json(f.to_json(sl3), sl3) == f


def test_poisson_bracket_is_antisymmetric(sl3, rng, samples):
    for _ in range(samples):
        x = random_linear(sl3, rng, -1)
        y = random_linear(sl3, rng, -2) * random_linear(sl3, rng, -1)
        assert poisson_bracket(x, y, sl3) == -poisson_bracket(y, x, sl3)


def test_invariants_at_minus_one_poisson_commute(sl3, rng, samples):
    pieces = [delta_sl(3, 2).shift(-1), delta_sl(3, 3).shift(-1), (delta_sl(3, 2) ** 2).shift(-1)]
    for _ in range(samples):
        F, G = (sum((p * int(c) for p, c in zip(pieces, rng.integers(-3, 4, size=3))), CommPoly())
                for _ in range(2))
        assert not poisson_bracket(F, G, sl3)
    x = random_linear(sl3, rng, -1)
    assert poisson_bracket(pieces[0], x, sl3)


def test_poisson_bracket_on_generators(sl2):
    e, f = letter(sl2, 'E[1,2]', -1), letter(sl2, 'E[2,1]', -2)
    bracket = poisson_bracket(CommPoly.var(e), CommPoly.var(f), sl2)
    assert bracket == CommPoly.var(letter(sl2, 'H[1]', -3))


def test_different_components_commute(sl2):
    e, f = letter(sl2, 'E[1,2]', 0, 1), letter(sl2, 'E[2,1]', 0, 2)
    assert not poisson_bracket(CommPoly.var(e), CommPoly.var(f), sl2)


def test_casimir_and_deltas_are_invariant(sl2, sl3):
    assert is_invariant(sl2, casimir_poly(sl2))
    assert is_invariant(sl3, delta_sl(3, 2))
    assert is_invariant(sl3, delta_sl(3, 3))
    assert not is_invariant(sl2, CommPoly.var(letter(sl2, 'H[1]')) ** 2)
    assert not lie_action(sl2, {0: 1}, CommPoly.var(letter(sl2, 'E[1,2]')))


def test_polarize_equal_degrees_is_shift(sl3):
    f = delta_sl(3, 3)
    assert polarize(f, [-1, -1, -1]) == f.shift(-1)


def test_polarize_averages_arrangements(sl2):
    e, f, h = (letter(sl2, x) for x in ('E[1,2]', 'E[2,1]', 'H[1]'))
    square = CommPoly.var(h) ** 2
    assert polarize(square, [-1, -2]) == CommPoly.monomial([h.at(-1), h.at(-2)])
    product = CommPoly.monomial([e, f])
    expected = (CommPoly.monomial([e.at(-1), f.at(-3)]) + CommPoly.monomial([e.at(-3), f.at(-1)])) * Fraction(1, 2)
    assert polarize(product, [-1, -3]) == expected
    with pytest.raises(ValueError):
        polarize(square, [-1])


def test_bi_degree_components(sl2):
    H = casimir_poly(sl2)
    parts = bi_degree_components(H)
    assert len(parts) == 3
    assert parts[0] == casimir_poly(sl2, component=1)
    assert parts[2] == casimir_poly(sl2, component=2)
    mixed = bi_degree_components(H, 'symmetric')
    assert sum(mixed, CommPoly()) == casimir_poly(sl2, component=1) * 4
    with pytest.raises(ValueError):
        bi_degree_components(H + CommPoly.const(1))
    with pytest.raises(ValueError):
        bi_degree_components(H, 'diagonal')


def test_directional_derivative(sl2):
    H = casimir_poly(sl2)
    h = sl2.index_of('H[1]')
    assert directional_derivative(H, {h: 1}, 2) == CommPoly.const(1)
    assert directional_derivative(H, {h: 1}, 3) == CommPoly()
    values = [0] * sl2.dim
    values[h] = 1
    assert directional_derivative(H, values) == directional_derivative(H, {h: 1})


def test_graded_scalar_product(sl2):
    h = letter(sl2, 'H[1]', -1)
    e, f = letter(sl2, 'E[1,2]', -1), letter(sl2, 'E[2,1]', -1)
    assert graded_scalar_product(CommPoly.var(h), CommPoly.var(h), sl2) == 2
    assert graded_scalar_product(CommPoly.var(e), CommPoly.var(f), sl2) == 1
    assert graded_scalar_product(CommPoly.var(h) ** 2, CommPoly.var(h) ** 2, sl2) == 8
    # different t-degrees are orthogonal
    assert graded_scalar_product(CommPoly.var(h), CommPoly.var(h.at(-2)), sl2) == 0
