from fractions import Fraction

import pytest

from invariants.classical import delta_sl
from sympoly.brackets import casimir_poly, polarize
from sympoly.poly import CommPoly
from tests.utils import gen, letter, random_linear, random_word
from uea.pbw import TAU, EnvelopingAlgebra, NCPoly, get_enveloping
from uea.symmetrise import is_omega_eigen, sym_at, sym_at_decomposition, sym_tau_apply, symmetrize


def test_commutator_of_generators(sl2):
    engine = get_enveloping(sl2)
    assert engine.commutator(gen(sl2, 'E[1,2]'), gen(sl2, 'E[2,1]')) == gen(sl2, 'H[1]')


def test_normal_order_straightens(sl2):
    engine = get_enveloping(sl2)
    e, f = letter(sl2, 'E[1,2]'), letter(sl2, 'E[2,1]')
    expected = NCPoly({(e, f): 1}) - gen(sl2, 'H[1]')
    assert engine.normal_order((f, e)) == expected


def test_normal_order_is_associative(sl3, rng, samples):
    engine = get_enveloping(sl3)
    for _ in range(samples):
        a, b, c = (engine.normal_order(random_word(sl3, rng, 2)) for _ in range(3))
        assert engine.mul(engine.mul(a, b), c) == engine.mul(a, engine.mul(b, c))


def test_memo_stays_within_its_entry_bound(sl3, rng, samples):
    engine = get_enveloping(sl3)
    small = EnvelopingAlgebra(sl3, memo_max_entries=16)
    for _ in range(samples):
        word = random_word(sl3, rng, 5)
        assert small.normal_order(word) == engine.normal_order(word)
        assert len(small._memo) <= 16
    memo = {}
    for i in range(40):
        small.remember(memo, i, i)
    assert len(memo) <= 16
    assert memo[39] == 39


def test_casimir_is_central(sl3):
    engine = get_enveloping(sl3)
    H = symmetrize(sl3, casimir_poly(sl3))
    for a in range(sl3.dim):
        assert not engine.commutator(NCPoly.generator(letter(sl3, sl3.labels[a])), H)


def test_casimir_commutator_matches_direct_product(sl2, rng):
    engine = get_enveloping(sl2)
    for _ in range(5):
        a = engine.normal_order(random_word(sl2, rng, 2))
        direct = engine.commutator(engine.casimir_loop(-1, -1), a)
        assert engine.casimir_commutator(a, -1, -1) == direct


def test_antipode_reverses_products(sl2, rng, samples):
    engine = get_enveloping(sl2)
    for _ in range(samples):
        a = engine.normal_order(random_word(sl2, rng, 2))
        b = engine.normal_order(random_word(sl2, rng, 1))
        assert engine.antipode(engine.mul(a, b)) == engine.mul(engine.antipode(b), engine.antipode(a))
        assert engine.antipode(engine.antipode(a)) == a


def test_tau_derivation(sl2):
    engine = get_enveloping(sl2)
    x = gen(sl2, 'H[1]', -1)
    assert engine.tau_derivation(x) == gen(sl2, 'H[1]', -2)
    assert engine.tau_derivation(x, 2) == gen(sl2, 'H[1]', -3).scale(2)
    assert engine.bracket(TAU, TAU) == []


def test_symmetrize_averages(sl2):
    e, f = letter(sl2, 'E[1,2]', -1), letter(sl2, 'E[2,1]', -1)
    engine = get_enveloping(sl2)
    value = symmetrize(sl2, CommPoly.monomial([e, f]))
    expected = (engine.normal_order((e, f)) + engine.normal_order((f, e))).scale(Fraction(1, 2))
    assert value == expected


def test_symbol_of_symmetrisation(sl3):
    f = delta_sl(3, 3).shift(-1)
    assert symmetrize(sl3, f).gr() == f
    with pytest.raises(ValueError):
        NCPoly().gr()


def test_sym_at_and_tau_apply(sl2):
    H = casimir_poly(sl2)
    assert sym_at(sl2, H, [-1, -1]) == symmetrize(sl2, H.shift(-1))
    assert sym_tau_apply(sl2, H, 0) == symmetrize(sl2, H.shift(-1))
    applied = sym_tau_apply(sl2, H, 1)
    assert not applied.has_tau()
    assert applied == sym_at(sl2, H, [-1, -2])
    with pytest.raises(ValueError):
        sym_tau_apply(sl2, H, -1)


def test_sym_at_decomposition(sl2):
    H = casimir_poly(sl2)
    decomposition = sym_at_decomposition(sl2, H, 2)
    assert decomposition is not None
    total = NCPoly()
    for abar, c in decomposition.items():
        total = total + sym_at(sl2, H, abar).scale(c)
    assert total == sym_tau_apply(sl2, H, 2)


def test_symmetrisation_is_omega_eigen(sl3):
    for k in (2, 3):
        value = symmetrize(sl3, delta_sl(3, k).shift(-1))
        assert is_omega_eigen(sl3, value, (-1) ** k)


def random_form(spec, rng, degree):
    """A product of ``degree`` random linear forms of S(g)."""
    out = CommPoly.const(1)
    for _ in range(degree):
        out = out * random_linear(spec, rng)
    return out


def test_sym_at_is_symmetrised_polarisation(sl2, rng, samples):
    for _ in range(samples):
        m = int(rng.integers(2, 4))
        F = random_form(sl2, rng, m)
        abar = [int(d) for d in rng.integers(-3, 0, size=m)]
        assert sym_at(sl2, F, abar) == symmetrize(sl2, polarize(F, abar))


def test_tau_apply_is_omega_eigen(sl2, rng, samples):
    for _ in range(samples):
        m = int(rng.integers(1, 3))
        r = int(rng.integers(0, 4))
        value = sym_tau_apply(sl2, random_form(sl2, rng, m), r)
        assert is_omega_eigen(sl2, value, (-1) ** m)


def straighten(engine, word, last=False):
    """Normal form by adjacent transpositions, resolving the first (or last) inversion each time."""
    inversions = [i for i in range(len(word) - 1) if word[i] > word[i + 1]]
    if not inversions:
        return NCPoly({word: 1})
    i = inversions[-1] if last else inversions[0]
    out = straighten(engine, word[:i] + (word[i + 1], word[i]) + word[i + 2:], last)
    for z, c in engine.bracket(word[i], word[i + 1]):
        out = out + straighten(engine, word[:i] + (z,) + word[i + 2:], last).scale(c)
    return out


def test_normal_order_is_confluent(sl3, rng, samples):
    engine = get_enveloping(sl3)
    for _ in range(samples):
        word = random_word(sl3, rng, 4)
        first = straighten(engine, word)
        assert first == straighten(engine, word, last=True)
        assert first == engine.normal_order(word)
