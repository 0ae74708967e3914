from fractions import Fraction
from math import factorial

from sympy.utilities.iterables import multiset_permutations

from liealg import linalg

from sympoly.poly import mono_vars
from uea.pbw import TAU, NCPoly, get_enveloping, is_tau


def _sym_multiset(engine, letters):
    """varpi of a sorted multiset of letters, with tau letters applied to the vacuum.

    varpi(M) = (1/|M|) sum_l mult(l) l varpi(M - l); a tau letter acts on the
    tau-free remainder as the derivation x[a] -> -a x[a - 1] since tau 1 = 0.
    """
    if not letters:
        return NCPoly.one()
    cached = engine._sym_memo.get(letters)
    if cached is not None:
        return cached
    out = NCPoly()
    seen = set()
    for pos, letter in enumerate(letters):
        if letter in seen:
            continue
        seen.add(letter)
        mult = letters.count(letter)
        rest = _sym_multiset(engine, letters[:pos] + letters[pos + 1:])
        if is_tau(letter):
            part = engine.tau_derivation(rest)
        else:
            part = engine.lmul(letter, rest)
        out = out + part.scale(mult)
    out = out.scale(Fraction(1, len(letters)))
    engine.remember(engine._sym_memo, letters, out)
    return out


def symmetrize(spec, f):
    """varpi: S(q) -> U(q), averaging every monomial over its arrangements."""
    engine = get_enveloping(spec)
    out = NCPoly()
    for mono, c in f.terms.items():
        out = out + _sym_multiset(engine, tuple(mono_vars(mono))).scale(c)
    return out


def sym_at(spec, f, abar):
    """varpi(F)[abar] = (1/m!) sum_sigma x_sigma(1)[a_1] ... x_sigma(m)[a_m] per monomial."""
    abar = list(abar)
    m = len(abar)
    if any(d != m for d in f.degrees()):
        raise ValueError("Invalid polarisation: degree {} against {} t-degrees".format(f.degrees(), m))
    engine = get_enveloping(spec)
    out = NCPoly()
    for mono, c in f.terms.items():
        factors = mono_vars(mono)
        weight = Fraction(1, factorial(m))
        for v, e in mono:
            weight *= factorial(e)
        for arrangement in multiset_permutations(factors):
            word = tuple(v.at(d) for v, d in zip(arrangement, abar))
            out = out + engine.normal_order(word).scale(c * weight)
    return out


def sym_tau_apply(spec, f, r):
    """varpi(tau^r F[-1]) . 1 for F in S^m(g); tau-free, total t-degree -m - r."""
    if r < 0:
        raise ValueError("Invalid tau power: {}".format(r))
    engine = get_enveloping(spec)
    out = NCPoly()
    for mono, c in f.shift(-1).terms.items():
        letters = tuple(sorted(mono_vars(mono) + [TAU] * r))
        out = out + _sym_multiset(engine, letters).scale(c)
    return out


def sym_at_decomposition(spec, f, r):
    """Express sym_tau_apply(f, r) as sum c(abar) sym_at(f, abar), sum(abar) = -m - r.

    Returns the dict abar -> coefficient, or None when no decomposition exists.
    """

    m = f.degree()
    target = sym_tau_apply(spec, f, r)
    compositions = _partitions(m + r, m)
    columns = [sym_at(spec, f, [-p for p in part]) for part in compositions]
    words = sorted({w for col in columns + [target] for w in col.terms})
    rows = [[col.terms.get(w, Fraction(0)) for col in columns] for w in words]
    rhs = [target.terms.get(w, Fraction(0)) for w in words]
    solution = linalg.solve(rows, rhs)
    if solution is None:
        return None
    return {tuple(-p for p in part): c for part, c in zip(compositions, solution) if c}


def _partitions(total, parts):
    """Weakly decreasing tuples of positive integers of length ``parts`` summing to ``total``."""
    def rec(remaining, k, largest):
        if k == 0:
            if remaining == 0:
                yield ()
            return
        for first in range(min(largest, remaining - (k - 1)), 0, -1):
            for tail in rec(remaining - first, k - 1, first):
                yield (first,) + tail

    return list(rec(total, parts, total))


def is_omega_eigen(spec, a, sign):
    engine = get_enveloping(spec)
    return engine.antipode(a) == a.scale(sign)
