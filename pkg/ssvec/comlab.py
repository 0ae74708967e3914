"""Commutator laboratory: the pieces [H[b1, b2], varpi(Y)] decomposes into.

Covers the remainder X_Y, its leading symbol against the m_3 prediction, the
position constants c_23(j, p), the W-elements with their universal relations
and the Poisson half-bracket.
"""
from collections import Counter
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations, product
from math import factorial
from typing import NamedTuple

from liealg import linalg
from liealg.algebras import get_algebra
from mmap.lift import identify_scalar
from mmap.matpoly import apply_matrix, m3
from sympoly.brackets import casimir_poly, poisson_bracket, polarize
from sympoly.poly import CommPoly, LoopVar, mono_from_vars
from uea.pbw import NCPoly, get_enveloping
from uea.symmetrise import symmetrize


def casimir_mixed(spec, b1, b2):
    """H[b1, b2] = sum_a x_a[b1] x^a[b2] in S(t^-1 g[t^-1])."""
    if b1 == b2:
        return casimir_poly(spec, b1)
    out = CommPoly()
    for a, b, c in spec.casimir_terms():
        out = out + CommPoly.monomial([LoopVar(b1, 0, a), LoopVar(b2, 0, b)], c)
    return out


def x_decomposition(spec, F, abar, bbar=(-1, -1)):
    """X = [H[b1, b2], varpi(F[abar])] - varpi({H[b1, b2], F[abar]}).

    Args:
        spec (LieAlgebraSpec): the algebra
        F (CommPoly): homogeneous element of S^m(g)
        abar (sequence): m negative t-degrees
        bbar (pair): negative t-degrees (b1, b2) of the quadratic element

    Returns:
        NCPoly
    """
    b1, b2 = bbar
    if any(d >= 0 for d in list(abar) + [b1, b2]):
        raise ValueError("Invalid t-degrees: {} and {}".format(list(abar), list(bbar)))
    return _remainder(spec, polarize(F, abar), b1, b2)


def _remainder(spec, Y, b1, b2):
    first = get_enveloping(spec).casimir_commutator(symmetrize(spec, Y), b1, b2)
    second = symmetrize(spec, poisson_bracket(casimir_mixed(spec, b1, b2), Y, spec))
    return first - second


def symbol_part(X, degree):
    """Words of the given length read as a commutative polynomial (zero when absent)."""
    part = X.filtration_part(degree)
    return part.gr() if part else CommPoly()


def predicted_symbol(spec, F):
    """sum_w sum_a x_a[-2] (xi_w x^a)[-3] R_w[-1] for m_3(F) = sum_w xi_w (x) R_w."""
    out = CommPoly()
    for mono, matrix in m3(spec, F).terms.items():
        cofactor = CommPoly({mono: 1}).shift(-1)
        for dp in spec.dual_basis():
            image = apply_matrix(matrix, dp.dual)
            if image:
                out = out + CommPoly.var(LoopVar(-2, 0, dp.primal)) * CommPoly.linear(image, -3) * cofactor
    return out


class SymbolReport(NamedTuple):
    remainder: object
    symbol: CommPoly
    predicted: CommPoly
    scale: Fraction


def m_sym_symbol(spec, F):
    """Leading symbol of X_{F[-1]} in degree m - 1 against the m_3 prediction.

    Degrees m + 1 and m of X vanish identically; scale is the factor with
    symbol = scale * predicted (ScalarMismatch if the shapes differ).
    """
    m = F.degree()
    X = x_decomposition(spec, F, [-1] * m)
    if symbol_part(X, m + 1) or symbol_part(X, m):
        raise ArithmeticError("Remainder has a term of degree above {}".format(m - 1))
    symbol = symbol_part(X, m - 1)
    predicted = predicted_symbol(spec, F)
    return SymbolReport(X, symbol, predicted, identify_scalar(symbol, predicted))


# ---------------------------------------------------------------------------
# position constants

def position_keys(m):
    """Unknowns ('23', j, p) and ('32', j, p) for 1 <= j < p <= m - 1."""
    pairs = list(combinations(range(1, m), 2))
    return [('23', j, p) for j, p in pairs] + [('32', j, p) for j, p in pairs]


def remainder(spec, factors, b1=-1, b2=-1):
    """X_Y for the monomial Y = prod factors of S(t^-1 g[t^-1])."""
    return _remainder(spec, CommPoly.monomial(factors), b1, b2)


def _normal_form(engine, words):
    terms = {}
    for word, c in words.items():
        if not c:
            continue
        for w, v in engine.normal_order(word).terms.items():
            terms[w] = terms.get(w, 0) + c * v
    return NCPoly(terms)


def position_columns(spec, factors, b1=-1, b2=-1):
    """The element each position constant multiplies in X_Y, Y = prod factors.

    For every factor y_l and every order sigma of the other m - 1 factors,
    slot j holds x_a and slot p holds ad(y_sigma(p)) ad(y_l) ad(y_sigma(j)) x^a,
    the remaining slots keep their factors. Under c_23 the t-degree of y_l goes
    to slot p, under c_32 to slot j with a minus sign; (b1, b2) enter in both
    orders.

    Returns:
        dict position key -> NCPoly
    """
    m = len(factors)
    engine = get_enveloping(spec)
    duals = spec.dual_basis()
    images = {}
    words = {key: {} for key in position_keys(m)}
    for l, yl in enumerate(factors):
        rest = [y for k, y in enumerate(factors) if k != l]
        for order in permutations(rest):
            for j, p in combinations(range(m - 1), 2):
                yj, yp = order[j], order[p]
                for pair in duals:
                    key = (yj.index, yl.index, yp.index, pair.primal)
                    if key not in images:
                        image = pair.dual
                        for y in (yj, yl, yp):
                            image = spec.bracket_elems({y.index: Fraction(1)}, image)
                        images[key] = image
                    image = images[key]
                    if not image:
                        continue
                    for u, v in ((b1, b2), (b2, b1)):
                        placements = ((('23', j + 1, p + 1), u + yj.tdeg, v + yl.tdeg + yp.tdeg, 1),
                                      (('32', j + 1, p + 1), u + yj.tdeg + yl.tdeg, v + yp.tdeg, -1))
                        for name, deg_j, deg_p, sign in placements:
                            word = list(order)
                            word[j] = LoopVar(deg_j, 0, pair.primal)
                            target = words[name]
                            for c, coeff in image.items():
                                word[p] = LoopVar(deg_p, 0, c)
                                w = tuple(word)
                                target[w] = target.get(w, 0) + sign * coeff
    return {name: _normal_form(engine, terms) for name, terms in words.items()}


class PositionFit(NamedTuple):
    solution: object
    rank: int
    unknowns: int


def fit_positions(spec, monomials, b1=-1, b2=-1):
    """Solves X_Y = sum_key c_key column_key(Y) for one set of constants shared by every Y.

    Every normal-ordered word of every X_Y gives one equation; solution is
    None when the system is inconsistent.
    """
    m = len(monomials[0])
    keys = position_keys(m)
    equations = set()
    for factors in monomials:
        if len(factors) != m:
            raise ValueError("Invalid monomials: degrees {}".format([len(f) for f in monomials]))
        X = remainder(spec, factors, b1, b2)
        columns = position_columns(spec, factors, b1, b2)
        words = set(X.terms)
        for column in columns.values():
            words.update(column.terms)
        for w in words:
            row = tuple(columns[key].terms.get(w, Fraction(0)) for key in keys)
            equations.add((row, X.terms.get(w, Fraction(0))))
    equations = sorted(equations)
    rows = [list(row) for row, _ in equations]
    rhs = [value for _, value in equations]
    if not rows:
        return PositionFit({key: Fraction(0) for key in keys}, 0, len(keys))
    solution = linalg.solve(rows, rhs)
    if solution is not None:
        solution = dict(zip(keys, solution))
    return PositionFit(solution, linalg.rank(rows, len(keys)), len(keys))


def _fit_monomials(spec, m):
    """Two monomials of degree m with mixed letters, the first with distinct t-degrees."""
    first = [LoopVar(-(k + 1), 0, k % spec.dim) for k in range(m)]
    second = [LoopVar(-(k // 2 + 1), 0, (2 * k + 2) % spec.dim) for k in range(m)]
    return [first, second]


def c_constants_probe(m, family='sl', n=2):
    """Fits c_23(j, p) and c_32(j, p) from the expansion of X_Y.

    The constants are solved jointly for two monomials Y, so a consistent
    system means they do not depend on Y; each monomial is also solved on its
    own and, when determined there, has to give the joint answer.

    Returns:
        dict with keys m, c23, c32, total, rank, unknowns, consistent,
        determined, y_independent, symmetric, signs, matches
    """
    if not 4 <= m <= 6:
        raise ValueError("Invalid degree for the position constants: {}".format(m))
    spec = get_algebra(family, n)
    monomials = _fit_monomials(spec, m)
    joint = fit_positions(spec, monomials)
    consistent = joint.solution is not None
    solution = joint.solution or {}
    y_independent = consistent
    for factors in monomials:
        single = fit_positions(spec, [factors])
        if single.solution is None:
            y_independent = False
        elif single.rank == single.unknowns and single.solution != solution:
            y_independent = False

    table = {'23': {}, '32': {}}
    for (kind, j, p), value in solution.items():
        table[kind][(j, p)] = value
    c_23, c_32 = table['23'], table['32']
    symmetric = consistent and all(c_23[(j, p)] == c_32[(m - p, m - j)] for j, p in c_23)
    signs = consistent and all(v <= 0 for v in c_23.values()) and \
        all(v < 0 for (j, p), v in c_23.items() if p <= m - j)
    determined = joint.rank == joint.unknowns
    report = {'m': m, 'c23': c_23, 'c32': c_32, 'total': sum(solution.values(), Fraction(0)),
              'rank': joint.rank, 'unknowns': joint.unknowns, 'consistent': consistent,
              'determined': determined, 'y_independent': y_independent, 'symmetric': symmetric, 'signs': signs}
    report['matches'] = all(report[k] for k in ('consistent', 'determined', 'y_independent', 'symmetric', 'signs'))
    return report


# ---------------------------------------------------------------------------
# W-elements

class WElement(NamedTuple):
    F: CommPoly
    alpha: tuple
    pair: tuple
    value: CommPoly


def normalise_alpha(alpha):
    """((alpha_1, r_1), ..., (alpha_s, r_s)) from pairs, or from a flat multiset (blocks by decreasing alpha)."""
    alpha = list(alpha)
    if alpha and isinstance(alpha[0], (tuple, list)):
        blocks = tuple((int(d), int(r)) for d, r in alpha)
    else:
        counts = Counter(alpha)
        blocks = tuple((d, counts[d]) for d in sorted(counts, reverse=True))
    degrees = [d for d, _ in blocks]
    if any(d >= 0 for d in degrees) or any(r < 1 for _, r in blocks) or len(set(degrees)) != len(degrees):
        raise ValueError("Invalid multiset of t-degrees: {}".format(alpha))
    return blocks


def _lowered(spec, F):
    """F with x_a -> sum_b B(x_a, x_b) x_b; (F, mono) = prod(gamma!) * coefficient of mono."""
    images = {}
    for v in F.variables():
        images[v] = CommPoly.linear({b: c for b, c in enumerate(spec.form[v.index]) if c}, v.tdeg, v.component)
    return F.substitute(images)


def _pairing_with(lowered, indices):
    mono = mono_from_vars(LoopVar(0, 0, a) for a in indices)
    weight = 1
    for _, e in mono:
        weight *= factorial(e)
    return weight * lowered.terms.get(mono, Fraction(0))


def w_element(spec, F, alpha, pair):
    """W[F, alpha, (i, j)]: the Riesz representer of the functional

        V -> sum_{l in block i, p in block j} (F, [v_l, v_p] prod_{u != l, p} v_u)

    on S^alpha, written in dual letters x^a[alpha]. Blocks are indexed from 0.
    """
    blocks = normalise_alpha(alpha)
    i, j = pair
    if i == j or not (0 <= i < len(blocks) and 0 <= j < len(blocks)):
        raise ValueError("Invalid block pair: {}".format(pair))
    if not F.is_homogeneous() or sum(r for _, r in blocks) != F.degree() + 1:
        raise ValueError("Invalid multiset of t-degrees: {} for degree {}".format(blocks, F.degree()))
    lowered = _lowered(spec, F)
    choices = [list(combinations_with_replacement(range(spec.dim), r)) for _, r in blocks]

    terms = {}
    for combo in product(*choices):
        positions = [(blk, a) for blk, indices in enumerate(combo) for a in indices]
        value = Fraction(0)
        for l, (bl, vl) in enumerate(positions):
            if bl != i:
                continue
            for p, (bp, vp) in enumerate(positions):
                if bp != j:
                    continue
                rest = [a for u, (_, a) in enumerate(positions) if u != l and u != p]
                for c, v in spec.bracket[vl][vp].items():
                    value += v * _pairing_with(lowered, rest + [c])
        if value:
            mono = mono_from_vars(LoopVar(blocks[blk][0], 0, a) for blk, a in positions)
            norm = 1
            for _, e in mono:
                norm *= factorial(e)
            terms[mono] = terms.get(mono, 0) + value / norm

    duals = {dp.primal: dp.dual for dp in spec.dual_basis()}
    raised = CommPoly(terms).substitute(lambda v: CommPoly.linear(duals[v.index], v.tdeg, v.component))
    return WElement(F, blocks, (i, j), raised)


def universal_check(spec, F, alpha):
    """sum_{j != i} W[F, alpha, (i, j)] = 0 for every block i."""
    blocks = normalise_alpha(alpha)
    s = len(blocks)
    w = {}
    for i in range(s):
        for j in range(i + 1, s):
            w[(i, j)] = w_element(spec, F, blocks, (i, j)).value
            w[(j, i)] = -w[(i, j)]
    return all(not sum((w[(i, j)] for j in range(s) if j != i), CommPoly()) for i in range(s))


# ---------------------------------------------------------------------------
# half-bracket

def half_bracket(spec, Yhat, b1, b2):
    """P(b1, b2) = sum_a {x_a[b2], Yhat} x^a[b1]."""
    out = CommPoly()
    for a, b, c in spec.casimir_terms():
        part = poisson_bracket(CommPoly.var(LoopVar(b2, 0, a)), Yhat, spec)
        if part:
            out = out + part * CommPoly.var(LoopVar(b1, 0, b)) * c
    return out


def orbit_size(abar):
    size = factorial(len(abar))
    for e in Counter(abar).values():
        size //= factorial(e)
    return size


def p_fs_check(spec, Y, abar, b1, b2):
    """(|S_m abar| P_{Y[abar]}(b1, b2), sum of the W-elements it splits into).

    A factor moved from t-degree a to a + b2 lands in block i of the multiset
    abar - a + (a + b2) + b1, the new letter in the block j of b1; moves with
    a + b2 = b1 cancel in P and are skipped.
    """
    abar = list(abar)
    lhs = half_bracket(spec, polarize(Y, abar), b1, b2) * orbit_size(abar)
    rhs = CommPoly()
    seen = set()
    for a in sorted(set(abar)):
        if a + b2 == b1:
            continue
        alpha = list(abar)
        alpha.remove(a)
        alpha += [a + b2, b1]
        key = tuple(sorted(alpha))
        if key in seen:
            continue
        seen.add(key)
        blocks = normalise_alpha(alpha)
        j = [d for d, _ in blocks].index(b1)
        for i, (d, _) in enumerate(blocks):
            if i == j:
                continue
            moved = list(alpha)
            moved.remove(b1)
            moved.remove(d)
            if sorted(moved + [d - b2]) == sorted(abar):
                rhs = rhs + w_element(spec, Y, blocks, (i, j)).value
    return lhs, rhs


# ---------------------------------------------------------------------------
# worked cases

def bracket_lands_in(spec, F):
    """{H[-1], F[abar]} for abar = (-3, -1, ..., -1) uses only t-degrees {-3, -2, -1^(m-1)}."""
    m = F.degree()
    abar = [-3] + [-1] * (m - 1)
    target = sorted([-3, -2] + [-1] * (m - 1))
    bracket = poisson_bracket(casimir_poly(spec, -1), polarize(F, abar), spec)
    return all(sorted(v.tdeg for v, e in mono for _ in range(e)) == target for mono in bracket.terms)


def example_quartic(spec, F):
    """B with [H[-1], varpi(F[-1])] = B [H[-2, -2], H[-1, -1]] for a quartic invariant F.

    varpi(F[-1]) + B H[-2, -2] then commutes with H[-1].
    """
    engine = get_enveloping(spec)
    lhs = engine.casimir_commutator(symmetrize(spec, F.shift(-1)), -1, -1)
    target = engine.commutator(engine.casimir_loop(-2, -2), engine.casimir_loop(-1, -1))
    return identify_scalar(lhs, target)
