"""Symmetric invariants of the classical algebras.

All of them come from minors of a generic matrix whose (i, j) entry is a
linear polynomial: the variable E_ij for gl_n, or the image of E_ij under a
restriction map for sl, sp and so.
"""
from fractions import Fraction
from math import comb

from liealg.algebras import get_algebra, gl_index
from sympoly.poly import CommPoly, LoopVar


class MinorExpander:
    """Laplace expansion along the first row, memoised on (rows, cols).

    Args:
        entry (callable): (i, j) -> CommPoly, 1-indexed
    """

    def __init__(self, entry):
        self.entry = entry
        self._entries = {}
        self._memo = {}

    def _entry(self, i, j):
        key = (i, j)
        if key not in self._entries:
            self._entries[key] = self.entry(i, j)
        return self._entries[key]

    def minor(self, rows, cols):
        rows, cols = tuple(rows), tuple(cols)
        if not rows:
            return CommPoly.const(1)
        key = (rows, cols)
        if key in self._memo:
            return self._memo[key]
        out = CommPoly()
        r, rest = rows[0], rows[1:]
        for pos, c in enumerate(cols):
            e = self._entry(r, c)
            if not e:
                continue
            sub = self.minor(rest, cols[:pos] + cols[pos + 1:])
            if sub:
                out = out + (e * sub if pos % 2 == 0 else -(e * sub))
        self._memo[key] = out
        return out

    def principal_sum(self, size, k):
        """Sum of the principal k x k minors of a size x size matrix."""
        from itertools import combinations

        if k == 0:
            return CommPoly.const(1)
        out = CommPoly()
        for subset in combinations(range(1, size + 1), k):
            out = out + self.minor(subset, subset)
        return out


def gl_entry(n):
    return lambda i, j: CommPoly.var(LoopVar(0, 0, gl_index(n, i, j)))


def restriction_entry(spec, scale):
    """(i, j) -> scale * pr(E_ij) as a linear polynomial over the spec's basis."""

    def entry(i, j):
        coords = spec.coords({(i - 1, j - 1): Fraction(1)})
        return CommPoly.linear({a: scale * c for a, c in coords.items()})

    return entry


def restrict(f, n, target, scale):
    """Restriction of H in S(gl_n) to a subalgebra: E_ij -> scale * pr(E_ij)."""
    entry = restriction_entry(target, scale)
    images = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            images[LoopVar(0, 0, gl_index(n, i, j))] = entry(i, j)
    return f.substitute(images)


def _expander(key, spec, entry):
    cache = spec.cache.setdefault('minors', {})
    if key not in cache:
        cache[key] = MinorExpander(entry)
    return cache[key]


def delta_gl(n, k):
    """Delta_k of gl_n: coefficient of (-1)^k q^(n-k) in det(q I - E)."""
    if not 1 <= k <= n:
        raise ValueError("Invalid degree for gl{}: {}".format(n, k))
    spec = get_algebra('gl', n)
    return _expander('gl', spec, gl_entry(n)).principal_sum(n, k)


def delta_sl(n, k):
    """Restriction of Delta_k to sl_n (E_ii replaced by its traceless part)."""
    if not 1 <= k <= n:
        raise ValueError("Invalid degree for sl{}: {}".format(n, k))
    spec = get_algebra('sl', n)
    return _expander('sl', spec, restriction_entry(spec, 1)).principal_sum(n, k)


def delta_sl_in_gl(n, k):
    """The same restriction written in gl_n variables: E_ii -> E_ii - z, z = Delta_1 / n."""
    z = delta_gl(n, 1) * Fraction(1, n)
    base = gl_entry(n)
    entry = lambda i, j: base(i, j) - z if i == j else base(i, j)
    if k == 0:
        return CommPoly.const(1)
    return MinorExpander(entry).principal_sum(n, k)


def delta_gl_from_sl(n, k):
    """Delta_k = sum_i binom(n - k + i, i) z^i Dtilde_(k - i) with z = Delta_1 / n."""
    z = delta_gl(n, 1) * Fraction(1, n)
    out = CommPoly()
    for i in range(k + 1):
        out = out + (z ** i) * delta_sl_in_gl(n, k - i) * comb(n - k + i, i)
    return out


def principal_minor_sum(spec, scale, k):
    """Principal k-minors of the generic matrix (scale * pr(E_ij)) of a matrix algebra."""
    if k > spec.size:
        return CommPoly()
    return _expander(('restrict', scale), spec, restriction_entry(spec, scale)).principal_sum(spec.size, k)


def delta_sp(two_n, k):
    """Delta_2k of sp_2n: principal 2k-minors of the matrix (F_ij)."""
    n = two_n // 2
    if not 1 <= k <= n:
        raise ValueError("Invalid degree for sp{}: {}".format(two_n, k))
    return principal_minor_sum(get_algebra('sp', two_n), 2, 2 * k)


def odd_minor_sum(family, size, j):
    """Sum of the principal j-minors of (F_ij); zero for odd j in types B, C, D."""
    return principal_minor_sum(get_algebra(family, size), 2, j)


def phi_so(n, k):
    """Phi_2k: coefficient of q^2k in det(I - q F)^-1 for so_n."""
    if k < 1:
        raise ValueError("Invalid degree for so{}: {}".format(n, k))
    spec = get_algebra('so', n)
    cache = spec.cache.setdefault('phi', {0: CommPoly.const(1)})
    deltas = spec.cache.setdefault('delta', {})
    for top in range(1, 2 * k + 1):
        if top in cache:
            continue
        if top not in deltas:
            deltas[top] = principal_minor_sum(spec, 2, top)
        # (sum_j (-1)^j Delta_j q^j)(sum_m Phi_m q^m) = 1
        out = CommPoly()
        for j in range(1, top + 1):
            if j not in deltas:
                deltas[j] = principal_minor_sum(spec, 2, j)
            if deltas[j]:
                term = deltas[j] * cache[top - j]
                out = out + (term if j % 2 else -term)
        cache[top] = out
    return cache[2 * k]


def phi_cartan_product(n, k):
    """Degree-2k part of prod_j (1 + F_jj^2 + F_jj^4 + ...) over the Cartan of so_n."""
    spec = get_algebra('so', n)
    series = [CommPoly.const(1)]
    for a in spec.cartan:
        h = CommPoly.var(LoopVar(0, 0, a))
        factor = [CommPoly.const(1)] + [h ** (2 * s) for s in range(1, k + 1)]
        nxt = [CommPoly() for _ in range(k + 1)]
        for p, left in enumerate(series):
            for q, right in enumerate(factor):
                if p + q <= k:
                    nxt[p + q] = nxt[p + q] + left * right
        series = nxt
    return series[k]


def cartan_restriction(spec, f):
    """Sets every non-Cartan variable to zero."""
    keep = set(spec.cartan)
    return f.substitute(lambda v: None if v.index in keep else CommPoly())


def pfaffian(two_n):
    """Pfaffian of the generic skew matrix (Fo_ij), normalised by Pf(J) = 1 for the block form J."""
    if two_n < 4 or two_n % 2:
        raise ValueError("Invalid size for the Pfaffian: {}".format(two_n))
    spec = get_algebra('so_skew', two_n)
    cache = spec.cache.setdefault('pf', {})
    entry = skew_entry(spec)

    def pf(indices):
        if not indices:
            return CommPoly.const(1)
        if indices in cache:
            return cache[indices]
        first, rest = indices[0], indices[1:]
        out = CommPoly()
        for pos, j in enumerate(rest):
            sub = pf(rest[:pos] + rest[pos + 1:])
            term = entry(first, j) * sub
            out = out + (term if pos % 2 == 0 else -term)
        cache[indices] = out
        return out

    return pf(tuple(range(1, two_n + 1)))


def skew_entry(spec):
    def entry(i, j):
        if i == j:
            return CommPoly()
        if i < j:
            return CommPoly.var(LoopVar(0, 0, spec.index_of('Fo[{},{}]'.format(i, j))))
        return -CommPoly.var(LoopVar(0, 0, spec.index_of('Fo[{},{}]'.format(j, i))))

    return entry


def skew_determinant(two_n):
    spec = get_algebra('so_skew', two_n)
    return MinorExpander(skew_entry(spec)).minor(range(1, two_n + 1), range(1, two_n + 1))


def weyl_involution_poly(n, f):
    """theta on S(gl_n): E_ij -> -E_ji."""
    images = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            images[LoopVar(0, 0, gl_index(n, i, j))] = -CommPoly.var(LoopVar(0, 0, gl_index(n, j, i)))
    return f.substitute(images)


SUPPORTED_INVARIANTS = ['Delta', 'DeltaTilde', 'DeltaSp', 'Phi', 'Pf', 'G2Delta2', 'G2Delta6', 'G2Htilde']


def get_invariant(name, n=None, k=None):
    """Factory over SUPPORTED_INVARIANTS; returns (spec, polynomial)."""
    assert name in SUPPORTED_INVARIANTS, 'Invalid invariant name: {}'.format(name)
    if name == 'Delta':
        return get_algebra('gl', n), delta_gl(n, k)
    if name == 'DeltaTilde':
        return get_algebra('sl', n), delta_sl(n, k)
    if name == 'DeltaSp':
        return get_algebra('sp', n), delta_sp(n, k)
    if name == 'Phi':
        return get_algebra('so', n), phi_so(n, k)
    if name == 'Pf':
        return get_algebra('so_skew', n), pfaffian(n)
    from invariants import g2inv
    spec = get_algebra('g2')
    if name == 'G2Delta2':
        return spec, g2inv.g2_invariants()[0]
    if name == 'G2Delta6':
        return spec, g2inv.g2_invariants()[1]
    return spec, g2inv.g2_Htilde()
