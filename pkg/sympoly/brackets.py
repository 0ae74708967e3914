from fractions import Fraction
from math import factorial

from sympy.utilities.iterables import multiset_permutations

from sympoly.poly import CommPoly, LoopVar, mono_vars, _add_into


def _bracket_var(spec, u, v):
    if u.component != v.component:
        return CommPoly()
    return CommPoly.linear(spec.bracket[u.index][v.index], u.tdeg + v.tdeg, u.component)


def poisson_bracket(f, g, spec):
    """Leibniz extension of {x[a], y[b]} = [x, y][a + b]; copies in different components commute."""
    if not f or not g:
        return CommPoly()
    df = {u: f.diff(u) for u in f.variables()}
    dg = {v: g.diff(v) for v in g.variables()}
    out = CommPoly()
    for u, fu in df.items():
        for v, gv in dg.items():
            br = _bracket_var(spec, u, v)
            if br:
                out = out + fu * gv * br
    return out


def lie_action(spec, x, f, tdeg=0, component=0):
    """{x, f} for an algebra element x (coordinate dict) placed at (tdeg, component)."""
    return poisson_bracket(CommPoly.linear(x, tdeg, component), f, spec)


def is_invariant(spec, f):
    return all(not lie_action(spec, {a: 1}, f) for a in range(spec.dim))


def polarize(f, abar):
    """Y[abar] = (1/m!) sum_sigma prod y_i[a_sigma(i)] per monomial of degree m."""
    abar = list(abar)
    m = len(abar)
    if any(d != m for d in f.degrees()):
        raise ValueError("Invalid polarisation: degree {} against {} t-degrees".format(f.degrees(), m))
    if len(set(abar)) == 1:
        return f.shift(abar[0])
    weight = Fraction(1, factorial(m))
    for d in set(abar):
        weight *= factorial(abar.count(d))
    terms = {}
    for mono, c in f.terms.items():
        factors = mono_vars(mono)
        for arrangement in multiset_permutations(sorted(abar)):
            variables = [v.at(d) for v, d in zip(factors, arrangement)]
            exps = {}
            for v in variables:
                exps[v] = exps.get(v, 0) + 1
            _add_into(terms, tuple(sorted(exps.items())), c * weight)
    return CommPoly._raw(terms)


def _c_expand(f, images):
    """Expand f under x -> sum_j c^j images[j](x); returns the list of c-coefficients."""
    d = f.degree()
    out = [CommPoly() for _ in range(d + 1)]
    for mono, coeff in f.terms.items():
        parts = [CommPoly.const(coeff)]
        for v in mono_vars(mono):
            image = images(v)
            nxt = [CommPoly() for _ in range(len(parts) + len(image) - 1)]
            for p, part in enumerate(parts):
                if not part:
                    continue
                for q, piece in enumerate(image):
                    if piece:
                        nxt[p + q] = nxt[p + q] + part * piece
            parts = nxt
        for j, part in enumerate(parts):
            out[j] = out[j] + part
    return out


def bi_degree_components(f, mode='evaluation'):
    """Bi-degree pieces of a homogeneous H in S(g + g).

    evaluation: x -> x^(1) + c x^(2); entry j is H_{d-j, j}.
    symmetric:  x -> (x^(1) + x^(2)) + c (x^(1) - x^(2)); entry j is the piece
                with d - j diagonal and j antidiagonal factors.
    """
    if not f.is_homogeneous():
        raise ValueError("Invalid input: bi-degree split needs a homogeneous polynomial")
    if mode == 'evaluation':
        images = lambda v: [CommPoly.var(v.on(1)), CommPoly.var(v.on(2))]
    elif mode == 'symmetric':
        images = lambda v: [CommPoly.var(v.on(1)) + CommPoly.var(v.on(2)),
                            CommPoly.var(v.on(1)) - CommPoly.var(v.on(2))]
    else:
        raise ValueError("Invalid bi-degree mode: {}".format(mode))
    return _c_expand(f, images)


def _pairing(spec, u, v):
    if u.tdeg != v.tdeg or u.component != v.component:
        return Fraction(0)
    return spec.form[u.index][v.index]


def _permanent(matrix):
    n = len(matrix)
    memo = {}

    def perm(i, mask):
        if i == n:
            return Fraction(1)
        key = (i, mask)
        if key not in memo:
            total = Fraction(0)
            for j in range(n):
                if not mask & (1 << j) and matrix[i][j]:
                    total += matrix[i][j] * perm(i + 1, mask | (1 << j))
            memo[key] = total
        return memo[key]

    return perm(0, 0)


def monomial_product(spec, m1, m2):
    v1, v2 = mono_vars(m1), mono_vars(m2)
    if len(v1) != len(v2):
        return Fraction(0)
    if sorted((v.tdeg, v.component) for v in v1) != sorted((v.tdeg, v.component) for v in v2):
        return Fraction(0)
    return _permanent([[_pairing(spec, u, v) for v in v2] for u in v1])


def graded_scalar_product(f, g, spec):
    """Permanent pairing on S(t^-1 g[t^-1]) with (x[a], y[b]) = delta_ab B(x, y)."""
    total = Fraction(0)
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            value = monomial_product(spec, m1, m2)
            if value:
                total += c1 * c2 * value
    return total


def directional_derivative(f, mu, times=1):
    """partial_mu^times f; mu lists the values mu(x_a) over the basis."""
    mu = dict(enumerate(mu)) if not isinstance(mu, dict) else mu
    out = f
    for _ in range(times):
        step = CommPoly()
        for v in out.variables():
            c = mu.get(v.index, 0)
            if c:
                step = step + out.diff(v) * c
        out = step
    return out


def casimir_poly(spec, tdeg=0, component=0):
    """sum_a x_a x^a as an element of S(g)."""
    terms = {}
    for a, b, c in spec.casimir_terms():
        u, v = LoopVar(tdeg, component, a), LoopVar(tdeg, component, b)
        mono = ((u, 2),) if u == v else tuple(sorted(((u, 1), (v, 1))))
        _add_into(terms, mono, c)
    return CommPoly._raw(terms)
