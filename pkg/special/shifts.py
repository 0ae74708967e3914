"""The shift homomorphisms x t^d -> u^d x + delta_{d,-1} mu(x) and quantum MF subalgebras.

A shift ``mu`` is passed as its values mu(x_a) on the basis (list or dict);
``shift_element`` turns it into the element of g it represents through the
invariant form.
"""
from fractions import Fraction

from liealg import linalg
from liealg.algebras import get_algebra
from invariants.g2inv import g2_Htilde, g2_invariants
from mmap.g2probe import casimir_constant
from runner.utils import get_kernel_logger
from special.gaudin import commute_check, same_span
from sympoly.brackets import casimir_poly, directional_derivative
from sympoly.poly import LoopVar
from uea.pbw import NCPoly, get_enveloping
from uea.symmetrise import sym_at, sym_tau_apply, symmetrize

logger = get_kernel_logger('shifts')


def shift_values(spec, mu):
    if isinstance(mu, dict):
        values = {a: Fraction(v) for a, v in mu.items() if v}
    else:
        mu = list(mu)
        if len(mu) != spec.dim:
            raise ValueError("Invalid shift: {} values for dimension {}".format(len(mu), spec.dim))
        values = {a: Fraction(v) for a, v in enumerate(mu) if v}
    return values


def shift_element(spec, mu):
    """The element m of g with B(x_a, m) = mu(x_a)."""
    values = shift_values(spec, mu)
    out = {}
    for a, v in values.items():
        for b in range(spec.dim):
            if spec.form_inv[a][b]:
                out[b] = out.get(b, 0) + v * spec.form_inv[a][b]
    return {b: v for b, v in out.items() if v}


def diagonal_shift(spec, entries):
    """mu(x_a) = B(x_a, diag(entries)) through the matrix realisation, e.g. (1, 2, -3) on sl_3."""
    entries = [Fraction(v) for v in entries]
    if len(entries) != spec.size:
        raise ValueError("Invalid diagonal shift: {} entries for matrices of size {}".format(len(entries), spec.size))
    values = {}
    for a, matrix in enumerate(spec.matrices):
        value = sum((linalg.to_fraction(matrix.get((i, i), 0)) * d for i, d in enumerate(entries)), Fraction(0))
        if value:
            values[a] = spec.form_scale * value
    return values


def rho_mu_graded(spec, X, mu):
    """rho_{mu,u}(X) as {d: part} with rho_{mu,u}(X) = sum_d u^d part."""
    values = shift_values(spec, mu)
    engine = get_enveloping(spec)
    out = {}
    for word, c in X.terms.items():
        image = {0: NCPoly.one(c)}
        for g in reversed(word):
            if g.tdeg >= 0 or g.component:
                raise ValueError("Invalid letter for the shift map: {}".format(g))
            step = {}
            for d, part in image.items():
                moved = engine.lmul(LoopVar(0, 0, g.index), part)
                step[d + g.tdeg] = step.get(d + g.tdeg, NCPoly()) + moved
                if g.tdeg == -1 and g.index in values:
                    step[d] = step.get(d, NCPoly()) + part.scale(values[g.index])
            image = step
        for d, part in image.items():
            out[d] = out.get(d, NCPoly()) + part
    return {d: part for d, part in out.items() if part}


def rho_mu_u(spec, X, mu, u):
    """Image of X under x t^d -> u^d x + delta_{d,-1} mu(x), re-normal-ordered in U(g)."""
    u = Fraction(u)
    if u == 0:
        raise ValueError("Invalid shift parameter: u = 0")
    out = NCPoly()
    for d, part in rho_mu_graded(spec, X, mu).items():
        out = out + part.scale(u ** d)
    return out


def qmf_generators(spec, mu, H_list):
    """varpi(d_mu^m H) for every H and 0 <= m < deg H, zero shifts dropped."""
    values = shift_values(spec, mu)
    out = []
    for H in H_list:
        for m in range(H.degree()):
            shifted = directional_derivative(H, values, m)
            if shifted:
                out.append(symmetrize(spec, shifted))
    return out


def mf_span_check(spec, F, abar, mu):
    """span{rho_{mu,u}(varpi(F)[abar]) : u} = span{varpi(d_mu^l F) : l <= p}, p = #{a_i = -1}.

    The left side is sampled at p + 2 distinct values u = 1, ..., p + 2.
    """
    values = shift_values(spec, mu)
    p = list(abar).count(-1)
    polarised = sym_at(spec, F, abar)
    images = [rho_mu_u(spec, polarised, values, u) for u in range(1, p + 3)]
    targets = [symmetrize(spec, directional_derivative(F, values, l)) for l in range(p + 1)]
    return same_span([x for x in images if x], [x for x in targets if x])


def centralizer_dimension(spec, mu):
    return spec.dim - linalg.rank(spec.ad_matrix(shift_element(spec, mu)))


def is_regular(spec, mu):
    return centralizer_dimension(spec, mu) == spec.rank


def casimir_word_identities(spec):
    """(sum x_a x_b x^b x^a - H^2, sum x_a x_b x^a x^b - H^2 - c1 H) in U(g); both vanish."""
    engine = get_enveloping(spec)
    c1, _ = casimir_constant(spec)
    H = symmetrize(spec, casimir_poly(spec))
    terms = spec.casimir_terms()
    nested, crossed = NCPoly(), NCPoly()
    for a, a_dual, c in terms:
        for b, b_dual, d in terms:
            x = [LoopVar(0, 0, i) for i in (a, b, b_dual, a_dual)]
            nested = nested + engine.normal_order(x).scale(c * d)
            y = [LoopVar(0, 0, i) for i in (a, b, a_dual, b_dual)]
            crossed = crossed + engine.normal_order(y).scale(c * d)
    square = engine.mul(H, H)
    return nested - square, crossed - square - H.scale(c1)


def g2_qmf(mu, jobs=1):
    """Generators mu, H, varpi(d_mu^m Htilde) (0 <= m <= 5) of the G2 shift algebra and their checks.

    Returns:
        dict: generators, failures (pairwise commutators), y_parts (u-power -> in span),
        centralizer_dim
    """
    spec = get_algebra('g2')
    dim = centralizer_dimension(spec, mu)
    if dim != spec.rank:
        raise ValueError("Invalid shift: centralizer dimension {} is not {}".format(dim, spec.rank))
    engine = get_enveloping(spec)
    values = shift_values(spec, mu)

    mu_elem = engine.from_linear(shift_element(spec, mu))
    H = symmetrize(spec, casimir_poly(spec))
    generators = [mu_elem, H] + qmf_generators(spec, values, [g2_Htilde()])
    failures = commute_check(spec, generators, jobs)

    delta2, _ = g2_invariants()
    Y = rho_mu_graded(spec, sym_tau_apply(spec, delta2 ** 2, 2), values)
    basis = [NCPoly.one(), mu_elem, engine.mul(mu_elem, mu_elem), H, engine.mul(mu_elem, H), engine.mul(H, H)]
    y_parts = {d: same_span(basis, basis + [part]) for d, part in sorted(Y.items())}
    return {'generators': generators, 'failures': failures, 'y_parts': y_parts, 'centralizer_dim': dim}
