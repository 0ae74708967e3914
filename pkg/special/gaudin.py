"""Evaluation of U(t^-1 g[t^-1]) at points: Gaudin Hamiltonians and the two-point algebra.

U(g)^(x)n is realised as U(g + ... + g) whose generators carry the site
number 1..n as their component.
"""
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations

from liealg import linalg
from runner.utils import get_kernel_logger
from sympoly.brackets import bi_degree_components
from sympoly.poly import LoopVar
from uea.pbw import NCPoly, get_enveloping
from uea.symmetrise import symmetrize

logger = get_kernel_logger('gaudin')


def check_points(zbar):
    zbar = [Fraction(z) for z in zbar]
    if not zbar:
        raise ValueError("Invalid evaluation points: empty list")
    if any(z == 0 for z in zbar):
        raise ValueError("Invalid evaluation points: {} contains zero".format([str(z) for z in zbar]))
    if len(set(zbar)) != len(zbar):
        raise ValueError("Invalid evaluation points: {} has coincident entries".format([str(z) for z in zbar]))
    return zbar


def gaudin_rho(spec, X, zbar):
    """x t^d -> sum_k z_k^d x^(k), extended multiplicatively.

    Args:
        spec (LieAlgebraSpec): the algebra g
        X (NCPoly): tau-free element of U(t^-1 g[t^-1])
        zbar (sequence): pairwise distinct nonzero rationals, one per site

    Returns:
        NCPoly over U(g + ... + g), sites numbered from 1
    """
    zbar = check_points(zbar)
    engine = get_enveloping(spec)
    out = NCPoly()
    for word, c in X.terms.items():
        image = NCPoly.one(c)
        for g in reversed(word):
            if g.tdeg >= 0 or g.component:
                raise ValueError("Invalid letter for evaluation: {}".format(g))
            step = NCPoly()
            for site, z in enumerate(zbar, start=1):
                step = step + engine.lmul(LoopVar(0, site, g.index), image).scale(z ** g.tdeg)
            image = step
        out = out + image
    return out


def site_casimir(spec, k, j):
    """sum_a x_a^(k) x^a(j) in U(g + ... + g)."""
    engine = get_enveloping(spec)
    out = NCPoly()
    for a, b, c in spec.casimir_terms():
        out = out + engine.normal_order((LoopVar(0, k, a), LoopVar(0, j, b))).scale(c)
    return out


def gaudin_quadratic(spec, k, zbar):
    """H_k = sum_{j != k} sum_a x_a^(k) x^a(j) / (z_k - z_j); sites from 1."""
    zbar = check_points(zbar)
    if not 1 <= k <= len(zbar):
        raise ValueError("Invalid site: {}".format(k))
    out = NCPoly()
    for j, zj in enumerate(zbar, start=1):
        if j != k:
            out = out + site_casimir(spec, k, j).scale(1 / (zbar[k - 1] - zj))
    return out


def diagonal(spec, x, n_sites):
    """Delta(x) = sum_k x^(k) for an algebra element given by coordinates."""
    engine = get_enveloping(spec)
    out = NCPoly()
    for site in range(1, n_sites + 1):
        out = out + engine.from_linear(x, 0, site)
    return out


def two_point_generators(spec, H_list):
    """varpi((H_k)_{d-j, j}) for every H_k and 0 <= j <= d_k."""
    out = []
    for H in H_list:
        for part in bi_degree_components(H.strip_grading()):
            if part:
                out.append(symmetrize(spec, part))
    return out


def _coordinates(elems):
    words = sorted({w for e in elems for w in e.terms})
    return [[e.terms.get(w, Fraction(0)) for w in words] for e in elems]


def same_span(left, right):
    """Equality of the linear spans of two families of NCPolys."""
    rows = _coordinates(list(left) + list(right))
    return linalg.same_span(rows[:len(left)], rows[len(left):])


def two_point_span_check(spec, candidates, H_list, zbar=(1, -1)):
    """span{rho(tau^m S_k) : m <= d_k} = span{varpi((H_k)_{d-j, j})} at two points."""
    engine = get_enveloping(spec)
    images = []
    for candidate in candidates:
        value = candidate.value
        for _ in range(candidate.degree() + 1):
            images.append(gaudin_rho(spec, value, zbar))
            value = engine.tau_derivation(value)
    return same_span(images, two_point_generators(spec, H_list))


# ---------------------------------------------------------------------------
# commutativity

def _commutator_pair(args):
    spec, i, j, a, b = args
    return i, j, get_enveloping(spec).commutator(NCPoly(a), NCPoly(b)).terms


def commute_check(spec, elems, jobs=1):
    """Nonzero pairwise commutators as certificates {pair, terms, commutator}; [] for a commutative family."""
    elems = list(elems)
    pairs = list(combinations(range(len(elems)), 2))
    if jobs > 1 and len(pairs) > 1:
        tasks = [(spec, i, j, elems[i].terms, elems[j].terms) for i, j in pairs]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_commutator_pair, tasks))
    else:
        engine = get_enveloping(spec)
        results = [(i, j, engine.commutator(elems[i], elems[j]).terms) for i, j in pairs]
    failures = []
    for i, j, terms in results:
        if terms:
            logger.debug("Pair ({}, {}) does not commute: {} terms".format(i, j, len(terms)))
            failures.append({'pair': [i, j], 'terms': len(terms), 'commutator': NCPoly(terms)})
    return failures


def commutativity_report(spec, elems, jobs=1):
    failures = commute_check(spec, elems, jobs)
    n = len(elems)
    return {'pairs_checked': n * (n - 1) // 2, 'failures': len(failures),
            'failed_pairs': [f['pair'] for f in failures]}


def gaudin_experiment(spec, candidates, zbar):
    """Commutators of rho_z(S) with every quadratic H_k, one row per candidate."""
    zbar = check_points(zbar)
    engine = get_enveloping(spec)
    quadratics = [gaudin_quadratic(spec, k, zbar) for k in range(1, len(zbar) + 1)]
    rows = []
    for candidate in candidates:
        image = gaudin_rho(spec, candidate.value, zbar)
        failures = [k for k, h in enumerate(quadratics, start=1) if engine.commutator(h, image)]
        rows.append({'name': candidate.meta.get('name'), 'sites': len(zbar), 'failures': failures})
    return rows
