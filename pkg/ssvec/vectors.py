"""Explicit Segal-Sugawara vectors and their exact verification.

Every constructor returns an SSCandidate whose value is

    varpi(H[-1]) + sum_r c_r varpi(tau^2r H_r[-1]) . 1

in U(t^-1 g[t^-1]); ``meta['terms']`` lists the (coefficient, invariant, 2r)
triples the value was assembled from.
"""
import json
from concurrent.futures import ProcessPoolExecutor
from math import comb

from invariants.classical import delta_sl, delta_sp, pfaffian, phi_so
from invariants.g2inv import g2_Htilde, g2_invariants
from invariants.independence import PUBLISHED_SEEDS, SEED_RANGE, independence_check
from liealg.algebras import get_algebra
from mmap.lift import G2_CONSTANTS, R_so_vector, lift_to_sym
from mmap.matpoly import m3
from runner.utils import get_kernel_logger
from uea.pbw import NCPoly, get_enveloping
from uea.symmetrise import is_omega_eigen, sym_tau_apply, symmetrize

logger = get_kernel_logger('ssvec')

SUPPORTED_FAMILIES = ['A', 'C', 'BD', 'Pf', 'G2']
SUPPORTED_FORMS = ['intro', 'ssym']


class SSCandidate:
    """A candidate element of the Feigin-Frenkel centre.

    Args:
        spec (LieAlgebraSpec): the algebra g
        value (NCPoly): element of U(t^-1 g[t^-1])
        meta (dict): family, n, k and the formula terms
        top (CommPoly): the invariant whose [-1]-shift is the symbol
    """

    def __init__(self, spec, value, meta, top=None):
        self.spec = spec
        self.value = value
        self.meta = meta
        self.top = top

    def __repr__(self):
        return 'SSCandidate({}, {} terms)'.format(self.meta.get('name'), len(self.value))

    def degree(self):
        return self.value.filtration_degree()

    def symbol(self):
        """gr(value) with the [-1] grading removed."""
        return self.value.gr().strip_grading()

    def is_omega_eigen(self):
        return is_omega_eigen(self.spec, self.value, (-1) ** self.degree())

    def to_dict(self):
        return {'algebra': [self.spec.family, self.spec.rank_n], 'meta': self.meta,
                'value': self.value.to_dict(self.spec)}

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text):
        data = json.loads(text) if isinstance(text, str) else text
        spec = get_algebra(*data['algebra'])
        return cls(spec, NCPoly.from_json(data['value'], spec), data['meta'])


def _assemble(spec, name, top, corrections, meta):
    """varpi(top[-1]) + sum c varpi(tau^r lower[-1]).1 over (c, lower, r, lower_name)."""
    value = symmetrize(spec, top.shift(-1))
    terms = [['1', name, 0]]
    for c, lower, r, lower_name in corrections:
        if not c or not lower:
            continue
        logger.debug("Adding {} * varpi(tau^{} {}[-1]).1".format(c, r, lower_name))
        value = value + sym_tau_apply(spec, lower, r).scale(c)
        terms.append([str(c), lower_name, r])
    meta = dict(meta, name=name, terms=terms)
    return SSCandidate(spec, value, meta, top)


def ss_typeA(n, k, form='ssym'):
    """Type A vector for sl_n.

    Args:
        n (int): sl_n
        k (int): 2 <= k <= n, degree of the top invariant Dtilde_k
        form (string): 'ssym' sums over r < k/2, 'intro' over r < (k-1)/2;
            they differ by the Dtilde_1 = 0 term only

    Returns:
        SSCandidate
    """
    assert form in SUPPORTED_FORMS, 'Invalid type A form: {}'.format(form)
    if not 2 <= k <= n:
        raise ValueError("Invalid grid for type A: n={}, k={}".format(n, k))
    spec = get_algebra('sl', n)
    corrections = []
    r = 1
    while (2 * r < k - 1) if form == 'intro' else (2 * r < k):
        corrections.append((comb(n - k + 2 * r, 2 * r), delta_sl(n, k - 2 * r), 2 * r,
                            'DeltaTilde_{}'.format(k - 2 * r)))
        r += 1
    return _assemble(spec, 'DeltaTilde_{}'.format(k), delta_sl(n, k), corrections,
                     {'family': 'A', 'n': n, 'k': k, 'form': form})


def ss_generic(spec, H, name='H'):
    """varpi(H[-1]) + sum_{1 <= r < k/2} binom(k, 2r) varpi(tau^2r m^r(H)[-1]).1.

    Raises LiftError when some m^r(H) does not lie in S(g).
    """
    k = H.degree()
    corrections = []
    image = H
    r = 1
    while 2 * r < k:
        image = lift_to_sym(spec, m3(spec, image), r)
        if not image:
            break
        corrections.append((comb(k, 2 * r), image, 2 * r, 'm^{}({})'.format(r, name)))
        r += 1
    return _assemble(spec, name, H, corrections,
                     {'family': 'generic', 'n': spec.rank_n, 'k': k, 'algebra': spec.name})


def ss_typeC(two_n, k):
    n = two_n // 2
    if two_n % 2 or not 1 <= k <= n:
        raise ValueError("Invalid grid for type C: 2n={}, k={}".format(two_n, k))
    spec = get_algebra('sp', two_n)
    corrections = [(comb(2 * n - 2 * k + 2 * r + 1, 2 * r), delta_sp(two_n, k - r), 2 * r,
                    'Delta_{}'.format(2 * k - 2 * r)) for r in range(1, k)]
    return _assemble(spec, 'Delta_{}'.format(2 * k), delta_sp(two_n, k), corrections,
                     {'family': 'C', 'n': two_n, 'k': k})


def ss_typeBD(n, k):
    """so_n vector on Phi_2k; for even n the range stops below the Pfaffian degree."""
    limit = n // 2 - 1 if n % 2 == 0 else (n - 1) // 2
    if n < 3 or not 1 <= k <= limit:
        raise ValueError("Invalid grid for types B/D: n={}, k={}".format(n, k))
    spec = get_algebra('so', n)
    corrections = [(R_so_vector(n, k, r), phi_so(n, k - r), 2 * r, 'Phi_{}'.format(2 * k - 2 * r))
                   for r in range(1, k)]
    return _assemble(spec, 'Phi_{}'.format(2 * k), phi_so(n, k), corrections,
                     {'family': 'BD', 'n': n, 'k': k})


def ss_pfaffian(two_n):
    spec = get_algebra('so_skew', two_n)
    return _assemble(spec, 'Pf', pfaffian(two_n), [], {'family': 'Pf', 'n': two_n, 'k': two_n // 2})


def ss_g2():
    spec = get_algebra('g2')
    delta2, _ = g2_invariants()
    corrections = [(G2_CONSTANTS['R1'], delta2 ** 2, 2, 'Delta_2^2'),
                   (G2_CONSTANTS['R2'], delta2, 4, 'Delta_2')]
    meta = {'family': 'G2', 'n': None, 'k': 6, 'b': str(G2_CONSTANTS['b'])}
    return _assemble(spec, 'Htilde', g2_Htilde(G2_CONSTANTS['b']), corrections, meta)


def get_candidate(family, n=None, k=None):
    """Factory over SUPPORTED_FAMILIES."""
    assert family in SUPPORTED_FAMILIES, 'Invalid family: {}'.format(family)
    if family != 'G2' and n is None or family in ('A', 'C', 'BD') and k is None:
        raise ValueError("Invalid grid for {}: n={}, k={}".format(family, n, k))
    if family == 'A':
        return ss_typeA(n, k)
    if family == 'C':
        return ss_typeC(n, k)
    if family == 'BD':
        return ss_typeBD(n, k)
    if family == 'Pf':
        return ss_pfaffian(n)
    return ss_g2()


def complete_set(family, n=None):
    """rank-many vectors of one family; so_2l is excluded (the Pfaffian lives on another basis)."""
    if family == 'A':
        return [ss_typeA(n, k) for k in range(2, n + 1)]
    if family == 'C':
        return [ss_typeC(n, k) for k in range(1, n // 2 + 1)]
    if family == 'BD' and n % 2:
        return [ss_typeBD(n, k) for k in range(1, (n - 1) // 2 + 1)]
    if family == 'G2':
        spec = get_algebra('g2')
        delta2, _ = g2_invariants()
        return [_assemble(spec, 'Delta_2', delta2, [], {'family': 'G2', 'n': None, 'k': 2}), ss_g2()]
    raise ValueError("Invalid family for a complete set: {}".format(family))


# ---------------------------------------------------------------------------
# verification

def _commutator_chunk(args):
    spec, terms = args
    return get_enveloping(spec).casimir_commutator(NCPoly(terms), -1, -1).terms


def verify_central(candidate, jobs=1, chunks_per_job=4):
    """[H[-1], S] as an NCPoly; S is central exactly when the remainder is zero.

    With jobs > 1 the terms of S are split into chunks commuted in worker
    processes and summed back in chunk order.
    """
    spec, value = candidate.spec, candidate.value
    if jobs <= 1 or len(value) < 2:
        return get_enveloping(spec).casimir_commutator(value, -1, -1)
    words = sorted(value.terms)
    size = max(1, -(-len(words) // (jobs * chunks_per_job)))
    chunks = [(spec, {w: value.terms[w] for w in words[i:i + size]}) for i in range(0, len(words), size)]
    logger.debug("Commuting {} terms in {} chunks".format(len(words), len(chunks)))
    out = NCPoly()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_commutator_chunk, chunks):
            out = out + NCPoly._raw(part)
    return out


def verify_complete_set(candidates, seeds=PUBLISHED_SEEDS, value_range=SEED_RANGE):
    """Algebraic independence of the symbols of rank-many candidates on one algebra."""
    candidates = list(candidates)
    if not candidates:
        raise ValueError("Invalid set: no candidates")
    spec = candidates[0].spec
    if any(c.spec is not spec for c in candidates):
        raise ValueError("Invalid set: candidates live on different algebras")
    if len(candidates) != spec.rank:
        raise ValueError("Invalid set size: {} candidates for rank {}".format(len(candidates), spec.rank))
    return independence_check([c.symbol() for c in candidates], seeds, value_range)


def central_report(candidate, jobs=1):
    """{name, family, n, k, central, remainder_terms} for one candidate."""
    remainder = verify_central(candidate, jobs)
    return {'name': candidate.meta.get('name'), 'family': candidate.meta.get('family'),
            'n': candidate.meta.get('n'), 'k': candidate.meta.get('k'),
            'central': not remainder, 'remainder_terms': len(remainder)}

