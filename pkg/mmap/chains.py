"""m^r chains of the named invariants against their closed forms."""
from fractions import Fraction

from invariants.classical import delta_sl, delta_sp, pfaffian, phi_so
from invariants.g2inv import g2_Htilde, g2_invariants
from liealg.algebras import get_algebra
from mmap.lift import (G2_CONSTANTS, LIFTED, LiftError, ScalarMismatch, identify_scalar, m_power,
                       scalar_so, scalar_typeA, scalar_typeC)
from sympoly.poly import CommPoly

SUPPORTED_CHAINS = ['A', 'C', 'BD', 'Pf', 'G2']


def chain_inputs(family, n=None, k=None, r=1):
    """(spec, F, target, expected) with m^r(F) = expected * target predicted.

    Args:
        family (string): one of SUPPORTED_CHAINS
        n (int): sl_n, sp_n (n even), so_n or so_skew n
        k (int): degree index of the invariant (ignored for Pf and G2)
        r (int): number of m-rounds

    Returns:
        tuple (spec, F, target, expected); target is zero when the image must vanish
    """
    assert family in SUPPORTED_CHAINS, 'Invalid chain family: {}'.format(family)
    if r < 1:
        raise ValueError("Invalid power of m: {}".format(r))
    if family != 'G2' and n is None or family in ('A', 'C', 'BD') and k is None:
        raise ValueError("Invalid chain for {}: n={}, k={}".format(family, n, k))
    if family == 'A':
        if not 2 * r < k <= n:
            raise ValueError("Invalid type A chain: n={}, k={}, r={}".format(n, k, r))
        return get_algebra('sl', n), delta_sl(n, k), delta_sl(n, k - 2 * r), scalar_typeA(n, k, r)
    if family == 'C':
        if not r < k <= n // 2:
            raise ValueError("Invalid type C chain: 2n={}, k={}, r={}".format(n, k, r))
        return get_algebra('sp', n), delta_sp(n, k), delta_sp(n, k - r), scalar_typeC(n // 2, k, r)
    if family == 'BD':
        if not r < k:
            raise ValueError("Invalid type B/D chain: n={}, k={}, r={}".format(n, k, r))
        return get_algebra('so', n), phi_so(n, k), phi_so(n, k - r), scalar_so(n, k, r)
    if family == 'Pf':
        return get_algebra('so_skew', n), pfaffian(n), CommPoly(), Fraction(0)
    if r > 2:
        raise ValueError("Invalid G2 chain length: {}".format(r))
    delta2, _ = g2_invariants()
    expected = G2_CONSTANTS['m_Htilde'] * (G2_CONSTANTS['m_Delta2_sq'] if r == 2 else 1)
    return get_algebra('g2'), g2_Htilde(G2_CONSTANTS['b']), delta2 ** (3 - r), expected


def chain_report(family, n=None, k=None, r=1):
    """{family, n, k, r, status, scalar, expected, match} for one chain."""
    spec, f, target, expected = chain_inputs(family, n, k, r)
    report = {'family': family, 'n': n, 'k': k, 'r': r, 'status': LIFTED, 'scalar': None,
              'expected': str(expected), 'match': False}
    try:
        image = m_power(spec, f, r)
    except LiftError as e:
        report['status'] = e.status
        return report
    if not target:
        report['scalar'] = '0' if not image else None
        report['match'] = not image
        return report
    try:
        scalar = identify_scalar(image, target)
    except ScalarMismatch:
        return report
    report['scalar'] = str(scalar)
    report['match'] = scalar == expected
    return report
