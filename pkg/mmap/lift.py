"""Pulling m_3-images back to S(g) and identifying them against named invariants."""
from fractions import Fraction
from math import comb, factorial
from typing import NamedTuple

from liealg import linalg
from mmap.matpoly import m3, m3_coefficient, sparse_ad, sparse_add, sparse_trace_product
from runner.utils import get_kernel_logger
from sympoly.poly import CommPoly

logger = get_kernel_logger('lift')

LIFTED = 'lifted'
PULLBACK_FAILED = 'pullback_failed'
ASYM = 'asym'


class LiftError(Exception):
    """An m_3-image that is not in S(g).

    status is 'pullback_failed' (a coefficient matrix is not in ad(g); the
    residual is the certificate) or 'asym' (in g (x) S but not symmetric).
    """

    def __init__(self, status, monomial=None, certificate=None, step=1):
        self.status = status
        self.monomial = monomial
        self.certificate = certificate
        self.step = step
        message = 'not in g (x) S' if status == PULLBACK_FAILED else 'in g (x) S but not symmetric'
        super().__init__("Lift failed at step {}: {}".format(step, message))


class ScalarMismatch(ValueError):
    pass


class Pullback(NamedTuple):
    element: dict
    residual: dict

    @property
    def ok(self):
        return not self.residual


def _pullback_data(spec):
    """Indices of an independent family of ad matrices and the inverse of its trace Gram."""
    if 'pullback' not in spec.cache:
        flat = []
        for a in range(spec.dim):
            ad = sparse_ad(spec, a)
            flat.append([ad.get((r, c), Fraction(0)) for r in range(spec.dim) for c in range(spec.dim)])
        chosen = linalg.independent_rows(flat)
        gram = [[sparse_trace_product(sparse_ad(spec, a), sparse_ad(spec, b)) for b in chosen] for a in chosen]
        spec.cache['pullback'] = (chosen, linalg.invert(gram))
    return spec.cache['pullback']


def _as_sparse(matrix):
    if isinstance(matrix, dict):
        return matrix
    return {(r, c): Fraction(v) for r, row in enumerate(matrix) for c, v in enumerate(row) if v}


def ad_pullback(spec, matrix):
    """Solves ad(xi) = M over Q.

    The projection xi* is taken orthogonally for the trace pairing on gl(g);
    M - ad(xi*) is zero exactly when M lies in ad(g), otherwise it is returned
    as the certificate.

    Args:
        spec (LieAlgebraSpec): the algebra
        matrix (dict or list): sparse {(row, col): value} or dense rows in basis coordinates

    Returns:
        Pullback(element, residual)
    """
    matrix = _as_sparse(matrix)
    chosen, gram_inv = _pullback_data(spec)
    rhs = [sparse_trace_product(sparse_ad(spec, a), matrix) for a in chosen]
    coeffs = linalg.matvec(gram_inv, rhs)
    element = {a: c for a, c in zip(chosen, coeffs) if c}
    residual = dict(matrix)
    for a, c in element.items():
        residual = sparse_add(residual, sparse_ad(spec, a), -c)
    return Pullback(element, residual)


def lift_to_sym(spec, M, step=1):
    """H' in S^(k-2)(g) with m_3(H) = H' under the canonical embedding, or LiftError."""
    lifted = CommPoly()
    tensor = {}
    for mono in sorted(M.terms):
        pulled = ad_pullback(spec, M.terms[mono])
        if not pulled.ok:
            logger.debug("Pullback failed at cofactor {}".format(mono))
            raise LiftError(PULLBACK_FAILED, mono, pulled.residual, step)
        for a, c in pulled.element.items():
            tensor[(a, mono)] = c
        lifted = lifted + CommPoly.linear(pulled.element) * CommPoly({mono: 1})

    # T = (1 / (k - 2)) sum_b x_b (x) dH'/dx_b
    embedded = {}
    for d in lifted.degrees():
        part = lifted.homogeneous_part(d)
        for v in part.variables():
            for mono, c in part.diff(v).terms.items():
                embedded[(v.index, mono)] = embedded.get((v.index, mono), 0) + c / d
    embedded = {key: c for key, c in embedded.items() if c}
    if embedded != tensor:
        logger.debug("Lift of {} cofactors is not symmetric".format(len(M)))
        raise LiftError(ASYM, None, None, step)
    return lifted


def m_power(spec, f, r):
    """m^r(F): r rounds of lift_to_sym after m_3; LiftError names the failing round."""
    if r < 1:
        raise ValueError("Invalid power of m: {}".format(r))
    out = f
    for step in range(1, r + 1):
        out = lift_to_sym(spec, m3(spec, out), step)
    return out


def identify_scalar(P, Q):
    """c with P = c Q exactly (CommPoly or NCPoly); ScalarMismatch otherwise."""
    if not Q:
        if P:
            raise ScalarMismatch("Invalid target: zero polynomial against a nonzero input")
        return Fraction(0)
    if not P:
        return Fraction(0)
    mono, q = next(iter(sorted(Q.terms.items())))
    c = P.terms.get(mono, Fraction(0)) / q
    if not c or set(P.terms) != set(Q.terms) or any(P.terms[m] != c * v for m, v in Q.terms.items()):
        raise ScalarMismatch("Invalid scalar identification: input is not a multiple of the target")
    return c


# ---------------------------------------------------------------------------
# closed forms

def scalar_typeA(n, k, r=1):
    """m^r(Dtilde_k) = ((2r)!(k - 2r)!/k!) binom(n - k + 2r, 2r) Dtilde_(k - 2r)."""
    return Fraction(factorial(2 * r) * factorial(k - 2 * r), factorial(k)) * comb(n - k + 2 * r, 2 * r)


def scalar_typeC(n, k, r=1):
    """m^r(Delta_2k) of sp_2n against Delta_(2k - 2r)."""
    return Fraction(factorial(2 * k - 2 * r) * factorial(2 * r), factorial(2 * k)) \
        * comb(2 * n - 2 * k + 2 * r + 1, 2 * r)


def R_so(n, k):
    """m(Phi_2k) = R(k) Phi_(2k - 2) for so_n."""
    return Fraction(comb(n, 2) + 2 * n * (k - 1) + (k - 1) * (2 * k - 3), k * (2 * k - 1))


def scalar_so(n, k, r=1):
    out = Fraction(1)
    for u in range(r):
        out *= R_so(n, k - u)
    return out


def R_so_vector(n, k, r):
    """Coefficient of varpi(tau^2r Phi_(2k - 2r)[-1]).1 in the type B/D vector."""
    out = Fraction(2 ** r, factorial(2 * r))
    for u in range(1, r + 1):
        out *= comb(n, 2) + 2 * n * (k - u) + (k - u) * (2 * k - 2 * u - 1)
    return out


# G2: m(Htilde) = -13/12 Delta_2^2, m(Delta_2^2) = 20/3 Delta_2
G2_CONSTANTS = {
    'b': Fraction(25, 108),
    'm_Htilde': Fraction(-13, 12),
    'm_Delta2_sq': Fraction(20, 3),
    'R1': Fraction(-65, 4),
    'R2': Fraction(-325, 3),
}


def solve_b(spec, delta6, delta2_cubed, cofactors=None):
    """The b making m_3(Delta_6 - b Delta_2^3) pull back, from the residual condition.

    The pullback residual is linear in the matrix, so every entry of
    res(Delta_6) - b res(Delta_2^3) must vanish. Restricting to ``cofactors``
    uses only those coefficient matrices.
    """
    if cofactors is None:
        left, right = m3(spec, delta6), m3(spec, delta2_cubed)
        monos = sorted(set(left.terms) | set(right.terms))
        pairs = [(left.terms.get(m, {}), right.terms.get(m, {})) for m in monos]
    else:
        pairs = [(m3_coefficient(spec, delta6, c), m3_coefficient(spec, delta2_cubed, c)) for c in cofactors]
    b = None
    residuals = [(ad_pullback(spec, x).residual, ad_pullback(spec, y).residual) for x, y in pairs]
    for res6, res2 in residuals:
        for key, v in res2.items():
            if b is None:
                b = res6.get(key, Fraction(0)) / v
    if b is None:
        raise ScalarMismatch("Invalid b-solve: no residual to match")
    for res6, res2 in residuals:
        if sparse_add(res6, res2, -b):
            raise ScalarMismatch("Invalid b-solve: residuals are not proportional")
    return b


def lift_report(spec, f, r, target=None, input_name=None, target_name=None):
    """JSON report {input, r, status, scalar, target} of m^r(F) against an optional target."""
    report = {'input': input_name, 'r': r, 'status': LIFTED, 'scalar': None, 'target': target_name}
    try:
        image = m_power(spec, f, r)
    except LiftError as e:
        report['status'] = e.status
        return report
    if target is not None:
        try:
            report['scalar'] = str(identify_scalar(image, target))
        except ScalarMismatch:
            report['scalar'] = None
    return report
