"""gl(g)-valued polynomials and the maps m_3, m_5 on S(g)."""
from fractions import Fraction
from itertools import permutations, product
from math import comb, factorial

from sympoly.brackets import lie_action
from sympoly.poly import CommPoly, mono_degree, mono_divide, mono_vars


def sparse_matmul(x, y):
    rows_of_y = {}
    for (r, c), v in y.items():
        rows_of_y.setdefault(r, []).append((c, v))
    out = {}
    for (r, k), v in x.items():
        for c, w in rows_of_y.get(k, ()):
            out[(r, c)] = out.get((r, c), 0) + v * w
    return {key: v for key, v in out.items() if v}


def sparse_add(x, y, c=1):
    out = dict(x)
    for key, v in y.items():
        value = out.get(key, 0) + c * v
        if value:
            out[key] = value
        else:
            out.pop(key, None)
    return out


def sparse_ad(spec, a):
    cache = spec.cache.setdefault('sparse_ad', {})
    if a not in cache:
        cache[a] = {(c, j): v for j in range(spec.dim) for c, v in spec.bracket[a][j].items()}
    return cache[a]


def sparse_ad_elem(spec, x):
    out = {}
    for a, c in x.items():
        out = sparse_add(out, sparse_ad(spec, a), c)
    return out


def sparse_trace_product(x, y):
    return sum((v * y.get((c, r), 0) for (r, c), v in x.items()), Fraction(0))


class MatPoly:
    """Element of gl(g) (x) S(g): cofactor monomial -> sparse dim x dim matrix."""

    def __init__(self, spec, terms=None, degree=None):
        self.spec = spec
        self.terms = {m: M for m, M in (terms or {}).items() if M}
        self.degree = degree

    def add(self, mono, matrix, coeff=1):
        current = sparse_add(self.terms.get(mono, {}), matrix, coeff)
        if current:
            self.terms[mono] = current
        else:
            self.terms.pop(mono, None)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, MatPoly) and self.terms == other.terms

    def __sub__(self, other):
        out = MatPoly(self.spec, dict(self.terms), self.degree)
        for m, M in other.terms.items():
            out.add(m, M, -1)
        return out

    def scale(self, c):
        return MatPoly(self.spec, {m: {k: c * v for k, v in M.items()} for m, M in self.terms.items()},
                       self.degree)

    def entry(self, r, c):
        return CommPoly({m: M.get((r, c), 0) for m, M in self.terms.items()})

    def is_skew(self):
        """Every coefficient matrix M satisfies B M = -(B M)^T."""
        form = self.spec.form
        n = self.spec.dim
        for M in self.terms.values():
            bm = {}
            for (r, c), v in M.items():
                for i in range(n):
                    if form[i][r]:
                        bm[(i, c)] = bm.get((i, c), 0) + form[i][r] * v
            for (i, c), v in bm.items():
                if v + bm.get((c, i), 0) != 0:
                    return False
        return True

    def weight_zero(self):
        """Zero total weight: each term commutes with the Cartan through the combined action."""
        return all(not matpoly_action(self.spec, {h: Fraction(1)}, self) for h in self.spec.cartan)


def matpoly_action(spec, x, M):
    """x . (A (x) R) = [ad x, A] (x) R + A (x) {x, R}."""
    adx = sparse_ad_elem(spec, x)
    out = MatPoly(spec, {}, M.degree)
    for mono, A in M.terms.items():
        comm = sparse_add(sparse_matmul(adx, A), sparse_matmul(A, adx), -1)
        if comm:
            out.add(mono, comm)
        for m2, c in lie_action(spec, x, CommPoly({mono: 1})).terms.items():
            out.add(m2, A, c)
    return out


def _sym_product(spec, indices, key):
    """Average of ad(y_s(1)) ... ad(y_s(p)) over all orderings of the given basis indices."""
    cache = spec.cache.setdefault(key, {})
    indices = tuple(sorted(indices))
    if indices not in cache:
        total = {}
        orderings = list(permutations(indices))
        for order in orderings:
            prod_matrix = sparse_ad(spec, order[0])
            for a in order[1:]:
                prod_matrix = sparse_matmul(prod_matrix, sparse_ad(spec, a))
                if not prod_matrix:
                    break
            total = sparse_add(total, prod_matrix)
        weight = Fraction(1, len(orderings))
        cache[indices] = {k: v * weight for k, v in total.items()}
    return cache[indices]


def _submultisets(mono, size):
    """(sub-monomial, number of position choices) for sub-multisets of the given size."""
    variables = [v for v, _ in mono]
    ranges = [range(min(e, size) + 1) for _, e in mono]
    for exps in product(*ranges):
        if sum(exps) != size:
            continue
        count = 1
        chosen = []
        for v, e, t in zip(variables, (e for _, e in mono), exps):
            count *= comb(e, t)
            chosen.extend([v] * t)
        yield chosen, count


def m_odd(spec, f, p):
    """m_p on S^k(g): (p!(k-p)!/k!) sum over p-element position sets of the averaged ad-product."""
    out = MatPoly(spec)
    degrees = f.degrees()
    if not f or max(degrees) < p:
        out.degree = max(degrees, default=p) - p
        return out
    key = 'sym{}'.format(p)
    for mono, coeff in f.terms.items():
        k = mono_degree(mono)
        if k < p:
            continue
        weight = coeff * Fraction(factorial(p) * factorial(k - p), factorial(k))
        for chosen, count in _submultisets(mono, p):
            matrix = _sym_product(spec, [v.index for v in chosen], key)
            if matrix:
                out.add(mono_divide(mono, chosen), matrix, weight * count)
    out.degree = max(degrees) - p
    return out


def m3(spec, f):
    """The map m: S^k(g) -> Lambda^2 g (x) S^(k-3)(g); zero for k <= 2."""
    return m_odd(spec, f, 3)


def m5(spec, f):
    """Five-factor map computed directly on S^k; oracle for m_3 applied twice."""
    return m_odd(spec, f, 5)


def m3_compose(spec, M):
    """m_3 applied to A (x) varpi(R): A times the averaged product of two more cofactor letters."""
    out = MatPoly(spec, {}, None if M.degree is None else M.degree - 2)
    for mono, A in M.terms.items():
        j = mono_degree(mono)
        if j < 2:
            continue
        weight = Fraction(2 * factorial(j - 2), factorial(j))
        for chosen, count in _submultisets(mono, 2):
            pair = _sym_product(spec, [v.index for v in chosen], 'sym2')
            matrix = sparse_matmul(A, pair)
            if matrix:
                out.add(mono_divide(mono, chosen), matrix, weight * count)
    return out


def m3_coefficient(spec, f, cofactor_vars):
    """The matrix multiplying a single cofactor monomial in m_3(f)."""
    total = {}
    for mono, coeff in f.terms.items():
        quotient = mono_divide(mono, cofactor_vars)
        if quotient is None or mono_degree(quotient) != 3:
            continue
        k = mono_degree(mono)
        count = 1
        for v, t in quotient:
            count *= comb(dict(mono)[v], t)
        weight = coeff * count * Fraction(6 * factorial(k - 3), factorial(k))
        total = sparse_add(total, _sym_product(spec, [v.index for v in mono_vars(quotient)], 'sym3'), weight)
    return total


def apply_matrix(matrix, vec):
    """Sparse matrix applied to a coordinate dict."""
    out = {}
    for (r, c), v in matrix.items():
        if c in vec:
            out[r] = out.get(r, 0) + v * vec[c]
    return {r: v for r, v in out.items() if v}
