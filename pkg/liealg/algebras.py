import json
from fractions import Fraction
from typing import NamedTuple

import sympy

from liealg import linalg

SUPPORTED_ALGEBRAS = ['gl', 'sl', 'sp', 'so', 'so_skew', 'g2']


class BasisLabel(NamedTuple):
    """Canonical label of a basis vector.

    kind is 'E' (gl, sl off-diagonal), 'H' (sl diagonal), 'F' (sp/so
    realisation), 'Fo' (plain skew realisation) or 'g2' (named letters).
    """
    kind: str
    i: int = 0
    j: int = 0
    letter: str = ''

    def __str__(self):
        if self.kind == 'g2':
            return 'g2:{}'.format(self.letter)
        if self.kind == 'H':
            return 'H[{}]'.format(self.i)
        return '{}[{},{}]'.format(self.kind, self.i, self.j)


class DualBasisPair(NamedTuple):
    primal: int
    dual: dict


def _sparse_mul(x, y):
    out = {}
    rows_of_y = {}
    for (r, c), v in y.items():
        rows_of_y.setdefault(r, []).append((c, v))
    for (r, k), v in x.items():
        for c, w in rows_of_y.get(k, ()):
            out[(r, c)] = out.get((r, c), 0) + v * w
    return {key: v for key, v in out.items() if v != 0}


def _trace_product(x, y):
    total = 0
    for (r, c), v in x.items():
        w = y.get((c, r))
        if w is not None:
            total += v * w
    return total


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return linalg.to_fraction(value)


def _is_zero(value):
    if isinstance(value, (Fraction, int)):
        return value == 0
    return sympy.expand(value) == 0


def _invert_gram(gram):
    """Inverse of a Gram matrix; monomial matrices are inverted entrywise."""
    n = len(gram)
    support = [[j for j in range(n) if gram[i][j] != 0] for i in range(n)]
    if all(len(s) == 1 for s in support):
        inv = linalg.zeros(n, n)
        for i, (j,) in enumerate(support):
            inv[j][i] = 1 / gram[i][j]
        return inv
    return linalg.invert(gram)


class LieAlgebraSpec:
    """A finite-dimensional Lie algebra given by a faithful matrix realisation.

    Structure constants, the Gram matrix of the trace form and the dual
    matrices are all derived from the realisation, so every builder only has
    to supply sparse matrices for its basis. The invariant form is
    ``form_scale`` times the trace form of the realisation.

    Args:
        name (str): type + rank tag, e.g. 'sp4'
        basis (list): BasisLabel per basis vector
        matrices (list): sparse realisation {(row, col): value} per basis vector
        size (int): size of the realising matrices
        cartan (list): indices of a Cartan subalgebra
        form_scale (Fraction): B = form_scale * trace form
        family (str): one of SUPPORTED_ALGEBRAS
        rank_n (int): the n of the family tag
    """

    def __init__(self, name, basis, matrices, size, cartan, form_scale=Fraction(1), family=None, rank_n=None):
        self.name = name
        self.family = family
        self.rank_n = rank_n
        self.basis = list(basis)
        self.matrices = list(matrices)
        self.size = size
        self.dim = len(self.basis)
        self.cartan = list(cartan)
        self.rank = len(self.cartan)
        self.form_scale = Fraction(form_scale)
        self.labels = [str(label) for label in self.basis]
        self._index = {label: a for a, label in enumerate(self.labels)}
        # derived data (Casimir, ad matrices, straightening tables) keyed by name
        self.cache = {}

        gram = [[_as_fraction(_trace_product(x, y)) for y in self.matrices] for x in self.matrices]
        self.gram = gram
        gram_inv = _invert_gram(gram)
        self.duals = []
        for a in range(self.dim):
            dual = {}
            for b in range(self.dim):
                if gram_inv[a][b] != 0:
                    for key, v in self.matrices[b].items():
                        dual[key] = dual.get(key, 0) + gram_inv[a][b] * v
            self.duals.append({key: v for key, v in dual.items() if v != 0})

        self.form = [[self.form_scale * g for g in row] for row in gram]
        form_inv = [[g / self.form_scale for g in row] for row in gram_inv]
        self.form_inv = form_inv

        self.bracket = [[None] * self.dim for _ in range(self.dim)]
        for a in range(self.dim):
            self.bracket[a][a] = {}
            for b in range(a + 1, self.dim):
                xy = _sparse_mul(self.matrices[a], self.matrices[b])
                yx = _sparse_mul(self.matrices[b], self.matrices[a])
                comm = dict(xy)
                for key, v in yx.items():
                    comm[key] = comm.get(key, 0) - v
                comm = {key: v for key, v in comm.items() if v != 0}
                coords = self.coords(comm, check=True)
                self.bracket[a][b] = coords
                self.bracket[b][a] = {c: -v for c, v in coords.items()}

    # ------------------------------------------------------------------
    # realisation
    def index_of(self, label):
        try:
            return self._index[str(label)]
        except KeyError:
            raise ValueError("Invalid basis label for {}: {}".format(self.name, label))

    def coords(self, matrix, check=False):
        """Coordinates of the trace-orthogonal projection of ``matrix`` onto the algebra."""
        out = {}
        for a, dual in enumerate(self.duals):
            value = _trace_product(dual, matrix)
            if value != 0:
                value = _as_fraction(value)
                if value != 0:
                    out[a] = value
        if check:
            rebuilt = self.realise(out)
            keys = set(rebuilt) | set(matrix)
            for key in keys:
                if not _is_zero(rebuilt.get(key, 0) - matrix.get(key, 0)):
                    raise ArithmeticError("Bracket leaves the span of the {} basis".format(self.name))
        return out

    def realise(self, vec):
        out = {}
        for a, c in vec.items():
            for key, v in self.matrices[a].items():
                out[key] = out.get(key, 0) + c * v
        return {key: v for key, v in out.items() if v != 0}

    # ------------------------------------------------------------------
    # algebra operations on coordinate dicts
    def bracket_basis(self, a, b):
        return self.bracket[a][b]

    def bracket_elems(self, x, y):
        out = {}
        for a, xa in x.items():
            for b, yb in y.items():
                for c, v in self.bracket[a][b].items():
                    out[c] = out.get(c, 0) + xa * yb * v
        return {c: v for c, v in out.items() if v != 0}

    def form_elems(self, x, y):
        return sum((xa * yb * self.form[a][b] for a, xa in x.items() for b, yb in y.items()), Fraction(0))

    def ad_matrix(self, x):
        """Dense ad(x); column j is [x, x_j]."""
        if isinstance(x, int):
            x = {x: Fraction(1)}
        rows = linalg.zeros(self.dim, self.dim)
        for j in range(self.dim):
            for c, v in self.bracket_elems(x, {j: Fraction(1)}).items():
                rows[c][j] = v
        return rows

    def ad_matrices(self):
        if 'ad' not in self.cache:
            self.cache['ad'] = [self.ad_matrix(a) for a in range(self.dim)]
        return self.cache['ad']

    def dual_basis(self):
        """Pairs (a, x^a) with B(x_a, x^b) = delta_ab."""
        return [DualBasisPair(a, {b: self.form_inv[a][b] for b in range(self.dim) if self.form_inv[a][b] != 0})
                for a in range(self.dim)]

    def casimir_terms(self):
        """Triples (a, b, c) with sum c x_a x_b = sum_a x_a x^a."""
        if 'casimir' not in self.cache:
            self.cache['casimir'] = [(a, b, self.form_inv[a][b])
                                     for a in range(self.dim) for b in range(self.dim)
                                     if self.form_inv[a][b] != 0]
        return self.cache['casimir']

    def killing(self):
        ads = self.ad_matrices()
        return [[linalg.trace(linalg.matmul(x, y)) for y in ads] for x in ads]

    # ------------------------------------------------------------------
    # exhaustive checks
    def check_antisymmetry(self):
        return all(self.bracket[a][b] == {c: -v for c, v in self.bracket[b][a].items()}
                   for a in range(self.dim) for b in range(self.dim))

    def check_jacobi(self):
        for a in range(self.dim):
            for b in range(a + 1, self.dim):
                ab = self.bracket[a][b]
                for c in range(b + 1, self.dim):
                    total = self.bracket_elems(ab, {c: 1})
                    for part in (self.bracket_elems(self.bracket[b][c], {a: 1}),
                                 self.bracket_elems(self.bracket[c][a], {b: 1})):
                        for key, v in part.items():
                            total[key] = total.get(key, 0) + v
                    if any(v != 0 for v in total.values()):
                        return False
        return True

    def check_invariance(self):
        for a in range(self.dim):
            for b in range(self.dim):
                xy = self.bracket[a][b]
                for c in range(self.dim):
                    lhs = sum((v * self.form[k][c] for k, v in xy.items()), Fraction(0))
                    rhs = sum((v * self.form[b][k] for k, v in self.bracket[a][c].items()), Fraction(0))
                    if lhs + rhs != 0:
                        return False
        return True

    def check_form(self):
        sym = all(self.form[a][b] == self.form[b][a] for a in range(self.dim) for b in range(self.dim))
        return sym and linalg.rank(self.form) == self.dim

    # ------------------------------------------------------------------
    def to_json(self):
        triples = [[self.labels[a], self.labels[b], {self.labels[c]: str(v) for c, v in self.bracket[a][b].items()}]
                   for a in range(self.dim) for b in range(a + 1, self.dim) if self.bracket[a][b]]
        return json.dumps({'name': self.name, 'dim': self.dim, 'basis': self.labels, 'bracket': triples,
                           'form': [[str(v) for v in row] for row in self.form]})

    def __repr__(self):
        return 'LieAlgebraSpec({}, dim={})'.format(self.name, self.dim)

    def __reduce__(self):
        return (get_algebra, (self.family, self.rank_n))


def _unit(i, j, value=1):
    return {(i - 1, j - 1): Fraction(value)}


def _add(*parts):
    out = {}
    for part in parts:
        for key, v in part.items():
            out[key] = out.get(key, 0) + v
    return {key: v for key, v in out.items() if v != 0}


def _scale(part, c):
    return {key: c * v for key, v in part.items()}


def gl_index(n, i, j):
    return (i - 1) * n + (j - 1)


def build_gl(n):
    if n < 1:
        raise ValueError("Invalid rank for gl: {}".format(n))
    basis, matrices = [], []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            basis.append(BasisLabel('E', i, j))
            matrices.append(_unit(i, j))
    cartan = [gl_index(n, i, i) for i in range(1, n + 1)]
    return LieAlgebraSpec('gl{}'.format(n), basis, matrices, n, cartan, family='gl', rank_n=n)


def build_sl(n):
    if n < 2:
        raise ValueError("Invalid rank for sl: {}".format(n))
    basis, matrices = [], []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                basis.append(BasisLabel('E', i, j))
                matrices.append(_unit(i, j))
    cartan = []
    for i in range(1, n):
        cartan.append(len(basis))
        basis.append(BasisLabel('H', i))
        matrices.append(_add(_unit(i, i), _unit(i + 1, i + 1, -1)))
    return LieAlgebraSpec('sl{}'.format(n), basis, matrices, n, cartan, family='sl', rank_n=n)


def sp_element(two_n, i, j):
    """F_ij = E_ij - eps_i eps_j E_j'i' inside gl_2n."""
    n = two_n // 2
    eps = lambda s: 1 if s <= n else -1
    prime = lambda s: two_n - s + 1
    return _add(_unit(i, j), _unit(prime(j), prime(i), -eps(i) * eps(j)))


def build_sp(two_n):
    if two_n < 2 or two_n % 2:
        raise ValueError("Invalid size for sp: {}".format(two_n))
    n = two_n // 2
    basis, matrices, cartan = [], [], []
    for i in range(1, two_n + 1):
        for j in range(1, two_n - i + 2):
            if i == j and i <= n:
                cartan.append(len(basis))
            basis.append(BasisLabel('F', i, j))
            matrices.append(sp_element(two_n, i, j))
    return LieAlgebraSpec('sp{}'.format(two_n), basis, matrices, two_n, cartan, family='sp', rank_n=two_n)


def so_element(n, i, j):
    """F_ij = E_ij - E_j'i' inside gl_n."""
    prime = lambda s: n - s + 1
    return _add(_unit(i, j), _unit(prime(j), prime(i), -1))


def build_so(n):
    if n < 3:
        raise ValueError("Invalid size for so: {}".format(n))
    basis, matrices, cartan = [], [], []
    for i in range(1, n + 1):
        for j in range(1, n + 1 - i):
            if i == j:
                cartan.append(len(basis))
            basis.append(BasisLabel('F', i, j))
            matrices.append(so_element(n, i, j))
    return LieAlgebraSpec('so{}'.format(n), basis, matrices, n, cartan, family='so', rank_n=n)


def build_so_skew(two_n):
    if two_n < 4 or two_n % 2:
        raise ValueError("Invalid size for so_skew: {}".format(two_n))
    basis, matrices = [], []
    for i in range(1, two_n + 1):
        for j in range(i + 1, two_n + 1):
            basis.append(BasisLabel('Fo', i, j))
            matrices.append(_add(_unit(i, j), _unit(j, i, -1)))
    cartan = [basis.index(BasisLabel('Fo', 2 * s - 1, 2 * s)) for s in range(1, two_n // 2 + 1)]
    return LieAlgebraSpec('so_skew{}'.format(two_n), basis, matrices, two_n, cartan,
                          family='so_skew', rank_n=two_n)


def weyl_involution_gl(n):
    """theta(E_ij) = -E_ji as a linear map on coordinate dicts of gl_n."""

    def theta(vec):
        out = {}
        for a, c in vec.items():
            i, j = divmod(a, n)
            out[gl_index(n, j + 1, i + 1)] = -c
        return out

    return theta


def so_isomorphism(two_n):
    """Change of basis so_skew(2n) -> so(2n) over Q(i).

    Conjugation by P with P^T J P = 2 I (J the antidiagonal form), pairing
    coordinates k and k' as e_k + e_k' and i(e_k - e_k'). Returns the images
    of the Fo basis as sympy coefficient dicts in the F basis; the map is
    checked to carry brackets to brackets on every basis pair.
    """
    skew, anti = get_algebra('so_skew', two_n), get_algebra('so', two_n)
    key = 'iso_from_skew'
    if key in anti.cache:
        return anti.cache[key]
    p = sympy.zeros(two_n, two_n)
    for s in range(1, two_n // 2 + 1):
        k, kp = s, two_n - s + 1
        p[k - 1, 2 * s - 2], p[kp - 1, 2 * s - 2] = 1, 1
        p[k - 1, 2 * s - 1], p[kp - 1, 2 * s - 1] = sympy.I, -sympy.I
    p_inv = p.inv()
    images = []
    for mat in skew.matrices:
        y = sympy.zeros(two_n, two_n)
        for (r, c), v in mat.items():
            y[r, c] = v
        x = p * y * p_inv
        image = {}
        for a, dual in enumerate(anti.duals):
            value = sympy.expand(sum(v * x[c, r] for (r, c), v in dual.items()))
            if value != 0:
                image[a] = value
        images.append(image)
    for a in range(skew.dim):
        for b in range(a + 1, skew.dim):
            lhs = {}
            for c, v in skew.bracket[a][b].items():
                for d, w in images[c].items():
                    lhs[d] = lhs.get(d, 0) + v * w
            rhs = {}
            for c, v in images[a].items():
                for d, w in images[b].items():
                    for e, z in anti.bracket[c][d].items():
                        rhs[e] = rhs.get(e, 0) + v * w * z
            for e in set(lhs) | set(rhs):
                if sympy.expand(lhs.get(e, 0) - rhs.get(e, 0)) != 0:
                    raise ArithmeticError("so_skew -> so change of basis is not a homomorphism")
    anti.cache[key] = images
    return images


_ALGEBRAS = {}


def get_algebra(family, n=None):
    """Cached factory over SUPPORTED_ALGEBRAS; specs are immutable once built."""
    assert family in SUPPORTED_ALGEBRAS, 'Invalid algebra family: {}'.format(family)
    key = (family, n)
    if key not in _ALGEBRAS:
        if family == 'g2':
            from liealg.g2 import build_g2
            _ALGEBRAS[key] = build_g2()
        else:
            builder = {'gl': build_gl, 'sl': build_sl, 'sp': build_sp, 'so': build_so,
                       'so_skew': build_so_skew}[family]
            _ALGEBRAS[key] = builder(n)
    return _ALGEBRAS[key]
