"""Sparse commutative polynomials with exact rational coefficients.

A variable is a LoopVar (tdeg, component, index): ``x_index t^tdeg`` living in
copy ``component`` of the algebra. tdeg 0 marks plain S(g) variables,
negative values the loop variables x[a] of S(t^-1 g[t^-1]). Tuple order is
the canonical variable order (tdeg ascending, then component, then index).

A monomial is a sorted tuple of (LoopVar, exponent) pairs; CommPoly maps
monomials to nonzero Fractions.
"""
import json
from fractions import Fraction
from typing import NamedTuple


class LoopVar(NamedTuple):
    tdeg: int
    component: int
    index: int

    def at(self, tdeg):
        return LoopVar(tdeg, self.component, self.index)

    def on(self, component):
        return LoopVar(self.tdeg, component, self.index)


def mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def mono_from_vars(variables):
    exps = {}
    for v in variables:
        exps[v] = exps.get(v, 0) + 1
    return tuple(sorted(exps.items()))


def mono_vars(mono):
    """Variables of a monomial with repetition, in canonical order."""
    return [v for v, e in mono for _ in range(e)]


def mono_degree(mono):
    return sum(e for _, e in mono)


def mono_divide(mono, variables):
    """mono / prod(variables), or None when not divisible."""
    exps = dict(mono)
    for v in variables:
        e = exps.get(v, 0)
        if e == 0:
            return None
        if e == 1:
            del exps[v]
        else:
            exps[v] = e - 1
    return tuple(sorted(exps.items()))


def _add_into(terms, mono, coeff):
    value = terms.get(mono, 0) + coeff
    if value:
        terms[mono] = value
    else:
        terms.pop(mono, None)


class CommPoly:
    __slots__ = ('terms',)

    def __init__(self, terms=None):
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c != 0}

    # ------------------------------------------------------------------
    @classmethod
    def var(cls, v, coeff=1):
        return cls({((v, 1),): coeff})

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def monomial(cls, variables, coeff=1):
        return cls({mono_from_vars(variables): coeff})

    @classmethod
    def linear(cls, vec, tdeg=0, component=0):
        """sum_a vec[a] x_a placed at the given tdeg/component."""
        return cls({((LoopVar(tdeg, component, a), 1),): c for a, c in vec.items()})

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    # ------------------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __eq__(self, other):
        if isinstance(other, CommPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return 'CommPoly({} terms, degree {})'.format(len(self.terms), self.degree())

    def __neg__(self):
        return CommPoly._raw({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, CommPoly):
            other = CommPoly.const(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(terms, m, c)
        return CommPoly._raw(terms)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, CommPoly):
            other = CommPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CommPoly):
            c = Fraction(other)
            if c == 0:
                return CommPoly()
            return CommPoly._raw({m: c * v for m, v in self.terms.items()})
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _add_into(terms, mono_mul(m1, m2), c1 * c2)
        return CommPoly._raw(terms)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def __pow__(self, k):
        out = CommPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    # ------------------------------------------------------------------
    def degree(self):
        return max((mono_degree(m) for m in self.terms), default=-1)

    def degrees(self):
        return {mono_degree(m) for m in self.terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def homogeneous_part(self, d):
        return CommPoly._raw({m: c for m, c in self.terms.items() if mono_degree(m) == d})

    def variables(self):
        return sorted({v for m in self.terms for v, _ in m})

    def coefficient(self, variables):
        return self.terms.get(mono_from_vars(variables), Fraction(0))

    def tdegree(self):
        """Total t-degree of the first monomial (homogeneous inputs assumed)."""
        for m in self.terms:
            return sum(v.tdeg * e for v, e in m)
        return 0

    def diff(self, v):
        terms = {}
        for m, c in self.terms.items():
            exps = dict(m)
            e = exps.get(v, 0)
            if not e:
                continue
            if e == 1:
                del exps[v]
            else:
                exps[v] = e - 1
            _add_into(terms, tuple(sorted(exps.items())), c * e)
        return CommPoly._raw(terms)

    def substitute(self, images):
        """Replace variables by CommPolys; ``images`` is a dict or a callable.

        Callables may return None to keep a variable unchanged.
        """
        lookup = images if callable(images) else images.get
        cache = {}

        def power(v, e):
            key = (v, e)
            if key not in cache:
                image = lookup(v)
                if image is None:
                    image = CommPoly.var(v)
                cache[key] = image ** e
            return cache[key]

        out = CommPoly()
        for m, c in self.terms.items():
            part = CommPoly.const(c)
            for v, e in m:
                part = part * power(v, e)
                if not part:
                    break
            out = out + part
        return out

    def map_vars(self, func):
        terms = {}
        for m, c in self.terms.items():
            _add_into(terms, mono_from_vars(func(v) for v in mono_vars(m)), c)
        return CommPoly._raw(terms)

    def shift(self, tdeg):
        """F -> F[tdeg]: every variable moved to the given t-degree."""
        return self.map_vars(lambda v: v.at(tdeg))

    def strip_grading(self):
        return self.shift(0)

    def evaluate(self, point):
        """Value at a point given as dict LoopVar -> Fraction (missing variables are 0)."""
        total = Fraction(0)
        for m, c in self.terms.items():
            value = c
            for v, e in m:
                value *= Fraction(point.get(v, 0)) ** e
                if not value:
                    break
            total += value
        return total

    # ------------------------------------------------------------------
    def to_json(self, spec):
        return json.dumps(self.to_dict(spec))

    def to_dict(self, spec):
        return {'terms': [{'c': str(c), 'm': [_var_to_json(v, spec) for v in mono_vars(m)]} for m, c in self]}

    @classmethod
    def from_json(cls, text, spec):
        data = json.loads(text) if isinstance(text, str) else text
        terms = {}
        for term in data['terms']:
            _add_into(terms, mono_from_vars(_var_from_json(entry, spec) for entry in term['m']),
                      Fraction(term['c']))
        return cls._raw(terms)

    def display(self, spec):
        parts = []
        for m, c in self:
            factors = ['{}{}'.format(_var_name(v, spec), '^{}'.format(e) if e > 1 else '') for v, e in m]
            parts.append('{}*{}'.format(c, '*'.join(factors)) if factors else str(c))
        return ' + '.join(parts) if parts else '0'


def _var_to_json(v, spec):
    entry = [spec.labels[v.index], v.tdeg]
    if v.component:
        entry.append(v.component)
    return entry


def _var_from_json(entry, spec):
    component = entry[2] if len(entry) > 2 else 0
    return LoopVar(int(entry[1]), int(component), spec.index_of(entry[0]))


def _var_name(v, spec):
    name = spec.labels[v.index]
    if v.component:
        name = '{}^({})'.format(name, v.component)
    if v.tdeg:
        name = '{}[{}]'.format(name, v.tdeg)
    return name


def basis_var(a, tdeg=0, component=0):
    return CommPoly.var(LoopVar(tdeg, component, a))


def element_poly(vec, tdeg=0, component=0):
    """Linear polynomial of an algebra element given by coordinates."""
    return CommPoly.linear(vec, tdeg, component)
