"""PBW-normal-ordered arithmetic in enveloping algebras of graded Lie algebras.

Generators are LoopVars: x_index t^tdeg in copy ``component``. The same
engine serves U(t^-1 g[t^-1]) (tdeg < 0), U(g) (tdeg 0, component 0) and
U(g + ... + g) (tdeg 0, components 1..n). The formal letter TAU has tdeg 1
so that it sorts after every loop generator; [tau, x[a]] = -a x[a - 1].
"""
import json
from fractions import Fraction

from resources.config import get_configs
from runner.utils import get_kernel_logger
from sympoly.poly import CommPoly, LoopVar, mono_from_vars

config = get_configs()
logger = get_kernel_logger('uea')

Generator = LoopVar
TAU = LoopVar(1, 0, -1)


def is_tau(g):
    return g.index < 0


def _add_into(terms, word, coeff):
    value = terms.get(word, 0) + coeff
    if value:
        terms[word] = value
    else:
        terms.pop(word, None)


class NCPoly:
    """Element of an enveloping algebra: sorted words mapped to nonzero Fractions."""
    __slots__ = ('terms',)

    def __init__(self, terms=None):
        self.terms = {tuple(w): Fraction(c) for w, c in (terms or {}).items() if c != 0}

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def one(cls, coeff=1):
        return cls({(): coeff})

    @classmethod
    def generator(cls, g, coeff=1):
        return cls({(g,): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return 'NCPoly({} terms, filtration {})'.format(len(self.terms), self.filtration_degree())

    def __neg__(self):
        return NCPoly._raw({w: -c for w, c in self.terms.items()})

    def __add__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            _add_into(terms, w, c)
        return NCPoly._raw(terms)

    def __sub__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            _add_into(terms, w, -c)
        return NCPoly._raw(terms)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return NCPoly()
        return NCPoly._raw({w: c * v for w, v in self.terms.items()})

    def filtration_degree(self):
        return max((len(w) for w in self.terms), default=-1)

    def filtration_part(self, d):
        return NCPoly._raw({w: c for w, c in self.terms.items() if len(w) == d})

    def has_tau(self):
        return any(is_tau(g) for w in self.terms for g in w)

    def gr(self):
        """Symbol: the top filtration part read as a commutative polynomial."""
        if not self.terms:
            raise ValueError("Invalid input: the zero element has no symbol")
        top = self.filtration_degree()
        terms = {}
        for w, c in self.terms.items():
            if len(w) == top:
                mono = mono_from_vars(w)
                terms[mono] = terms.get(mono, 0) + c
        return CommPoly(terms)

    def to_dict(self, spec):
        out = []
        for w, c in self:
            letters = []
            for g in w:
                entry = [spec.labels[g.index], g.tdeg]
                if g.component:
                    entry.append(g.component)
                letters.append(entry)
            out.append({'c': str(c), 'w': letters})
        return {'terms': out}

    def to_json(self, spec):
        return json.dumps(self.to_dict(spec))

    @classmethod
    def from_json(cls, text, spec):
        data = json.loads(text) if isinstance(text, str) else text
        terms = {}
        for term in data['terms']:
            word = tuple(LoopVar(int(e[1]), int(e[2]) if len(e) > 2 else 0, spec.index_of(e[0]))
                         for e in term['w'])
            _add_into(terms, word, Fraction(term['c']))
        return cls._raw(terms)


class EnvelopingAlgebra:
    """Straightening engine for one Lie algebra spec.

    ``_lmul(g, word)`` returns the normal form of g * word for a sorted word;
    results for words up to ``memo_max_length`` letters are memoised. A memo
    holding ``memo_max_entries`` results is emptied before the next insert.
    """

    def __init__(self, spec, memo_max_length=8, memo_max_entries=1000000):
        self.spec = spec
        self.memo_max_length = memo_max_length
        self.memo_max_entries = memo_max_entries
        self._memo = {}
        self._sym_memo = {}

    def bracket(self, g, h):
        """[g, h] on generators as a list of (generator, coefficient)."""
        if is_tau(g) and is_tau(h):
            return []
        if is_tau(g):
            return [(h.at(h.tdeg - 1), Fraction(-h.tdeg))] if h.tdeg else []
        if is_tau(h):
            return [(g.at(g.tdeg - 1), Fraction(g.tdeg))] if g.tdeg else []
        if g.component != h.component:
            return []
        tdeg = g.tdeg + h.tdeg
        return [(LoopVar(tdeg, g.component, c), v) for c, v in self.spec.bracket[g.index][h.index].items()]

    def _lmul(self, g, word):
        if not word or g <= word[0]:
            return {(g,) + word: Fraction(1)}
        key = (g, word)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        head, rest = word[0], word[1:]
        out = {}
        # g head rest = head (g rest) + [g, head] rest
        for w, c in self._lmul(g, rest).items():
            for w2, c2 in self._lmul(head, w).items():
                _add_into(out, w2, c * c2)
        for z, cz in self.bracket(g, head):
            for w, c in self._lmul(z, rest).items():
                _add_into(out, w, cz * c)
        if len(word) <= self.memo_max_length:
            self.remember(self._memo, key, out)
        return out

    def remember(self, memo, key, value):
        if len(memo) >= self.memo_max_entries:
            logger.debug("Memo full at {} entries, clearing".format(len(memo)))
            memo.clear()
        memo[key] = value

    def lmul(self, g, a):
        out = {}
        for w, c in a.terms.items():
            for w2, c2 in self._lmul(g, w).items():
                _add_into(out, w2, c * c2)
        return NCPoly._raw(out)

    def mul_word(self, word, a):
        for g in reversed(word):
            a = self.lmul(g, a)
        return a

    def mul(self, a, b):
        out = NCPoly()
        for w, c in a.terms.items():
            out = out + self.mul_word(w, b).scale(c)
        return out

    def commutator(self, a, b):
        return self.mul(a, b) - self.mul(b, a)

    def normal_order(self, word):
        return self.mul_word(tuple(word), NCPoly.one())

    def ad_generator(self, g, a):
        """[g, a] by the derivation rule, one letter of each word at a time."""
        out = {}
        for w, c in a.terms.items():
            for i, y in enumerate(w):
                for z, cz in self.bracket(g, y):
                    part = self._lmul(z, w[i + 1:])
                    for p in reversed(w[:i]):
                        part = self.lmul(p, NCPoly._raw(part)).terms
                    for w2, c2 in part.items():
                        _add_into(out, w2, c * cz * c2)
        return NCPoly._raw(out)

    def ad_element(self, x, a, tdeg=0, component=0):
        """[x, a] for an algebra element x given by coordinates, placed at (tdeg, component)."""
        out = NCPoly()
        for index, c in x.items():
            out = out + self.ad_generator(LoopVar(tdeg, component, index), a).scale(c)
        return out

    def casimir_commutator(self, a, b1=-1, b2=-1, component=0):
        """[H[b1, b2], a] with H[b1, b2] = sum c_ij x_i[b1] x_j[b2].

        Uses [XY, a] = X[Y, a] + Y[X, a] - [Y, [X, a]] so that only
        derivations and single-letter products are straightened.
        """
        out = NCPoly()
        ad_x = {}
        for i, j, c in self.spec.casimir_terms():
            x, y = LoopVar(b1, component, i), LoopVar(b2, component, j)
            if x not in ad_x:
                ad_x[x] = self.ad_generator(x, a)
            if y not in ad_x:
                ad_x[y] = self.ad_generator(y, a)
            part = self.lmul(x, ad_x[y]) + self.lmul(y, ad_x[x]) - self.ad_generator(y, ad_x[x])
            out = out + part.scale(c)
        return out

    def antipode(self, a):
        """omega: reverse every word and negate every letter."""
        out = NCPoly()
        for w, c in a.terms.items():
            out = out + self.normal_order(tuple(reversed(w))).scale(c if len(w) % 2 == 0 else -c)
        return out

    def tau_derivation(self, a, times=1):
        """The action of tau on tau-free elements: x[a] -> -a x[a - 1] extended as a derivation."""
        for _ in range(times):
            a = self.ad_generator(TAU, a)
        return a

    def casimir_loop(self, b1=-1, b2=-1, component=0):
        """sum_a x_a[b1] x^a[b2], normal-ordered."""
        out = NCPoly()
        for i, j, c in self.spec.casimir_terms():
            out = out + self.normal_order((LoopVar(b1, component, i), LoopVar(b2, component, j))).scale(c)
        return out

    def from_linear(self, x, tdeg=0, component=0):
        return NCPoly({(LoopVar(tdeg, component, a),): c for a, c in x.items()})


def get_enveloping(spec, memo_max_length=None, memo_max_entries=None):
    """One straightening engine per spec, kept in the spec's cache."""
    engine = spec.cache.get('uea')
    if engine is None:
        if memo_max_length is None:
            memo_max_length = config.get('memo_max_length', 8)
        if memo_max_entries is None:
            memo_max_entries = config.get('memo_max_entries', 1000000)
        engine = EnvelopingAlgebra(spec, memo_max_length, memo_max_entries)
        spec.cache['uea'] = engine
    return engine


def normal_order(spec, word):
    return get_enveloping(spec).normal_order(word)


def mul(spec, a, b):
    return get_enveloping(spec).mul(a, b)


def commutator(spec, a, b):
    return get_enveloping(spec).commutator(a, b)


def antipode(spec, a):
    return get_enveloping(spec).antipode(a)


def casimir_loop(spec, b1=-1, b2=-1):
    return get_enveloping(spec).casimir_loop(b1, b2)


def gr(a):
    return a.gr()
