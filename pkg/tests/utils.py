from sympoly.poly import CommPoly, LoopVar
from uea.pbw import NCPoly


def random_linear(spec, rng, tdeg=0, low=-3, high=4):
    """A random element of g at one t-degree with small integer coordinates."""
    values = rng.integers(low, high, size=spec.dim)
    return CommPoly({((LoopVar(tdeg, 0, a), 1),): int(v) for a, v in enumerate(values) if v})


def random_word(spec, rng, length, tdegs=(-1, -2)):
    return tuple(LoopVar(int(rng.choice(tdegs)), 0, int(rng.integers(spec.dim))) for _ in range(length))


def letter(spec, label, tdeg=0, component=0):
    return LoopVar(tdeg, component, spec.index_of(label))


def gen(spec, label, tdeg=0, component=0):
    return NCPoly.generator(letter(spec, label, tdeg, component))
