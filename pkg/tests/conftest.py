import pytest

from isgw.core import PartialBijection, from_partial_bijections, from_tables


def make_i2():
    """The 7-element symmetric inverse monoid on two points."""
    ident = PartialBijection.identity(2)
    swap = PartialBijection(2, (1, 0))
    e11 = PartialBijection(2, (0, None))
    return from_partial_bijections([ident, swap, e11], labels=["I", "X", "E11"])


def i2_named(s):
    """Indices of the classically named elements of I2."""
    by_map = {
        "I": PartialBijection.identity(2),
        "X": PartialBijection(2, (1, 0)),
        "E11": PartialBijection(2, (0, None)),
        "E22": PartialBijection(2, (None, 1)),
        "E21": PartialBijection(2, (1, None)),
        "E12": PartialBijection(2, (None, 0)),
        "0": PartialBijection.empty(2),
    }
    return {name: s.element_by_pmap(p) for name, p in by_map.items()}


def make_e4():
    """Semilattice with 0 < e, 0 < f < g and e orthogonal to f, g."""
    e = PartialBijection(3, (0, None, None))
    f = PartialBijection(3, (None, 1, None))
    g = PartialBijection(3, (None, 1, 2))
    return from_partial_bijections([e, f, g], labels=["e", "f", "g"])


def e4_named(s):
    named = {
        "e": PartialBijection(3, (0, None, None)),
        "f": PartialBijection(3, (None, 1, None)),
        "g": PartialBijection(3, (None, 1, 2)),
        "0": PartialBijection.empty(3),
    }
    return {name: s.element_by_pmap(p) for name, p in named.items()}


def make_z2z():
    """The two-element group with an adjoined zero: {0, 1, x}, x*x = 1."""
    # indices: 0 -> zero, 1 -> identity, 2 -> x
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 1]]
    inv = [0, 1, 2]
    return from_tables(mul, inv, 0, labels=["0", "1", "x"])


def make_chain(k):
    """Chain semilattice 0 < a1 < ... < a_{k-1} as nested partial identities."""
    gens = [PartialBijection(k, tuple(x if x < j else None for x in range(k)))
            for j in range(1, k)]
    return from_partial_bijections(gens, labels=[f"a{j}" for j in range(1, k)])


@pytest.fixture(scope="session")
def i2():
    return make_i2()


@pytest.fixture(scope="session")
def i2n(i2):
    return i2_named(i2)


@pytest.fixture(scope="session")
def e4():
    return make_e4()


@pytest.fixture(scope="session")
def e4n(e4):
    return e4_named(e4)


@pytest.fixture(scope="session")
def z2z():
    return make_z2z()
