"""The builtin verification corpus: reproducible fixture semigroups, graphs
and actions, plus seeded random subsemigroups of small symmetric inverse
monoids.  Everything is deterministic for a given seed."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .core import InverseSemigroup, PartialBijection, from_partial_bijections, from_tables
from .errors import CapExceeded
from .graphs import (
    DirectedGraph,
    Edge,
    graph_semigroup,
    single_arrow,
    single_loop,
    two_loops,
)
from .selfsimilar import (
    SelfSimilarAction,
    edge_swap_action,
    lazy_z2_action,
    mirror_action,
    ss_semigroup,
    trivial_action,
    vertex_swap_action,
)

RANDOM_SUBSEMIGROUP_MAX = 14
RANDOM_TRIES_PER_INSTANCE = 60


@dataclass
class CorpusInstance:
    uid: str
    kind: str  # "semigroup" | "graph" | "action"
    semigroup: InverseSemigroup | None = None
    graph: DirectedGraph | None = None
    action: SelfSimilarAction | None = None
    meta: dict = field(default_factory=dict)


# -- fixture semigroups --------------------------------------------------------

def symmetric_inverse_monoid_fixture() -> InverseSemigroup:
    ident = PartialBijection.identity(2)
    swap = PartialBijection(2, (1, 0))
    e11 = PartialBijection(2, (0, None))
    return from_partial_bijections([ident, swap, e11], labels=["I", "X", "E11"])


def branching_semilattice_fixture() -> InverseSemigroup:
    e = PartialBijection(3, (0, None, None))
    f = PartialBijection(3, (None, 1, None))
    g = PartialBijection(3, (None, 1, 2))
    return from_partial_bijections([e, f, g], labels=["e", "f", "g"])


def group_with_zero_fixture() -> InverseSemigroup:
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 1]]
    return from_tables(mul, [0, 1, 2], 0, labels=["0", "1", "x"])


# -- all small semilattices, via intersection-closed families -------------------

def _family_semigroup(sets: tuple) -> InverseSemigroup:
    ordered = sorted(sets, key=lambda s: (len(s), tuple(sorted(s))))
    idx = {s: i for i, s in enumerate(ordered)}
    mul = [[idx[a & b] for b in ordered] for a in ordered]
    labels = ["0" if not s else "{" + "".join(map(str, sorted(s))) + "}" for s in ordered]
    return from_tables(mul, list(range(len(ordered))), 0, labels=labels)


def _meet_table_key(s: InverseSemigroup) -> tuple:
    """Isomorphism-invariant-ish fingerprint plus a canonical table under the
    best permutation; exact for the tiny sizes used here."""
    n = s.n
    best = None
    for perm in itertools.permutations(range(n)):
        if perm[s.zero] != 0:
            continue
        table = tuple(
            tuple(perm[s.mul[a][b]] for b in sorted(range(n), key=perm.__getitem__))
            for a in sorted(range(n), key=perm.__getitem__)
        )
        if best is None or table < best:
            best = table
    return best


def small_semilattices(max_size: int = 5) -> list:
    """Every meet semilattice with zero of at most max_size elements, up to
    isomorphism, realized as an intersection-closed family over four points."""
    points = (0, 1, 2, 3)
    nonempty = [frozenset(c)
                for k in range(1, 5)
                for c in itertools.combinations(points, k)]
    out = {}
    for k in range(0, max_size):
        for combo in itertools.combinations(nonempty, k):
            family = frozenset(combo) | {frozenset()}
            if all(a & b in family for a in family for b in family):
                s = _family_semigroup(tuple(family))
                key = _meet_table_key(s)
                if key not in out:
                    out[key] = s
    return [out[k] for k in sorted(out)]


# -- random subsemigroups of symmetric inverse monoids --------------------------

def _random_pmap(rng: random.Random, degree: int) -> PartialBijection:
    points = list(range(degree))
    k = rng.randint(0, degree)
    dom = rng.sample(points, k)
    img = rng.sample(points, k)
    image = [None] * degree
    for x, y in zip(dom, img):
        image[x] = y
    return PartialBijection(degree, tuple(image))


def random_subsemigroups(seed: int, degree: int, count: int) -> list:
    rng = random.Random(f"{seed}:{degree}")
    out = []
    tries = 0
    while len(out) < count and tries < RANDOM_TRIES_PER_INSTANCE * count:
        tries += 1
        gens = [_random_pmap(rng, degree) for _ in range(rng.randint(1, 2))]
        try:
            s = from_partial_bijections(gens, max_elements=400)
        except CapExceeded:
            continue
        if 3 <= s.n <= RANDOM_SUBSEMIGROUP_MAX:
            out.append(s)
    return out


# -- fixture graphs --------------------------------------------------------------

def fixture_graphs() -> list:
    two_cycle = DirectedGraph((0, 1), (Edge("p", 0, 1), Edge("q", 1, 0)))
    two_cycle_entry = DirectedGraph(
        (0, 1, 2), (Edge("p", 0, 1), Edge("q", 1, 0), Edge("x", 2, 1)))
    double_edge = DirectedGraph((0, 1), (Edge("a", 0, 1), Edge("b", 0, 1)))
    chain3 = DirectedGraph((0, 1, 2), (Edge("x", 0, 1), Edge("y", 1, 2)))
    join2 = DirectedGraph((0, 1, 2), (Edge("a", 0, 2), Edge("b", 1, 2)))
    figure8 = DirectedGraph(
        (0, 1), (Edge("p", 0, 1), Edge("q", 1, 0), Edge("r", 0, 1)))
    return [
        ("L1", single_loop()),
        ("R2", two_loops()),
        ("A2", single_arrow()),
        ("C2", two_cycle),
        ("C2E", two_cycle_entry),
        ("D2", double_edge),
        ("CH3", chain3),
        ("T2", join2),
        ("F8", figure8),
    ]


def fixture_actions() -> list:
    return [
        ("MIRROR", mirror_action()),
        ("TRIV-L1", trivial_action(single_loop())),
        ("TRIV-R2", trivial_action(two_loops())),
        ("TRIV-A2", trivial_action(single_arrow())),
        ("SWAP-D2", edge_swap_action()),
        ("SWAP-T2", vertex_swap_action()),
        ("LAZY-Z2", lazy_z2_action()),
    ]


# -- assembled corpus -------------------------------------------------------------

def builtin_corpus(seed: int = 0, depth: int = 4) -> list:
    instances = []

    instances.append(CorpusInstance("I2", "semigroup",
                                    semigroup=symmetric_inverse_monoid_fixture()))
    instances.append(CorpusInstance("E4", "semigroup",
                                    semigroup=branching_semilattice_fixture()))
    instances.append(CorpusInstance("Z2Z", "semigroup",
                                    semigroup=group_with_zero_fixture()))

    for i, s in enumerate(small_semilattices()):
        instances.append(CorpusInstance(f"SL{i:02d}-n{s.n}", "semigroup", semigroup=s))

    for degree in (3, 4):
        for i, s in enumerate(random_subsemigroups(seed, degree, 2)):
            instances.append(CorpusInstance(f"RND-I{degree}-{i}", "semigroup",
                                            semigroup=s, meta={"seed": seed}))

    graph_instances = []
    for name, g in fixture_graphs():
        exact = None
        if g.is_acyclic() and g.longest_path_length() <= depth:
            exact = graph_semigroup(g, max(1, g.longest_path_length()))
        inst = CorpusInstance(f"G-{name}", "graph", graph=g,
                              meta={"exact": exact})
        graph_instances.append(inst)
        instances.append(inst)
        if exact is not None:
            instances.append(CorpusInstance(
                f"S-{name}", "semigroup",
                semigroup=exact.to_inverse_semigroup(),
                meta={"graph": g, "truncated": exact}))

    for name, a in fixture_actions():
        exact = None
        if a.graph.is_acyclic() and a.graph.longest_path_length() <= depth:
            exact = ss_semigroup(a, max(1, a.graph.longest_path_length()))
        instances.append(CorpusInstance(f"ACT-{name}", "action", action=a,
                                        meta={"exact": exact}))
        if exact is not None:
            instances.append(CorpusInstance(
                f"S-{name}", "semigroup",
                semigroup=exact.to_inverse_semigroup(),
                meta={"action": a, "truncated": exact}))

    return instances


def corpus_ids(seed: int = 0) -> list:
    return [inst.uid for inst in builtin_corpus(seed)]
