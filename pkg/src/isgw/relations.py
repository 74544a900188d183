"""Green's H relation, the maximum idempotent-separating congruence mu,
the centralizer of the idempotents, and injectivity criteria for
homomorphisms between inverse semigroups."""

from __future__ import annotations

from dataclasses import dataclass

from .core import InverseSemigroup
from .errors import InternalContract, NotHomomorphism


@dataclass(frozen=True)
class EquivalenceRelation:
    """Partition of the element indices into disjoint classes."""

    n: int
    classes: tuple  # tuple of frozensets, sorted by least member
    class_index: tuple  # per element, position of its class in ``classes``

    @classmethod
    def from_class_map(cls, n: int, rep_of) -> "EquivalenceRelation":
        buckets = {}
        for a in range(n):
            buckets.setdefault(rep_of(a), set()).add(a)
        classes = tuple(sorted((frozenset(c) for c in buckets.values()), key=min))
        index = [0] * n
        for i, c in enumerate(classes):
            for a in c:
                index[a] = i
        return cls(n, classes, tuple(index))

    def same(self, a: int, b: int) -> bool:
        return self.class_index[a] == self.class_index[b]

    def class_of(self, a: int) -> frozenset:
        return self.classes[self.class_index[a]]

    def is_equality(self) -> bool:
        return len(self.classes) == self.n


@dataclass(frozen=True)
class RelationsReport:
    h: EquivalenceRelation
    mu: EquivalenceRelation
    cryptic: bool
    fundamental: bool


def h_and_mu(s: InverseSemigroup) -> RelationsReport:
    """Compute H (equal domain and range idempotents) and mu (equal
    conjugation action on every idempotent); cryptic means mu = H and
    fundamental means mu is equality."""
    n = s.n
    h_key = {a: (s.product(s.star(a), a), s.product(a, s.star(a))) for a in range(n)}
    h_rel = EquivalenceRelation.from_class_map(n, lambda a: h_key[a])

    idems = s.idempotents

    def mu_key(a):
        sa = s.star(a)
        return tuple(s.product(s.product(a, e), sa) for e in idems)

    mu_rel = EquivalenceRelation.from_class_map(n, mu_key)
    return RelationsReport(
        h=h_rel,
        mu=mu_rel,
        cryptic=(mu_rel.classes == h_rel.classes),
        fundamental=mu_rel.is_equality(),
    )


def centralizer(s: InverseSemigroup) -> tuple:
    """Elements commuting with every idempotent; always contains E(S)."""
    out = []
    for a in s.elements():
        if all(s.product(a, e) == s.product(e, a) for e in s.idempotents):
            out.append(a)
    return tuple(out)


@dataclass(frozen=True)
class SemigroupHomomorphism:
    source: InverseSemigroup
    target: InverseSemigroup
    map: tuple  # image index per source element

    def __post_init__(self):
        src, tgt = self.source, self.target
        if len(self.map) != src.n:
            raise NotHomomorphism("map length mismatch")
        if any(not (0 <= x < tgt.n) for x in self.map):
            raise NotHomomorphism("image index out of range")
        m = self.map
        for a in src.elements():
            for b in src.elements():
                if m[src.product(a, b)] != tgt.product(m[a], m[b]):
                    raise NotHomomorphism(f"map breaks product at ({a},{b})")
        if m[src.zero] != tgt.zero:
            raise NotHomomorphism("zero is not preserved")
        for a in src.elements():
            if m[src.star(a)] != tgt.star(m[a]):
                raise NotHomomorphism(f"map breaks involution at {a}")

    def apply(self, a: int) -> int:
        return self.map[a]


@dataclass(frozen=True)
class InjectivityReport:
    injective: bool
    injective_on_centralizer_of_e: bool
    idempotent_pure: bool
    idempotent_separating: bool


def injectivity_criteria(phi: SemigroupHomomorphism) -> InjectivityReport:
    """Evaluate the three equivalent injectivity criteria for a homomorphism
    between inverse semigroups: global injectivity, injectivity on the
    centralizer of E, and (idempotent pure and idempotent separating).
    Their disagreement would be a library bug and raises InternalContract.
    """
    src, tgt, m = phi.source, phi.target, phi.map

    injective = len(set(m)) == src.n

    z = centralizer(src)
    inj_z = len({m[a] for a in z}) == len(z)

    pure = all(src.is_idempotent(a) for a in src.elements() if tgt.is_idempotent(m[a]))

    images_of_e = [m[e] for e in src.idempotents]
    separating = len(set(images_of_e)) == len(images_of_e)

    if not (injective == inj_z == (pure and separating)):
        raise InternalContract(
            "injectivity criteria disagree: "
            f"injective={injective} on_centralizer={inj_z} pure={pure} separating={separating}"
        )
    return InjectivityReport(injective, inj_z, pure, separating)
