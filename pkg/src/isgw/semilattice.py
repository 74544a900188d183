"""Analysis of the idempotent meet semilattice of an inverse semigroup.

Covers, orthogonality, the 0-disjunctive property and the trapping condition
all reduce to finite scans here.  A cover of e (written e -> C) is a set C of
elements below e such that every nonzero x below e meets some member of C;
an outer cover drops the containment requirement.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import InverseSemigroup
from .util import Decision

# Subset searches for minimal covers stay exact below this candidate count.
MINIMAL_COVER_SEARCH_LIMIT = 12


@dataclass(frozen=True)
class Semilattice:
    """View of E(S) with meet given by the ambient product.

    Elements are indices into the parent semigroup, so results can be passed
    straight back to the other modules.
    """

    parent: InverseSemigroup
    elements: tuple
    zero: int

    @classmethod
    def from_semigroup(cls, s: InverseSemigroup) -> "Semilattice":
        return cls(s, s.idempotents, s.zero)

    def meet(self, e: int, f: int) -> int:
        return self.parent.mul[e][f]

    def leq(self, e: int, f: int) -> bool:
        return self.meet(e, f) == e

    def nonzero(self) -> tuple:
        return tuple(e for e in self.elements if e != self.zero)

    def below(self, e: int) -> tuple:
        """Elements of the carrier that are <= e (zero included)."""
        return tuple(f for f in self.elements if self.leq(f, e))

    def strictly_below(self, e: int) -> tuple:
        return tuple(f for f in self.below(e) if f != e and f != self.zero)

    def orthogonal(self, f: int) -> tuple:
        return tuple(e for e in self.elements if self.meet(e, f) == self.zero)

    def label(self, e: int) -> str:
        return self.parent.labels[e]


@dataclass(frozen=True)
class Cover:
    """A target idempotent together with a finite covering set."""

    target: int
    members: frozenset
    outer: bool = False


def make_cover(lattice: "Semilattice", e: int, members, *, outer: bool = False) -> Cover:
    """Validated cover of e; raises ValueError when the set does not cover."""
    d = is_cover(lattice, e, members, require_below=not outer)
    if not d.value:
        raise ValueError(f"not a cover of {e}: witness {d.witness}")
    return Cover(e, frozenset(members), outer)


def is_cover(lattice: Semilattice, e: int, members, *, require_below: bool = False) -> Decision:
    """Decide e -> C: every nonzero x <= e meets some member of C.

    With require_below=True the containment C subset-of e-down is also
    demanded (the non-outer notion).  A failing decision carries a witness x
    with x <= e, x != 0 and xC = {0}.
    """
    members = [c for c in members if c != lattice.zero]
    if require_below and any(not lattice.leq(c, e) for c in members):
        bad = next(c for c in members if not lattice.leq(c, e))
        return Decision(False, ("member_not_below", bad))
    for x in lattice.below(e):
        if x == lattice.zero:
            continue
        if all(lattice.meet(x, c) == lattice.zero for c in members):
            return Decision(False, x)
    return Decision(True)


def is_0_disjunctive(lattice: Semilattice) -> Decision:
    """Between any 0 < e < f there must sit a nonzero e' < f orthogonal to e."""
    for f in lattice.nonzero():
        for e in lattice.strictly_below(f):
            found = any(
                ep != lattice.zero and ep != f and lattice.meet(ep, e) == lattice.zero
                for ep in lattice.below(f)
            )
            if not found:
                return Decision(False, (e, f))
    return Decision(True)


def _minimal_cover_with(lattice: Semilattice, e: int, fixed: int, candidates) -> tuple | None:
    """Smallest subset D of candidates with e -> D + {fixed}, or None."""
    pool = [c for c in candidates if c != lattice.zero]
    if not is_cover(lattice, e, pool + [fixed]).value:
        return None
    if len(pool) > MINIMAL_COVER_SEARCH_LIMIT:
        return tuple(sorted(pool))
    for size in range(len(pool) + 1):
        for combo in itertools.combinations(pool, size):
            if is_cover(lattice, e, list(combo) + [fixed]).value:
                return combo
    return tuple(sorted(pool))


def has_trapping_condition(lattice: Semilattice) -> Decision:
    """For each nonzero f < e, e must be covered by f plus finitely many
    elements below e orthogonal to f.  On success the witness maps each pair
    to a validated cover built from a smallest such orthogonal family."""
    witnesses = {}
    for e in lattice.nonzero():
        for f in lattice.strictly_below(e):
            candidates = [x for x in lattice.below(e)
                          if lattice.meet(x, f) == lattice.zero and x != lattice.zero]
            found = _minimal_cover_with(lattice, e, f, candidates)
            if found is None:
                return Decision(False, (f, e))
            witnesses[(f, e)] = make_cover(lattice, e, set(found) | {f})
    return Decision(True, witnesses)


def atoms(lattice: Semilattice) -> tuple:
    out = []
    for e in lattice.nonzero():
        if not lattice.strictly_below(e):
            out.append(e)
    return tuple(out)


def atoms_and_orthogonals(lattice: Semilattice) -> tuple:
    """The minimal nonzero elements, and the full orthogonality map f -> f-perp."""
    perp = {f: frozenset(lattice.orthogonal(f)) for f in lattice.elements}
    return atoms(lattice), perp
