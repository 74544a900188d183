"""Self-similar graph actions: a finite group acting on a finite directed
graph together with a restriction cocycle.

The cocycle tells how a group element keeps acting after passing through an
edge: g sends the path e*beta to (g e) * (phi(g, e) beta).  All structural
notions (faithfulness, condition (M), the triple semigroup) are computed
exactly from the tables; path recursion follows that one defining rule.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import InverseSemigroup
from .errors import (
    AxiomViolation,
    InternalContract,
    NotInvariant,
    Overflow,
    ParseError,
)
from .graphs import (
    DirectedGraph,
    Edge,
    GraphPath,
    edge_path,
    is_hereditary,
    parse_graph,
    paths_up_to,
    quotient_graph,
    two_loops,
    vertex_path,
    _reachable_from,
)
from .util import Decision

VALIDATION_DEPTH = 4
MAX_FIXED_PATH_WITNESSES = 200


@dataclass(frozen=True)
class FiniteGroup:
    mul: tuple
    identity: int
    labels: tuple
    inv: tuple = ()

    def __post_init__(self):
        n = len(self.mul)
        if any(len(row) != n for row in self.mul):
            raise ParseError("group table is not square")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]]:
                        raise ParseError("group table is not associative")
        e = self.identity
        if any(self.mul[e][a] != a or self.mul[a][e] != a for a in range(n)):
            raise ParseError("identity element is wrong")
        inv = []
        for a in range(n):
            cands = [b for b in range(n) if self.mul[a][b] == e and self.mul[b][a] == e]
            if len(cands) != 1:
                raise ParseError(f"element {a} lacks a unique inverse")
            inv.append(cands[0])
        object.__setattr__(self, "inv", tuple(inv))
        if len(self.labels) != n:
            raise ParseError("group label count mismatch")

    @property
    def size(self) -> int:
        return len(self.mul)

    def product(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    @classmethod
    def trivial(cls) -> "FiniteGroup":
        return cls(((0,),), 0, ("1",))

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        mul = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
        labels = tuple("1" if a == 0 else f"t{a}" if a > 1 else "t" for a in range(n))
        return cls(mul, 0, labels)


@dataclass(frozen=True)
class SelfSimilarAction:
    group: FiniteGroup
    graph: DirectedGraph
    vertex_action: dict  # (g, vertex) -> vertex
    edge_action: dict  # (g, eid) -> eid
    cocycle: dict  # (g, eid) -> group element

    def act_vertex(self, g: int, v: int) -> int:
        return self.vertex_action[(g, v)]

    def act_edge(self, g: int, eid: str) -> str:
        return self.edge_action[(g, eid)]

    def restrict(self, g: int, eid: str) -> int:
        return self.cocycle[(g, eid)]

    def edge_index(self, eid: str):
        for i, e in enumerate(self.graph.edges):
            if e.eid == eid:
                return i
        raise ParseError(f"no edge {eid}")


def act_on_path(action: SelfSimilarAction, g: int, path: GraphPath) -> tuple:
    """Image path and restriction cocycle of g along the whole path.

    A vertex goes to its image vertex with cocycle g itself; a path e*beta
    goes to (g e) * (phi(g, e) beta) with the cocycle restricted through e
    first and then along beta.
    """
    if path.length == 0:
        return vertex_path(action.graph, action.act_vertex(g, path.src)), g
    top = action.graph.edges[path.edges[0]]
    ge = action.act_edge(g, top.eid)
    h = action.restrict(g, top.eid)
    rest = GraphPath(action.graph, path.edges[1:], path.src)
    image_rest, final = act_on_path(action, h, rest)
    image = edge_path(action.graph, action.edge_index(ge)).concat(image_rest)
    return image, final


def validate_action(action: SelfSimilarAction, depth: int = VALIDATION_DEPTH) -> dict:
    """Exhaustively check the defining axioms on paths up to the given depth.

    The identities beyond single edges are forced by the recursive definition
    of the path action, so checking them on short paths certifies the tables;
    any violation raises AxiomViolation with the witnessing tuple.
    """
    grp, graph = action.group, action.graph
    gs = range(grp.size)
    one = grp.identity

    for g in gs:
        for v in graph.vertices:
            if (g, v) not in action.vertex_action:
                raise AxiomViolation("tables", (g, v))
        for e in graph.edges:
            if (g, e.eid) not in action.edge_action or (g, e.eid) not in action.cocycle:
                raise AxiomViolation("tables", (g, e.eid))

    for v in graph.vertices:
        if action.act_vertex(one, v) != v:
            raise AxiomViolation("identity", v)
    for e in graph.edges:
        if action.act_edge(one, e.eid) != e.eid:
            raise AxiomViolation("identity", e.eid)
        if action.restrict(one, e.eid) != one:
            raise AxiomViolation("identity", ("cocycle", e.eid))

    # E4/E5: the edge action is equivariant on endpoints (so images are edges)
    for g in gs:
        for i, e in enumerate(graph.edges):
            img = action.act_edge(g, e.eid)
            j = action.edge_index(img)
            if graph.edges[j].rng != action.act_vertex(g, e.rng):
                raise AxiomViolation("E4", (g, e.eid))
            if graph.edges[j].src != action.act_vertex(g, e.src):
                raise AxiomViolation("E5", (g, e.eid))

    # E6: the restricted element moves vertices exactly like the original
    for g in gs:
        for e in graph.edges:
            h = action.restrict(g, e.eid)
            for x in graph.vertices:
                if action.act_vertex(h, x) != action.act_vertex(g, x):
                    raise AxiomViolation("E6", (g, e.eid, x))

    # bijectivity per group element
    for g in gs:
        if len({action.act_vertex(g, v) for v in graph.vertices}) != len(graph.vertices):
            raise AxiomViolation("E1", ("vertex bijection", g))
        if len({action.act_edge(g, e.eid) for e in graph.edges}) != len(graph.edges):
            raise AxiomViolation("E1", ("edge bijection", g))

    paths = paths_up_to(graph, depth)
    checked = 0
    for g in gs:
        for h in gs:
            gh = grp.product(g, h)
            for p in paths:
                hp, hc = act_on_path(action, h, p)
                ghp_direct, ghc_direct = act_on_path(action, gh, p)
                g_hp, g_hc = act_on_path(action, g, hp)
                if ghp_direct != g_hp:
                    raise AxiomViolation("E1", (g, h, p.describe()))
                if ghc_direct != grp.product(g_hc, hc):
                    raise AxiomViolation("E2", (g, h, p.describe()))
                checked += 1
    for g in gs:
        for p in paths:
            img, coc = act_on_path(action, g, p)
            if img.length != p.length:
                raise AxiomViolation("E7", ("length", g, p.describe()))
            if img.rng != action.act_vertex(g, p.rng):
                raise AxiomViolation("E4", (g, p.describe()))
            if img.src != action.act_vertex(g, p.src):
                raise AxiomViolation("E5", (g, p.describe()))
            for x in graph.vertices:
                if action.act_vertex(coc, x) != action.act_vertex(g, x):
                    raise AxiomViolation("E6", (g, p.describe(), x))
            # every split alpha*beta must satisfy the extension identities
            for k in range(p.length + 1):
                alpha = GraphPath(graph, p.edges[:k],
                                  graph.edges[p.edges[k - 1]].src if k else p.rng)
                beta = GraphPath(graph, p.edges[k:], p.src)
                ga, ca = act_on_path(action, g, alpha)
                gb, cb = act_on_path(action, ca, beta)
                if ga.concat(gb) != img:
                    raise AxiomViolation("E7", (g, p.describe(), k))
                if cb != coc:
                    raise AxiomViolation("E8", (g, p.describe(), k))
                checked += 1
    return {"paths": len(paths), "checks": checked, "depth": depth}


# -- the triple semigroup -------------------------------------------------------

@dataclass(frozen=True)
class SSTriple:
    """(alpha, g, beta) with source(alpha) = g * source(beta)."""

    alpha: GraphPath
    g: int
    beta: GraphPath

    def sort_key(self):
        return (self.alpha.sort_key(), self.g, self.beta.sort_key())

    def describe(self, action: SelfSimilarAction) -> str:
        return f"({self.alpha.describe()},{action.group.labels[self.g]},{self.beta.describe()})"


def make_triple(action: SelfSimilarAction, alpha: GraphPath, g: int, beta: GraphPath) -> SSTriple:
    if alpha.src != action.act_vertex(g, beta.src):
        raise ParseError("triple sources do not match through the group element")
    return SSTriple(alpha, g, beta)


def triple_inverse(action: SelfSimilarAction, t: SSTriple) -> SSTriple:
    return make_triple(action, t.beta, action.group.inverse(t.g), t.alpha)


def triple_multiply(action: SelfSimilarAction, t1: SSTriple, t2: SSTriple,
                    depth: int | None = None) -> SSTriple | None:
    """Product of two triples; None encodes zero.  With a depth bound, a
    product needing a longer path raises Overflow instead of truncating."""
    grp = action.group
    alpha, g, beta = t1.alpha, t1.g, t1.beta
    gamma, h, nu = t2.alpha, t2.g, t2.beta
    if gamma.has_prefix(beta):
        tail = gamma.strip_prefix(beta)
        g_tail, coc = act_on_path(action, g, tail)
        new_alpha = alpha.concat(g_tail)
        if depth is not None and new_alpha.length > depth:
            raise Overflow(f"product path length {new_alpha.length} > depth {depth}")
        out = make_triple(action, new_alpha, grp.product(coc, h), nu)
    elif beta.has_prefix(gamma):
        tail = beta.strip_prefix(gamma)
        h_inv = grp.inverse(h)
        h_tail, coc = act_on_path(action, h_inv, tail)
        new_beta = nu.concat(h_tail)
        if depth is not None and new_beta.length > depth:
            raise Overflow(f"product path length {new_beta.length} > depth {depth}")
        out = make_triple(action, alpha, grp.product(g, grp.inverse(coc)), new_beta)
    else:
        return None
    if out.alpha.src != action.act_vertex(out.g, out.beta.src):
        raise InternalContract("triple product broke the membership condition")
    return out


ZERO = "0"


@dataclass(frozen=True)
class TruncatedActionSemigroup:
    """Triples with both path lengths bounded by the depth, plus zero; exact
    when the graph is acyclic and shallow enough."""

    action: SelfSimilarAction
    depth: int
    elements: tuple
    exact: bool

    def product(self, i: int, j: int) -> int:
        a, b = self.elements[i], self.elements[j]
        if a == ZERO or b == ZERO:
            return 0
        out = triple_multiply(self.action, a, b, depth=self.depth)
        return 0 if out is None else self.elements.index(out)

    def involution(self, i: int) -> int:
        if self.elements[i] == ZERO:
            return 0
        return self.elements.index(triple_inverse(self.action, self.elements[i]))

    def to_inverse_semigroup(self) -> InverseSemigroup:
        if not self.exact:
            raise Overflow(
                "truncated model: the graph has paths beyond the depth bound, "
                "products are not total")
        n = len(self.elements)
        mul = [[self.product(i, j) for j in range(n)] for i in range(n)]
        inv = [self.involution(i) for i in range(n)]
        labels = [ZERO] + [t.describe(self.action) for t in self.elements[1:]]
        return InverseSemigroup(mul, inv, 0, labels=labels, check=True,
                                check_associativity=(n <= 128))


def ss_semigroup(action: SelfSimilarAction, depth: int) -> TruncatedActionSemigroup:
    if depth < 0:
        raise ParseError("depth must be nonnegative")
    paths = paths_up_to(action.graph, depth)
    triples = []
    for alpha in paths:
        for g in range(action.group.size):
            for beta in paths:
                if alpha.src == action.act_vertex(g, beta.src):
                    triples.append(SSTriple(alpha, g, beta))
    triples.sort(key=SSTriple.sort_key)
    exact = action.graph.is_acyclic() and action.graph.longest_path_length() <= depth
    return TruncatedActionSemigroup(action, depth, (ZERO,) + tuple(triples), exact)


# -- conditions on the action ----------------------------------------------------

def vertex_orbits(action: SelfSimilarAction) -> dict:
    """Map each vertex to its orbit (as a frozenset)."""
    orbits = {}
    for v in action.graph.vertices:
        orbits[v] = frozenset(action.act_vertex(g, v) for g in range(action.group.size))
    return orbits


def g_independent_edges(action: SelfSimilarAction) -> tuple:
    """Edges whose competitors into the same range vertex all come from a
    different vertex orbit."""
    orbits = vertex_orbits(action)
    out = []
    for i, e in enumerate(action.graph.edges):
        competitors = [f for j, f in enumerate(action.graph.edges)
                       if j != i and f.rng == e.rng]
        if all(orbits[f.src] != orbits[e.src] for f in competitors):
            out.append(e.eid)
    return tuple(out)


def condition_M_ss(action: SelfSimilarAction) -> Decision:
    """Every orbit-independent edge admits an alternative nontrivial return
    path starting in the orbit of its source, not factoring through it."""
    graph = action.graph
    orbits = vertex_orbits(action)
    for eid in g_independent_edges(action):
        i = action.edge_index(eid)
        e = graph.edges[i]
        reach = frozenset().union(*(_reachable_from(graph, w) for w in orbits[e.src]))
        ok = any(f.src in reach for j, f in enumerate(graph.edges)
                 if j != i and f.rng == e.rng)
        if not ok:
            return Decision(False, eid)
    return Decision(True)


def hereditary_invariant_sets(action: SelfSimilarAction) -> list:
    """All vertex sets closed downward along edges and under the group."""
    graph = action.graph
    vs = sorted(graph.vertices)
    out = []
    for mask in range(1 << len(vs)):
        h = frozenset(vs[i] for i in range(len(vs)) if mask >> i & 1)
        if not is_hereditary(graph, h):
            continue
        if any(action.act_vertex(g, v) not in h for v in h for g in range(action.group.size)):
            continue
        out.append(h)
    return sorted(out, key=lambda h: (len(h), tuple(sorted(h))))


def quotient_action(action: SelfSimilarAction, v_set) -> SelfSimilarAction:
    """Restrict the action to the graph minus a hereditary invariant set."""
    removed = frozenset(v_set)
    if not is_hereditary(action.graph, removed):
        raise NotInvariant(f"{sorted(removed)} is not hereditary")
    if any(action.act_vertex(g, v) not in removed
           for v in removed for g in range(action.group.size)):
        raise NotInvariant(f"{sorted(removed)} is not closed under the group")
    graph = quotient_graph(action.graph, removed)
    kept_eids = {e.eid for e in graph.edges}
    sub = SelfSimilarAction(
        group=action.group,
        graph=graph,
        vertex_action={(g, v): action.act_vertex(g, v)
                       for g in range(action.group.size) for v in graph.vertices},
        edge_action={(g, eid): action.act_edge(g, eid)
                     for g in range(action.group.size) for eid in kept_eids},
        cocycle={(g, eid): action.restrict(g, eid)
                 for g in range(action.group.size) for eid in kept_eids},
    )
    validate_action(sub, depth=2)
    return sub


@dataclass(frozen=True)
class TrivialPairSet:
    """Pairs (g, v) where g acts trivially on every path into v; the greatest
    fixed point of the one-step closure."""

    pairs: frozenset


@dataclass(frozen=True)
class FaithfulnessReport:
    faithful: bool
    strongly_faithful: bool
    trivial_pairs: TrivialPairSet
    hypothesis: str  # "met" unless some vertex has no incoming or outgoing edge


def _trivial_pairs(action: SelfSimilarAction) -> frozenset:
    grp, graph = action.group, action.graph
    current = {(g, v) for g in range(grp.size) for v in graph.vertices
               if action.act_vertex(g, v) == v}
    changed = True
    while changed:
        changed = False
        for g, v in sorted(current):
            ok = True
            for i in graph.edges_into(v):
                e = graph.edges[i]
                if action.act_edge(g, e.eid) != e.eid or \
                        (action.restrict(g, e.eid), e.src) not in current:
                    ok = False
                    break
            if not ok:
                current.discard((g, v))
                changed = True
    return frozenset(current)


def faithfulness(action: SelfSimilarAction) -> FaithfulnessReport:
    grp, graph = action.group, action.graph
    pairs = _trivial_pairs(action)
    identity_pairs = {(grp.identity, v) for v in graph.vertices}
    faithful = pairs == frozenset(identity_pairs)

    strongly = True
    for h in hereditary_invariant_sets(action):
        sub = quotient_action(action, h)
        sub_pairs = _trivial_pairs(sub)
        sub_identity = {(grp.identity, v) for v in sub.graph.vertices}
        if sub_pairs != frozenset(sub_identity):
            strongly = False
            break

    no_source_or_sink = all(
        graph.edges_into(v) and graph.edges_out(v) for v in graph.vertices
    )
    return FaithfulnessReport(
        faithful=faithful,
        strongly_faithful=strongly,
        trivial_pairs=TrivialPairSet(pairs),
        hypothesis="met" if no_source_or_sink else "unmet-recorded",
    )


def strongly_fixed_finite(action: SelfSimilarAction, g: int) -> Decision:
    """Is the set of paths strongly fixed by g (fixed pointwise with trivial
    restriction) finite?

    States are (group element, next range vertex); an edge is enabled when
    the current element fixes it; a walk accepts when the element has been
    restricted down to the identity.  The path set is infinite exactly when
    some state on an enabled cycle lies on an accepting walk.
    """
    grp, graph = action.group, action.graph
    one = grp.identity
    nodes = [(h, v) for h in range(grp.size) for v in graph.vertices]
    succ = {node: [] for node in nodes}
    for h, v in nodes:
        for i in graph.edges_into(v):
            e = graph.edges[i]
            if action.act_edge(h, e.eid) == e.eid:
                succ[(h, v)].append(((action.restrict(h, e.eid), e.src), i))

    initial = [(g, v) for v in graph.vertices]

    forward = set()
    stack = list(initial)
    while stack:
        node = stack.pop()
        if node in forward:
            continue
        forward.add(node)
        for nxt, _ in succ[node]:
            stack.append(nxt)

    accepting = {(h, v) for h, v in nodes if h == one}
    pred = {node: [] for node in nodes}
    for node in nodes:
        for nxt, _ in succ[node]:
            pred[nxt].append(node)
    backward = set()
    stack = [n for n in accepting]
    while stack:
        node = stack.pop()
        if node in backward:
            continue
        backward.add(node)
        for p in pred[node]:
            stack.append(p)

    core = forward & backward
    color = {}

    def has_cycle(node):
        color[node] = 1
        for nxt, _ in succ[node]:
            if nxt not in core:
                continue
            if color.get(nxt) == 1:
                return True
            if color.get(nxt) is None and has_cycle(nxt):
                return True
        color[node] = 2
        return False

    for node in sorted(core):
        if color.get(node) is None and has_cycle(node):
            return Decision(False, node)

    # finite: enumerate the strongly fixed paths as witnesses
    witnesses = []
    for v in sorted(graph.vertices):
        start = (g, v)
        if start not in core:
            continue
        stack = [(start, ())]
        while stack:
            node, walk = stack.pop()
            if node[0] == one and len(witnesses) <= MAX_FIXED_PATH_WITNESSES:
                edges = walk
                path = GraphPath(graph, edges, graph.edges[edges[-1]].src if edges else node[1])
                witnesses.append(path.describe())
            for nxt, i in succ[node]:
                if nxt in core:
                    stack.append((nxt, walk + (i,)))
    return Decision(True, tuple(sorted(set(witnesses))))


def hausdorff_certificate(action: SelfSimilarAction) -> Decision:
    """Sufficient certificate: every non-identity group element has finitely
    many strongly fixed paths (the identity fixes everything, so it is
    exempt; its minimal fixed paths are just the vertices)."""
    for g in range(action.group.size):
        if g == action.group.identity:
            continue
        d = strongly_fixed_finite(action, g)
        if not d.value:
            return Decision(False, (action.group.labels[g], d.witness))
    return Decision(True)


def all_rees_ss(action: SelfSimilarAction) -> Decision:
    """Strong faithfulness together with condition (M)."""
    rep = faithfulness(action)
    if not rep.strongly_faithful:
        return Decision(False, "not strongly faithful")
    m = condition_M_ss(action)
    if not m.value:
        return Decision(False, ("condition_m", m.witness))
    return Decision(True)


# -- fixtures and parsing --------------------------------------------------------

def trivial_action(graph: DirectedGraph) -> SelfSimilarAction:
    grp = FiniteGroup.trivial()
    return SelfSimilarAction(
        group=grp,
        graph=graph,
        vertex_action={(0, v): v for v in graph.vertices},
        edge_action={(0, e.eid): e.eid for e in graph.edges},
        cocycle={(0, e.eid): 0 for e in graph.edges},
    )


def mirror_action() -> SelfSimilarAction:
    """Z/2 swapping the two loops of the rose with two petals, restricting to
    itself through either edge."""
    grp = FiniteGroup.cyclic(2)
    graph = two_loops()
    return SelfSimilarAction(
        group=grp,
        graph=graph,
        vertex_action={(0, 0): 0, (1, 0): 0},
        edge_action={(0, "a"): "a", (0, "b"): "b", (1, "a"): "b", (1, "b"): "a"},
        cocycle={(0, "a"): 0, (0, "b"): 0, (1, "a"): 1, (1, "b"): 1},
    )


def edge_swap_action() -> SelfSimilarAction:
    """Z/2 swapping two parallel edges of an acyclic doubled arrow; the
    cocycle collapses to the identity after one step.  Exact at depth 1."""
    grp = FiniteGroup.cyclic(2)
    graph = DirectedGraph((0, 1), (Edge("a", 0, 1), Edge("b", 0, 1)))
    return SelfSimilarAction(
        group=grp,
        graph=graph,
        vertex_action={(g, v): v for g in (0, 1) for v in (0, 1)},
        edge_action={(0, "a"): "a", (0, "b"): "b", (1, "a"): "b", (1, "b"): "a"},
        cocycle={(g, e): 0 for g in (0, 1) for e in ("a", "b")},
    )


def vertex_swap_action() -> SelfSimilarAction:
    """Z/2 swapping the two sources of an acyclic join and the two edges with
    them; faithful, but the quotient killing the sources leaves a fixed
    isolated vertex, so not strongly faithful."""
    grp = FiniteGroup.cyclic(2)
    graph = DirectedGraph((0, 1, 2), (Edge("a", 0, 2), Edge("b", 1, 2)))
    return SelfSimilarAction(
        group=grp,
        graph=graph,
        vertex_action={(0, 0): 0, (0, 1): 1, (0, 2): 2,
                       (1, 0): 1, (1, 1): 0, (1, 2): 2},
        edge_action={(0, "a"): "a", (0, "b"): "b", (1, "a"): "b", (1, "b"): "a"},
        cocycle={(0, "a"): 0, (0, "b"): 0, (1, "a"): 1, (1, "b"): 1},
    )


def lazy_z2_action() -> SelfSimilarAction:
    """Z/2 acting trivially on the two-petal rose with trivial cocycle; valid
    but unfaithful."""
    grp = FiniteGroup.cyclic(2)
    graph = two_loops()
    return SelfSimilarAction(
        group=grp,
        graph=graph,
        vertex_action={(0, 0): 0, (1, 0): 0},
        edge_action={(0, "a"): "a", (0, "b"): "b", (1, "a"): "a", (1, "b"): "b"},
        cocycle={(0, "a"): 0, (0, "b"): 0, (1, "a"): 0, (1, "b"): 0},
    )


def action_from_json(obj: dict) -> SelfSimilarAction:
    if not isinstance(obj, dict):
        raise ParseError("action document must be an object")
    try:
        grp = FiniteGroup(
            tuple(tuple(row) for row in obj["group"]["mul"]),
            int(obj["group"]["identity"]),
            tuple(obj["group"].get("labels", [str(i) for i in range(len(obj["group"]["mul"]))])),
        )
        graph = parse_graph(obj["graph"])
        va = {(g, v): int(obj["vertex_action"][g][v])
              for g in range(grp.size) for v in graph.vertices}
        ea = {(g, graph.edges[i].eid): graph.edges[int(obj["edge_action"][g][i])].eid
              for g in range(grp.size) for i in range(len(graph.edges))}
        coc = {(g, graph.edges[i].eid): int(obj["cocycle"][g][i])
               for g in range(grp.size) for i in range(len(graph.edges))}
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"bad action document: {exc}") from exc
    action = SelfSimilarAction(grp, graph, va, ea, coc)
    validate_action(action)
    return action
