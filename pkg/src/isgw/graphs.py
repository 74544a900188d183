"""Directed graphs, the path conditions (L), (K), (M), hereditary vertex
sets, quotient graphs, and truncated graph inverse semigroups.

Paths follow the composition convention: a path is written with its
range-end edge first, and a path alpha*beta is alpha appended with beta on
the source side.  Walking a path therefore means traversing its edge tuple
from right to left.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import InverseSemigroup
from .errors import DanglingEndpoint, NotHereditary, Overflow, ParseError, CapExceeded
from .util import Decision

MAX_CONDITION_VERTICES = 12


@dataclass(frozen=True)
class Edge:
    eid: str
    src: int
    rng: int


@dataclass(frozen=True)
class DirectedGraph:
    vertices: tuple  # vertex ids, not necessarily dense after quotients
    edges: tuple  # Edge values; edge indices are positions in this tuple

    def __post_init__(self):
        vs = frozenset(self.vertices)
        for e in self.edges:
            if e.src not in vs or e.rng not in vs:
                raise DanglingEndpoint(f"edge {e.eid} touches a missing vertex")
        if len({e.eid for e in self.edges}) != len(self.edges):
            raise ParseError("duplicate edge ids")

    def edges_into(self, v: int) -> tuple:
        return tuple(i for i, e in enumerate(self.edges) if e.rng == v)

    def edges_out(self, v: int) -> tuple:
        return tuple(i for i, e in enumerate(self.edges) if e.src == v)

    def in_degree(self, v: int) -> int:
        return len(self.edges_into(v))

    def is_acyclic(self) -> bool:
        color = {v: 0 for v in self.vertices}

        def dfs(v):
            color[v] = 1
            for i in self.edges_out(v):
                w = self.edges[i].rng
                if color[w] == 1:
                    return False
                if color[w] == 0 and not dfs(w):
                    return False
            color[v] = 2
            return True

        for v in self.vertices:
            if color[v] == 0 and not dfs(v):
                return False
        return True

    def longest_path_length(self) -> int:
        """Edge count of the longest directed path; only valid when acyclic."""
        memo = {}

        def best(v):
            if v not in memo:
                memo[v] = 0
                memo[v] = max((1 + best(self.edges[i].rng) for i in self.edges_out(v)),
                              default=0)
            return memo[v]

        return max((best(v) for v in self.vertices), default=0)


def parse_graph(obj: dict) -> DirectedGraph:
    if not isinstance(obj, dict):
        raise ParseError("graph document must be an object")
    try:
        n = int(obj["vertices"])
        edges = tuple(Edge(str(e["id"]), int(e["src"]), int(e["rng"]))
                      for e in obj.get("edges", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad graph document: {exc}") from exc
    if n < 0:
        raise ParseError("negative vertex count")
    return DirectedGraph(tuple(range(n)), edges)


@dataclass(frozen=True)
class GraphPath:
    """Edge tuple in composition order (range-end edge first); a bare vertex
    is the length-zero path at that vertex."""

    graph: DirectedGraph = field(compare=False)
    edges: tuple = ()
    src: int = 0

    def __post_init__(self):
        g = self.graph
        if self.src not in frozenset(g.vertices):
            raise DanglingEndpoint(f"no vertex {self.src}")
        for i, j in zip(self.edges, self.edges[1:]):
            if g.edges[i].src != g.edges[j].rng:
                raise ParseError("edges do not compose")
        if self.edges and g.edges[self.edges[-1]].src != self.src:
            raise ParseError("source vertex disagrees with the last edge")

    @property
    def rng(self) -> int:
        return self.graph.edges[self.edges[0]].rng if self.edges else self.src

    @property
    def length(self) -> int:
        return len(self.edges)

    def top_edge(self) -> int | None:
        return self.edges[0] if self.edges else None

    def concat(self, other: "GraphPath") -> "GraphPath":
        if self.src != other.rng:
            raise ParseError("paths do not compose")
        return GraphPath(self.graph, self.edges + other.edges, other.src)

    def extend(self, edge_index: int) -> "GraphPath":
        e = self.graph.edges[edge_index]
        if e.rng != self.src:
            raise ParseError("edge does not extend the path at its source")
        return GraphPath(self.graph, self.edges + (edge_index,), e.src)

    def has_prefix(self, other: "GraphPath") -> bool:
        """True when self = other * tail (other sits at the range end)."""
        k = other.length
        if k == 0:
            return self.rng == other.src
        return self.length >= k and self.edges[:k] == other.edges

    def strip_prefix(self, other: "GraphPath") -> "GraphPath":
        if not self.has_prefix(other):
            raise ParseError("not a prefix")
        return GraphPath(self.graph, self.edges[other.length:], self.src)

    def describe(self) -> str:
        if not self.edges:
            return f"v{self.src}"
        ids = [self.graph.edges[i].eid for i in self.edges]
        return "".join(ids) if all(len(x) == 1 for x in ids) else ".".join(ids)

    def sort_key(self):
        return (self.length, self.edges, self.src)


def vertex_path(g: DirectedGraph, v: int) -> GraphPath:
    return GraphPath(g, (), v)


def edge_path(g: DirectedGraph, i: int) -> GraphPath:
    return GraphPath(g, (i,), g.edges[i].src)


def paths_up_to(g: DirectedGraph, depth: int) -> list:
    """All paths of length at most depth, vertices included."""
    current = [vertex_path(g, v) for v in g.vertices]
    out = list(current)
    for _ in range(depth):
        current = [p.extend(i) for p in current for i in range(len(g.edges))
                   if g.edges[i].rng == p.src]
        out.extend(current)
    return sorted(out, key=GraphPath.sort_key)


# -- reachability -------------------------------------------------------------

def _reachable_from(g: DirectedGraph, start: int, *, forbidden=frozenset()) -> frozenset:
    """Vertices reachable from start by directed walks avoiding a vertex set
    (the start itself is always reachable by the empty walk)."""
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for i in g.edges_out(v):
            w = g.edges[i].rng
            if w not in seen and w not in forbidden:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def _on_cycle_avoiding(g: DirectedGraph, w: int, avoid: int) -> bool:
    """Does w lie on a directed cycle that never visits the vertex avoid?"""
    for i in g.edges_out(w):
        e = g.edges[i]
        if e.rng == avoid:
            continue
        if e.rng == w:
            return True
        if w in _reachable_from(g, e.rng, forbidden=frozenset({avoid})):
            return True
    return False


# -- the three conditions -----------------------------------------------------

def _simple_cycles(g: DirectedGraph, cap: int = 100_000) -> list:
    """Vertex-simple directed cycles as edge-index tuples in walk order,
    enumerated from the least vertex of each cycle."""
    out = []
    for base in sorted(g.vertices):
        stack = [(base, ())]
        while stack:
            v, walk = stack.pop()
            for i in g.edges_out(v):
                e = g.edges[i]
                if e.rng == base:
                    out.append(walk + (i,))
                    if len(out) > cap:
                        raise CapExceeded("too many simple cycles")
                elif e.rng > base and all(g.edges[j].rng != e.rng for j in walk):
                    stack.append((e.rng, walk + (i,)))
    return out


def _first_return_count(g: DirectedGraph, v: int) -> int:
    """Number of return paths at v that avoid v in between; 2 stands for
    'two or more' (pumping an inner cycle yields infinitely many)."""
    simple = []
    stack = [(v, ())]
    while stack:
        u, walk = stack.pop()
        for i in g.edges_out(u):
            e = g.edges[i]
            if e.rng == v:
                simple.append(walk + (i,))
                if len(simple) >= 2:
                    return 2
            elif all(g.edges[j].rng != e.rng for j in walk):
                stack.append((e.rng, walk + (i,)))
    if not simple:
        return 0
    walk = simple[0]
    interior = {g.edges[i].rng for i in walk[:-1]} | {g.edges[i].src for i in walk}
    interior.discard(v)
    if any(_on_cycle_avoiding(g, w, v) for w in interior):
        return 2
    return 1


@dataclass(frozen=True)
class GraphConditions:
    condition_l: Decision
    condition_k: Decision
    condition_m: Decision


def condition_l_graph(g: DirectedGraph) -> Decision:
    """Every vertex-simple cycle passes a vertex of in-degree at least two."""
    for cycle in _simple_cycles(g):
        on_cycle = {g.edges[i].rng for i in cycle}
        if all(g.in_degree(w) < 2 for w in on_cycle):
            return Decision(False, tuple(g.edges[i].eid for i in cycle))
    return Decision(True)


def condition_k_graph(g: DirectedGraph) -> Decision:
    """No vertex is the base of exactly one first-return path."""
    for v in g.vertices:
        if _first_return_count(g, v) == 1:
            return Decision(False, v)
    return Decision(True)


def condition_m_graph(g: DirectedGraph) -> Decision:
    """Every edge e admits a nontrivial return path from s_e to r_e whose
    range-end edge differs from e; decided by exact reachability."""
    for idx, e in enumerate(g.edges):
        reach = _reachable_from(g, e.src)
        ok = any(f.src in reach for j, f in enumerate(g.edges)
                 if j != idx and f.rng == e.rng)
        if not ok:
            return Decision(False, e.eid)
    return Decision(True)


def graph_conditions(g: DirectedGraph) -> GraphConditions:
    if len(g.vertices) > MAX_CONDITION_VERTICES:
        raise CapExceeded(f"graph has more than {MAX_CONDITION_VERTICES} vertices")
    return GraphConditions(
        condition_l=condition_l_graph(g),
        condition_k=condition_k_graph(g),
        condition_m=condition_m_graph(g),
    )


# -- hereditary sets and quotients ---------------------------------------------

@dataclass(frozen=True)
class HereditarySet:
    vertices: frozenset
    saturated: bool


def is_hereditary(g: DirectedGraph, h) -> bool:
    hs = frozenset(h)
    return all(e.src in hs for e in g.edges if e.rng in hs)


def _is_saturated_vertex_set(g: DirectedGraph, h: frozenset) -> bool:
    for v in g.vertices:
        if v in h:
            continue
        incoming = g.edges_into(v)
        if incoming and all(g.edges[i].src in h for i in incoming):
            return False
    return True


def hereditary_sets(g: DirectedGraph) -> list:
    """All hereditary vertex sets with their saturation flags."""
    out = []
    vs = sorted(g.vertices)
    for mask in range(1 << len(vs)):
        h = frozenset(vs[i] for i in range(len(vs)) if mask >> i & 1)
        if is_hereditary(g, h):
            out.append(HereditarySet(h, _is_saturated_vertex_set(g, h)))
    return sorted(out, key=lambda h: (len(h.vertices), tuple(sorted(h.vertices))))


def quotient_graph(g: DirectedGraph, v_set) -> DirectedGraph:
    """Remove a hereditary vertex set and all edges touching it; original
    vertex ids are kept."""
    removed = frozenset(v_set)
    if not is_hereditary(g, removed):
        raise NotHereditary(f"{sorted(removed)} is not hereditary")
    vertices = tuple(v for v in g.vertices if v not in removed)
    edges = tuple(e for e in g.edges if e.src not in removed and e.rng not in removed)
    return DirectedGraph(vertices, edges)


# -- the graph inverse semigroup -----------------------------------------------

ZERO = "0"


@dataclass(frozen=True)
class TruncatedGraphSemigroup:
    """Path-pair semigroup with both path lengths bounded by the depth.

    The model is exact precisely when the graph is acyclic and its longest
    path fits inside the depth; otherwise any product that would need a
    longer path raises Overflow instead of silently truncating.
    """

    graph: DirectedGraph
    depth: int
    elements: tuple  # ZERO followed by (alpha, beta) pairs
    exact: bool

    def index_of(self, alpha: GraphPath, beta: GraphPath) -> int:
        return self.elements.index((alpha, beta))

    def product(self, i: int, j: int) -> int:
        a, b = self.elements[i], self.elements[j]
        if a == ZERO or b == ZERO:
            return 0
        alpha, beta = a
        gamma, nu = b
        if gamma.has_prefix(beta):
            tail = gamma.strip_prefix(beta)
            new_alpha = alpha.concat(tail)
            if new_alpha.length > self.depth:
                raise Overflow(
                    f"product needs a path of length {new_alpha.length} > depth {self.depth}")
            return self.elements.index((new_alpha, nu))
        if beta.has_prefix(gamma):
            tail = beta.strip_prefix(gamma)
            new_beta = nu.concat(tail)
            if new_beta.length > self.depth:
                raise Overflow(
                    f"product needs a path of length {new_beta.length} > depth {self.depth}")
            return self.elements.index((alpha, new_beta))
        return 0

    def involution(self, i: int) -> int:
        if self.elements[i] == ZERO:
            return 0
        alpha, beta = self.elements[i]
        return self.elements.index((beta, alpha))

    def to_inverse_semigroup(self) -> InverseSemigroup:
        if not self.exact:
            raise Overflow(
                "truncated model: the graph has paths beyond the depth bound, "
                "products are not total")
        n = len(self.elements)
        mul = [[self.product(i, j) for j in range(n)] for i in range(n)]
        inv = [self.involution(i) for i in range(n)]
        labels = [ZERO] + [f"({a.describe()},{b.describe()})"
                           for a, b in self.elements[1:]]
        return InverseSemigroup(mul, inv, 0, labels=labels, check=True,
                                check_associativity=(n <= 128))


def graph_semigroup(g: DirectedGraph, depth: int) -> TruncatedGraphSemigroup:
    """Path pairs (alpha, beta) with a common source and lengths at most
    depth, plus zero."""
    if depth < 1:
        raise ParseError("depth must be at least 1")
    paths = paths_up_to(g, depth)
    by_source = {}
    for p in paths:
        by_source.setdefault(p.src, []).append(p)
    pairs = []
    for v in sorted(by_source):
        group = sorted(by_source[v], key=GraphPath.sort_key)
        for alpha in group:
            for beta in group:
                pairs.append((alpha, beta))
    pairs.sort(key=lambda ab: (ab[0].sort_key(), ab[1].sort_key()))
    exact = g.is_acyclic() and g.longest_path_length() <= depth
    return TruncatedGraphSemigroup(g, depth, (ZERO,) + tuple(pairs), exact)


# -- fixture graphs -----------------------------------------------------------

def single_loop() -> DirectedGraph:
    return DirectedGraph((0,), (Edge("e", 0, 0),))


def two_loops() -> DirectedGraph:
    return DirectedGraph((0,), (Edge("a", 0, 0), Edge("b", 0, 0)))


def single_arrow() -> DirectedGraph:
    # u = 0, v = 1, one edge x from u to v
    return DirectedGraph((0, 1), (Edge("x", 0, 1),))
