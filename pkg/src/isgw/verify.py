"""Theorem-verification harness.

Every structural statement the workbench relies on is re-checked on every
applicable corpus instance; a "fail" entry is a falsification event (or a
library bug) and the CLI turns it into a nonzero exit.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor

from . import congruences as cg
from . import ideals_filters as ifl
from . import relations as rel
from . import selfsimilar as ss
from .core import InverseSemigroup
from .corpus import CorpusInstance, builtin_corpus
from .errors import InternalContract
from .graphs import graph_conditions, hereditary_sets, quotient_graph
from .groupoid import (
    build_groupoids,
    condition_K,
    germ_of,
    verify_structure_theorems,
    weakly_fixed_criterion,
)
from .report import Report, TheoremEntry
from .semilattice import Semilattice, is_0_disjunctive, is_cover
from .util import subsets

ENUM_BOUND = 8
SAMPLES_PER_INSTANCE = 40


def _entry(name: str, ok: bool, counterexample=None, detail: str = "",
           hypothesis: str = "met") -> TheoremEntry:
    return TheoremEntry(name, "pass" if ok else "fail", hypothesis=hypothesis,
                        detail=detail, counterexample=counterexample)


def _skipped(name: str, detail: str) -> TheoremEntry:
    return TheoremEntry(name, "skipped", detail=detail)


# -- semigroup-level checks -----------------------------------------------------

def check_collapse_congruence(s: InverseSemigroup) -> list:
    """The double-arrow relation is a 0-restricted congruence and collapsing
    by it produces a 0-disjunctive semilattice; the two degenerate directions
    relating it to the 0-disjunctive property hold as well."""
    out = []
    try:
        da = cg.double_arrow(s)
        out.append(_entry("double_arrow_is_zero_restricted_congruence", True))
    except InternalContract as exc:
        out.append(_entry("double_arrow_is_zero_restricted_congruence", False,
                          detail=str(exc)))
        return out
    q = cg.quotient(s, da, check=False).quotient
    out.append(_entry("collapse_semilattice_zero_disjunctive",
                      is_0_disjunctive(Semilattice.from_semigroup(q)).value))
    zero_disj = is_0_disjunctive(Semilattice.from_semigroup(s)).value
    fundamental = rel.h_and_mu(s).fundamental
    if da.is_equality():
        out.append(_entry("trivial_collapse_forces_zero_disjunctive", zero_disj))
    if fundamental and zero_disj:
        out.append(_entry("fundamental_zero_disjunctive_forces_trivial_collapse",
                          da.is_equality()))
    if fundamental:
        out.append(_entry("zero_disjunctive_iff_trivial_collapse_when_fundamental",
                          zero_disj == da.is_equality()))
    return out


def check_mu_properties(s: InverseSemigroup) -> list:
    out = []
    rep = rel.h_and_mu(s)
    mu, h = rep.mu, rep.h
    inside = all(h.same(a, b)
                 for cls in mu.classes for a in cls for b in cls)
    out.append(_entry("mu_contained_in_h", inside))
    mu_cong = cg.make_congruence(s, lambda a: mu.class_index[a])
    try:
        cg.quotient(s, mu_cong)  # validates compatibility
        ok = mu_cong.is_idempotent_separating
        out.append(_entry("mu_is_idempotent_separating_congruence", ok))
    except Exception as exc:  # noqa: BLE001 - report, never swallow
        out.append(_entry("mu_is_idempotent_separating_congruence", False, detail=str(exc)))
    if s.n <= ENUM_BOUND:
        maximal = True
        witness = None
        for rho in cg.enumerate_congruences(s, ENUM_BOUND):
            if rho.is_idempotent_separating:
                if not all(mu.same(a, b) for clsx in rho.classes
                           for a in clsx for b in clsx):
                    maximal = False
                    witness = rho.partition()
                    break
        out.append(_entry("mu_is_maximum_idempotent_separating", maximal, witness))
    else:
        out.append(_skipped("mu_is_maximum_idempotent_separating", "size bound"))
    return out


def check_hull_kernel(s: InverseSemigroup, rng: random.Random) -> list:
    out = []
    lattice = Semilattice.from_semigroup(s)
    space = ifl.filter_space(lattice)  # internally cross-checks tight = ultra = atoms
    out.append(_entry("tight_equals_ultra_equals_atoms", True))

    ideals_of_e = ifl.order_ideals(lattice)
    ok = all(ifl.kernel(lattice, ifl.hull(lattice, x)) == x for x in ideals_of_e)
    out.append(_entry("kernel_hull_identity", ok))

    expansion_ok = True
    witness = None
    mins = list(space.mins)
    pool = list(subsets(mins)) if len(mins) <= 10 else [
        frozenset(rng.sample(mins, rng.randint(0, len(mins)))) for _ in range(30)]
    for a in pool:
        hk = frozenset(ifl.hull(lattice, ifl.kernel(lattice, a)))
        if not frozenset(a) <= hk:
            expansion_ok = False
            witness = a
            break
    out.append(_entry("hull_kernel_expansion", expansion_ok, witness))

    saturated_ok = True
    witness = None
    for a in pool:
        tight_a = frozenset(a) & space.tight
        k = ifl.kernel(lattice, tight_a)
        if not ifl.is_saturated_order_ideal(lattice, k):
            saturated_ok = False
            witness = tight_a
            break
    out.append(_entry("kernel_of_tight_family_is_saturated", saturated_ok, witness))

    samples = 0
    lemma_ok = True
    witness = None
    trapping_holds = True  # finite semilattices always trap; asserted elsewhere
    nonzero = list(lattice.nonzero())
    while samples < SAMPLES_PER_INSTANCE and nonzero:
        e = rng.choice(nonzero)
        below = [x for x in lattice.below(e) if x != lattice.zero]
        c = [x for x in below if rng.random() < 0.5]
        members = space.tight_basic_set(e, c)
        covers = is_cover(lattice, e, c, require_below=True).value
        if (len(members) == 0) != covers:
            lemma_ok = False
            witness = (e, tuple(c))
            break
        if trapping_holds:
            # under trapping, every filter in the set holds an element below e
            # orthogonal to all the excluded ones
            for m in members:
                found = any(
                    lattice.leq(m, x) and lattice.leq(x, e)
                    and all(lattice.meet(x, ei) == lattice.zero for ei in c)
                    for x in lattice.elements
                )
                if not found:
                    lemma_ok = False
                    witness = ("separating_element", e, tuple(c), m)
                    break
        if not lemma_ok:
            break
        samples += 1
    out.append(_entry("empty_tight_basic_set_iff_cover", lemma_ok, witness,
                      detail=f"samples={samples}"))

    rep = ifl.invariant_subsets(s)
    out.append(_entry("hull_invariance_transfer", rep.hull_invariance.value,
                      rep.hull_invariance.witness))
    hyp = rep.hypothesis
    out.append(_entry("tight_ideal_correspondence", rep.tight_correspondence.value,
                      rep.tight_correspondence.witness, hypothesis=hyp))
    return out


def check_ideal_correspondence(s: InverseSemigroup) -> list:
    out = []
    try:
        ideals = ifl.enumerate_ideals(s)  # verifies the SXS round trips
        out.append(_entry("ideal_correspondence", True,
                          detail=f"{len(ideals)} ideals"))
    except InternalContract as exc:
        out.append(_entry("ideal_correspondence", False, detail=str(exc)))
        return out
    lattice = Semilattice.from_semigroup(s)
    agree = True
    witness = None
    for ideal in ideals:
        e_level = ideal.saturated
        s_level = not ifl.s_level_saturated(s, ideal.elements)
        if e_level != s_level:
            agree = False
            witness = sorted(ideal.elements)
            break
    out.append(_entry("saturation_agrees_at_both_levels", agree, witness))
    return out


def check_beta_action(s: InverseSemigroup) -> list:
    lattice = Semilattice.from_semigroup(s)
    mins = [e for e in s.idempotents if e != s.zero]
    ok = True
    witness = None
    for a in s.elements():
        dom = s.product(s.star(a), a)
        for m in mins:
            if not s.leq(m, dom):
                continue
            image = ifl.beta_act(s, a, m)
            back = ifl.beta_act(s, s.star(a), image)
            if back != m:
                ok = False
                witness = (a, m)
                break
    return [_entry("conjugation_action_is_invertible", ok, witness)]


def check_structure_theorems(s: InverseSemigroup) -> list:
    return verify_structure_theorems(s)


def check_effectiveness_chain(s: InverseSemigroup) -> list:
    rep = weakly_fixed_criterion(s)
    out = [_entry("effectiveness_chain", rep.chain_holds,
                  detail=(f"effective={rep.effective} criterion={rep.criterion.value} "
                          f"collapse_fundamental={rep.quotient_fundamental}"))]
    out.append(_entry("condition_l_iff_tight_effective",
                      cg.condition_L(s) == rep.effective))
    return out


def check_condition_k(s: InverseSemigroup) -> list:
    rep = condition_K(s)
    hyp = "met" if rep.trapping.value else "unmet-recorded"
    if rep.consistent is None:
        return [TheoremEntry("strong_effectiveness_iff_condition_k", "skipped",
                             hypothesis=hyp, detail="trapping fails; values recorded",
                             counterexample=(rep.value, rep.strongly_effective))]
    return [_entry("strong_effectiveness_iff_condition_k", rep.consistent,
                   (rep.value, rep.strongly_effective), hypothesis=hyp)]


def check_all_rees(s: InverseSemigroup) -> list:
    out = []
    try:
        rep = cg.all_congruences_rees(s, bound=ENUM_BOUND)
    except InternalContract as exc:
        return [_entry("all_rees_characterization", False, detail=str(exc))]
    if rep.method_a is None:
        out.append(_skipped("all_rees_characterization", "size bound"))
    else:
        out.append(_entry("all_rees_characterization", bool(rep.agree),
                          detail=f"value={rep.value}"))
    if rep.value:
        k = condition_K(s)
        out.append(_entry("all_rees_implies_condition_k", k.value))
    try:
        cg.is_congruence_free(s, bound=ENUM_BOUND)
        out.append(_entry("congruence_free_characterization", True))
    except InternalContract as exc:
        out.append(_entry("congruence_free_characterization", False, detail=str(exc)))
    if s.n <= ENUM_BOUND:
        rigid = all(r.is_equality() for r in cg.enumerate_congruences(s, ENUM_BOUND)
                    if r.is_zero_restricted)
        expected = rel.h_and_mu(s).fundamental and \
            is_0_disjunctive(Semilattice.from_semigroup(s)).value
        out.append(_entry("zero_restricted_rigidity", rigid == expected,
                          detail=f"rigid={rigid}"))
    else:
        out.append(_skipped("zero_restricted_rigidity", "size bound"))
    return out


def _generated_homomorphisms(s: InverseSemigroup):
    yield rel.SemigroupHomomorphism(s, s, tuple(range(s.n)))
    if s.n <= ENUM_BOUND:
        rhos = cg.enumerate_congruences(s, ENUM_BOUND)
    else:
        rhos = [cg.rees_congruence(s, i.elements) for i in ifl.enumerate_ideals(s)]
    for rho in rhos:
        q = cg.quotient(s, rho, check=False)
        yield q.as_homomorphism()
    for e in s.idempotents:
        closed = {s.zero, e}
        sub, to_sub = s.restrict(closed)
        back = {v: k for k, v in to_sub.items()}
        yield rel.SemigroupHomomorphism(sub, s, tuple(back[i] for i in range(sub.n)))


def check_injectivity_criteria(s: InverseSemigroup) -> list:
    count = 0
    try:
        for phi in _generated_homomorphisms(s):
            rel.injectivity_criteria(phi)
            count += 1
    except InternalContract as exc:
        return [_entry("injectivity_criteria_equivalence", False, detail=str(exc))]
    return [_entry("injectivity_criteria_equivalence", True,
                   detail=f"homomorphisms={count}")]


def check_germ_canonical_stability(s: InverseSemigroup) -> list:
    pair = build_groupoids(s)
    ok = True
    witness = None
    for u in pair.universal.arrows:
        m = pair.universal.source(u)
        g = germ_of(s, u, m)
        if g.rep != u or g.source != m:
            ok = False
            witness = u
            break
    return [_entry("germ_canonicalization_stable", ok, witness)]


SEMIGROUP_CHECKS = [
    check_collapse_congruence,
    check_mu_properties,
    check_ideal_correspondence,
    check_beta_action,
    check_structure_theorems,
    check_effectiveness_chain,
    check_condition_k,
    check_all_rees,
    check_injectivity_criteria,
    check_germ_canonical_stability,
]


# -- graph-level checks -----------------------------------------------------------

def check_graph_instance(inst: CorpusInstance) -> list:
    g = inst.graph
    out = []
    conditions = graph_conditions(g)

    all_free = all(
        all(quotient_graph(g, h.vertices).in_degree(v) != 1
            for v in quotient_graph(g, h.vertices).vertices)
        for h in hereditary_sets(g)
    )
    out.append(_entry("condition_m_iff_indegree_free_quotients",
                      conditions.condition_m.value == all_free,
                      detail=f"m={conditions.condition_m.value}"))

    exact = inst.meta.get("exact")
    if exact is None:
        out.append(_skipped("graph_zero_disjunctive_iff_indegree", "not exact"))
        out.append(_skipped("graph_all_rees_iff_condition_m", "not exact"))
        return out

    s = exact.to_inverse_semigroup()
    zero_disj = is_0_disjunctive(Semilattice.from_semigroup(s)).value
    indeg_free = all(g.in_degree(v) != 1 for v in g.vertices)
    out.append(_entry("graph_zero_disjunctive_iff_indegree",
                      zero_disj == indeg_free,
                      detail=f"zero_disjunctive={zero_disj} indegree_free={indeg_free}"))

    rees = cg.all_congruences_rees(s, bound=max(ENUM_BOUND, 11))
    out.append(_entry("graph_all_rees_iff_condition_m",
                      rees.value == conditions.condition_m.value,
                      detail=f"all_rees={rees.value} m={conditions.condition_m.value}"))

    atoms_count = build_groupoids(s).tight.n_units()
    sources = [v for v in g.vertices if g.in_degree(v) == 0]
    maximal_paths = sum(
        1 for p in _all_paths(exact) if p.src in sources
    )
    out.append(_entry("tight_units_are_maximal_path_filters",
                      atoms_count == maximal_paths,
                      detail=f"atoms={atoms_count} maximal_paths={maximal_paths}"))

    out.append(_entry("graph_condition_l_matches_collapse",
                      cg.condition_L(s) == conditions.condition_l.value))
    return out


def _all_paths(truncated):
    from .graphs import paths_up_to

    return paths_up_to(truncated.graph, truncated.depth)


# -- action-level checks -----------------------------------------------------------

def check_action_instance(inst: CorpusInstance) -> list:
    a = inst.action
    out = []
    try:
        stats = ss.validate_action(a)
        out.append(_entry("action_axioms_hold", True,
                          detail=f"checks={stats['checks']}"))
    except Exception as exc:  # noqa: BLE001
        return [_entry("action_axioms_hold", False, detail=str(exc))]

    m = ss.condition_M_ss(a)
    indeg_ok = True
    witness = None
    for v_set in ss.hereditary_invariant_sets(a):
        sub_graph = quotient_graph(a.graph, v_set)
        if any(sub_graph.in_degree(v) == 1 for v in sub_graph.vertices):
            indeg_ok = False
            witness = sorted(v_set)
            break
    out.append(_entry("ss_condition_m_iff_indegree_free_quotients",
                      m.value == indeg_ok, witness,
                      detail=f"m={m.value}"))

    faith = ss.faithfulness(a)
    hyp = faith.hypothesis

    if a.group.size == 1:
        gc = graph_conditions(a.graph)
        out.append(_entry("trivial_group_condition_m_matches_graph",
                          m.value == gc.condition_m.value))
        from .graphs import graph_semigroup, hereditary_sets as hs_graph

        depth = max(1, min(3, a.graph.longest_path_length()
                           if a.graph.is_acyclic() else 2))
        gsem = graph_semigroup(a.graph, depth)
        asem = ss.ss_semigroup(a, depth)
        out.append(_entry("trivial_group_semigroup_matches_graph",
                          len(gsem.elements) == len(asem.elements),
                          detail=f"{len(gsem.elements)} elements"))
        out.append(_entry("trivial_group_hereditary_sets_match",
                          [h.vertices for h in hs_graph(a.graph)]
                          == ss.hereditary_invariant_sets(a)))

    exact = inst.meta.get("exact")
    if exact is None:
        for name in ("mu_path_criterion", "fundamental_iff_faithful",
                     "ss_quotients_zero_disjunctive_iff_m",
                     "vertex_ideal_path_criterion",
                     "hereditary_invariant_ideal_correspondence",
                     "quotient_action_isomorphism",
                     "ss_all_rees_iff_strongly_faithful_and_m"):
            out.append(_skipped(name, "not exact"))
        return out

    s = exact.to_inverse_semigroup()
    out.extend(_check_exact_action(a, exact, s, faith, m))
    return out


def _paths_from(action, vertex):
    from .graphs import paths_up_to

    depth = action.graph.longest_path_length()
    return [p for p in paths_up_to(action.graph, depth) if p.rng == vertex]


def _check_exact_action(a, truncated, s, faith, m) -> list:
    out = []
    mu = rel.h_and_mu(s).mu
    elements = truncated.elements

    ok = True
    witness = None
    for i in range(1, len(elements)):
        for j in range(1, len(elements)):
            t1, t2 = elements[i], elements[j]
            if t1.alpha != t2.alpha or t1.beta != t2.beta:
                continue
            agree = all(
                ss.act_on_path(a, t1.g, gamma)[0] == ss.act_on_path(a, t2.g, gamma)[0]
                for gamma in _paths_from(a, t1.beta.src)
            )
            if mu.same(i, j) != agree:
                ok = False
                witness = (t1.describe(a), t2.describe(a))
                break
        if not ok:
            break
    # distinct (alpha, beta) shapes are never mu-related beyond idempotent data;
    # the relation itself was computed on all pairs above where it can hold
    out.append(_entry("mu_path_criterion", ok, witness))

    out.append(_entry("fundamental_iff_faithful",
                      rel.h_and_mu(s).fundamental == faith.faithful,
                      detail=f"faithful={faith.faithful}"))

    all_disj = all(
        is_0_disjunctive(Semilattice.from_semigroup(
            cg.rees_quotient(s, _vertex_ideal(a, truncated, s, v_set)).quotient)).value
        for v_set in ss.hereditary_invariant_sets(a)
    )
    out.append(_entry("ss_quotients_zero_disjunctive_iff_m", all_disj == m.value,
                      detail=f"m={m.value} all_quotients={all_disj}"))

    ok = True
    witness = None
    one = a.group.identity
    vertex_idem = {}
    for i in range(1, len(elements)):
        t = elements[i]
        if t.g == one and t.alpha.length == 0 and t.alpha == t.beta:
            vertex_idem[t.alpha.src] = i
    for u in a.graph.vertices:
        for v in a.graph.vertices:
            iu, iv = vertex_idem[u], vertex_idem[v]
            in_ideal = iu in ifl.principal_ideal(s, iv)
            has_path = any(
                p.src == a.act_vertex(h, u)
                for h in range(a.group.size)
                for p in _paths_from(a, v)
            )
            if in_ideal != has_path:
                ok = False
                witness = (u, v)
                break
        if not ok:
            break
    out.append(_entry("vertex_ideal_path_criterion", ok, witness))

    ideals_by_v = {}
    ok = True
    witness = None
    for v_set in ss.hereditary_invariant_sets(a):
        ideal = _vertex_ideal(a, truncated, s, v_set)
        ideals_by_v[v_set] = ideal
        back = frozenset(
            elements[i].alpha.src for i in ideal if i != 0
        )
        if back != frozenset(v_set):
            ok = False
            witness = sorted(v_set)
            break
    all_ideals = {i.elements for i in ifl.enumerate_ideals(s)}
    generated = set(ideals_by_v.values())
    if all_ideals != generated:
        ok = False
        witness = "ideal sets differ"
    out.append(_entry("hereditary_invariant_ideal_correspondence", ok, witness))

    ok = True
    witness = None
    for v_set in ss.hereditary_invariant_sets(a):
        ideal = ideals_by_v[v_set]
        q = cg.rees_quotient(s, ideal)
        sub_action = ss.quotient_action(a, v_set)
        sub_trunc = ss.ss_semigroup(sub_action, truncated.depth)
        sub_s = sub_trunc.to_inverse_semigroup()
        if not _rees_quotient_matches(a, truncated, q, sub_action, sub_trunc, sub_s, v_set):
            ok = False
            witness = sorted(v_set)
            break
    out.append(_entry("quotient_action_isomorphism", ok, witness))

    rees = cg.all_congruences_rees(s, bound=max(ENUM_BOUND, 11))
    claimed = ss.all_rees_ss(a)
    out.append(_entry("ss_all_rees_iff_strongly_faithful_and_m",
                      rees.value == claimed.value,
                      detail=f"semigroup={rees.value} action={claimed.value}"))
    return out


def _vertex_ideal(a, truncated, s, v_set) -> frozenset:
    """Elements of the exact triple semigroup whose source vertex lies in the
    hereditary invariant set (plus zero): the ideal generated by the set."""
    elements = truncated.elements
    members = {0}
    for i in range(1, len(elements)):
        if elements[i].alpha.src in v_set:
            members.add(i)
    return frozenset(members)


def _rees_quotient_matches(a, truncated, q, sub_action, sub_trunc, sub_s, v_set) -> bool:
    """The projection that kills triples entering the vertex set implements an
    isomorphism between the Rees quotient and the quotient-action semigroup."""
    elements = truncated.elements
    sub_elements = sub_trunc.elements

    def project(i: int) -> int:
        if i == 0 or elements[i].alpha.src in v_set:
            return 0
        t = elements[i]
        target = ss.SSTriple(
            _transplant(sub_action.graph, t.alpha),
            t.g,
            _transplant(sub_action.graph, t.beta),
        )
        return sub_elements.index(target)

    mapping = {}
    for i in range(len(elements)):
        qi = q.projection[i]
        pi = project(i)
        if qi in mapping and mapping[qi] != pi:
            return False
        mapping[qi] = pi
    if sorted(mapping.keys()) != list(range(q.quotient.n)):
        return False
    if sorted(set(mapping.values())) != list(range(sub_s.n)):
        return False
    for x in range(q.quotient.n):
        for y in range(q.quotient.n):
            if mapping[q.quotient.product(x, y)] != sub_s.product(mapping[x], mapping[y]):
                return False
    return True


def _transplant(graph, path):
    """Rebuild a path object over the quotient graph (edge ids are stable)."""
    from .graphs import GraphPath

    eids = [path.graph.edges[i].eid for i in path.edges]
    index_of = {e.eid: i for i, e in enumerate(graph.edges)}
    return GraphPath(graph, tuple(index_of[x] for x in eids), path.src)


# -- harness ----------------------------------------------------------------------

def verify_instance(inst: CorpusInstance, seed: int = 0) -> Report:
    report = Report(instance=inst.uid)
    rng = random.Random(f"{seed}:{inst.uid}")
    if inst.kind == "semigroup":
        s = inst.semigroup
        for check in SEMIGROUP_CHECKS:
            for entry in check(s):
                report.add_theorem(entry)
        for entry in check_hull_kernel(s, rng):
            report.add_theorem(entry)
    elif inst.kind == "graph":
        for entry in check_graph_instance(inst):
            report.add_theorem(entry)
    elif inst.kind == "action":
        for entry in check_action_instance(inst):
            report.add_theorem(entry)
    return report


def thread_count() -> int:
    raw = os.environ.get("ISGW_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def verify_corpus(instances=None, seed: int = 0) -> list:
    """Verify every instance; deterministic ordered output regardless of the
    worker count (ISGW_THREADS)."""
    if instances is None:
        instances = builtin_corpus(seed)
    workers = thread_count()
    if workers == 1:
        return [verify_instance(inst, seed) for inst in instances]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda i: verify_instance(i, seed), instances))


def summarize(reports: list) -> dict:
    per_theorem = {}
    for rep in reports:
        for name, entry in rep.theorems.items():
            base = name.split("#")[0]
            bucket = per_theorem.setdefault(base, {"pass": 0, "fail": 0, "skipped": 0})
            bucket[entry.status] += 1
    failures = [(rep.instance, name) for rep in reports
                for name, entry in rep.theorems.items() if entry.failed]
    return {"theorems": per_theorem, "failures": failures,
            "instances": len(reports)}
