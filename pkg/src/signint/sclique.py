"""Maximum S-cliques of signed interval graphs.

A vertex set is an S-clique when every pair is adjacent or lies on a
negative 4-cycle.  On an interval ground the maximum S-clique becomes a
maximum clique of the *auxiliary graph* (adjacency plus negative-C4 pairs),
i.e. a maximum independent set of its complement, which is computed by
peeling end cliques off each complement component until only two consecutive
cliques remain.  That base case is bipartite and solved exactly by matching.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import NotIntervalInstance, OracleBoundExceeded, WrongCliqueCount
from .graph import (
    Graph,
    complement,
    connected_components,
    induced_subgraph,
    max_independent_set_bipartite,
)
from .intervals import (
    IntervalRepresentation,
    MaximalCliqueOrdering,
    graph_from_intervals,
    maximal_clique_ordering,
    verify_clique_ordering,
)
from .signed import SignedGraph, has_unbalanced_c4, neighborhood_vector

DEFAULT_SCLIQUE_ORACLE_BOUND = 14


@dataclass(frozen=True)
class SignedIntervalInstance:
    sg: SignedGraph
    rep: IntervalRepresentation
    mco: MaximalCliqueOrdering = field(default=None)

    def __post_init__(self):
        ground = graph_from_intervals(self.rep)
        if ground != self.sg.ground:
            raise NotIntervalInstance("signed graph ground differs from the interval graph")
        if self.mco is None:
            object.__setattr__(self, "mco", maximal_clique_ordering(self.rep))

    @classmethod
    def from_intervals(cls, rep: IntervalRepresentation, signature=()) -> "SignedIntervalInstance":
        return cls(SignedGraph(graph_from_intervals(rep), frozenset(signature)), rep)

    @property
    def n(self) -> int:
        return self.sg.n


def is_s_clique(sg: SignedGraph) -> bool:
    for u, v in combinations(range(sg.n), 2):
        if not sg.ground.has_edge(u, v) and has_unbalanced_c4(sg, u, v) is None:
            return False
    return True


def auxiliary_graph(sg: SignedGraph) -> Graph:
    edges = [
        (u, v)
        for u, v in combinations(range(sg.n), 2)
        if sg.ground.has_edge(u, v) or has_unbalanced_c4(sg, u, v) is not None
    ]
    return Graph(sg.n, frozenset(edges))


def _two_clique_pair_graph(sg: SignedGraph, m1: frozenset, m2: frozenset):
    common = sorted(m1 & m2)
    outer = sorted(m1 ^ m2)
    vec = {v: neighborhood_vector(sg, v, common) for v in outer}
    edges = []
    for u, v in combinations(outer, 2):
        if sg.ground.has_edge(u, v) or (vec[u] != vec[v] and vec[u] != -vec[v]):
            edges.append((u, v))
    return Graph.from_edges(sg.n, edges), common, outer


def max_s_clique_two_cliques(inst: SignedIntervalInstance) -> frozenset:
    """Two-clique case: the common part plus a maximum clique of the pair graph."""
    if len(inst.mco) != 2:
        raise WrongCliqueCount(f"expected 2 maximal cliques, got {len(inst.mco)}")
    m1, m2 = inst.mco.cliques
    pair_graph, common, outer = _two_clique_pair_graph(inst.sg, m1, m2)
    sub, old = induced_subgraph(complement(pair_graph), outer)
    # the complement is bipartite: both sides of the symmetric difference are cliques
    best = max_independent_set_bipartite(sub)
    return frozenset(common) | {old[i] for i in best}


def restricted_ordering(mco: MaximalCliqueOrdering, part) -> list[frozenset]:
    """Clique ordering of the interval subgraph induced on ``part``.

    Restrict every clique to ``part`` and drop empty, repeated or non-maximal
    restrictions; the survivors keep the consecutive property.
    """
    part = frozenset(part)
    restricted = [c & part for c in mco.cliques]
    restricted = [c for c in restricted if c]
    out = []
    for c in restricted:
        if c in out or any(c < d for d in restricted):
            continue
        out.append(c)
    return out


@dataclass
class SCliqueRun:
    """Result of one run of the recursion plus the diagnostics it collected.

    ``violations`` lists pairs ``(u, v)``, u private to the first and v private
    to the last clique of a complement component, that are *not* adjacent in
    the complement.  ``repairs`` counts the components where such pairs forced
    the extra branch.
    """

    clique: frozenset
    violations: list
    repairs: int
    subproblems: int


class _Solver:
    def __init__(self, inst: SignedIntervalInstance, repair: bool):
        self.mco = inst.mco
        self.co_aux = complement(auxiliary_graph(inst.sg))
        self.repair = repair
        self.memo: dict = {}
        self.violations: set = set()
        self.repairs = 0

    def solve(self, part: frozenset) -> frozenset:
        if part in self.memo:
            return self.memo[part]
        result = frozenset()
        if part:
            sub, old = induced_subgraph(self.co_aux, part)
            for comp in connected_components(sub):
                result |= self.solve_component(frozenset(old[i] for i in comp))
        self.memo[part] = result
        return result

    def solve_component(self, comp: frozenset) -> frozenset:
        if len(comp) == 1:
            return comp
        if comp in self.memo:
            return self.memo[comp]
        cliques = restricted_ordering(self.mco, comp)
        if len(cliques) <= 2:
            # both end cliques are independent in the complement: bipartite
            sub, old = induced_subgraph(self.co_aux, comp)
            result = frozenset(old[i] for i in max_independent_set_bipartite(sub))
        else:
            first = cliques[0] - cliques[1]
            last = cliques[-1] - cliques[-2]
            loose = [
                (u, v)
                for u in sorted(first)
                for v in sorted(last)
                if not self.co_aux.has_edge(u, v)
            ]
            self.violations.update(loose)
            # tie: prefer the branch that drops the last clique
            result = self.solve(comp - last)
            other = self.solve(comp - first)
            if len(other) > len(result):
                result = other
            if loose and self.repair:
                self.repairs += 1
                for u, v in loose:
                    rest = comp - self.co_aux.adj[u] - self.co_aux.adj[v] - {u, v}
                    cand = frozenset((u, v)) | self.solve(rest)
                    if len(cand) > len(result):
                        result = cand
        self.memo[comp] = result
        return result


def _check_instance(inst: SignedIntervalInstance):
    if not verify_clique_ordering(inst.sg.ground, inst.mco):
        raise NotIntervalInstance("maximal clique ordering does not verify against the ground graph")


def run_max_s_clique(inst: SignedIntervalInstance, repair: bool = True) -> SCliqueRun:
    """Maximum clique of the auxiliary graph via the clique-ordering recursion.

    Each component of the auxiliary complement is split by dropping the
    private vertices of its last clique or of its first clique, whichever
    leaves the larger independent set.  Dropping one side is only safe when
    every first/last private pair is adjacent in the complement; for pairs that
    are not, ``repair`` adds the branch keeping both, which makes the result
    exact.  With ``repair=False`` only the two end-dropping branches run.
    """
    _check_instance(inst)
    if len(inst.mco) == 1:
        return SCliqueRun(frozenset(range(inst.n)), [], 0, 0)
    solver = _Solver(inst, repair)
    clique = solver.solve(frozenset(range(inst.n)))
    return SCliqueRun(clique, sorted(solver.violations), solver.repairs, len(solver.memo))


def max_s_clique(inst: SignedIntervalInstance) -> frozenset:
    return run_max_s_clique(inst).clique


CLAIM_READINGS = ("private", "first-index", "literal")


def component_claim_violations(inst: SignedIntervalInstance, reading: str = "private") -> list:
    """Top-level check of the complete-bipartite property of complement components.

    For every component H of the auxiliary complement, each first-side vertex
    of H should be adjacent (in the complement) to each last-side vertex of H.
    The sides depend on ``reading``:

    * ``private``: vertices lying only in the first / only in the last clique;
    * ``first-index``: vertices whose first clique is the first / the last one;
    * ``literal``: every member of the first / last clique.

    Returns the offending pairs (empty when the property holds).
    """
    if reading not in CLAIM_READINGS:
        raise ValueError(f"reading must be one of {CLAIM_READINGS}")
    _check_instance(inst)
    k = len(inst.mco)
    if k < 2:
        return []
    co_aux = complement(auxiliary_graph(inst.sg))
    spans = inst.mco.spans(inst.n)
    if reading == "private":
        first = {v for v in range(inst.n) if spans[v] == (0, 0)}
        last = {v for v in range(inst.n) if spans[v] == (k - 1, k - 1)}
    elif reading == "first-index":
        first = {v for v in range(inst.n) if spans[v][0] == 0}
        last = {v for v in range(inst.n) if spans[v][0] == k - 1}
    else:
        first, last = set(inst.mco.cliques[0]), set(inst.mco.cliques[-1])
    bad = []
    for comp in connected_components(co_aux):
        for u in sorted(comp & first):
            for v in sorted(comp & last):
                if u != v and not co_aux.has_edge(u, v):
                    bad.append((u, v))
    return bad


def max_s_clique_bruteforce(sg: SignedGraph, bound: int | None = None) -> frozenset:
    """Largest U whose induced signed subgraph is an S-clique (lexicographic ties)."""
    limit = DEFAULT_SCLIQUE_ORACLE_BOUND if bound is None else bound
    if sg.n > limit:
        raise OracleBoundExceeded(sg.n, limit)
    for size in range(sg.n, 0, -1):
        for combo in combinations(range(sg.n), size):
            sub, _ = sg.induced(combo)
            if is_s_clique(sub):
                return frozenset(combo)
    return frozenset()
