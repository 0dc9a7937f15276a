"""The interval gadget used to show signed colouring of interval graphs is hard.

For a size parameter n > 1 there are three nested families of n intervals::

    A_i = [i/2n, 3 - i/2n]
    B_i = [1/2 + i/2n, 3/2 - i/2n]
    C_i = [3/2 + i/2n, 5/2 - i/2n]

labelled l(B_i) = i, l(A_i) = n + i, l(C_i) = 2n + i.  Vertex index is
label - 1.  H holds labels 1..2n (all B and A intervals), K holds labels
2n+1..3n (the C intervals) and the set called C in the analysis holds
labels n+1..2n, i.e. the A intervals.  Negative edges live inside K.

The analysis predicts the signed chromatic number as ``3n - |L|`` where L,
the set of K-vertices that can reuse a colour of H, is the largest of: a
clique of positive edges inside X, one inside Y, or a biclique of negative
X-Y edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .chromatic import DEFAULT_SOLVER_BOUND, signed_chromatic_number
from .errors import BadSigma, EmptySide
from .graph import Graph, is_clique, max_biclique_bruteforce, max_clique_bruteforce
from .intervals import Interval, IntervalRepresentation, graph_from_intervals
from .signed import SignedGraph, neighborhood_vector

L1_EMPTY = "L1Empty"
L2_EMPTY = "L2Empty"
BOTH_NONEMPTY = "BothNonempty"


def gadget_intervals(n: int) -> IntervalRepresentation:
    if n <= 1:
        raise ValueError("gadget size must be > 1")
    step = Fraction(1, 2 * n)
    half = Fraction(1, 2)
    ivs, labels = [], []
    for i in range(1, n + 1):
        ivs.append(Interval(half + i * step, 3 * half - i * step))
        labels.append(f"B{i}")
    for i in range(1, n + 1):
        ivs.append(Interval(i * step, 3 - i * step))
        labels.append(f"A{i}")
    for i in range(1, n + 1):
        ivs.append(Interval(3 * half + i * step, 5 * half - i * step))
        labels.append(f"C{i}")
    return IntervalRepresentation(tuple(ivs), tuple(labels))


@dataclass(frozen=True)
class GadgetInstance:
    n: int
    rep: IntervalRepresentation
    sg: SignedGraph
    labels: tuple = field(init=False)
    H: frozenset = field(init=False)
    K: frozenset = field(init=False)
    C: frozenset = field(init=False)

    def __post_init__(self):
        n = self.n
        object.__setattr__(self, "labels", tuple(range(1, 3 * n + 1)))
        object.__setattr__(self, "H", frozenset(range(2 * n)))
        object.__setattr__(self, "K", frozenset(range(2 * n, 3 * n)))
        object.__setattr__(self, "C", frozenset(range(n, 2 * n)))


def build_gadget(n: int, sigma_spec=()) -> GadgetInstance:
    """Gadget of size n whose negative edges are the K-internal pairs in ``sigma_spec``."""
    rep = gadget_intervals(n)
    ground = graph_from_intervals(rep)
    K = range(2 * n, 3 * n)
    signature = set()
    for u, v in sigma_spec:
        if u not in K or v not in K:
            raise BadSigma(f"negative edge {u}-{v} leaves K = {K.start}..{K.stop - 1}")
        if not ground.has_edge(u, v):
            raise BadSigma(f"{u}-{v} is not an edge")
        signature.add((min(u, v), max(u, v)))
    return GadgetInstance(n, rep, SignedGraph(ground, frozenset(signature)))


def k_internal_edges(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(2 * n, 3 * n), 2))


def gadget_invariants(inst: GadgetInstance) -> dict[str, bool]:
    """Named structural checks; every value is True on an untampered gadget."""
    n, g = inst.n, inst.sg.ground
    ivs = inst.rep.intervals
    B, A, Cf = range(n), range(n, 2 * n), range(2 * n, 3 * n)
    expected = gadget_intervals(n).intervals
    return {
        "exact_endpoints": len(ivs) == 3 * n and all(a == b for a, b in zip(ivs, expected)),
        "ground_matches_intervals": g == graph_from_intervals(inst.rep),
        "nested_families": all(
            ivs[fam[i]].contains(ivs[fam[j]])
            for fam in (B, A, Cf)
            for i, j in combinations(range(n), 2)
        ),
        "A_meets_all": all(g.has_edge(a, v) for a in A for v in range(3 * n) if v != a),
        "no_B_C_edges": not any(g.has_edge(b, c) for b in B for c in Cf),
        "H_complete": is_clique(g, inst.H),
        "K_complete": is_clique(g, inst.K),
        "C_universal_to_K": all(g.has_edge(c, k) for c in inst.C for k in inst.K),
        "signature_inside_K": all(u in inst.K and v in inst.K for u, v in inst.sg.signature),
    }


@dataclass(frozen=True)
class GadgetAnalysis:
    X: frozenset
    Y: frozenset
    case: str
    best_L_size: int
    predicted_chi: int
    L: frozenset
    case_sizes: dict = field(compare=False)


def gadget_analysis(inst: GadgetInstance, bound: int | None = None) -> GadgetAnalysis:
    sg, n = inst.sg, inst.n
    basis = sorted(inst.C)
    if not all(sg.ground.has_edge(c, k) for c in inst.C for k in inst.K):
        raise ValueError("some K vertex misses part of C; not a gadget")
    ones = tuple([1] * n)
    minus = tuple([-1] * n)
    X = frozenset(v for v in inst.K if neighborhood_vector(sg, v, basis).entries == ones)
    Y = frozenset(v for v in inst.K if neighborhood_vector(sg, v, basis).entries == minus)

    candidates = {}
    candidates[L1_EMPTY] = _positive_clique_in(sg, Y, bound)
    candidates[L2_EMPTY] = _positive_clique_in(sg, X, bound)
    negative = Graph.from_edges(
        sg.n, [(u, v) for u, v in sg.signature if (u in X and v in Y) or (u in Y and v in X)]
    )
    try:
        left, right = max_biclique_bruteforce(negative, X, Y, bound=bound)
        candidates[BOTH_NONEMPTY] = left | right
    except EmptySide:
        candidates[BOTH_NONEMPTY] = frozenset()
    sizes = {case: len(found) for case, found in candidates.items()}
    case = max(sizes, key=lambda c: sizes[c])  # first listed case wins ties
    best = sizes[case]
    return GadgetAnalysis(X, Y, case, best, 3 * n - best, candidates[case], sizes)


def _positive_clique_in(sg: SignedGraph, part: frozenset, bound) -> frozenset:
    if not part:
        return frozenset()
    sub, old = sg.induced(part)
    positive = Graph(sub.n, sub.ground.edges - sub.signature)
    return frozenset(old[i] for i in max_clique_bruteforce(positive, bound=bound))


def gadget_report(inst: GadgetInstance, solver_bound: int | None = None) -> dict:
    """Invariant checklist, the analysis and (when small enough) the exact value.

    Keys appear in a fixed order; vertex sets are sorted lists.
    """
    checks = gadget_invariants(inst)
    report: dict = {
        "n": inst.n,
        "vertices": 3 * inst.n,
        "negative_edges": [list(e) for e in sorted(inst.sg.signature)],
        "invariants": checks,
        "invariants_ok": all(checks.values()),
    }
    try:
        analysis = gadget_analysis(inst)
    except ValueError as exc:
        report["analysis"] = {"error": str(exc)}
        report["exact"] = {"status": "skipped", "reason": "analysis failed"}
        return report
    report["analysis"] = {
        "X": sorted(analysis.X),
        "Y": sorted(analysis.Y),
        "case": analysis.case,
        "case_sizes": analysis.case_sizes,
        "L": sorted(analysis.L),
        "best_L_size": analysis.best_L_size,
        "predicted_chi": analysis.predicted_chi,
    }
    limit = DEFAULT_SOLVER_BOUND if solver_bound is None else solver_bound
    if 3 * inst.n > limit:
        report["exact"] = {"status": "skipped", "reason": f"{3 * inst.n} vertices > solver bound {limit}"}
    else:
        k, coloring = signed_chromatic_number(inst.sg, bound=limit)
        report["exact"] = {
            "status": "computed",
            "chi_s": k,
            "switching": sorted(coloring.switching),
            "colors": list(coloring.colors),
            "matches_prediction": k == analysis.predicted_chi,
        }
    return report
