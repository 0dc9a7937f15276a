"""Seeded random instances for tests, reports and the CLI."""

from __future__ import annotations

import random
from fractions import Fraction

from .graph import Graph
from .intervals import Interval, IntervalRepresentation, graph_from_intervals
from .sclique import SignedIntervalInstance
from .signed import SignedGraph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_signature(rng: random.Random, g: Graph, q: float = 0.5) -> frozenset:
    return frozenset(e for e in g.sorted_edges() if rng.random() < q)


def random_signed_graph(rng: random.Random, n: int, p: float = 0.4, q: float = 0.5) -> SignedGraph:
    g = random_graph(rng, n, p)
    return SignedGraph(g, random_signature(rng, g, q))


def random_tree(rng: random.Random, n: int) -> Graph:
    return Graph.from_edges(n, [(v, rng.randrange(v)) for v in range(1, n)])


def random_intervals(rng: random.Random, n: int) -> IntervalRepresentation:
    """Half-integer endpoints; each interval is either fresh or nested in / shifted from an earlier one."""
    ivs: list[Interval] = []
    span = 2 * n
    for i in range(n):
        mode = rng.random()
        if ivs and mode < 0.3:
            base = rng.choice(ivs)
            width = base.hi - base.lo
            lo = base.lo + Fraction(rng.randint(0, int(2 * width)), 2) if width else base.lo
            hi = lo + Fraction(rng.randint(0, int(2 * (base.hi - lo))), 2)
        elif ivs and mode < 0.5:
            base = rng.choice(ivs)
            shift = Fraction(rng.randint(-4, 4), 2)
            lo, hi = base.lo + shift, base.hi + shift
        else:
            lo = Fraction(rng.randint(0, 2 * span), 2)
            hi = lo + Fraction(rng.randint(0, span), 2)
        ivs.append(Interval(lo, hi))
    return IntervalRepresentation(tuple(ivs))


def random_interval_instance(rng: random.Random, n: int, q: float = 0.5) -> SignedIntervalInstance:
    rep = random_intervals(rng, n)
    g = graph_from_intervals(rep)
    return SignedIntervalInstance(SignedGraph(g, random_signature(rng, g, q)), rep)


def two_clique_instance(rng: random.Random, n: int, q: float = 0.5) -> SignedIntervalInstance:
    """Instance with exactly two maximal cliques: left, right and spanning intervals."""
    if n < 2:
        raise ValueError("need at least two vertices")
    kinds = ["L", "R"] + [rng.choice("LRA") for _ in range(n - 2)]
    rng.shuffle(kinds)
    shapes = {"L": (0, 1), "R": (2, 3), "A": (0, 3)}
    ivs = []
    for kind in kinds:
        lo, hi = shapes[kind]
        # jitter keeps intervals distinct without changing the two-clique pattern
        ivs.append(Interval(Fraction(lo) + Fraction(rng.randint(0, 3), 8) * (kind == "R"),
                            Fraction(hi) - Fraction(rng.randint(0, 3), 8) * (kind == "L")))
    rep = IntervalRepresentation(tuple(ivs))
    g = graph_from_intervals(rep)
    return SignedIntervalInstance(SignedGraph(g, random_signature(rng, g, q)), rep)
