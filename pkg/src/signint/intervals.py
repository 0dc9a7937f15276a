"""Closed intervals with rational endpoints, their intersection graphs and
maximal clique orderings."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .errors import InvalidOrdering, NotInterval, OracleBoundExceeded, ParseError
from .graph import Graph

DEFAULT_RECOGNITION_BOUND = 9


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        for name in ("lo", "hi"):
            value = getattr(self, name)
            if isinstance(value, float):
                raise TypeError("interval endpoints must be exact (int or Fraction), not float")
            object.__setattr__(self, name, Fraction(value))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def meets(self, other: "Interval") -> bool:
        return max(self.lo, other.lo) <= min(self.hi, other.hi)

    def contains(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


@dataclass(frozen=True)
class IntervalRepresentation:
    intervals: tuple
    labels: tuple = field(default=None, compare=False)

    def __post_init__(self):
        ivs = tuple(iv if isinstance(iv, Interval) else Interval(*iv) for iv in self.intervals)
        if not ivs:
            raise ValueError("an interval representation needs at least one interval")
        object.__setattr__(self, "intervals", ivs)
        labels = self.labels
        if labels is None:
            labels = tuple(str(i) for i in range(len(ivs)))
        labels = tuple(labels)
        if len(labels) != len(ivs):
            raise ValueError("one label per interval required")
        object.__setattr__(self, "labels", labels)

    def __len__(self):
        return len(self.intervals)


@dataclass(frozen=True)
class MaximalCliqueOrdering:
    cliques: tuple

    def __post_init__(self):
        object.__setattr__(self, "cliques", tuple(frozenset(c) for c in self.cliques))

    def __len__(self):
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def spans(self, n: int) -> list[tuple[int, int] | None]:
        """(first, last) clique index per vertex, or None if it is in no clique."""
        out: list = [None] * n
        for idx, clique in enumerate(self.cliques):
            for v in clique:
                out[v] = (idx, idx) if out[v] is None else (out[v][0], idx)
        return out


def graph_from_intervals(rep: IntervalRepresentation) -> Graph:
    ivs = rep.intervals
    edges = [(i, j) for i, j in combinations(range(len(ivs)), 2) if ivs[i].meets(ivs[j])]
    return Graph(len(ivs), frozenset(edges))


def maximal_clique_ordering(rep: IntervalRepresentation) -> MaximalCliqueOrdering:
    """Sweep the endpoints left to right.

    Left endpoints are processed before right endpoints at equal coordinates,
    so touching intervals intersect.  The open set at each right endpoint is a
    candidate; non-maximal and repeated candidates are discarded, and the
    survivors keep their sweep order.
    """
    events = []
    for i, iv in enumerate(rep.intervals):
        events.append((iv.lo, 0, i))
        events.append((iv.hi, 1, i))
    events.sort()
    open_set: set = set()
    candidates = []
    for _, kind, i in events:
        if kind == 0:
            open_set.add(i)
        else:
            candidates.append(frozenset(open_set))
            open_set.discard(i)
    kept = []
    for c in candidates:
        if any(c < other for other in candidates):
            continue
        if c not in kept:
            kept.append(c)
    return MaximalCliqueOrdering(tuple(kept))


def maximal_cliques(g: Graph) -> list[frozenset]:
    """All maximal cliques (Bron-Kerbosch with pivoting), sorted by vertex list."""
    out = []

    def bk(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: (len(p & g.adj[u]), -u))
        for v in sorted(p - g.adj[pivot]):
            bk(r | {v}, p & g.adj[v], x & g.adj[v])
            p = p - {v}
            x = x | {v}

    if g.n:
        bk(set(), set(range(g.n)), set())
    return sorted(out, key=sorted)


def _consecutive(cliques: Sequence[frozenset]) -> bool:
    k = len(cliques)
    for i in range(k):
        for l in range(i + 2, k):
            common = cliques[i] & cliques[l]
            if not common:
                continue
            for j in range(i + 1, l):
                if not common <= cliques[j]:
                    return False
    return True


def verify_clique_ordering(g: Graph, mco: MaximalCliqueOrdering) -> bool:
    cliques = list(mco.cliques)
    if len(set(cliques)) != len(cliques):
        return False
    if set(cliques) != set(maximal_cliques(g)):
        return False
    return _consecutive(cliques)


def is_perfect_elimination_ordering(g: Graph, order: Sequence[int]) -> bool:
    """Check that every vertex's earlier closed neighbourhood is complete."""
    if sorted(order) != list(range(g.n)):
        return False
    placed: set = set()
    for v in order:
        placed.add(v)
        earlier = [u for u in placed if u == v or g.has_edge(u, v)]
        if any(not g.has_edge(a, b) for a, b in combinations(earlier, 2)):
            return False
    return True


def perfect_elimination_ordering(g: Graph, mco: MaximalCliqueOrdering) -> list[int]:
    """Vertices sorted by the first clique that contains them, ties by index.

    Every earlier neighbour of ``v`` contains the point where ``v`` starts, so
    they all lie in ``v``'s first clique.
    """
    if not verify_clique_ordering(g, mco):
        raise InvalidOrdering("clique ordering does not verify against the graph")
    spans = mco.spans(g.n)
    return sorted(range(g.n), key=lambda v: (spans[v][0], v))


def recognize_interval_bruteforce(g: Graph, bound: int | None = None) -> MaximalCliqueOrdering:
    """Try every ordering of the maximal cliques; raise NotInterval if none works."""
    cliques = maximal_cliques(g)
    limit = DEFAULT_RECOGNITION_BOUND if bound is None else bound
    if len(cliques) > limit:
        raise OracleBoundExceeded(len(cliques), limit, what="recognition")
    for perm in permutations(cliques):
        if _consecutive(perm):
            return MaximalCliqueOrdering(perm)
    raise NotInterval(f"none of the {len(cliques)} maximal cliques' orderings is consecutive")


def _parse_endpoint(token: str, lineno: int) -> Fraction:
    num, _, den = token.partition("/")
    try:
        value = Fraction(int(num), int(den) if den else 1)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad endpoint {token!r}; expected num or num/den", lineno) from None
    return value


def parse_intervals(text: str) -> IntervalRepresentation:
    labels, ivs = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 3:
            raise ParseError("interval line must be 'label lo hi'", lineno)
        lo = _parse_endpoint(fields[1], lineno)
        hi = _parse_endpoint(fields[2], lineno)
        if lo > hi:
            raise ParseError(f"empty interval: {lo} > {hi}", lineno)
        labels.append(fields[0])
        ivs.append(Interval(lo, hi))
    if not ivs:
        raise ParseError("no intervals found")
    return IntervalRepresentation(tuple(ivs), tuple(labels))


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_intervals(rep: IntervalRepresentation) -> str:
    return "".join(f"{lab} {_fmt(iv.lo)} {_fmt(iv.hi)}\n" for lab, iv in zip(rep.labels, rep.intervals))


def representation(pairs: Iterable, labels=None) -> IntervalRepresentation:
    """Convenience constructor from ``(lo, hi)`` pairs (ints, Fractions or 'a/b' strings)."""
    ivs = []
    for lo, hi in pairs:
        ivs.append(Interval(Fraction(lo), Fraction(hi)))
    return IntervalRepresentation(tuple(ivs), labels)
