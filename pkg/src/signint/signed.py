"""Signed graphs: a ground graph plus the set of its negative edges.

A :class:`SignedGraph` value is one representative of its switching class.
Resigning at a vertex set ``S`` flips exactly the edges of the cut ``[S, V-S]``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GroundMismatch, NotACycle, ParseError
from .graph import Graph, _content_lines, _check_edge, _edge, _ints, edge_cut, tree_cycle


@dataclass(frozen=True)
class SignedGraph:
    ground: Graph
    signature: frozenset = frozenset()

    def __post_init__(self):
        sig = frozenset(_edge(u, v) for u, v in self.signature)
        extra = sig - self.ground.edges
        if extra:
            raise ValueError(f"signature edges not in ground: {sorted(extra)}")
        object.__setattr__(self, "signature", sig)

    @classmethod
    def from_signed_edges(cls, n: int, edges: Iterable) -> "SignedGraph":
        """Build from ``(u, v, sign)`` triples, sign being +1/-1 or '+'/'-'."""
        plain, negative = [], []
        for u, v, s in edges:
            plain.append((u, v))
            if s in (-1, "-", "−"):
                negative.append((u, v))
            elif s not in (1, "+"):
                raise ValueError(f"bad sign {s!r}")
        return cls(Graph.from_edges(n, plain), frozenset(negative))

    @property
    def n(self) -> int:
        return self.ground.n

    def sign(self, u: int, v: int) -> int:
        """+1 / -1 for an edge, 0 for a non-edge."""
        e = _edge(u, v)
        if e not in self.ground.edges:
            return 0
        return -1 if e in self.signature else 1

    def signed_edges(self) -> list[tuple[int, int, int]]:
        return [(u, v, self.sign(u, v)) for u, v in self.ground.sorted_edges()]

    def induced(self, vertices: Iterable[int]) -> tuple["SignedGraph", list[int]]:
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [
            (index[u], index[v], self.sign(u, v))
            for u, v in self.ground.edges
            if u in index and v in index
        ]
        return SignedGraph.from_signed_edges(len(old), edges), old


@dataclass(frozen=True)
class NeighborhoodVector:
    basis: tuple
    entries: tuple

    def __post_init__(self):
        if len(self.basis) != len(self.entries):
            raise ValueError("basis and entries differ in length")
        if any(a >= b for a, b in zip(self.basis, self.basis[1:])):
            raise ValueError("basis must be strictly increasing")

    def __neg__(self):
        return NeighborhoodVector(self.basis, tuple(-x for x in self.entries))


@dataclass(frozen=True)
class BalanceResult:
    """Outcome of :func:`is_balanced`.

    ``side`` is set when balanced (the signature is its cut within each
    component); ``cycle`` is a negative cycle otherwise.
    """

    balanced: bool
    side: frozenset | None = None
    cycle: tuple | None = None

    def __bool__(self):
        return self.balanced


def resign(sg: SignedGraph, s: Iterable[int]) -> SignedGraph:
    return SignedGraph(sg.ground, sg.signature ^ edge_cut(sg.ground, s))


def positive_subgraph(sg: SignedGraph) -> Graph:
    return Graph(sg.n, sg.ground.edges - sg.signature)


def negative_subgraph(sg: SignedGraph) -> Graph:
    return Graph(sg.n, sg.signature)


def _cycle_vertices(sg: SignedGraph, cycle: Sequence[int]) -> list[int]:
    vs = list(cycle)
    if len(vs) > 1 and vs[0] == vs[-1]:
        vs = vs[:-1]
    if len(vs) < 3:
        raise NotACycle(f"a cycle needs at least 3 distinct vertices, got {list(cycle)}")
    if len(set(vs)) != len(vs):
        raise NotACycle(f"repeated vertex in {list(cycle)}")
    for a, b in zip(vs, vs[1:] + vs[:1]):
        if not (0 <= a < sg.n and 0 <= b < sg.n) or not sg.ground.has_edge(a, b):
            raise NotACycle(f"{a}-{b} is not an edge")
    return vs


def cycle_sign(sg: SignedGraph, cycle: Sequence[int]) -> int:
    vs = _cycle_vertices(sg, cycle)
    sign = 1
    for a, b in zip(vs, vs[1:] + vs[:1]):
        sign *= sg.sign(a, b)
    return sign


def is_balanced(sg: SignedGraph) -> BalanceResult:
    """BFS marking per component, rooted at the component's smallest vertex.

    A balanced result returns the vertices marked -1, which never include a
    component root.  An unbalanced result returns the fundamental cycle of the
    first conflicting edge.
    """
    g = sg.ground
    mark = [0] * g.n
    parent: dict = {}
    depth: dict = {}
    for root in range(g.n):
        if mark[root]:
            continue
        mark[root] = 1
        parent[root] = None
        depth[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adj[u]):
                want = mark[u] * sg.sign(u, w)
                if not mark[w]:
                    mark[w] = want
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif mark[w] != want:
                    return BalanceResult(False, cycle=tuple(tree_cycle(parent, depth, u, w)))
    return BalanceResult(True, side=frozenset(v for v in range(g.n) if mark[v] == -1))


def switching_equivalent(sg1: SignedGraph, sg2: SignedGraph) -> bool:
    return switching_witness(sg1, sg2) is not None


def switching_witness(sg1: SignedGraph, sg2: SignedGraph) -> frozenset | None:
    """Resigning set carrying sg1 to sg2, or None when they are not equivalent."""
    if sg1.ground != sg2.ground:
        raise GroundMismatch("signed graphs have different ground graphs")
    result = is_balanced(SignedGraph(sg1.ground, sg1.signature ^ sg2.signature))
    return result.side if result.balanced else None


def neighborhood_vector(sg: SignedGraph, v: int, basis: Sequence[int]) -> NeighborhoodVector:
    basis = tuple(basis)
    return NeighborhoodVector(basis, tuple(sg.sign(v, w) if w != v else 0 for w in basis))


def has_unbalanced_c4(sg: SignedGraph, u: int, v: int) -> tuple | None:
    """Negative 4-cycle ``(u, a, v, b)`` through the pair, smallest ``(a, b)`` first."""
    if u == v:
        raise ValueError("u and v must differ")
    common = sorted(sg.ground.adj[u] & sg.ground.adj[v])
    for a, b in combinations(common, 2):
        if sg.sign(u, a) * sg.sign(a, v) * sg.sign(v, b) * sg.sign(b, u) == -1:
            return (u, a, v, b)
    return None


def vectors_differ_up_to_sign(sg: SignedGraph, u: int, v: int) -> bool:
    """Neighbourhood-vector form of the C4 test over ``S = N(u) & N(v)``."""
    common = sorted(sg.ground.adj[u] & sg.ground.adj[v])
    nu = neighborhood_vector(sg, u, common)
    nv = neighborhood_vector(sg, v, common)
    return nu != nv and nu != -nv


def parse_signed_graph(text: str) -> SignedGraph:
    """Parse ``n m`` then ``u v s`` lines with s in {+, -}."""
    rows = _content_lines(text)
    if not rows:
        raise ParseError("empty signed graph file")
    lineno, header = rows[0]
    n, m = _ints(header, 2, lineno, "header must be 'n m'")
    if n < 0 or m < 0:
        raise ParseError("counts must be non-negative", lineno)
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges but {len(body)} edge lines follow", lineno)
    seen: set = set()
    negative = set()
    for lineno, fields in body:
        if len(fields) != 3:
            raise ParseError("signed edge line must be 'u v s'", lineno)
        u, v = _ints(fields[:2], 2, lineno, "signed edge line must be 'u v s'")
        e = _check_edge(u, v, n, lineno, seen)
        if fields[2] in ("-", "−"):
            negative.add(e)
        elif fields[2] != "+":
            raise ParseError(f"sign must be + or -, got {fields[2]!r}", lineno)
    return SignedGraph(Graph(n, frozenset(seen)), frozenset(negative))


def format_signed_graph(sg: SignedGraph) -> str:
    lines = [f"{sg.n} {sg.ground.m}"]
    lines += [f"{u} {v} {'-' if s < 0 else '+'}" for u, v, s in sg.signed_edges()]
    return "\n".join(lines) + "\n"
