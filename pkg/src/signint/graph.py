"""Simple undirected graphs on vertices ``0..n-1`` and the exact oracles built on them.

Everything here is deliberately small-scale: the clique, coloring and biclique
routines are exhaustive searches guarded by an explicit vertex bound, while the
bipartite independent-set routine is polynomial (augmenting paths + König).

Whenever several optimal witnesses exist, the one whose sorted vertex list is
lexicographically smallest is returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import EmptySide, NotBipartite, OracleBoundExceeded, ParseError

DEFAULT_ORACLE_BOUND = 24


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            if u > v:
                raise ValueError(f"edge {e} is not normalized (use Graph.from_edges)")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable = ()) -> "Graph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            norm.add(_edge(int(u), int(v)))
        return cls(n, frozenset(norm))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, frozenset())

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edges

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph relabelled to ``0..k-1``; also returns the new->old map.

    Relabelling is order preserving, so lexicographic tie-breaks carry over.
    """
    old = sorted(set(vertices))
    index = {v: i for i, v in enumerate(old)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph.from_edges(len(old), edges), old


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return not any(g.has_edge(u, v) for u, v in combinations(vs, 2))


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(e for e in combinations(range(g.n), 2) if e not in g.edges))


def connected_components(g: Graph) -> list[frozenset]:
    """Vertex partition into components, ordered by smallest member."""
    seen = [False] * g.n
    parts = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        parts.append(frozenset(comp))
    return parts


def edge_cut(g: Graph, s: Iterable[int]) -> frozenset:
    side = set(s)
    return frozenset(e for e in g.edges if (e[0] in side) != (e[1] in side))


def tree_cycle(parent: dict, depth: dict, u: int, v: int) -> list[int]:
    """Cycle closed by the non-tree edge ``uv`` in a BFS/DFS forest."""
    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        left.append(a)
        right.append(b)
    # left ends at the common ancestor; right repeats it
    return left + right[-2::-1]


def two_coloring(g: Graph) -> list[int]:
    """Side (0/1) of each vertex; raises NotBipartite with an odd cycle."""
    side = [-1] * g.n
    parent: dict = {}
    depth: dict = {}
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        parent[root] = None
        depth[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adj[u]):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif side[w] == side[u]:
                    raise NotBipartite(tree_cycle(parent, depth, u, w))
    return side


def max_matching_bipartite(g: Graph, sides: list[int] | None = None) -> dict[int, int]:
    """Maximum matching by repeated augmenting-path search (Kuhn).

    Returns the matching as a symmetric dict ``v -> partner``.
    """
    if sides is None:
        sides = two_coloring(g)
    match: dict[int, int] = {}

    def augment(u, visited):
        for w in sorted(g.adj[u]):
            if w in visited:
                continue
            visited.add(w)
            if w not in match or augment(match[w], visited):
                match[u] = w
                match[w] = u
                return True
        return False

    for u in range(g.n):
        if sides[u] == 0 and u not in match:
            augment(u, set())
    return match


def _bipartite_alpha(g: Graph, sides: list[int], allowed: set) -> int:
    sub, _ = induced_subgraph(g, allowed)
    sub_sides = [sides[v] for v in sorted(allowed)]
    return sub.n - len(max_matching_bipartite(sub, sub_sides)) // 2


def max_independent_set_bipartite(g: Graph) -> frozenset:
    """Lexicographically smallest maximum independent set of a bipartite graph.

    The size comes from König (``n - |maximum matching|``); the witness is
    fixed greedily, keeping a vertex whenever a maximum set through the
    choices so far still exists.
    """
    sides = two_coloring(g)
    remaining = set(range(g.n))
    need = _bipartite_alpha(g, sides, remaining)
    chosen = []
    for v in range(g.n):
        if need == 0:
            break
        if v not in remaining:
            continue
        remaining.discard(v)
        rest = remaining - g.adj[v]
        if 1 + _bipartite_alpha(g, sides, rest) == need:
            chosen.append(v)
            remaining = rest
            need -= 1
    return frozenset(chosen)


def _check_bound(n: int, bound: int | None, default: int = DEFAULT_ORACLE_BOUND, exc=OracleBoundExceeded):
    limit = default if bound is None else bound
    if limit <= 0:
        raise ValueError("bound must be positive")
    if n > limit:
        raise exc(n, limit)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _clique_number_masks(adj: tuple[int, ...], cand: int) -> int:
    best = 0

    def expand(size, cand):
        nonlocal best
        if cand == 0:
            if size > best:
                best = size
            return
        while cand:
            if size + _popcount(cand) <= best:
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            expand(size + 1, cand & adj[v])

    expand(0, cand)
    return best


def _first_clique_of_size(adj: tuple[int, ...], n: int, k: int) -> list[int]:
    """Lexicographically first clique of size k (vertices scanned ascending)."""

    def dfs(chosen, cand):
        if len(chosen) == k:
            return list(chosen)
        for v in range(n):
            if not (cand >> v) & 1:
                continue
            if len(chosen) + _popcount(cand) < k:
                return None
            cand &= ~(1 << v)
            found = dfs(chosen + [v], cand & adj[v])
            if found is not None:
                return found
        return None

    return dfs([], (1 << n) - 1) or []


def clique_number(g: Graph) -> int:
    return _clique_number_masks(g.adj_mask, (1 << g.n) - 1)


def max_clique_bruteforce(g: Graph, bound: int | None = None) -> frozenset:
    _check_bound(g.n, bound)
    omega = clique_number(g)
    return frozenset(_first_clique_of_size(g.adj_mask, g.n, omega))


def chromatic_number_bruteforce(g: Graph, bound: int | None = None) -> int:
    """Chromatic number by iterative deepening over k with backtracking."""
    _check_bound(g.n, bound)
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
    k = max(1, clique_number(g))
    while not _k_colorable(g, order, k):
        k += 1
    return k


def _k_colorable(g: Graph, order: list[int], k: int) -> bool:
    color = [-1] * g.n

    def place(i, used):
        if i == len(order):
            return True
        v = order[i]
        blocked = {color[w] for w in g.adj[v]}
        for c in range(min(used + 1, k)):
            if c in blocked:
                continue
            color[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
        color[v] = -1
        return False

    return place(0, 0)


def max_biclique_bruteforce(g: Graph, left: Iterable[int], right: Iterable[int], bound: int | None = None):
    """Maximum biclique (both sides nonempty) using only left-right edges.

    Returns ``(X, Y)`` maximizing ``|X| + |Y|``; ties go to the smallest
    ``(sorted X, sorted Y)``.  Raises EmptySide when no left-right edge exists.
    """
    left = sorted(set(left))
    right = sorted(set(right))
    if set(left) & set(right):
        raise ValueError("left and right must be disjoint")
    _check_bound(len(left) + len(right), bound)
    lmask = sum(1 << v for v in left)
    rmask = sum(1 << v for v in right)
    if not any(g.adj_mask[u] & rmask for u in left):
        raise EmptySide()

    enum_side, other_mask = (left, rmask) if len(left) <= len(right) else (right, lmask)
    active = [v for v in enum_side if g.adj_mask[v] & other_mask]
    best = None
    for bits in range(1, 1 << len(active)):
        chosen = [active[i] for i in range(len(active)) if bits >> i & 1]
        common = other_mask
        for v in chosen:
            common &= g.adj_mask[v]
        if not common:
            continue
        others = [w for w in range(g.n) if common >> w & 1]
        if enum_side is left:
            x, y = chosen, others
        else:
            x, y = others, chosen
        key = (-(len(x) + len(y)), x, y)
        if best is None or key < best:
            best = key
    _, x, y = best
    return frozenset(x), frozenset(y)


def parse_graph(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` edge-list format."""
    rows = _content_lines(text)
    if not rows:
        raise ParseError("empty graph file")
    lineno, header = rows[0]
    n, m = _ints(header, 2, lineno, "header must be 'n m'")
    if n < 0 or m < 0:
        raise ParseError("counts must be non-negative", lineno)
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges but {len(body)} edge lines follow", lineno)
    seen = set()
    for lineno, fields in body:
        u, v = _ints(fields, 2, lineno, "edge line must be 'u v'")
        _check_edge(u, v, n, lineno, seen)
    return Graph(n, frozenset(seen))


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    rows = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((i, line.split()))
    return rows


def _ints(fields, count, lineno, message):
    if len(fields) != count:
        raise ParseError(message, lineno)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"{message}; got {' '.join(fields)!r}", lineno) from None


def _check_edge(u, v, n, lineno, seen):
    if u == v:
        raise ParseError(f"loop at vertex {u}", lineno)
    if not (0 <= u < n and 0 <= v < n):
        raise ParseError(f"vertex index out of range 0..{n - 1}: {u} {v}", lineno)
    e = _edge(u, v)
    if e in seen:
        raise ParseError(f"duplicate edge {u} {v}", lineno)
    seen.add(e)
    return e
