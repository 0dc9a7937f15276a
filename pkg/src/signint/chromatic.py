"""Exact signed chromatic number at desk scale.

A proper colouring of a signified graph gives adjacent vertices different
colours and makes every colour pair carry edges of a single sign.  The signed
chromatic number minimises the colour count over the whole switching class.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from .errors import SolverBoundExceeded, UncoloredVertex
from .graph import clique_number, connected_components
from .signed import SignedGraph, resign

DEFAULT_SOLVER_BOUND = 14
DEFAULT_HOM_BOUND = 8


@dataclass(frozen=True)
class SignedColoring:
    switching: frozenset
    colors: tuple  # colors[v] in 1..k

    @property
    def k(self) -> int:
        return max(self.colors, default=0)


@dataclass(frozen=True)
class HomomorphismWitness:
    switching: frozenset
    target: SignedGraph
    vertex_map: tuple  # vertex_map[v] is a target vertex


def _color_list(sg: SignedGraph, colors) -> list:
    if isinstance(colors, Mapping):
        missing = [v for v in range(sg.n) if v not in colors]
        if missing:
            raise UncoloredVertex(f"vertices without a colour: {missing}")
        return [colors[v] for v in range(sg.n)]
    colors = list(colors)
    if len(colors) < sg.n or any(c is None for c in colors[: sg.n]):
        raise UncoloredVertex("every vertex needs a colour")
    return colors


def is_proper_signified_coloring(sg: SignedGraph, colors) -> bool:
    col = _color_list(sg, colors)
    pair_sign: dict = {}
    for u, v, s in sg.signed_edges():
        if col[u] == col[v]:
            return False
        key = frozenset((col[u], col[v]))
        if pair_sign.setdefault(key, s) != s:
            return False
    return True


def _check_bound(n, bound, default):
    limit = default if bound is None else bound
    if limit <= 0:
        raise ValueError("bound must be positive")
    if n > limit:
        raise SolverBoundExceeded(n, limit)


def _search(sg: SignedGraph, k: int, fixed: set):
    """Backtrack over (colour, switch bit) per vertex in index order.

    Vertex colours obey first-appearance order (vertex 0 gets colour 1 and a
    new colour is one more than the largest used).  Switch bits of the
    vertices in ``fixed`` (each component's smallest vertex) stay 0.
    """
    n = sg.n
    earlier = [[(w, sg.sign(v, w)) for w in sorted(sg.ground.adj[v]) if w < v] for v in range(n)]
    color = [0] * n
    flip = [0] * n
    pair_sign: dict = {}

    def place(v, used):
        if v == n:
            return True
        for c in range(1, min(used + 1, k) + 1):
            if any(color[w] == c for w, _ in earlier[v]):
                continue
            for f in (0,) if v in fixed else (0, 1):
                added = []
                ok = True
                for w, s in earlier[v]:
                    eff = -s if f != flip[w] else s
                    key = (c, color[w]) if c < color[w] else (color[w], c)
                    have = pair_sign.get(key)
                    if have is None:
                        pair_sign[key] = eff
                        added.append(key)
                    elif have != eff:
                        ok = False
                        break
                if ok:
                    color[v], flip[v] = c, f
                    if place(v + 1, max(used, c)):
                        return True
                for key in added:
                    del pair_sign[key]
        color[v], flip[v] = 0, 0
        return False

    if place(0, 0):
        return SignedColoring(frozenset(v for v in range(n) if flip[v]), tuple(color))
    return None


def signed_chromatic_number(sg: SignedGraph, bound: int | None = None) -> tuple[int, SignedColoring]:
    """Minimum colour count over the switching class, with a witness.

    Iterative deepening from the clique number of the ground graph.  The
    witness colouring is proper on ``resign(sg, witness.switching)``.
    """
    _check_bound(sg.n, bound, DEFAULT_SOLVER_BOUND)
    if sg.n == 0:
        return 0, SignedColoring(frozenset(), ())
    fixed = {min(c) for c in connected_components(sg.ground)}
    k = max(1, clique_number(sg.ground))
    while True:
        found = _search(sg, k, fixed)
        if found is not None:
            return k, found
        k += 1


def verify_homomorphism(sg: SignedGraph, w: HomomorphismWitness) -> bool:
    phi = list(w.vertex_map)
    if len(phi) != sg.n or any(not (0 <= x < w.target.n) for x in phi):
        return False
    switched = resign(sg, w.switching)
    for x, y in switched.ground.edges:
        if phi[x] == phi[y] or not w.target.ground.has_edge(phi[x], phi[y]):
            return False
        if switched.sign(x, y) != w.target.sign(phi[x], phi[y]):
            return False
    return True


def _set_partitions(n: int):
    """Restricted growth strings of length n (each a set partition of 0..n-1)."""
    if n == 0:
        yield ()
        return
    rgs = [0] * n

    def rec(i, top):
        if i == n:
            yield tuple(rgs)
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from rec(i + 1, max(top, b))

    rgs[0] = 0
    yield from rec(1, 0)


def _image(switched: SignedGraph, phi: Sequence[int], order: int):
    edges: dict = {}
    for x, y, s in switched.signed_edges():
        a, b = phi[x], phi[y]
        if a == b:
            return None
        key = (a, b) if a < b else (b, a)
        if edges.setdefault(key, s) != s:
            return None
    return SignedGraph.from_signed_edges(order, [(a, b, s) for (a, b), s in edges.items()])


def homomorphic_image_search(sg: SignedGraph, bound: int | None = None) -> tuple[int, HomomorphismWitness]:
    """Smallest-order homomorphic image, by enumerating vertex partitions and switchings."""
    _check_bound(sg.n, bound, DEFAULT_HOM_BOUND)
    if sg.n == 0:
        return 0, HomomorphismWitness(frozenset(), sg, ())
    by_order: dict = {}
    for rgs in _set_partitions(sg.n):
        by_order.setdefault(max(rgs) + 1, []).append(rgs)
    rest = list(range(1, sg.n))
    switchings = [
        frozenset(v for i, v in enumerate(rest) if bits >> i & 1) for bits in range(1 << len(rest))
    ]
    for order in sorted(by_order):
        for s in switchings:
            switched = resign(sg, s)
            for phi in by_order[order]:
                target = _image(switched, phi, order)
                if target is None:
                    continue
                witness = HomomorphismWitness(s, target, phi)
                if verify_homomorphism(sg, witness):
                    return order, witness
    raise AssertionError("the identity map is always a homomorphism")


def signed_chromatic_via_homomorphism(sg: SignedGraph, bound: int | None = None) -> int:
    return homomorphic_image_search(sg, bound)[0]


def _is_tree(sg: SignedGraph) -> bool:
    g = sg.ground
    return g.n >= 1 and g.m == g.n - 1 and len(connected_components(g)) == 1


def chi2_predicate(inst) -> bool:
    """Whether the ground is a tree with at least one edge (the value-2 characterisation)."""
    sg = getattr(inst, "sg", inst)
    return sg.ground.m >= 1 and _is_tree(sg)


def triangle_signs(sg: SignedGraph) -> set:
    g = sg.ground
    signs = set()
    for a, b, c in combinations(range(g.n), 3):
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c):
            signs.add(sg.sign(a, b) * sg.sign(b, c) * sg.sign(a, c))
    return signs


def chi3_necessary(inst) -> bool:
    """Clique number 3 and one common sign on every triangle.

    Only a necessary condition for value 3; the converse is not claimed.
    """
    sg = getattr(inst, "sg", inst)
    return clique_number(sg.ground) == 3 and len(triangle_signs(sg)) == 1
