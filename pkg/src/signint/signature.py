"""Smallest signature in a switching class, plus the max-cut oracle.

Resigning at S turns the signature into ``sigma ^ cut(S)``, so the objective
is the size of that symmetric difference (positive cut edges become negative
too, not only the reverse).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .errors import ExactBoundExceeded
from .graph import Graph, edge_cut
from .signed import SignedGraph, resign

DEFAULT_EXACT_BOUND = 20


@dataclass(frozen=True)
class SignatureOptResult:
    resign_set: frozenset
    min_signature: frozenset
    size: int
    exact: bool = False


def _check_bound(n, bound):
    limit = DEFAULT_EXACT_BOUND if bound is None else bound
    if limit <= 0:
        raise ValueError("bound must be positive")
    if n > limit:
        raise ExactBoundExceeded(n, limit)


def _subset_masks(n: int) -> np.ndarray:
    """Bitmasks of every subset of 1..n-1 (vertex 0 never switched)."""
    if n <= 1:
        return np.zeros(1, dtype=np.int64)
    return np.arange(1 << (n - 1), dtype=np.int64) << 1


def _cut_indicator(masks: np.ndarray, u: int, v: int) -> np.ndarray:
    return ((masks >> u) ^ (masks >> v)) & 1


def _lex_smallest(masks: np.ndarray, n: int) -> frozenset:
    """Set whose sorted vertex list is lexicographically smallest among ``masks``."""
    chosen = []
    masks = np.unique(masks)
    while True:
        if (masks == 0).any():
            return frozenset(chosen)
        low = masks & -masks
        v = int(low.min()).bit_length() - 1
        chosen.append(v)
        masks = masks[low == (1 << v)] ^ (1 << v)


def _scores(g: Graph, masks, weight_of) -> np.ndarray:
    total = np.zeros(len(masks), dtype=np.int64)
    for u, v in g.sorted_edges():
        total += weight_of(u, v, _cut_indicator(masks, u, v))
    return total


def min_signature_exact(sg: SignedGraph, bound: int | None = None) -> SignatureOptResult:
    """Minimise ``|sigma ^ cut(S)|`` over all S not containing vertex 0."""
    _check_bound(sg.n, bound)
    masks = _subset_masks(sg.n)

    def negative_after(u, v, cut):
        return cut ^ (1 if (u, v) in sg.signature else 0)

    scores = _scores(sg.ground, masks, negative_after)
    best = int(scores.min())
    side = _lex_smallest(masks[scores == best], sg.n)
    result = resign(sg, side)
    return SignatureOptResult(side, result.signature, best, exact=True)


def min_signature_local_search(sg: SignedGraph, seed: int = 0) -> SignatureOptResult:
    """Best-improvement single-vertex flips until no flip helps.

    Seed 0 starts from the empty switching; any other seed draws each vertex
    into the start set with probability 1/2 from ``random.Random(seed)``.
    Ties between equally good flips go to the smallest vertex.
    """
    n = sg.n
    if seed == 0:
        side = set()
    else:
        rng = random.Random(seed)
        side = {v for v in range(n) if rng.random() < 0.5}
    current = resign(sg, side)
    adj = sg.ground.adj
    while True:
        best_gain, best_v = 0, None
        for v in range(n):
            # flipping v toggles every edge at v
            gain = sum(1 if current.sign(v, w) < 0 else -1 for w in adj[v])
            if gain > best_gain:
                best_gain, best_v = gain, v
        if best_v is None:
            break
        side ^= {best_v}
        current = resign(current, {best_v})
    if 0 in side:
        # S and V - S give the same signature
        side = set(range(n)) - side
    return SignatureOptResult(frozenset(side), current.signature, len(current.signature))


def max_cut_bruteforce(g: Graph, bound: int | None = None) -> tuple[frozenset, int]:
    _check_bound(g.n, bound)
    masks = _subset_masks(g.n)
    scores = _scores(g, masks, lambda u, v, cut: cut)
    best = int(scores.max())
    side = _lex_smallest(masks[scores == best], g.n)
    assert len(edge_cut(g, side)) == best
    return side, best
