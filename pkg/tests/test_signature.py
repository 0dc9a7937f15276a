import random

import pytest

from signint.errors import ExactBoundExceeded
from signint.generators import random_signed_graph
from signint.graph import Graph, edge_cut
from signint.signature import max_cut_bruteforce, min_signature_exact, min_signature_local_search
from signint.signed import SignedGraph, is_balanced, resign, switching_equivalent

import oracles


def all_negative(g):
    return SignedGraph(g, g.edges)


def test_min_signature_examples():
    assert min_signature_exact(all_negative(Graph.complete(3))).size == 1
    assert min_signature_exact(all_negative(Graph.complete(4))).size == 2
    assert min_signature_exact(SignedGraph(Graph.complete(4))).size == 0
    res = min_signature_exact(all_negative(Graph.cycle(4)))
    assert res.size == 0 and res.exact and 0 not in res.resign_set


def test_max_cut_examples():
    assert max_cut_bruteforce(Graph.complete(4))[1] == 4
    assert max_cut_bruteforce(Graph.complete(3))[1] == 2
    side, count = max_cut_bruteforce(Graph.cycle(6))
    assert count == 6 and side == frozenset({1, 3, 5})
    assert max_cut_bruteforce(Graph.empty(1)) == (frozenset(), 0)


def test_exact_bound():
    with pytest.raises(ExactBoundExceeded):
        min_signature_exact(SignedGraph(Graph.empty(21)))
    with pytest.raises(ExactBoundExceeded):
        max_cut_bruteforce(Graph.empty(5), bound=4)


@pytest.mark.parametrize("seed", range(30))
def test_exact_matches_whole_space_enumeration(seed):
    rng = random.Random(seed)
    sg = random_signed_graph(rng, rng.randint(1, 10), p=0.45)
    res = min_signature_exact(sg)
    assert res.size == oracles.min_signature_size(sg.n, sg.ground.sorted_edges(), set(sg.signature))
    assert resign(sg, res.resign_set).signature == res.min_signature
    assert len(res.min_signature) == res.size
    assert (res.size == 0) == bool(is_balanced(sg))


@pytest.mark.parametrize("seed", range(20))
def test_all_negative_regime_is_max_cut(seed):
    rng = random.Random(seed)
    g = random_signed_graph(rng, rng.randint(1, 10), p=0.5).ground
    assert min_signature_exact(all_negative(g)).size == g.m - max_cut_bruteforce(g)[1]
    assert max_cut_bruteforce(g)[1] == oracles.max_cut_size(g.n, g.sorted_edges())


def test_bipartite_max_cut_takes_every_edge():
    g = Graph.from_edges(7, [(u, v) for u in range(3) for v in range(3, 7) if (u + v) % 2])
    assert max_cut_bruteforce(g)[1] == g.m


@pytest.mark.parametrize("seed", range(20))
def test_local_search_is_valid_and_no_better_than_exact(seed):
    rng = random.Random(seed)
    sg = random_signed_graph(rng, rng.randint(1, 10), p=0.5)
    for start in (0, seed + 1):
        res = min_signature_local_search(sg, seed=start)
        assert not res.exact and 0 not in res.resign_set
        assert resign(sg, res.resign_set).signature == res.min_signature
        assert switching_equivalent(sg, SignedGraph(sg.ground, res.min_signature))
        assert res.size >= min_signature_exact(sg).size
        # local optimum: no single flip lowers the count
        for v in range(sg.n):
            assert len(resign(sg, res.resign_set ^ {v}).signature) >= res.size


def test_local_search_is_deterministic_per_seed():
    sg = random_signed_graph(random.Random(8), 10, p=0.6)
    assert min_signature_local_search(sg, seed=3) == min_signature_local_search(sg, seed=3)


def test_exact_witness_is_lexicographically_smallest():
    sg = all_negative(Graph.cycle(5))
    res = min_signature_exact(sg)
    assert res.size == 1
    optimal = [
        sorted(s)
        for s in oracles.subsets(range(1, 5))
        if len(sg.signature ^ edge_cut(sg.ground, s)) == 1
    ]
    assert sorted(res.resign_set) == min(optimal)
