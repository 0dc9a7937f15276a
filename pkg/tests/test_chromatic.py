import random

import pytest

from signint.chromatic import (
    HomomorphismWitness,
    chi2_predicate,
    chi3_necessary,
    homomorphic_image_search,
    is_proper_signified_coloring,
    signed_chromatic_number,
    signed_chromatic_via_homomorphism,
    triangle_signs,
    verify_homomorphism,
)
from signint.errors import SolverBoundExceeded, UncoloredVertex
from signint.generators import random_interval_instance, random_signed_graph, random_tree
from signint.graph import Graph, chromatic_number_bruteforce, edge_cut
from signint.signed import SignedGraph, is_balanced, resign

import oracles

C4 = [(0, 1), (1, 2), (2, 3), (0, 3)]


def c4(negative=()):
    return SignedGraph(Graph.from_edges(4, C4), frozenset(negative))


def test_small_examples():
    assert signed_chromatic_number(SignedGraph(Graph.empty(0)))[0] == 0
    assert signed_chromatic_number(SignedGraph(Graph.empty(3)))[0] == 1
    assert signed_chromatic_number(c4())[0] == 2
    # frozen from exhaustive search over switchings and colourings
    assert oracles.signed_chromatic_number(4, C4, {(0, 1)}) == 4
    k, col = signed_chromatic_number(c4({(0, 1)}))
    assert k == 4
    assert is_proper_signified_coloring(resign(c4({(0, 1)}), col.switching), col.colors)


def test_coloring_predicate():
    sg = c4({(0, 1)})
    assert not is_proper_signified_coloring(sg, [1, 2, 1, 2])
    assert is_proper_signified_coloring(sg, [1, 2, 3, 4])
    assert is_proper_signified_coloring(c4(), {0: 1, 1: 2, 2: 1, 3: 2})
    with pytest.raises(UncoloredVertex):
        is_proper_signified_coloring(sg, {0: 1, 1: 2})
    with pytest.raises(UncoloredVertex):
        is_proper_signified_coloring(sg, [1, 2, None, 4])


def test_solver_bound():
    with pytest.raises(SolverBoundExceeded):
        signed_chromatic_number(SignedGraph(Graph.empty(15)))
    assert signed_chromatic_number(SignedGraph(Graph.empty(15)), bound=15)[0] == 1


@pytest.mark.parametrize("seed", range(40))
def test_against_exhaustive_oracle(seed):
    rng = random.Random(seed)
    sg = random_signed_graph(rng, rng.randint(1, 6), p=0.5)
    k, col = signed_chromatic_number(sg)
    assert k == oracles.signed_chromatic_number(sg.n, sg.ground.sorted_edges(), set(sg.signature))
    assert col.k == k
    assert is_proper_signified_coloring(resign(sg, col.switching), col.colors)


@pytest.mark.parametrize("seed", range(20))
def test_balanced_equals_ground_chromatic_number(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 9)
    ground = random_signed_graph(rng, n, p=0.5).ground
    side = {v for v in range(n) if rng.random() < 0.5}
    sg = SignedGraph(ground, edge_cut(ground, side))
    assert is_balanced(sg)
    assert signed_chromatic_number(sg)[0] == chromatic_number_bruteforce(ground)


@pytest.mark.parametrize("seed", range(15))
def test_switching_invariance(seed):
    rng = random.Random(seed)
    sg = random_signed_graph(rng, rng.randint(2, 8), p=0.5)
    s = {v for v in range(sg.n) if rng.random() < 0.5}
    assert signed_chromatic_number(resign(sg, s))[0] == signed_chromatic_number(sg)[0]


@pytest.mark.parametrize("seed", range(15))
def test_trees_need_two_colours(seed):
    rng = random.Random(seed)
    tree = random_tree(rng, rng.randint(2, 9))
    sg = SignedGraph(tree, frozenset(e for e in tree.edges if rng.random() < 0.5))
    assert chi2_predicate(sg)
    assert signed_chromatic_number(sg)[0] == 2


def test_chi2_predicate_examples():
    assert not chi2_predicate(SignedGraph(Graph.empty(1)))
    assert not chi2_predicate(c4())
    # a forest with an edge also has value 2, but the predicate is about trees
    forest = SignedGraph(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert signed_chromatic_number(forest)[0] == 2 and not chi2_predicate(forest)


def test_homomorphism_examples():
    k, w = homomorphic_image_search(c4({(0, 1)}))
    assert k == 4 and verify_homomorphism(c4({(0, 1)}), w)
    k, w = homomorphic_image_search(c4())
    assert k == 2 and w.target.n == 2
    bad = HomomorphismWitness(frozenset(), SignedGraph(Graph.complete(2)), (0, 1, 0, 1))
    assert verify_homomorphism(c4(), bad)
    assert not verify_homomorphism(c4({(0, 1)}), bad)
    assert not verify_homomorphism(c4(), HomomorphismWitness(frozenset(), bad.target, (0, 0, 1, 1)))


@pytest.mark.parametrize("seed", range(20))
def test_homomorphism_value_matches_colouring(seed):
    rng = random.Random(seed)
    sg = random_signed_graph(rng, rng.randint(1, 7), p=0.5)
    assert signed_chromatic_via_homomorphism(sg) == signed_chromatic_number(sg)[0]


def test_triangle_signs():
    k4 = SignedGraph(Graph.complete(4), frozenset({(0, 1)}))
    assert triangle_signs(k4) == {1, -1}
    assert triangle_signs(SignedGraph(Graph.complete(3))) == {1}
    assert triangle_signs(c4()) == set()


@pytest.mark.parametrize("seed", range(40))
def test_chi3_condition_is_necessary_on_interval_instances(seed):
    rng = random.Random(seed)
    inst = random_interval_instance(rng, rng.randint(3, 9))
    if signed_chromatic_number(inst.sg)[0] == 3:
        assert chi3_necessary(inst)
