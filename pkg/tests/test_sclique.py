import random

import pytest

from signint.chromatic import signed_chromatic_number
from signint.errors import NotIntervalInstance, OracleBoundExceeded, WrongCliqueCount
from signint.generators import random_interval_instance, random_signed_graph, two_clique_instance
from signint.graph import Graph, clique_number, complement, connected_components, is_clique
from signint.intervals import MaximalCliqueOrdering, representation
from signint.sclique import (
    SignedIntervalInstance,
    auxiliary_graph,
    component_claim_violations,
    is_s_clique,
    max_s_clique,
    max_s_clique_bruteforce,
    max_s_clique_two_cliques,
    restricted_ordering,
    run_max_s_clique,
)
from signint.signed import SignedGraph, resign

C4 = [(0, 1), (1, 2), (2, 3), (0, 3)]
# vertex 0 = [0,3], 1 = [1,2] are shared; 2 = [0,1] left only, 3 = [2,3] right only
TWO_TRIANGLES = representation([(0, 3), (1, 2), (0, 1), (2, 3)])


def c4(negative=()):
    return SignedGraph(Graph.from_edges(4, C4), frozenset(negative))


def two_triangles(negative=()):
    return SignedIntervalInstance.from_intervals(TWO_TRIANGLES, negative)


def test_two_triangle_fixture_shape():
    inst = two_triangles()
    assert inst.mco.cliques == (frozenset({0, 1, 2}), frozenset({0, 1, 3}))


def test_is_s_clique_examples():
    complete = SignedGraph(Graph.complete(5), frozenset({(0, 1), (2, 4)}))
    assert is_s_clique(complete)
    assert is_s_clique(c4({(0, 1)}))
    assert not is_s_clique(c4())


def test_auxiliary_graph_examples():
    positive = random_signed_graph(random.Random(4), 8, p=0.5, q=0.0)
    assert auxiliary_graph(positive) == positive.ground
    assert auxiliary_graph(c4({(0, 1)})) == Graph.complete(4)


@pytest.mark.parametrize("seed", range(20))
def test_auxiliary_graph_is_switching_invariant(seed):
    rng = random.Random(seed)
    sg = random_signed_graph(rng, 9, p=0.5)
    s = {v for v in range(9) if rng.random() < 0.5}
    assert auxiliary_graph(resign(sg, s)) == auxiliary_graph(sg)


def test_two_clique_examples():
    assert max_s_clique_two_cliques(two_triangles()) == frozenset({0, 1, 2})
    # u=2 and w=3 have A-vectors (-1,-1) and (1,1): equal up to sign
    assert len(max_s_clique_two_cliques(two_triangles({(0, 2), (1, 2)}))) == 3
    # (-1, 1) versus (1, 1): the C4 2-0-3-1 is negative
    assert max_s_clique_two_cliques(two_triangles({(0, 2)})) == frozenset(range(4))
    for neg, size in [((), 3), ({(0, 2), (1, 2)}, 3), ({(0, 2)}, 4)]:
        assert len(max_s_clique_bruteforce(two_triangles(neg).sg)) == size


def test_two_clique_requires_two_cliques():
    single = SignedIntervalInstance.from_intervals(representation([(0, 2), (1, 3)]))
    with pytest.raises(WrongCliqueCount):
        max_s_clique_two_cliques(single)


def test_max_s_clique_examples():
    single = SignedIntervalInstance.from_intervals(representation([(0, 2), (1, 3), (2, 2)]))
    assert max_s_clique(single) == frozenset({0, 1, 2})
    assert max_s_clique(two_triangles({(0, 2)})) == frozenset(range(4))
    positive = random_interval_instance(random.Random(9), 10, q=0.0)
    result = max_s_clique(positive)
    assert is_clique(positive.sg.ground, result)
    assert len(result) == clique_number(positive.sg.ground)


def test_max_s_clique_rejects_bad_ordering():
    inst = two_triangles()
    bad = SignedIntervalInstance(inst.sg, inst.rep, MaximalCliqueOrdering([{0, 1, 2}]))
    with pytest.raises(NotIntervalInstance):
        max_s_clique(bad)
    with pytest.raises(NotIntervalInstance):
        SignedIntervalInstance(c4(), TWO_TRIANGLES)


@pytest.mark.parametrize("seed", range(60))
def test_max_s_clique_matches_auxiliary_clique_oracle(seed):
    rng = random.Random(seed)
    inst = random_interval_instance(rng, rng.randint(1, 12), q=rng.choice([0.2, 0.5, 0.8]))
    aux = auxiliary_graph(inst.sg)
    result = max_s_clique(inst)
    assert is_clique(aux, result)
    assert len(result) == clique_number(aux)


@pytest.mark.parametrize("seed", range(30))
def test_two_clique_agrees_with_general_algorithm(seed):
    rng = random.Random(seed)
    inst = two_clique_instance(rng, rng.randint(2, 10))
    assert len(inst.mco) == 2
    special = max_s_clique_two_cliques(inst)
    assert is_clique(auxiliary_graph(inst.sg), special)
    assert len(special) == len(max_s_clique(inst)) == clique_number(auxiliary_graph(inst.sg))


def test_bruteforce_examples():
    assert len(max_s_clique_bruteforce(SignedGraph(Graph.complete(5)))) == 5
    assert max_s_clique_bruteforce(c4()) == frozenset({0, 1})
    assert max_s_clique_bruteforce(c4({(0, 1)})) == frozenset(range(4))
    with pytest.raises(OracleBoundExceeded):
        max_s_clique_bruteforce(SignedGraph(Graph.empty(15)))


@pytest.mark.parametrize("seed", range(25))
def test_s_clique_iff_full_signed_chromatic_number(seed):
    rng = random.Random(seed)
    sg = random_signed_graph(rng, rng.randint(1, 7), p=0.7)
    k, _ = signed_chromatic_number(sg)
    assert is_s_clique(sg) == (k == sg.n)


def test_restricted_ordering_drops_absorbed_cliques():
    mco = MaximalCliqueOrdering([{0, 1}, {1, 2}, {2, 3}])
    assert restricted_ordering(mco, {1, 2, 3}) == [frozenset({1, 2}), frozenset({2, 3})]
    assert restricted_ordering(mco, {0, 3}) == [frozenset({0}), frozenset({3})]


def test_literal_reading_of_component_claim_fails_on_a_path():
    # all-positive path 0-1-2-3: 1 lies in the first clique, 2 in the last,
    # both in one complement component, yet adjacent in the ground graph
    inst = SignedIntervalInstance.from_intervals(representation([(0, 1), (1, 2), (2, 3), (3, 4)]))
    assert component_claim_violations(inst, reading="literal") == [(1, 2)]
    assert component_claim_violations(inst, reading="private") == []


def test_first_index_reading_counterexample():
    rep = representation([(0, 4), (9, 15), (4, 6), (11, 12), (6, 12), (4, 11), (8, 12)])
    negative = {(0, 2), (0, 5), (1, 3), (3, 4), (3, 6)}
    inst = SignedIntervalInstance.from_intervals(rep, negative)
    assert component_claim_violations(inst, reading="first-index")
    assert component_claim_violations(inst, reading="private") == []


# an instance where the two end-dropping branches alone come up one short
REPAIR_CASE = (
    [(5, 11), (5, 13), (11, 13), (1, 5), (6, 12), (7, 7), (3, 4), (2, 6)],
    {(0, 2), (0, 3), (0, 5), (0, 7), (1, 3), (1, 5), (1, 7), (6, 7)},
)


def test_repair_branch_restores_exactness():
    inst = SignedIntervalInstance.from_intervals(representation(REPAIR_CASE[0]), REPAIR_CASE[1])
    omega = clique_number(auxiliary_graph(inst.sg))
    plain = run_max_s_clique(inst, repair=False)
    repaired = run_max_s_clique(inst)
    assert omega == 6
    assert len(plain.clique) == 5
    assert len(repaired.clique) == 6 and repaired.repairs >= 1 and repaired.violations


@pytest.mark.parametrize("seed", range(30))
def test_private_component_claim_on_random_instances(seed):
    rng = random.Random(1000 + seed)
    inst = random_interval_instance(rng, rng.randint(2, 12))
    assert component_claim_violations(inst) == []
    co = complement(auxiliary_graph(inst.sg))
    assert sum(len(c) for c in connected_components(co)) == inst.n
