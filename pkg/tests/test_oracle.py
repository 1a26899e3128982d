import random

import pytest

from oribij import (
    CapExceededError,
    Graph,
    audit_bijection,
    classify_subset,
    enumerate_bases,
    graph_to_rep,
    reversal_closure_classes,
    tutte,
)
from oribij.ratlin import determinant_int

from helpers import random_connected_multigraph


def test_triangle_tutte_values(triangle):
    assert tutte(triangle, 1, 1) == 3
    assert tutte(triangle, 2, 1) == 7
    assert tutte(triangle, 1, 2) == 4
    assert tutte(triangle, 2, 2) == 8


def test_single_edge_tutte_values(single_edge):
    assert tutte(single_edge, 1, 1) == 1
    assert tutte(single_edge, 2, 1) == 2
    assert tutte(single_edge, 1, 2) == 1
    assert tutte(single_edge, 2, 2) == 2


def test_loop_only_graph():
    g = Graph(1, ((0, 0),))
    assert tutte(g, 1, 1) == 1
    assert tutte(g, 2, 2) == 2
    assert tutte(g, 1, 5) == 5


def test_tutte_cap():
    g = Graph(2, tuple((0, 1) for _ in range(17)))
    with pytest.raises(CapExceededError):
        tutte(g, 1, 1)


def test_tutte_against_independent_enumeration():
    rng = random.Random(83)
    for _ in range(10):
        g = random_connected_multigraph(rng, rng.randint(3, 9))
        rep = graph_to_rep(g)
        n = g.edge_count
        assert tutte(g, 1, 1) == len(enumerate_bases(rep))
        assert tutte(g, 2, 1) == len(rep._independent_masks)
        assert tutte(g, 1, 2) == len(rep._spanning_masks)
        assert tutte(g, 2, 2) == 1 << n
        # Cauchy-Binet: the Gram determinant of a TU representation counts bases
        gram = [
            [sum(a * b for a, b in zip(ri, rj)) for rj in rep.matrix]
            for ri in rep.matrix
        ]
        assert determinant_int(gram) == tutte(g, 1, 1)


def test_classify_subset_cases(triangle):
    assert classify_subset(triangle, ()) == "forest"
    assert classify_subset(triangle, (0, 1)) == "tree"
    assert classify_subset(triangle, (0, 1, 2)) == "connected-spanning"


def test_classify_subset_of_tree_graph():
    path = Graph(3, ((0, 1), (1, 2)))
    assert classify_subset(path, (0, 1)) == "tree"
    assert classify_subset(path, (0,)) == "forest"


def test_classify_neither():
    square_with_tail = Graph(5, ((0, 1), (1, 2), (2, 0), (3, 4), (0, 3)))
    # contains the triangle but misses vertex 4's connection
    assert classify_subset(square_with_tail, (0, 1, 2, 3)) == "neither"


def test_audit_bijection_reports():
    ok = audit_bijection([1, 2, 3], {1: "a", 2: "b", 3: "c"}, ["a", "b", "c"])
    assert ok.bijective

    broken = audit_bijection([1, 2, 3], {1: "a", 2: "a", 3: "c"}, ["a", "b", "c"])
    assert not broken.injective
    assert broken.collisions == ((1, 2, "a"),)
    assert broken.missing == ("b",)


def test_triangle_closure_classes(triangle_rep):
    classes = reversal_closure_classes(triangle_rep, "cycle-cocycle")
    assert len(classes) == 3
    assert sorted(len(c) for c in classes) == [2, 3, 3]


def test_closure_counts_match_tutte():
    rng = random.Random(89)
    evaluations = {"cycle": (2, 1), "cocycle": (1, 2), "cycle-cocycle": (1, 1)}
    for _ in range(8):
        g = random_connected_multigraph(rng, rng.randint(3, 8))
        rep = graph_to_rep(g)
        for kind, (x, y) in evaluations.items():
            assert len(reversal_closure_classes(rep, kind)) == tutte(g, x, y)


def test_every_orientation_has_a_move_under_joint_kind():
    # on a connected graph with an edge, every arc is in a cycle or cocycle,
    # so singleton joint classes happen only when no move applies at all
    rng = random.Random(97)
    for _ in range(5):
        g = random_connected_multigraph(rng, rng.randint(3, 6))
        rep = graph_to_rep(g)
        circuits = rep._circuits
        cocircuits = rep._cocircuits
        covered = set()
        for vec in circuits + cocircuits:
            covered |= vec.support
        assert covered == set(range(g.edge_count))
