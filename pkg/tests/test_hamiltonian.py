import random

import pytest

from _support import CLAW, K3, K4, P3, SINGLE, atlas_graphs, path_graph
from extord import DefectError, Graph, count_hamiltonian_paths, find_hamiltonian_path, is_hamiltonian_path
from extord import hamiltonian
from extord.generate import random_graph


def test_find_examples():
    assert find_hamiltonian_path(Graph("abcd", [("a", "b"), ("b", "c"), ("c", "d")])) == ("a", "b", "c", "d")
    assert find_hamiltonian_path(CLAW) is None
    path = find_hamiltonian_path(K4)
    assert is_hamiltonian_path(K4, path)


def test_count_examples():
    assert count_hamiltonian_paths(P3) == 1
    assert count_hamiltonian_paths(K3) == 3
    assert count_hamiltonian_paths(K4) == 12
    assert count_hamiltonian_paths(CLAW) == 0


def test_trivial_sizes():
    assert count_hamiltonian_paths(SINGLE) == 1
    assert find_hamiltonian_path(SINGLE) == ("v",)
    assert count_hamiltonian_paths(Graph()) == 0
    assert find_hamiltonian_path(Graph()) is None


def test_path_stored_lesser_endpoint_first():
    g = path_graph(6)
    assert find_hamiltonian_path(g.relabel({"v1": "z", "v6": "a"}))[0] == "a"


def test_find_agrees_with_count():
    for g in atlas_graphs(6):
        path = find_hamiltonian_path(g)
        assert (path is not None) == (count_hamiltonian_paths(g) > 0)
        if path is not None:
            assert is_hamiltonian_path(g, path)


def test_count_invariant_under_renaming():
    rng = random.Random(21)
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 8), 0.5)
        names = list(g.vertices)
        shuffled = names[:]
        rng.shuffle(shuffled)
        h = g.relabel({a: f"w{b}" for a, b in zip(names, shuffled)})
        assert count_hamiltonian_paths(g) == count_hamiltonian_paths(h)


def test_oracle_disagreement_is_a_defect(monkeypatch):
    monkeypatch.setattr(hamiltonian, "count_by_permutations", lambda g: -1)
    with pytest.raises(DefectError):
        count_hamiltonian_paths(K4)


def test_large_graph_skips_permutation_oracle():
    g = path_graph(14)
    assert count_hamiltonian_paths(g) == 1
