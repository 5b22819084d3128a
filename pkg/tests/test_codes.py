import random
from itertools import combinations

import pytest

from _support import CHAIN3
from extord import Digraph, DomainError, Graph, dc_to_oosc, is_extensional
from extord.codes import (
    CodeResult,
    ConstraintFamily,
    dc_constraints,
    is_discriminating_code,
    is_oosc,
    min_discriminating_code,
    min_hitting_set,
    min_oosc,
    oosc_constraints,
    subset_enumeration_hitting_set,
)
from extord.errors import CapacityError
from extord.generate import random_dag, random_dc_instance, random_digraph

BIP = Graph(["a1", "a2", "b1", "b2"], [("a1", "b1"), ("a2", "b1"), ("a2", "b2")])


def test_is_oosc_examples():
    assert is_oosc(Digraph(["v"]), [])
    assert is_oosc(CHAIN3, ["v_1", "v_2"])
    fork = Digraph("uvw", [("u", "w"), ("v", "w")])
    assert not is_oosc(fork, fork.vertices)
    with pytest.raises(DomainError):
        is_oosc(CHAIN3, ["zz"])


def test_min_oosc_examples():
    res = min_oosc(CHAIN3)
    assert (res.size, res.witness) == (2, ("v_1", "v_2"))
    assert min_oosc(Digraph(["v"])).size == 0
    d = dc_to_oosc(Graph(["a1", "b1"], [("a1", "b1")]), ["a1"], ["b1"])
    res = min_oosc(d)
    assert res.size == 3 and set(res.witness) == {"b1", "c_0", "c_1"}
    assert str(res) == "size=3 witness=b1 c_0 c_1"


def test_min_oosc_infeasible():
    res = min_oosc(Digraph("uvw", [("u", "w"), ("v", "w")]))
    assert not res.feasible and str(res) == "infeasible" and res == CodeResult.infeasible()


def test_is_discriminating_code_examples():
    g = Graph(["a1", "b1"], [("a1", "b1")])
    assert is_discriminating_code(g, ["a1"], ["b1"], ["b1"])
    assert not is_discriminating_code(BIP, ["a1", "a2"], ["b1", "b2"], ["b1"])
    assert is_discriminating_code(BIP, ["a1", "a2"], ["b1", "b2"], ["b1", "b2"])
    with pytest.raises(DomainError):
        is_discriminating_code(BIP, ["a1", "a2"], ["b1", "b2"], ["a1"])
    with pytest.raises(DomainError):
        is_discriminating_code(BIP, ["a1", "b1"], ["a2", "b2"], [])


def test_min_discriminating_code_examples():
    assert min_discriminating_code(Graph(["a1", "b1"], [("a1", "b1")]), ["a1"], ["b1"]).size == 1
    assert min_discriminating_code(BIP, ["a1", "a2"], ["b1", "b2"]).size == 2
    twins = Graph(["a1", "a2", "b1"], [("a1", "b1"), ("a2", "b1")])
    assert not min_discriminating_code(twins, ["a1", "a2"], ["b1"]).feasible


def test_constraint_family():
    fam = oosc_constraints(CHAIN3)
    assert fam.ground == ("v_1", "v_2", "v_3")
    assert sorted(map(sorted, fam.sets)) == [["v_1"], ["v_1", "v_2"], ["v_2"]]
    assert not fam.infeasible
    assert ConstraintFamily.build("ab", [set()]).infeasible


def test_oosc_witness_is_minimum():
    rng = random.Random(51)
    for _ in range(120):
        d = random_digraph(rng, rng.randint(1, 9), rng.uniform(0.1, 0.6))
        res = min_oosc(d)
        assert res.feasible == bool(is_extensional(d))
        if not res.feasible:
            continue
        assert is_oosc(d, res.witness)
        assert not any(is_oosc(d, c) for c in combinations(d.vertices, res.size - 1)) if res.size else True


def test_branch_and_bound_matches_subset_oracle():
    rng = random.Random(52)
    for _ in range(150):
        d = random_dag(rng, rng.randint(1, 14), rng.uniform(0.1, 0.7))
        fam = oosc_constraints(d)
        assert min_hitting_set(fam) == subset_enumeration_hitting_set(fam)
    for _ in range(100):
        g, a, b = random_dc_instance(rng, 14)
        fam = dc_constraints(g, a, b)
        assert min_hitting_set(fam) == subset_enumeration_hitting_set(fam)


def test_dc_matches_direct_enumeration():
    rng = random.Random(53)
    for _ in range(60):
        g, a, b = random_dc_instance(rng, 10)
        best = next(
            k for k in range(len(b) + 1)
            if any(is_discriminating_code(g, a, b, c) for c in combinations(b, k))
        )
        assert min_discriminating_code(g, a, b).size == best


def test_dc_size_plus_chain_equals_oosc_size():
    rng = random.Random(54)
    for _ in range(60):
        g, a, b = random_dc_instance(rng, 10)
        d = dc_to_oosc(g, a, b)
        oo = min_oosc(d)
        assert min_discriminating_code(g, a, b).size + len(b) + 1 == oo.size
        assert {f"c_{i}" for i in range(len(b) + 1)} <= set(oo.witness)


def test_subset_oracle_cap():
    fam = ConstraintFamily.build([f"v{i}" for i in range(21)], [{"v0"}])
    with pytest.raises(CapacityError):
        subset_enumeration_hitting_set(fam)
    assert min_hitting_set(fam) == CodeResult(1, ("v0",))
