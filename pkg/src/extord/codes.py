"""Minimum open-out-separating codes and discriminating codes.

Both problems are solved as minimum hitting set over a family of required
vertex sets. The optimum size comes from branch-and-bound; the reported
witness is the lexicographically least optimal set in vertex order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import CapacityError, DomainError
from .graph_core import Digraph, Graph, check_bipartition, sort_vertices

__all__ = [
    "ConstraintFamily",
    "CodeResult",
    "oosc_constraints",
    "dc_constraints",
    "min_hitting_set",
    "subset_enumeration_hitting_set",
    "is_oosc",
    "min_oosc",
    "is_discriminating_code",
    "min_discriminating_code",
    "SUBSET_ORACLE_LIMIT",
]

SUBSET_ORACLE_LIMIT = 20


@dataclass(frozen=True)
class ConstraintFamily:
    ground: tuple[str, ...]
    sets: tuple[frozenset[str], ...]
    infeasible: bool = False

    @classmethod
    def build(cls, ground, sets) -> ConstraintFamily:
        sets = tuple(frozenset(s) for s in sets)
        return cls(tuple(sort_vertices(ground)), sets, any(not s for s in sets))


@dataclass(frozen=True)
class CodeResult:
    size: int | None
    witness: tuple[str, ...] | None

    @property
    def feasible(self) -> bool:
        return self.size is not None

    @classmethod
    def infeasible(cls) -> CodeResult:
        return cls(None, None)

    def __str__(self):
        if not self.feasible:
            return "infeasible"
        return f"size={self.size} witness={' '.join(self.witness)}"


def oosc_constraints(d: Digraph) -> ConstraintFamily:
    vs = d.sorted_vertices()
    sets = [d.out_neighbors(u) ^ d.out_neighbors(v) for u, v in combinations(vs, 2)]
    return ConstraintFamily.build(vs, sets)


def dc_constraints(g: Graph, part_a, part_b) -> ConstraintFamily:
    a_set, b_set = check_bipartition(g, part_a, part_b)
    a_list = sort_vertices(a_set)
    sets = [g.neighbors(a) for a in a_list]
    sets += [g.neighbors(u) ^ g.neighbors(v) for u, v in combinations(a_list, 2)]
    return ConstraintFamily.build(b_set, sets)


def _bitsets(family: ConstraintFamily) -> list[int]:
    index = {v: i for i, v in enumerate(family.ground)}
    masks = set()
    for s in family.sets:
        m = 0
        for v in s:
            m |= 1 << index[v]
        masks.add(m)
    # a constraint containing another one is hit whenever the smaller one is
    kept: list[int] = []
    for m in sorted(masks, key=lambda c: (c.bit_count(), c)):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _packing_bound(unhit, allowed=-1) -> int:
    """Size of a greedy family of pairwise disjoint constraints (smallest first)."""
    used = 0
    bound = 0
    for m in sorted(unhit, key=lambda c: (c & allowed).bit_count()):
        m &= allowed
        if not m & used:
            used |= m
            bound += 1
    return bound


def _optimum_size(masks: list[int]) -> int:
    best = [len(masks)]  # one element per constraint always suffices

    def branch(unhit, size):
        if not unhit:
            best[0] = min(best[0], size)
            return
        if size + _packing_bound(unhit) >= best[0]:
            return
        target = min(unhit, key=lambda c: (c.bit_count(), c))
        options = target
        while options:
            low = options & -options
            branch([c for c in unhit if not c & low], size + 1)
            options ^= low

    branch(masks, 0)
    return best[0]


def _least_witness(masks: list[int], n: int, k: int) -> int:
    """Lexicographically least hitting set of size ``k`` (include-first DFS)."""

    def dfs(i, chosen, size, unhit, allowed):
        if not unhit:
            return chosen
        if size == k or i == n:
            return None
        if any(not c & allowed for c in unhit):
            return None
        if size + _packing_bound(unhit, allowed) > k:
            return None
        bit = 1 << i
        if any(c & bit for c in unhit):
            found = dfs(i + 1, chosen | bit, size + 1, [c for c in unhit if not c & bit], allowed)
            if found is not None:
                return found
        return dfs(i + 1, chosen, size, unhit, allowed & ~bit)

    found = dfs(0, 0, 0, masks, (1 << n) - 1)
    if found is None:
        raise AssertionError("no hitting set of the optimum size found")
    return found


def min_hitting_set(family: ConstraintFamily) -> CodeResult:
    if family.infeasible:
        return CodeResult.infeasible()
    masks = _bitsets(family)
    k = _optimum_size(masks)
    chosen = _least_witness(masks, len(family.ground), k)
    witness = tuple(v for i, v in enumerate(family.ground) if chosen >> i & 1)
    return CodeResult(k, witness)


def subset_enumeration_hitting_set(family: ConstraintFamily, limit: int = SUBSET_ORACLE_LIMIT) -> CodeResult:
    """Oracle: try subsets by increasing size, in lexicographic order."""
    if family.infeasible:
        return CodeResult.infeasible()
    if len(family.ground) > limit:
        raise CapacityError(f"subset enumeration is capped at a ground set of {limit}")
    for k in range(len(family.ground) + 1):
        for combo in combinations(family.ground, k):
            chosen = set(combo)
            if all(s & chosen for s in family.sets):
                return CodeResult(k, combo)
    return CodeResult.infeasible()


def is_oosc(d: Digraph, code) -> bool:
    code = frozenset(code)
    if not code <= set(d.vertices):
        raise DomainError(f"code contains non-vertices {sort_vertices(code - set(d.vertices))}")
    traces = {d.out_neighbors(v) & code for v in d.vertices}
    return len(traces) == len(d.vertices)


def min_oosc(d: Digraph) -> CodeResult:
    return min_hitting_set(oosc_constraints(d))


def is_discriminating_code(g: Graph, part_a, part_b, code) -> bool:
    a_set, b_set = check_bipartition(g, part_a, part_b)
    code = frozenset(code)
    if not code <= b_set:
        raise DomainError(f"code must be a subset of part B; extra {sort_vertices(code - b_set)}")
    traces = set()
    for a in a_set:
        t = g.neighbors(a) & code
        if not t or t in traces:
            return False
        traces.add(t)
    return True


def min_discriminating_code(g: Graph, part_a, part_b) -> CodeResult:
    return min_hitting_set(dc_constraints(g, part_a, part_b))
