"""Decision, enumeration and counting of extensional orientations.

Three variants are supported:

* ``EAO``  acyclic and extensional,
* ``SEAO`` additionally slim,
* ``HEO``  hyper-extensional (cycles allowed).

The search assigns edges in ``Graph.sorted_edges()`` order, trying direction
bit 0 (toward the lesser endpoint) before bit 1, so solutions come out in
lexicographic order of their direction bit-vectors. Two necessary conditions
prune partial assignments: a directed cycle (EAO, SEAO only), and two
vertices whose incident edges are all assigned and whose out-neighbourhoods
coincide (every variant; hyper-extensional digraphs are extensional).
Slimness and hyper-extensionality themselves are only tested at complete
assignments.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .bisimulation import is_hyper_extensional
from .checkers import is_acyclic, is_extensional, is_slim
from .errors import CapacityError, DefectError
from .graph_core import Digraph, Graph

__all__ = [
    "Variant",
    "SearchStats",
    "SolveResult",
    "satisfies",
    "solve",
    "enumerate_orientations",
    "count",
    "brute_force_count",
    "BRUTE_FORCE_EDGE_CAP",
]

BRUTE_FORCE_EDGE_CAP = 24


class Variant(enum.Enum):
    EAO = "eao"
    SEAO = "seao"
    HEO = "heo"

    @classmethod
    def parse(cls, value) -> Variant:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown variant {value!r}; expected eao, seao or heo") from None


@dataclass
class SearchStats:
    nodes: int = 0
    cycle_prunes: int = 0
    collision_prunes: int = 0
    solutions: int = 0

    def merge(self, other: SearchStats) -> None:
        self.nodes += other.nodes
        self.cycle_prunes += other.cycle_prunes
        self.collision_prunes += other.collision_prunes
        self.solutions += other.solutions


@dataclass
class SolveResult:
    digraph: Digraph | None
    stats: SearchStats = field(default_factory=SearchStats)

    def __bool__(self):
        return self.digraph is not None


def satisfies(d: Digraph, variant: Variant) -> bool:
    """The variant's defining predicate, evaluated with the checker modules."""
    variant = Variant.parse(variant)
    if variant is Variant.HEO:
        return is_hyper_extensional(d)
    if not is_acyclic(d) or not is_extensional(d):
        return False
    if variant is Variant.SEAO:
        return bool(is_slim(d))
    return True


def _digraph_from_bits(g: Graph, edges, bits) -> Digraph:
    out = {v: set() for v in g.vertices}
    for (u, v), b in zip(edges, bits):
        if b:
            out[u].add(v)
        else:
            out[v].add(u)
    return Digraph._trusted(g.vertices, {v: frozenset(ns) for v, ns in out.items()})


class _Search:
    def __init__(self, g: Graph, variant: Variant):
        self.g = g
        self.variant = variant
        self.acyclic = variant is not Variant.HEO
        self.names = g.sorted_vertices()
        index = {v: i for i, v in enumerate(self.names)}
        self.edges = g.sorted_edges()
        self.pairs = [(index[u], index[v]) for u, v in self.edges]
        n = len(self.names)
        self.out = [0] * n
        self.rem = [g.degree(v) for v in self.names]
        self.stats = SearchStats()

    def reaches(self, src: int, dst: int) -> bool:
        out = self.out
        seen = frontier = 1 << src
        target = 1 << dst
        while frontier:
            if frontier & target:
                return True
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= out[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return False

    def run(self, prefix=()) -> Iterator[tuple[int, ...]]:
        """Yield the bit-vectors of all solutions extending ``prefix``."""
        complete: dict[int, int] = {}
        for v, r in enumerate(self.rem):
            if r == 0:
                if self.out[v] in complete:
                    self.stats.collision_prunes += 1
                    return
                complete[self.out[v]] = v
        self.complete = complete
        bits: list[int] = []
        yield from self._extend(0, list(prefix), bits)

    def _assign(self, k: int, bit: int) -> list[int] | None:
        # returns the vertices that became complete, or None when pruned
        i, j = self.pairs[k]
        tail, head = (i, j) if bit else (j, i)
        if self.acyclic and self.reaches(head, tail):
            self.stats.cycle_prunes += 1
            return None
        self.out[tail] |= 1 << head
        self.rem[i] -= 1
        self.rem[j] -= 1
        added = []
        for v in (i, j):
            if self.rem[v] == 0:
                key = self.out[v]
                if key in self.complete:
                    self.stats.collision_prunes += 1
                    for w in added:
                        del self.complete[self.out[w]]
                    self._unassign(k, bit)
                    return None
                self.complete[key] = v
                added.append(v)
        return added

    def _unassign(self, k: int, bit: int) -> None:
        i, j = self.pairs[k]
        tail, head = (i, j) if bit else (j, i)
        self.out[tail] &= ~(1 << head)
        self.rem[i] += 1
        self.rem[j] += 1

    def _extend(self, k: int, prefix: list[int], bits: list[int]):
        self.stats.nodes += 1
        if k == len(self.pairs):
            if self._leaf_ok(bits):
                self.stats.solutions += 1
                yield tuple(bits)
            return
        choices = (prefix[k],) if k < len(prefix) else (0, 1)
        for bit in choices:
            added = self._assign(k, bit)
            if added is None:
                continue
            bits.append(bit)
            yield from self._extend(k + 1, prefix, bits)
            bits.pop()
            for w in added:
                del self.complete[self.out[w]]
            self._unassign(k, bit)

    def _leaf_ok(self, bits) -> bool:
        if self.variant is Variant.EAO:
            return True
        d = _digraph_from_bits(self.g, self.edges, bits)
        if self.variant is Variant.SEAO:
            return bool(is_slim(d))
        return is_hyper_extensional(d)


def solve(g: Graph, variant) -> SolveResult:
    """First satisfying orientation in canonical order, re-verified independently."""
    variant = Variant.parse(variant)
    search = _Search(g, variant)
    for bits in search.run():
        d = _digraph_from_bits(g, search.edges, bits)
        if not satisfies(d, variant):
            raise DefectError(f"search produced an orientation that is not a valid {variant.name}")
        return SolveResult(d, search.stats)
    return SolveResult(None, search.stats)


def _prefixes(g: Graph, variant: Variant, jobs: int) -> list[tuple[int, ...]]:
    m = len(g.edges)
    depth = 0
    while depth < m and (1 << depth) < 4 * jobs:
        depth += 1
    return list(product((0, 1), repeat=depth))


def _bits_from_prefix(args) -> tuple[list[tuple[int, ...]], SearchStats]:
    g, variant, prefix = args
    search = _Search(g, variant)
    found = list(search.run(prefix))
    return found, search.stats


def _count_from_prefix(args) -> tuple[int, SearchStats]:
    g, variant, prefix = args
    search = _Search(g, variant)
    total = sum(1 for _ in search.run(prefix))
    return total, search.stats


def enumerate_orientations(g: Graph, variant, jobs: int = 1, stats: SearchStats | None = None) -> Iterator[Digraph]:
    """Every satisfying orientation exactly once, in canonical bit-vector order.

    With ``jobs > 1`` subtrees are searched in worker processes and merged back
    in prefix order, so the output does not depend on ``jobs``.
    """
    variant = Variant.parse(variant)
    edges = g.sorted_edges()
    if jobs <= 1:
        search = _Search(g, variant)
        try:
            for bits in search.run():
                yield _digraph_from_bits(g, edges, bits)
        finally:
            if stats is not None:
                stats.merge(search.stats)
        return
    tasks = [(g, variant, p) for p in _prefixes(g, variant, jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for found, st in pool.map(_bits_from_prefix, tasks):
            if stats is not None:
                stats.merge(st)
            for bits in found:
                yield _digraph_from_bits(g, edges, bits)


def count(g: Graph, variant, jobs: int = 1, stats: SearchStats | None = None) -> int:
    variant = Variant.parse(variant)
    if jobs <= 1:
        total, st = _count_from_prefix((g, variant, ()))
        if stats is not None:
            stats.merge(st)
        return total
    tasks = [(g, variant, p) for p in _prefixes(g, variant, jobs)]
    total = 0
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part, st in pool.map(_count_from_prefix, tasks):
            total += part
            if stats is not None:
                stats.merge(st)
    return total


def brute_force_count(g: Graph, variant, max_edges: int = BRUTE_FORCE_EDGE_CAP) -> int:
    """Try all 2^|E| orientations against the variant predicate; no pruning."""
    variant = Variant.parse(variant)
    m = len(g.edges)
    if m > max_edges:
        raise CapacityError(f"brute force is capped at {max_edges} edges; graph has {m}")
    edges = g.sorted_edges()
    return sum(1 for bits in product((0, 1), repeat=m) if satisfies(_digraph_from_bits(g, edges, bits), variant))
