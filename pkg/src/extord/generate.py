"""Seeded random instances for property tests and the ``generate`` command."""

from __future__ import annotations

import random
from itertools import combinations

from .bisimulation import is_hyper_extensional
from .checkers import sources
from .graph_core import Digraph, Graph
from .hfsets import HFSet, membership_digraph


def _names(n: int, prefix: str) -> list[str]:
    return [f"{prefix}{i}" for i in range(n)]


def random_graph(rng: random.Random, n: int, p: float, prefix: str = "v") -> Graph:
    vs = _names(n, prefix)
    return Graph(vs, [e for e in combinations(vs, 2) if rng.random() < p])


def random_graph_max_edges(rng: random.Random, n: int, max_edges: int, prefix: str = "v") -> Graph:
    vs = _names(n, prefix)
    pairs = list(combinations(vs, 2))
    k = rng.randint(0, min(max_edges, len(pairs)))
    return Graph(vs, rng.sample(pairs, k))


def random_digraph(rng: random.Random, n: int, p: float, prefix: str = "v") -> Digraph:
    """Each ordered pair independently; antiparallel pairs may occur."""
    vs = _names(n, prefix)
    return Digraph(vs, [(u, v) for u in vs for v in vs if u != v and rng.random() < p])


def random_dag(rng: random.Random, n: int, p: float, prefix: str = "v") -> Digraph:
    vs = _names(n, prefix)
    rng.shuffle(vs)
    return Digraph(vs, [(vs[i], vs[j]) for i in range(n) for j in range(i) if rng.random() < p])


def random_hamiltonian_graph(rng: random.Random, n: int, p: float, prefix: str = "v") -> Graph:
    """Random graph with a Hamiltonian path planted along a random vertex order."""
    vs = _names(n, prefix)
    order = vs[:]
    rng.shuffle(order)
    edges = {tuple(sorted(e)) for e in zip(order, order[1:])}
    edges |= {e for e in combinations(vs, 2) if rng.random() < p}
    return Graph(vs, edges)


def random_two_leaf_graph(rng: random.Random, n: int, p: float | None = None, prefix: str = "v", tries: int = 10_000) -> Graph:
    """Connected graph on ``n >= 2`` vertices with exactly two leaves (rejection sampling)."""
    for _ in range(tries):
        q = rng.uniform(0.2, 0.7) if p is None else p
        g = random_graph(rng, n, q, prefix)
        if g.is_connected() and len(g.leaves()) == 2:
            return g
    raise RuntimeError(f"no connected two-leaf graph on {n} vertices found in {tries} tries")


def random_hfset(rng: random.Random, depth: int, width: int = 3) -> HFSet:
    """A set of rank at most ``depth`` with at most ``width`` elements per level."""
    if depth <= 0:
        return HFSet()
    return HFSet(random_hfset(rng, rng.randint(0, depth - 1), width) for _ in range(rng.randint(0, width)))


def random_ea_digraph(rng: random.Random, depth: int, width: int = 3, prefix: str = "p") -> Digraph:
    """Membership digraph of a random set, relabelled with short names."""
    d = membership_digraph(random_hfset(rng, depth, width))
    order = d.sorted_vertices()
    return d.relabel({v: f"{prefix}{i}" for i, v in enumerate(order)})


def random_hyper_extensional_with_source(rng: random.Random, n: int, prefix: str = "q", tries: int = 10_000) -> Digraph:
    """Hyper-extensional digraph, usually with cycles, having at least one source."""
    for _ in range(tries):
        d = random_dag(rng, n, rng.uniform(0.3, 0.8), prefix)
        extra = [(v, u) for u, v in d.arcs if rng.random() < 0.2]
        arcs = set(d.arcs) - {(v, u) for u, v in extra} | set(extra)
        d = Digraph(d.vertices, arcs)
        if sources(d) and is_hyper_extensional(d):
            return d
    raise RuntimeError("no hyper-extensional digraph with a source found")


def random_dc_instance(rng: random.Random, max_total: int, tries: int = 10_000) -> tuple[Graph, list[str], list[str]]:
    """Bipartite graph with non-empty B, no isolated A-vertex and no twin A-vertices."""
    for _ in range(tries):
        total = rng.randint(2, max_total)
        na = rng.randint(1, total - 1)
        a = _names(na, "a")
        b = _names(total - na, "b")
        p = rng.uniform(0.3, 0.8)
        g = Graph(a + b, [(x, y) for x in a for y in b if rng.random() < p])
        neigh = [g.neighbors(x) for x in a]
        if all(neigh) and len(set(neigh)) == len(neigh):
            return g, a, b
    raise RuntimeError("no valid discriminating-code instance found")

