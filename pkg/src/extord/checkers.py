"""Polynomial-time predicates on digraphs.

Each predicate returns a small result object that is truthy exactly when the
property holds and carries a witness for the answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .graph_core import Digraph, sort_vertices, vertex_key

__all__ = [
    "AcyclicityResult",
    "ExtensionalityResult",
    "SlimnessResult",
    "is_acyclic",
    "is_extensional",
    "is_slim",
    "is_reversal_robust",
    "sinks",
    "sources",
    "all_reach_sink",
    "reachable_from",
]


@dataclass(frozen=True)
class AcyclicityResult:
    acyclic: bool
    rank: dict[str, int] | None = None
    cycle: tuple[str, ...] | None = None

    def __bool__(self):
        return self.acyclic


@dataclass(frozen=True)
class ExtensionalityResult:
    extensional: bool
    collision: tuple[str, str] | None = None

    def __bool__(self):
        return self.extensional


@dataclass(frozen=True)
class SlimnessResult:
    slim: bool
    removable_arc: tuple[str, str] | None = None

    def __bool__(self):
        return self.slim


def is_acyclic(d: Digraph) -> AcyclicityResult:
    """Detect a directed cycle by DFS in canonical vertex order.

    On success the result carries the rank map (longest path to a sink).
    A cycle witness is rotated so that it starts at its least vertex.
    """
    WHITE, GREY, BLACK = 0, 1, 2
    color = dict.fromkeys(d.vertices, WHITE)
    rank: dict[str, int] = {}
    succ = {v: sort_vertices(d.out_neighbors(v)) for v in d.vertices}
    for root in d.sorted_vertices():
        if color[root] != WHITE:
            continue
        path = [root]
        iters = [iter(succ[root])]
        color[root] = GREY
        while path:
            v = path[-1]
            for w in iters[-1]:
                if color[w] == GREY:
                    cycle = path[path.index(w):]
                    i = cycle.index(min(cycle, key=vertex_key))
                    return AcyclicityResult(False, cycle=tuple(cycle[i:] + cycle[:i]))
                if color[w] == WHITE:
                    color[w] = GREY
                    path.append(w)
                    iters.append(iter(succ[w]))
                    break
            else:
                color[v] = BLACK
                rank[v] = 1 + max((rank[w] for w in succ[v]), default=-1)
                path.pop()
                iters.pop()
    return AcyclicityResult(True, rank=rank)


def is_extensional(d: Digraph) -> ExtensionalityResult:
    groups: dict[frozenset, list[str]] = {}
    for v in d.vertices:
        groups.setdefault(d.out_neighbors(v), []).append(v)
    best = None
    for members in groups.values():
        if len(members) > 1:
            a, b = sort_vertices(members)[:2]
            if best is None or (vertex_key(a), vertex_key(b)) < (vertex_key(best[0]), vertex_key(best[1])):
                best = (a, b)
    if best is None:
        return ExtensionalityResult(True)
    return ExtensionalityResult(False, best)


def _require_ea(d: Digraph, what: str):
    if not is_acyclic(d):
        raise DomainError(f"{what} is defined for extensional acyclic digraphs; input has a cycle")
    ext = is_extensional(d)
    if not ext:
        u, v = ext.collision
        raise DomainError(f"{what} is defined for extensional acyclic digraphs; {u} and {v} collide")


def is_slim(d: Digraph) -> SlimnessResult:
    """Every single-arc deletion must create a collision."""
    _require_ea(d, "slimness")
    for u, v in d.sorted_arcs():
        if is_extensional(d.without_arc(u, v)):
            return SlimnessResult(False, (u, v))
    return SlimnessResult(True)


def is_reversal_robust(d: Digraph) -> bool:
    """Every single-arc reversal must create a cycle or a collision."""
    _require_ea(d, "reversal robustness")
    for u, v in d.sorted_arcs():
        r = d.with_arc_reversed(u, v)
        if is_extensional(r) and is_acyclic(r):
            return False
    return True


def sinks(d: Digraph) -> set[str]:
    return {v for v in d.vertices if not d.out_neighbors(v)}


def sources(d: Digraph) -> set[str]:
    return {v for v in d.vertices if not d.in_neighbors(v)}


def all_reach_sink(d: Digraph) -> bool:
    seen = sinks(d)
    stack = list(seen)
    while stack:
        for u in d.in_neighbors(stack.pop()):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(d.vertices)


def reachable_from(d: Digraph, v: str) -> set[str]:
    """Vertices reachable from ``v`` by a directed path of length at least 0."""
    seen = {v}
    stack = [v]
    while stack:
        for w in d.out_neighbors(stack.pop()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen
