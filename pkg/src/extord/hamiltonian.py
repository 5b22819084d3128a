"""Exact Hamiltonian paths: search and counting.

Paths are undirected and counted up to reversal. A path is reported with its
lesser endpoint (in vertex order) first. A single vertex is its own trivial
path; the empty graph has no Hamiltonian path.
"""

from __future__ import annotations

from itertools import permutations

from .errors import DefectError, DomainError
from .graph_core import Graph, vertex_key

__all__ = [
    "find_hamiltonian_path",
    "count_hamiltonian_paths",
    "count_by_subset_dp",
    "count_by_permutations",
    "is_hamiltonian_path",
    "PERMUTATION_ORACLE_LIMIT",
]

PERMUTATION_ORACLE_LIMIT = 9
MAX_VERTICES = 24


def _indexed(g: Graph):
    order = g.sorted_vertices()
    if len(order) > MAX_VERTICES:
        raise DomainError(f"Hamiltonian path routines support at most {MAX_VERTICES} vertices")
    index = {v: i for i, v in enumerate(order)}
    adj = [0] * len(order)
    for u, v in g.edges:
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]
    return order, adj


def _normalize(path):
    if vertex_key(path[-1]) < vertex_key(path[0]):
        path = path[::-1]
    return tuple(path)


def is_hamiltonian_path(g: Graph, path) -> bool:
    path = list(path)
    if not path or len(path) != len(g.vertices) or set(path) != set(g.vertices):
        return False
    return all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


def find_hamiltonian_path(g: Graph) -> tuple[str, ...] | None:
    """First Hamiltonian path found by DFS over canonically ordered vertices.

    Dead (visited-set, endpoint) states are memoized, so the search is bounded
    by 2^n * n states.
    """
    order, adj = _indexed(g)
    n = len(order)
    if n == 0:
        return None
    full = (1 << n) - 1
    dead = set()

    def extend(path, mask):
        if mask == full:
            return True
        last = path[-1]
        if (mask, last) in dead:
            return False
        options = adj[last] & ~mask
        while options:
            low = options & -options
            w = low.bit_length() - 1
            path.append(w)
            if extend(path, mask | low):
                return True
            path.pop()
            options ^= low
        dead.add((mask, last))
        return False

    for start in range(n):
        path = [start]
        if extend(path, 1 << start):
            return _normalize([order[i] for i in path])
    return None


def count_by_subset_dp(g: Graph) -> int:
    """Directed traversals by (visited set, endpoint) DP, halved."""
    order, adj = _indexed(g)
    n = len(order)
    if n == 0:
        return 0
    if n == 1:
        return 1
    full = (1 << n) - 1
    ways = [dict() for _ in range(1 << n)]
    for v in range(n):
        ways[1 << v][v] = 1
    # masks in increasing numeric order visit every subset before its supersets
    for mask in range(1, full + 1):
        row = ways[mask]
        if not row:
            continue
        for v, c in row.items():
            options = adj[v] & ~mask
            while options:
                low = options & -options
                w = low.bit_length() - 1
                nxt = ways[mask | low]
                nxt[w] = nxt.get(w, 0) + c
                options ^= low
    total = sum(ways[full].values())
    # a path on two or more vertices differs from its reversal
    return total // 2


def count_by_permutations(g: Graph) -> int:
    order = g.sorted_vertices()
    n = len(order)
    if n == 0:
        return 0
    if n == 1:
        return 1
    count = 0
    for perm in permutations(range(n)):
        if perm[0] > perm[-1]:
            continue
        if all(g.has_edge(order[a], order[b]) for a, b in zip(perm, perm[1:])):
            count += 1
    return count


def count_hamiltonian_paths(g: Graph, cross_check: bool = True) -> int:
    """Number of Hamiltonian paths up to reversal.

    For graphs of at most ``PERMUTATION_ORACLE_LIMIT`` vertices the subset DP
    is checked against plain permutation enumeration.
    """
    result = count_by_subset_dp(g)
    if cross_check and len(g.vertices) <= PERMUTATION_ORACLE_LIMIT:
        oracle = count_by_permutations(g)
        if oracle != result:
            raise DefectError(f"Hamiltonian path counts disagree: dp={result} permutations={oracle}")
    return result
