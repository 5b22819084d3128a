"""Constructions behind the hardness reductions.

Generated vertices use reserved names (``s_1``, ``s_2``, ``t_1``, ``t_2``,
``x_*``, ``a_*``, ``c_*``). An input vertex whose name clashes with a
construction's reserved names is renamed by prefixing underscores; the
renaming is deterministic and can be obtained with :func:`escape_map`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

from .checkers import all_reach_sink, is_extensional, sinks
from .errors import DefectError, DomainError
from .graph_core import Digraph, Graph, check_bipartition, sort_vertices, vertex_key
from .hamiltonian import is_hamiltonian_path

__all__ = [
    "RESERVED",
    "escape_map",
    "edge_vertex_names",
    "hp_prime_extend",
    "subdivision",
    "lemma2_orientation",
    "compose",
    "compose_renaming",
    "Gadget",
    "gadget",
    "heo_instance",
    "gadget_verify",
    "dc_to_oosc",
]

_TERMINALS = frozenset({"s_1", "s_2", "t_1", "t_2"})

RESERVED: dict[str, Callable[[str], bool]] = {
    "hpx": lambda v: v in _TERMINALS,
    "subdivide": lambda v: v.startswith("x_"),
    "lemma2": lambda v: v.startswith("x_"),
    "heo-instance": lambda v: v.startswith(("x_", "a_")),
    "dc2oosc": lambda v: v.startswith("c_"),
}


def escape_map(construction: str, vertices) -> dict[str, str]:
    """Renaming applied to input vertices that clash with ``construction``'s names."""
    reserved = RESERVED[construction]
    taken = set(vertices)
    mapping = {}
    for v in sort_vertices(vertices):
        if reserved(v):
            new = "_" + v
            while new in taken:
                new = "_" + new
            taken.add(new)
            mapping[v] = new
    return mapping


def _escaped(construction: str, g):
    mapping = escape_map(construction, g.vertices)
    return (g.relabel(mapping) if mapping else g), mapping


def edge_vertex_names(g: Graph) -> dict[tuple[str, str], str]:
    """``x_<u>_<v>`` for each edge, u the lesser endpoint.

    Underscores inside vertex names can make two edges produce the same
    string; later edges (in canonical order) then get trailing apostrophes.
    """
    names = {}
    used = set(g.vertices)
    for u, v in g.sorted_edges():
        name = f"x_{u}_{v}"
        while name in used:
            name += "'"
        used.add(name)
        names[u, v] = name
    return names


def hp_prime_extend(g: Graph) -> Graph:
    """Attach pendant paths ``s_1 s_2`` and ``t_1 t_2`` with s_2, t_2 joined to every vertex."""
    if not g.vertices:
        raise DomainError("the extension needs at least one vertex")
    h, _ = _escaped("hpx", g)
    edges = list(h.sorted_edges()) + [("s_1", "s_2"), ("t_1", "t_2")]
    for v in h.sorted_vertices():
        edges.append(("s_2", v))
        edges.append(("t_2", v))
    return Graph(list(h.vertices) + ["s_1", "s_2", "t_1", "t_2"], edges)


def subdivision(g: Graph) -> Graph:
    h, _ = _escaped("subdivide", g)
    names = edge_vertex_names(h)
    edges = []
    for (u, v), x in names.items():
        edges.append((u, x))
        edges.append((v, x))
    return Graph(list(h.vertices) + list(names.values()), edges)


def lemma2_orientation(g: Graph, path) -> Digraph:
    """Slim extensional acyclic orientation of ``subdivision(g)`` from a Hamiltonian path.

    Vertices are ranked ``v_1 < x(v_1 v_2) < v_2 < ... < v_n`` followed by the
    edge vertices of unused edges, and every edge points from the later to the
    earlier vertex. ``path[0]`` becomes the unique sink.
    """
    path = list(path)
    leaves = g.leaves()
    if len(leaves) != 2:
        raise DomainError(f"graph must have exactly two leaves, it has {len(leaves)}")
    if not is_hamiltonian_path(g, path):
        raise DomainError("path is not a Hamiltonian path of the graph")
    if {path[0], path[-1]} != set(leaves):
        raise DomainError("path endpoints must be the two leaves")
    h, mapping = _escaped("lemma2", g)
    path = [mapping.get(v, v) for v in path]
    names = edge_vertex_names(h)

    def edge_vertex(u, v):
        return names[(u, v) if vertex_key(u) <= vertex_key(v) else (v, u)]

    position = {}
    for i, v in enumerate(path):
        position[v] = 2 * i
        if i + 1 < len(path):
            position[edge_vertex(v, path[i + 1])] = 2 * i + 1
    untouched = sort_vertices(x for x in names.values() if x not in position)
    for k, x in enumerate(untouched):
        position[x] = 2 * len(path) - 1 + k
    arcs = []
    for (u, v), x in names.items():
        for w in (u, v):
            arcs.append((x, w) if position[x] > position[w] else (w, x))
    return Digraph(list(h.vertices) + list(names.values()), arcs)


def compose_renaming(first, second) -> dict[str, str]:
    """Renaming applied to ``second``'s vertices that also occur in ``first``."""
    taken = set(first.vertices) | set(second.vertices)
    mapping = {}
    for v in sort_vertices(second.vertices):
        if v in first:
            new = "_" + v
            while new in taken:
                new = "_" + new
            taken.add(new)
            mapping[v] = new
    return mapping


def compose(first, v1: str, v2: str, second):
    """Disjoint union of two (di)graphs plus the bridge ``v1 -> v2`` (or edge ``v1 v2``)."""
    if type(first) is not type(second) or not isinstance(first, (Graph, Digraph)):
        raise DomainError("compose needs two graphs or two digraphs")
    if v1 not in first:
        raise DomainError(f"{v1} is not a vertex of the first operand")
    if v2 not in second:
        raise DomainError(f"{v2} is not a vertex of the second operand")
    mapping = compose_renaming(first, second)
    second = second.relabel(mapping) if mapping else second
    v2 = mapping.get(v2, v2)
    if isinstance(first, Graph):
        pairs = first.sorted_edges() + second.sorted_edges()
    else:
        pairs = first.sorted_arcs() + second.sorted_arcs()
    pairs.append((v1, v2))
    return type(first)(list(first.vertices) + list(second.vertices), pairs)


@dataclass(frozen=True)
class Gadget:
    graph: Graph
    d8: Digraph
    d8_prime: Digraph


_G8_VERTICES = [f"a_{i}" for i in range(1, 9)]
_D8_ARCS = [
    ("a_3", "a_1"),
    ("a_2", "a_3"),
    ("a_4", "a_3"),
    ("a_4", "a_7"),
    ("a_5", "a_4"),
    ("a_6", "a_5"),
    ("a_7", "a_6"),
    ("a_8", "a_7"),
]


def gadget() -> Gadget:
    """The eight-vertex sink-forcing gadget and its two admissible orientations."""
    d8 = Digraph(_G8_VERTICES, _D8_ARCS)
    flipped = {("a_2", "a_3"), ("a_3", "a_1")}
    d8p = Digraph(_G8_VERTICES, [(v, u) if (u, v) in flipped else (u, v) for u, v in _D8_ARCS])
    return Gadget(Graph(_G8_VERTICES, _D8_ARCS), d8, d8p)


def gadget_verify() -> list[Digraph]:
    """All orientations of G_8 that are extensional, have a sink, and drain into sinks.

    Exactly D_8 and D'_8 must survive; anything else means the gadget is wrong.
    """
    gd = gadget()
    edges = gd.graph.sorted_edges()
    found = []
    for bits in product((0, 1), repeat=len(edges)):
        d = Digraph(gd.graph.vertices, [(u, v) if b else (v, u) for (u, v), b in zip(edges, bits)])
        if is_extensional(d) and sinks(d) and all_reach_sink(d):
            found.append(d)
    if set(found) != {gd.d8, gd.d8_prime}:
        raise DefectError(f"gadget admits {len(found)} valid orientations instead of exactly D_8 and D'_8")
    return found


def heo_instance(g: Graph) -> Graph:
    """``subdivision(g)`` bridged from its first leaf to ``a_8`` of the gadget graph."""
    leaves = g.leaves()
    if len(leaves) != 2:
        raise DomainError(f"graph must have exactly two leaves, it has {len(leaves)}")
    h, mapping = _escaped("heo-instance", g)
    s = mapping.get(leaves[0], leaves[0])
    return compose(subdivision(h), s, "a_8", gadget().graph)


def dc_to_oosc(g: Graph, part_a, part_b) -> Digraph:
    """Digraph whose minimum open-out-separating code is |B| + 1 larger than the
    minimum discriminating code of the bipartite graph ``g``.

    B is numbered ``b_1..b_m`` in vertex order; arcs are ``a -> b`` for edges,
    ``b_i -> c_i``, and ``c_i -> c_j`` for all ``j < i``.
    """
    a_set, b_set = check_bipartition(g, part_a, part_b)
    if not b_set:
        raise DomainError("part B must be non-empty")
    for a in sort_vertices(a_set):
        if not g.neighbors(a):
            raise DomainError(f"isolated A-vertex {a}: no discriminating code exists")
    seen = {}
    for a in sort_vertices(a_set):
        key = g.neighbors(a)
        if key in seen:
            raise DomainError(f"twin A-vertices {seen[key]} and {a}: no discriminating code exists")
        seen[key] = a
    mapping = escape_map("dc2oosc", g.vertices)
    rn = lambda v: mapping.get(v, v)
    bs = sort_vertices(b_set)
    m = len(bs)
    chain = [f"c_{i}" for i in range(m + 1)]
    arcs = [(rn(a), rn(b)) if a in a_set else (rn(b), rn(a)) for a, b in g.sorted_edges()]
    arcs += [(rn(b), chain[i]) for i, b in enumerate(bs, start=1)]
    arcs += [(chain[i], chain[j]) for i in range(1, m + 1) for j in range(i)]
    vertices = [rn(v) for v in sort_vertices(a_set)] + [rn(b) for b in bs] + chain
    return Digraph(vertices, arcs)
