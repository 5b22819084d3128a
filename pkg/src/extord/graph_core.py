"""Simple graphs, simple digraphs, orientations, and the edge-list text format.

Vertices are name tokens. Every ordering in the package (serialization,
search order, tie-breaking) uses :func:`vertex_key`, i.e. shorter names first
and then lexicographic order.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping

from .errors import DomainError, GraphError, ParseError

__all__ = [
    "vertex_key",
    "sort_vertices",
    "check_name",
    "Graph",
    "Digraph",
    "Orientation",
    "parse",
    "serialize",
    "underlying_graph",
    "apply",
    "check_bipartition",
]


def vertex_key(name: str) -> tuple[int, str]:
    return (len(name), name)


def sort_vertices(names: Iterable[str]) -> list[str]:
    return sorted(names, key=vertex_key)


def pair_key(pair: tuple[str, str]) -> tuple:
    return (vertex_key(pair[0]), vertex_key(pair[1]))


def check_name(name) -> str:
    if not isinstance(name, str) or not name:
        raise GraphError(f"vertex name must be a non-empty string, got {name!r}")
    if not name.isprintable() or any(ch.isspace() for ch in name):
        raise GraphError(f"vertex name {name!r} contains whitespace or unprintable characters")
    if name == "node":
        # reserved keyword of the edge-list format
        raise GraphError("'node' cannot be used as a vertex name")
    return name


def _canonical_edge(u: str, v: str) -> tuple[str, str]:
    return (u, v) if vertex_key(u) <= vertex_key(v) else (v, u)


def _collect_vertices(vertices, pairs):
    order = []
    seen = set()
    for v in vertices:
        check_name(v)
        if v in seen:
            raise GraphError(f"duplicate vertex {v!r}")
        seen.add(v)
        order.append(v)
    for u, v in pairs:
        for w in (u, v):
            if w not in seen:
                check_name(w)
                seen.add(w)
                order.append(w)
    return tuple(order)


class Graph:
    """An undirected simple graph.

    ``vertices`` keeps insertion order (explicit vertices first, then first
    appearance in ``edges``); equality ignores that order.
    """

    __slots__ = ("_vertices", "_edges", "_adj")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable = ()):
        pairs = [tuple(e) for e in edges]
        self._vertices = _collect_vertices(vertices, pairs)
        canon = set()
        adj = {v: set() for v in self._vertices}
        for pair in pairs:
            if len(pair) != 2:
                raise GraphError(f"edge {pair!r} does not have two endpoints")
            u, v = pair
            if u == v:
                raise GraphError(f"loop at {u!r}")
            e = _canonical_edge(u, v)
            if e in canon:
                raise GraphError(f"duplicate edge {u} {v}")
            canon.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self._edges = frozenset(canon)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> frozenset[tuple[str, str]]:
        """Edges as ``(u, v)`` tuples with ``u`` the lesser endpoint."""
        return self._edges

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._adj

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj.keys() == other._adj.keys() and self._edges == other._edges

    def __hash__(self):
        return hash((frozenset(self._vertices), self._edges))

    def __repr__(self):
        return f"Graph({self.sorted_vertices()!r}, {self.sorted_edges()!r})"

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def leaves(self) -> list[str]:
        return sort_vertices(v for v in self._vertices if len(self._adj[v]) == 1)

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adj.get(u, ())

    def sorted_vertices(self) -> list[str]:
        return sort_vertices(self._vertices)

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(self._edges, key=pair_key)

    def relabel(self, mapping: Mapping[str, str]) -> Graph:
        f = lambda v: mapping.get(v, v)
        return Graph((f(v) for v in self._vertices), ((f(u), f(v)) for u, v in self._edges))

    def is_connected(self) -> bool:
        if not self._vertices:
            return True
        start = self._vertices[0]
        seen = {start}
        stack = [start]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self._vertices)


class Digraph:
    """A directed graph without loops or parallel arcs.

    Antiparallel pairs ``u -> v``, ``v -> u`` are allowed.
    """

    __slots__ = ("_vertices", "_arcs", "_out", "_in")

    def __init__(self, vertices: Iterable[str] = (), arcs: Iterable = ()):
        pairs = [tuple(a) for a in arcs]
        self._vertices = _collect_vertices(vertices, pairs)
        out = {v: set() for v in self._vertices}
        inn = {v: set() for v in self._vertices}
        seen = set()
        for pair in pairs:
            if len(pair) != 2:
                raise GraphError(f"arc {pair!r} does not have two endpoints")
            u, v = pair
            if u == v:
                raise GraphError(f"loop at {u!r}")
            if pair in seen:
                raise GraphError(f"duplicate arc {u} {v}")
            seen.add(pair)
            out[u].add(v)
            inn[v].add(u)
        self._arcs = frozenset(seen)
        self._out = {v: frozenset(ns) for v, ns in out.items()}
        self._in = {v: frozenset(ns) for v, ns in inn.items()}

    @classmethod
    def _trusted(cls, vertices: tuple[str, ...], out: dict[str, frozenset[str]]) -> Digraph:
        # Fast path for internally generated, already valid structures.
        d = cls.__new__(cls)
        d._vertices = vertices
        d._out = out
        inn = {v: set() for v in vertices}
        arcs = []
        for u, ns in out.items():
            for v in ns:
                inn[v].add(u)
                arcs.append((u, v))
        d._arcs = frozenset(arcs)
        d._in = {v: frozenset(ns) for v, ns in inn.items()}
        return d

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def arcs(self) -> frozenset[tuple[str, str]]:
        return self._arcs

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._out

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._out.keys() == other._out.keys() and self._arcs == other._arcs

    def __hash__(self):
        return hash((frozenset(self._vertices), self._arcs))

    def __repr__(self):
        return f"Digraph({self.sorted_vertices()!r}, {self.sorted_arcs()!r})"

    def out_neighbors(self, v: str) -> frozenset[str]:
        return self._out[v]

    def in_neighbors(self, v: str) -> frozenset[str]:
        return self._in[v]

    def has_arc(self, u: str, v: str) -> bool:
        return v in self._out.get(u, ())

    def sorted_vertices(self) -> list[str]:
        return sort_vertices(self._vertices)

    def sorted_arcs(self) -> list[tuple[str, str]]:
        return sorted(self._arcs, key=pair_key)

    def relabel(self, mapping: Mapping[str, str]) -> Digraph:
        f = lambda v: mapping.get(v, v)
        return Digraph((f(v) for v in self._vertices), ((f(u), f(v)) for u, v in self._arcs))

    def without_arc(self, u: str, v: str) -> Digraph:
        if (u, v) not in self._arcs:
            raise DomainError(f"no arc {u} -> {v}")
        out = dict(self._out)
        out[u] = out[u] - {v}
        return Digraph._trusted(self._vertices, out)

    def with_arc_reversed(self, u: str, v: str) -> Digraph:
        if (u, v) not in self._arcs:
            raise DomainError(f"no arc {u} -> {v}")
        if (v, u) in self._arcs:
            raise DomainError(f"reversing {u} -> {v} would create a parallel arc")
        out = dict(self._out)
        out[u] = out[u] - {v}
        out[v] = out[v] | {u}
        return Digraph._trusted(self._vertices, out)


class Orientation:
    """A (possibly partial) assignment of a direction to each edge of ``base``.

    ``toward`` maps an edge (any pair order) to the endpoint its arc points at.
    """

    __slots__ = ("base", "_toward")

    def __init__(self, base: Graph, toward: Mapping | Iterable = ()):
        self.base = base
        items = toward.items() if isinstance(toward, Mapping) else toward
        self._toward = {}
        for edge, head in items:
            u, v = tuple(edge)
            e = _canonical_edge(u, v)
            if e not in base.edges:
                raise DomainError(f"{u} {v} is not an edge of the base graph")
            if head not in e:
                raise DomainError(f"{head!r} is not an endpoint of edge {u} {v}")
            self._toward[e] = head

    @classmethod
    def from_bits(cls, base: Graph, bits: Iterable[int]) -> Orientation:
        """Build from one bit per edge of ``base.sorted_edges()``.

        Bit 0 points the edge toward its lesser endpoint, bit 1 toward the greater.
        """
        edges = base.sorted_edges()
        bits = list(bits)
        if len(bits) > len(edges):
            raise DomainError("more direction bits than edges")
        return cls(base, {e: e[b] for e, b in zip(edges, bits)})

    @classmethod
    def of(cls, d: Digraph) -> Orientation:
        g = underlying_graph(d)
        return cls(g, {(u, v): v for u, v in d.arcs})

    @property
    def toward(self) -> dict[tuple[str, str], str]:
        return dict(self._toward)

    def is_total(self) -> bool:
        return len(self._toward) == len(self.base.edges)

    def bits(self) -> tuple[int, ...]:
        if not self.is_total():
            raise DomainError("orientation is partial")
        return tuple(int(self._toward[e] == e[1]) for e in self.base.sorted_edges())

    def __eq__(self, other):
        if not isinstance(other, Orientation):
            return NotImplemented
        return self.base == other.base and self._toward == other._toward

    def __hash__(self):
        return hash((self.base, frozenset(self._toward.items())))

    def __repr__(self):
        return f"Orientation({self.base!r}, {self._toward!r})"


def apply(o: Orientation) -> Digraph:
    if not o.is_total():
        missing = [e for e in o.base.sorted_edges() if e not in o.toward]
        raise DomainError(f"orientation is partial; {len(missing)} edge(s) unassigned, first {missing[0]}")
    arcs = []
    for (u, v), head in o.toward.items():
        arcs.append((v, u) if head == u else (u, v))
    return Digraph(o.base.vertices, arcs)


def underlying_graph(d: Digraph) -> Graph:
    for u, v in d.sorted_arcs():
        if d.has_arc(v, u):
            raise DomainError(f"antiparallel arcs {u} -> {v} and {v} -> {u}")
    return Graph(d.vertices, d.arcs)


def parse(text: str) -> Graph | Digraph:
    kind = None
    vertices: list[str] = []
    known: set[str] = set()
    declared_nodes: set[str] = set()
    pairs: list[tuple[str, str]] = []
    seen_pairs: set = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line or line.startswith("#"):
            continue
        if kind is None:
            if line not in ("graph", "digraph"):
                raise ParseError(lineno, f"expected header 'graph' or 'digraph', got {line!r}")
            kind = line
            continue
        tokens = line.split(" ")
        if len(tokens) != 2 or not all(tokens):
            raise ParseError(lineno, f"expected two space-separated tokens, got {line!r}")
        for t in tokens:
            if not t.isprintable() or any(ch.isspace() for ch in t):
                raise ParseError(lineno, f"invalid token {t!r}")
        if tokens[1] == "node":
            raise ParseError(lineno, "'node' cannot be used as a vertex name")
        if tokens[0] == "node":
            v = tokens[1]
            if v in known:
                raise ParseError(lineno, f"duplicate declaration of vertex {v}")
            known.add(v)
            declared_nodes.add(v)
            vertices.append(v)
            continue
        u, v = tokens
        if u == v:
            raise ParseError(lineno, f"loop at {u}")
        key = (u, v) if kind == "digraph" else _canonical_edge(u, v)
        if key in seen_pairs:
            raise ParseError(lineno, f"duplicate {'arc' if kind == 'digraph' else 'edge'} {u} {v}")
        seen_pairs.add(key)
        for w in (u, v):
            if w not in known:
                known.add(w)
                vertices.append(w)
        pairs.append((u, v))
    if kind is None:
        raise ParseError(0, "missing 'graph' or 'digraph' header")
    cls = Graph if kind == "graph" else Digraph
    return cls(vertices, pairs)


def serialize(g: Graph | Digraph) -> str:
    if isinstance(g, Graph):
        lines = ["graph"]
        pairs = g.sorted_edges()
        isolated = [v for v in g.sorted_vertices() if g.degree(v) == 0]
    elif isinstance(g, Digraph):
        lines = ["digraph"]
        pairs = g.sorted_arcs()
        isolated = [v for v in g.sorted_vertices() if not g.out_neighbors(v) and not g.in_neighbors(v)]
    else:
        raise TypeError(f"cannot serialize {type(g).__name__}")
    lines.extend(f"node {v}" for v in isolated)
    lines.extend(f"{u} {v}" for u, v in pairs)
    return "\n".join(lines) + "\n"


def check_bipartition(g: Graph, part_a, part_b) -> tuple[frozenset[str], frozenset[str]]:
    """Validate that ``part_a``/``part_b`` split ``g`` with no edge inside a part."""
    a, b = frozenset(part_a), frozenset(part_b)
    if a & b:
        raise DomainError(f"parts overlap in {sort_vertices(a & b)}")
    if a | b != set(g.vertices):
        extra = sort_vertices((a | b) - set(g.vertices))
        missing = sort_vertices(set(g.vertices) - (a | b))
        raise DomainError(f"parts do not match the vertex set (unknown {extra}, unassigned {missing})")
    for u, v in g.sorted_edges():
        if (u in a) == (v in a):
            raise DomainError(f"edge {u} {v} lies inside one part; graph is not bipartite with these parts")
    return a, b
