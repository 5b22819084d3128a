"""Maximum bisimulation by partition refinement.

Two engines compute the same coarsest stable partition:

* :func:`naive_refinement` re-splits every block, round after round, by the
  set of blocks its members point into, until a round changes nothing. It is
  the reference oracle.
* :func:`paige_tarjan_refinement` keeps a coarser "compound" partition and
  always refines with the smaller half of a compound block, giving the
  O(|E| log |V|) bound.

Both start from the universal partition, so every sink begins in the same block.
"""

from __future__ import annotations

from collections import Counter
from itertools import chain

from .checkers import is_acyclic, is_extensional
from .errors import DomainError
from .graph_core import Digraph, sort_vertices, vertex_key

__all__ = [
    "Partition",
    "naive_refinement",
    "paige_tarjan_refinement",
    "max_bisimulation",
    "is_hyper_extensional",
    "quotient",
]


class Partition:
    """Disjoint, non-empty vertex blocks in canonical order.

    Members are sorted by vertex order and blocks by their least member.
    """

    __slots__ = ("blocks", "_index")

    def __init__(self, blocks):
        canon = [tuple(sort_vertices(b)) for b in blocks]
        if any(not b for b in canon):
            raise DomainError("partition blocks must be non-empty")
        canon.sort(key=lambda b: vertex_key(b[0]))
        self.blocks: tuple[tuple[str, ...], ...] = tuple(canon)
        self._index = {}
        for i, b in enumerate(self.blocks):
            for v in b:
                if v in self._index:
                    raise DomainError(f"vertex {v} appears in two blocks")
                self._index[v] = i

    @classmethod
    def discrete(cls, vertices) -> Partition:
        return cls([v] for v in vertices)

    def block_of(self, v: str) -> tuple[str, ...]:
        return self.blocks[self._index[v]]

    def related(self, u: str, v: str) -> bool:
        return self._index[u] == self._index[v]

    def is_identity(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def covers(self, vertices) -> bool:
        return self._index.keys() == set(vertices)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"Partition({list(self.blocks)!r})"

    def serialize(self) -> str:
        return "".join(" ".join(b) + "\n" for b in self.blocks)


def naive_refinement(d: Digraph) -> Partition:
    if not d.vertices:
        return Partition([])
    succ = {v: tuple(d.out_neighbors(v)) for v in d.vertices}
    label = dict.fromkeys(d.vertices, 0)
    count = 1
    while True:
        # a vertex's new label: its old block plus the set of blocks it points into
        signature = {v: (label[v], frozenset(label[w] for w in succ[v])) for v in d.vertices}
        ids: dict = {}
        label = {v: ids.setdefault(sig, len(ids)) for v, sig in signature.items()}
        if len(ids) == count:
            break
        count = len(ids)
    blocks: dict[int, list[str]] = {}
    for v, i in label.items():
        blocks.setdefault(i, []).append(v)
    return Partition(blocks.values())


class _Block:
    __slots__ = ("members", "compound")

    def __init__(self, members, compound):
        self.members = members
        self.compound = compound


class _Compound:
    # counts[x] = number of out-neighbours of x inside this compound block
    __slots__ = ("blocks", "queued", "counts")

    def __init__(self, counts):
        self.blocks = set()
        self.queued = False
        self.counts = counts


def paige_tarjan_refinement(d: Digraph) -> Partition:
    n = len(d.vertices)
    if n == 0:
        return Partition([])
    names = d.vertices
    index = {v: i for i, v in enumerate(names)}
    pred = [[index[u] for u in d.in_neighbors(v)] for v in names]
    has_succ = [bool(d.out_neighbors(v)) for v in names]

    root = _Compound({x: len(d.out_neighbors(v)) for x, v in enumerate(names)})
    first = _Block(set(range(n)), root)
    root.blocks.add(first)
    block_of = [first] * n
    pending: list[_Compound] = []

    def split(marked):
        by_block: dict[_Block, list[int]] = {}
        for x in marked:
            blk = block_of[x]
            if blk in by_block:
                by_block[blk].append(x)
            else:
                by_block[blk] = [x]
        for blk, xs in by_block.items():
            if len(xs) == len(blk.members):
                continue
            comp = blk.compound
            twin = _Block(set(xs), comp)
            blk.members.difference_update(xs)
            for x in xs:
                block_of[x] = twin
            comp.blocks.add(twin)
            if not comp.queued:
                comp.queued = True
                pending.append(comp)

    # Stabilise with respect to the universal compound block: sinks vs the rest.
    split([x for x in range(n) if has_succ[x]])

    while pending:
        s = pending.pop()
        s.queued = False
        if len(s.blocks) < 2:
            continue
        it = iter(s.blocks)
        b1, b2 = next(it), next(it)
        b = b1 if len(b1.members) <= len(b2.members) else b2
        s.blocks.discard(b)
        count_b = Counter(chain.from_iterable(pred[y] for y in b.members))
        fresh = _Compound(count_b)
        fresh.blocks.add(b)
        b.compound = fresh
        if len(s.blocks) > 1:
            s.queued = True
            pending.append(s)

        split(count_b)
        in_s = s.counts
        split([x for x, c in count_b.items() if c == in_s[x]])
        for x, c in count_b.items():
            in_s[x] -= c

    blocks = {id(blk): blk for blk in block_of}
    return Partition([names[i] for i in blk.members] for blk in blocks.values())


def max_bisimulation(d: Digraph, engine: str = "paige-tarjan") -> Partition:
    if engine == "paige-tarjan":
        return paige_tarjan_refinement(d)
    if engine == "naive":
        return naive_refinement(d)
    raise ValueError(f"unknown refinement engine {engine!r}")


def is_hyper_extensional(d: Digraph) -> bool:
    # On acyclic digraphs the maximum bisimulation is the identity exactly
    # when out-neighbourhoods are pairwise distinct.
    if is_acyclic(d):
        return bool(is_extensional(d))
    return paige_tarjan_refinement(d).is_identity()


def quotient(d: Digraph, p: Partition | None = None) -> Digraph:
    """Collapse each block of the maximum bisimulation to its least member."""
    mb = max_bisimulation(d)
    if p is None:
        p = mb
    elif p != mb:
        raise DomainError("quotient requires the maximum bisimulation partition")
    rep = {v: block[0] for block in p.blocks for v in block}
    arcs = set()
    for u, v in d.arcs:
        a, b = rep[u], rep[v]
        if a == b:
            raise DomainError(f"block {p.block_of(u)} has an internal arc {u} -> {v}; the quotient would need a loop")
        arcs.add((a, b))
    return Digraph([b[0] for b in p.blocks], arcs)
