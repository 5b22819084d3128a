"""Hereditarily finite sets and their digraph representations."""

from __future__ import annotations

from functools import cached_property

from .checkers import is_acyclic
from .errors import CapacityError, DomainError
from .graph_core import Digraph, sort_vertices

__all__ = [
    "HFSet",
    "EMPTY",
    "mostowski_collapse",
    "canonical_string",
    "ackermann",
    "from_ackermann",
    "membership_digraph",
    "transitive_closure",
    "ACKERMANN_BIT_LIMIT",
]

ACKERMANN_BIT_LIMIT = 4096


def _string_key(s: str):
    return (len(s), s)


class HFSet:
    """An immutable hereditarily finite set in canonical form.

    Children are distinct and sorted by their canonical strings (shorter
    first, then lexicographic), so equal sets have identical structure.
    """

    def __init__(self, elements=()):
        unique = {}
        for e in elements:
            if not isinstance(e, HFSet):
                raise TypeError(f"HFSet elements must be HFSet, got {type(e).__name__}")
            unique.setdefault(e.canonical, e)
        self.children: tuple[HFSet, ...] = tuple(unique[k] for k in sorted(unique, key=_string_key))

    @cached_property
    def canonical(self) -> str:
        return "{" + ",".join(c.canonical for c in self.children) + "}"

    @cached_property
    def depth(self) -> int:
        return 1 + max((c.depth for c in self.children), default=-1)

    def __eq__(self, other):
        if not isinstance(other, HFSet):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __len__(self):
        return len(self.children)

    def __iter__(self):
        return iter(self.children)

    def __contains__(self, item):
        return item in set(self.children)

    def __repr__(self):
        return f"HFSet({self.canonical})"

    @classmethod
    def parse(cls, text: str) -> HFSet:
        """Inverse of :func:`canonical_string` (accepts any element order)."""
        pos = 0

        def read():
            nonlocal pos
            if pos >= len(text) or text[pos] != "{":
                raise ValueError(f"expected '{{' at offset {pos}")
            pos += 1
            items = []
            if pos < len(text) and text[pos] == "}":
                pos += 1
                return cls()
            while True:
                items.append(read())
                if pos < len(text) and text[pos] == ",":
                    pos += 1
                elif pos < len(text) and text[pos] == "}":
                    pos += 1
                    return cls(items)
                else:
                    raise ValueError(f"expected ',' or '}}' at offset {pos}")

        result = read()
        if pos != len(text):
            raise ValueError(f"trailing characters at offset {pos}")
        return result


EMPTY = HFSet()


def canonical_string(s: HFSet) -> str:
    return s.canonical


def mostowski_collapse(d: Digraph) -> dict[str, HFSet]:
    """Assign to every vertex the set of the sets assigned to its out-neighbours."""
    acyc = is_acyclic(d)
    if not acyc:
        raise DomainError(f"collapse needs an acyclic digraph; cycle {' -> '.join(acyc.cycle)}")
    result: dict[str, HFSet] = {}
    for v in sorted(d.vertices, key=lambda v: acyc.rank[v]):
        result[v] = HFSet(result[w] for w in d.out_neighbors(v))
    return result


def ackermann(s: HFSet, limit_bits: int = ACKERMANN_BIT_LIMIT) -> int:
    """Sum of 2**ackermann(y) over the elements y; the empty set codes 0.

    Raises CapacityError if the code would reach 2**limit_bits.
    """
    memo: dict[str, int] = {}

    def code(x: HFSet) -> int:
        key = x.canonical
        if key not in memo:
            total = 0
            for c in x.children:
                e = code(c)
                if e >= limit_bits:
                    raise CapacityError(f"Ackermann code of {x.canonical} needs more than {limit_bits} bits")
                total += 1 << e
            memo[key] = total
        return memo[key]

    return code(s)


def from_ackermann(n: int) -> HFSet:
    if n < 0:
        raise DomainError("Ackermann codes are natural numbers")
    elements = []
    i = 0
    while n >> i:
        if n >> i & 1:
            elements.append(from_ackermann(i))
        i += 1
    return HFSet(elements)


def transitive_closure(s: HFSet) -> set[HFSet]:
    seen: set[HFSet] = set()
    stack = list(s.children)
    while stack:
        x = stack.pop()
        if x not in seen:
            seen.add(x)
            stack.extend(x.children)
    return seen


def membership_digraph(s: HFSet) -> Digraph:
    """One vertex per member of TrCl(s) plus ``s`` itself, named by canonical string;
    each set points at its elements."""
    members = transitive_closure(s) | {s}
    names = sort_vertices(x.canonical for x in members)
    arcs = [(x.canonical, y.canonical) for x in members for y in x.children]
    return Digraph(names, arcs)
