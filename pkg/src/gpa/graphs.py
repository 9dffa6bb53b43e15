"""Undirected multigraphs and Dynkin / Euclidean diagram recognition.

The classifier is purely structural (degrees, arms, cycles); the quadratic
form in :mod:`gpa.tits` is an independent check of the same trichotomy.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


class GraphError(ValueError):
    """Malformed multigraph or input outside an operation's domain."""


class NotStarLike(GraphError):
    """Tree has more than one branch vertex, so it has no arm profile."""


@dataclass(frozen=True)
class Multigraph:
    """Finite undirected multigraph with named vertices; loops allowed.

    ``edges`` is a multiset of vertex pairs, each normalized so that the
    endpoint declared first comes first.  The direct constructor trusts its
    arguments; use :meth:`of` to validate and normalize.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    @classmethod
    def of(cls, vertices: Iterable[str] | str, edges: Iterable[tuple[str, str]]) -> "Multigraph":
        verts = tuple(vertices.split()) if isinstance(vertices, str) else tuple(vertices)
        index = {}
        for v in verts:
            if v in index:
                raise GraphError(f"duplicate vertex {v!r}")
            index[v] = len(index)
        norm = []
        for u, v in edges:
            if u not in index or v not in index:
                raise GraphError(f"edge ({u!r}, {v!r}) references an undeclared vertex")
            norm.append((u, v) if index[u] <= index[v] else (v, u))
        return cls(verts, tuple(norm))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _adjacency(self) -> dict[str, list[str]]:
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            if u != v:
                adj[v].append(u)
        return adj

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def multiplicity(self, u: str, v: str) -> int:
        i, j = self._index[u], self._index[v]
        pair = (u, v) if i <= j else (v, u)
        return sum(1 for e in self.edges if e == pair)

    def degree(self, v: str) -> int:
        """Edge-end count at ``v``; a loop contributes 2."""
        d = 0
        for a, b in self.edges:
            if a == v:
                d += 1
            if b == v:
                d += 1
        return d

    def neighbors(self, v: str) -> tuple[str, ...]:
        """Distinct neighbors of ``v`` (no multiplicities, no self)."""
        seen: list[str] = []
        for w in self._adjacency[v]:
            if w != v and w not in seen:
                seen.append(w)
        return tuple(seen)

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        if len(self.vertices) == 1:
            return True
        # union-find over edge list; avoids building adjacency for the common case
        index = self._index
        parent = list(range(len(self.vertices)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = len(self.vertices)
        for u, v in self.edges:
            ru, rv = find(index[u]), find(index[v])
            if ru != rv:
                parent[ru] = rv
                count -= 1
        return count == 1

    def relabel(self, mapping: dict[str, str]) -> "Multigraph":
        return Multigraph.of(
            tuple(mapping[v] for v in self.vertices),
            tuple((mapping[u], mapping[v]) for u, v in self.edges),
        )


@dataclass(frozen=True)
class GraphClass:
    """Outcome of diagram recognition: Dynkin, Euclidean, or neither."""

    kind: str  # "dynkin" | "euclidean" | "neither"
    family: str = ""  # "A" | "D" | "E", empty for neither
    index: int = 0

    @property
    def is_dynkin(self) -> bool:
        return self.kind == "dynkin"

    @property
    def is_euclidean(self) -> bool:
        return self.kind == "euclidean"

    def __str__(self) -> str:
        if self.kind == "dynkin":
            return f"Dynkin {self.family}{self.index}"
        if self.kind == "euclidean":
            return f"Euclidean {self.family}~{self.index}"
        return "Neither"


NEITHER = GraphClass("neither")


def dynkin(family: str, index: int) -> GraphClass:
    return GraphClass("dynkin", family, index)


def euclidean(family: str, index: int) -> GraphClass:
    return GraphClass("euclidean", family, index)


@dataclass(frozen=True)
class ArmProfile:
    """Branch vertex (if any) of a star-like tree and its sorted arm lengths."""

    center: str | None
    arms: tuple[int, ...]


def _arm_length(g: Multigraph, start: str, first: str) -> int:
    """Edge count of the arm leaving ``start`` through ``first``."""
    length = 1
    prev, cur = start, first
    while g.degree(cur) == 2:
        nxt = [w for w in g.neighbors(cur) if w != prev]
        if not nxt:  # multiplicity-2 dead end cannot occur in a simple tree
            break
        prev, cur = cur, nxt[0]
        length += 1
    return length


def arm_decomposition(g: Multigraph) -> ArmProfile:
    """Arm profile of a simple connected tree with at most one branch vertex.

    A path has no center and a single arm spanning its full length.
    """
    n = len(g.vertices)
    if n == 0 or not g.is_connected():
        raise GraphError("arm decomposition needs a nonempty connected graph")
    if g.has_loops() or len(g.edges) != n - 1:
        raise GraphError("arm decomposition needs a simple tree")
    branches = [v for v in g.vertices if g.degree(v) >= 3]
    if len(branches) > 1:
        raise NotStarLike(f"tree has {len(branches)} branch vertices")
    if not branches:
        return ArmProfile(None, (n - 1,))
    center = branches[0]
    arms = sorted(_arm_length(g, center, w) for w in g.neighbors(center))
    return ArmProfile(center, tuple(arms))


# arm profiles of the exceptional tree diagrams, keyed by sorted arm lengths
_EXCEPTIONAL_ARMS = {
    (1, 2, 2): ("dynkin", "E", 6),
    (1, 2, 3): ("dynkin", "E", 7),
    (1, 2, 4): ("dynkin", "E", 8),
    (2, 2, 2): ("euclidean", "E", 6),
    (1, 3, 3): ("euclidean", "E", 7),
    (1, 2, 5): ("euclidean", "E", 8),
}


def classify_graph(g: Multigraph) -> GraphClass:
    """Recognize the Dynkin (A/D/E) or Euclidean (affine) shape of a graph.

    Raises ``GraphError`` on empty or disconnected input.  Any graph that is
    not one of the finitely many diagram shapes classifies as Neither.
    """
    n = len(g.vertices)
    if n == 0:
        raise GraphError("cannot classify the empty graph")
    if not g.is_connected():
        raise GraphError("cannot classify a disconnected graph")
    for u, v in g.edges:
        if u == v:
            return NEITHER
    m = len(g.edges)
    seen: set[tuple[str, str]] = set()
    parallel = False
    for e in g.edges:
        if e in seen:
            parallel = True
            break
        seen.add(e)
    if parallel:
        if n == 2 and m == 2:
            return euclidean("A", 1)
        return NEITHER
    # simple connected graph from here on
    if m == n:
        # exactly one cycle; the affine A shapes are the pure cycles
        if all(g.degree(v) == 2 for v in g.vertices):
            assert n >= 3
            return euclidean("A", n - 1)
        return NEITHER
    if m > n:
        return NEITHER
    # tree
    degrees = {v: g.degree(v) for v in g.vertices}
    branches = [v for v in g.vertices if degrees[v] >= 3]
    if not branches:
        result = dynkin("A", n)
    elif len(branches) == 1:
        center = branches[0]
        if degrees[center] == 3:
            arms = tuple(sorted(_arm_length(g, center, w) for w in g.neighbors(center)))
            if arms[0] == 1 and arms[1] == 1:
                result = dynkin("D", arms[2] + 3)
            else:
                hit = _EXCEPTIONAL_ARMS.get(arms)
                result = GraphClass(*hit) if hit else NEITHER
        elif degrees[center] == 4:
            arms = tuple(sorted(_arm_length(g, center, w) for w in g.neighbors(center)))
            result = euclidean("D", 4) if arms == (1, 1, 1, 1) else NEITHER
        else:
            result = NEITHER
    elif len(branches) == 2:
        b1, b2 = branches
        if (
            degrees[b1] == 3
            and degrees[b2] == 3
            and sum(1 for w in g.neighbors(b1) if degrees[w] == 1) == 2
            and sum(1 for w in g.neighbors(b2) if degrees[w] == 1) == 2
        ):
            result = euclidean("D", n - 1)
        else:
            result = NEITHER
    else:
        result = NEITHER
    if result.is_dynkin:
        assert result.index == n
        assert (
            (result.family == "A" and result.index >= 1)
            or (result.family == "D" and result.index >= 4)
            or (result.family == "E" and result.index in (6, 7, 8))
        )
    elif result.is_euclidean:
        assert result.index == n - 1
        assert (
            (result.family == "A" and result.index >= 1)
            or (result.family == "D" and result.index >= 4)
            or (result.family == "E" and result.index in (6, 7, 8))
        )
    return result
