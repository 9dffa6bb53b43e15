"""Quivers, paths, monomial ideals, and bound quivers.

A bound quiver (quiver plus admissible monomial ideal) presents a basic
finite-dimensional algebra: the surviving paths, those avoiding every
forbidden path as a contiguous factor, form a basis.  Admissibility is
decided by a factor-avoidance automaton over the arrow alphabet.

All values are immutable; every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .graphs import Multigraph


class QuiverError(ValueError):
    """Malformed quiver, path, or ideal."""


class InvalidIdeal(QuiverError):
    """Ideal generator is not a valid path of the quiver it binds."""


class AdmissibilityError(QuiverError):
    """The ideal does not present a finite-dimensional algebra."""


class GeneratorTooShort(AdmissibilityError):
    """A generator of length < 2 was supplied."""

    def __init__(self, path: "Path", where: str = ""):
        self.path = path
        self.where = where
        super().__init__(f"{where}generator {path} has length {path.length}, need >= 2")


class InfiniteDimensional(AdmissibilityError):
    """A directed cycle survives the ideal, so path count is infinite."""

    def __init__(self, cycle: tuple[str, ...], where: str = ""):
        self.cycle = cycle
        self.where = where
        super().__init__(f"{where}surviving cycle through arrows ({', '.join(cycle)})")


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str

    def __str__(self) -> str:
        return f"{self.name}: {self.source} -> {self.target}"

    def reverse(self) -> "Arrow":
        return Arrow(self.name, self.target, self.source)


@dataclass(frozen=True)
class Path:
    """A trivial path at a vertex, or a nonempty composable arrow sequence.

    Arrows compose left to right: in ``a*b`` the target of ``a`` is the
    source of ``b``.
    """

    vertex: str | None
    arrows: tuple[Arrow, ...]

    def __post_init__(self) -> None:
        if self.vertex is None:
            if not self.arrows:
                raise QuiverError("a nontrivial path needs at least one arrow")
            for a, b in zip(self.arrows, self.arrows[1:]):
                if a.target != b.source:
                    raise QuiverError(f"arrows {a.name} and {b.name} do not compose")
        elif self.arrows:
            raise QuiverError("a trivial path carries no arrows")

    @classmethod
    def trivial(cls, vertex: str) -> "Path":
        return cls(vertex, ())

    @classmethod
    def of(cls, arrows: Iterable[Arrow]) -> "Path":
        return cls(None, tuple(arrows))

    @property
    def is_trivial(self) -> bool:
        return self.vertex is not None

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def source(self) -> str:
        return self.vertex if self.vertex is not None else self.arrows[0].source

    @property
    def target(self) -> str:
        return self.vertex if self.vertex is not None else self.arrows[-1].target

    @property
    def word(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.arrows)

    def reverse(self) -> "Path":
        if self.is_trivial:
            return self
        return Path.of(a.reverse() for a in reversed(self.arrows))

    def __str__(self) -> str:
        if self.is_trivial:
            return f"e_{self.vertex}"
        return "*".join(self.word)


@dataclass(frozen=True)
class Quiver:
    """Finite directed multigraph with named vertices and named arrows.

    Iteration order over vertices and arrows is declaration order; all
    derived outputs follow it, which keeps golden tests deterministic.
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    @classmethod
    def of(
        cls,
        vertices: Iterable[str] | str,
        arrows: Iterable[Arrow | tuple[str, str, str]] = (),
    ) -> "Quiver":
        verts = tuple(vertices.split()) if isinstance(vertices, str) else tuple(vertices)
        if len(set(verts)) != len(verts):
            raise QuiverError("duplicate vertex id")
        vset = set(verts)
        arrs = []
        names = set()
        for a in arrows:
            if not isinstance(a, Arrow):
                a = Arrow(*a)
            if a.name in names:
                raise QuiverError(f"duplicate arrow id {a.name!r}")
            names.add(a.name)
            if a.source not in vset or a.target not in vset:
                raise QuiverError(f"arrow {a} references an undeclared vertex")
            arrs.append(a)
        return cls(verts, tuple(arrs))

    @cached_property
    def _by_name(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def _out(self) -> dict[str, tuple[Arrow, ...]]:
        out: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            out[a.source].append(a)
        return {v: tuple(lst) for v, lst in out.items()}

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise QuiverError(f"no arrow named {name!r}") from None

    def out_arrows(self, vertex: str) -> tuple[Arrow, ...]:
        return self._out[vertex]

    def path(self, *arrow_names: str) -> Path:
        return Path.of(self.arrow(n) for n in arrow_names)

    def trivial_path(self, vertex: str) -> Path:
        if vertex not in self._out:
            raise QuiverError(f"no vertex named {vertex!r}")
        return Path.trivial(vertex)

    def has_loops(self) -> bool:
        return any(a.source == a.target for a in self.arrows)

    def is_acyclic(self) -> bool:
        """True iff there is no directed cycle; loops count as cycles."""
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        queue = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for a in self._out[v]:
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    queue.append(a.target)
        return seen == len(self.vertices)

    def underlying_graph(self) -> Multigraph:
        """Forget orientation; every arrow becomes one edge."""
        index = {v: i for i, v in enumerate(self.vertices)}
        edges = tuple(
            (a.source, a.target) if index[a.source] <= index[a.target] else (a.target, a.source)
            for a in self.arrows
        )
        return Multigraph(self.vertices, edges)

    def reverse(self) -> "Quiver":
        """The opposite quiver: every arrow reversed."""
        return Quiver(self.vertices, tuple(a.reverse() for a in self.arrows))


def _contains_factor(word: Sequence[str], factor: Sequence[str]) -> bool:
    k = len(factor)
    if k == 0 or k > len(word):
        return False
    f = tuple(factor)
    return any(tuple(word[i : i + k]) == f for i in range(len(word) - k + 1))


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal generated by a finite set of paths.

    Generators are kept factor-minimal: any generator containing another as
    a contiguous factor is dropped.  That makes equality of ideals a plain
    comparison of generator words.
    """

    generators: tuple[Path, ...] = ()

    @classmethod
    def of(cls, paths: Iterable[Path]) -> "MonomialIdeal":
        candidates = []
        seen = set()
        for p in paths:
            if p.is_trivial:
                raise QuiverError("a trivial path cannot generate a monomial ideal")
            if p.word not in seen:
                seen.add(p.word)
                candidates.append(p)
        kept = [
            p
            for p in candidates
            if not any(q.word != p.word and _contains_factor(p.word, q.word) for q in candidates)
        ]
        return cls(tuple(kept))

    @property
    def is_empty(self) -> bool:
        return not self.generators

    @cached_property
    def word_set(self) -> frozenset[tuple[str, ...]]:
        return frozenset(p.word for p in self.generators)

    def reverse(self) -> "MonomialIdeal":
        return MonomialIdeal.of(p.reverse() for p in self.generators)


EMPTY_IDEAL = MonomialIdeal()


@dataclass(frozen=True)
class Infinite:
    """Marker for an infinite surviving-path set, with a witness cycle."""

    cycle: tuple[str, ...]


@dataclass(frozen=True)
class BoundQuiver:
    """A quiver together with a monomial ideal binding it."""

    quiver: Quiver
    ideal: MonomialIdeal = EMPTY_IDEAL

    def __post_init__(self) -> None:
        for p in self.ideal.generators:
            for a in p.arrows:
                if self.quiver._by_name.get(a.name) != a:
                    raise InvalidIdeal(f"generator {p} uses unknown arrow {a.name!r}")

    def opposite(self) -> "BoundQuiver":
        return BoundQuiver(self.quiver.reverse(), self.ideal.reverse())

    # -- factor-avoidance automaton -------------------------------------
    #
    # States are (vertex, w) where w is the longest suffix of the word read
    # so far that is a proper prefix of some generator; vertex is where the
    # path currently ends.  A transition dies exactly when appending the
    # arrow completes a generator as a suffix.

    def _automaton(self):
        gen_words = self.ideal.word_set
        max_len = max((len(w) for w in gen_words), default=0)
        prefixes = {w[:k] for w in gen_words for k in range(1, len(w))}

        def step(state_word: tuple[str, ...], arrow: Arrow):
            w = state_word + (arrow.name,)
            lo = max(len(w) - max_len, 0)
            for i in range(lo, len(w)):
                if w[i:] in gen_words:
                    return None  # forbidden factor completed
            for i in range(lo, len(w)):
                if w[i:] in prefixes:
                    return (arrow.target, w[i:])
            return (arrow.target, ())

        return step

    def surviving_paths(self) -> tuple[Path, ...] | Infinite:
        """All paths avoiding every generator, or ``Infinite`` with a cycle.

        Trivial paths are included.  Finite results are ordered by length,
        then by arrow declaration order.
        """
        quiver = self.quiver
        step = self._automaton()

        # explore the reachable product automaton; detect directed cycles
        starts = [(v, ()) for v in quiver.vertices]
        transitions: dict[tuple, list[tuple[Arrow, tuple]]] = {}
        color: dict[tuple, int] = {}  # 1 = on stack, 2 = done
        order: list[tuple] = []

        def expand(state):
            if state in transitions:
                return transitions[state]
            outs = []
            for a in quiver.out_arrows(state[0]):
                nxt = step(state[1], a)
                if nxt is not None:
                    outs.append((a, nxt))
            transitions[state] = outs
            return outs

        for start in starts:
            if start in color:
                continue
            stack: list[tuple[tuple, int, list[Arrow]]] = [(start, 0, [])]
            color[start] = 1
            trail: list[tuple] = [start]
            arrows_trail: list[Arrow] = []
            while stack:
                state, idx, _ = stack[-1]
                outs = expand(state)
                if idx >= len(outs):
                    stack.pop()
                    color[state] = 2
                    trail.pop()
                    if arrows_trail:
                        arrows_trail.pop()
                    continue
                stack[-1] = (state, idx + 1, [])
                arrow, nxt = outs[idx]
                if color.get(nxt) == 1:
                    # directed cycle: report the arrows along it
                    pos = trail.index(nxt)
                    cycle = tuple(a.name for a in arrows_trail[pos:]) + (arrow.name,)
                    return Infinite(cycle)
                if nxt not in color:
                    color[nxt] = 1
                    stack.append((nxt, 0, []))
                    trail.append(nxt)
                    arrows_trail.append(arrow)
            order.append(start)

        # acyclic: enumerate all walks from the trivial starts
        arrow_index = {a.name: i for i, a in enumerate(quiver.arrows)}
        found: list[tuple[Arrow, ...]] = []

        def walk(state, acc: list[Arrow]):
            for arrow, nxt in transitions[state]:
                acc.append(arrow)
                found.append(tuple(acc))
                walk(nxt, acc)
                acc.pop()

        for v in quiver.vertices:
            walk((v, ()), [])
        found.sort(key=lambda arrs: (len(arrs), tuple(arrow_index[a.name] for a in arrs)))
        trivials = tuple(Path.trivial(v) for v in quiver.vertices)
        return trivials + tuple(Path.of(arrs) for arrs in found)

    def check_admissible(self) -> None:
        """Raise unless the ideal is admissible for this quiver.

        Admissibility here: every generator has length >= 2 and only
        finitely many paths avoid the generators.
        """
        for p in self.ideal.generators:
            if p.length < 2:
                raise GeneratorTooShort(p)
        result = self.surviving_paths()
        if isinstance(result, Infinite):
            raise InfiniteDimensional(result.cycle)

    def dimension(self) -> int:
        """Number of surviving paths (the algebra's vector-space dimension)."""
        self.check_admissible()
        paths = self.surviving_paths()
        assert not isinstance(paths, Infinite)
        return len(paths)
