"""Generalized path algebras and their ordinary-quiver expansion.

A generalized path algebra is an acyclic connected quiver ``gamma`` with a
bound quiver attached to each vertex.  Its ordinary quiver glues the
attached quivers into blocks: between blocks, each gamma arrow i -> j
contributes one "type I" arrow a -> b for every vertex pair (a, b) of the
two blocks; within a block the attached arrows are copied as "type II"
arrows, and the attached relations lift unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

from .quiver import (
    AdmissibilityError,
    Arrow,
    BoundQuiver,
    MonomialIdeal,
    Path,
    Quiver,
    QuiverError,
)

TYPE_I = "I"
TYPE_II = "II"


class GPError(ValueError):
    """Malformed generalized path algebra."""


class GammaHasCycle(GPError):
    pass


class GammaDisconnected(GPError):
    pass


class DuplicateVertexNamespace(GPError):
    """Two blocks produce the same vertex or arrow id in the expansion."""


class BadAttachedAlgebra(GPError):
    """An attached bound quiver failed its admissibility check."""

    def __init__(self, vertex: str, cause: AdmissibilityError):
        self.vertex = vertex
        self.cause = cause
        super().__init__(f"algebra at vertex {vertex!r}: {cause}")


def _default_algebra(vertex: str) -> BoundQuiver:
    """The base field as a bound quiver: one vertex, no arrows."""
    return BoundQuiver(Quiver.of((vertex,), ()))


def _qvertex(block: str, inner: str) -> str:
    return f"{block}.{inner}"


@dataclass(frozen=True)
class GPAlgebra:
    """A quiver ``gamma`` plus one attached bound quiver per vertex.

    ``algebras`` always has an entry for every gamma vertex; vertices left
    out at construction default to the base field.
    """

    gamma: Quiver
    algebras: Mapping[str, BoundQuiver]

    @classmethod
    def of(
        cls,
        gamma: Quiver,
        algebras: Mapping[str, BoundQuiver] | None = None,
    ) -> "GPAlgebra":
        algebras = dict(algebras or {})
        for v in algebras:
            if v not in gamma.vertices:
                raise GPError(f"algebra attached to undeclared vertex {v!r}")
        filled = {v: algebras.get(v, _default_algebra(v)) for v in gamma.vertices}
        return cls(gamma, filled)

    def algebra(self, vertex: str) -> BoundQuiver:
        return self.algebras[vertex]

    def is_trivial_at(self, vertex: str) -> bool:
        return self.algebras[vertex] == _default_algebra(vertex)

    def opposite(self) -> "GPAlgebra":
        return GPAlgebra(
            self.gamma.reverse(),
            {v: bq.opposite() for v, bq in self.algebras.items()},
        )

    def validate(self) -> None:
        """Raise the first structural failure, or return normally.

        Checks, in order: gamma acyclic, gamma connected, expansion id
        namespaces disjoint, each attached algebra admissible.
        """
        if not self.gamma.vertices:
            raise GPError("gamma has no vertices")
        if not self.gamma.is_acyclic():
            raise GammaHasCycle("gamma has a directed cycle")
        if not self.gamma.underlying_graph().is_connected():
            raise GammaDisconnected("gamma is not connected")
        qverts: set[str] = set()
        for i in self.gamma.vertices:
            for a in self.algebras[i].quiver.vertices:
                qv = _qvertex(i, a)
                if qv in qverts:
                    raise DuplicateVertexNamespace(f"expanded vertex id {qv!r} is not unique")
                qverts.add(qv)
        arrow_ids: set[str] = set()
        for i in self.gamma.vertices:
            for a in self.algebras[i].quiver.arrows:
                if a.name in arrow_ids:
                    raise DuplicateVertexNamespace(
                        f"attached arrow id {a.name!r} appears in more than one block"
                    )
                arrow_ids.add(a.name)
        for garr in self.gamma.arrows:
            count = len(self.algebras[garr.source].quiver.vertices) * len(
                self.algebras[garr.target].quiver.vertices
            )
            for k in range(1, count + 1):
                name = f"{garr.name}_{k}"
                if name in arrow_ids:
                    raise DuplicateVertexNamespace(
                        f"expansion arrow id {name!r} collides with an attached arrow"
                    )
        for i in self.gamma.vertices:
            try:
                self.algebras[i].check_admissible()
            except AdmissibilityError as err:
                raise BadAttachedAlgebra(i, err) from err

    def expand(self) -> "OrdinaryQuiver":
        return build_ordinary_quiver(self)

    def embed_gamma(self, choice: Mapping[str, str] | None = None) -> Quiver:
        return gamma_embedding(self, choice)


@dataclass(frozen=True)
class OrdinaryQuiver:
    """Expansion of a generalized path algebra, with provenance.

    ``arrow_kind`` tags every arrow as type I (between blocks, induced by a
    gamma arrow) or type II (copied from an attached quiver);
    ``vertex_origin`` maps each vertex to its (gamma vertex, attached
    vertex) pair, and ``arrow_origin`` maps each type I arrow back to the
    gamma arrow that induced it.
    """

    quiver: Quiver
    arrow_kind: Mapping[str, str]
    lifted_ideal: MonomialIdeal
    vertex_origin: Mapping[str, tuple[str, str]]
    arrow_origin: Mapping[str, str]

    def bound_quiver(self) -> BoundQuiver:
        return BoundQuiver(self.quiver, self.lifted_ideal)

    def block_of(self, qvertex: str) -> str:
        return self.vertex_origin[qvertex][0]

    def arrows_of_kind(self, kind: str) -> tuple[Arrow, ...]:
        return tuple(a for a in self.quiver.arrows if self.arrow_kind[a.name] == kind)

    @property
    def type1_count(self) -> int:
        return sum(1 for k in self.arrow_kind.values() if k == TYPE_I)

    @property
    def type2_count(self) -> int:
        return sum(1 for k in self.arrow_kind.values() if k == TYPE_II)


def validate_gp(gp: GPAlgebra) -> None:
    gp.validate()


def build_ordinary_quiver(gp: GPAlgebra) -> OrdinaryQuiver:
    """Expand to the ordinary quiver with lifted relations."""
    gp.validate()
    gamma = gp.gamma
    vertices: list[str] = []
    vertex_origin: dict[str, tuple[str, str]] = {}
    for i in gamma.vertices:
        for a in gp.algebra(i).quiver.vertices:
            qv = _qvertex(i, a)
            vertices.append(qv)
            vertex_origin[qv] = (i, a)
    arrows: list[Arrow] = []
    arrow_kind: dict[str, str] = {}
    arrow_origin: dict[str, str] = {}
    for garr in gamma.arrows:
        k = 0
        for a in gp.algebra(garr.source).quiver.vertices:
            for b in gp.algebra(garr.target).quiver.vertices:
                k += 1
                name = f"{garr.name}_{k}"
                arrows.append(Arrow(name, _qvertex(garr.source, a), _qvertex(garr.target, b)))
                arrow_kind[name] = TYPE_I
                arrow_origin[name] = garr.name
    for i in gamma.vertices:
        for a in gp.algebra(i).quiver.arrows:
            arrows.append(Arrow(a.name, _qvertex(i, a.source), _qvertex(i, a.target)))
            arrow_kind[a.name] = TYPE_II
    quiver = Quiver.of(vertices, arrows)
    generators: list[Path] = []
    for i in gamma.vertices:
        for g in gp.algebra(i).ideal.generators:
            generators.append(
                Path.of(
                    Arrow(a.name, _qvertex(i, a.source), _qvertex(i, a.target))
                    for a in g.arrows
                )
            )
    lifted = MonomialIdeal.of(generators)
    oq = OrdinaryQuiver(quiver, arrow_kind, lifted, vertex_origin, arrow_origin)

    # structural sanity: size formulas and relation placement
    assert len(quiver.vertices) == sum(
        len(gp.algebra(i).quiver.vertices) for i in gamma.vertices
    )
    expected_type1 = sum(
        len(gp.algebra(g.source).quiver.vertices) * len(gp.algebra(g.target).quiver.vertices)
        for g in gamma.arrows
    )
    expected_type2 = sum(len(gp.algebra(i).quiver.arrows) for i in gamma.vertices)
    assert oq.type1_count == expected_type1
    assert oq.type2_count == expected_type2
    assert all(
        arrow_kind[name] == TYPE_II for g in lifted.generators for name in g.word
    )
    assert quiver.has_loops() == any(
        gp.algebra(i).quiver.has_loops() for i in gamma.vertices
    )
    return oq


def gamma_embedding(gp: GPAlgebra, choice: Mapping[str, str] | None = None) -> Quiver:
    """The copy of gamma inside the expansion picked out by ``choice``.

    ``choice`` selects one attached vertex per gamma vertex; vertices whose
    attached quiver has a single vertex may be omitted.  The result is a
    subquiver of the expansion isomorphic to gamma.
    """
    gp.validate()
    choice = dict(choice or {})
    picked: dict[str, str] = {}
    for i in gp.gamma.vertices:
        inner = gp.algebra(i).quiver.vertices
        if i in choice:
            if choice[i] not in inner:
                raise GPError(f"choice {choice[i]!r} is not a vertex of the block at {i!r}")
            picked[i] = choice[i]
        elif len(inner) == 1:
            picked[i] = inner[0]
        else:
            raise GPError(f"no choice given for gamma vertex {i!r}")
    for v in choice:
        if v not in gp.gamma.vertices:
            raise GPError(f"choice names undeclared gamma vertex {v!r}")
    vertices = tuple(_qvertex(i, picked[i]) for i in gp.gamma.vertices)
    arrows = []
    for garr in gp.gamma.arrows:
        src_inner = gp.algebra(garr.source).quiver.vertices
        tgt_inner = gp.algebra(garr.target).quiver.vertices
        k = src_inner.index(picked[garr.source]) * len(tgt_inner) + tgt_inner.index(
            picked[garr.target]
        ) + 1
        arrows.append(
            Arrow(
                f"{garr.name}_{k}",
                _qvertex(garr.source, picked[garr.source]),
                _qvertex(garr.target, picked[garr.target]),
            )
        )
    return Quiver.of(vertices, arrows)
