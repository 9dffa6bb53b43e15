"""Representation-type decision for generalized path algebras.

The verdict depends only on the underlying graph of gamma and on which
recognized algebra patterns sit at which of its vertices, never on arrow
orientations.  Hereditary verdicts (all attached ideals empty) can be
cross-checked independently via the quadratic form of the expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .gp import GPAlgebra, OrdinaryQuiver, TYPE_I, TYPE_II, build_ordinary_quiver
from .graphs import GraphClass, Multigraph, NEITHER, classify_graph
from .quiver import Arrow, BoundQuiver, Quiver
from .tits import indecomposable_count

# verdict kinds
FINITE = "finite"
STRICT_TAME = "strict_tame"
WILD = "wild"
OUT_OF_SCOPE = "out_of_scope"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class Pattern:
    """Shape of an attached algebra, as far as the decision tables care."""

    kind: str  # "k" | "semisimple" | "path_a2" | "rad_square_zero" | "other"
    m: int = 1  # vertex count for semisimple k^m

    def __str__(self) -> str:
        if self.kind == "k":
            return "k"
        if self.kind == "semisimple":
            return f"k^{self.m}"
        return self.kind


K = Pattern("k", 1)
PATH_A2 = Pattern("path_a2", 2)
RAD_SQUARE_ZERO = Pattern("rad_square_zero", 2)
OTHER = Pattern("other", 0)


def semisimple(m: int) -> Pattern:
    return Pattern("semisimple", m)


def recognize_pattern(bq: BoundQuiver) -> Pattern:
    """Match an admissible bound quiver against the table patterns.

    The two-vertex one-arrow quiver matches in either orientation; the
    two-vertex double arrow with both length-two cycles forbidden is the
    radical-square-zero pattern.
    """
    q = bq.quiver
    nv, na = len(q.vertices), len(q.arrows)
    if na == 0:
        return K if nv == 1 else semisimple(nv)
    if nv == 2 and na == 1 and bq.ideal.is_empty:
        return PATH_A2
    if nv == 2 and na == 2:
        x, y = q.arrows
        if x.source == y.target and x.target == y.source and x.source != x.target:
            if bq.ideal.word_set == {(x.name, y.name), (y.name, x.name)}:
                return RAD_SQUARE_ZERO
    return OTHER


@dataclass(frozen=True)
class BIForm:
    """Three-vertex shape: a two-cycle a <-> b plus a corner vertex mapping
    into both (or out of both, the opposite form), relations on the cycle
    arrows only."""

    opposite: bool
    tame: bool


def recognize_bi(bq: BoundQuiver) -> BIForm | None:
    q = bq.quiver
    if len(q.vertices) != 3 or len(q.arrows) != 4:
        return None
    cycle_pairs = [
        (x, y)
        for i, x in enumerate(q.arrows)
        for y in q.arrows[i + 1 :]
        if x.source == y.target and x.target == y.source and x.source != x.target
    ]
    if len(cycle_pairs) != 1:
        return None
    alpha, beta = cycle_pairs[0]
    a, b = alpha.source, alpha.target
    c = next(v for v in q.vertices if v not in (a, b))
    rest = [x for x in q.arrows if x not in (alpha, beta)]
    ends = sorted((x.source, x.target) for x in rest)
    if ends == sorted([(c, a), (c, b)]):
        opposite = False
    elif ends == sorted([(a, c), (b, c)]):
        opposite = True
    else:
        return None
    cycle_names = {alpha.name, beta.name}
    if any(set(g.word) - cycle_names for g in bq.ideal.generators):
        return None
    tame = bq.ideal.word_set == {(alpha.name, beta.name), (beta.name, alpha.name)}
    return BIForm(opposite=opposite, tame=tame)


@dataclass(frozen=True)
class Verdict:
    kind: str
    indecomposables: int | None = None
    certificate: Quiver | None = None
    reason: str | None = None

    @classmethod
    def finite(cls, indecomposables: int) -> "Verdict":
        return cls(FINITE, indecomposables=indecomposables)

    @classmethod
    def strict_tame(cls) -> "Verdict":
        return cls(STRICT_TAME)

    @classmethod
    def wild(cls, certificate: Quiver | None = None) -> "Verdict":
        return cls(WILD, certificate=certificate)

    @classmethod
    def out_of_scope(cls, reason: str) -> "Verdict":
        return cls(OUT_OF_SCOPE, reason=reason)

    @classmethod
    def indeterminate(cls, reason: str) -> "Verdict":
        return cls(INDETERMINATE, reason=reason)


def _path_endpoints(g: Multigraph) -> tuple[str, ...]:
    return tuple(v for v in g.vertices if g.degree(v) <= 1)


def _d_leaves(g: Multigraph) -> tuple[tuple[str, ...], str | None]:
    """Leaves of a D-shaped tree, and the long-arm (tail) leaf when n >= 5.

    The tail is the unique leaf whose neighbor has degree two; for the
    four-vertex diagram all three leaves are interchangeable and there is
    no tail.
    """
    leaves = tuple(v for v in g.vertices if g.degree(v) == 1)
    tail = None
    if len(g.vertices) >= 5:
        for v in leaves:
            (w,) = g.neighbors(v)
            if g.degree(w) == 2:
                tail = v
    return leaves, tail


def _matches_finite(cls: GraphClass, g: Multigraph, pat: Mapping[str, Pattern]) -> bool:
    if not cls.is_dynkin:
        return False
    all_k = all(p == K for p in pat.values())
    if cls.family in ("D", "E"):
        return all_k
    if all_k:
        return True
    ends = _path_endpoints(g)
    specials = [v for v, p in pat.items() if p != K]
    if len(specials) != 1 or specials[0] not in ends:
        return False
    p = pat[specials[0]]
    allowed = (2, 3) if cls.index == 2 else (2,)
    return p.kind == "semisimple" and p.m in allowed


def _matches_tame(cls: GraphClass, g: Multigraph, pat: Mapping[str, Pattern]) -> bool:
    all_k = all(p == K for p in pat.values())
    if cls.is_euclidean:
        return all_k
    if not cls.is_dynkin:
        return False
    if cls.family == "E":
        return False
    if cls.family == "D":
        leaves, tail = _d_leaves(g)
        specials = [v for v, p in pat.items() if p != K]
        if len(specials) != 1 or pat[specials[0]] != semisimple(2):
            return False
        if cls.index == 4:
            return specials[0] in leaves
        return specials[0] == tail
    # family A
    n = cls.index
    ends = _path_endpoints(g)
    specials = {v: p for v, p in pat.items() if p != K}
    if n == 2:
        u, v = g.vertices
        if pat[u] == semisimple(2) and pat[v] == semisimple(2):
            return True
        if len(specials) != 1:
            return False
        p = next(iter(specials.values()))
        return p in (semisimple(4), PATH_A2, RAD_SQUARE_ZERO)
    if n == 3:
        (mid,) = (v for v in g.vertices if v not in ends)
        if specials == {mid: semisimple(2)}:
            return True
        if set(specials) == set(ends) and all(p == semisimple(2) for p in specials.values()):
            return True
        if len(specials) == 1:
            (v, p), = specials.items()
            return v in ends and p == semisimple(3)
        return False
    # n >= 4: both endpoints k^2, interior plain
    return set(specials) == set(ends) and all(p == semisimple(2) for p in specials.values())


def certificate_search(
    oq: OrdinaryQuiver, max_vertices: int = 10, budget: int = 200_000
) -> Quiver | None:
    """Smallest-by-edge-count relation-free witness of wildness, if any.

    Searches connected edge subsets of the expansion using only type I
    arrows plus at most one type II arrow (such subquivers carry no lifted
    relations), up to ``max_vertices`` vertices, for one whose underlying
    graph is neither Dynkin nor Euclidean.  Deterministic; returns None if
    the budget runs out.
    """
    arrows = oq.quiver.arrows
    n_arr = len(arrows)
    is_type2 = [oq.arrow_kind[a.name] == TYPE_II for a in arrows]
    adjacency: dict[str, list[int]] = {}
    for idx, a in enumerate(arrows):
        adjacency.setdefault(a.source, []).append(idx)
        adjacency.setdefault(a.target, []).append(idx)

    examined = 0
    max_edges = min(n_arr, max_vertices + 1)

    def as_subquiver(edge_set: frozenset[int]) -> Quiver:
        chosen = [arrows[i] for i in sorted(edge_set)]
        verts = [v for v in oq.quiver.vertices if any(v in (a.source, a.target) for a in chosen)]
        return Quiver.of(verts, chosen)

    def underlying(edge_set: frozenset[int]) -> Multigraph:
        chosen = [arrows[i] for i in sorted(edge_set)]
        verts = tuple(dict.fromkeys(v for a in chosen for v in (a.source, a.target)))
        index = {v: i for i, v in enumerate(verts)}
        edges = tuple(
            (a.source, a.target) if index[a.source] <= index[a.target] else (a.target, a.source)
            for a in chosen
        )
        return Multigraph(verts, edges)

    for size in range(1, max_edges + 1):
        seen: set[frozenset[int]] = set()
        stack: list[tuple[frozenset[int], set[str], int]] = []
        for start in range(n_arr):
            a = arrows[start]
            base = frozenset((start,))
            stack.append((base, {a.source, a.target}, 1 if is_type2[start] else 0))
            while stack:
                edge_set, verts, t2 = stack.pop()
                if edge_set in seen:
                    continue
                seen.add(edge_set)
                examined += 1
                if examined > budget:
                    return None
                if len(edge_set) == size:
                    g = underlying(edge_set)
                    if classify_graph(g) == NEITHER:
                        return as_subquiver(edge_set)
                    continue
                for v in verts:
                    for nxt in adjacency.get(v, ()):
                        if nxt <= start or nxt in edge_set:
                            continue
                        if is_type2[nxt] and t2 >= 1:
                            continue
                        b = arrows[nxt]
                        new_verts = verts | {b.source, b.target}
                        if len(new_verts) > max_vertices:
                            continue
                        stack.append(
                            (edge_set | {nxt}, new_verts, t2 + (1 if is_type2[nxt] else 0))
                        )
    return None


def _hereditary_verdict(oq: OrdinaryQuiver, find_certificate: bool) -> Verdict:
    qbar = oq.quiver.underlying_graph()
    cls = classify_graph(qbar)
    if cls.is_dynkin:
        return Verdict.finite(indecomposable_count(qbar))
    if cls.is_euclidean:
        return Verdict.strict_tame()
    return Verdict.wild(certificate_search(oq) if find_certificate else None)


def decide_type(gp: GPAlgebra, find_certificate: bool = True) -> Verdict:
    """Classify a generalized path algebra by representation type.

    Decision order: loops in an attached quiver are out of scope; a single
    gamma vertex is decided by its attached algebra alone (hereditary via
    graph shape, the exceptional two-cycle-with-corner shape via its ideal,
    anything else bound is indeterminate); otherwise the finite and tame
    pattern tables on the underlying graph of gamma decide, and every
    remaining loop-free case is wild.
    """
    gp.validate()
    for i in gp.gamma.vertices:
        if gp.algebra(i).quiver.has_loops():
            return Verdict.out_of_scope(
                f"attached quiver at vertex {i!r} has loops; the classification assumes none"
            )
    if len(gp.gamma.vertices) == 1:
        (v,) = gp.gamma.vertices
        bq = gp.algebra(v)
        if bq.ideal.is_empty:
            return _hereditary_verdict(build_ordinary_quiver(gp), find_certificate)
        bi = recognize_bi(bq)
        if bi is not None:
            if bi.tame:
                return Verdict.strict_tame()
            return Verdict.wild(
                certificate_search(build_ordinary_quiver(gp)) if find_certificate else None
            )
        return Verdict.indeterminate(
            "bound single-vertex algebra outside recognized patterns"
        )
    g = gp.gamma.underlying_graph()
    cls = classify_graph(g)
    patterns = {i: recognize_pattern(gp.algebra(i)) for i in gp.gamma.vertices}
    finite = _matches_finite(cls, g, patterns)
    tame = _matches_tame(cls, g, patterns)
    assert not (finite and tame), "finite and tame tables must be exclusive"
    if finite:
        oq = build_ordinary_quiver(gp)
        qbar = oq.quiver.underlying_graph()
        assert classify_graph(qbar).is_dynkin
        return Verdict.finite(indecomposable_count(qbar))
    if tame:
        return Verdict.strict_tame()
    return Verdict.wild(
        certificate_search(build_ordinary_quiver(gp)) if find_certificate else None
    )
