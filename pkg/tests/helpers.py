"""Shared builders, diagram shapes, brute-force oracles, random generators."""

from __future__ import annotations

import random
from fractions import Fraction

from gpa import (
    Arrow,
    BoundQuiver,
    GPAlgebra,
    Infinite,
    MonomialIdeal,
    Multigraph,
    Path,
    Quiver,
)


# ---------------------------------------------------------------------------
# builders

def km_algebra(prefix: str, m: int) -> BoundQuiver:
    """The semisimple algebra k^m as a bound quiver with m isolated vertices."""
    return BoundQuiver(Quiver.of([f"{prefix}x{i}" for i in range(1, m + 1)], []))


def path_gamma(n: int) -> Quiver:
    vs = [str(i) for i in range(1, n + 1)]
    return Quiver.of(vs, [(f"a{i}", str(i), str(i + 1)) for i in range(1, n)])


def d_gamma(n: int) -> Quiver:
    """D-shaped quiver: leaves 1, 2 into 3, then a path 3 -> ... -> n."""
    vs = [str(i) for i in range(1, n + 1)]
    arrows = [("a1", "1", "3"), ("a2", "2", "3")] + [
        (f"b{i}", str(i), str(i + 1)) for i in range(3, n)
    ]
    return Quiver.of(vs, arrows)


def e_gamma(n: int) -> Quiver:
    """E-shaped quiver on n in {6, 7, 8}: chain 1-2-3-5-..-n with 4 off 3."""
    vs = [str(i) for i in range(1, n + 1)]
    chain = ["1", "2", "3"] + [str(i) for i in range(5, n + 1)]
    arrows = [(f"c{i}", chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    arrows.append(("c_up", "3", "4"))
    return Quiver.of(vs, arrows)


def cycle_gamma(k: int) -> Quiver:
    """Acyclically oriented k-cycle (underlying graph affine A_{k-1})."""
    vs = [str(i) for i in range(1, k + 1)]
    arrows = [(f"a{i}", str(i), str(i + 1)) for i in range(1, k)]
    arrows.append((f"a{k}", "1", str(k)))
    return Quiver.of(vs, arrows)


# ---------------------------------------------------------------------------
# multigraph diagram shapes

def path_graph(n: int) -> Multigraph:
    vs = [str(i) for i in range(1, n + 1)]
    return Multigraph.of(vs, [(str(i), str(i + 1)) for i in range(1, n)])


def d_graph(n: int) -> Multigraph:
    vs = [str(i) for i in range(1, n + 1)]
    edges = [("1", "3"), ("2", "3")] + [(str(i), str(i + 1)) for i in range(3, n)]
    return Multigraph.of(vs, edges)


def e_graph(n: int) -> Multigraph:
    vs = [str(i) for i in range(1, n + 1)]
    chain = ["1", "2", "3"] + [str(i) for i in range(5, n + 1)]
    edges = [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)] + [("3", "4")]
    return Multigraph.of(vs, edges)


def kronecker_graph() -> Multigraph:
    return Multigraph.of("a b", [("a", "b"), ("a", "b")])


def cycle_graph(k: int) -> Multigraph:
    vs = [str(i) for i in range(k)]
    return Multigraph.of(vs, [(str(i), str((i + 1) % k)) for i in range(k)])


def dtilde_graph(n: int) -> Multigraph:
    """Affine D on n + 1 vertices: 4-star for n = 4, two forks otherwise."""
    if n == 4:
        return Multigraph.of("1 2 3 4 5", [("1", "5"), ("2", "5"), ("3", "5"), ("4", "5")])
    vs = [str(i) for i in range(1, n + 2)]
    edges = (
        [("1", "3"), ("2", "3")]
        + [(str(i), str(i + 1)) for i in range(3, n - 1)]
        + [(str(n - 1), str(n)), (str(n - 1), str(n + 1))]
    )
    return Multigraph.of(vs, edges)


def etilde_graph(n: int) -> Multigraph:
    if n == 6:
        return Multigraph.of(
            "1 2 3 4 5 6 7",
            [("1", "2"), ("2", "3"), ("3", "6"), ("6", "7"), ("3", "5"), ("5", "4")],
        )
    if n == 7:
        vs = [str(i) for i in range(1, 9)]
        edges = [("1", "2"), ("2", "3"), ("3", "4"), ("4", "6"), ("6", "7"), ("7", "8"), ("4", "5")]
        return Multigraph.of(vs, edges)
    vs = [str(i) for i in range(1, 10)]
    edges = [("1", "2"), ("2", "3"), ("3", "5"), ("5", "6"), ("6", "7"), ("7", "8"), ("8", "9"), ("3", "4")]
    return Multigraph.of(vs, edges)


def all_diagram_shapes(max_vertices: int = 9):
    """(name, Multigraph, kind) for every diagram shape up to a vertex budget."""
    shapes = []
    for n in range(1, max_vertices + 1):
        shapes.append((f"A{n}", path_graph(n), "dynkin"))
    for n in range(4, max_vertices + 1):
        shapes.append((f"D{n}", d_graph(n), "dynkin"))
    for n in (6, 7, 8):
        if n <= max_vertices:
            shapes.append((f"E{n}", e_graph(n), "dynkin"))
    shapes.append(("A~1", kronecker_graph(), "euclidean"))
    for k in range(3, max_vertices + 1):
        shapes.append((f"A~{k - 1}", cycle_graph(k), "euclidean"))
    for n in range(4, max_vertices):
        shapes.append((f"D~{n}", dtilde_graph(n), "euclidean"))
    for n in (6, 7, 8):
        if n + 1 <= max_vertices:
            shapes.append((f"E~{n}", etilde_graph(n), "euclidean"))
    return shapes


# ---------------------------------------------------------------------------
# brute-force oracles

def brute_surviving_words(bq: BoundQuiver, max_len: int) -> list[tuple[str, ...]]:
    """All ideal-avoiding arrow words of length 1..max_len, by direct search."""
    gens = [g.word for g in bq.ideal.generators]

    def blocked(word):
        return any(
            word[i : i + len(g)] == g for g in gens for i in range(len(word) - len(g) + 1)
        )

    out: list[tuple[str, ...]] = []
    frontier = [((a.name,), a.target) for a in bq.quiver.arrows]
    while frontier:
        nxt = []
        for word, end in frontier:
            if len(word) > max_len:
                continue
            if blocked(word):
                continue
            out.append(word)
            for a in bq.quiver.out_arrows(end):
                nxt.append((word + (a.name,), a.target))
        frontier = nxt
    return out


def brute_dimension(bq: BoundQuiver) -> int:
    """Trivial paths plus bounded-length enumeration; valid for acyclic quivers."""
    assert bq.quiver.is_acyclic()
    return len(bq.quiver.vertices) + len(brute_surviving_words(bq, len(bq.quiver.arrows)))


def brute_positive_roots(g: Multigraph, bound: int) -> list[tuple[int, ...]]:
    """Grid scan of q(x) = 1 over {0..bound}^n; independent of the LDL search."""
    from gpa import TitsForm

    form = TitsForm.of_graph(g)
    n = len(g.vertices)
    roots = []

    def rec(i, acc):
        if i == n:
            if any(acc) and form.evaluate(acc) == 1:
                roots.append(tuple(acc))
            return
        for v in range(bound + 1):
            rec(i + 1, acc + [v])

    rec(0, [])
    return sorted(roots)


# ---------------------------------------------------------------------------
# seeded random generators

def random_acyclic_quiver(rng: random.Random, max_vertices: int = 6, extra_arrows: int = 4) -> Quiver:
    n = rng.randint(1, max_vertices)
    vs = [f"v{i}" for i in range(n)]
    order = list(range(n))
    rng.shuffle(order)
    arrows = []
    # random spanning arrows along a random topological order, then extras
    for idx in range(1, n):
        j = rng.randrange(idx)
        a, b = order[j], order[idx]
        arrows.append((f"e{len(arrows)}", vs[a], vs[b]))
    for _ in range(rng.randint(0, extra_arrows)):
        i, j = sorted(rng.sample(range(n), 2)) if n >= 2 else (0, 0)
        if n < 2:
            break
        arrows.append((f"e{len(arrows)}", vs[order[i]], vs[order[j]]))
    return Quiver.of(vs, arrows)


def random_ideal(rng: random.Random, quiver: Quiver, max_generators: int = 3) -> MonomialIdeal:
    paths = []
    for _ in range(rng.randint(0, max_generators)):
        starts = [a for a in quiver.arrows]
        if not starts:
            break
        a = rng.choice(starts)
        word = [a]
        for _ in range(rng.randint(1, 2)):
            outs = quiver.out_arrows(word[-1].target)
            if not outs:
                break
            word.append(rng.choice(outs))
        if len(word) >= 2:
            paths.append(Path.of(word))
    return MonomialIdeal.of(paths)


def random_gamma(rng: random.Random, max_vertices: int = 4) -> Quiver:
    """Random connected acyclic quiver (tree plus forward chords)."""
    n = rng.randint(1, max_vertices)
    vs = [str(i) for i in range(1, n + 1)]
    order = list(range(n))
    rng.shuffle(order)
    arrows = []
    # arrows point along the shuffled order, so the result is always acyclic
    for idx in range(1, n):
        j = rng.randrange(idx)
        arrows.append((f"g{len(arrows)}", vs[order[j]], vs[order[idx]]))
    for _ in range(rng.randint(0, 2)):
        if n < 2:
            break
        i, j = sorted(rng.sample(range(n), 2))
        arrows.append((f"g{len(arrows)}", vs[order[i]], vs[order[j]]))
    return Quiver.of(vs, arrows)


def random_relation_free_gp(rng: random.Random, max_q_vertices: int = 9) -> GPAlgebra:
    """Random gp-algebra with empty ideals and a bounded expansion size."""
    gamma = random_gamma(rng, max_vertices=4)
    n = len(gamma.vertices)
    budget = max_q_vertices - n
    algebras = {}
    for v in gamma.vertices:
        if budget <= 0 or rng.random() < 0.35:
            continue
        size = rng.randint(2, min(3, budget + 1))
        kind = rng.choice(("semisimple", "quiver"))
        if kind == "semisimple":
            algebras[v] = km_algebra(v, size)
        else:
            # random connected acyclic attached quiver on `size` vertices
            vs = [f"{v}s{i}" for i in range(size)]
            arrows = []
            for idx in range(1, size):
                j = rng.randrange(idx)
                arrows.append((f"{v}f{len(arrows)}", vs[j], vs[idx]))
            algebras[v] = BoundQuiver(Quiver.of(vs, arrows))
        budget -= size - 1
    return GPAlgebra.of(gamma, algebras)


def random_acyclic_reorientation(rng: random.Random, gamma: Quiver) -> Quiver:
    """Re-orient every arrow along a random vertex order; always acyclic."""
    order = {v: i for i, v in enumerate(rng.sample(gamma.vertices, len(gamma.vertices)))}
    arrows = []
    for a in gamma.arrows:
        if order[a.source] <= order[a.target]:
            arrows.append(Arrow(a.name, a.source, a.target))
        else:
            arrows.append(Arrow(a.name, a.target, a.source))
    return Quiver(gamma.vertices, tuple(arrows))
