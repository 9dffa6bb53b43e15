"""Isomorphism-free enumeration of small connected multigraphs.

Every connected loop-free multigraph with at most 7 vertices and edge
multiplicity at most 2 arises exactly once, up to isomorphism, as a
connected simple base graph plus a set of doubled edges:

  * base graphs come from the complete atlas of graphs on <= 7 vertices;
  * doubling subsets are deduplicated per base by keeping only subsets that
    are minimal in their orbit under the base's automorphism group;
  * for the complete graph K7 the orbits of doubling subsets under S7 are
    exactly the unlabeled 7-vertex graphs, so the atlas itself enumerates
    them without any group computation.

The generator performs no mathematical shortcuts: it yields one
representative per class and the caller checks whatever it wants on it.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from gpa import Multigraph

VNAMES = tuple(str(i) for i in range(1, 8))

# counts of all / connected unlabeled simple graphs on exactly n vertices
ALL_GRAPH_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_GRAPH_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def _atlas_entries() -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    entries = []
    for g in graph_atlas_g():
        n = g.number_of_nodes()
        assert set(g.nodes) == set(range(n))
        edges = tuple(sorted((u, v) if u < v else (v, u) for u, v in g.edges()))
        entries.append((n, edges))
    assert len(entries) == sum(ALL_GRAPH_COUNTS.values())
    return entries


_ATLAS = _atlas_entries()


def atlas_graphs(n: int) -> list[tuple[tuple[int, int], ...]]:
    """Edge lists of all unlabeled simple graphs on exactly n vertices."""
    out = [edges for size, edges in _ATLAS if size == n]
    assert len(out) == ALL_GRAPH_COUNTS[n]
    return out


def connected_bases() -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    """All connected unlabeled simple graphs on 1..7 vertices."""
    out = []
    for n, edges in _ATLAS:
        if n == 0:
            continue
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(edges)
        if nx.is_connected(g):
            out.append((n, edges))
    from collections import Counter

    counts = Counter(n for n, _ in out)
    assert dict(counts) == CONNECTED_GRAPH_COUNTS
    return out


def automorphisms(n: int, edges: tuple[tuple[int, int], ...]) -> list[tuple[int, ...]]:
    """All vertex permutations preserving the simple graph, identity included."""
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    degs = [bin(a).count("1") for a in adj]
    perms: list[tuple[int, ...]] = []
    mapping = [-1] * n
    used = [False] * n

    def extend(i: int) -> None:
        if i == n:
            perms.append(tuple(mapping))
            return
        for c in range(n):
            if used[c] or degs[c] != degs[i]:
                continue
            ok = True
            for j in range(i):
                if ((adj[i] >> j) & 1) != ((adj[c] >> mapping[j]) & 1):
                    ok = False
                    break
            if ok:
                mapping[i] = c
                used[c] = True
                extend(i + 1)
                used[c] = False
                mapping[i] = -1

    extend(0)
    return perms


def _edge_permutations(
    edges: tuple[tuple[int, int], ...], auts: list[tuple[int, ...]]
) -> list[list[int]]:
    index = {e: i for i, e in enumerate(edges)}
    eperms = []
    for p in auts:
        ep = []
        for u, v in edges:
            a, b = p[u], p[v]
            ep.append(index[(a, b) if a < b else (b, a)])
        eperms.append(ep)
    return eperms


def _mask_tables(eperm: list[int], m: int):
    """Chunked lookup tables applying an edge permutation to an m-bit mask."""
    chunks = []
    for lo in range(0, m, 7):
        width = min(7, m - lo)
        table = [0] * (1 << width)
        for value in range(1 << width):
            acc = 0
            v = value
            b = 0
            while v:
                if v & 1:
                    acc |= 1 << eperm[lo + b]
                v >>= 1
                b += 1
            table[value] = acc
        chunks.append((lo, (1 << width) - 1, table))
    return chunks


def _min_image_is_self(mask: int, tables_list) -> bool:
    for chunks in tables_list:
        img = 0
        for lo, cmask, table in chunks:
            img |= table[(mask >> lo) & cmask]
        if img < mask:
            return False
    return True


def _build(
    n: int, base_pairs: tuple[tuple[str, str], ...], edges: tuple[tuple[int, int], ...], mask: int
) -> Multigraph:
    doubled = tuple(
        (VNAMES[u], VNAMES[v]) for b, (u, v) in enumerate(edges) if (mask >> b) & 1
    )
    return Multigraph(VNAMES[:n], base_pairs + doubled)


def iter_multigraph_reps(max_vertices: int = 7):
    """One representative per iso class of connected loop-free multigraphs
    with <= max_vertices vertices and edge multiplicity <= 2."""
    k7_edges = tuple(combinations(range(7), 2))
    for n, edges in connected_bases():
        if n > max_vertices:
            continue
        m = len(edges)
        base_pairs = tuple((VNAMES[u], VNAMES[v]) for u, v in edges)
        yield Multigraph(VNAMES[:n], base_pairs)
        if m == 0:
            continue
        if n == 7 and edges == k7_edges:
            # doubling orbits under Aut(K7) = S7 are the unlabeled 7-vertex
            # graphs; take the nonempty ones straight from the atlas
            for dedges in atlas_graphs(7):
                if dedges:
                    doubled = tuple((VNAMES[u], VNAMES[v]) for u, v in dedges)
                    yield Multigraph(VNAMES[:7], base_pairs + doubled)
            continue
        auts = automorphisms(n, edges)
        nontrivial = [p for p in auts if p != tuple(range(n))]
        if not nontrivial:
            for mask in range(1, 1 << m):
                yield _build(n, base_pairs, edges, mask)
        else:
            tables_list = [_mask_tables(ep, m) for ep in _edge_permutations(edges, nontrivial)]
            for mask in range(1, 1 << m):
                if _min_image_is_self(mask, tables_list):
                    yield _build(n, base_pairs, edges, mask)


def canonical_form(g: Multigraph) -> tuple:
    """Brute-force canonical form (minimum over all vertex permutations);
    only intended for small vertex counts."""
    from itertools import permutations

    n = len(g.vertices)
    index = {v: i for i, v in enumerate(g.vertices)}
    pairs = [tuple(sorted((index[u], index[v]))) for u, v in g.edges]
    best = None
    for p in permutations(range(n)):
        image = tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in pairs))
        if best is None or image < best:
            best = image
    return (n, best)


def brute_labeled_classes(n: int) -> set[tuple]:
    """Canonical forms of all connected multigraphs on exactly n labeled
    vertices with multiplicity <= 2, by direct enumeration (small n only)."""
    pairs = list(combinations(range(n), 2))
    classes: set[tuple] = set()
    counts = [0] * len(pairs)

    def connected(mults) -> bool:
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = n
        for (u, v), c in zip(pairs, mults):
            if c:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    comps -= 1
        return comps == 1

    def rec(i):
        if i == len(pairs):
            if connected(counts):
                edges = []
                for (u, v), c in zip(pairs, counts):
                    edges.extend([(str(u + 1), str(v + 1))] * c)
                g = Multigraph(tuple(str(j + 1) for j in range(n)), tuple(edges))
                classes.add(canonical_form(g))
            return
        for c in (0, 1, 2):
            counts[i] = c
            rec(i + 1)
        counts[i] = 0

    rec(0)
    return classes
