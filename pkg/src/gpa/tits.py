"""Exact quadratic-form oracle for the diagram trichotomy.

The unit form q(x) = sum x_v^2 - sum_{edges u-v} x_u x_v of a loop-free
multigraph is positive definite exactly on Dynkin graphs, positive
semidefinite of corank 1 exactly on Euclidean ones, and indefinite
otherwise.  Everything here is exact integer / rational arithmetic; no
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graphs import Multigraph


class LoopsUnsupported(ValueError):
    """The unit form of a graph with loops is not defined here."""


class NotDynkin(ValueError):
    """Operation requires a positive definite (Dynkin) input."""


@dataclass(frozen=True)
class Definiteness:
    kind: str  # "positive_definite" | "positive_semidefinite" | "indefinite"
    corank: int = 0

    @property
    def is_positive_definite(self) -> bool:
        return self.kind == "positive_definite"

    @property
    def is_indefinite(self) -> bool:
        return self.kind == "indefinite"

    def __str__(self) -> str:
        if self.kind == "positive_definite":
            return "positive definite"
        if self.kind == "positive_semidefinite":
            return f"PSD corank {self.corank}"
        return "indefinite"


POSITIVE_DEFINITE = Definiteness("positive_definite")
INDEFINITE = Definiteness("indefinite")


def positive_semidefinite(corank: int) -> Definiteness:
    return Definiteness("positive_semidefinite", corank)


@dataclass(frozen=True)
class TitsForm:
    """Symmetric matrix C with C[v][v] = 2, C[u][v] = -(edges u-v); q = x'Cx/2."""

    matrix: tuple[tuple[int, ...], ...]

    @classmethod
    def of_graph(cls, g: Multigraph) -> "TitsForm":
        if g.has_loops():
            raise LoopsUnsupported("unit form is defined for loop-free graphs only")
        n = len(g.vertices)
        index = {v: i for i, v in enumerate(g.vertices)}
        m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for u, v in g.edges:
            i, j = index[u], index[v]
            m[i][j] -= 1
            m[j][i] -= 1
        return cls(tuple(tuple(row) for row in m))

    def evaluate(self, x: Sequence[int]) -> int:
        c = self.matrix
        n = len(c)
        s = sum(x[i] * c[i][j] * x[j] for i in range(n) for j in range(n))
        assert s % 2 == 0
        return s // 2


def definiteness(g: Multigraph) -> Definiteness:
    """Classify the unit form by exact symmetric Gaussian elimination.

    All pivots positive and full rank: positive definite.  Zero pivots whose
    rows have already been eliminated to zero: positive semidefinite, corank
    equal to the number of zero pivots.  A negative pivot, or a zero pivot
    with a nonzero residual row, witnesses indefiniteness.
    """
    if g.has_loops():
        raise LoopsUnsupported("definiteness is defined for loop-free graphs only")
    n = len(g.vertices)
    # q(1, ..., 1) = n - |edges|; a negative value settles indefiniteness
    # without elimination, which keeps exhaustive sweeps fast.
    if len(g.edges) > n:
        return INDEFINITE
    form = TitsForm.of_graph(g)
    m = [[Fraction(v) for v in row] for row in form.matrix]
    corank = 0
    for k in range(n):
        d = m[k][k]
        if d < 0:
            return INDEFINITE
        if d == 0:
            if any(m[k][j] != 0 for j in range(k + 1, n)):
                return INDEFINITE
            corank += 1
            continue
        for i in range(k + 1, n):
            f = m[i][k] / d
            if f == 0:
                continue
            row_k = m[k]
            row_i = m[i]
            for j in range(k, n):
                row_i[j] -= f * row_k[j]
    if corank == 0:
        return POSITIVE_DEFINITE
    return positive_semidefinite(corank)


def radical_basis(g: Multigraph) -> tuple[tuple[Fraction, ...], ...]:
    """Rational basis of the radical {x : Cx = 0} of the form matrix."""
    form = TitsForm.of_graph(g)
    n = len(form.matrix)
    m = [[Fraction(v) for v in row] for row in form.matrix]
    pivots: list[int] = []
    row = 0
    for col in range(n):
        sel = next((r for r in range(row, n) if m[r][col] != 0), None)
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        piv = m[row][col]
        m[row] = [v / piv for v in m[row]]
        for r in range(n):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == n:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -m[r][fc]
        basis.append(tuple(vec))
    return tuple(basis)


def _ldl(form: TitsForm) -> tuple[list[Fraction], list[list[Fraction]]]:
    """LDL' factorisation of C/2; valid when the form is positive definite."""
    n = len(form.matrix)
    b = [[Fraction(form.matrix[i][j], 2) for j in range(n)] for i in range(n)]
    d = [Fraction(0)] * n
    u = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = b[i][i] - sum(d[k] * u[k][i] * u[k][i] for k in range(i))
        assert d[i] > 0
        for j in range(i + 1, n):
            u[i][j] = (b[i][j] - sum(d[k] * u[k][i] * u[k][j] for k in range(i))) / d[i]
    return d, u


def enumerate_positive_roots(g: Multigraph, bound: int = 6) -> tuple[tuple[int, ...], ...]:
    """All nonzero nonnegative integer x with q(x) = 1 and max(x) <= bound.

    For Dynkin graphs this is the full positive root system; the default
    coordinate bound 6 is the largest coordinate of any root there, and a
    re-scan at bound 7 confirms sufficiency without outside tables.
    Returned in lexicographic order.
    """
    if definiteness(g) != POSITIVE_DEFINITE:
        raise NotDynkin("positive-root enumeration needs a positive definite form")
    form = TitsForm.of_graph(g)
    n = len(form.matrix)
    d, u = _ldl(form)
    one = Fraction(1)
    roots: list[tuple[int, ...]] = []
    x = [0] * n

    # q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2; fix coordinates from the
    # last to the first, pruning on the nonnegative remaining budget.
    def descend(i: int, rem: Fraction) -> None:
        if i < 0:
            if rem == 0 and any(x):
                roots.append(tuple(x))
            return
        c = sum(u[i][j] * x[j] for j in range(i + 1, n))
        for v in range(bound + 1):
            t = d[i] * (v + c) ** 2
            if t <= rem:
                x[i] = v
                descend(i - 1, rem - t)
                x[i] = 0

    descend(n - 1, one)
    roots.sort()
    return tuple(roots)


def indecomposable_count(g: Multigraph) -> int:
    """Positive-root count; for Dynkin graphs, the number of indecomposables."""
    return len(enumerate_positive_roots(g))
