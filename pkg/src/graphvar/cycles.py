"""Fundamental cycles of a spanning tree and the matrices built from them.

Every edge ``ab`` is oriented ``a -> b`` with ``a`` before ``b`` in the
vertex order, unless an explicit orientation is passed.  For a tree ``T``
and a non-tree edge ``e = v -> w`` the fundamental cycle is

    z_T(e) = -e + sum over tree edges f of c[e][f] * f

where ``c[e][f]`` is +1 when the tree path from ``v`` to ``w`` runs along
``f``'s orientation, -1 when it runs against it, and 0 off the path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import GraphError
from .graph import EdgeSet, Graph, bits
from .poly import MultilinearPoly

Orientation = tuple[tuple[int, int], ...]
SignedEdgeVector = dict[int, int]


def default_orientation(g: Graph) -> Orientation:
    """Each edge as ``(tail, head)`` vertex indices with tail < head."""
    return tuple(g.edges)


def orientation_ids(g: Graph, orient: Orientation | None = None) -> list[tuple[str, str]]:
    orient = orient or default_orientation(g)
    return [(g.vertices[a], g.vertices[b]) for a, b in orient]


class _RootedForest:
    """Parent pointers of a forest, for walking tree paths."""

    def __init__(self, g: Graph, t: EdgeSet):
        if not g.is_forest(t):
            raise GraphError("tree edge set contains a polygon")
        adj = g.adjacency(t)
        self.parent = [-1] * g.n
        self.parent_edge = [-1] * g.n
        self.depth = [0] * g.n
        self.root = list(range(g.n))
        seen = [False] * g.n
        for r in range(g.n):
            if seen[r]:
                continue
            seen[r] = True
            queue = [r]
            for x in queue:
                for y, k in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        self.parent[y] = x
                        self.parent_edge[y] = k
                        self.depth[y] = self.depth[x] + 1
                        self.root[y] = r
                        queue.append(y)

    def path(self, v: int, w: int) -> list[tuple[int, int, int]]:
        """Tree path from ``v`` to ``w`` as ``(edge, from, to)`` steps."""
        if self.root[v] != self.root[w]:
            raise GraphError("endpoints lie in different trees")
        up, down = [], []
        a, b = v, w
        while self.depth[a] > self.depth[b]:
            up.append((self.parent_edge[a], a, self.parent[a]))
            a = self.parent[a]
        while self.depth[b] > self.depth[a]:
            down.append((self.parent_edge[b], self.parent[b], b))
            b = self.parent[b]
        while a != b:
            up.append((self.parent_edge[a], a, self.parent[a]))
            down.append((self.parent_edge[b], self.parent[b], b))
            a, b = self.parent[a], self.parent[b]
        return up + down[::-1]


def _cycle(g: Graph, forest: _RootedForest, e: int, orient: Orientation) -> SignedEdgeVector:
    v, w = orient[e]
    z = {e: -1}
    for f, a, b in forest.path(v, w):
        z[f] = 1 if orient[f] == (a, b) else -1
    return z


def fundamental_cycle(
    g: Graph, t: EdgeSet, e: int, orient: Orientation | None = None
) -> SignedEdgeVector:
    """The cycle ``z_T(e)`` for a non-tree edge ``e`` (an edge index)."""
    if t >> e & 1:
        raise GraphError(f"edge {g.edge_label(e)} belongs to the tree")
    return _cycle(g, _RootedForest(g, t), e, orient or default_orientation(g))


def boundary(g: Graph, z: SignedEdgeVector, orient: Orientation | None = None) -> list[int]:
    """Signed endpoint sums of a 1-chain; all zero exactly when it is a cycle."""
    orient = orient or default_orientation(g)
    out = [0] * g.n
    for f, c in z.items():
        a, b = orient[f]
        out[b] += c
        out[a] -= c
    return out


@dataclass(frozen=True)
class CycleMatrix:
    """``C_T``: rows are non-tree edges, columns tree edges, both in edge order."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class SlopeMatrix:
    """``M_T`` with entry ``(e, f) = c[e][f] * (m_e - m_f)``."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    entries: tuple[tuple[MultilinearPoly, ...], ...]


def cycle_matrix(g: Graph, t: EdgeSet, orient: Orientation | None = None) -> CycleMatrix:
    if not g.is_spanning_tree(t):
        raise GraphError("cycle_matrix needs a spanning tree")
    orient = orient or default_orientation(g)
    forest = _RootedForest(g, t)
    rows = tuple(bits(g.full & ~t))
    cols = tuple(bits(t))
    entries = []
    for e in rows:
        z = _cycle(g, forest, e, orient)
        entries.append(tuple(z.get(f, 0) for f in cols))
    return CycleMatrix(rows, cols, tuple(entries))


def int_matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)] for row in a]


def verify_inverse(g: Graph, t: EdgeSet) -> bool:
    """``C_T * C_S`` is the identity, for a coupled tree ``T`` and ``S = E - T``."""
    s = g.full & ~t
    if not g.is_spanning_tree(s):
        raise GraphError("complement of the tree is not a spanning tree")
    ct = cycle_matrix(g, t)
    cs = cycle_matrix(g, s)
    prod = int_matmul(ct.entries, cs.entries)
    size = len(ct.rows)
    return all(prod[i][j] == (i == j) for i in range(size) for j in range(size))


def slope_matrix(g: Graph, t: EdgeSet, orient: Orientation | None = None) -> SlopeMatrix:
    c = cycle_matrix(g, t, orient)
    entries = []
    for e, row in zip(c.rows, c.entries):
        entries.append(
            tuple(
                MultilinearPoly.variable(e, coeff) + MultilinearPoly.variable(f, -coeff)
                if coeff
                else MultilinearPoly.zero()
                for f, coeff in zip(c.cols, row)
            )
        )
    return SlopeMatrix(c.rows, c.cols, tuple(entries))


def forest_cycles(g: Graph, t: EdgeSet, orient: Orientation | None = None) -> dict[int, SignedEdgeVector]:
    """Fundamental cycle of every non-forest edge, for a spanning forest ``t``.

    Works component by component, so disconnected graphs are fine.
    """
    orient = orient or default_orientation(g)
    forest = _RootedForest(g, t)
    return {e: _cycle(g, forest, e, orient) for e in bits(g.full & ~t)}
