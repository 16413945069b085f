"""Simple graphs, multigraphs and spanning trees.

Vertex ids are strings, numbered densely in order of first appearance.
Edges are stored as index pairs ``(i, j)`` with ``i < j`` and sorted
lexicographically; an edge set is an ``int`` bitmask over that order.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import GraphError, NotConnectedError, ParseError
from .partitions import Partition

EdgeSet = int


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """An undirected simple graph with a fixed vertex and edge order."""

    __slots__ = ("vertices", "edges", "_vindex", "_eindex", "_vmask")

    def __init__(self, vertices: Iterable = (), edges: Iterable[Sequence] = ()):
        order: dict[str, int] = {}
        for v in vertices:
            order.setdefault(str(v), len(order))
        pairs = set()
        for e in edges:
            u, v = (str(x) for x in e)
            if u == v:
                raise GraphError(f"loop at vertex {u!r}")
            i = order.setdefault(u, len(order))
            j = order.setdefault(v, len(order))
            pairs.add((min(i, j), max(i, j)))
        self.vertices: tuple[str, ...] = tuple(order)
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(pairs))
        self._vindex = order
        self._eindex = {e: k for k, e in enumerate(self.edges)}
        self._vmask = tuple((1 << i) | (1 << j) for i, j in self.edges)

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full(self) -> EdgeSet:
        return (1 << len(self.edges)) - 1

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        es = " ".join(self.edge_label(k) for k in range(self.m))
        return f"Graph(V={list(self.vertices)}, E=[{es}])"

    def vertex_index(self, v) -> int:
        try:
            return self._vindex[str(v)]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def edge_index(self, u, v) -> int:
        i, j = self.vertex_index(u), self.vertex_index(v)
        try:
            return self._eindex[(min(i, j), max(i, j))]
        except KeyError:
            raise GraphError(f"no edge {u}{v}") from None

    def has_edge(self, u, v) -> bool:
        try:
            self.edge_index(u, v)
        except GraphError:
            return False
        return True

    def mask(self, pairs: Iterable[Sequence]) -> EdgeSet:
        """Bitmask of the given ``(u, v)`` id pairs; ``"12"`` style strings work too."""
        out = 0
        for p in pairs:
            u, v = _split_pair(p)
            out |= 1 << self.edge_index(u, v)
        return out

    def edge_ids(self, mask: EdgeSet) -> list[tuple[str, str]]:
        return [(self.vertices[self.edges[k][0]], self.vertices[self.edges[k][1]]) for k in bits(mask)]

    def edge_label(self, k: int) -> str:
        u, v = self.vertices[self.edges[k][0]], self.vertices[self.edges[k][1]]
        if len(u) == 1 and len(v) == 1:
            return u + v
        return f"{u},{v}"

    def endpoints_mask(self, k: int) -> int:
        """Vertex bitmask of the two endpoints of edge ``k``."""
        return self._vmask[k]

    def support(self, mask: EdgeSet) -> int:
        """Vertex support V(F) as a vertex bitmask."""
        out = 0
        for k in bits(mask):
            out |= self._vmask[k]
        return out

    def valence(self, v, mask: EdgeSet | None = None) -> int:
        i = self.vertex_index(v)
        if mask is None:
            mask = self.full
        return sum(1 for k in bits(mask) if i in self.edges[k])

    def edges_within(self, vertex_mask: int, mask: EdgeSet | None = None) -> EdgeSet:
        """E(V') restricted to ``mask``: edges with both endpoints in ``vertex_mask``."""
        if mask is None:
            mask = self.full
        out = 0
        for k in bits(mask):
            if self._vmask[k] & ~vertex_mask == 0:
                out |= 1 << k
        return out

    def adjacency(self, mask: EdgeSet | None = None) -> list[list[tuple[int, int]]]:
        """Per-vertex list of ``(neighbour, edge index)``."""
        if mask is None:
            mask = self.full
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for k in bits(mask):
            i, j = self.edges[k]
            adj[i].append((j, k))
            adj[j].append((i, k))
        return adj

    # -- connectivity ----------------------------------------------------

    def components(self, mask: EdgeSet | None = None) -> list[list[int]]:
        """Connected components of ``(V, mask)`` as sorted vertex index lists."""
        adj = self.adjacency(mask)
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y, _ in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self, mask: EdgeSet | None = None) -> bool:
        return len(self.components(mask)) <= 1

    def is_forest(self, mask: EdgeSet) -> bool:
        return mask.bit_count() == self.n - len(self.components(mask))

    def is_spanning_tree(self, mask: EdgeSet) -> bool:
        return mask.bit_count() == self.n - 1 and self.is_connected(mask)

    def is_tree_on_support(self, mask: EdgeSet) -> bool:
        """``mask`` is a spanning tree of its own vertex support V(mask)."""
        nv = self.support(mask).bit_count()
        return mask != 0 and mask.bit_count() == nv - 1 and self.is_forest(mask)

    # -- derived graphs --------------------------------------------------

    def subgraph(self, mask: EdgeSet) -> Graph:
        """The graph ``(V(F), F)``; vertex and edge order follow ``self``."""
        vm = self.support(mask)
        verts = [v for i, v in enumerate(self.vertices) if vm >> i & 1]
        return Graph(verts, self.edge_ids(mask))

    def induced(self, vertex_ids: Iterable) -> Graph:
        idx = sorted(self.vertex_index(v) for v in vertex_ids)
        vm = sum(1 << i for i in idx)
        return Graph([self.vertices[i] for i in idx], self.edge_ids(self.edges_within(vm)))

    def lift(self, sub: Graph, submask: EdgeSet) -> EdgeSet:
        """Translate an edge set of ``sub`` (a subgraph of ``self``) into ``self``'s order."""
        return self.mask(sub.edge_ids(submask))

    def delete_edges(self, mask: EdgeSet) -> Graph:
        return Graph(self.vertices, self.edge_ids(self.full & ~mask))

    def add_edges(self, pairs: Iterable[Sequence]) -> Graph:
        extra = [_split_pair(p) for p in pairs]
        return Graph(self.vertices, self.edge_ids(self.full) + extra)

    # -- partitions over this graph's vertices ---------------------------

    def partition(self, blocks: Iterable[Iterable]) -> Partition:
        """Build a Partition from blocks of vertex ids."""
        p = Partition([self.vertex_index(v) for v in b] for b in blocks)
        if p.n != self.n:
            raise GraphError("partition does not cover the vertex set")
        return p

    def partition_ids(self, a: Partition) -> list[list[str]]:
        return [[self.vertices[i] for i in b] for b in a.blocks]

    # -- serialisation ---------------------------------------------------

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edge_ids(self.full)]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> Graph:
        return cls(data.get("vertices", ()), data["edges"])


def _split_pair(p) -> tuple[str, str]:
    if isinstance(p, str):
        if len(p) != 2:
            raise GraphError(f"cannot split edge label {p!r}; pass a pair")
        return p[0], p[1]
    u, v = p
    return str(u), str(v)


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph on vertices ``0..n-1``; ``edges`` lists each parallel copy."""

    labels: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = []
        for i, j in self.edges:
            if i == j:
                raise GraphError("multigraph loops are not allowed")
            if not (0 <= i < len(self.labels) and 0 <= j < len(self.labels)):
                raise GraphError(f"edge ({i}, {j}) has an undeclared endpoint")
            norm.append((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    def multiplicities(self) -> Counter:
        return Counter(self.edges)

    def multiplicity(self, i: int, j: int) -> int:
        return self.edges.count((min(i, j), max(i, j)))

    def edges_within(self, vertex_mask: int) -> int:
        """Number of edge copies with both endpoints in ``vertex_mask``."""
        return sum(1 for i, j in self.edges if vertex_mask >> i & 1 and vertex_mask >> j & 1)

    def underlying(self) -> Graph:
        """The simple graph on the same vertices (multiplicities forgotten)."""
        return Graph(self.labels, [(self.labels[i], self.labels[j]) for i, j in set(self.edges)])


def quotient(g: Graph, a: Partition) -> tuple[Multigraph, int]:
    """The multigraph ``G/A`` and the number of edges inside blocks of ``A``."""
    if a.n != g.n:
        raise GraphError("partition does not match the vertex set")
    labels = tuple("{" + ",".join(g.vertices[i] for i in b) + "}" for b in a.blocks)
    edges, dropped = [], 0
    for i, j in g.edges:
        bi, bj = a.block_of(i), a.block_of(j)
        if bi == bj:
            dropped += 1
        else:
            edges.append((bi, bj))
    return Multigraph(labels, tuple(edges)), dropped


# -- spanning trees -------------------------------------------------------


def spanning_trees(g: Graph) -> Iterator[EdgeSet]:
    """Yield every spanning tree of a connected graph exactly once.

    Contraction/deletion recursion: the first remaining edge is either
    contracted into the tree or deleted, and deletion is skipped when the
    edge is a bridge, so every branch ends in a tree.
    """
    if not g.is_connected():
        raise NotConnectedError("spanning trees need a connected graph")
    edges = tuple((k, i, j) for k, (i, j) in enumerate(g.edges))
    yield from _trees(g.n, edges, 0)


def _trees(n, edges, chosen):
    if n <= 1:
        yield chosen
        return
    k, a, b = edges[0]
    rest = edges[1:]
    merged = tuple(
        (j, a if x == b else x, a if y == b else y) for j, x, y in rest
    )
    merged = tuple(t for t in merged if t[1] != t[2])
    yield from _trees(n - 1, merged, chosen | (1 << k))
    if not _is_bridge(rest, a, b):
        yield from _trees(n, rest, chosen)


def _is_bridge(rest, a, b) -> bool:
    adj: dict[int, list[int]] = {}
    for _, x, y in rest:
        adj.setdefault(x, []).append(y)
        adj.setdefault(y, []).append(x)
    seen, stack = {a}, [a]
    while stack:
        x = stack.pop()
        for y in adj.get(x, ()):
            if y == b:
                return False
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return True


def count_spanning_trees(g: Graph) -> int:
    """Kirchhoff's matrix-tree count via a fraction-free determinant."""
    if g.n <= 1:
        return 1
    lap = [[0] * g.n for _ in range(g.n)]
    for i, j in g.edges:
        lap[i][i] += 1
        lap[j][j] += 1
        lap[i][j] -= 1
        lap[j][i] -= 1
    return _bareiss_det([row[1:] for row in lap[1:]])


def _bareiss_det(mat: list[list[int]]) -> int:
    a = [row[:] for row in mat]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def random_spanning_tree(g: Graph, rng: random.Random) -> EdgeSet:
    """Uniformly random spanning tree (Wilson's loop-erased random walk)."""
    if not g.is_connected():
        raise NotConnectedError("spanning trees need a connected graph")
    adj = g.adjacency()
    in_tree = [False] * g.n
    nxt: list[tuple[int, int] | None] = [None] * g.n
    in_tree[rng.randrange(g.n)] = True
    tree = 0
    for start in range(g.n):
        u = start
        while not in_tree[u]:
            nxt[u] = rng.choice(adj[u])
            u = nxt[u][0]
        u = start
        while not in_tree[u]:
            in_tree[u] = True
            w, k = nxt[u]
            tree |= 1 << k
            u = w
    return tree


def bfs_tree(g: Graph, root: int = 0) -> EdgeSet:
    """Breadth-first spanning forest, neighbours visited in index order."""
    adj = [sorted(nb) for nb in g.adjacency()]
    seen = [False] * g.n
    tree = 0
    roots = [root] + [v for v in range(g.n) if v != root]
    for r in roots:
        if seen[r]:
            continue
        seen[r] = True
        queue = [r]
        for x in queue:
            for y, k in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    tree |= 1 << k
                    queue.append(y)
    return tree


# -- construction helpers -------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse edge-list text: one ``u v`` edge or bare ``v`` vertex per line."""
    vertices, edges = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        for tok in tokens:
            if not all(c.isalnum() or c in "_-." for c in tok):
                raise ParseError(f"malformed vertex id {tok!r}", lineno)
        if len(tokens) == 1:
            vertices.append(tokens[0])
        elif len(tokens) == 2:
            u, v = tokens
            if u == v:
                raise ParseError(f"loop edge {u} {v}", lineno)
            vertices.extend((u, v))
            edges.append((u, v))
        else:
            raise ParseError(f"expected 'u v' or 'v', got {len(tokens)} tokens", lineno)
    return Graph(vertices, edges)


def complete_graph(n: int) -> Graph:
    vs = [str(i) for i in range(1, n + 1)]
    return Graph(vs, [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    """The polygon (1, 2, ..., n, 1)."""
    vs = [str(i) for i in range(1, n + 1)]
    return Graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path_graph(n: int) -> Graph:
    vs = [str(i) for i in range(1, n + 1)]
    return Graph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def wheel_graph(r: int) -> Graph:
    """The r-wheel: hub ``0`` joined to every vertex of the rim polygon ``1..r``."""
    rim = [str(i) for i in range(1, r + 1)]
    edges = [(rim[i], rim[(i + 1) % r]) for i in range(r)] + [("0", v) for v in rim]
    return Graph(["0"] + rim, edges)
