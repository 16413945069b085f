"""The 2-dimensional generic rigidity matroid.

Independence is decided by the (2,3)-pebble game.  An exhaustive
subset-counting oracle is kept alongside for cross-checking; when the two
disagree the oracle is right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import CapExceededError, GraphError
from .graph import EdgeSet, Graph, Multigraph, bits, spanning_trees

DEFAULT_EDGE_CAP = 24
TABLE_EDGE_LIMIT = 16
ORACLE_EDGE_CAP = 16


class PebbleGame:
    """Incremental (2,3)-pebble game on ``n`` vertices.

    Each vertex starts with two pebbles; an accepted edge is covered by a
    pebble of its tail.  An edge ``uv`` is accepted iff four pebbles can be
    gathered on ``u`` and ``v``.
    """

    __slots__ = ("pebbles", "out")

    def __init__(self, n: int):
        self.pebbles = [2] * n
        self.out: list[list[int]] = [[] for _ in range(n)]

    def copy(self) -> PebbleGame:
        other = PebbleGame.__new__(PebbleGame)
        other.pebbles = self.pebbles[:]
        other.out = [heads[:] for heads in self.out]
        return other

    def _fetch(self, root: int, keep: int) -> bool:
        parent = {root: -1}
        stack = [root]
        while stack:
            x = stack.pop()
            for y in self.out[x]:
                if y in parent:
                    continue
                parent[y] = x
                if y != keep and self.pebbles[y] > 0:
                    self.pebbles[y] -= 1
                    self.pebbles[root] += 1
                    node = y
                    while parent[node] != -1:
                        p = parent[node]
                        self.out[p].remove(node)
                        self.out[node].append(p)
                        node = p
                    return True
                stack.append(y)
        return False

    def reach(self, *roots: int) -> set[int]:
        seen = set(roots)
        stack = list(roots)
        while stack:
            x = stack.pop()
            for y in self.out[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def try_add(self, u: int, v: int) -> bool:
        while self.pebbles[u] < 2:
            if not self._fetch(u, v):
                return False
        while self.pebbles[v] < 2:
            if not self._fetch(v, u):
                return False
        self.pebbles[u] -= 1
        self.out[u].append(v)
        return True


@dataclass(frozen=True)
class RigidityReport:
    independent: bool
    rank: int
    rigid: bool
    violating_set: EdgeSet | None = None


@dataclass(frozen=True)
class TwoTreeDecomposition:
    tree_a: EdgeSet
    tree_b: EdgeSet


def laman_count_ok(g: Graph, f: EdgeSet) -> bool:
    """The single count ``|F| <= 2|V(F)| - 3`` (vacuous for empty F)."""
    return f == 0 or f.bit_count() <= 2 * g.support(f).bit_count() - 3


def _run_game(g: Graph, f: EdgeSet):
    game = PebbleGame(g.n)
    accepted = 0
    violating = None
    for k in bits(f):
        i, j = g.edges[k]
        if game.try_add(i, j):
            accepted |= 1 << k
        elif violating is None:
            region = 0
            for x in game.reach(i, j):
                region |= 1 << x
            violating = g.edges_within(region, accepted) | (1 << k)
    return accepted, violating


def laman_independent(g: Graph, f: EdgeSet | None = None) -> bool:
    """Rigidity independence of ``f`` (default: all edges) via the pebble game."""
    if f is None:
        f = g.full
    game = PebbleGame(g.n)
    return all(game.try_add(*g.edges[k]) for k in bits(f))


def laman_independent_exhaustive(g: Graph, f: EdgeSet | None = None) -> bool:
    """Oracle: check the Laman count on every nonempty subset of ``f``."""
    if f is None:
        f = g.full
    if f.bit_count() > ORACLE_EDGE_CAP:
        raise CapExceededError("exhaustive Laman oracle", f.bit_count(), ORACLE_EDGE_CAP)
    sub = f
    while sub:
        if not laman_count_ok(g, sub):
            return False
        sub = (sub - 1) & f
    return True


def independence_table(g: Graph, cap: int = 20) -> list[bool]:
    """Oracle table: entry ``mask`` is True iff that edge subset satisfies Laman's condition.

    A subset is independent iff it passes the count and every subset with
    one edge removed is independent, which gives a dynamic program over all
    ``2^|E|`` masks.
    """
    if g.m > cap:
        raise CapExceededError("independence table", g.m, cap)
    size = 1 << g.m
    support = [0] * size
    indep = [True] * size
    vm = [g.endpoints_mask(k) for k in range(g.m)]
    for mask in range(1, size):
        low = mask & -mask
        rest = mask ^ low
        support[mask] = support[rest] | vm[low.bit_length() - 1]
        if mask.bit_count() > 2 * support[mask].bit_count() - 3:
            indep[mask] = False
            continue
        ok = True
        sub = mask
        while sub:
            b = sub & -sub
            if not indep[mask ^ b]:
                ok = False
                break
            sub ^= b
        indep[mask] = ok
    return indep


def rigidity_rank(g: Graph, f: EdgeSet | None = None) -> int:
    """Size of a maximum rigidity-independent subset of ``f``."""
    if f is None:
        f = g.full
    accepted, _ = _run_game(g, f)
    return accepted.bit_count()


def rigidity_report(g: Graph, f: EdgeSet | None = None) -> RigidityReport:
    if f is None:
        f = g.full
    accepted, violating = _run_game(g, f)
    rank = accepted.bit_count()
    rigid = rank == 2 * g.n - 3 if g.n >= 2 else g.n == 1
    return RigidityReport(
        independent=violating is None,
        rank=rank,
        rigid=rigid,
        violating_set=violating,
    )


def is_rigid(g: Graph) -> bool:
    if g.n < 2:
        raise GraphError("rigidity needs at least two vertices")
    return rigidity_rank(g) == 2 * g.n - 3


def is_circuit_mask(g: Graph, f: EdgeSet) -> bool:
    """``f`` is a minimal rigidity-dependent edge set."""
    if f == 0 or f.bit_count() != 2 * g.support(f).bit_count() - 2:
        return False
    return all(laman_independent(g, f & ~(1 << k)) for k in bits(f))


def is_rigidity_circuit(g: Graph) -> bool:
    return is_circuit_mask(g, g.full)


def rigidity_circuits(g: Graph, cap: int = DEFAULT_EDGE_CAP) -> list[EdgeSet]:
    """All rigidity circuits contained in ``E(g)``, ascending by bitmask."""
    if g.m > cap:
        raise CapExceededError("circuit enumeration (edges)", g.m, cap)
    if g.m <= TABLE_EDGE_LIMIT:
        return _circuits_from_table(g)
    return sorted(_circuits_by_search(g))


def _circuits_from_table(g: Graph) -> list[EdgeSet]:
    indep = independence_table(g, cap=TABLE_EDGE_LIMIT)
    out = []
    for mask in range(1, 1 << g.m):
        if indep[mask]:
            continue
        if all(indep[mask ^ (1 << k)] for k in bits(mask)):
            out.append(mask)
    return out


def minimal_dependent_subset(g: Graph, f: EdgeSet) -> EdgeSet:
    """Shrink a dependent set to a circuit by single-edge deletion tests."""
    if laman_independent(g, f):
        raise GraphError("edge set is independent")
    for k in bits(f):
        trial = f & ~(1 << k)
        if not laman_independent(g, trial):
            f = trial
    return f


def _circuits_by_search(g: Graph) -> Iterator[EdgeSet]:
    # Depth-first over independent sets built in increasing edge order.
    # Every circuit C is (C minus its largest edge) plus that edge, and all
    # subsets of C minus one edge are independent, so each circuit is met once.
    m = g.m

    def rec(indep: EdgeSet, start: int, game: PebbleGame):
        for k in range(start, m):
            i, j = g.edges[k]
            trial = game.copy()
            if trial.try_add(i, j):
                yield from rec(indep | (1 << k), k + 1, trial)
            else:
                cand = indep | (1 << k)
                if is_circuit_mask(g, cand):
                    yield cand

    yield from rec(0, 0, PebbleGame(g.n))


# -- pseudocircuits and coupled trees -----------------------------------


def _tree_pairs(g: Graph) -> Iterator[tuple[EdgeSet, EdgeSet]]:
    """Pairs (T, E minus T) of complementary spanning trees of V(E)."""
    full = g.full
    if full == 0 or g.m != 2 * g.support(full).bit_count() - 2:
        return
    h = g.subgraph(full)
    if not h.is_connected():
        return
    for t in spanning_trees(h):
        rest = h.full & ~t
        if h.is_spanning_tree(rest):
            yield g.lift(h, t), g.lift(h, rest)


def is_pseudocircuit(g: Graph) -> TwoTreeDecomposition | None:
    """A witness 2-tree decomposition of ``E(g)``, or None."""
    for t, s in _tree_pairs(g):
        return TwoTreeDecomposition(t, s)
    return None


def coupled_spanning_trees(g: Graph) -> list[EdgeSet]:
    """Cpl(G): spanning trees of V whose complement is also a spanning tree."""
    if g.m != 2 * g.n - 2 or not g.is_connected():
        return []
    if g.n == 1:
        return [0]
    return sorted(t for t, _ in _tree_pairs(g))


def multigraph_has_dense_subset(m: Multigraph, vertex_mask: int) -> bool:
    """Some vertex set U inside ``vertex_mask`` spans at least ``2|U| - 2`` edge copies.

    Equivalent to the multigraph on ``vertex_mask`` containing a
    pseudocircuit: a minimal edge set with ``|F| >= 2|V(F)| - 2`` is one.
    Taking all parallel copies between the chosen vertices maximises ``|F|``
    for a given support, so vertex subsets suffice.
    """
    sub = vertex_mask
    while sub:
        size = sub.bit_count()
        if size >= 2 and m.edges_within(sub) >= 2 * size - 2:
            return True
        sub = (sub - 1) & vertex_mask
    return False


def is_multigraph_pseudocircuit(m: Multigraph) -> bool:
    """``|E| = 2|V| - 2`` and ``|F| <= 2|V(F)| - 2`` for every nonempty ``F``."""
    if m.m == 0 or m.m != 2 * m.n - 2:
        return False
    full = (1 << m.n) - 1
    sub = full
    while sub:
        size = sub.bit_count()
        if size >= 2 and m.edges_within(sub) > 2 * size - 2:
            return False
        sub = (sub - 1) & full
    return True
