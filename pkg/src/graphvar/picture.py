"""Cellules of the picture space and its irreducible components.

A cellule is indexed by the partition of the vertices recording which
points coincide.  Containment of one cellule in the closure of another is
decided combinatorially, never by ideal computations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import CapExceededError
from .graph import EdgeSet, Graph, bits, quotient
from .partitions import DEFAULT_PARTITION_CAP, Partition, all_partitions, quotient_partition, refinements, refines
from .rigidity import DEFAULT_EDGE_CAP, laman_independent, multigraph_has_dense_subset, rigidity_circuits


@dataclass(frozen=True)
class Cellule:
    partition: Partition
    dimension: int
    collapsed_edges: EdgeSet


def collapsed_edges(g: Graph, a: Partition) -> EdgeSet:
    """Edges whose endpoints share a block of ``a``."""
    out = 0
    for k, (i, j) in enumerate(g.edges):
        if a.same_block(i, j):
            out |= 1 << k
    return out


def cellule(g: Graph, a: Partition) -> Cellule:
    """Cellule of ``a``; its dimension is 2 per block plus one per collapsed edge."""
    inside = collapsed_edges(g, a)
    return Cellule(a, 2 * len(a) + inside.bit_count(), inside)


def collapses(g: Graph, a: Partition, f: EdgeSet) -> bool:
    """All of V(f) lies in one block of ``a``."""
    return a.collapses_mask(g.support(f))


def cellule_in_picture_variety(
    g: Graph, a: Partition, circuits: list[EdgeSet] | None = None, cap: int = DEFAULT_EDGE_CAP
) -> bool:
    """The cellule of ``a`` lies in the picture variety iff ``a`` collapses no rigidity circuit."""
    if circuits is None:
        circuits = rigidity_circuits(g, cap)
    return not any(collapses(g, a, c) for c in circuits)


def closure_contains(g: Graph, a: Partition, b: Partition) -> bool:
    """Whether the cellule of ``b`` lies in the closure of the cellule of ``a``.

    Requires ``a`` to refine ``b``, and that ``b/a`` collapse no
    pseudocircuit of the quotient multigraph ``G/A``.
    """
    if not refines(a, b):
        return False
    quot, _ = quotient(g, a)
    for block in quotient_partition(a, b).blocks:
        if len(block) < 2:
            continue
        mask = sum(1 << x for x in block)
        if multigraph_has_dense_subset(quot, mask):
            return False
    return True


def closure_contains_two_condition(g: Graph, a: Partition, b: Partition) -> bool:
    """Same relation, tested as: refinement, no collapsed rigidity circuit of the
    simple quotient, and at most one edge between blocks merged by ``b``."""
    if not refines(a, b):
        return False
    quot, _ = quotient(g, a)
    ba = quotient_partition(a, b)
    for (i, j), mult in quot.multiplicities().items():
        if mult > 1 and ba.same_block(i, j):
            return False
    simple = quot.underlying()
    circuits = rigidity_circuits(simple)
    return not any(collapses(simple, ba, c) for c in circuits)


@dataclass(frozen=True)
class Component:
    partition: Partition
    dimension: int
    is_picture_variety: bool


@dataclass(frozen=True)
class ComponentReport:
    components: tuple[Component, ...]
    cm_certificate: bool
    graph: Graph = field(repr=False, compare=False, default=None)

    @property
    def partitions(self) -> list[Partition]:
        return [c.partition for c in self.components]

    def to_dict(self) -> dict:
        return {
            "components": [
                {"blocks": self.graph.partition_ids(c.partition), "dim": c.dimension}
                for c in self.components
            ],
            "cm_certificate": self.cm_certificate,
        }


def maximal_partitions(g: Graph, cap: int = DEFAULT_PARTITION_CAP) -> list[Partition]:
    """Partitions whose cellule lies in no other cellule's closure, by direct testing."""
    out = []
    for a in all_partitions(g.n, cap):
        if not any(a2 != a and closure_contains(g, a2, a) for a2 in refinements(a)):
            out.append(a)
    return out


def irreducible_components(g: Graph, cap: int = DEFAULT_PARTITION_CAP) -> ComponentReport:
    """Components of the picture space, one per maximal partition.

    Connected components of ``g`` are handled separately and the choices
    combined, since the picture space is their product.
    """
    pieces = g.components()
    biggest = max((len(p) for p in pieces), default=0)
    if biggest > cap:
        raise CapExceededError("partition enumeration", biggest, cap)
    per_piece = []
    for verts in pieces:
        sub = g.induced(g.vertices[i] for i in verts)
        # sub keeps g's relative vertex order, so sub index k is verts[k]
        lifted = [[[verts[x] for x in blk] for blk in p.blocks] for p in maximal_partitions(sub, cap)]
        per_piece.append(lifted)
    comps = []
    for choice in product(*per_piece):
        part = Partition(blk for blocks in choice for blk in blocks)
        comps.append(Component(part, cellule(g, part).dimension, part.is_discrete()))
    comps.sort(key=lambda c: (-len(c.partition), c.partition.blocks))
    return ComponentReport(tuple(comps), cm_certificate(g), g)


def cm_certificate(g: Graph) -> bool:
    """Rigidity independence, which suffices for the picture variety to be Cohen-Macaulay.

    False means only that this certificate does not apply.
    """
    return laman_independent(g)
