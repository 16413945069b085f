from itertools import permutations

import pytest

from graphvar.errors import CapExceededError
from graphvar.graph import Graph, complete_graph, cycle_graph, parse_graph, path_graph, wheel_graph
from graphvar.partitions import Partition, all_partitions, refines
from graphvar.picture import (
    cellule,
    cellule_in_picture_variety,
    closure_contains,
    closure_contains_two_condition,
    cm_certificate,
    collapses,
    irreducible_components,
    maximal_partitions,
)
from graphvar.rigidity import laman_independent


def k5_subgraphs_up_to_isomorphism():
    """One representative edge mask per isomorphism class of graphs on 5 labelled vertices."""
    k5 = complete_graph(5)
    perms = list(permutations(range(5)))
    index = {e: k for k, e in enumerate(k5.edges)}
    seen, reps = set(), []
    for mask in range(1 << k5.m):
        if mask in seen:
            continue
        orbit = set()
        for p in perms:
            img = 0
            for k in range(k5.m):
                if mask >> k & 1:
                    i, j = k5.edges[k]
                    img |= 1 << index[tuple(sorted((p[i], p[j])))]
            orbit.add(img)
        seen |= orbit
        reps.append(Graph(k5.vertices, k5.edge_ids(mask)))
    return reps


K5_CLASSES = k5_subgraphs_up_to_isomorphism()


def test_there_are_34_graphs_on_five_vertices():
    assert len(K5_CLASSES) == 34


class TestCellule:
    def test_examples(self):
        k4 = complete_graph(4)
        assert cellule(k4, Partition.indiscrete(4)).dimension == 8
        assert cellule(k4, Partition.discrete(4)).dimension == 8
        assert cellule(complete_graph(2), Partition.indiscrete(2)).dimension == 3

    def test_formula(self, k4_ear):
        for a in all_partitions(k4_ear.n):
            c = cellule(k4_ear, a)
            inside = [e for e in k4_ear.edges if a.block_of(e[0]) == a.block_of(e[1])]
            assert c.collapsed_edges.bit_count() == len(inside)
            assert c.dimension == 2 * len(a) + len(inside)

    def test_collapses(self, k4_ear):
        k4_edges = k4_ear.mask(["12", "13", "14", "23", "24", "34"])
        assert collapses(k4_ear, k4_ear.partition([["1", "2", "3", "4"], ["5"]]), k4_edges)
        assert collapses(k4_ear, Partition.indiscrete(5), k4_ear.full)
        assert not collapses(k4_ear, Partition.discrete(5), k4_ear.mask(["12"]))

    def test_picture_variety_membership(self):
        k4 = complete_graph(4)
        assert not cellule_in_picture_variety(k4, Partition.indiscrete(4))
        assert cellule_in_picture_variety(k4, Partition.discrete(4))
        assert cellule_in_picture_variety(cycle_graph(4), Partition.indiscrete(4))

    @pytest.mark.parametrize("g", [h for h in K5_CLASSES if laman_independent(h)])
    def test_nondiscrete_cellules_are_small(self, g):
        for a in all_partitions(g.n):
            if not a.is_discrete() and cellule_in_picture_variety(g, a):
                assert cellule(g, a).dimension < 2 * g.n


class TestClosure:
    def test_examples(self):
        k4, k2 = complete_graph(4), complete_graph(2)
        assert not closure_contains(k4, Partition.discrete(4), Partition.indiscrete(4))
        assert closure_contains(k2, Partition.discrete(2), Partition.indiscrete(2))
        a = Partition([[0, 1], [2, 3]])
        assert closure_contains(k4, a, a)

    def test_requires_refinement(self):
        g = path_graph(3)
        assert not closure_contains(g, Partition([[0, 1], [2]]), Partition([[0], [1, 2]]))

    @pytest.mark.parametrize("g", K5_CLASSES, ids=lambda g: f"m{g.m}")
    def test_order_axioms_and_oracle(self, g):
        self.check_order(g)

    @pytest.mark.slow
    def test_order_axioms_on_every_labelled_k5_subgraph(self):
        k5 = complete_graph(5)
        for mask in range(1 << k5.m):
            self.check_order(Graph(k5.vertices, k5.edge_ids(mask)))

    @staticmethod
    def check_order(g):
        parts = list(all_partitions(g.n))
        rel = {(a, b): closure_contains(g, a, b) for a in parts for b in parts}
        for (a, b), v in rel.items():
            assert v == closure_contains_two_condition(g, a, b)
            if v:
                assert refines(a, b)
        for a in parts:
            assert rel[a, a]
            for b in parts:
                if a != b and rel[a, b]:
                    assert not rel[b, a]
                    for c in parts:
                        if rel[b, c]:
                            assert rel[a, c]
        maximal = [b for b in parts if not any(a != b and rel[a, b] for a in parts)]
        assert set(maximal) == set(maximal_partitions(g))
        assert Partition.discrete(g.n) in maximal
        for b in parts:
            assert any(rel[a, b] for a in maximal)
        for a in maximal:
            assert not any(a != b and rel[a, b] for b in maximal)


class TestComponents:
    def test_k4(self):
        rep = irreducible_components(complete_graph(4))
        assert rep.partitions == [Partition.discrete(4), Partition.indiscrete(4)]
        assert [c.dimension for c in rep.components] == [8, 8]
        assert [c.is_picture_variety for c in rep.components] == [True, False]
        assert not rep.cm_certificate

    def test_square(self):
        rep = irreducible_components(cycle_graph(4))
        assert rep.partitions == [Partition.discrete(4)]
        assert rep.cm_certificate

    @pytest.mark.parametrize("g", [wheel_graph(3), wheel_graph(4)])
    def test_circuits_have_two_components(self, g):
        rep = irreducible_components(g)
        assert rep.partitions == [Partition.discrete(g.n), Partition.indiscrete(g.n)]
        assert {c.dimension for c in rep.components} == {2 * g.n}

    def test_k4_ear(self, k4_ear):
        rep = irreducible_components(k4_ear)
        assert rep.to_dict()["components"] == [
            {"blocks": [["1"], ["2"], ["3"], ["4"], ["5"]], "dim": 10},
            {"blocks": [["1", "2", "3", "4"], ["5"]], "dim": 10},
            {"blocks": [["1", "2", "3", "4", "5"]], "dim": 10},
        ]

    def test_indiscrete_can_be_absent(self):
        # dependent, not a circuit, and the pendant edge blocks full collapse
        g = parse_graph("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n1 5\n")
        parts = irreducible_components(g).partitions
        assert parts == [Partition.discrete(5), Partition([[0, 1, 2, 3], [4]])]

    @pytest.mark.parametrize(
        "text",
        ["1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n5 6\n", "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n5\n", "1 2\n3 4\n4 5\n3 5\n"],
    )
    def test_product_over_connected_components(self, text):
        g = parse_graph(text)
        assert set(irreducible_components(g).partitions) == set(maximal_partitions(g))

    def test_cap_applies_per_connected_component(self):
        g = Graph([str(i) for i in range(12)], [(str(2 * i), str(2 * i + 1)) for i in range(6)])
        assert len(irreducible_components(g, cap=3).components) == 1
        with pytest.raises(CapExceededError):
            irreducible_components(path_graph(5), cap=4)

    def test_cm_certificate(self):
        assert cm_certificate(cycle_graph(4))
        assert not cm_certificate(complete_graph(4))
        assert cm_certificate(path_graph(6))
