import random

import pytest

from graphvar.cycles import (
    boundary,
    cycle_matrix,
    forest_cycles,
    fundamental_cycle,
    int_matmul,
    slope_matrix,
    verify_inverse,
)
from graphvar.errors import GraphError
from graphvar.graph import bfs_tree, complete_graph, random_spanning_tree, wheel_graph
from graphvar.poly import MultilinearPoly
from graphvar.rigidity import coupled_spanning_trees


def test_k4_star_matrix():
    g = complete_graph(4)
    c = cycle_matrix(g, g.mask(["12", "13", "14"]))
    assert [g.edge_label(k) for k in c.rows] == ["23", "24", "34"]
    assert c.to_list() == [[-1, 1, 0], [-1, 0, 1], [0, -1, 1]]


def test_k4_ear_path_tree_matrix(k4_ear):
    c = cycle_matrix(k4_ear, k4_ear.mask(["12", "23", "34", "45"]))
    assert len(c.rows) == len(c.cols) == 4
    assert {v for row in c.entries for v in row} <= {-1, 0, 1}
    # 35 closes the triangle 3-4-5 and uses no edge off that path
    row35 = c.entries[c.rows.index(k4_ear.edge_index("3", "5"))]
    assert row35[c.cols.index(k4_ear.edge_index("1", "2"))] == 0


@pytest.mark.parametrize("g", [complete_graph(5), complete_graph(6), wheel_graph(5)])
def test_fundamental_cycles_are_cycles(g):
    rng = random.Random(0)
    for _ in range(10):
        t = random_spanning_tree(g, rng)
        for e in range(g.m):
            if t >> e & 1:
                continue
            z = fundamental_cycle(g, t, e)
            assert z[e] == -1
            assert set(z.values()) <= {-1, 1}
            assert boundary(g, z) == [0] * g.n


def test_tree_edge_rejected():
    g = complete_graph(4)
    t = bfs_tree(g)
    e = next(k for k in range(g.m) if t >> k & 1)
    with pytest.raises(GraphError):
        fundamental_cycle(g, t, e)


def test_cycle_matrix_needs_spanning_tree():
    g = complete_graph(4)
    with pytest.raises(GraphError):
        cycle_matrix(g, g.mask(["12", "13"]))


@pytest.mark.parametrize("g", [complete_graph(4), wheel_graph(4), wheel_graph(5)])
def test_inverse_pairs(g):
    for t in coupled_spanning_trees(g):
        assert verify_inverse(g, t)


def test_inverse_is_really_an_inverse(k4_ear):
    t = k4_ear.mask(["12", "23", "34", "45"])
    ct, cs = cycle_matrix(k4_ear, t), cycle_matrix(k4_ear, k4_ear.full & ~t)
    # rows of C_T are indexed by S, columns by T; C_S the other way round
    assert ct.rows == cs.cols and ct.cols == cs.rows
    eye = [[int(i == j) for j in range(4)] for i in range(4)]
    assert int_matmul(ct.entries, cs.entries) == eye
    assert int_matmul(cs.entries, ct.entries) == eye


def test_inverse_rejects_non_coupled_tree():
    g = complete_graph(4)
    with pytest.raises(GraphError):
        verify_inverse(g, g.mask(["12", "13", "14"]))


def test_slope_matrix_entries():
    g = complete_graph(4)
    t = g.mask(["12", "13", "14"])
    c, m = cycle_matrix(g, t), slope_matrix(g, t)
    for i, e in enumerate(c.rows):
        for j, f in enumerate(c.cols):
            coeff = c.entries[i][j]
            expected = (MultilinearPoly.variable(e) - MultilinearPoly.variable(f)) * coeff
            assert m.entries[i][j] == expected


def test_forest_cycles_on_disconnected_graph():
    g = complete_graph(4).add_edges([("5", "6"), ("6", "7"), ("5", "7")])
    cycles = forest_cycles(g, bfs_tree(g))
    assert len(cycles) == g.m - (g.n - 2)
    assert all(boundary(g, z) == [0] * g.n for z in cycles.values())
