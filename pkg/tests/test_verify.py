import random
from dataclasses import replace

import pytest
import sympy

from graphvar.cycles import forest_cycles
from graphvar.graph import bfs_tree, complete_graph, cycle_graph, path_graph, wheel_graph
from graphvar.treepoly import DEFAULT_PRIME, ideal_generators, tree_polynomial
from graphvar.verify import (
    check_ideal_vanishing,
    check_polygon_relations,
    check_prime,
    length_jacobian_rank,
    matroid_equality_check,
    polygon_relation_values,
    random_generic_picture,
    rank_mod_p,
    rank_triple,
    slope_jacobian,
    slope_jacobian_rank,
    verify_report,
)

P = DEFAULT_PRIME


class TestPictures:
    def test_k2_incidence(self):
        g = complete_graph(2)
        for seed in range(5):
            assert random_generic_picture(g, P, seed).satisfies_incidence(g)

    def test_deterministic(self):
        g = complete_graph(5)
        assert random_generic_picture(g, P, 9) == random_generic_picture(g, P, 9)
        assert random_generic_picture(g, P, 9) != random_generic_picture(g, P, 10)

    def test_k6_all_slopes_defined(self):
        g = complete_graph(6)
        s = random_generic_picture(g, P, 0)
        assert len(s.m) == 15
        assert all(s.x[i] != s.x[j] for i, j in g.edges)
        assert s.satisfies_incidence(g)

    def test_small_field_resamples(self):
        g = complete_graph(4)
        for seed in range(30):
            s = random_generic_picture(g, 131, seed)
            assert s.satisfies_incidence(g) and check_polygon_relations(g, s)

    @pytest.mark.parametrize("prime", [2, 15, 97])
    def test_bad_primes(self, prime):
        with pytest.raises(ValueError):
            check_prime(prime, 4)


class TestPolygonRelations:
    @pytest.mark.parametrize("g", [complete_graph(5), wheel_graph(5), cycle_graph(6)])
    def test_pictures_satisfy_them(self, g):
        for seed in range(5):
            assert check_polygon_relations(g, random_generic_picture(g, P, seed))

    def test_perturbed_slope_breaks_exactly_the_cycles_through_it(self):
        g = complete_graph(5)
        s = random_generic_picture(g, P, 1)
        e = 3
        bad = replace(s, m=tuple((v + 1) % P if k == e else v for k, v in enumerate(s.m)))
        assert not check_polygon_relations(g, bad)
        through = {f for f, z in forest_cycles(g, bfs_tree(g)).items() if e in z}
        assert {f for f, v in polygon_relation_values(g, bad).items() if v} == through

    def test_tree_is_vacuous(self):
        g = path_graph(5)
        assert polygon_relation_values(g, random_generic_picture(g, P, 0)) == {}


class TestVanishing:
    def test_k4(self):
        assert check_ideal_vanishing(complete_graph(4), samples=100)

    def test_random_slopes_do_not_vanish(self):
        g = complete_graph(4)
        tau = tree_polynomial(g)
        rng = random.Random(0)
        hits = sum(tau.evaluate([rng.randrange(P) for _ in range(g.m)], P) == 0 for _ in range(50))
        assert hits == 0

    def test_wrong_generator_is_caught(self):
        g = complete_graph(4)
        gens = ideal_generators(g)
        fake = [replace(gens[0], poly=gens[0].poly + 1)]
        assert not check_ideal_vanishing(g, samples=3, generators=fake)

    def test_w5(self):
        assert check_ideal_vanishing(wheel_graph(5), samples=20, seed=3)


class TestRanks:
    def test_rank_mod_p(self):
        assert rank_mod_p([[1, 2], [2, 4]], 101) == 1
        assert rank_mod_p([[1, 2], [3, 4]], 101) == 2
        assert rank_mod_p([[1, 2], [3, 4]], 2) == 1

    def test_slope_jacobian_matches_sympy(self):
        g = complete_graph(3)
        s = random_generic_picture(g, 10007, 0)
        xs, ys = sympy.symbols("x0:3"), sympy.symbols("y0:3")
        point = {**dict(zip(xs, s.x)), **dict(zip(ys, s.y))}
        jac = slope_jacobian(g, s)
        for row, (v, w) in zip(jac, g.edges):
            slope = (ys[w] - ys[v]) / (xs[w] - xs[v])
            for col, var in enumerate(xs + ys):
                d = sympy.together(sympy.diff(slope, var)).subs(point)
                num, den = sympy.fraction(sympy.Rational(d))
                assert row[col] == int(num) * pow(int(den), -1, 10007) % 10007

    @pytest.mark.parametrize(
        "g, rank",
        [(complete_graph(2), 1), (complete_graph(4), 5), (cycle_graph(4), 4), (wheel_graph(4), 7)],
    )
    def test_examples(self, g, rank):
        assert slope_jacobian_rank(g) == rank
        assert length_jacobian_rank(g) == rank
        assert rank_triple(g).agree()

    @pytest.mark.parametrize("g", [complete_graph(4), complete_graph(6)])
    def test_matroid_equality(self, g):
        assert matroid_equality_check(g, seed=2)

    def test_k4_ear(self, k4_ear):
        assert matroid_equality_check(k4_ear)
        assert rank_triple(k4_ear).slope == 7


def test_report_is_reproducible():
    g = complete_graph(4)
    a = verify_report(g, samples=5, prime=P, seed=11)
    assert a == verify_report(g, samples=5, prime=P, seed=11)
    assert a == {"vanishing": True, "ranks": {"combinatorial": 5, "slope": 5, "length": 5}, "seed": 11, "prime": P}
