"""Randomized checks over a prime field.

Generic pictures are sampled with uniformly random vertex coordinates in
GF(p), and slopes/intercepts are derived from them.  Per-task random
streams are seeded with the string ``f"{seed}/{task}"``, which Python's
``random`` hashes deterministically, so results do not depend on the order
in which tasks run.

Error bounds (Schwartz-Zippel).  A nonzero polynomial of total degree d
vanishes at a uniform point of GF(p)^k with probability at most d/p.

* Vanishing: substitute m_e = (y_w - y_v)/(x_w - x_v) into a multilinear
  polynomial in the slopes of the edge set C, then multiply by the product
  of the denominators.  The numerator has degree <= 2|C| in the vertex
  coordinates.  So a polynomial that does not vanish on all pictures
  survives one sample with probability <= 2|C|/p, and ``samples``
  independent samples with probability <= (2|C|/p)^samples.
* Ranks: a maximal nonvanishing minor of either Jacobian, with denominators
  cleared, has degree <= 2|E| in the coordinates, so one attempt
  underestimates the rank with probability <= 2|E|/p.  The maximum over
  ``RANK_ATTEMPTS`` attempts fails with probability <= (2|E|/p)^attempts.
* Sampling rejects coincident points and vertical edges, each event having
  probability <= |E|/p; ``check_prime`` insists on p > 8|V|^2 so the
  resampling loop ends quickly.

At the default 61-bit prime every one of these is below 2^-50.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from sympy import isprime

from .cycles import default_orientation, forest_cycles
from .graph import EdgeSet, Graph, bfs_tree, bits
from .rigidity import DEFAULT_EDGE_CAP, rigidity_rank
from .treepoly import DEFAULT_PRIME, IdealGenerator, ideal_generators

RANK_ATTEMPTS = 3


def task_rng(seed: int | str, *task) -> random.Random:
    return random.Random("/".join(str(x) for x in (seed, *task)))


def check_prime(prime: int, n: int = 0) -> None:
    if prime == 2 or not isprime(prime):
        raise ValueError(f"{prime} is not an odd prime")
    if prime <= 8 * n * n:
        raise ValueError(f"prime {prime} too small for {n} vertices (need > 8|V|^2)")


@dataclass(frozen=True)
class PictureSample:
    """Affine picture over GF(prime); ``m``/``b`` are indexed by edge."""

    prime: int
    x: tuple[int, ...]
    y: tuple[int, ...]
    m: tuple[int, ...]
    b: tuple[int, ...]

    def satisfies_incidence(self, g: Graph) -> bool:
        p = self.prime
        return all(
            (self.m[k] * self.x[v] + self.b[k] - self.y[v]) % p == 0
            for k, e in enumerate(g.edges)
            for v in e
        )


def random_generic_picture(g: Graph, prime: int = DEFAULT_PRIME, seed: int | str = 0) -> PictureSample:
    """Random picture with distinct vertex points and no vertical edge."""
    check_prime(prime, g.n)
    rng = task_rng(seed)
    while True:
        x = [rng.randrange(prime) for _ in range(g.n)]
        y = [rng.randrange(prime) for _ in range(g.n)]
        if len(set(zip(x, y))) < g.n:
            continue
        if any(x[i] == x[j] for i, j in g.edges):
            continue
        break
    m, b = [], []
    for i, j in g.edges:
        slope = (y[j] - y[i]) * pow(x[j] - x[i], -1, prime) % prime
        m.append(slope)
        b.append((y[i] - slope * x[i]) % prime)
    return PictureSample(prime, tuple(x), tuple(y), tuple(m), tuple(b))


def polygon_relation_values(g: Graph, s: PictureSample) -> dict[int, int]:
    """``L(P)`` for each fundamental polygon of the BFS spanning forest."""
    orient = default_orientation(g)
    out = {}
    for e, z in forest_cycles(g, bfs_tree(g)).items():
        total = 0
        for f, c in z.items():
            a, b = orient[f]
            total += c * s.m[f] * (s.x[a] - s.x[b])
        out[e] = total % s.prime
    return out


def check_polygon_relations(g: Graph, s: PictureSample) -> bool:
    return not any(polygon_relation_values(g, s).values())


def _compile(poly) -> list[tuple[int, tuple[int, ...]]]:
    return [(c, tuple(bits(mono))) for mono, c in poly.items()]


def _eval_compiled(terms, values: Sequence[int], prime: int) -> int:
    total = 0
    for c, idx in terms:
        t = c
        for k in idx:
            t = t * values[k] % prime
        total += t
    return total % prime


def check_ideal_vanishing(
    g: Graph,
    samples: int = 100,
    prime: int = DEFAULT_PRIME,
    seed: int | str = 0,
    generators: list[IdealGenerator] | None = None,
    cap: int = DEFAULT_EDGE_CAP,
) -> bool:
    """Every circuit tree polynomial vanishes at the slopes of every sampled picture."""
    check_prime(prime, g.n)
    if generators is None:
        generators = ideal_generators(g, cap)
    compiled = [_compile(gen.poly) for gen in generators]
    for i in range(samples):
        pic = random_generic_picture(g, prime, f"{seed}/{i}")
        for terms in compiled:
            if _eval_compiled(terms, pic.m, prime):
                return False
    return True


def rank_mod_p(rows: Sequence[Sequence[int]], prime: int) -> int:
    """Rank over GF(prime) by Gaussian elimination."""
    mat = [[v % prime for v in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], -1, prime)
        prow = [v * inv % prime for v in mat[rank]]
        mat[rank] = prow
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [(a - factor * b) % prime for a, b in zip(mat[r], prow)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def slope_jacobian(g: Graph, s: PictureSample, f: EdgeSet | None = None) -> list[list[int]]:
    """Rows: edges of ``f``; columns: ``x_0..x_{n-1}, y_0..y_{n-1}``.

    For ``m = (y_w - y_v)/(x_w - x_v)``: dm/dy_w = 1/d, dm/dy_v = -1/d,
    dm/dx_w = -m/d, dm/dx_v = m/d with ``d = x_w - x_v``.
    """
    p, n = s.prime, g.n
    rows = []
    for k in bits(g.full if f is None else f):
        v, w = g.edges[k]
        inv = pow(s.x[w] - s.x[v], -1, p)
        row = [0] * (2 * n)
        row[w] = -s.m[k] * inv % p
        row[v] = s.m[k] * inv % p
        row[n + w] = inv
        row[n + v] = -inv % p
        rows.append(row)
    return rows


def length_jacobian(g: Graph, s: PictureSample, f: EdgeSet | None = None) -> list[list[int]]:
    """The rigidity matrix: gradients of squared edge lengths."""
    p, n = s.prime, g.n
    rows = []
    for k in bits(g.full if f is None else f):
        v, w = g.edges[k]
        dx = 2 * (s.x[v] - s.x[w]) % p
        dy = 2 * (s.y[v] - s.y[w]) % p
        row = [0] * (2 * n)
        row[v], row[w] = dx, -dx % p
        row[n + v], row[n + w] = dy, -dy % p
        rows.append(row)
    return rows


def slope_jacobian_rank(
    g: Graph, prime: int = DEFAULT_PRIME, seed: int | str = 0, f: EdgeSet | None = None,
    attempts: int = RANK_ATTEMPTS,
) -> int:
    """Generic rank of the slope functions on ``f``: max over ``attempts`` random points."""
    return max(
        rank_mod_p(slope_jacobian(g, random_generic_picture(g, prime, f"{seed}/slope/{a}"), f), prime)
        for a in range(attempts)
    )


def length_jacobian_rank(
    g: Graph, prime: int = DEFAULT_PRIME, seed: int | str = 0, f: EdgeSet | None = None,
    attempts: int = RANK_ATTEMPTS,
) -> int:
    return max(
        rank_mod_p(length_jacobian(g, random_generic_picture(g, prime, f"{seed}/length/{a}"), f), prime)
        for a in range(attempts)
    )


@dataclass(frozen=True)
class RankTriple:
    combinatorial: int
    slope: int
    length: int

    def agree(self) -> bool:
        return self.combinatorial == self.slope == self.length


def rank_triple(g: Graph, prime: int = DEFAULT_PRIME, seed: int | str = 0, f: EdgeSet | None = None) -> RankTriple:
    return RankTriple(
        rigidity_rank(g, f),
        slope_jacobian_rank(g, prime, seed, f),
        length_jacobian_rank(g, prime, seed, f),
    )


def matroid_equality_check(
    g: Graph, prime: int = DEFAULT_PRIME, seed: int | str = 0, subsets: int = 20
) -> bool:
    """Combinatorial, slope and length ranks agree on ``E`` and on random subsets of it."""
    rng = task_rng(seed, "subsets")
    masks = [g.full] + [rng.getrandbits(g.m) if g.m else 0 for _ in range(subsets)]
    return all(rank_triple(g, prime, seed, f).agree() for f in masks)


def verify_report(
    g: Graph, samples: int = 100, prime: int = DEFAULT_PRIME, seed: int = 0, cap: int = DEFAULT_EDGE_CAP
) -> dict:
    ranks = rank_triple(g, prime, seed)
    return {
        "vanishing": check_ideal_vanishing(g, samples, prime, seed, cap=cap),
        "ranks": {"combinatorial": ranks.combinatorial, "slope": ranks.slope, "length": ranks.length},
        "seed": seed,
        "prime": prime,
    }
