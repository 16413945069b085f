"""Tree polynomials of graphs with ``|E| = 2|V| - 2`` and the ideal they generate."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .cycles import SlopeMatrix, slope_matrix
from .errors import NotConnectedError, UndefinedError
from .graph import EdgeSet, Graph, bfs_tree, count_spanning_trees, random_spanning_tree, spanning_trees
from .poly import MultilinearPoly
from .rigidity import DEFAULT_EDGE_CAP, coupled_spanning_trees, is_rigidity_circuit, rigidity_circuits

DEFAULT_PRIME = 2305843009213693951  # 2**61 - 1


def slope_determinant(mat: SlopeMatrix) -> MultilinearPoly:
    """Exact determinant by row expansion, memoised on the set of used columns.

    Row ``i`` carries only ``m_e`` for its own non-tree edge and column ``j``
    only ``m_f`` for its own tree edge, so every product taken here is
    squarefree.
    """
    n = len(mat.rows)
    if len(mat.cols) != n:
        raise UndefinedError(f"slope matrix is {n}x{len(mat.cols)}, not square")
    entries = [[dict(p.items()) for p in row] for row in mat.entries]
    memo: dict[int, dict[int, int]] = {(1 << n) - 1: {0: 1}}

    def minor(used: int) -> dict[int, int]:
        hit = memo.get(used)
        if hit is not None:
            return hit
        i = used.bit_count()
        acc: dict[int, int] = {}
        sign = 1
        for j in range(n):
            if used >> j & 1:
                continue
            entry = entries[i][j]
            if entry:
                sub = minor(used | (1 << j))
                for a, ca in entry.items():
                    for b, cb in sub.items():
                        key = a | b
                        acc[key] = acc.get(key, 0) + sign * ca * cb
            sign = -sign
        memo[used] = acc
        return acc

    return MultilinearPoly(minor(0))


def _check_defined(g: Graph) -> None:
    if g.m != 2 * g.n - 2:
        raise UndefinedError(f"tree polynomial needs |E| = 2|V| - 2, got |E|={g.m}, |V|={g.n}")
    if not g.is_connected():
        raise NotConnectedError("tree polynomial needs a connected graph")


def tree_determinant(g: Graph, t: EdgeSet) -> MultilinearPoly:
    """``det M_T`` for the given spanning tree, without sign normalisation."""
    _check_defined(g)
    return slope_determinant(slope_matrix(g, t))


def tree_polynomial(g: Graph) -> MultilinearPoly:
    """The tree polynomial, sign-normalised, from the BFS tree at the first vertex."""
    _check_defined(g)
    return tree_determinant(g, bfs_tree(g, 0)).normalized()


def tree_polynomial_irreducible(g: Graph) -> bool:
    """Irreducibility of the tree polynomial, read off from the circuit property.

    This is the structural criterion (irreducible iff ``g`` is a rigidity
    circuit); no factorisation is attempted.
    """
    _check_defined(g)
    return is_rigidity_circuit(g)


@dataclass(frozen=True)
class TreeTheoremReport:
    supports_match: bool
    unit_coefficients: bool
    complement_signs: bool

    def __bool__(self):
        return self.supports_match and self.unit_coefficients and self.complement_signs


def tree_theorem_report(g: Graph, tau: MultilinearPoly | None = None) -> TreeTheoremReport:
    if tau is None:
        tau = tree_polynomial(g)
    cpl = coupled_spanning_trees(g)
    full = g.full
    sign = -1 if (g.n - 1) % 2 else 1
    return TreeTheoremReport(
        supports_match=set(tau.terms) == set(cpl),
        unit_coefficients=all(abs(c) == 1 for _, c in tau.items()),
        complement_signs=all(tau.coeff(full & ~t) == sign * c for t, c in tau.items()),
    )


def verify_tree_theorem(g: Graph) -> bool:
    """Terms of the tree polynomial are exactly the coupled trees, with unit
    coefficients, and ``eps(E - T) = (-1)^(n-1) eps(T)``."""
    return bool(tree_theorem_report(g))


def tree_choice_independence(
    g: Graph, sample: int = 20, limit: int = 1000, seed: int = 0
) -> bool:
    """``det M_T`` agrees up to sign over every spanning tree, or over a
    random sample of ``sample`` trees when there are more than ``limit``."""
    _check_defined(g)
    if count_spanning_trees(g) <= limit:
        trees = spanning_trees(g)
    else:
        rng = random.Random(seed)
        trees = (random_spanning_tree(g, rng) for _ in range(sample))
    ref = tree_polynomial(g)
    return all(tree_determinant(g, t).normalized() == ref for t in trees)


# -- divisibility ----------------------------------------------------------


def exact_quotient(d: MultilinearPoly, p: MultilinearPoly) -> dict[int, Fraction] | None:
    """The cofactor ``q`` with ``p = d * q``, or None if ``d`` does not divide ``p``.

    Both are multilinear, so any cofactor avoids every variable of ``d``.
    Grouping ``p`` by its monomial in ``d``'s variables therefore gives
    ``p_A = d_A * q`` for each monomial ``A``, and one group determines ``q``.
    """
    if not d:
        raise ZeroDivisionError("divisor is the zero polynomial")
    dvars = d.variables()
    lead_mono, lead_c = next(iter(d.items()))
    q = {}
    for mono, c in p.items():
        if mono & dvars == lead_mono:
            q[mono & ~dvars] = Fraction(c, lead_c)
    product: dict[int, Fraction] = {}
    for a, ca in d.items():
        for b, cb in q.items():
            product[a | b] = product.get(a | b, 0) + ca * cb
    product = {k: v for k, v in product.items() if v}
    if product != {k: Fraction(v) for k, v in p.items()}:
        return None
    return q


def _random_field_check(d, p, prime, trials, rng) -> bool:
    nvars = max(d.variables().bit_length(), p.variables().bit_length())
    dvars = d.variables()
    dlist = [k for k in range(nvars) if dvars >> k & 1]
    for _ in range(trials):
        point = [rng.randrange(prime) for _ in range(nvars)]
        for _attempt in range(64):
            dv = d.evaluate(point, prime)
            if dv:
                break
            for k in dlist:
                point[k] = rng.randrange(prime)
        else:
            return False
        ratio = p.evaluate(point, prime) * pow(dv, -1, prime) % prime
        # Same values off d's variables, fresh values on them: a true
        # cofactor does not see the change.
        other = point[:]
        for k in dlist:
            other[k] = rng.randrange(prime)
        if p.evaluate(other, prime) != ratio * d.evaluate(other, prime) % prime:
            return False
    return True


def divides(
    d: MultilinearPoly,
    p: MultilinearPoly,
    prime: int = DEFAULT_PRIME,
    trials: int = 20,
    seed: int = 0,
) -> bool:
    """Decide whether ``d`` divides ``p``.

    A randomized check over ``GF(prime)`` runs first; a pass is then
    confirmed by exact cofactor division.
    """
    if not d:
        raise ZeroDivisionError("divisor is the zero polynomial")
    if prime <= 2**30:
        raise ValueError("divides needs a prime above 2**30")
    if not _random_field_check(d, p, prime, trials, random.Random(seed)):
        return False
    return exact_quotient(d, p) is not None


# -- ideal generators ----------------------------------------------------------


@dataclass(frozen=True)
class IdealGenerator:
    circuit: EdgeSet
    poly: MultilinearPoly


def circuit_tree_polynomial(g: Graph, circuit: EdgeSet) -> MultilinearPoly:
    """Tree polynomial of ``(V(C), C)`` written in ``g``'s edge variables."""
    h = g.subgraph(circuit)
    mapping = [g.edge_index(u, v) for u, v in h.edge_ids(h.full)]
    return tree_polynomial(h).lift(mapping).normalized()


def ideal_generators(g: Graph, cap: int = DEFAULT_EDGE_CAP) -> list[IdealGenerator]:
    return [IdealGenerator(c, circuit_tree_polynomial(g, c)) for c in rigidity_circuits(g, cap)]
