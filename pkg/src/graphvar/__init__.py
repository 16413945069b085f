"""Rigidity matroids, tree polynomials and picture spaces of graphs."""

from .errors import CapExceededError, GraphError, NotConnectedError, NotMultilinearError, ParseError, UndefinedError
from .graph import (
    Graph,
    Multigraph,
    complete_graph,
    count_spanning_trees,
    cycle_graph,
    parse_graph,
    path_graph,
    quotient,
    spanning_trees,
    wheel_graph,
)
from .partitions import Partition, all_partitions, quotient_partition, refines
from .poly import MultilinearPoly, poly_add, poly_mul
from .rigidity import (
    coupled_spanning_trees,
    is_multigraph_pseudocircuit,
    is_pseudocircuit,
    is_rigid,
    is_rigidity_circuit,
    laman_independent,
    rigidity_circuits,
    rigidity_rank,
)
from .treepoly import divides, ideal_generators, tree_polynomial, verify_tree_theorem

__all__ = [
    "CapExceededError", "GraphError", "NotConnectedError", "NotMultilinearError", "ParseError",
    "UndefinedError", "Graph", "Multigraph", "complete_graph", "count_spanning_trees", "cycle_graph",
    "parse_graph", "path_graph", "quotient", "spanning_trees", "wheel_graph", "Partition",
    "all_partitions", "quotient_partition", "refines", "MultilinearPoly", "poly_add", "poly_mul",
    "coupled_spanning_trees", "is_multigraph_pseudocircuit", "is_pseudocircuit", "is_rigid",
    "is_rigidity_circuit", "laman_independent", "rigidity_circuits", "rigidity_rank", "divides",
    "ideal_generators", "tree_polynomial", "verify_tree_theorem",
]
