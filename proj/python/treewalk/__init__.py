"""Tree-line graphs, tree partitions and continuous-time quantum walks."""

from ._core import (
    DerivationTooLarge,
    DerivedGraph,
    Graph,
    NotConnected,
    NotEquitable,
    ParseError,
    TreewalkError,
    UnknownVertex,
    btl_class_structure,
    char_poly,
    derive,
    eigenvalues,
    enumerate_k_trees,
    factored_char_poly,
    infinitesimal_table,
    integer_roots,
    k_tree_graph,
    load_graph,
    multipartite_char_poly,
    periodic_return_scan,
    periodicity_classify,
    pst_scan,
    quotient_matrix,
    transition_operator,
    tree_partition,
)

__all__ = [
    "DerivationTooLarge",
    "DerivedGraph",
    "Graph",
    "NotConnected",
    "NotEquitable",
    "ParseError",
    "TreewalkError",
    "UnknownVertex",
    "btl_class_structure",
    "char_poly",
    "derive",
    "eigenvalues",
    "enumerate_k_trees",
    "factored_char_poly",
    "infinitesimal_table",
    "integer_roots",
    "k_tree_graph",
    "load_graph",
    "multipartite_char_poly",
    "periodic_return_scan",
    "periodicity_classify",
    "pst_scan",
    "quotient_matrix",
    "transition_operator",
    "tree_partition",
]
