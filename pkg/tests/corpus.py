"""Shared test corpus: small graphs with exactly computable homology.

`UNIT_GRAPHS` covers every connected simple graph on at most 4 vertices
with unit weights.  `WEIGHTED_VARIANTS` are vertex-weighted variants with
total weight at most 6, chosen to exercise multi-block states, nested
splits, and weighted contractions.
"""

from chromhom import (
    complete_graph,
    cycle_graph,
    graph_from_weights,
    path_graph,
    star_graph,
)

UNIT_GRAPHS = [
    ("K1", graph_from_weights([1], [])),
    ("K2", graph_from_weights([1, 1], [(0, 1)])),
    ("P3", path_graph([1, 1, 1])),
    ("K3", complete_graph([1, 1, 1])),
    ("P4", path_graph([1, 1, 1, 1])),
    ("star4", star_graph([1, 1, 1, 1])),
    ("paw", graph_from_weights([1, 1, 1, 1], [(0, 1), (0, 2), (1, 2), (2, 3)])),
    ("C4", cycle_graph([1, 1, 1, 1])),
    ("diamond", graph_from_weights(
        [1, 1, 1, 1], [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])),
    ("K4", complete_graph([1, 1, 1, 1])),
]

WEIGHTED_VARIANTS = [
    ("K2(1,2)", graph_from_weights([1, 2], [(0, 1)])),
    ("K2(2,2)", graph_from_weights([2, 2], [(0, 1)])),
    ("K2(2,3)", graph_from_weights([2, 3], [(0, 1)])),
    ("K2(1,4)", graph_from_weights([1, 4], [(0, 1)])),
    ("K2(3,3)", graph_from_weights([3, 3], [(0, 1)])),
    ("K2(2,4)", graph_from_weights([2, 4], [(0, 1)])),
    ("K2(1,5)", graph_from_weights([1, 5], [(0, 1)])),
    ("P3(1,1,2)", path_graph([1, 1, 2])),
    ("P3(1,2,1)", path_graph([1, 2, 1])),
    ("P3(2,1,2)", path_graph([2, 1, 2])),
    ("P3(2,2,2)", path_graph([2, 2, 2])),
    ("P3(1,1,3)", path_graph([1, 1, 3])),
    ("K3(1,1,2)", complete_graph([1, 1, 2])),
    ("K3(1,2,2)", complete_graph([1, 2, 2])),
    ("K3(2,2,2)", complete_graph([2, 2, 2])),
    ("P4(1,1,1,2)", path_graph([1, 1, 1, 2])),
    ("P4(1,2,2,1)", path_graph([1, 2, 2, 1])),
    ("star4(3,1,1,1)", star_graph([3, 1, 1, 1])),
    ("C4(1,1,1,2)", cycle_graph([1, 1, 1, 2])),
]

CORPUS = UNIT_GRAPHS + WEIGHTED_VARIANTS

# smaller slice for the most expensive per-edge checks
FAST_CORPUS = [
    (name, g) for name, g in CORPUS if g.total_weight <= 5
]
