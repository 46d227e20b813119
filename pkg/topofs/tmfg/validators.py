from collections import Counter
from typing import Dict, Union

import networkx as nx
import numpy as np

from .graph import DegreeVector, TmfgGraph


def _as_networkx(graph: Union[TmfgGraph, np.ndarray]) -> nx.Graph:
    if isinstance(graph, TmfgGraph):
        return graph.to_networkx()
    adjacency = np.asarray(graph, dtype=bool)
    return nx.from_numpy_array(adjacency.astype(np.int8))


def is_chordal(graph: Union[TmfgGraph, np.ndarray]) -> bool:
    """True iff maximum cardinality search yields a perfect elimination ordering."""
    return nx.is_chordal(_as_networkx(graph))


def is_connected(graph: Union[TmfgGraph, np.ndarray]) -> bool:
    g = _as_networkx(graph)
    return g.number_of_nodes() > 0 and nx.is_connected(g)


def degree_centrality(graph: Union[TmfgGraph, np.ndarray]) -> DegreeVector:
    adjacency = graph.adjacency if isinstance(graph, TmfgGraph) else np.asarray(graph, dtype=bool)
    return adjacency.sum(axis=1).astype(np.int64)


def degree_histogram(graph: Union[TmfgGraph, np.ndarray]) -> Dict[int, int]:
    return dict(sorted(Counter(degree_centrality(graph).tolist()).items()))


def separators_in_two_cliques(graph: TmfgGraph) -> bool:
    cliques = [set(c) for c in graph.cliques]
    for (parent, child), separator in zip(graph.clique_tree_edges(), graph.separators):
        holders = [i for i, c in enumerate(cliques) if set(separator) <= c]
        if sorted(holders) != sorted((parent, child)):
            return False
    return True


def structural_checks(graph: TmfgGraph) -> Dict[str, bool]:
    """The structural invariants every TMFG satisfies, keyed by a short name."""
    n = graph.n
    return {
        "edges = 3n-6": graph.edge_count == 3 * n - 6,
        "connected": is_connected(graph),
        "chordal": is_chordal(graph),
        "cliques = n-3": len(graph.cliques) == n - 3,
        "separators = n-4": len(graph.separators) == n - 4,
        "clique tree": separators_in_two_cliques(graph),
    }
