from dataclasses import dataclass
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np

# Per-vertex degree, integer valued.
DegreeVector = np.ndarray


@dataclass(frozen=True)
class InsertionRecord:
    vertex: int
    triangle: Tuple[int, int, int]
    gain: float
    host_clique: int


@dataclass(frozen=True, eq=False)
class TmfgGraph:
    """
    Triangulated Maximally Filtered Graph.

    ``cliques[0]`` is the seed tetrahedron and ``cliques[i + 1]`` the clique created by
    ``insertion_log[i]``, whose triangle is ``separators[i]``. ``triangles`` holds the
    faces still open when construction ended.
    """
    adjacency: np.ndarray
    cliques: List[Tuple[int, ...]]
    separators: List[Tuple[int, int, int]]
    triangles: List[Tuple[int, int, int]]
    insertion_log: List[InsertionRecord]

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    def edges(self) -> List[Tuple[int, int]]:
        rows, cols = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(rows.tolist(), cols.tolist()))

    @property
    def edge_count(self) -> int:
        return int(np.triu(self.adjacency, 1).sum())

    def clique_tree_edges(self) -> List[Tuple[int, int]]:
        """Edges (parent clique, child clique) of the clique tree, one per separator."""
        return [(record.host_clique, i + 1) for i, record in enumerate(self.insertion_log)]

    def to_networkx(self, weights: Optional[np.ndarray] = None) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        for u, v in self.edges():
            if weights is None:
                graph.add_edge(u, v)
            else:
                graph.add_edge(u, v, weight=float(weights[u, v]))
        return graph

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.edges()],
            "cliques": [list(c) for c in self.cliques],
            "separators": [list(s) for s in self.separators],
            "insertion_log": [
                {
                    "vertex": r.vertex,
                    "triangle": list(r.triangle),
                    "gain": r.gain,
                    "host_clique": r.host_clique,
                }
                for r in self.insertion_log
            ],
        }
