import itertools
import logging
from typing import Iterable, Set, Tuple, Union

import numpy as np

from ..errors import ValidationError
from ..similarity.matrix import SimilarityMatrix
from .graph import InsertionRecord, TmfgGraph

logger = logging.getLogger(__name__)

# Seed tetrahedron search is exhaustive over this many strongest vertices.
TETRAHEDRON_CANDIDATES = 20


def _weights(similarity: Union[SimilarityMatrix, np.ndarray]) -> np.ndarray:
    values = similarity.values if isinstance(similarity, SimilarityMatrix) else similarity
    values = np.asarray(values, dtype=np.float64)
    if values.ndim != 2 or values.shape[0] != values.shape[1]:
        raise ValidationError(f"similarity matrix must be square, got shape {values.shape}")
    if values.shape[0] < 4:
        raise ValidationError(f"a TMFG needs at least 4 vertices, got {values.shape[0]}")
    if not np.all(np.isfinite(values)):
        raise ValidationError("similarity matrix has non-finite entries")
    if not np.array_equal(values, values.T):
        raise ValidationError("similarity matrix is not symmetric")
    return values


def select_initial_tetrahedron(similarity) -> Tuple[int, int, int, int]:
    """
    Four vertices with the largest sum of their six internal weights.

    The search runs over every 4-subset of the ``min(n, 20)`` vertices with the largest
    off-diagonal row sums. Ties go to the lexicographically smallest vertex set.
    """
    W = _weights(similarity)
    n = W.shape[0]
    strength = W.sum(axis=1) - np.diag(W)
    m = min(n, TETRAHEDRON_CANDIDATES)
    candidates = np.sort(np.argsort(-strength, kind="stable")[:m]).tolist()

    best, best_weight = None, -np.inf
    for a, b, c, d in itertools.combinations(candidates, 4):
        weight = W[a, b] + W[a, c] + W[a, d] + W[b, c] + W[b, d] + W[c, d]
        if weight > best_weight:
            best, best_weight = (a, b, c, d), weight
    return best


def maximum_gain(similarity, triangles: Iterable[Iterable[int]], remaining: Set[int]) -> Tuple[int, Tuple[int, int, int], float]:
    """
    Best (vertex, triangle) pair for the next insertion.

    The gain of placing ``v`` inside triangle ``t`` is the sum of the three weights between
    ``v`` and the vertices of ``t``. Ties go to the smaller vertex, then to the
    lexicographically smaller triangle.
    """
    if not remaining:
        raise ValidationError("no remaining vertices to insert")
    faces = sorted({tuple(sorted(t)) for t in triangles})
    if not faces:
        raise ValidationError("no triangles to insert into")
    W = np.asarray(similarity.values if isinstance(similarity, SimilarityMatrix) else similarity, dtype=np.float64)

    vertices = np.array(sorted(remaining))
    T = np.array(faces)
    gains = W[np.ix_(T[:, 0], vertices)] + W[np.ix_(T[:, 1], vertices)] + W[np.ix_(T[:, 2], vertices)]
    top = gains.max()
    t_idx, v_idx = np.nonzero(gains == top)
    first = np.lexsort((t_idx, v_idx))[0]
    return int(vertices[v_idx[first]]), faces[t_idx[first]], float(top)


class _FaceCache:
    """Open faces with the best remaining vertex of each face."""

    def __init__(self, W: np.ndarray, capacity: int):
        self.W = W
        self.faces = np.zeros((capacity, 3), dtype=np.int64)
        self.alive = np.zeros(capacity, dtype=bool)
        self.owner = np.zeros(capacity, dtype=np.int64)
        self.best_vertex = np.full(capacity, -1, dtype=np.int64)
        self.best_gain = np.full(capacity, -np.inf)
        self.size = 0

    def add(self, face, owner: int) -> int:
        idx = self.size
        self.faces[idx] = sorted(face)
        self.alive[idx] = True
        self.owner[idx] = owner
        self.size += 1
        return idx

    def refresh(self, idx: np.ndarray, remaining: np.ndarray) -> None:
        if len(idx) == 0:
            return
        rem = np.flatnonzero(remaining)
        if len(rem) == 0:
            self.best_vertex[idx] = -1
            self.best_gain[idx] = -np.inf
            return
        faces = self.faces[idx]
        W = self.W
        gains = W[np.ix_(faces[:, 0], rem)] + W[np.ix_(faces[:, 1], rem)] + W[np.ix_(faces[:, 2], rem)]
        arg = gains.argmax(axis=1)
        self.best_vertex[idx] = rem[arg]
        self.best_gain[idx] = gains[np.arange(len(idx)), arg]

    def pop_best(self) -> int:
        live = np.flatnonzero(self.alive)
        gains = self.best_gain[live]
        tied = live[gains == gains.max()]
        if len(tied) > 1:
            f = self.faces[tied]
            tied = tied[np.lexsort((f[:, 2], f[:, 1], f[:, 0], self.best_vertex[tied]))]
        best = tied[0]
        self.alive[best] = False
        return best


def build_tmfg(similarity) -> TmfgGraph:
    """
    Grow a TMFG from a similarity matrix.

    Starts from the seed tetrahedron and repeatedly inserts the remaining vertex into the
    open triangle with maximum gain, replacing that triangle with three new ones. Each
    face caches its best remaining vertex; after an insertion only the faces that had
    chosen the inserted vertex, plus the three new faces, are recomputed.
    """
    W = _weights(similarity)
    n = W.shape[0]

    seed = select_initial_tetrahedron(W)
    adjacency = np.zeros((n, n), dtype=bool)
    for u, v in itertools.combinations(seed, 2):
        adjacency[u, v] = adjacency[v, u] = True

    remaining = np.ones(n, dtype=bool)
    remaining[list(seed)] = False

    cache = _FaceCache(W, capacity=3 * n - 8)
    for face in itertools.combinations(seed, 3):
        cache.add(face, owner=0)
    cache.refresh(np.arange(cache.size), remaining)

    cliques = [tuple(seed)]
    separators = []
    log = []
    while remaining.any():
        k = cache.pop_best()
        v = int(cache.best_vertex[k])
        gain = float(cache.best_gain[k])
        a, b, c = (int(x) for x in cache.faces[k])
        remaining[v] = False

        clique_id = len(cliques)
        cliques.append(tuple(sorted((a, b, c, v))))
        separators.append((a, b, c))
        log.append(InsertionRecord(vertex=v, triangle=(a, b, c), gain=gain, host_clique=int(cache.owner[k])))
        for u in (a, b, c):
            adjacency[u, v] = adjacency[v, u] = True
        logger.debug("inserted vertex %d into (%d, %d, %d) with gain %.6g", v, a, b, c, gain)

        new = [cache.add(face, owner=clique_id) for face in ((a, b, v), (a, c, v), (b, c, v))]
        stale = np.flatnonzero(cache.alive & (cache.best_vertex == v))
        cache.refresh(np.union1d(stale, new), remaining)

    open_faces = [tuple(int(x) for x in cache.faces[i]) for i in np.flatnonzero(cache.alive)]
    return TmfgGraph(
        adjacency=adjacency,
        cliques=cliques,
        separators=separators,
        triangles=sorted(open_faces),
        insertion_log=log,
    )
