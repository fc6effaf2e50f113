"""Graph topologies and weighted Laplacian construction.

Supported topologies are the four-vertex star, cycle, path and kite
graphs plus complete graphs K_n.  Edge-index conventions (vertices are
0-based internally; the docs below use the 1-based labels of the figures):

* star:  e1 = v1v4, e2 = v2v4, e3 = v3v4 (v4 is the center)
* cycle: e1 = v1v2, e2 = v2v3, e3 = v3v4, e4 = v4v1
* path:  e1 = v1v2, e2 = v2v3, e3 = v3v4 (cycle with the v4v1 weight 0)
* kite:  e1 = v1v2, e2 = v2v3, e3 = v1v3, e4 = v3v4
* complete(n): edges (i, j), i < j, in lexicographic order
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

STAR_KIND = "star"
CYCLE_KIND = "cycle"
PATH_KIND = "path"
KITE_KIND = "kite"
COMPLETE_KIND = "complete"

FOUR_VERTEX_KINDS = (STAR_KIND, CYCLE_KIND, PATH_KIND, KITE_KIND)

_EDGE_LISTS = {
    STAR_KIND: ((0, 3), (1, 3), (2, 3)),
    CYCLE_KIND: ((0, 1), (1, 2), (2, 3), (3, 0)),
    PATH_KIND: ((0, 1), (1, 2), (2, 3)),
    KITE_KIND: ((0, 1), (1, 2), (0, 2), (2, 3)),
}


@dataclass(frozen=True)
class Topology:
    """A supported graph topology with a fixed edge ordering."""

    kind: str
    order: int = 4

    def __post_init__(self):
        if self.kind in FOUR_VERTEX_KINDS:
            if self.order != 4:
                raise ValueError(f"{self.kind} graph must have 4 vertices, got {self.order}")
        elif self.kind == COMPLETE_KIND:
            if self.order < 2:
                raise ValueError(f"complete graph needs order >= 2, got {self.order}")
        else:
            raise ValueError(f"unknown topology kind {self.kind!r}")

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        if self.kind == COMPLETE_KIND:
            n = self.order
            return tuple((i, j) for i in range(n) for j in range(i + 1, n))
        return _EDGE_LISTS[self.kind]

    @property
    def edge_count(self) -> int:
        if self.kind == COMPLETE_KIND:
            return self.order * (self.order - 1) // 2
        return len(_EDGE_LISTS[self.kind])


STAR = Topology(STAR_KIND)
CYCLE4 = Topology(CYCLE_KIND)
PATH4 = Topology(PATH_KIND)
KITE = Topology(KITE_KIND)


def complete(n: int) -> Topology:
    """Complete graph K_n."""
    return Topology(COMPLETE_KIND, n)


def check_weights(topology: Topology, weights) -> np.ndarray:
    """Validate a weight vector for ``topology`` and return it as an array."""
    w = np.asarray(weights, dtype=float)
    if w.shape != (topology.edge_count,):
        raise ValueError(
            f"{topology.kind} graph expects {topology.edge_count} weights, "
            f"got shape {w.shape}"
        )
    if np.any(w < 0):
        raise ValueError(f"negative edge weight in {weights!r}")
    return w


def build_laplacian(topology: Topology, weights) -> np.ndarray:
    """Weighted (degree minus adjacency) Laplacian as a dense symmetric array.

    Rows sum to zero by construction; zero weights are allowed and act as
    deleted edges.
    """
    w = check_weights(topology, weights)
    n = topology.order
    lap = np.zeros((n, n))
    for (i, j), wij in zip(topology.edges, w):
        lap[i, i] += wij
        lap[j, j] += wij
        lap[i, j] -= wij
        lap[j, i] -= wij
    return lap


def build_laplacians(topology: Topology, weight_rows: np.ndarray) -> np.ndarray:
    """Vectorized :func:`build_laplacian` for a (batch, edge_count) array."""
    w = np.asarray(weight_rows, dtype=float)
    if w.ndim != 2 or w.shape[1] != topology.edge_count:
        raise ValueError(f"expected shape (batch, {topology.edge_count}), got {w.shape}")
    if np.any(w < 0):
        raise ValueError("negative edge weight")
    n = topology.order
    lap = np.zeros((w.shape[0], n, n))
    for k, (i, j) in enumerate(topology.edges):
        wk = w[:, k]
        lap[:, i, i] += wk
        lap[:, j, j] += wk
        lap[:, i, j] -= wk
        lap[:, j, i] -= wk
    return lap


def scale_weights(weights, factor: float) -> np.ndarray:
    """Multiply every edge weight by ``factor`` (> 0).

    The spectrum of the scaled graph is ``factor`` times the original one.
    """
    if factor <= 0:
        raise ValueError(f"scale factor must be positive, got {factor}")
    return np.asarray(weights, dtype=float) * factor
