"""Modularity coefficient matrices and partition scoring.

The modularity of a partition is the sum of a coefficient q_ij over all
same-cluster vertex pairs (diagonal included). The coefficient couples the
adjacency structure against a degree-product null model:

    undirected:  q_ij = A_ij/(2m)  - d_i d_j/(4 m^2)
    weighted:    q_ij = w_ij/(2W)  - s_i s_j/(4 W^2)
    directed:    q_ij = A_ij/m     - dout_i din_j/m^2
    bipartite:   q_ij = A_ij/m     - d_i d_j/m^2     (cross-side pairs only)

Directed and bipartite coefficients are symmetrized once at build time,
(q_ij + q_ji)/2, which leaves every partition score unchanged because
same-cluster membership is a symmetric relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import Graph, degrees

__all__ = ["QMatrix", "Partition", "build_q", "modularity", "q_split"]

# Entry sums of a valid coefficient matrix vanish; tolerance scales with n^2.
_SUM_TOL = 1e-12


@dataclass(frozen=True)
class Partition:
    """Cluster assignment with contiguous ids 0..k-1, every cluster nonempty."""

    assign: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "assign", tuple(int(c) for c in self.assign))
        if len(self.assign) == 0:
            raise ValueError("partition of an empty vertex set")
        used = set(self.assign)
        if used != set(range(self.k)):
            raise ValueError(
                f"cluster ids must be exactly 0..{self.k - 1} with none empty"
            )

    @classmethod
    def from_labels(cls, labels) -> "Partition":
        """Compact arbitrary labels to contiguous ids in first-appearance order."""
        remap = {}
        assign = []
        for lab in labels:
            lab = int(lab)
            if lab not in remap:
                remap[lab] = len(remap)
            assign.append(remap[lab])
        return cls(assign=tuple(assign), k=len(remap))

    @classmethod
    def single_cluster(cls, n: int) -> "Partition":
        return cls(assign=(0,) * n, k=1)

    def communities(self) -> list[list[int]]:
        out = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assign):
            out[c].append(v)
        return out


@dataclass(frozen=True)
class QMatrix:
    """Dense symmetric coefficient matrix plus its positive mass.

    ``entries`` sums to zero; ``q_mass`` is the total of its nonnegative
    entries (equal to minus the total of its negative entries, and < 1 on
    every instance). ``coupling`` and ``null_term`` hold the two symmetrized
    summands with entries = coupling - null_term; the bipartition solver
    needs them separately. ``scale`` records the normalizing denominator
    (m, or W for the weighted variant).
    """

    n: int
    entries: np.ndarray
    q_mass: float
    variant: str
    scale: float
    coupling: np.ndarray = field(repr=False)
    null_term: np.ndarray = field(repr=False)

    def __post_init__(self):
        for arr in (self.entries, self.coupling, self.null_term):
            arr.setflags(write=False)


def _adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for i, j, w in g.edges:
        a[i, j] += w
        if g.variant != "directed":
            a[j, i] += w
    return a


def build_q(g: Graph) -> QMatrix:
    """Build the coefficient matrix for ``g`` per its variant's formula."""
    a = _adjacency(g)
    if g.variant in ("undirected", "weighted"):
        d = degrees(g)
        scale = g.total_weight
        coupling = a / (2.0 * scale)
        null = np.outer(d, d) / (4.0 * scale * scale)
    elif g.variant == "directed":
        d_out, d_in = degrees(g)
        scale = float(g.m)
        coupling = a / scale
        null = np.outer(d_out, d_in) / (scale * scale)
    else:  # bipartite
        d = degrees(g)
        scale = float(g.m)
        left = np.array([s == "left" for s in g.part])
        cross = np.outer(left, ~left)
        coupling = np.where(cross, a, 0.0) / scale
        null = np.where(cross, np.outer(d, d), 0.0) / (scale * scale)

    coupling = (coupling + coupling.T) / 2.0
    null = (null + null.T) / 2.0
    entries = coupling - null
    entries = (entries + entries.T) / 2.0

    total = float(entries.sum())
    if abs(total) > _SUM_TOL * g.n * g.n:
        raise AssertionError(f"coefficient entries sum to {total}, expected 0")
    q_mass = float(entries[entries >= 0].sum())
    if q_mass <= 0.0:
        # possible for degenerate variants (e.g. a bipartite or directed
        # star whose coupling exactly cancels the null model): every
        # partition scores 0 and there is nothing to optimize
        raise ValueError(
            "degenerate instance: the coefficient matrix vanishes, so the "
            "score of every partition is 0"
        )
    if q_mass >= 1.0:
        raise AssertionError(f"positive mass {q_mass} outside (0, 1)")

    return QMatrix(
        n=g.n,
        entries=entries,
        q_mass=q_mass,
        variant=g.variant,
        scale=scale,
        coupling=coupling,
        null_term=null,
    )


def modularity(qm: QMatrix, p: Partition) -> float:
    """Score of a partition: sum of q_ij over same-cluster pairs."""
    if len(p.assign) != qm.n:
        raise ValueError(
            f"partition covers {len(p.assign)} vertices, matrix has {qm.n}"
        )
    labels = np.asarray(p.assign)
    ind = np.zeros((qm.n, p.k))
    ind[np.arange(qm.n), labels] = 1.0
    return float(((qm.entries @ ind) * ind).sum())


def q_split(qm: QMatrix):
    """Index pairs of the nonnegative and negative coefficient entries.

    Returns (pos_pairs, neg_pairs) as integer arrays of shape (count, 2);
    the entry sums over the two sets are +q_mass and -q_mass.
    """
    mask = qm.entries >= 0
    return np.argwhere(mask), np.argwhere(~mask)
