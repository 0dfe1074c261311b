"""Bipartite matchings of structural patterns.

Rows of a pattern are the left vertices, columns the right ones. The
maximum matching size of a pattern is its generic rank.
"""

from dataclasses import dataclass, field
from typing import Mapping, Optional

from . import kernels
from .sysmodel import StructuralMatrix


@dataclass(frozen=True)
class Bipartite:
    left_count: int
    right_count: int
    edges: frozenset
    weights: Optional[Mapping] = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        edges = frozenset((int(r), int(c)) for r, c in self.edges)
        for r, c in edges:
            if not (1 <= r <= self.left_count and 1 <= c <= self.right_count):
                raise ValueError(f"edge ({r}, {c}) outside {self.left_count}x{self.right_count}")
        object.__setattr__(self, "edges", edges)
        if self.weights is not None:
            w = {(int(r), int(c)): int(v) for (r, c), v in self.weights.items()}
            if set(w) != edges:
                raise ValueError("weights must be given for exactly the edges")
            if any(v < 0 for v in w.values()):
                raise ValueError("weights must be non-negative integers")
            object.__setattr__(self, "weights", w)

    @classmethod
    def from_matrix(cls, mat: StructuralMatrix, weights=None):
        return cls(mat.rows, mat.cols, mat.entries, weights)

    def csr(self):
        pairs = [(r - 1, c - 1) for r, c in self.edges]
        return kernels.csr_from_pairs(self.left_count, pairs)


@dataclass(frozen=True)
class Matching:
    pairs: tuple
    total_weight: Optional[int] = None

    @property
    def size(self):
        return len(self.pairs)

    @property
    def rows(self):
        return frozenset(r for r, _ in self.pairs)

    @property
    def cols(self):
        return frozenset(c for _, c in self.pairs)


def _pairs(match_left):
    return tuple((r + 1, int(c) + 1) for r, c in enumerate(match_left) if c >= 0)


def max_matching(b: Bipartite) -> Matching:
    """Maximum-cardinality matching (Hopcroft-Karp)."""
    indptr, indices = b.csr()
    ml, _ = kernels.hopcroft_karp(b.left_count, b.right_count, indptr, indices)
    return Matching(_pairs(ml))


def grank(stacked: StructuralMatrix) -> int:
    """Generic rank of a pattern, as its maximum matching size."""
    return max_matching(Bipartite.from_matrix(stacked)).size


def min_weight_max_matching(b: Bipartite) -> Matching:
    """Among maximum-cardinality matchings, one of minimum total weight.

    Missing weights count as zero. Ties are resolved deterministically by
    the row-major edge order.
    """
    weights = b.weights or {}
    indptr, indices = b.csr()
    ip = indptr.tolist()
    ix = indices.tolist()
    costs = []
    for r in range(b.left_count):
        costs.extend(weights.get((r + 1, c + 1), 0) for c in ix[ip[r]:ip[r + 1]])
    ml, _ = kernels.min_cost_max_matching(b.left_count, b.right_count, indptr, indices, costs)
    pairs = _pairs(ml)
    return Matching(pairs, sum(weights.get(e, 0) for e in pairs))


def stack(matrices) -> StructuralMatrix:
    """Vertical concatenation of patterns with a common column count."""
    cols = matrices[0].cols
    entries = set()
    offset = 0
    for mat in matrices:
        if mat.cols != cols:
            raise ValueError("stacked patterns must share the column count")
        entries.update((i + offset, j) for i, j in mat.entries)
        offset += mat.rows
    return StructuralMatrix(offset, cols, frozenset(entries))
