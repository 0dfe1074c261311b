"""Digraph of the augmented union pattern, SCCs and output accessibility.

An entry ``(i, j)`` of a pattern is the edge ``j -> i``: the column is the
source and the row the destination. Vertices are 1-based.
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .sysmodel import AugmentedSystem, StructuralMatrix


@dataclass(frozen=True)
class Digraph:
    """Directed graph in CSR form over vertices ``1..vertex_count``.

    ``indptr``/``indices`` are 0-based internally; use :meth:`successors`
    and :meth:`edges` for 1-based access.
    """

    vertex_count: int
    indptr: np.ndarray
    indices: np.ndarray

    @classmethod
    def from_edges(cls, vertex_count, edges):
        """Build from 1-based ``(source, target)`` pairs; duplicates collapse."""
        pairs = {(int(u) - 1, int(v) - 1) for u, v in edges}
        for u, v in pairs:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u + 1}, {v + 1}) outside 1..{vertex_count}")
        indptr, indices = kernels.csr_from_pairs(vertex_count, pairs)
        return cls(vertex_count, indptr, indices)

    @classmethod
    def from_pattern(cls, mat: StructuralMatrix):
        if mat.rows != mat.cols:
            raise ValueError("digraph needs a square pattern")
        return cls.from_edges(mat.rows, ((j, i) for i, j in mat.entries))

    def successors(self, v):
        lo, hi = self.indptr[v - 1], self.indptr[v]
        return tuple((self.indices[lo:hi] + 1).tolist())

    def edges(self):
        out = []
        for v in range(1, self.vertex_count + 1):
            out.extend((v, w) for w in self.successors(v))
        return out

    @property
    def edge_count(self):
        return int(self.indptr[-1])

    @cached_property
    def reverse(self) -> "Digraph":
        pairs = []
        ip, ix = self.indptr.tolist(), self.indices.tolist()
        for u in range(self.vertex_count):
            pairs.extend((w, u) for w in ix[ip[u]:ip[u + 1]])
        indptr, indices = kernels.csr_from_pairs(self.vertex_count, pairs)
        return Digraph(self.vertex_count, indptr, indices)


@dataclass(frozen=True)
class SccDecomposition:
    """SCCs ordered by their smallest member, with the condensation DAG.

    ``component_of[v - 1]`` is the component id of vertex ``v``;
    ``condensation[c]`` the ids reachable from ``c`` by one edge.
    """

    component_of: tuple
    components: tuple
    condensation: tuple
    is_target: tuple

    @property
    def count(self):
        return len(self.components)

    @property
    def alpha(self):
        return sum(self.is_target)


def build_union_digraph(aug: AugmentedSystem) -> Digraph:
    return Digraph.from_pattern(aug.union)


def scc_decompose(g: Digraph) -> SccDecomposition:
    raw, ncomp = kernels.tarjan_scc(g.vertex_count, g.indptr, g.indices)
    raw = list(raw)
    # Tarjan emits in reverse topological order; renumber by smallest member.
    first_seen = {}
    for v, c in enumerate(raw):
        if c not in first_seen:
            first_seen[c] = len(first_seen)
    comp = [first_seen[c] for c in raw]
    members = [[] for _ in range(ncomp)]
    for v, c in enumerate(comp):
        members[c].append(v + 1)

    succ = [set() for _ in range(ncomp)]
    ip, ix = g.indptr.tolist(), g.indices.tolist()
    for u in range(g.vertex_count):
        cu = comp[u]
        for w in ix[ip[u]:ip[u + 1]]:
            cw = comp[w]
            if cw != cu:
                succ[cu].add(cw)
    return SccDecomposition(
        component_of=tuple(comp),
        components=tuple(frozenset(m) for m in members),
        condensation=tuple(frozenset(s) for s in succ),
        is_target=tuple(not s for s in succ),
    )


def target_sccs(d: SccDecomposition) -> list:
    """Target components (no outgoing condensation edge), by smallest member."""
    return [c for c, t in zip(d.components, d.is_target) if t]


def all_vertices_reach_outputs(g: Digraph, measured) -> tuple:
    """Whether every vertex has a path to a measured vertex.

    Returns ``(ok, non_accessible)``; computed by BFS on the reversed graph
    from the measured set.
    """
    rev = g.reverse
    ip, ix = rev.indptr.tolist(), rev.indices.tolist()
    seen = [False] * g.vertex_count
    queue = deque()
    for v in sorted(measured):
        if not 1 <= v <= g.vertex_count:
            raise ValueError(f"measured vertex {v} outside 1..{g.vertex_count}")
        if not seen[v - 1]:
            seen[v - 1] = True
            queue.append(v - 1)
    while queue:
        u = queue.popleft()
        for w in ix[ip[u]:ip[u + 1]]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    missing = frozenset(v + 1 for v, s in enumerate(seen) if not s)
    return not missing, missing
