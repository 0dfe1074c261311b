"""Observability verdicts, the exhaustive minimal-placement oracle and a numeric rank probe."""

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import kernels
from .errors import CapExceeded
from .graph import all_vertices_reach_outputs, build_union_digraph
from .matching import grank, stack
from .sysmodel import SensorPlacement, SwitchedSystem, augment, output_matrix

ORACLE_CAP = 12


@dataclass(frozen=True)
class Verdict:
    observable: bool
    condition_i: bool
    non_accessible: frozenset
    condition_ii: bool
    matching_size: int
    required_size: int
    diagnostics: tuple = field(default=())


class _StructureCache:
    """Per-system data reused across many candidate placements."""

    def __init__(self, sys: SwitchedSystem):
        self.sys = sys
        self.aug = augment(sys)
        self.size = sys.n + sys.p
        self.digraph = build_union_digraph(self.aug)
        base = stack(list(self.aug.aug_modes))
        self.base_rows = base.rows
        adj = [[] for _ in range(base.rows)]
        for i, j in base.coords:
            adj[i - 1].append(j - 1)
        self.adj = adj
        indptr, indices = kernels.csr_from_pairs(base.rows, [(i - 1, j - 1) for i, j in base.entries])
        ml, mr = kernels.hopcroft_karp(base.rows, self.size, indptr, indices)
        self.base_match_r = [int(x) for x in mr]
        self.base_size = sum(1 for x in ml if x >= 0)

    def matching_with_outputs(self, J) -> int:
        """Maximum matching size of ``[A'_1; ...; A'_m; I^J]``.

        Starts from the maximum matching of the mode rows and runs one
        augmenting-path search per dedicated output row.
        """
        match_r = list(self.base_match_r)
        adj = self.adj
        size = self.base_size
        for j in sorted(J):
            visited = [False] * self.size
            visited[j - 1] = True
            owner = match_r[j - 1]
            if owner < 0:
                match_r[j - 1] = -2  # taken by an output row
                size += 1
                continue
            if owner == -2:
                continue
            # Kuhn search for an alternating path that frees column j - 1
            path = [j - 1]
            stack_ = [(owner, 0)]
            while stack_:
                r, k = stack_[-1]
                nbrs = adj[r]
                while k < len(nbrs) and visited[nbrs[k]]:
                    k += 1
                if k == len(nbrs):
                    stack_.pop()
                    path.pop()
                    continue
                c = nbrs[k]
                stack_[-1] = (r, k + 1)
                visited[c] = True
                path.append(c)
                nxt = match_r[c]
                if nxt == -1:
                    # shift every column on the path to the row that reached it
                    for (row, _), col in zip(stack_, path[1:]):
                        match_r[col] = row
                    match_r[j - 1] = -2
                    size += 1
                    break
                if nxt == -2:
                    path.pop()
                    continue
                stack_.append((nxt, 0))
        return size

    def check(self, J) -> Verdict:
        J = frozenset(J)
        ok_i, missing = all_vertices_reach_outputs(self.digraph, J)
        size = self.matching_with_outputs(J)
        ok_ii = size == self.size
        notes = []
        if not ok_i:
            notes.append(f"{len(missing)} vertices cannot reach a measured vertex")
        if not ok_ii:
            notes.append(f"maximum matching {size} < {self.size}")
        return Verdict(ok_i and ok_ii, ok_i, missing, ok_ii, size, self.size, tuple(notes))


def check_structural_observability(sys: SwitchedSystem, placement: SensorPlacement) -> Verdict:
    """Test both graph conditions for the given dedicated sensors."""
    aug = augment(sys)
    g = build_union_digraph(aug)
    ok_i, missing = all_vertices_reach_outputs(g, placement.J)
    size = grank(stack(list(aug.aug_modes) + [output_matrix(placement)]))
    need = sys.n + sys.p
    ok_ii = size == need
    notes = []
    if not ok_i:
        notes.append(f"{len(missing)} vertices cannot reach a measured vertex")
    if not ok_ii:
        notes.append(f"maximum matching {size} < {need}")
    return Verdict(ok_i and ok_ii, ok_i, missing, ok_ii, size, need, tuple(notes))


@dataclass(frozen=True)
class OracleResult:
    min_size: int | None
    minimal_sets: tuple
    searched_up_to: int

    @property
    def feasible(self):
        return self.min_size is not None


def brute_force_min_placement(sys: SwitchedSystem, max_cardinality=None, cap=ORACLE_CAP) -> OracleResult:
    """Smallest observable placements by exhaustive search.

    Subsets are visited by increasing size, lexicographically within a size.
    """
    size = sys.n + sys.p
    if size > cap:
        raise CapExceeded(f"n+p={size} exceeds the oracle cap {cap}")
    limit = size if max_cardinality is None else min(max_cardinality, size)
    cache = _StructureCache(sys)
    for k in range(limit + 1):
        found = tuple(
            frozenset(c)
            for c in combinations(range(1, size + 1), k)
            if cache.check(c).observable
        )
        if found:
            return OracleResult(k, found, k)
    return OracleResult(None, (), limit)


@dataclass(frozen=True)
class ProbeResult:
    structural_grank: int
    ranks: tuple
    exceeded: bool

    @property
    def max_rank(self):
        return max(self.ranks)

    @property
    def agree(self):
        return self.max_rank == self.structural_grank and not self.exceeded


def _draw(rng, count):
    mags = rng.uniform(0.05, 1.0, size=count)
    signs = rng.choice((-1.0, 1.0), size=count)
    return mags * signs


def numeric_rank_probe(sys: SwitchedSystem, placement: SensorPlacement, trials=50, seed=0, tolerance=1e-9):
    """Compare numeric ranks of random realizations with the generic rank.

    Each free entry of every augmented mode matrix and of the output rows is
    drawn independently from ``[-1, -0.05] U [0.05, 1]``.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    aug = augment(sys)
    blocks = list(aug.aug_modes) + [output_matrix(placement)]
    stacked = stack(blocks)
    g = grank(stacked)
    rows = np.array([i - 1 for i, _ in stacked.coords], dtype=np.int64)
    cols = np.array([j - 1 for _, j in stacked.coords], dtype=np.int64)
    rng = np.random.default_rng(seed)
    ranks = []
    exceeded = False
    for _ in range(trials):
        mat = np.zeros(stacked.shape)
        mat[rows, cols] = _draw(rng, len(rows))
        if mat.size == 0:
            r = 0
        else:
            s = np.linalg.svd(mat, compute_uv=False)
            r = int(np.sum(s > tolerance * s[0])) if s.size and s[0] > 0 else 0
        exceeded = exceeded or r > g
        ranks.append(r)
    return ProbeResult(g, tuple(ranks), exceeded)
