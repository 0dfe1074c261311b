import random

import numpy as np
import pytest

from structobs import kernels

from oracles import brute_max_matching, brute_mwmm, closure_sccs

BACKENDS = kernels.available_backends()


def random_bipartite(rng, max_side=6, max_edges=12):
    left, right = rng.randint(1, max_side), rng.randint(1, max_side)
    edges = {(rng.randrange(left), rng.randrange(right)) for _ in range(rng.randint(0, max_edges))}
    return left, right, sorted(edges)


def test_backend_reported():
    assert kernels.BACKEND in BACKENDS
    with pytest.raises(ValueError):
        kernels._pick("fortran")


@pytest.mark.parametrize("backend", BACKENDS)
def test_matching_kernels(backend):
    rng = random.Random(1)
    for _ in range(150):
        left, right, edges = random_bipartite(rng)
        indptr, indices = kernels.csr_from_pairs(left, edges)
        ml, mr = kernels.hopcroft_karp(left, right, indptr, indices, backend=backend)
        pairs = [(r, int(c)) for r, c in enumerate(ml) if c >= 0]
        assert all(mr[c] == r for r, c in pairs)
        assert set(pairs) <= set(edges)
        assert len(pairs) == brute_max_matching(edges)

        costs = [rng.randint(0, 5) for _ in edges]
        weight = dict(zip(edges, costs))
        ml, _ = kernels.min_cost_max_matching(left, right, indptr, indices, costs, backend=backend)
        pairs = [(r, int(c)) for r, c in enumerate(ml) if c >= 0]
        assert (len(pairs), sum(weight[e] for e in pairs)) == brute_mwmm(edges, weight)


@pytest.mark.parametrize("backend", BACKENDS)
def test_scc_kernel(backend):
    rng = random.Random(2)
    for _ in range(150):
        n = rng.randint(1, 8)
        edges = sorted({(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 2 * n))})
        indptr, indices = kernels.csr_from_pairs(n, edges)
        comp, ncomp = kernels.tarjan_scc(n, indptr, indices, backend=backend)
        groups = {}
        for v, c in enumerate(comp):
            groups.setdefault(int(c), set()).add(v + 1)
        expected, _ = closure_sccs(n, [(u + 1, v + 1) for u, v in edges])
        assert ncomp == len(groups)
        assert {frozenset(g) for g in groups.values()} == set(expected)


@pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernels not built")
def test_backends_identical():
    rng = random.Random(3)
    for _ in range(200):
        left, right, edges = random_bipartite(rng, 9, 30)
        indptr, indices = kernels.csr_from_pairs(left, edges)
        costs = np.array([rng.randint(0, 9) for _ in edges], dtype=np.int64)
        for fn, args in (
            (kernels.hopcroft_karp, (left, right, indptr, indices)),
            (kernels.min_cost_max_matching, (left, right, indptr, indices, costs)),
        ):
            a = fn(*args, backend="python")
            b = fn(*args, backend="cython")
            assert [list(map(int, x)) for x in a] == [list(map(int, x)) for x in b]
        sq = max(left, right)
        sq_edges = [(u % sq, v % sq) for u, v in edges]
        ip, ix = kernels.csr_from_pairs(sq, sorted(set(sq_edges)))
        ca, na = kernels.tarjan_scc(sq, ip, ix, backend="python")
        cb, nb = kernels.tarjan_scc(sq, ip, ix, backend="cython")
        assert list(map(int, ca)) == list(map(int, cb)) and na == nb


def test_empty_inputs():
    for backend in BACKENDS:
        indptr, indices = kernels.csr_from_pairs(0, [])
        ml, mr = kernels.hopcroft_karp(0, 3, indptr, indices, backend=backend)
        assert len(ml) == 0 and list(mr) == [-1, -1, -1]
