"""Backend selection for the graph kernels.

The compiled extension is used when it imports; otherwise the pure-Python
versions are used. Set ``STRUCTOBS_PURE_PYTHON=1`` to force the fallback.
Both backends accept numpy int64 CSR arrays and return plain sequences of
ints (lists or int64 arrays), which callers treat uniformly.
"""

import os

import numpy as np

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("STRUCTOBS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels


def _i64(a):
    return np.ascontiguousarray(a, dtype=np.int64)


def hopcroft_karp(n_left, n_right, indptr, indices, backend=None):
    impl = _pick(backend)
    return impl.hopcroft_karp(int(n_left), int(n_right), _i64(indptr), _i64(indices))


def tarjan_scc(n, indptr, indices, backend=None):
    impl = _pick(backend)
    return impl.tarjan_scc(int(n), _i64(indptr), _i64(indices))


def min_cost_max_matching(n_left, n_right, indptr, indices, costs, backend=None):
    impl = _pick(backend)
    return impl.min_cost_max_matching(
        int(n_left), int(n_right), _i64(indptr), _i64(indices), _i64(costs)
    )


def available_backends():
    names = ["python"]
    if BACKEND == "cython" or _compiled() is not None:
        names.append("cython")
    return names


def _compiled():
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels


def _pick(backend):
    if backend is None:
        return _impl
    if backend == "python":
        return _pykernels
    if backend == "cython":
        mod = _compiled()
        if mod is None:
            raise RuntimeError("compiled kernels are not built")
        return mod
    raise ValueError(f"unknown backend {backend!r}")


def csr_from_pairs(n_rows, pairs):
    """Build CSR arrays from 0-based ``(row, col)`` pairs, columns sorted per row."""
    counts = [0] * (n_rows + 1)
    ordered = sorted(pairs)
    for r, _ in ordered:
        counts[r + 1] += 1
    for i in range(n_rows):
        counts[i + 1] += counts[i]
    indptr = np.asarray(counts, dtype=np.int64)
    indices = np.asarray([c for _, c in ordered], dtype=np.int64)
    return indptr, indices
