"""Seeded random structural systems for tests and benchmarks."""

import random

from .sysmodel import Mode, StructuralMatrix, SwitchedSystem


def _pattern(rng, rows, cols, density, exclude_diag=False):
    out = set()
    for i in range(1, rows + 1):
        for j in range(1, cols + 1):
            if exclude_diag and i == j:
                continue
            if rng.random() < density:
                out.add((i, j))
    return out


def _sparse_pattern(rng, rows, cols, count):
    # sampling by count keeps large sparse systems O(nnz)
    out = set()
    total = rows * cols
    count = min(count, total)
    while len(out) < count:
        out.add((rng.randint(1, rows), rng.randint(1, cols)))
    return out


def random_system(rng, n, p, m, density, kind="general"):
    """Random system whose union of ``F`` patterns has no zero column.

    ``kind`` is ``"general"``, ``"class1"`` (no input dynamics, every state
    self-looped in every mode) or ``"class2"`` (every state and input
    self-looped in every mode).
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    large = (n + p) > 64
    modes = []
    for _ in range(m):
        if large:
            A = _sparse_pattern(rng, n, n, max(1, round(density * n * n)))
            F = _sparse_pattern(rng, n, p, round(density * n * p)) if p else set()
            Q = _sparse_pattern(rng, p, p, round(density * p * p)) if p else set()
        else:
            A = _pattern(rng, n, n, density)
            F = _pattern(rng, n, p, density)
            Q = _pattern(rng, p, p, density)
        if kind in ("class1", "class2"):
            A |= {(i, i) for i in range(1, n + 1)}
        if kind == "class1":
            Q = set()
        elif kind == "class2":
            Q |= {(i, i) for i in range(1, p + 1)}
        modes.append([A, F, Q])
    for j in range(1, p + 1):
        if not any(c == j for md in modes for _, c in md[1]):
            k = rng.randrange(m)
            modes[k][1].add((rng.randint(1, n), j))
    return SwitchedSystem(
        n,
        p,
        tuple(
            Mode(
                StructuralMatrix(n, n, frozenset(A)),
                StructuralMatrix(n, p, frozenset(F)),
                StructuralMatrix(p, p, frozenset(Q)),
            )
            for A, F, Q in modes
        ),
    )


def random_small_system(rng, max_size=8, max_modes=3, densities=(0.1, 0.25, 0.5), kind="general"):
    """Random system with ``n + p <= max_size`` and ``m <= max_modes``."""
    size = rng.randint(1, max_size)
    p = rng.randint(0, size - 1)
    n = size - p
    m = rng.randint(1, max_modes)
    return random_system(rng, n, p, m, rng.choice(densities), kind)
