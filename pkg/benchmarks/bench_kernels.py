"""Time the compiled and pure-Python graph kernels on the same inputs.

    python benchmarks/bench_kernels.py --sizes 1000 4000 16000 --repeat 3
"""

import argparse
import random
import time

import numpy as np

from structobs import kernels


def sparse_pairs(rng, rows, cols, per_row):
    pairs = set()
    for r in range(rows):
        for _ in range(per_row):
            pairs.add((r, rng.randrange(cols)))
    return sorted(pairs)


def best_of(repeat, fn, *args, **kw):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args, **kw)
        best = min(best, time.perf_counter() - t0)
    return best


def run(sizes, repeat, seed):
    backends = kernels.available_backends()
    rng = random.Random(seed)
    header = f"{'kernel':<22}{'size':>8}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    for size in sizes:
        # three stacked modes over `size` columns plus a few weighted rows
        rows = 3 * size
        pairs = sparse_pairs(rng, rows, size, 2)
        indptr, indices = kernels.csr_from_pairs(rows, pairs)
        costs = np.array([rng.choice((0, 0, 0, size + 1)) for _ in pairs], dtype=np.int64)
        graph = sparse_pairs(rng, size, size, 3)
        gptr, gidx = kernels.csr_from_pairs(size, graph)
        cases = (
            ("hopcroft_karp", kernels.hopcroft_karp, (rows, size, indptr, indices)),
            ("min_cost_max_matching", kernels.min_cost_max_matching, (rows, size, indptr, indices, costs)),
            ("tarjan_scc", kernels.tarjan_scc, (size, gptr, gidx)),
        )
        for name, fn, args in cases:
            times = [best_of(repeat, fn, *args, backend=b) for b in backends]
            line = f"{name:<22}{size:>8}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
            if len(times) > 1:
                line += f"{times[0] / times[1]:>9.1f}x"
            print(line)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[500, 2000, 8000])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    run(args.sizes, args.repeat, args.seed)


if __name__ == "__main__":
    main()
