"""Acceptance suite: one test per numbered criterion.

Every test records its outcome through the ``criterion`` fixture so the
terminal summary prints a PASS/FAIL line per criterion.
"""

import random
import time
from itertools import permutations

import pytest

from structobs import (
    PlacementOptions,
    SensorPlacement,
    SystemClass,
    build_union_digraph,
    check_structural_observability,
    classify,
    place,
    place_class1,
    place_general,
    place_nodal,
    scc_decompose,
    target_sccs,
)
from structobs.generate import random_small_system, random_system
from structobs.sysmodel import augment
from structobs.verify import brute_force_min_placement, numeric_rank_probe


def _alpha(sys):
    return scc_decompose(build_union_digraph(augment(sys))).alpha


def _timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t0


def test_c01_example1(example1, criterion):
    pl, dt = _timed(place, example1)
    ok = pl.J == {5, 6} and pl.cardinality == 2 and dt < 1.0
    criterion(1, "Example 1 placement J={5,6}", ok, f"J={sorted(pl.J)}, {dt * 1e3:.1f} ms")
    assert pl.J == {5, 6}
    assert pl.cardinality == 2
    assert dt < 1.0


def test_c02_example2(example2, criterion):
    gen, t1 = _timed(place, example2, PlacementOptions(algorithm="general"))
    cls, t2 = _timed(place, example2, PlacementOptions(algorithm="class1"))
    ok = gen.J == {5} and cls.J == {5} and max(t1, t2) < 1.0
    criterion(2, "Example 2 general and class1 give J={5}", ok, f"general={sorted(gen.J)}, class1={sorted(cls.J)}")
    assert gen.J == {5}
    assert cls.J == {5}
    assert max(t1, t2) < 1.0


def test_c03_example3(example3, criterion):
    gen, t1 = _timed(place, example3, PlacementOptions(algorithm="general"))
    nod, t2 = _timed(place, example3, PlacementOptions(algorithm="nodal"))
    ok = gen.J == {2, 3} and nod.J == {2, 3} and max(t1, t2) < 1.0
    criterion(3, "Example 3 general and nodal give J={2,3}", ok, f"general={sorted(gen.J)}, nodal={sorted(nod.J)}")
    assert gen.J == {2, 3}
    assert nod.J == {2, 3}
    assert max(t1, t2) < 1.0


def test_c04_target_counts(example1, example2, example3, criterion):
    got = (_alpha(example1), _alpha(example2), _alpha(example3))
    criterion(4, "target SCC counts 2, 1, 2", got == (2, 1, 2), f"got {got}")
    assert got == (2, 1, 2)


def test_c05_oracle_minimality(criterion):
    rng = random.Random(20240501)
    violations = []
    t0 = time.perf_counter()
    count = 500
    for trial in range(count):
        sys = random_small_system(rng, max_size=8, max_modes=3)
        pl = place_general(sys)
        oracle = brute_force_min_placement(sys)
        sound = check_structural_observability(sys, pl).observable
        if not sound or pl.cardinality != oracle.min_size:
            violations.append((trial, sorted(pl.J), oracle.min_size, sound))
    dt = time.perf_counter() - t0
    ok = not violations and dt < 300
    criterion(5, "general placement equals oracle minimum", ok, f"{count} systems, {len(violations)} violations, {dt:.1f} s")
    assert not violations, violations[:5]
    assert dt < 300


def _class_agreement(kind, algorithm, seed, count=200):
    rng = random.Random(seed)
    bad = []
    for trial in range(count):
        sys = random_small_system(rng, max_size=8, max_modes=3, kind=kind)
        ref = place_general(sys).cardinality
        got = algorithm(sys)
        assert check_structural_observability(sys, got).observable
        if got.cardinality != ref:
            bad.append((trial, sys.m, got.cardinality, ref))
    return bad


def test_c06_class_agreement(criterion):
    bad1 = _class_agreement("class1", place_class1, 606)
    bad2 = _class_agreement("class2", place_nodal, 607)
    ok = not bad1 and not bad2
    criterion(
        6,
        "class-specific cardinality equals general",
        ok,
        f"class1 mismatches {len(bad1)}/200, class2 mismatches {len(bad2)}/200",
    )
    assert not bad2, bad2[:5]
    assert not bad1, bad1[:5]


def test_c07_mode_permutation(criterion):
    rng = random.Random(707)
    bad = []
    for trial in range(200):
        sys = random_small_system(rng, max_size=8, max_modes=3)
        base = place(sys)
        # a one-smaller subset exercises negative verdicts as well
        short = frozenset(base.indices[:-1])
        for order in permutations(range(sys.m)):
            other = sys.permuted(order)
            for J in (base.J, short):
                a = check_structural_observability(sys, SensorPlacement(sys.n, sys.p, J))
                b = check_structural_observability(other, SensorPlacement(sys.n, sys.p, J))
                if (a.observable, a.condition_i, a.matching_size) != (b.observable, b.condition_i, b.matching_size):
                    bad.append((trial, order, sorted(J)))
            if place(other).cardinality != base.cardinality:
                bad.append((trial, order, "cardinality"))
    criterion(7, "mode-permutation invariance", not bad, f"200 systems, {len(bad)} violations")
    assert not bad, bad[:5]


def test_c08_numeric_rank(criterion):
    rng = random.Random(808)
    bad = []
    for trial in range(100):
        sys = random_small_system(rng, max_size=8, max_modes=3)
        pl = place(sys)
        res = numeric_rank_probe(sys, pl, trials=50, seed=trial)
        if res.max_rank != res.structural_grank or any(r > res.structural_grank for r in res.ranks):
            bad.append((trial, res.max_rank, res.structural_grank))
    criterion(8, "numeric rank probe attains structural grank", not bad, f"100 systems x 50 trials, {len(bad)} violations")
    assert not bad, bad[:5]


def test_c09_avoid_input_sensors(criterion):
    rng = random.Random(909)
    bad = []
    done = 0
    while done < 100:
        size = rng.randint(3, 8)
        p = rng.randint(2, size - 1)
        sys = random_system(rng, size - p, p, rng.randint(1, 3), rng.choice((0.1, 0.25, 0.5)))
        plain = place(sys)
        avoid = place(sys, PlacementOptions(avoid_input_sensors=True))
        if avoid.cardinality > plain.cardinality or len(avoid.J_d) > len(plain.J_d):
            bad.append((done, sorted(plain.J), sorted(avoid.J)))
        done += 1
    criterion(9, "avoid-input option never increases |J| or |J_d|", not bad, f"100 systems, {len(bad)} violations")
    assert not bad, bad[:5]


def _scaling_run(size, seed):
    p = size // 10
    n = size - p
    sys = random_system(random.Random(seed), n, p, 3, 3.0 / size)
    t0 = time.perf_counter()
    pl = place(sys, PlacementOptions(verify=False))
    verdict = check_structural_observability(sys, pl)
    dt = time.perf_counter() - t0
    assert verdict.observable
    return dt


@pytest.mark.slow
def test_c10_scaling(criterion):
    sizes = (250, 500, 1000, 2000)
    # best of three damps scheduler noise on the small sizes
    times = [min(_scaling_run(size, 1000 + size) for _ in range(3)) for size in sizes]
    monotone = all(a <= b for a, b in zip(times, times[1:]))
    ok = times[-1] < 60 and monotone
    detail = ", ".join(f"{s}: {t:.3f} s" for s, t in zip(sizes, times))
    criterion(10, "n+p=2000 under 60 s, runtime monotone in size", ok, detail)
    assert times[-1] < 60
    assert monotone, detail


def test_c11_ieee5bus(ieee5bus, criterion):
    targets = target_sccs(scc_decompose(build_union_digraph(augment(ieee5bus))))
    pl = place(ieee5bus)
    ok = (
        classify(ieee5bus) is SystemClass.CLASS2
        and len(targets) == 1
        and pl.cardinality == 1
        and pl.J <= targets[0]
    )
    criterion(11, "IEEE 5-bus: one target SCC, one sensor inside it", ok, f"alpha={len(targets)}, J={sorted(pl.J)}")
    assert len(targets) == 1
    assert pl.cardinality == 1
    assert pl.J <= targets[0]
