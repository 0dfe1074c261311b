"""Command-line front end.

Exit codes: 0 success or observable, 1 not observable or infeasible,
2 usage or input error.
"""

import argparse
import json
import sys as _sys
from pathlib import Path

from . import io
from .errors import CapExceeded, StructobsError, WrongClass
from .placement import PlacementOptions, place
from .verify import ORACLE_CAP, brute_force_min_placement, check_structural_observability, numeric_rank_probe

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_ERROR = 2


class _InputError(Exception):
    pass


def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_system(path, allow_zero_f_columns=False):
    return io.parse_system(_read(path), allow_zero_f_columns=allow_zero_f_columns)


def _load_placement(path, system):
    pl = io.parse_placement(_read(path))
    if (pl.n, pl.p) != (system.n, system.p):
        raise _InputError(f"placement is for n={pl.n}, p={pl.p} but the system has n={system.n}, p={system.p}")
    return pl


def _emit(args, human_lines, payload):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in human_lines:
            print(line)


def cmd_check(args):
    system = _load_system(args.input, args.allow_zero_f_columns)
    pl = _load_placement(args.placement, system)
    v = check_structural_observability(system, pl)
    lines = [
        f"observable: {str(v.observable).lower()}",
        f"condition (i) output accessibility: {'pass' if v.condition_i else 'fail'}",
        f"condition (ii) maximum matching: {v.matching_size} / {v.required_size}",
    ]
    if v.non_accessible:
        lines.append(f"non-accessible vertices: {sorted(v.non_accessible)}")
    payload = {
        "observable": v.observable,
        "condition_i": v.condition_i,
        "non_accessible": sorted(v.non_accessible),
        "condition_ii": v.condition_ii,
        "grank": v.matching_size,
        "required": v.required_size,
    }
    _emit(args, lines, payload)
    return EXIT_OK if v.observable else EXIT_FALSE


def cmd_place(args):
    system = _load_system(args.input, args.allow_zero_f_columns)
    opts = PlacementOptions(
        avoid_input_sensors=args.avoid_input_sensors,
        algorithm=args.algorithm,
        allow_zero_f_columns=args.allow_zero_f_columns,
    )
    pl = place(system, opts)
    Path(args.output).write_text(io.write_placement(pl), encoding="utf-8")
    by_label = {}
    for i, label in pl.provenance.items():
        by_label.setdefault(label, []).append(i)
    lines = [
        f"algorithm: {pl.algorithm}",
        f"cardinality: {pl.cardinality}",
        f"J: {sorted(pl.J)}",
        f"J_d (inputs): {sorted(pl.J_d)}",
        f"J_x (states): {sorted(pl.J_x_states)}",
    ]
    lines += [f"{label}: {sorted(ix)}" for label, ix in sorted(by_label.items())]
    lines += [f"warning: {w}" for w in pl.warnings]
    _emit(args, lines, io.placement_to_dict(pl))
    return EXIT_OK


def cmd_oracle(args):
    system = _load_system(args.input, args.allow_zero_f_columns)
    res = brute_force_min_placement(system, args.max_size, cap=args.cap)
    if not res.feasible:
        _emit(
            args,
            [f"infeasible up to cardinality {res.searched_up_to}"],
            {"feasible": False, "searched_up_to": res.searched_up_to},
        )
        return EXIT_FALSE
    sets = [sorted(s) for s in res.minimal_sets]
    lines = [f"minimum cardinality: {res.min_size}", f"minimal sets ({len(sets)}):"]
    lines += [f"  {s}" for s in sets]
    _emit(args, lines, {"feasible": True, "min_size": res.min_size, "minimal_sets": sets})
    return EXIT_OK


def cmd_probe(args):
    if args.trials < 1:
        raise _InputError("--trials must be at least 1")
    system = _load_system(args.input, args.allow_zero_f_columns)
    pl = _load_placement(args.placement, system)
    res = numeric_rank_probe(system, pl, trials=args.trials, seed=args.seed, tolerance=args.tol)
    size = system.n + system.p
    lines = [f"trial {k}: rank {r}" for k, r in enumerate(res.ranks, start=1)]
    lines += [
        f"max numeric rank: {res.max_rank}",
        f"structural grank: {res.structural_grank} (n+p = {size})",
        f"agree: {str(res.agree).lower()}",
    ]
    if res.structural_grank < size:
        lines.append("verdict: not observable (generic rank below n+p)")
    _emit(
        args,
        lines,
        {
            "ranks": list(res.ranks),
            "max_rank": res.max_rank,
            "structural_grank": res.structural_grank,
            "agree": res.agree,
        },
    )
    return EXIT_OK if res.agree else EXIT_FALSE


def cmd_dot(args):
    system = _load_system(args.input, args.allow_zero_f_columns)
    pl = _load_placement(args.placement, system) if args.placement else None
    Path(args.output).write_text(io.export_dot(system, pl), encoding="utf-8")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="structobs",
        description="Structural state and input observability of switched LTI systems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--input", required=True, help="system document (JSON)")
        sp.add_argument("--allow-zero-f-columns", action="store_true")
        sp.add_argument("--format", choices=("human", "json"), default="human")

    sp = sub.add_parser("check", help="verify a placement")
    common(sp)
    sp.add_argument("--placement", required=True)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("place", help="compute a minimum placement")
    common(sp)
    sp.add_argument("--algorithm", choices=("auto", "general", "class1", "nodal"), default="auto")
    sp.add_argument("--avoid-input-sensors", action="store_true")
    sp.add_argument("--output", required=True)
    sp.set_defaults(func=cmd_place)

    sp = sub.add_parser("oracle", help="exhaustive minimum placement search")
    common(sp)
    sp.add_argument("--max-size", type=int, default=None)
    sp.add_argument("--cap", type=int, default=ORACLE_CAP, help="largest n+p the search accepts")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("probe", help="numeric rank of random realizations")
    common(sp)
    sp.add_argument("--placement", required=True)
    sp.add_argument("--trials", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.set_defaults(func=cmd_probe)

    sp = sub.add_parser("dot", help="export the union digraph as DOT")
    common(sp)
    sp.add_argument("--placement", default=None)
    sp.add_argument("--output", required=True)
    sp.set_defaults(func=cmd_dot)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (_InputError, StructobsError, WrongClass, CapExceeded) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    _sys.exit(main())
