"""Minimum dedicated sensor placement.

Three algorithms are provided: the general one built on a minimum-weight
maximum matching, a max-flow variant for memoryless constant inputs with
state self-loops, and the nodal variant that needs only the target
components. :func:`place` dispatches between them and re-verifies the
result before returning it.
"""

import enum
import logging
from dataclasses import dataclass

from .errors import InternalVerificationFailure, WrongClass
from .flow import build_class1_network, max_flow_disjoint_paths
from .graph import build_union_digraph, scc_decompose, target_sccs
from .matching import Bipartite, min_weight_max_matching
from .sysmodel import SensorPlacement, SwitchedSystem, augment, validate
from .verify import check_structural_observability

log = logging.getLogger(__name__)


class SystemClass(enum.Enum):
    GENERAL = "general"
    CLASS1 = "class1"
    CLASS2 = "nodal"


@dataclass(frozen=True)
class PlacementOptions:
    avoid_input_sensors: bool = False
    algorithm: str = "auto"
    allow_zero_f_columns: bool = False
    verify: bool = True

    def __post_init__(self):
        if self.algorithm not in ("auto", "general", "class1", "nodal"):
            raise ValueError(f"unknown algorithm {self.algorithm!r}")


def _union_diagonal(mats, size):
    diag = set()
    for mat in mats:
        diag.update(i for i, j in mat.entries if i == j)
    return len(diag) == size


def is_class1(sys: SwitchedSystem) -> bool:
    """No input dynamics in any mode and a self-loop on every state in the union of modes."""
    if any(mode.Q.nnz for mode in sys.modes):
        return False
    return _union_diagonal([m.A for m in sys.modes], sys.n)


def is_class2(sys: SwitchedSystem) -> bool:
    """Self-loops on every state and every input in the union of modes."""
    return _union_diagonal([m.A for m in sys.modes], sys.n) and _union_diagonal(
        [m.Q for m in sys.modes], sys.p
    )


def classify(sys: SwitchedSystem) -> SystemClass:
    """Most specific class; without inputs both special classes apply and nodal wins."""
    if is_class2(sys):
        return SystemClass.CLASS2
    if is_class1(sys):
        return SystemClass.CLASS1
    return SystemClass.GENERAL


def _cover_index(comp, p, warnings):
    states = [v for v in comp if v > p]
    if states:
        return min(states)
    v = min(comp)
    warnings.append(f"target component {sorted(comp)} contains only inputs; measuring input d{v}")
    return v


def place_general(sys: SwitchedSystem, opts: PlacementOptions = PlacementOptions()) -> SensorPlacement:
    """Minimum-weight maximum matching placement, valid for any system."""
    n, p = sys.n, sys.p
    size = n + p
    aug = augment(sys)
    targets = target_sccs(scc_decompose(build_union_digraph(aug)))
    alpha = len(targets)
    m = aug.m

    # rows: mode k row i -> (k-1)*size + i, target s -> m*size + s
    edges = {}
    scale = size + 1 if opts.avoid_input_sensors else 1
    for k, mat in enumerate(aug.aug_modes):
        off = k * size
        for i, j in mat.entries:
            secondary = 1 if (opts.avoid_input_sensors and j > p) else 0
            edges[(off + i, j)] = secondary
    input_only = [all(v <= p for v in comp) for comp in targets]
    for s, comp in enumerate(targets, start=1):
        secondary = 1 if (opts.avoid_input_sensors and not input_only[s - 1]) else 0
        for j in comp:
            edges[(m * size + s, j)] = scale + secondary
    b = Bipartite(m * size + alpha, size, frozenset(edges), edges)
    mwmm = min_weight_max_matching(b)

    t_rows = {r: c for r, c in mwmm.pairs if r > m * size}
    j1 = set(t_rows.values())
    matched_target_ids = {r - m * size for r in t_rows}
    matched_cols = mwmm.cols
    j2 = {c for c in range(1, size + 1) if c not in matched_cols}
    warnings = []
    j3 = set()
    chosen = j1 | j2
    for s, comp in enumerate(targets, start=1):
        if s in matched_target_ids or comp & chosen:
            continue
        j3.add(_cover_index(comp, p, warnings))

    prov = {i: "Jprime" for i in j1}
    prov.update({i: "Jdoubleprime" for i in j2})
    prov.update({i: "Jtripleprime" for i in j3})
    return SensorPlacement(n, p, frozenset(prov), prov, "general", tuple(warnings))


def place_class1(sys: SwitchedSystem) -> SensorPlacement:
    """Disjoint-path placement for memoryless constant inputs and state self-loops."""
    if not is_class1(sys):
        raise WrongClass("class1 placement needs Q_k = 0 in every mode and a self-loop on every state")
    n, p = sys.n, sys.p
    g = build_union_digraph(augment(sys))
    targets = target_sccs(scc_decompose(g))
    paths = max_flow_disjoint_paths(build_class1_network(g, p, targets))
    j1 = set(paths.endpoints())
    warnings = []
    j2 = set()
    for comp in targets:
        if not comp & j1:
            j2.add(_cover_index(comp, p, warnings))
    prov = {i: "Jprime" for i in j1}
    prov.update({i: "Jdoubleprime" for i in j2})
    return SensorPlacement(n, p, frozenset(prov), prov, "class1", tuple(warnings))


def place_nodal(sys: SwitchedSystem) -> SensorPlacement:
    """One sensor per target component; needs self-loops on all states and inputs."""
    if not is_class2(sys):
        raise WrongClass("nodal placement needs a self-loop on every state and every input")
    g = build_union_digraph(augment(sys))
    warnings = []
    J = {_cover_index(comp, sys.p, warnings) for comp in target_sccs(scc_decompose(g))}
    return SensorPlacement(
        sys.n, sys.p, frozenset(J), {i: "classSpecific" for i in J}, "nodal", tuple(warnings)
    )


_ALGORITHMS = {
    SystemClass.GENERAL: "general",
    SystemClass.CLASS1: "class1",
    SystemClass.CLASS2: "nodal",
}


def place(sys: SwitchedSystem, opts: PlacementOptions = PlacementOptions()) -> SensorPlacement:
    validate(sys, allow_zero_f_columns=opts.allow_zero_f_columns)
    algorithm = opts.algorithm
    if algorithm == "auto":
        algorithm = _ALGORITHMS[classify(sys)]
        # Disjoint paths over the union digraph ignore that stacked modes give
        # every state one row per mode, so the flow variant can overshoot the
        # minimum once m > 1.
        if algorithm == "class1" and sys.m > 1:
            algorithm = "general"
        elif opts.avoid_input_sensors and algorithm != "general":
            algorithm = "general"
    if algorithm == "general":
        pl = place_general(sys, opts)
    elif algorithm == "class1":
        pl = place_class1(sys)
    else:
        pl = place_nodal(sys)
    for w in pl.warnings:
        log.warning(w)
    if opts.verify:
        verdict = check_structural_observability(sys, pl)
        if not verdict.observable:
            raise InternalVerificationFailure(
                f"{algorithm} placement {sorted(pl.J)} fails verification: {'; '.join(verdict.diagnostics)}"
            )
    return pl
