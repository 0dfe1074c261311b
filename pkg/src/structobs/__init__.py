"""Structural state and input observability for switched LTI systems with unknown inputs."""

from .errors import (
    CapExceeded,
    CoordinateOutOfRange,
    DimensionMismatch,
    DocumentError,
    InternalVerificationFailure,
    StructobsError,
    ValidationError,
    WrongClass,
    ZeroDisturbanceColumn,
)
from .graph import Digraph, SccDecomposition, all_vertices_reach_outputs, build_union_digraph, scc_decompose, target_sccs
from .kernels import BACKEND
from .matching import Bipartite, Matching, grank, max_matching, min_weight_max_matching
from .placement import (
    PlacementOptions,
    SystemClass,
    classify,
    place,
    place_class1,
    place_general,
    place_nodal,
)
from .sysmodel import (
    AugmentedSystem,
    Mode,
    SensorPlacement,
    StructuralMatrix,
    SwitchedSystem,
    augment,
    make_system,
    placement_to_outputs,
    union_of,
    validate,
)
from .verify import Verdict, brute_force_min_placement, check_structural_observability, numeric_rank_probe

__version__ = "0.1.0"
