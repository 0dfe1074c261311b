"""JSON documents for systems and placements, and DOT export."""

import json

from .errors import CoordinateOutOfRange, DocumentError, ValidationError
from .graph import build_union_digraph, scc_decompose
from .sysmodel import (
    PROVENANCE_LABELS,
    Mode,
    SensorPlacement,
    StructuralMatrix,
    SwitchedSystem,
    augment,
    validate,
)


def _loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, exc.lineno, exc.colno) from None


def _int_field(doc, name, where="document"):
    if name not in doc:
        raise DocumentError(f"{where} is missing field {name!r}")
    value = doc[name]
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{where}: field {name!r} must be an integer")
    return value


def _matrix(raw, rows, cols, where):
    if not isinstance(raw, list):
        raise DocumentError(f"{where} must be a list of [row, col] pairs")
    coords = set()
    for item in raw:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
        ):
            raise DocumentError(f"{where}: entry {item!r} is not a [row, col] pair")
        i, j = item
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise CoordinateOutOfRange((i, j), (rows, cols), where)
        coords.add((i, j))
    return StructuralMatrix(rows, cols, frozenset(coords))


def parse_system(text, allow_zero_f_columns=False) -> SwitchedSystem:
    doc = _loads(text)
    if not isinstance(doc, dict):
        raise DocumentError("system document must be a JSON object")
    n = _int_field(doc, "n")
    p = _int_field(doc, "p")
    m = _int_field(doc, "m")
    if n < 1:
        raise ValidationError(f"state count must be positive, got n={n}")
    if p < 0:
        raise ValidationError(f"input count must be non-negative, got p={p}")
    modes_raw = doc.get("modes")
    if not isinstance(modes_raw, list):
        raise DocumentError("field 'modes' must be a list")
    if len(modes_raw) != m:
        raise ValidationError(f"m={m} but {len(modes_raw)} modes are listed")
    modes = []
    for k, md in enumerate(modes_raw, start=1):
        if not isinstance(md, dict):
            raise DocumentError(f"mode {k} must be an object with A, F, Q")
        shapes = {"A": (n, n), "F": (n, p), "Q": (p, p)}
        mats = {
            name: _matrix(md.get(name, []), *shape, where=f"mode {k} {name}")
            for name, shape in shapes.items()
        }
        modes.append(Mode(mats["A"], mats["F"], mats["Q"]))
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise DocumentError("field 'metadata' must be an object")
    sys = SwitchedSystem(n, p, tuple(modes), metadata)
    validate(sys, allow_zero_f_columns=allow_zero_f_columns)
    return sys


def system_to_dict(sys: SwitchedSystem) -> dict:
    doc = {
        "n": sys.n,
        "p": sys.p,
        "m": sys.m,
        "modes": [
            {name: [list(c) for c in getattr(md, name).coords] for name in ("A", "F", "Q")}
            for md in sys.modes
        ],
    }
    if sys.metadata:
        doc["metadata"] = dict(sys.metadata)
    return doc


def write_system(sys: SwitchedSystem) -> str:
    """Serialize with one line per mode; the output is valid JSON."""
    doc = system_to_dict(sys)
    modes = ",\n".join("    " + json.dumps(md) for md in doc["modes"])
    parts = [f'  "n": {sys.n}', f'  "p": {sys.p}', f'  "m": {sys.m}', f'  "modes": [\n{modes}\n  ]']
    if "metadata" in doc:
        meta = json.dumps(doc["metadata"], indent=2).replace("\n", "\n  ")
        parts.append(f'  "metadata": {meta}')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def placement_to_dict(pl: SensorPlacement) -> dict:
    return {
        "n": pl.n,
        "p": pl.p,
        "J": sorted(pl.J),
        "J_d": sorted(pl.J_d),
        "J_x_states": sorted(pl.J_x_states),
        "cardinality": pl.cardinality,
        "provenance": {str(i): pl.provenance[i] for i in sorted(pl.provenance)},
        "algorithm": pl.algorithm,
    }


def write_placement(pl: SensorPlacement) -> str:
    return json.dumps(placement_to_dict(pl), indent=2) + "\n"


def _int_list(doc, name):
    value = doc.get(name)
    if not isinstance(value, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        raise DocumentError(f"field {name!r} must be a list of integers")
    return value


def parse_placement(text) -> SensorPlacement:
    doc = _loads(text)
    if not isinstance(doc, dict):
        raise DocumentError("placement document must be a JSON object")
    n = _int_field(doc, "n", "placement")
    p = _int_field(doc, "p", "placement")
    J = _int_list(doc, "J")
    if len(set(J)) != len(J):
        raise DocumentError("J contains duplicates")
    prov_raw = doc.get("provenance", {})
    if not isinstance(prov_raw, dict):
        raise DocumentError("field 'provenance' must be an object")
    prov = {}
    for key, label in prov_raw.items():
        try:
            idx = int(key)
        except ValueError:
            raise DocumentError(f"provenance key {key!r} is not an index") from None
        if label not in PROVENANCE_LABELS:
            raise DocumentError(f"unknown provenance label {label!r}")
        prov[idx] = label
    algorithm = doc.get("algorithm", "")
    if not isinstance(algorithm, str):
        raise DocumentError("field 'algorithm' must be a string")
    try:
        pl = SensorPlacement(n, p, frozenset(J), prov, algorithm)
    except ValidationError as exc:
        raise DocumentError(str(exc)) from None
    for name, expected in (
        ("J_d", sorted(pl.J_d)),
        ("J_x_states", sorted(pl.J_x_states)),
    ):
        if name in doc and sorted(_int_list(doc, name)) != expected:
            raise DocumentError(f"{name} is inconsistent with J and p")
    if "cardinality" in doc and doc["cardinality"] != pl.cardinality:
        raise DocumentError("cardinality is inconsistent with J")
    return pl


def vertex_label(v, p):
    return f"d{v}" if v <= p else f"x{v - p}"


def export_dot(sys: SwitchedSystem, placement: SensorPlacement | None = None) -> str:
    """DOT text of the augmented union digraph with one cluster per SCC.

    Target components are drawn in blue; measured vertices get a square
    output node ``y<k>``.
    """
    aug = augment(sys)
    g = build_union_digraph(aug)
    dec = scc_decompose(g)
    p = sys.p
    lines = ["digraph system {", "  rankdir=LR;", "  node [shape=circle];"]
    for c, comp in enumerate(dec.components):
        target = dec.is_target[c]
        lines.append(f"  subgraph cluster_scc{c + 1} {{")
        lines.append("    style=dotted;")
        lines.append(f"    color={'blue' if target else 'black'};")
        lines.append(f'    label="{"target " if target else ""}SCC {c + 1}";')
        for v in sorted(comp):
            shade = ', style=filled, fillcolor="lightgray"' if v <= p else ""
            lines.append(f'    v{v} [label="{vertex_label(v, p)}"{shade}];')
        lines.append("  }")
    for u, v in g.edges():
        lines.append(f"  v{u} -> v{v};")
    if placement is not None:
        for k, v in enumerate(placement.indices, start=1):
            lines.append(f'  y{k} [label="y{k}", shape=square];')
            lines.append(f"  v{v} -> y{k};")
    lines.append("}")
    return "\n".join(lines) + "\n"
