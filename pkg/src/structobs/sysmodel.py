"""Structural matrices, switched systems and the input/state augmentation.

All indices are 1-based. A structural matrix only records where its free
(nonzero) parameters sit; values never enter the model.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import CoordinateOutOfRange, DimensionMismatch, ValidationError, ZeroDisturbanceColumn

Coord = tuple[int, int]


@dataclass(frozen=True)
class StructuralMatrix:
    """Zero/nonzero pattern of a ``rows x cols`` matrix.

    ``entries`` holds the 1-based positions of the free entries. Equality is
    pattern equality. Zero-sized dimensions are allowed so that an ``n x 0``
    input matrix can describe a system without unknown inputs.
    """

    rows: int
    cols: int
    entries: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValidationError(f"negative matrix dimensions {self.rows}x{self.cols}")
        entries = frozenset((int(i), int(j)) for i, j in self.entries)
        for i, j in entries:
            if not (1 <= i <= self.rows and 1 <= j <= self.cols):
                raise CoordinateOutOfRange((i, j), (self.rows, self.cols))
        object.__setattr__(self, "entries", entries)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, frozenset())

    @classmethod
    def identity(cls, size):
        return cls(size, size, frozenset((i, i) for i in range(1, size + 1)))

    @classmethod
    def from_dense(cls, array):
        a = np.asarray(array)
        if a.ndim != 2:
            raise ValidationError("dense pattern must be two-dimensional")
        rr, cc = np.nonzero(a)
        return cls(a.shape[0], a.shape[1], frozenset(zip((rr + 1).tolist(), (cc + 1).tolist())))

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def nnz(self):
        return len(self.entries)

    @cached_property
    def coords(self) -> tuple:
        """Entries in row-major order."""
        return tuple(sorted(self.entries))

    def __contains__(self, coord):
        return tuple(coord) in self.entries

    def __iter__(self):
        return iter(self.coords)

    def to_dense(self):
        out = np.zeros((self.rows, self.cols), dtype=bool)
        for i, j in self.entries:
            out[i - 1, j - 1] = True
        return out

    def column_is_zero(self, j):
        return not any(c == j for _, c in self.entries)

    def __repr__(self):
        return f"StructuralMatrix({self.rows}x{self.cols}, {list(self.coords)})"


@dataclass(frozen=True)
class Mode:
    A: StructuralMatrix
    F: StructuralMatrix
    Q: StructuralMatrix


@dataclass(frozen=True)
class SwitchedSystem:
    """Structural switched LTI system with ``n`` states and ``p`` unknown inputs.

    Each mode is a triple ``(A, F, Q)`` of patterns with shapes ``n x n``,
    ``n x p`` and ``p x p``. Construction does not check consistency; call
    :func:`validate`.
    """

    n: int
    p: int
    modes: tuple
    metadata: Mapping = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        modes = tuple(m if isinstance(m, Mode) else Mode(*m) for m in self.modes)
        object.__setattr__(self, "modes", modes)

    @property
    def m(self):
        return len(self.modes)

    @property
    def size(self):
        return self.n + self.p

    def permuted(self, order: Sequence[int]):
        """Same system with modes reordered by 0-based ``order``."""
        return SwitchedSystem(self.n, self.p, tuple(self.modes[k] for k in order), self.metadata)


@dataclass(frozen=True)
class AugmentedSystem:
    """Per-mode patterns of the stacked state ``[d; x]`` and their union.

    Augmented vertex ``i <= p`` is input ``d_i``; ``i > p`` is state ``x_{i-p}``.
    """

    n: int
    p: int
    aug_modes: tuple
    union: StructuralMatrix

    @property
    def m(self):
        return len(self.aug_modes)

    @property
    def size(self):
        return self.n + self.p


@dataclass(frozen=True)
class SensorPlacement:
    """Dedicated sensors as a set of augmented indices.

    ``provenance`` maps each index to the step that selected it: one of
    ``Jprime``, ``Jdoubleprime``, ``Jtripleprime`` or ``classSpecific``.
    """

    n: int
    p: int
    J: frozenset
    provenance: Mapping = field(default_factory=dict, compare=False, hash=False)
    algorithm: str = field(default="", compare=False)
    warnings: tuple = field(default=(), compare=False)

    def __post_init__(self):
        J = frozenset(int(i) for i in self.J)
        size = self.n + self.p
        for i in J:
            if not 1 <= i <= size:
                raise ValidationError(f"sensor index {i} outside 1..{size}")
        object.__setattr__(self, "J", J)
        object.__setattr__(self, "provenance", dict(sorted(self.provenance.items())))
        extra = set(self.provenance) - J
        if extra:
            raise ValidationError(f"provenance given for unplaced indices {sorted(extra)}")

    @property
    def indices(self):
        return tuple(sorted(self.J))

    @property
    def J_d(self):
        return frozenset(i for i in self.J if i <= self.p)

    @property
    def J_x(self):
        return frozenset(i for i in self.J if i > self.p)

    @property
    def J_x_states(self):
        """Measured states by their original index ``i - p``."""
        return frozenset(i - self.p for i in self.J_x)

    @property
    def cardinality(self):
        return len(self.J)


PROVENANCE_LABELS = ("Jprime", "Jdoubleprime", "Jtripleprime", "classSpecific")


def union_of(matrices: Sequence[StructuralMatrix]) -> StructuralMatrix:
    """Entry-wise union of equally shaped patterns."""
    if not matrices:
        raise ValidationError("union of an empty list is undefined")
    rows, cols = matrices[0].shape
    entries = set()
    for k, mat in enumerate(matrices, start=1):
        if mat.shape != (rows, cols):
            raise DimensionMismatch(k, f"shape {mat.rows}x{mat.cols} differs from {rows}x{cols}")
        entries |= mat.entries
    return StructuralMatrix(rows, cols, frozenset(entries))


def augment_mode(mode: Mode, n: int, p: int) -> StructuralMatrix:
    entries = set(mode.Q.entries)
    entries.update((i + p, j) for i, j in mode.F.entries)
    entries.update((i + p, j + p) for i, j in mode.A.entries)
    return StructuralMatrix(n + p, n + p, frozenset(entries))


def augment(sys: SwitchedSystem) -> AugmentedSystem:
    aug = tuple(augment_mode(md, sys.n, sys.p) for md in sys.modes)
    return AugmentedSystem(sys.n, sys.p, aug, union_of(aug))


@dataclass
class ValidationReport:
    errors: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.errors

    def raise_if_invalid(self):
        if self.errors:
            raise self.errors[0]


def validate(sys: SwitchedSystem, allow_zero_f_columns=False, strict=True) -> ValidationReport:
    """Check dimensions and the no-zero-column assumption on the union of the ``F`` patterns.

    With ``strict`` the first problem is raised; otherwise every problem is
    collected in the returned report.
    """
    report = ValidationReport()
    n, p = sys.n, sys.p
    if n < 1:
        report.errors.append(ValidationError(f"state count must be positive, got n={n}"))
    if p < 0:
        report.errors.append(ValidationError(f"input count must be non-negative, got p={p}"))
    if sys.m < 1:
        report.errors.append(ValidationError("a switched system needs at least one mode"))
    if report.errors:
        if strict:
            report.raise_if_invalid()
        return report

    expected = {"A": (n, n), "F": (n, p), "Q": (p, p)}
    for k, mode in enumerate(sys.modes, start=1):
        for name, shape in expected.items():
            mat = getattr(mode, name)
            if mat.shape != shape:
                report.errors.append(
                    DimensionMismatch(k, f"{name} is {mat.rows}x{mat.cols}, expected {shape[0]}x{shape[1]}")
                )

    if not report.errors and p > 0:
        hit = set()
        for mode in sys.modes:
            hit.update(j for _, j in mode.F.entries)
        for j in range(1, p + 1):
            if j not in hit:
                err = ZeroDisturbanceColumn(j)
                if allow_zero_f_columns:
                    report.warnings.append(str(err))
                else:
                    report.errors.append(err)
    if strict:
        report.raise_if_invalid()
    return report


def placement_to_outputs(pl: SensorPlacement, n: int, p: int):
    """Dedicated output patterns ``(C, D)`` for a placement.

    Rows follow ascending augmented index; each row has exactly one entry.
    """
    if (pl.n, pl.p) != (n, p):
        raise ValidationError(f"placement built for n={pl.n}, p={pl.p}, not n={n}, p={p}")
    states = sorted(pl.J_x_states)
    inputs = sorted(pl.J_d)
    C = StructuralMatrix(len(states), n, frozenset((r, j) for r, j in enumerate(states, start=1)))
    D = StructuralMatrix(len(inputs), p, frozenset((r, j) for r, j in enumerate(inputs, start=1)))
    return C, D


def output_matrix(pl: SensorPlacement) -> StructuralMatrix:
    """Combined ``[D C]`` pattern over the augmented columns."""
    return StructuralMatrix(
        len(pl.J), pl.n + pl.p, frozenset((r, j) for r, j in enumerate(pl.indices, start=1))
    )


def make_system(n: int, p: int, modes: Iterable, metadata=None) -> SwitchedSystem:
    """Convenience builder taking per-mode ``(A, F, Q)`` coordinate lists."""
    built = []
    for A, F, Q in modes:
        built.append(
            Mode(
                StructuralMatrix(n, n, frozenset(map(tuple, A))),
                StructuralMatrix(n, p, frozenset(map(tuple, F))),
                StructuralMatrix(p, p, frozenset(map(tuple, Q))),
            )
        )
    return SwitchedSystem(n, p, tuple(built), dict(metadata or {}))
