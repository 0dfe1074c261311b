import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from structobs import (
    CoordinateOutOfRange,
    DimensionMismatch,
    SensorPlacement,
    StructuralMatrix,
    ValidationError,
    ZeroDisturbanceColumn,
    augment,
    make_system,
    placement_to_outputs,
    union_of,
    validate,
)
from structobs.sysmodel import Mode, SwitchedSystem, output_matrix


def patterns(rows, cols):
    if rows == 0 or cols == 0:
        return st.just(StructuralMatrix.zeros(rows, cols))
    cells = st.tuples(st.integers(1, rows), st.integers(1, cols))
    return st.frozensets(cells, max_size=rows * cols).map(lambda e: StructuralMatrix(rows, cols, e))


def test_dense_round_trip():
    dense = np.array([[0, 1, 0], [2.5, 0, 0]])
    mat = StructuralMatrix.from_dense(dense)
    assert mat.coords == ((1, 2), (2, 1))
    np.testing.assert_array_equal(mat.to_dense(), dense != 0)


def test_coordinate_checks():
    with pytest.raises(CoordinateOutOfRange):
        StructuralMatrix(2, 2, frozenset({(3, 1)}))
    with pytest.raises(ValidationError):
        StructuralMatrix(-1, 2)
    assert StructuralMatrix(3, 0).nnz == 0


def test_identity_and_column_query():
    eye = StructuralMatrix.identity(3)
    assert eye.nnz == 3 and (2, 2) in eye and (1, 2) not in eye
    assert not eye.column_is_zero(3)
    assert StructuralMatrix.zeros(3, 2).column_is_zero(1)


@given(patterns(3, 4), patterns(3, 4), patterns(3, 4))
def test_union_laws(a, b, c):
    assert union_of([a, b]) == union_of([b, a])
    assert union_of([a, a]) == a
    assert union_of([union_of([a, b]), c]) == union_of([a, union_of([b, c])])


def test_union_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        union_of([StructuralMatrix.zeros(2, 2), StructuralMatrix.zeros(2, 3)])


@settings(max_examples=60)
@given(st.data())
def test_augment_commutes_with_union(data):
    n, p, m = data.draw(st.integers(1, 4)), data.draw(st.integers(0, 3)), data.draw(st.integers(1, 3))
    modes = tuple(
        Mode(data.draw(patterns(n, n)), data.draw(patterns(n, p)), data.draw(patterns(p, p))) for _ in range(m)
    )
    sys = SwitchedSystem(n, p, modes)
    merged = SwitchedSystem(
        n,
        p,
        (Mode(union_of([md.A for md in modes]), union_of([md.F for md in modes]), union_of([md.Q for md in modes])),),
    )
    assert augment(sys).union == augment(merged).aug_modes[0]


def test_augmented_layout(example1):
    aug = augment(example1)
    # F entry (2,1) sits at row p+2, column 1; A entry (3,1) at (p+3, p+1)
    assert (3, 1) in aug.aug_modes[0]
    assert (4, 2) in aug.aug_modes[0]
    assert aug.union.shape == (6, 6)
    # upper-right block is always empty
    assert not any(i <= 1 and j > 1 for i, j in aug.union.entries)


def test_validate_dimension_mismatch():
    bad = SwitchedSystem(
        2, 1, (Mode(StructuralMatrix.zeros(2, 2), StructuralMatrix.zeros(3, 1), StructuralMatrix.zeros(1, 1)),)
    )
    with pytest.raises(DimensionMismatch) as info:
        validate(bad)
    assert info.value.mode == 1


def test_zero_disturbance_column_uses_union():
    # column 1 of F is empty in mode 1 but not in mode 2: accepted
    sys = make_system(2, 1, [([], [], []), ([], [(1, 1)], [])])
    assert validate(sys).ok
    empty = make_system(2, 1, [([], [], [])])
    with pytest.raises(ZeroDisturbanceColumn):
        validate(empty)
    report = validate(empty, allow_zero_f_columns=True)
    assert report.ok and report.warnings


def test_validate_non_strict_collects():
    sys = SwitchedSystem(0, 0, ())
    report = validate(sys, strict=False)
    assert len(report.errors) == 2


def test_placement_views():
    pl = SensorPlacement(3, 2, frozenset({1, 4, 5}))
    assert pl.J_d == {1}
    assert pl.J_x == {4, 5}
    assert pl.J_x_states == {2, 3}
    assert pl.indices == (1, 4, 5)
    C, D = placement_to_outputs(pl, 3, 2)
    assert C.coords == ((1, 2), (2, 3))
    assert D.coords == ((1, 1),)
    assert output_matrix(pl).coords == ((1, 1), (2, 4), (3, 5))
    with pytest.raises(ValidationError):
        SensorPlacement(3, 2, frozenset({6}))
    with pytest.raises(ValidationError):
        placement_to_outputs(pl, 2, 3)


def test_permuted_keeps_modes(example2):
    rev = example2.permuted([2, 1, 0])
    assert rev.modes == example2.modes[::-1]
    assert rev.m == 3
