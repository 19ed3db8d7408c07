import pytest

from chromastat.coloring import (
    ColorPartition,
    LabeledColoring,
    coloring_sum,
    label_for_max,
    label_for_min,
    omega_for_max,
    omega_for_min,
    )
from chromastat.errors import GraphError


def test_canonical_order():
    partition = ColorPartition(((4,), (3, 1), (2, 0)))
    assert partition.classes == ((0, 2), (1, 3), (4,))
    assert partition.sizes == (2, 2, 1)
    assert partition.k == 3
    assert partition.n == 5


def test_partition_rejects_overlap():
    with pytest.raises(GraphError):
        ColorPartition(((0, 1), (1, 2)))
    with pytest.raises(GraphError):
        ColorPartition(((0,), (2,)))


def test_partition_properness(c5):
    assert ColorPartition(((0, 2), (1, 3), (4,))).is_proper(c5)
    assert not ColorPartition(((0, 1), (2, 4), (3,))).is_proper(c5)


def test_from_masks():
    assert ColorPartition.from_masks([0b00101, 0b01010, 0b10000]).classes == ((0, 2), (1, 3), (4,))


def test_labels_must_be_bijection():
    with pytest.raises(GraphError):
        LabeledColoring(ColorPartition(((0, 2), (1,))), (1, 1))


def test_from_assignment():
    coloring = LabeledColoring.from_assignment([2, 1, 2, 1, 3])
    assert coloring.theta == (2, 2, 1)
    assert coloring.assignment == (2, 1, 2, 1, 3)
    assert coloring.class_of(1) == (1, 3)


def test_coloring_sum_c5():
    partition = ColorPartition(((0, 2), (1, 3), (4,)))
    assert coloring_sum(label_for_min(partition)) == 9
    assert coloring_sum(label_for_max(partition)) == 11
    assert omega_for_min(partition.sizes) == 9
    assert omega_for_max(partition.sizes) == 11


def test_reversed_sum_identity():
    coloring = LabeledColoring.from_assignment([3, 1, 2, 1, 2, 1])
    k, n = coloring.k, coloring.n
    assert coloring_sum(coloring) + coloring_sum(coloring.reversed()) == (k + 1) * n
    assert coloring.reversed().theta == tuple(reversed(coloring.theta))


def test_flat_dict_uses_labels(p3):
    coloring = LabeledColoring.from_assignment([1, 2, 1])
    assert coloring.flat_dict(p3) == [
        {'color': 1, 'vertices': [1, 3]},
        {'color': 2, 'vertices': [2]},
    ]
    assert coloring.flat_dict()[0]['vertices'] == [0, 2]
