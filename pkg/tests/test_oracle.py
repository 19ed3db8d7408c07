import pytest

from chromastat.errors import InstanceTooLargeError
from chromastat.graph import FamilySpec, Graph, generate_family
from chromastat.oracle import enumerate_colorings, oracle_summary


def test_enumerate_colorings_triangle():
    triangle = generate_family(FamilySpec.from_name("complete", n=3))
    colorings = list(enumerate_colorings(triangle, 3))
    assert len(colorings) == 6
    assert list(enumerate_colorings(triangle, 2)) == []


def test_enumerate_colorings_are_proper_and_surjective(c5):
    colorings = list(enumerate_colorings(c5, 3))
    # 3-colourings of C5: (k-1)^n + (-1)^n (k-1) = 30, all of them onto
    assert len(colorings) == 30
    assert all(c.is_proper(c5) and c.k == 3 for c in colorings)


def test_oracle_c5(c5):
    truth = oracle_summary(c5)
    assert truth.chi == 3
    assert (truth.omega_min, truth.omega_max) == (9, 11)
    assert truth.all_optimal_size_multisets_min == frozenset({(2, 2, 1)})
    assert truth.coloring_count == 30


def test_oracle_star(star4):
    truth = oracle_summary(star4)
    assert (truth.omega_min, truth.omega_max) == (5, 7)


def test_oracle_edgeless():
    truth = oracle_summary(Graph.from_edges(3, []))
    assert truth.chi == 1
    assert truth.omega_min == truth.omega_max == 3


def test_oracle_cap():
    path = generate_family(FamilySpec.from_name("path", n=11))
    with pytest.raises(InstanceTooLargeError) as e:
        oracle_summary(path)
    assert e.value.exit_code == 3
    assert oracle_summary(path, max_vertices=11).chi == 2
