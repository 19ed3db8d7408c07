import random
import time
from fractions import Fraction as F

import networkx as nx
import pytest

from chromastat.coloring import coloring_sum
from chromastat.engine import (
    chromatic_number,
    clique_lower_bound,
    enumerate_chi_partitions,
    extreme_sum_colorings,
    greedy_dsatur,
    max_sum_coloring,
    min_sum_coloring,
    )
from chromastat.errors import ChromaticMismatchError, InstanceTooLargeError
from chromastat.graph import FamilySpec, Graph, generate_family
from chromastat.oracle import oracle_summary
from chromastat.stats import summarize
from chromastat.verification import random_connected_graph

SEARCH_SECONDS = 60


def family(name, n=None, parts=None):
    return generate_family(FamilySpec.from_name(name, n=n, parts=parts))


@pytest.mark.parametrize("n", range(1, 9))
def test_chi_complete(n):
    assert chromatic_number(family("complete", n)) == n


@pytest.mark.parametrize("graph, chi", [
    (family("cycle", 6), 2),
    (family("cycle", 5), 3),
    (family("wheel", 6), 4),
    (family("wheel", 5), 3),
    (family("path", 1), 1),
    (family("star", 5), 2),
    (family("complete_multipartite", parts=(3, 2, 1)), 3),
    # Grotzsch: triangle-free but chi 4
    (Graph.from_networkx(nx.mycielski_graph(4)), 4),
])
def test_chi(graph, chi):
    assert chromatic_number(graph) == chi


def test_clique_lower_bound(c5):
    assert clique_lower_bound(family("complete", 5)) == 5
    assert clique_lower_bound(c5) == 2
    assert clique_lower_bound(Graph.from_edges(3, [])) == 1


def test_greedy_dsatur_is_proper(w6):
    coloring = greedy_dsatur(w6)
    assert coloring.is_proper(w6)
    assert coloring.k >= chromatic_number(w6)


def test_chi_size_cap():
    graph = family("path", 20)
    with pytest.raises(InstanceTooLargeError) as e:
        chromatic_number(graph, max_vertices=10)
    assert e.value.exit_code == 3
    assert chromatic_number(graph, max_vertices=20) == 2


def test_enumerate_chi_partitions_c5(c5):
    partitions = list(enumerate_chi_partitions(c5, 3))
    assert len(partitions) == 5
    assert len({p.key for p in partitions}) == 5
    assert all(p.is_proper(c5) and p.k == 3 for p in partitions)


def test_enumerate_chi_partitions_wrong_k(c5):
    with pytest.raises(ChromaticMismatchError):
        list(enumerate_chi_partitions(c5, 4))


def test_min_sum_c5(c5):
    result = min_sum_coloring(c5)
    assert result.omega == 9
    assert coloring_sum(result.coloring) == 9
    assert result.coloring.theta == (2, 2, 1)
    assert result.coloring.partition.classes == ((0, 2), (1, 3), (4,))
    assert result.optimal_partition_count == 5
    assert result.variance_ambiguous is False


def test_max_sum_c5(c5):
    result = max_sum_coloring(c5)
    assert result.omega == 11
    assert result.coloring.theta == (1, 2, 2)
    assert result.coloring.is_proper(c5)


def test_sum_extremes_p5(p5):
    assert min_sum_coloring(p5).omega == 7
    assert max_sum_coloring(p5).omega == 8


def test_sum_extremes_star(star4):
    assert min_sum_coloring(star4).omega == 5
    assert max_sum_coloring(star4).omega == 7


def test_ties_off_gives_same_omega(w6):
    exhaustive = min_sum_coloring(w6)
    quick = min_sum_coloring(w6, exhaustive_ties=False)
    assert quick.omega == exhaustive.omega == 13
    assert quick.variance_ambiguous is None
    assert quick.optimal_partition_count is None


def test_min_sum_deterministic(w6):
    assert min_sum_coloring(w6).coloring == min_sum_coloring(w6).coloring


# two optimal partitions with class sizes (4, 4, 1) and (5, 2, 2), both omega 15
AMBIGUOUS_EDGES = [(0, 5), (0, 7), (0, 8), (1, 4), (1, 5), (1, 6), (2, 6), (2, 7), (3, 6), (3, 7),
                   (4, 7), (5, 7), (7, 8)]


def test_variance_ambiguous_graph():
    graph = Graph.from_edges(9, AMBIGUOUS_EDGES)
    low, high = extreme_sum_colorings(graph)
    assert low.omega == 15
    assert high.omega == 4 * 9 - 15
    assert low.variance_ambiguous is True
    assert high.variance_ambiguous is True
    assert low.optimal_size_multisets == frozenset({(4, 4, 1), (5, 2, 2)})
    truth = oracle_summary(graph)
    assert set(truth.all_optimal_size_multisets_min) == {(4, 4, 1), (5, 2, 2)}


def test_single_search_matches_separate_searches(w6):
    low, high = extreme_sum_colorings(w6)
    assert low == min_sum_coloring(w6)
    assert high == max_sum_coloring(w6)


def test_tie_limit_leaves_ambiguity_unknown():
    # 41 optimal partitions of C41, one per singleton class
    c41 = family("cycle", 41)
    full = min_sum_coloring(c41)
    assert full.optimal_partition_count == 41
    assert full.variance_ambiguous is False
    capped = min_sum_coloring(c41, tie_limit=5)
    assert capped.omega == full.omega == 63
    assert capped.optimal_partition_count is None
    assert capped.variance_ambiguous is None
    assert capped.coloring.is_proper(c41)


def test_tie_node_limit_leaves_ambiguity_unknown():
    c41 = family("cycle", 41)
    capped = min_sum_coloring(c41, tie_node_limit=10)
    assert capped.omega == 63
    assert capped.variance_ambiguous is None


def test_large_odd_cycle_is_fast():
    start = time.perf_counter()
    summary = summarize(family("cycle", 41))
    assert time.perf_counter() - start < SEARCH_SECONDS
    n = 41
    assert summary.chi == 3
    assert summary.mean_chi == F(3 * n + 3, 2 * n) == F(63, 41)
    assert summary.var_chi == F(n * n + 8 * n - 9, 4 * n * n) == F(500, 1681)
    assert summary.mean_chi_plus == F(5 * n - 3, 2 * n)
    assert summary.variance_ambiguous_chi is False


def test_sparse_random_graph_is_fast():
    graph = random_connected_graph(40, 0.08, random.Random(7))
    start = time.perf_counter()
    summary = summarize(graph)
    assert time.perf_counter() - start < SEARCH_SECONDS
    assert summary.witness_chi.is_proper(graph)
    assert summary.witness_chi.k == summary.chi
    assert summary.omega_min + summary.omega_max == (summary.chi + 1) * graph.n
    assert min_sum_coloring(graph, exhaustive_ties=False, chi=summary.chi).omega == summary.omega_min
