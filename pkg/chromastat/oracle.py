"""
Brute-force ground truth for small graphs.

Colours are tried as a base-k counter over the vertices in index order, each
vertex checked against its already coloured neighbours. Nothing here is shared
with the search engine apart from the Graph type and coloring_sum.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

from .coloring import LabeledColoring, coloring_sum
from .errors import Error, InstanceTooLargeError
from .graph import Graph

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_MAX_N = 10


@dataclass(frozen=True)
class OracleSummary:
    chi: int
    omega_min: int
    omega_max: int
    all_optimal_size_multisets_min: frozenset[tuple[int, ...]]
    all_optimal_size_multisets_max: frozenset[tuple[int, ...]]
    coloring_count: int


def _check_cap(graph: Graph, max_vertices: int | None) -> None:
    limit = DEFAULT_ORACLE_MAX_N if max_vertices is None else max_vertices
    if graph.n > limit:
        raise InstanceTooLargeError(n=graph.n, limit=limit, what="oracle")


def enumerate_colorings(graph: Graph, k: int, max_vertices: int | None = None) -> Iterator[LabeledColoring]:
    """Every proper colouring V -> {1..k} that uses all k colours, once each"""
    _check_cap(graph, max_vertices)
    if not 1 <= k <= graph.n:
        raise Error(f"k must be in 1..{graph.n}, got {k}")
    colors = [0] * graph.n

    def assign(v: int) -> Iterator[LabeledColoring]:
        if v == graph.n:
            if len(set(colors)) == k:
                yield LabeledColoring.from_assignment(colors)
            return
        for color in range(1, k + 1):
            if all(colors[u] != color for u in graph.adjacency[v] if u < v):
                colors[v] = color
                yield from assign(v + 1)
        colors[v] = 0

    yield from assign(0)


def oracle_summary(graph: Graph, max_vertices: int | None = None) -> OracleSummary:
    _check_cap(graph, max_vertices)
    for k in range(1, graph.n + 1):
        colorings = list(enumerate_colorings(graph, k, max_vertices))
        if colorings:
            break
    sums = [coloring_sum(c) for c in colorings]
    omega_min, omega_max = min(sums), max(sums)
    multisets_min = frozenset(tuple(sorted(c.theta, reverse=True))
                              for c, s in zip(colorings, sums) if s == omega_min)
    multisets_max = frozenset(tuple(sorted(c.theta, reverse=True))
                              for c, s in zip(colorings, sums) if s == omega_max)
    logger.debug("oracle on %r: chi=%s over %s colourings", graph, k, len(colorings))
    return OracleSummary(
        chi=k,
        omega_min=omega_min,
        omega_max=omega_max,
        all_optimal_size_multisets_min=multisets_min,
        all_optimal_size_multisets_max=multisets_max,
        coloring_count=len(colorings),
        )
