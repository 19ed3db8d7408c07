"""
Exact chromatic number and branch and bound over the minimum proper colourings.

Colour classes are bit masks over the vertices. The searches visit vertices in a
fixed DSATUR order and open classes in first-use order, so every unordered
partition is reached exactly once.
"""
from __future__ import annotations

import logging
from typing import Iterator

from .coloring import (
    ColorPartition,
    LabeledColoring,
    SumExtremeResult,
    label_for_max,
    label_for_min,
    omega_for_max,
    omega_for_min,
    )
from .errors import ChromaticMismatchError, InstanceTooLargeError
from .graph import Graph

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 64
DEFAULT_TIE_LIMIT = 10000
DEFAULT_TIE_NODE_LIMIT = 200000


def check_size(graph: Graph, max_vertices: int | None) -> None:
    limit = DEFAULT_MAX_N if max_vertices is None else max_vertices
    if graph.n > limit:
        raise InstanceTooLargeError(n=graph.n, limit=limit)


def _dsatur(graph: Graph) -> tuple[list[int], list[int]]:
    """
    Returns the 0-based colour of every vertex and the order vertices were coloured in.
    Next vertex: most distinct neighbour colours, then highest degree, then lowest index.
    """
    colors = [-1] * graph.n
    saturation = [set() for _ in range(graph.n)]
    order = []
    for _ in range(graph.n):
        best = None
        best_key = None
        for v in range(graph.n):
            if colors[v] != -1:
                continue
            key = (len(saturation[v]), graph.degree(v))
            if best_key is None or key > best_key:
                best, best_key = v, key
        color = 0
        while color in saturation[best]:
            color += 1
        colors[best] = color
        order.append(best)
        for u in graph.adjacency[best]:
            saturation[u].add(color)
    return colors, order


def greedy_dsatur(graph: Graph) -> LabeledColoring:
    """Proper colouring whose colour count is an upper bound on chi"""
    colors, _ = _dsatur(graph)
    return LabeledColoring.from_assignment([c + 1 for c in colors])


def clique_lower_bound(graph: Graph) -> int:
    """
    Largest clique found by greedy growth from every start vertex, visiting
    candidates by degree descending then index.
    """
    by_degree = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
    best = 1
    for start in by_degree:
        if graph.degree(start) < best:
            break
        clique = [start]
        candidates = set(graph.adjacency[start])
        for v in by_degree:
            if v in candidates:
                clique.append(v)
                candidates &= graph.adjacency[v]
        best = max(best, len(clique))
    return best


def _colorable(graph: Graph, k: int, order: list[int]) -> bool:
    masks = graph.masks
    classes: list[int] = []

    def extend(pos: int) -> bool:
        if pos == graph.n:
            return True
        v = order[pos]
        bit = 1 << v
        for j in range(len(classes)):
            if not classes[j] & masks[v]:
                classes[j] |= bit
                if extend(pos + 1):
                    return True
                classes[j] ^= bit
        if len(classes) < k:
            classes.append(bit)
            if extend(pos + 1):
                return True
            classes.pop()
        return False

    return extend(0)


def chromatic_number(graph: Graph, max_vertices: int | None = None) -> int:
    """
    Exact chi by backtracking on every k between the clique bound and the DSATUR bound.
    """
    check_size(graph, max_vertices)
    low = clique_lower_bound(graph)
    colors, order = _dsatur(graph)
    high = max(colors) + 1
    logger.debug("chi bounds for %r: [%s, %s]", graph, low, high)
    for k in range(low, high):
        if _colorable(graph, k, order):
            return k
    return high


def _partitions(graph: Graph, k: int, order: list[int]) -> Iterator[ColorPartition]:
    masks = graph.masks
    classes: list[int] = []

    def extend(pos: int) -> Iterator[ColorPartition]:
        remaining = graph.n - pos
        if remaining < k - len(classes):
            return
        if remaining == 0:
            yield ColorPartition.from_masks(classes)
            return
        v = order[pos]
        bit = 1 << v
        for j in range(len(classes)):
            if not classes[j] & masks[v]:
                classes[j] |= bit
                yield from extend(pos + 1)
                classes[j] ^= bit
        if len(classes) < k:
            classes.append(bit)
            yield from extend(pos + 1)
            classes.pop()

    yield from extend(0)


def enumerate_chi_partitions(graph: Graph, k: int, max_vertices: int | None = None) -> Iterator[ColorPartition]:
    """
    Every partition of the vertices into exactly k = chi nonempty independent sets, once each.
    """
    chi = chromatic_number(graph, max_vertices)
    if k != chi:
        raise ChromaticMismatchError(k=k, chi=chi)
    _, order = _dsatur(graph)
    yield from _partitions(graph, k, order)


class _ExtremeSearch:
    """
    Branch and bound for the partitions of minimum omega_min.

    omega_max = (k + 1) n - omega_min holds partition by partition, so the same
    partitions are optimal for the maximum sum and one search serves both.

    With class sizes sorted descending, omega_min = k n - sum of the prefix sums
    S_1..S_(k-1). Each class has a cap: its size plus an independence bound on the
    unplaced vertices it can still take. S_j is at most the j largest caps together,
    and at most n minus the k - j smallest lower sizes.

    Tied optima are enumerated while there are at most tie_limit of them and the
    search stays under tie_node_limit nodes. Past either budget the search only
    proves the optimum and the tie is reported as unknown.
    """

    def __init__(self, graph: Graph, k: int, exhaustive_ties: bool,
                 tie_limit: int = DEFAULT_TIE_LIMIT, tie_node_limit: int = DEFAULT_TIE_NODE_LIMIT):
        self.graph = graph
        self.k = k
        self.exhaustive_ties = exhaustive_ties
        self.tie_limit = tie_limit
        self.tie_node_limit = tie_node_limit
        self.order = _dsatur(graph)[1]
        # unplaced vertices once the first pos vertices of the order are placed
        self.unplaced = [0] * (graph.n + 1)
        for pos in range(graph.n - 1, -1, -1):
            self.unplaced[pos] = self.unplaced[pos + 1] | (1 << self.order[pos])
        self.best = None
        self.witness = None
        self.count = 0
        self.multisets = set()
        self.nodes = 0
        self.truncated = False

    def independence_bound(self, mask: int) -> int:
        """|S| minus a greedy matching of S, an upper bound on the independence number"""
        masks = self.graph.masks
        count = 0
        free = mask
        while free:
            low = free & -free
            free ^= low
            mate = masks[low.bit_length() - 1] & free
            if mate:
                free ^= mate & -mate
            count += 1
        return count

    def bound(self, sizes: list[int], neighbors: list[int], pos: int) -> int | None:
        """Lower bound on omega_min below this node, None when no completion uses k classes"""
        n, k = self.graph.n, self.k
        unplaced = self.unplaced[pos]
        missing = k - len(sizes)
        caps = [size + self.independence_bound(unplaced & ~near) for size, near in zip(sizes, neighbors)]
        if missing:
            fresh = self.independence_bound(unplaced)
            if sum(caps) + fresh * missing < n:
                return None
            caps.extend([min(fresh, n - pos - missing + 1)] * missing)
        elif sum(caps) < n:
            return None
        caps.sort(reverse=True)
        lows = sorted(sizes + [1] * missing)
        total = 0
        top = 0
        for j in range(1, k):
            top += caps[j - 1]
            total += min(top, n - sum(lows[:k - j]))
        return k * n - total

    def pruned(self, bound: int | None) -> bool:
        if bound is None:
            return True
        if self.best is None:
            return False
        if self.exhaustive_ties and not self.truncated:
            return bound > self.best
        return bound >= self.best

    def leaf(self, classes: list[int], sizes: list[int]) -> None:
        value = omega_for_min(sizes)
        if self.best is None or value < self.best:
            self.best = value
            self.witness = ColorPartition.from_masks(classes)
            self.count = 1
            self.multisets = {tuple(sorted(sizes, reverse=True))}
            self.truncated = False
        elif value == self.best:
            partition = ColorPartition.from_masks(classes)
            if partition.key < self.witness.key:
                self.witness = partition
            if not self.truncated:
                self.count += 1
                self.multisets.add(tuple(sorted(sizes, reverse=True)))
                if self.count > self.tie_limit:
                    self.truncated = True

    def run(self) -> _ExtremeSearch:
        masks = self.graph.masks
        n = self.graph.n
        classes: list[int] = []
        sizes: list[int] = []
        neighbors: list[int] = []

        def extend(pos: int) -> None:
            self.nodes += 1
            if self.exhaustive_ties and self.nodes > self.tie_node_limit:
                self.truncated = True
            if n - pos < self.k - len(classes):
                return
            if pos == n:
                self.leaf(classes, sizes)
                return
            if classes and self.pruned(self.bound(sizes, neighbors, pos)):
                return
            v = self.order[pos]
            bit = 1 << v
            for j in range(len(classes)):
                if not classes[j] & masks[v]:
                    near = neighbors[j]
                    classes[j] |= bit
                    sizes[j] += 1
                    neighbors[j] |= masks[v]
                    extend(pos + 1)
                    classes[j] ^= bit
                    sizes[j] -= 1
                    neighbors[j] = near
            if len(classes) < self.k:
                classes.append(bit)
                sizes.append(1)
                neighbors.append(masks[v])
                extend(pos + 1)
                classes.pop()
                sizes.pop()
                neighbors.pop()

        extend(0)
        logger.debug("extreme-sum search on %r: omega_min=%s, %s nodes, %s optimal partitions",
                     self.graph, self.best, self.nodes, self.count)
        if self.exhaustive_ties and self.truncated:
            logger.info("tie enumeration on %r stopped after %s optima and %s nodes, "
                        "variance ambiguity unknown", self.graph, self.count, self.nodes)
        return self

    def result(self, maximize: bool) -> SumExtremeResult:
        if maximize:
            coloring = label_for_max(self.witness)
            omega = omega_for_max(self.witness.sizes)
        else:
            coloring = label_for_min(self.witness)
            omega = self.best
        if not self.exhaustive_ties or self.truncated:
            return SumExtremeResult(coloring=coloring, omega=omega)
        return SumExtremeResult(
            coloring=coloring,
            omega=omega,
            optimal_partition_count=self.count,
            optimal_size_multisets=frozenset(self.multisets),
            )


def _search(graph: Graph, max_vertices: int | None, exhaustive_ties: bool, chi: int | None,
            tie_limit: int, tie_node_limit: int) -> _ExtremeSearch:
    if chi is None:
        chi = chromatic_number(graph, max_vertices)
    else:
        check_size(graph, max_vertices)
    return _ExtremeSearch(graph, chi, exhaustive_ties, tie_limit, tie_node_limit).run()


def min_sum_coloring(graph: Graph, max_vertices: int | None = None, exhaustive_ties: bool = True,
                     chi: int | None = None, tie_limit: int = DEFAULT_TIE_LIMIT,
                     tie_node_limit: int = DEFAULT_TIE_NODE_LIMIT) -> SumExtremeResult:
    """
    Among proper colourings with exactly chi colours, one with the minimum colouring sum.
    With exhaustive_ties the witness is the lexicographically least canonical optimum,
    unless the tie budgets run out.
    """
    return _search(graph, max_vertices, exhaustive_ties, chi, tie_limit, tie_node_limit).result(maximize=False)


def max_sum_coloring(graph: Graph, max_vertices: int | None = None, exhaustive_ties: bool = True,
                     chi: int | None = None, tie_limit: int = DEFAULT_TIE_LIMIT,
                     tie_node_limit: int = DEFAULT_TIE_NODE_LIMIT) -> SumExtremeResult:
    """Mirror of min_sum_coloring for the maximum colouring sum"""
    return _search(graph, max_vertices, exhaustive_ties, chi, tie_limit, tie_node_limit).result(maximize=True)


def extreme_sum_colorings(graph: Graph, max_vertices: int | None = None, exhaustive_ties: bool = True,
                          chi: int | None = None, tie_limit: int = DEFAULT_TIE_LIMIT,
                          tie_node_limit: int = DEFAULT_TIE_NODE_LIMIT
                          ) -> tuple[SumExtremeResult, SumExtremeResult]:
    """min_sum_coloring and max_sum_coloring from a single search"""
    search = _search(graph, max_vertices, exhaustive_ties, chi, tie_limit, tie_node_limit)
    return search.result(maximize=False), search.result(maximize=True)
