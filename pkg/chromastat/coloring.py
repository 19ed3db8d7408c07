"""
Colour partitions, labelled colourings and the colouring sum.

These types are shared by the search engine and the brute-force oracle; nothing
here depends on how a colouring was found.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import vocabulary as vb
from .errors import GraphError
from .graph import Graph

logger = logging.getLogger(__name__)


def canonical_order(classes: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    """Size descending, ties by smallest vertex ascending"""
    sorted_classes = [tuple(sorted(c)) for c in classes]
    return tuple(sorted(sorted_classes, key=lambda c: (-len(c), c[0] if c else -1)))


@dataclass(frozen=True)
class ColorPartition:
    """
    Partition of the vertices into k nonempty classes, kept in canonical order.
    Independence of the classes is checked against a graph with check_proper.
    """
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, 'classes', canonical_order(self.classes))
        seen = set()
        for c in self.classes:
            if not c:
                raise GraphError("colour classes must be nonempty")
            if seen.intersection(c):
                raise GraphError("colour classes must be pairwise disjoint")
            seen.update(c)
        if seen != set(range(len(seen))):
            raise GraphError("colour classes must cover the vertices 0..n-1")

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> ColorPartition:
        classes = []
        for mask in masks:
            members = []
            v = 0
            while mask:
                if mask & 1:
                    members.append(v)
                mask >>= 1
                v += 1
            classes.append(members)
        return cls(tuple(tuple(c) for c in classes))

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    @property
    def key(self) -> tuple[tuple[int, ...], ...]:
        """Lexicographic comparison key used to pick a witness among tied optima"""
        return self.classes

    def check_proper(self, graph: Graph) -> None:
        if self.n != graph.n:
            raise GraphError(f"partition covers {self.n} vertices, graph has {graph.n}")
        for c in self.classes:
            members = set(c)
            for v in c:
                if graph.adjacency[v] & members:
                    raise GraphError(f"class {c} is not an independent set")

    def is_proper(self, graph: Graph) -> bool:
        try:
            self.check_proper(graph)
        except GraphError:
            return False
        return True


@dataclass(frozen=True)
class LabeledColoring:
    """
    A partition plus the colour index (1..k) given to each of its classes:
    labels[j] is the colour of partition.classes[j].
    """
    partition: ColorPartition
    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'labels', tuple(self.labels))
        if sorted(self.labels) != list(range(1, self.partition.k + 1)):
            raise GraphError(f"labels {self.labels} are not a bijection onto 1..{self.partition.k}")

    @classmethod
    def from_assignment(cls, assignment: Sequence[int]) -> LabeledColoring:
        """assignment[v] is the colour (1..k) of vertex v; every colour must be used"""
        by_color: dict[int, list[int]] = {}
        for v, color in enumerate(assignment):
            by_color.setdefault(color, []).append(v)
        partition = ColorPartition(tuple(tuple(members) for members in by_color.values()))
        color_of_class = {members[0]: color for color, members in by_color.items()}
        return cls(partition, tuple(color_of_class[c[0]] for c in partition.classes))

    @property
    def k(self) -> int:
        return self.partition.k

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def theta(self) -> tuple[int, ...]:
        """theta[i - 1] is the number of vertices coloured i"""
        sizes = [0] * self.k
        for c, label in zip(self.partition.classes, self.labels):
            sizes[label - 1] = len(c)
        return tuple(sizes)

    @property
    def assignment(self) -> tuple[int, ...]:
        colors = [0] * self.n
        for c, label in zip(self.partition.classes, self.labels):
            for v in c:
                colors[v] = label
        return tuple(colors)

    def class_of(self, color: int) -> tuple[int, ...]:
        return self.partition.classes[self.labels.index(color)]

    def reversed(self) -> LabeledColoring:
        """Colour i becomes k + 1 - i"""
        return LabeledColoring(self.partition, tuple(self.k + 1 - label for label in self.labels))

    def is_proper(self, graph: Graph) -> bool:
        return self.partition.is_proper(graph)

    def flat_dict(self, graph: Graph | None = None) -> list[dict]:
        """Vertices are rendered with the graph's input labels when a graph is given"""
        def name(v):
            return graph.labels[v] if graph is not None else v
        return [
            {vb.COLOR: color, vb.VERTICES: [name(v) for v in self.class_of(color)]}
            for color in range(1, self.k + 1)
            ]


@dataclass(frozen=True)
class SumExtremeResult:
    """Witness colouring of an extreme colouring sum and the size of the tie among optima"""
    coloring: LabeledColoring
    omega: int
    optimal_partition_count: int | None = None
    optimal_size_multisets: frozenset[tuple[int, ...]] | None = None

    @property
    def variance_ambiguous(self) -> bool | None:
        """None when the tied optima were not enumerated"""
        if self.optimal_size_multisets is None:
            return None
        return len(self.optimal_size_multisets) > 1


def coloring_sum(coloring: LabeledColoring) -> int:
    """omega = sum over colours i of i * theta(i)"""
    return sum(i * size for i, size in enumerate(coloring.theta, start=1))


def label_for_min(partition: ColorPartition) -> LabeledColoring:
    """
    Colour 1 on the largest class, 2 on the next and so on: by the rearrangement
    inequality no labelling of this partition has a smaller colouring sum.
    """
    return LabeledColoring(partition, tuple(range(1, partition.k + 1)))


def label_for_max(partition: ColorPartition) -> LabeledColoring:
    """Colour k on the largest class: the largest sum over labellings of this partition."""
    return LabeledColoring(partition, tuple(range(partition.k, 0, -1)))


def omega_for_min(sizes: Iterable[int]) -> int:
    return sum(i * s for i, s in enumerate(sorted(sizes, reverse=True), start=1))


def omega_for_max(sizes: Iterable[int]) -> int:
    return sum(i * s for i, s in enumerate(sorted(sizes), start=1))
