"""
Colour-class distributions: p.m.f., moments, variance, shape and the chromatic summary.

Everything is computed with fractions.Fraction; there is no floating point here.
"""
from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from . import vocabulary as vb
from .coloring import LabeledColoring, coloring_sum
from .engine import (
    DEFAULT_TIE_LIMIT,
    DEFAULT_TIE_NODE_LIMIT,
    chromatic_number,
    enumerate_chi_partitions,
    extreme_sum_colorings,
    )
from .errors import Error, InstanceTooLargeError
from .graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ColoringDistribution:
    """p(i) = theta(i) / n for the colours i = 1..k"""
    n: int
    probabilities: tuple[Fraction, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.probabilities):
            raise Error("every colour of a surjective colouring has positive probability")
        if sum(self.probabilities) != 1:
            raise Error(f"probabilities sum to {sum(self.probabilities)}, not 1")

    @property
    def k(self) -> int:
        return len(self.probabilities)


def as_ratio(value: Fraction | int) -> str:
    """Exact "p/q" form in lowest terms, q > 0, integers included"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def pmf(coloring: LabeledColoring) -> ColoringDistribution:
    n = coloring.n
    return ColoringDistribution(n=n, probabilities=tuple(Fraction(size, n) for size in coloring.theta))


def moment(dist: ColoringDistribution, r: int) -> Fraction:
    """r-th raw moment, sum of i**r * p(i)"""
    if r < 1:
        raise Error(f"moment order must be >= 1, got {r}")
    return sum((i ** r * p for i, p in enumerate(dist.probabilities, start=1)), Fraction(0))


def mean(dist: ColoringDistribution) -> Fraction:
    return moment(dist, 1)


def variance(dist: ColoringDistribution) -> Fraction:
    """Second moment minus the square of the mean"""
    return moment(dist, 2) - mean(dist) ** 2


class ShapeEnum(enum.Enum):
    """distribution shape enum"""
    UNIFORM = "uniform"
    TWO_POINT = "two_point"
    OTHER = "other"


@dataclass(frozen=True)
class Classification:
    """
    shape is uniform when every p(i) = 1/k, else two_point when k = 2, else other.
    two_point reports k = 2 regardless of which shape won.
    """
    shape: ShapeEnum
    k: int

    @property
    def two_point(self) -> bool:
        return self.k == 2

    def __str__(self):
        if self.shape is ShapeEnum.UNIFORM:
            return f"uniform({self.k})"
        return self.shape.value


def classify(dist: ColoringDistribution) -> Classification:
    if all(p == Fraction(1, dist.k) for p in dist.probabilities):
        return Classification(ShapeEnum.UNIFORM, dist.k)
    if dist.k == 2:
        return Classification(ShapeEnum.TWO_POINT, dist.k)
    return Classification(ShapeEnum.OTHER, dist.k)


@dataclass(frozen=True)
class ChromaticSummary:
    """chi-chromatic and chi+-chromatic mean and variance of a graph, with their witnesses"""
    n: int
    chi: int
    omega_min: int
    omega_max: int
    witness_chi: LabeledColoring
    witness_chi_plus: LabeledColoring
    variance_ambiguous_chi: bool | None
    variance_ambiguous_chi_plus: bool | None
    optimal_partition_count_chi: int | None = None
    optimal_partition_count_chi_plus: int | None = None

    @property
    def pmf_chi(self) -> ColoringDistribution:
        return pmf(self.witness_chi)

    @property
    def pmf_chi_plus(self) -> ColoringDistribution:
        return pmf(self.witness_chi_plus)

    @property
    def mean_chi(self) -> Fraction:
        return Fraction(self.omega_min, self.n)

    @property
    def mean_chi_plus(self) -> Fraction:
        return Fraction(self.omega_max, self.n)

    @property
    def var_chi(self) -> Fraction:
        return variance(self.pmf_chi)

    @property
    def var_chi_plus(self) -> Fraction:
        return variance(self.pmf_chi_plus)

    @property
    def classification_chi(self) -> Classification:
        return classify(self.pmf_chi)

    @property
    def classification_chi_plus(self) -> Classification:
        return classify(self.pmf_chi_plus)


def summarize(graph: Graph, max_vertices: int | None = None, exhaustive_ties: bool = True,
              tie_limit: int = DEFAULT_TIE_LIMIT, tie_node_limit: int = DEFAULT_TIE_NODE_LIMIT) -> ChromaticSummary:
    chi = chromatic_number(graph, max_vertices)
    low, high = extreme_sum_colorings(graph, max_vertices, exhaustive_ties, chi, tie_limit, tie_node_limit)
    summary = ChromaticSummary(
        n=graph.n,
        chi=chi,
        omega_min=low.omega,
        omega_max=high.omega,
        witness_chi=low.coloring,
        witness_chi_plus=high.coloring,
        variance_ambiguous_chi=low.variance_ambiguous,
        variance_ambiguous_chi_plus=high.variance_ambiguous,
        optimal_partition_count_chi=low.optimal_partition_count,
        optimal_partition_count_chi_plus=high.optimal_partition_count,
        )
    # mean is fixed by omega, the witness has to agree with it
    assert summary.mean_chi == mean(summary.pmf_chi)
    assert summary.mean_chi_plus == mean(summary.pmf_chi_plus)
    return summary


@dataclass(frozen=True)
class OrderingReport:
    """
    Verdict of the mean and variance orderings over every labelling of every chi-partition.
    counterexample is the labelling with the largest variance above var_chi_plus, or the
    smallest one below var_chi when none lies above.
    """
    mean_ordering_holds: bool
    variance_ordering_holds: bool
    labelings_checked: int
    counterexample: LabeledColoring | None = None
    counterexample_variance: Fraction | None = None

    @property
    def flat_dict(self) -> dict:
        ret = {
            vb.MEAN_ORDERING: vb.HOLDS if self.mean_ordering_holds else vb.VIOLATED,
            vb.VARIANCE_ORDERING: vb.HOLDS if self.variance_ordering_holds else vb.VIOLATED,
            vb.LABELINGS_CHECKED: self.labelings_checked,
            }
        if self.counterexample is not None:
            ret[vb.COUNTEREXAMPLE] = {
                "theta": list(self.counterexample.theta),
                "variance": as_ratio(self.counterexample_variance),
                }
        return ret


def ordering_check(graph: Graph, summary: ChromaticSummary | None = None, limit: int = 200000,
                   max_vertices: int | None = None) -> OrderingReport:
    """
    Scans k! labellings of each chi-partition; refuses when the scan would pass limit.
    """
    if summary is None:
        summary = summarize(graph, max_vertices)
    k = summary.chi
    per_partition = math.factorial(k)
    if per_partition > limit:
        raise InstanceTooLargeError(f"ordering check needs {per_partition} labellings per partition, limit is {limit}")

    checked = 0
    mean_holds = True
    above = below = None
    for partition in enumerate_chi_partitions(graph, k, max_vertices):
        for labels in permutations(range(1, k + 1)):
            checked += 1
            if checked > limit:
                raise InstanceTooLargeError(f"ordering check exceeds the limit of {limit} labellings")
            coloring = LabeledColoring(partition, labels)
            dist = pmf(coloring)
            mu = Fraction(coloring_sum(coloring), coloring.n)
            if not summary.mean_chi <= mu <= summary.mean_chi_plus:
                mean_holds = False
                logger.error("mean ordering violated on %r by theta=%s", graph, coloring.theta)
            sigma2 = variance(dist)
            if sigma2 > summary.var_chi_plus and (above is None or sigma2 > above[1]):
                above = (coloring, sigma2)
            if sigma2 < summary.var_chi and (below is None or sigma2 < below[1]):
                below = (coloring, sigma2)

    witness = above or below
    if witness is not None:
        logger.info("variance ordering fails on %r: theta=%s has variance %s",
                    graph, witness[0].theta, witness[1])
        return OrderingReport(mean_holds, False, checked, witness[0], witness[1])
    return OrderingReport(mean_holds, True, checked)
