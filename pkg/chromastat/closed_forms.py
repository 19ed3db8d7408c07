"""
Closed-form chi- and chi+-chromatic mean and variance of the standard families.

Three variants ship side by side:
    derived    the values the engine and the oracle agree on
    as_stated  the values as written in the proposition statements
    as_proved  the values their proofs arrive at
Only the derived variant is trusted by the rest of the package; the other two
feed the discrepancy report.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction as F
from typing import Iterable, Iterator

from . import vocabulary as vb
from .engine import DEFAULT_TIE_LIMIT, DEFAULT_TIE_NODE_LIMIT
from .errors import FormulaUnavailableError, InstanceTooLargeError
from .graph import FAMILY_MINIMUM, FamilyEnum, FamilySpec, generate_family
from .stats import ChromaticSummary, OrderingReport, ordering_check, summarize

logger = logging.getLogger(__name__)


class VariantEnum(enum.Enum):
    """closed form variant enum"""
    DERIVED = vb.DERIVED
    AS_STATED = vb.AS_STATED
    AS_PROVED = vb.AS_PROVED


@dataclass(frozen=True)
class FamilyFormulaResult:
    """Closed-form chromatic mean and variance of one family member"""
    spec: FamilySpec
    chi: int
    mean: F
    variance: F
    variant: VariantEnum
    plus: bool = False
    notes: tuple[str, ...] = ()

    @property
    def support_bound(self) -> F:
        """Largest variance of any distribution on 1..chi"""
        return F((self.chi - 1) ** 2, 4)

    @property
    def flags(self) -> tuple[str, ...]:
        ret = []
        if self.variance < 0:
            ret.append(vb.FLAG_NEGATIVE_VARIANCE)
        if self.variance > self.support_bound:
            ret.append(vb.FLAG_EXCEEDS_SUPPORT_BOUND)
        return tuple(ret)


def _moments(sizes: Iterable[int]) -> tuple[F, F]:
    """Mean and variance of the colouring giving colour i to the i-th class of sizes"""
    sizes = list(sizes)
    n = sum(sizes)
    mu = F(sum(i * s for i, s in enumerate(sizes, start=1)), n)
    second = F(sum(i * i * s for i, s in enumerate(sizes, start=1)), n)
    return mu, second - mu ** 2


def _chi(spec: FamilySpec) -> int:
    family = spec.family
    if family is FamilyEnum.COMPLETE:
        return spec.n
    if family is FamilyEnum.PATH:
        return 1 if spec.n == 1 else 2
    if family is FamilyEnum.CYCLE:
        return 2 if spec.n % 2 == 0 else 3
    if family is FamilyEnum.WHEEL:
        return 3 if spec.n % 2 == 1 else 4
    if family is FamilyEnum.STAR:
        return 2
    return len(spec.parts)


def _bipartite_sides(spec: FamilySpec) -> tuple[int, int]:
    """(m1, m2) with m1 >= m2"""
    if spec.family is FamilyEnum.STAR:
        return spec.n - 1, 1
    return max(spec.parts), min(spec.parts)


def _derived(spec: FamilySpec, plus: bool) -> tuple[F, F]:
    family = spec.family
    n = spec.order
    if family is FamilyEnum.COMPLETE:
        return F(n + 1, 2), F(n * n - 1, 12)
    if family is FamilyEnum.PATH:
        if n == 1:
            return F(1), F(0)
        if n % 2 == 0:
            return F(3, 2), F(1, 4)
        return (F(3 * n + 1, 2 * n) if plus else F(3 * n - 1, 2 * n)), F(n * n - 1, 4 * n * n)
    if family is FamilyEnum.CYCLE:
        if n % 2 == 0:
            return F(3, 2), F(1, 4)
        return (F(5 * n - 3, 2 * n) if plus else F(3 * n + 3, 2 * n)), F(n * n + 8 * n - 9, 4 * n * n)
    if family is FamilyEnum.WHEEL:
        if n % 2 == 1:
            return (F(5 * n - 3, 2 * n) if plus else F(3 * n + 3, 2 * n)), F(n * n + 8 * n - 9, 4 * n * n)
        return (F(7 * n - 8, 2 * n) if plus else F(3 * n + 8, 2 * n)), F(n * n + 32 * n - 64, 4 * n * n)
    if family in (FamilyEnum.COMPLETE_BIPARTITE, FamilyEnum.STAR):
        m1, m2 = _bipartite_sides(spec)
        return (1 + F(m1, n) if plus else 1 + F(m2, n)), F(m1 * m2, n * n)
    # complete multipartite: the parts are the only chi-partition
    k = len(spec.parts)
    if len(set(spec.parts)) == 1:
        return F(k + 1, 2), F(k * k - 1, 12)
    return _moments(sorted(spec.parts, reverse=not plus))


def _as_stated(spec: FamilySpec, plus: bool) -> tuple[F, F]:
    family = spec.family
    n = spec.order
    if family is FamilyEnum.COMPLETE:
        return F(n + 1, 2), F(n * n - 1, 12)
    if family is FamilyEnum.PATH:
        if n % 2 == 0:
            return F(3, 2), F(1, 4)
        return F(3 * n - 1, 2 * n), F(n * n - 1, 4 * n * n)
    if family is FamilyEnum.CYCLE:
        if n % 2 == 0:
            return F(3, 2), F(1, 4)
        if plus:
            return F(5 * n - 3, 2 * n), F(n * n + 8 * n - 9, 4 * n * n)
        return F(3 * n + 3, 2 * n), F(n * n - 8 * n + 9, 4 * n * n)
    if family is FamilyEnum.WHEEL:
        if n % 2 == 1:
            if plus:
                return F(5 * n - 3, 2 * n), F(n * n + 30 * n - 31, 4 * n * n)
            return F(3 * n + 3, 2 * n), F(n * n + 8 * n - 9, 4 * n * n)
        return F(3 * n + 1, 2 * n + 2), F(n * n + 32 * n - 64, 4 * n * n)
    if family in (FamilyEnum.COMPLETE_BIPARTITE, FamilyEnum.STAR):
        m1, m2 = _bipartite_sides(spec)
        if m1 == m2:
            # regular bipartite remark, and the k-partite corollary for k = 2
            return F(3, 2), F(1, 4)
        if plus:
            raise FormulaUnavailableError(f"no chi+ statement for the unbalanced bipartite graph {spec.label}")
        return 1 + F(m2, n), F((n - 1) * m1 + 2 * (2 * n - 1) * m2, n * n)
    k = len(spec.parts)
    if len(set(spec.parts)) != 1:
        raise FormulaUnavailableError(f"the uniform k-partite claim only applies to balanced parts, got {spec.label}")
    return F(k + 1, 2), F(k * k - 1, 12)


def _as_proved(spec: FamilySpec, plus: bool) -> tuple[F, F]:
    family = spec.family
    n = spec.order
    if family is FamilyEnum.PATH and plus and n % 2 == 1:
        return F(3 * n + 1, 2 * n), F(n * n + 1, 4 * n * n)
    if family is FamilyEnum.WHEEL and n % 2 == 0:
        if plus:
            return F(7 * n - 8, 2 * n), F(n * n + 32 * n - 64, 4 * n * n)
        return F(3 * n + 8, 2 * n), F(n * n + 32 * n - 64, 4 * n * n)
    return _as_stated(spec, plus)


_VARIANTS = {
    VariantEnum.DERIVED: _derived,
    VariantEnum.AS_STATED: _as_stated,
    VariantEnum.AS_PROVED: _as_proved,
}


def _closed_form(spec: FamilySpec, variant: VariantEnum, plus: bool) -> FamilyFormulaResult:
    mu, sigma2 = _VARIANTS[variant](spec, plus)
    result = FamilyFormulaResult(spec=spec, chi=_chi(spec), mean=mu, variance=sigma2, variant=variant, plus=plus)
    if result.flags:
        logger.debug("%s %s of %s flagged %s", variant.value, "chi+" if plus else "chi", spec.label, result.flags)
    return result


def closed_form_chi(spec: FamilySpec, variant: VariantEnum = VariantEnum.DERIVED) -> FamilyFormulaResult:
    return _closed_form(spec, variant, plus=False)


def closed_form_chi_plus(spec: FamilySpec, variant: VariantEnum = VariantEnum.DERIVED) -> FamilyFormulaResult:
    return _closed_form(spec, variant, plus=True)


def _partitions_of(total: int, parts: int, largest: int) -> Iterator[tuple[int, ...]]:
    """Partitions of total into exactly `parts` parts, each <= largest, descending"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total - parts + 1, largest), 0, -1):
        for rest in _partitions_of(total - first, parts - 1, first):
            yield (first,) + rest


def family_instances(family: FamilyEnum, n_max: int, n_min: int = 1) -> Iterator[FamilySpec]:
    """
    Every member of family with n_min <= order <= n_max, in a fixed order.
    complete_multipartite is restricted to 3 or more parts; two parts are complete_bipartite.
    """
    if family in FAMILY_MINIMUM:
        for n in range(max(FAMILY_MINIMUM[family], n_min), n_max + 1):
            yield FamilySpec(family, n=n)
    elif family is FamilyEnum.COMPLETE_BIPARTITE:
        for total in range(max(2, n_min), n_max + 1):
            for m2 in range(1, total // 2 + 1):
                yield FamilySpec(family, parts=(total - m2, m2))
    else:
        for total in range(max(3, n_min), n_max + 1):
            for k in range(3, total + 1):
                for parts in _partitions_of(total, k, total):
                    yield FamilySpec(family, parts=parts)


STATISTICS = (vb.MEAN_CHI, vb.VAR_CHI, vb.MEAN_CHI_PLUS, vb.VAR_CHI_PLUS)


@dataclass(frozen=True)
class ReportRow:
    """One statistic of one family member: engine against the three closed-form variants"""
    spec: FamilySpec
    statistic: str
    status: str
    engine: F | None = None
    derived: F | None = None
    stated: F | None = None
    proved: F | None = None
    flags: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def derived_matches(self) -> bool | None:
        if self.engine is None:
            return None
        return self.derived == self.engine

    @property
    def stated_matches(self) -> bool | None:
        if self.engine is None or self.stated is None:
            return None
        return self.stated == self.engine

    @property
    def proved_matches(self) -> bool | None:
        if self.engine is None or self.proved is None:
            return None
        return self.proved == self.engine


@dataclass
class DiscrepancyReport:
    rows: list[ReportRow] = field(default_factory=list)
    orderings: dict[str, OrderingReport | None] = field(default_factory=dict)

    @property
    def flagged(self) -> list[ReportRow]:
        return [row for row in self.rows if row.flags]

    @property
    def derived_consistent(self) -> bool:
        return all(row.derived_matches is not False for row in self.rows)


def _engine_value(summary: ChromaticSummary, statistic: str) -> F:
    return getattr(summary, statistic)


def _formula_value(spec, variant, statistic, notes) -> F | None:
    plus = statistic in (vb.MEAN_CHI_PLUS, vb.VAR_CHI_PLUS)
    try:
        result = _closed_form(spec, variant, plus)
    except FormulaUnavailableError as e:
        if variant is VariantEnum.AS_STATED:
            notes.append(e.message)
        return None
    return result.mean if statistic.startswith("mean") else result.variance


def _row_flags(spec, statistic, engine, derived, stated, proved) -> tuple[str, ...]:
    flags = []
    if derived != engine:
        flags.append(vb.FLAG_DERIVED_MISMATCH)
    if stated is not None and stated != engine:
        flags.append(vb.FLAG_STATED_MISMATCH)
    if stated is not None and proved is not None and stated != proved:
        flags.append(vb.FLAG_STATEMENT_PROOF_CONFLICT)
    if statistic.startswith("var"):
        bound = F((_chi(spec) - 1) ** 2, 4)
        values = [v for v in (stated, proved) if v is not None]
        if any(v < 0 for v in values):
            flags.append(vb.FLAG_NEGATIVE_VARIANCE)
        if any(v > bound for v in values):
            flags.append(vb.FLAG_EXCEEDS_SUPPORT_BOUND)
    return tuple(flags)


def discrepancy_report(families: Iterable[FamilyEnum], n_max: int, n_min: int = 1,
                       max_vertices: int = 64, ordering_limit: int = 200000,
                       exhaustive_ties: bool = True, tie_limit: int = DEFAULT_TIE_LIMIT,
                       tie_node_limit: int = DEFAULT_TIE_NODE_LIMIT) -> DiscrepancyReport:
    """
    Engine, derived, stated and proved values for every family member in range.
    Members above max_vertices are kept as skipped rows.
    """
    report = DiscrepancyReport()
    for family in families:
        for spec in family_instances(family, n_max, n_min):
            if spec.order > max_vertices:
                logger.info("skipping %s: %s vertices exceeds the limit of %s", spec.label, spec.order, max_vertices)
                for statistic in STATISTICS:
                    report.rows.append(ReportRow(spec, statistic, vb.STATUS_SKIPPED,
                                                 notes=(f"{spec.order} vertices exceeds the limit of {max_vertices}",)))
                report.orderings[spec.label] = None
                continue
            graph = generate_family(spec)
            summary = summarize(graph, max_vertices, exhaustive_ties, tie_limit, tie_node_limit)
            for statistic in STATISTICS:
                notes = []
                engine = _engine_value(summary, statistic)
                derived = _formula_value(spec, VariantEnum.DERIVED, statistic, notes)
                stated = _formula_value(spec, VariantEnum.AS_STATED, statistic, notes)
                proved = _formula_value(spec, VariantEnum.AS_PROVED, statistic, notes)
                flags = _row_flags(spec, statistic, engine, derived, stated, proved)
                if vb.FLAG_DERIVED_MISMATCH in flags:
                    logger.error("derived %s of %s is %s, engine gives %s", statistic, spec.label, derived, engine)
                report.rows.append(ReportRow(spec, statistic, vb.STATUS_OK, engine, derived, stated, proved,
                                             flags, tuple(notes)))
            try:
                report.orderings[spec.label] = ordering_check(graph, summary, ordering_limit, max_vertices)
            except InstanceTooLargeError as e:
                logger.info("ordering check skipped for %s: %s", spec.label, e.message)
                report.orderings[spec.label] = None
    return report
