"""Engine against oracle sweep over the family members and seeded random graphs."""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field

import networkx as nx

from . import vocabulary as vb
from .closed_forms import closed_form_chi, closed_form_chi_plus, family_instances
from .errors import InstanceTooLargeError
from .graph import FamilyEnum, Graph, generate_family, validate
from .oracle import oracle_summary
from .stats import ShapeEnum, as_ratio, summarize

logger = logging.getLogger(__name__)

EDGE_PROBABILITIES = (0.3, 0.5, 0.7)


@dataclass(frozen=True)
class VerificationCase:
    name: str
    kind: str
    n: int
    passed: bool
    details: dict = field(default_factory=dict)


@dataclass
class VerificationResult:
    cases: list[VerificationCase] = field(default_factory=list)
    uniform_claim_candidates: list[dict] = field(default_factory=list)

    @property
    def failures(self) -> list[VerificationCase]:
        return [case for case in self.cases if not case.passed]

    @property
    def passed(self) -> bool:
        return not self.failures


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) resampled until connected, every draw seeded from rng"""
    while True:
        nx_graph = nx.gnp_random_graph(n, p, seed=rng.randrange(2 ** 32))
        if nx.is_connected(nx_graph):
            return Graph.from_networkx(nx_graph)


def check_graph(graph: Graph, max_vertices: int, oracle_max_n: int, spec=None):
    """
    Compares chi, both colouring-sum extremes and the optimal size multisets; for a
    family member also the derived closed forms.
    """
    summary = summarize(graph, max_vertices)
    truth = oracle_summary(graph, oracle_max_n)
    checks = {
        vb.CHI: (summary.chi, truth.chi),
        vb.OMEGA_MIN: (summary.omega_min, truth.omega_min),
        vb.OMEGA_MAX: (summary.omega_max, truth.omega_max),
    }
    details = {key: {vb.ENGINE: engine, vb.ORACLE: oracle} for key, (engine, oracle) in checks.items()}
    passed = all(engine == oracle for engine, oracle in checks.values())
    if summary.variance_ambiguous_chi is not None:
        engine_ambiguous = summary.variance_ambiguous_chi
        oracle_ambiguous = len(truth.all_optimal_size_multisets_min) > 1
        details[vb.VARIANCE_AMBIGUOUS_CHI] = {vb.ENGINE: engine_ambiguous, vb.ORACLE: oracle_ambiguous}
        passed = passed and engine_ambiguous == oracle_ambiguous

    if spec is not None:
        for statistic, value, expected in (
                (vb.MEAN_CHI, summary.mean_chi, closed_form_chi(spec).mean),
                (vb.VAR_CHI, summary.var_chi, closed_form_chi(spec).variance),
                (vb.MEAN_CHI_PLUS, summary.mean_chi_plus, closed_form_chi_plus(spec).mean),
                (vb.VAR_CHI_PLUS, summary.var_chi_plus, closed_form_chi_plus(spec).variance)):
            details[statistic] = {vb.ENGINE: as_ratio(value), vb.DERIVED: as_ratio(expected)}
            passed = passed and value == expected

    return passed, details, summary


def run_verification(max_n: int, trials: int, seed: int, max_vertices: int = 64,
                     oracle_max_n: int = 10) -> VerificationResult:
    if max_n > oracle_max_n:
        raise InstanceTooLargeError(n=max_n, limit=oracle_max_n, what="oracle")
    result = VerificationResult()

    def record(name, kind, graph, spec=None, **extra):
        passed, details, summary = check_graph(graph, max_vertices, oracle_max_n, spec)
        details.update(extra)
        if summary.classification_chi.shape is not ShapeEnum.UNIFORM and validate(graph).regular:
            theta = summary.witness_chi.theta
            logger.warning("regular graph %s has a non-uniform chi-witness %s", name, theta)
            result.uniform_claim_candidates.append({vb.CASE: name, "theta": list(theta)})
        if not passed:
            logger.error("verification failed for %s: %s", name, details)
        result.cases.append(VerificationCase(name, kind, graph.n, passed, details))

    for family in FamilyEnum:
        for spec in family_instances(family, max_n):
            record(spec.label, vb.KIND_FAMILY, generate_family(spec), spec)

    rng = random.Random(seed)
    for n in range(1, max_n + 1):
        for trial in range(trials):
            p = EDGE_PROBABILITIES[trial % len(EDGE_PROBABILITIES)]
            graph = random_connected_graph(n, p, rng)
            record(f"random(n={n},p={p},trial={trial})", vb.KIND_RANDOM, graph, **{vb.EDGE_PROBABILITY: p})

    logger.info("%s verification cases, %s failed", len(result.cases), len(result.failures))
    return result
