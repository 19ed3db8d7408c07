"""
Output documents of the CLI and their JSON, CSV and text renderings.

Rationals always carry the exact "p/q" string; the *_decimal twin is advisory.
Renderings are deterministic: sorted JSON keys, fixed CSV column order, LF endings.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from . import vocabulary as vb
from .__version__ import __version__
from .closed_forms import DiscrepancyReport, ReportRow
from .graph import Graph, GraphDiagnostics
from .stats import ChromaticSummary, as_ratio
from .verification import VerificationResult


def document(command: str, args: dict, results, warnings=()) -> dict:
    return {
        vb.SCHEMA: vb.SCHEMA_VERSION,
        vb.VERSION: __version__,
        vb.COMMAND: {vb.NAME: command, vb.ARGS: args},
        vb.RESULTS: results,
        vb.WARNINGS: list(warnings),
        }


def error_document(command: str, args: dict, error) -> dict:
    doc = document(command, args, None)
    doc[vb.ERROR] = error.to_dict()
    return doc


def _put_rational(ret: dict, key: str, value: Fraction | None) -> None:
    if value is None:
        ret[key] = None
        ret[key + vb.DECIMAL_SUFFIX] = None
    else:
        ret[key] = as_ratio(value)
        ret[key + vb.DECIMAL_SUFFIX] = float(value)


def _bool_cell(value) -> str:
    if value is None:
        return ""
    return "true" if value else "false"


def _cell(value) -> str:
    if isinstance(value, Fraction):
        return as_ratio(value)
    if isinstance(value, bool) or value is None:
        return _bool_cell(value)
    return str(value)


SUMMARY_FIELDS = (
    vb.N, vb.M, vb.CONNECTED, vb.CHI, vb.OMEGA_MIN, vb.OMEGA_MAX,
    vb.MEAN_CHI, vb.VAR_CHI, vb.MEAN_CHI_PLUS, vb.VAR_CHI_PLUS,
    vb.CLASSIFICATION_CHI, vb.CLASSIFICATION_CHI_PLUS,
    vb.VARIANCE_AMBIGUOUS_CHI, vb.VARIANCE_AMBIGUOUS_CHI_PLUS,
    )


def summary_payload(summary: ChromaticSummary, graph: Graph, diagnostics: GraphDiagnostics,
                    source: str) -> dict:
    ret = {
        vb.SOURCE: source,
        vb.GRAPH: diagnostics.flat_dict,
        vb.CHI: summary.chi,
        vb.OMEGA_MIN: summary.omega_min,
        vb.OMEGA_MAX: summary.omega_max,
        vb.PMF_CHI: [as_ratio(p) for p in summary.pmf_chi.probabilities],
        vb.PMF_CHI_PLUS: [as_ratio(p) for p in summary.pmf_chi_plus.probabilities],
        vb.CLASSIFICATION_CHI: str(summary.classification_chi),
        vb.CLASSIFICATION_CHI_PLUS: str(summary.classification_chi_plus),
        vb.TWO_POINT_CHI: summary.classification_chi.two_point,
        vb.TWO_POINT_CHI_PLUS: summary.classification_chi_plus.two_point,
        vb.VARIANCE_AMBIGUOUS_CHI: summary.variance_ambiguous_chi,
        vb.VARIANCE_AMBIGUOUS_CHI_PLUS: summary.variance_ambiguous_chi_plus,
        vb.OPTIMAL_PARTITIONS_CHI: summary.optimal_partition_count_chi,
        vb.OPTIMAL_PARTITIONS_CHI_PLUS: summary.optimal_partition_count_chi_plus,
        vb.WITNESS_CHI: summary.witness_chi.flat_dict(graph),
        vb.WITNESS_CHI_PLUS: summary.witness_chi_plus.flat_dict(graph),
        }
    _put_rational(ret, vb.MEAN_CHI, summary.mean_chi)
    _put_rational(ret, vb.VAR_CHI, summary.var_chi)
    _put_rational(ret, vb.MEAN_CHI_PLUS, summary.mean_chi_plus)
    _put_rational(ret, vb.VAR_CHI_PLUS, summary.var_chi_plus)
    return ret


def _summary_row(payload: dict) -> list:
    flat = dict(payload)
    flat.update({key: payload[vb.GRAPH][key] for key in (vb.N, vb.M, vb.CONNECTED)})
    return [flat[key] for key in SUMMARY_FIELDS]


def _row_payload(row: ReportRow, ordering) -> dict:
    ret = {
        vb.FAMILY: row.spec.family.value,
        vb.PARAMETERS: row.spec.parameters,
        vb.N: row.spec.order,
        vb.STATISTIC: row.statistic,
        vb.STATUS: row.status,
        vb.DERIVED_MATCH: row.derived_matches,
        vb.STATED_MATCH: row.stated_matches,
        vb.PROVED_MATCH: row.proved_matches,
        vb.FLAGS: list(row.flags),
        vb.NOTES: list(row.notes),
        vb.VARIANCE_ORDERING: ordering,
        }
    _put_rational(ret, vb.ENGINE, row.engine)
    _put_rational(ret, vb.DERIVED, row.derived)
    _put_rational(ret, vb.STATED, row.stated)
    _put_rational(ret, vb.PROVED, row.proved)
    return ret


def _ordering_verdict(report: DiscrepancyReport, label: str) -> str:
    ordering = report.orderings.get(label)
    if ordering is None:
        return vb.STATUS_SKIPPED
    return vb.HOLDS if ordering.variance_ordering_holds else vb.VIOLATED


def report_payload(report: DiscrepancyReport) -> dict:
    rows = [_row_payload(row, _ordering_verdict(report, row.spec.label)) for row in report.rows]
    orderings = {
        label: (ordering.flat_dict if ordering is not None else vb.STATUS_SKIPPED)
        for label, ordering in report.orderings.items()
        }
    return {
        vb.ROWS: rows,
        vb.ORDERING: orderings,
        vb.SUMMARY: {
            "rows": len(report.rows),
            "flagged": len(report.flagged),
            "skipped": sum(1 for row in report.rows if row.status == vb.STATUS_SKIPPED),
            "derived_consistent": report.derived_consistent,
            },
        }


REPORT_FIELDS = (
    vb.FAMILY, vb.PARAMETERS, vb.N, vb.STATISTIC, vb.STATUS,
    vb.ENGINE, vb.DERIVED, vb.STATED, vb.PROVED,
    vb.DERIVED_MATCH, vb.STATED_MATCH, vb.PROVED_MATCH,
    vb.FLAGS, vb.NOTES, vb.VARIANCE_ORDERING,
    )


def _report_row(payload: dict) -> list:
    out = []
    for key in REPORT_FIELDS:
        value = payload[key]
        out.append(";".join(value) if isinstance(value, list) else value)
    return out


def verification_payload(result: VerificationResult) -> dict:
    return {
        vb.CASES: [
            {vb.CASE: case.name, vb.KIND: case.kind, vb.N: case.n, vb.PASSED: case.passed, vb.DETAILS: case.details}
            for case in result.cases
            ],
        vb.SUMMARY: {
            vb.PASSED: len(result.cases) - len(result.failures),
            vb.FAILED: len(result.failures),
            },
        vb.UNIFORM_CLAIM_CANDIDATES: result.uniform_claim_candidates,
        }


VERIFICATION_FIELDS = (vb.CASE, vb.KIND, vb.N, vb.PASSED)


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def to_csv(header, rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(value) for value in row])
    return buffer.getvalue()


def render(doc: dict, fmt: str) -> str:
    """Renders a stats, report or verify document; the command name picks the table"""
    if fmt == vb.FORMAT_JSON:
        return to_json(doc)
    command = doc[vb.COMMAND][vb.NAME]
    results = doc[vb.RESULTS]
    if command == "stats":
        header, rows = SUMMARY_FIELDS, [_summary_row(results)]
    elif command == "report":
        header, rows = REPORT_FIELDS, [_report_row(row) for row in results[vb.ROWS]]
    else:
        header = VERIFICATION_FIELDS
        rows = [[case[key] for key in VERIFICATION_FIELDS] for case in results[vb.CASES]]
    if fmt == vb.FORMAT_CSV:
        return to_csv(header, rows)
    return to_text(header, rows, doc.get(vb.WARNINGS, ()))


def to_text(header, rows, warnings=()) -> str:
    lines = []
    if len(rows) == 1:
        width = max(len(h) for h in header)
        lines.extend(f"{h.ljust(width)} : {_cell(v)}" for h, v in zip(header, rows[0]))
    else:
        cells = [[_cell(v) for v in row] for row in rows]
        widths = [max([len(h)] + [len(r[i]) for r in cells]) for i, h in enumerate(header)]
        lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
        lines.extend("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells)
    lines.extend(f"warning: {w}" for w in warnings)
    return "\n".join(lines) + "\n"
