from fractions import Fraction as F

import pytest

from chromastat import vocabulary as vb
from chromastat.closed_forms import (
    VariantEnum,
    closed_form_chi,
    closed_form_chi_plus,
    discrepancy_report,
    family_instances,
    )
from chromastat.errors import FormulaUnavailableError
from chromastat.graph import FamilyEnum, FamilySpec, generate_family
from chromastat.stats import summarize


def spec(name, n=None, parts=None):
    return FamilySpec.from_name(name, n=n, parts=parts)


@pytest.mark.parametrize("family_spec, mean_chi, mean_chi_plus, var", [
    (spec("complete", 6), F(7, 2), F(7, 2), F(35, 12)),
    (spec("path", 1), F(1), F(1), F(0)),
    (spec("path", 4), F(3, 2), F(3, 2), F(1, 4)),
    (spec("path", 5), F(7, 5), F(8, 5), F(6, 25)),
    (spec("cycle", 5), F(9, 5), F(11, 5), F(14, 25)),
    (spec("cycle", 6), F(3, 2), F(3, 2), F(1, 4)),
    (spec("wheel", 5), F(9, 5), F(11, 5), F(14, 25)),
    (spec("wheel", 6), F(13, 6), F(17, 6), F(41, 36)),
    (spec("star", 4), F(5, 4), F(7, 4), F(3, 16)),
    (spec("complete_bipartite", parts=(3, 2)), F(7, 5), F(8, 5), F(6, 25)),
    (spec("complete_multipartite", parts=(2, 2, 2)), F(2), F(2), F(2, 3)),
    (spec("complete_multipartite", parts=(3, 2, 1)), F(5, 3), F(7, 3), F(5, 9)),
])
def test_derived(family_spec, mean_chi, mean_chi_plus, var):
    chi = closed_form_chi(family_spec)
    plus = closed_form_chi_plus(family_spec)
    assert chi.mean == mean_chi
    assert plus.mean == mean_chi_plus
    assert chi.variance == plus.variance == var
    assert chi.variant is VariantEnum.DERIVED


@pytest.mark.parametrize("family, n_max", [
    (FamilyEnum.COMPLETE, 10),
    (FamilyEnum.PATH, 14),
    (FamilyEnum.CYCLE, 14),
    (FamilyEnum.WHEEL, 12),
    (FamilyEnum.STAR, 12),
    (FamilyEnum.COMPLETE_BIPARTITE, 12),
    (FamilyEnum.COMPLETE_MULTIPARTITE, 12),
])
def test_derived_matches_engine(family, n_max):
    for family_spec in family_instances(family, n_max):
        summary = summarize(generate_family(family_spec))
        assert closed_form_chi(family_spec).mean == summary.mean_chi, family_spec.label
        assert closed_form_chi(family_spec).variance == summary.var_chi, family_spec.label
        assert closed_form_chi_plus(family_spec).mean == summary.mean_chi_plus, family_spec.label
        assert closed_form_chi_plus(family_spec).variance == summary.var_chi_plus, family_spec.label


def test_stated_odd_cycle_variance():
    c3 = closed_form_chi(spec("cycle", 3), VariantEnum.AS_STATED)
    c5 = closed_form_chi(spec("cycle", 5), VariantEnum.AS_STATED)
    assert c3.variance == F(-1, 6)
    assert c5.variance == F(-3, 50)
    assert vb.FLAG_NEGATIVE_VARIANCE in c5.flags
    c7 = closed_form_chi(spec("cycle", 7), VariantEnum.AS_STATED)
    assert c7.variance == F(1, 98)
    assert c7.variance != closed_form_chi(spec("cycle", 7)).variance


def test_stated_bipartite_variance_exceeds_support():
    result = closed_form_chi(spec("star", 4), VariantEnum.AS_STATED)
    assert result.mean == F(5, 4)
    assert result.variance == F(23, 16)
    assert result.support_bound == F(1, 4)
    assert vb.FLAG_EXCEEDS_SUPPORT_BOUND in result.flags


def test_stated_balanced_bipartite():
    result = closed_form_chi_plus(spec("complete_bipartite", parts=(3, 3)), VariantEnum.AS_STATED)
    assert (result.mean, result.variance) == (F(3, 2), F(1, 4))


def test_stated_unavailable():
    with pytest.raises(FormulaUnavailableError):
        closed_form_chi_plus(spec("complete_bipartite", parts=(3, 2)), VariantEnum.AS_STATED)
    with pytest.raises(FormulaUnavailableError):
        closed_form_chi(spec("complete_multipartite", parts=(3, 2, 1)), VariantEnum.AS_STATED)


def test_statement_and_proof_disagree():
    stated = closed_form_chi_plus(spec("path", 5), VariantEnum.AS_STATED)
    proved = closed_form_chi_plus(spec("path", 5), VariantEnum.AS_PROVED)
    assert stated.mean == F(7, 5)
    assert proved.mean == F(8, 5)
    assert proved.variance == F(13, 50)

    stated = closed_form_chi(spec("wheel", 6), VariantEnum.AS_STATED)
    proved = closed_form_chi(spec("wheel", 6), VariantEnum.AS_PROVED)
    assert stated.mean == F(19, 14)
    assert proved.mean == F(13, 6)


def test_family_instances():
    assert [s.label for s in family_instances(FamilyEnum.CYCLE, 6)] == [
        "cycle(3)", "cycle(4)", "cycle(5)", "cycle(6)"]
    assert [s.parts for s in family_instances(FamilyEnum.COMPLETE_BIPARTITE, 4)] == [
        (1, 1), (2, 1), (3, 1), (2, 2)]
    assert [s.parts for s in family_instances(FamilyEnum.COMPLETE_MULTIPARTITE, 5)] == [
        (1, 1, 1), (2, 1, 1), (1, 1, 1, 1), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]
    assert [s.n for s in family_instances(FamilyEnum.WHEEL, 6, n_min=5)] == [5, 6]


def test_report_cycles():
    report = discrepancy_report([FamilyEnum.CYCLE], 9)
    assert len(report.rows) == 4 * 4
    assert report.derived_consistent
    flagged = {(row.spec.n, row.statistic) for row in report.flagged}
    for n in (3, 5, 7, 9):
        assert (n, vb.VAR_CHI) in flagged
    assert (4, vb.VAR_CHI) not in flagged
    assert not report.orderings["cycle(5)"].variance_ordering_holds


def test_report_complete_has_no_flags():
    report = discrepancy_report([FamilyEnum.COMPLETE], 8)
    assert report.rows
    assert not report.flagged
    assert all(o.variance_ordering_holds for o in report.orderings.values())


def test_report_even_wheel_conflict():
    report = discrepancy_report([FamilyEnum.WHEEL], 10)
    for row in report.rows:
        if row.spec.n % 2 == 0 and row.statistic == vb.MEAN_CHI:
            assert vb.FLAG_STATEMENT_PROOF_CONFLICT in row.flags
            assert row.proved_matches
            assert not row.stated_matches


def test_report_skips_large_members():
    report = discrepancy_report([FamilyEnum.PATH], 6, n_min=5, max_vertices=5)
    statuses = {(row.spec.n, row.status) for row in report.rows}
    assert statuses == {(5, vb.STATUS_OK), (6, vb.STATUS_SKIPPED)}
    assert report.orderings["path(6)"] is None
    assert report.derived_consistent


def test_report_ordering_limit():
    report = discrepancy_report([FamilyEnum.COMPLETE], 5, n_min=5, ordering_limit=100)
    assert report.orderings["complete(5)"] is None
    assert report.rows[0].status == vb.STATUS_OK


@pytest.mark.parametrize("parts", [(m,) * k for k in range(3, 7) for m in range(1, 12 // k + 1)])
def test_derived_matches_engine_balanced_multipartite(parts):
    family_spec = spec("complete_multipartite", parts=parts)
    summary = summarize(generate_family(family_spec))
    assert closed_form_chi(family_spec).mean == summary.mean_chi == F(len(parts) + 1, 2)
    assert closed_form_chi(family_spec).variance == summary.var_chi == F(len(parts) ** 2 - 1, 12)
