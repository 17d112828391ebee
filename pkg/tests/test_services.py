import json

import pytest

from core.config import ConfigurationManager
from core.consts import CaseLabels, CheckNames, FlagKeys, RecordStatus
from core.errors import BadParams
from models.data_models import CatalogRecord
from services.analysis_service import AnalysisService
from services.catalog import ResultsCatalog
from services.search_service import (
    SearchService,
    canonical_points,
    expand_grid,
    is_finding,
    load_grid,
)
from vanishing.classify import classify_single_vcs

ES_TEMPLATE = {"template": "sdp({r}^3,ES(2,{sign}),maxker)", "params": {"r": [3], "sign": ["+", "-"]}}


@pytest.fixture
def search_service():
    return SearchService(ConfigurationManager(overrides={FlagKeys.MAX_WORKERS: 2}))


class TestResultsCatalog:
    def test_append_and_read_back(self, tmp_path):
        catalog = ResultsCatalog(tmp_path / "runs" / "catalog.jsonl")
        assert catalog.records() == []
        record = CatalogRecord(expr="C(6)", status=RecordStatus.OK, order=6, case_label=CaseLabels.NOT_SINGLE_VCS)
        catalog.append(record)
        assert catalog.records() == [record]
        assert catalog.completed_exprs() == {"C(6)"}

    def test_malformed_lines_are_skipped(self, tmp_path):
        path = tmp_path / "catalog.jsonl"
        good = CatalogRecord(expr="Q8", status=RecordStatus.OK, order=8)
        path.write_text(good.to_json_line() + "\n" + '{"expr": "SL2', encoding="utf-8")
        assert [r.expr for r in ResultsCatalog(path).records()] == ["Q8"]

    def test_summary(self, tmp_path):
        catalog = ResultsCatalog(tmp_path / "catalog.jsonl")
        assert catalog.summary() == {"status": {}, "case_label": {}, "finding": {}}
        catalog.append(CatalogRecord(expr="S", status=RecordStatus.OK, case_label=CaseLabels.P_GROUP))
        catalog.append(CatalogRecord(expr="T", status=RecordStatus.OK, case_label=CaseLabels.P_GROUP, finding=True))
        catalog.append(CatalogRecord(expr="U", status=RecordStatus.SKIPPED, reason="too big"))
        summary = catalog.summary()
        assert summary["status"] == {"ok": 2, "skipped": 1}
        assert summary["case_label"] == {CaseLabels.P_GROUP: 2}
        assert summary["finding"] == {"total": 1}


class TestGrid:
    def test_points_come_before_families(self):
        grid = {"points": ["Q8"], "families": [ES_TEMPLATE]}
        assert expand_grid(grid) == [
            "Q8",
            "sdp(3^3,ES(2,+),maxker)",
            "sdp(3^3,ES(2,-),maxker)",
        ]

    def test_parameters_expand_in_sorted_name_order(self):
        grid = {"families": [{"template": "EA({p},{k})", "params": {"p": [2, 3], "k": [1, 2]}}]}
        assert expand_grid(grid) == ["EA(2,1)", "EA(3,1)", "EA(2,2)", "EA(3,2)"]

    def test_canonical_points_drop_duplicates(self):
        points = ["C(6)", "C( 6 )", "D(4) * C(3)", "D(4)*C(3)", "not a group"]
        assert canonical_points(points) == ["C(6)", "D(4)*C(3)", "not a group"]

    def test_load_grid(self, tmp_path):
        path = tmp_path / "grid.json"
        path.write_text(json.dumps({"points": ["Q8"]}), encoding="utf-8")
        assert load_grid(path) == {"points": ["Q8"]}

    def test_load_grid_rejects_a_list(self, tmp_path):
        path = tmp_path / "grid.json"
        path.write_text("[]", encoding="utf-8")
        with pytest.raises(BadParams):
            load_grid(path)

    def test_findings(self, s3, order216):
        assert not is_finding(classify_single_vcs(s3))
        assert not is_finding(classify_single_vcs(order216))

    def test_template_with_an_unknown_placeholder(self):
        grid = {"families": [{"template": "sdp({r}^{k},ES(2,+),maxker)", "params": {"r": [3]}}]}
        with pytest.raises(BadParams) as info:
            expand_grid(grid)
        assert info.value.details["family"] == 0

    def test_family_without_a_template(self):
        with pytest.raises(BadParams):
            expand_grid({"families": [{"params": {"r": [3]}}]})


class TestRunPoint:
    def test_ok(self, search_service):
        record = search_service.run_point("C(6)", 100)
        assert record.status == RecordStatus.OK
        assert record.order == 6
        assert record.vcs == []
        assert record.case_label == CaseLabels.NOT_SINGLE_VCS
        assert not record.finding

    def test_skipped_above_the_order_cap(self, search_service):
        record = search_service.run_point("sdp(3^3,ES(2,+),maxker)", 100)
        assert record.status == RecordStatus.SKIPPED
        assert record.order == 216
        assert record.reason == "order 216 exceeds cap 100"

    def test_bad_parameters_become_an_error_record(self, search_service):
        record = search_service.run_point("D(2)", 100)
        assert record.status == RecordStatus.ERROR
        assert record.reason.startswith("BadParams")

    def test_unparsable_point(self, search_service):
        record = search_service.run_point("C(", 100)
        assert record.status == RecordStatus.ERROR
        assert record.reason.startswith("ParseError")


class TestSweep:
    def test_rerun_appends_nothing(self, tmp_path, search_service):
        grid = {"order_cap": 100, "points": ["C(6)", "S3?", "Q8"], "families": [ES_TEMPLATE]}
        catalog = ResultsCatalog(tmp_path / "catalog.jsonl")
        first = search_service.sweep(grid, catalog)
        assert [r.status for r in first] == [
            RecordStatus.OK,
            RecordStatus.ERROR,
            RecordStatus.OK,
            RecordStatus.SKIPPED,
            RecordStatus.SKIPPED,
        ]
        assert search_service.sweep(grid, catalog) == []
        assert len(catalog.records()) == 5

    def test_fresh_catalogs_are_identical(self, tmp_path, search_service):
        grid = {"order_cap": 300, "points": ["Q8", "D(4)*C(3)"], "families": [ES_TEMPLATE]}
        first, second = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        search_service.sweep(grid, ResultsCatalog(first))
        search_service.sweep(grid, ResultsCatalog(second))
        assert first.read_bytes() == second.read_bytes()

    def test_empty_grid(self, tmp_path, search_service):
        catalog = ResultsCatalog(tmp_path / "catalog.jsonl")
        assert search_service.sweep({}, catalog) == []
        assert not catalog.path.exists()

    def test_configured_limits_win_over_the_grid(self, tmp_path):
        config = ConfigurationManager(overrides={FlagKeys.ORDER_CAP: 100, FlagKeys.ENUMERATION_BOUND: 100})
        service = SearchService(config)
        grid = {"order_cap": 200000, "points": ["sdp(3^3,ES(2,+),maxker)", "Q8"]}
        assert service.effective_cap(grid) == 100
        records = service.sweep(grid, ResultsCatalog(tmp_path / "catalog.jsonl"))
        assert [(r.status, r.order) for r in records] == [(RecordStatus.SKIPPED, 216), (RecordStatus.OK, 8)]
        assert records[0].reason == "order 216 exceeds cap 100"

    def test_grid_may_lower_the_cap(self, search_service):
        assert search_service.effective_cap({"order_cap": 50}) == 50
        assert search_service.effective_cap({}) == 200000

    def test_enumeration_bound_caps_the_sweep(self):
        service = SearchService(ConfigurationManager(overrides={FlagKeys.ENUMERATION_BOUND: 64}))
        assert service.effective_cap({}) == 64
        assert service.run_point("C(6)", service.effective_cap({})).status == RecordStatus.OK

    def test_non_integer_grid_cap(self, search_service):
        with pytest.raises(BadParams):
            search_service.effective_cap({"order_cap": "lots"})


class TestExtraspecialFamily:
    @pytest.mark.parametrize("r, sign, vcs", [
        (3, "+", [18]),
        (3, "-", [18]),
        (5, "+", [50]),
        pytest.param(7, "+", [98], marks=pytest.mark.slow),
        pytest.param(11, "-", [242], marks=pytest.mark.slow),
        pytest.param(9, "+", [162], marks=pytest.mark.slow),
    ])
    def test_single_vanishing_size(self, search_service, r, sign, vcs):
        record = search_service.run_point(f"sdp({r}^3,ES(2,{sign}),maxker)", 200000)
        assert record.status == RecordStatus.OK
        assert record.vcs == vcs
        assert record.case_label == CaseLabels.NORMAL_P_COMPLEMENT
        assert not record.finding

    @pytest.mark.slow
    def test_order_three_actor_on_a_rank_four_module(self, search_service):
        record = search_service.run_point("sdp(7^4,ES(3,+),maxker)", 200000)
        assert record.vcs == [1029]
        assert record.case_label == CaseLabels.NORMAL_P_COMPLEMENT

    @pytest.mark.slow
    def test_block_module(self, search_service):
        record = search_service.run_point("sdp((2x2)^4,ES(3,+),maxker)", 200000)
        assert record.vcs == [192]


class TestAnalysisService:
    def test_analyze_sl23(self):
        report = AnalysisService(ConfigurationManager()).analyze("SL23")
        assert report.expr == "SL23"
        assert report.order == 24
        assert report.class_count == 7
        assert report.cs == [1, 4, 6]
        assert report.vcs == [4, 6]
        assert report.classification.case_label == CaseLabels.NOT_SINGLE_VCS
        assert report.all_checks_passed
        assert report.character_table is None
        assert report.timings is None

    def test_analyze_canonicalizes_and_emits_the_table(self):
        service = AnalysisService(ConfigurationManager(), emit_table=True, timings=True)
        report = service.analyze("D(4) * C(3)")
        assert report.expr == "D(4)*C(3)"
        assert report.classification.stripped_factor_order == 3
        assert report.character_table["conductor"] == 12
        assert {"build", "classes", "chartab", "classify"} <= set(report.timings)
        data = report.to_dict()
        assert list(data)[:5] == ["expr", "order", "class_count", "cs", "vcs"]

    def test_chartab(self):
        data = AnalysisService(ConfigurationManager()).chartab("Q8")
        assert data["order"] == 8
        assert data["class_count"] == 5
        assert len(data["character_table"]["rows"]) == 5
        assert "timings" not in data

    def test_verify_has_no_classification(self):
        report = AnalysisService(ConfigurationManager()).verify("Sym(3)")
        assert report.classification is None
        assert report.vcs == [3]
        assert report.all_checks_passed

    @pytest.mark.parametrize("expr, label", [
        ("Sym(3)", CaseLabels.FROBENIUS_QUOTIENT),
        ("SL23", CaseLabels.NOT_SINGLE_VCS),
        ("Q8", CaseLabels.P_GROUP),
    ])
    def test_characterization_checks_on_nonabelian_groups(self, expr, label):
        service = AnalysisService(ConfigurationManager())
        report = service.analyze(expr)
        assert report.classification.case_label == label
        names = [c.name for c in report.invariant_checks]
        assert CheckNames.CHARACTERIZATION_FORWARD in names
        assert CheckNames.CHARACTERIZATION_BACKWARD in names
        assert report.all_checks_passed
        assert service.verify(expr).all_checks_passed
