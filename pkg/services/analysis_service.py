"""
Analysis pipelines behind the analyze, chartab and verify commands.
"""

from typing import Any, Dict, List, Optional, Tuple

from chartab.table import character_table
from core.config import ConfigurationManager
from core.consts import TOOL_VERSION
from dsl.builder import build
from dsl.grammar import parse_group_expr
from groups.classes import conjugacy_classes
from groups.finite_group import FiniteGroup
from models.data_models import AnalysisReport, CheckResult, ClassificationSummary
from structure.complements import set_search_limits
from utils.i18n import _
from utils.stage_timer import get_stage_timer, set_current_expr
from utils.vcs_logger import logger
from vanishing.characterization import verify_characterization
from vanishing.classify import ClassificationResult, classify_single_vcs
from vanishing.invariants import verify_vanishing_invariants
from vanishing.profile import vanishing_profile


def summarize_classification(result: ClassificationResult) -> ClassificationSummary:
    return ClassificationSummary(
        case_label=result.case_label,
        s=result.s,
        pi=list(result.pi),
        prime=result.prime,
        normal_subgroup_order=result.normal_subgroup.order if result.normal_subgroup else None,
        complement_order=result.complement.order if result.complement else None,
        stripped_factor_order=result.stripped_factor_order,
        checks=list(result.checks),
    )


class AnalysisService:
    """Builds a group from an expression and runs the requested stages on it."""

    def __init__(
        self,
        config_manager: Optional[ConfigurationManager] = None,
        emit_table: bool = False,
        timings: bool = False,
    ):
        config_manager = config_manager or ConfigurationManager()
        self.bound = config_manager.get_enumeration_config()["bound"]
        self.seed = config_manager.get_run_config()["seed"]
        hall = config_manager.get_hall_config()
        set_search_limits(hall["random_rounds"], hall["max_generators"])
        self.emit_table = emit_table
        self.timings = timings
        self.timer = get_stage_timer()

    def _sink(self) -> Optional[Dict[str, int]]:
        return {} if self.timings else None

    def build_group(self, expr_text: str, sink: Optional[Dict[str, int]] = None) -> Tuple[str, FiniteGroup]:
        expr = parse_group_expr(expr_text)
        canonical = str(expr)
        set_current_expr(canonical)
        with self.timer.stage("build", sink):
            G = build(expr, self.bound)
        logger.info(_("Built {} of order {}").format(canonical, G.order))
        return canonical, G

    def _table_dict(self, G: FiniteGroup, sink: Optional[Dict[str, int]]) -> Dict[str, Any]:
        with self.timer.stage("chartab", sink):
            return character_table(G).to_dict()

    def _checks(self, G: FiniteGroup, result: ClassificationResult, sink) -> List[CheckResult]:
        with self.timer.stage("invariants", sink):
            checks = verify_vanishing_invariants(G, seed=self.seed, classification=result)
        with self.timer.stage("characterization", sink):
            checks += verify_characterization(G, seed=self.seed)
        failed = [c.name for c in checks if not c.passed]
        if failed:
            logger.warning(_("Failed checks: {}").format(", ".join(failed)))
        else:
            logger.info(_("All {} checks passed").format(len(checks)))
        return checks

    def analyze(self, expr_text: str) -> AnalysisReport:
        sink = self._sink()
        canonical, G = self.build_group(expr_text, sink)
        with self.timer.stage("classes", sink):
            cd = conjugacy_classes(G)
        with self.timer.stage("chartab", sink):
            profile = vanishing_profile(G)
        logger.info(_("vcs = {}").format(profile.vcs))
        with self.timer.stage("classify", sink):
            result = classify_single_vcs(G, seed=self.seed)
        checks = self._checks(G, result, sink)

        return AnalysisReport(
            expr=canonical,
            order=G.order,
            class_count=cd.k,
            cs=profile.cs,
            vcs=profile.vcs,
            classification=summarize_classification(result),
            invariant_checks=checks,
            character_table=self._table_dict(G, sink) if self.emit_table else None,
            timings=sink,
            seed=self.seed,
            tool_version=TOOL_VERSION,
        )

    def chartab(self, expr_text: str) -> Dict[str, Any]:
        sink = self._sink()
        canonical, G = self.build_group(expr_text, sink)
        data: Dict[str, Any] = {
            "expr": canonical,
            "order": G.order,
            "class_count": conjugacy_classes(G).k,
            "character_table": self._table_dict(G, sink),
        }
        if sink is not None:
            data["timings"] = sink
        data["tool_version"] = TOOL_VERSION
        return data

    def verify(self, expr_text: str) -> AnalysisReport:
        sink = self._sink()
        canonical, G = self.build_group(expr_text, sink)
        with self.timer.stage("chartab", sink):
            profile = vanishing_profile(G)
        with self.timer.stage("classify", sink):
            result = classify_single_vcs(G, seed=self.seed)
        return AnalysisReport(
            expr=canonical,
            order=G.order,
            class_count=profile.class_data.k,
            cs=profile.cs,
            vcs=profile.vcs,
            invariant_checks=self._checks(G, result, sink),
            timings=sink,
            seed=self.seed,
            tool_version=TOOL_VERSION,
        )
