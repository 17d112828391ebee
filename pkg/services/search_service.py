"""
Family search harness: sweeps a grid of group expressions, classifies each
group with a single vanishing class size and appends the outcome to the
results catalog.

A grid file is JSON:

    {
      "order_cap": 200000,
      "points": ["sdp(3^3,ES(2,+),maxker)"],
      "families": [
        {"template": "sdp({r}^3,ES(2,{sign}),maxker)",
         "params": {"r": [3, 5, 7, 11], "sign": ["+", "-"]}}
      ]
    }
"""

import json
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from tqdm import tqdm

from core.config import ConfigurationManager
from core.consts import TOOL_VERSION, CaseLabels, RecordStatus
from core.errors import BadParams, VcsError
from dsl.builder import build, expected_order
from dsl.grammar import parse_group_expr
from models.data_models import CatalogRecord
from services.catalog import ResultsCatalog
from structure.complements import set_search_limits
from utils.i18n import _
from utils.vcs_logger import logger, run_logging
from vanishing.classify import ClassificationResult, classify_single_vcs
from vanishing.profile import vanishing_profile


def load_grid(path: Union[str, Path]) -> Dict[str, Any]:
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as f:
            grid = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise BadParams(f"cannot read grid file {path}: {e}", {"grid": str(path)}) from e
    if not isinstance(grid, dict):
        raise BadParams("grid file must hold a JSON object", {"grid": str(path)})
    return grid


def expand_grid(grid: Dict[str, Any]) -> List[str]:
    """Grid points in file order, templates expanded over sorted parameter names."""
    points: List[str] = list(grid.get("points", []))
    for index, family in enumerate(grid.get("families", [])):
        template = family.get("template")
        params = family.get("params", {})
        if not isinstance(template, str) or not isinstance(params, dict):
            raise BadParams(f"family {index} needs a template string and a params object", {"family": index})
        names = sorted(params)
        for values in product(*(params[name] for name in names)):
            try:
                points.append(template.format(**dict(zip(names, values))))
            except (KeyError, IndexError, ValueError) as e:
                raise BadParams(
                    f"family {index} template {template!r} cannot be filled: {e!r}",
                    {"family": index, "template": template, "params": names},
                ) from e
    return points


def canonical_points(points: List[str]) -> List[str]:
    """Canonical forms with duplicates dropped; unparsable text is kept as is."""
    seen, ordered = set(), []
    for text in points:
        try:
            key = str(parse_group_expr(text))
        except VcsError:
            key = text
        if key not in seen:
            seen.add(key)
            ordered.append(key)
    return ordered


def is_finding(result: ClassificationResult) -> bool:
    """Single vcs groups that fit no known shape or hit an open case."""
    if result.case_label == CaseLabels.UNCLASSIFIED:
        return True
    if result.case_label == CaseLabels.TWO_PRIME_FROBENIUS:
        return True
    return (
        result.case_label == CaseLabels.NORMAL_P_COMPLEMENT
        and result.normal_subgroup is not None
        and not result.normal_subgroup.is_abelian()
    )


class SearchService:
    def __init__(self, config_manager: Optional[ConfigurationManager] = None):
        config_manager = config_manager or ConfigurationManager()
        search = config_manager.get_search_config()
        self.max_workers = search["max_workers"]
        self.order_cap = search["order_cap"]
        self.bound = config_manager.get_enumeration_config()["bound"]
        self.seed = config_manager.get_run_config()["seed"]
        hall = config_manager.get_hall_config()
        set_search_limits(hall["random_rounds"], hall["max_generators"])

    def _record(self, expr: str, status: str, **fields) -> CatalogRecord:
        return CatalogRecord(expr=expr, status=status, seed=self.seed, tool_version=TOOL_VERSION, **fields)

    def effective_cap(self, grid: Dict[str, Any]) -> int:
        """The grid may lower the configured cap, never raise it; the enumeration bound also applies."""
        try:
            grid_cap = int(grid.get("order_cap", self.order_cap))
        except (TypeError, ValueError) as e:
            raise BadParams(f"grid order_cap must be an integer: {e}", {"order_cap": grid.get("order_cap")}) from e
        return min(grid_cap, self.order_cap, self.bound)

    def run_point(self, expr: str, order_cap: int) -> CatalogRecord:
        """Analyze one grid point; failures become error records."""
        try:
            order = expected_order(expr)
        except VcsError as e:
            return self._record(expr, RecordStatus.ERROR, reason=f"{type(e).__name__}: {e.message}")
        if order > order_cap:
            return self._record(
                expr,
                RecordStatus.SKIPPED,
                order=order,
                reason=f"order {order} exceeds cap {order_cap}",
            )

        with run_logging(expr):
            try:
                G = build(expr, self.bound)
                profile = vanishing_profile(G)
                result = classify_single_vcs(G, seed=self.seed)
            except Exception as e:
                message = e.message if isinstance(e, VcsError) else str(e)
                logger.error(_("Grid point {} failed: {}").format(expr, message))
                return self._record(
                    expr, RecordStatus.ERROR, order=order, reason=f"{type(e).__name__}: {message}"
                )
            finding = len(profile.vcs) == 1 and is_finding(result)
            if finding:
                logger.warning(_("FINDING: {} classified as {}").format(expr, result.case_label))
            return self._record(
                expr,
                RecordStatus.OK,
                order=G.order,
                vcs=profile.vcs,
                case_label=result.case_label,
                finding=finding,
            )

    def sweep(self, grid: Dict[str, Any], catalog: ResultsCatalog) -> List[CatalogRecord]:
        """Run every grid point missing from the catalog and append the results in grid order."""
        order_cap = self.effective_cap(grid)
        done = catalog.completed_exprs()
        pending = [p for p in canonical_points(expand_grid(grid)) if p not in done]
        logger.info(
            _("{} grid points to run, {} already in the catalog").format(len(pending), len(done))
        )
        if not pending:
            return []

        appended: List[CatalogRecord] = []
        with ThreadPoolExecutor(max_workers=self.max_workers, thread_name_prefix="GridPoint") as executor:
            futures = [executor.submit(self.run_point, expr, order_cap) for expr in pending]
            for future in tqdm(futures, desc=_("Grid points"), unit="group"):
                record = future.result()
                catalog.append(record)
                appended.append(record)

        summary = catalog.summary()
        logger.info(_("Catalog status counts: {}").format(summary["status"]))
        logger.info(_("Catalog case counts: {}").format(summary["case_label"]))
        return appended
