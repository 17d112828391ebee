"""
Data models
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np


def json_default(value: Any) -> Any:
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"not JSON serializable: {type(value).__name__}")


@dataclass
class CheckResult:
    """Outcome of one named invariant check."""

    name: str = ""
    passed: bool = True
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "details": self.details,
        }


@dataclass
class ClassificationSummary:
    """Serializable view of a classification: label, s, pi, witnesses by order."""

    case_label: str = ""
    s: Optional[int] = None
    pi: List[int] = field(default_factory=list)
    prime: Optional[int] = None
    normal_subgroup_order: Optional[int] = None
    complement_order: Optional[int] = None
    stripped_factor_order: int = 1
    checks: List[CheckResult] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "case_label": self.case_label,
            "s": self.s,
            "pi": self.pi,
            "prime": self.prime,
            "normal_subgroup_order": self.normal_subgroup_order,
            "complement_order": self.complement_order,
            "stripped_factor_order": self.stripped_factor_order,
            "checks": [c.to_dict() for c in self.checks],
        }


@dataclass
class AnalysisReport:
    """Everything the analyze command prints for one group expression."""

    expr: str = ""
    order: int = 0
    class_count: int = 0
    cs: List[int] = field(default_factory=list)
    vcs: List[int] = field(default_factory=list)
    classification: Optional[ClassificationSummary] = None
    invariant_checks: List[CheckResult] = field(default_factory=list)
    character_table: Optional[Dict[str, Any]] = None
    timings: Optional[Dict[str, int]] = None
    seed: int = 0
    tool_version: str = ""

    @property
    def all_checks_passed(self) -> bool:
        return all(c.passed for c in self.invariant_checks)

    def to_dict(self) -> Dict[str, Any]:
        """Fixed key order; optional sections only when present."""
        data: Dict[str, Any] = {
            "expr": self.expr,
            "order": self.order,
            "class_count": self.class_count,
            "cs": self.cs,
            "vcs": self.vcs,
            "classification": self.classification.to_dict() if self.classification else None,
            "invariant_checks": [c.to_dict() for c in self.invariant_checks],
        }
        if self.character_table is not None:
            data["character_table"] = self.character_table
        if self.timings is not None:
            data["timings"] = self.timings
        data["seed"] = self.seed
        data["tool_version"] = self.tool_version
        return data


@dataclass
class CatalogRecord:
    """One line of the results catalog."""

    expr: str = ""
    status: str = ""
    order: Optional[int] = None
    vcs: List[int] = field(default_factory=list)
    case_label: Optional[str] = None
    finding: bool = False
    reason: str = ""
    seed: int = 0
    tool_version: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "expr": self.expr,
            "status": self.status,
            "order": self.order,
            "vcs": self.vcs,
            "case_label": self.case_label,
            "finding": self.finding,
            "reason": self.reason,
            "seed": self.seed,
            "tool_version": self.tool_version,
        }

    def to_json_line(self) -> str:
        return json.dumps(
            self.to_dict(), separators=(",", ":"), ensure_ascii=False, default=json_default
        )

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CatalogRecord":
        return cls(
            expr=data.get("expr", ""),
            status=data.get("status", ""),
            order=data.get("order"),
            vcs=list(data.get("vcs", [])),
            case_label=data.get("case_label"),
            finding=bool(data.get("finding", False)),
            reason=data.get("reason", ""),
            seed=int(data.get("seed", 0)),
            tool_version=data.get("tool_version", ""),
        )
