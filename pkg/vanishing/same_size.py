"""
Constant class size outside N C_H(N) for a normal Hall subgroup N with complement H.

The four conditions on h in H \\ C_H(N):
    complement_index_constant   |H : C_H(h)| does not depend on h
    normal_index_constant       |N : C_N(h)| does not depend on h
    centralizers_agree          C_N(C_H(h)) = C_N(h)
    centralizers_abelian        C_N(h) is abelian
hold together exactly when every element of G outside N C_H(N) has the
same class size.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from core.errors import NotHallPair
from groups.arith import coprime
from groups.classes import conjugacy_classes
from groups.finite_group import FiniteGroup
from groups.subgroups import (
    Subgroup,
    centralizer,
    commuting_members,
    is_normal,
    join,
    subgroup_from_mask,
)

CONDITION_NAMES = [
    "complement_index_constant",
    "normal_index_constant",
    "centralizers_agree",
    "centralizers_abelian",
]


@dataclass
class SameSizeReport:
    conditions: Dict[str, bool] = field(default_factory=dict)
    degenerate: bool = False
    constant_outside: Optional[bool] = None
    outside_size: Optional[int] = None
    complement_index: Optional[int] = None
    normal_index: Optional[int] = None

    @property
    def all_conditions(self) -> bool:
        return all(self.conditions.values())

    @property
    def consistent(self) -> bool:
        """The conditions agree with the brute-force scan."""
        return self.degenerate or self.all_conditions == self.constant_outside

    def to_dict(self) -> Dict[str, object]:
        return {
            "conditions": dict(self.conditions),
            "degenerate": self.degenerate,
            "constant_outside": self.constant_outside,
            "outside_size": self.outside_size,
            "complement_index": self.complement_index,
            "normal_index": self.normal_index,
        }


def members_abelian(G: FiniteGroup, members: np.ndarray) -> bool:
    """Whether the subgroup with the given members is abelian."""
    mask = np.zeros(G.order, dtype=bool)
    mask[members] = True
    return subgroup_from_mask(G, mask).is_abelian()


def require_hall_pair(G: FiniteGroup, N: Subgroup, H: Subgroup) -> None:
    if (
        N.order * H.order != G.order
        or not coprime(N.order, H.order)
        or not is_normal(G, N)
    ):
        raise NotHallPair(
            "expected a normal Hall subgroup and a complement",
            {"normal_order": N.order, "complement_order": H.order, "group_order": G.order},
        )


def _constant(values: List[int]) -> bool:
    return len(set(values)) <= 1


def check_same_size_conditions(G: FiniteGroup, N: Subgroup, H: Subgroup) -> SameSizeReport:
    require_hall_pair(G, N, H)
    kernel = centralizer(G, N.generators, within=H)
    base = join(N, kernel)
    if base.order == G.order:
        return SameSizeReport(
            conditions={name: True for name in CONDITION_NAMES}, degenerate=True
        )

    complement_indices: List[int] = []
    normal_indices: List[int] = []
    agree, abelian = True, True
    for h in H.members[~kernel.mask[H.members]].tolist():
        C_H = commuting_members(G, H.members, [h])
        C_N = commuting_members(G, N.members, [h])
        complement_indices.append(H.order // C_H.size)
        normal_indices.append(N.order // C_N.size)
        agree = agree and commuting_members(G, C_N, C_H.tolist()).size == C_N.size
        abelian = abelian and members_abelian(G, C_N)

    cd = conjugacy_classes(G)
    outside = {int(h) for h in cd.sizes[cd.class_of[~base.mask]]}
    report = SameSizeReport(
        conditions={
            "complement_index_constant": _constant(complement_indices),
            "normal_index_constant": _constant(normal_indices),
            "centralizers_agree": agree,
            "centralizers_abelian": abelian,
        },
        constant_outside=len(outside) == 1,
        outside_size=next(iter(outside)) if len(outside) == 1 else None,
    )
    if report.conditions["complement_index_constant"]:
        report.complement_index = complement_indices[0]
    if report.conditions["normal_index_constant"]:
        report.normal_index = normal_indices[0]
    return report
