"""
Two-way check of the structure of groups with vcs(G) = {s}, s a prime
power or square-free.

Forward: a single such size forces G = N H (N normal Hall pi, H abelian)
with either G = N x H and cs(N) = {1, s} for s a prime power, or G/Z(G)
Frobenius with kernel NZ/Z of order s and no vanishing element in N.
Backward: any group with one of these shapes has vcs(G) = {s}.
"""

from dataclasses import dataclass
from typing import List, Optional, Set, Tuple

from core.consts import CaseLabels, CheckNames
from groups.arith import is_prime_power, is_squarefree, prime_set, sorted_primes
from groups.classes import conjugacy_classes
from groups.finite_group import FiniteGroup
from groups.subgroups import Subgroup, center, commuting_members, quotient
from models.data_models import CheckResult
from structure.complements import hall_complement, normal_hall_subgroup
from structure.frobenius import is_frobenius_with_kernel
from structure.sylow import fitting_subgroup, p_core
from utils.i18n import _
from utils.vcs_logger import logger
from vanishing.profile import VanishingProfile, vanishing_profile


@dataclass
class CharacterizationShape:
    case_label: str
    s: int
    normal_order: int
    complement_order: int


def _admissible(s: int) -> bool:
    return s > 1 and (is_prime_power(s) or is_squarefree(s))


def _hall_pair(G: FiniteGroup, s: int, seed: int) -> Optional[Tuple[Subgroup, Subgroup]]:
    N = normal_hall_subgroup(G, sorted_primes(prime_set(s)))
    if N is None:
        return None
    H = hall_complement(G, N, seed=seed)
    return (N, H) if H.is_abelian() else None


def match_shape(
    G: FiniteGroup, s: int, profile: VanishingProfile, seed: int = 0
) -> Optional[CharacterizationShape]:
    """The shape G has for the given s, or None."""
    pair = _hall_pair(G, s, seed)
    if pair is None:
        return None
    N, H = pair

    if is_prime_power(s):
        direct = commuting_members(G, N.members, H.generators).size == N.order
        if direct and conjugacy_classes(N.as_group).class_sizes() == [1, s]:
            return CharacterizationShape(CaseLabels.DIRECT_FACTOR, s, N.order, H.order)

    Q, phi = quotient(G, center(G))
    K = phi.image(N)
    if (
        K.order == s
        and is_frobenius_with_kernel(Q, K, seed=seed) is not None
        and not profile.vanishes_on(N)
    ):
        return CharacterizationShape(CaseLabels.FROBENIUS_QUOTIENT, s, N.order, H.order)
    return None


def candidate_sizes(G: FiniteGroup) -> Set[int]:
    """Values of s for which G might have one of the two shapes."""
    sizes: Set[int] = set()
    for p in prime_set(G.order):
        P = p_core(G, p)
        if P.order > 1 and not P.is_abelian():
            sizes.add(max(conjugacy_classes(P.as_group).class_sizes()))
    Q = quotient(G, center(G))[0]
    if Q.order > 1:
        sizes.add(fitting_subgroup(Q).order)
    return {s for s in sizes if _admissible(s)}


def verify_characterization(G: FiniteGroup, seed: int = 0) -> List[CheckResult]:
    profile = vanishing_profile(G)
    s = profile.s

    if s is not None and _admissible(s):
        shape = match_shape(G, s, profile, seed)
        forward = CheckResult(
            CheckNames.CHARACTERIZATION_FORWARD,
            shape is not None,
            {"applicable": True, "s": s, "case_label": shape.case_label if shape else None},
        )
    else:
        forward = CheckResult(
            CheckNames.CHARACTERIZATION_FORWARD, True, {"applicable": False, "vcs": profile.vcs}
        )

    shapes = [
        shape
        for size in sorted(candidate_sizes(G))
        if (shape := match_shape(G, size, profile, seed)) is not None
    ]
    wrong = [shape.s for shape in shapes if profile.vcs != [shape.s]]
    backward = CheckResult(
        CheckNames.CHARACTERIZATION_BACKWARD,
        not wrong,
        {
            "applicable": bool(shapes),
            "detected": [
                {"case_label": shape.case_label, "s": shape.s, "normal_order": shape.normal_order}
                for shape in shapes
            ],
            "vcs": profile.vcs,
        },
    )

    for check in (forward, backward):
        if not check.passed:
            logger.warning(
                _("Characterization check {} failed on {}: {}").format(check.name, G.name, check.details)
            )
    return [forward, backward]
