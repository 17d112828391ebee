"""
Structure of groups with a single vanishing class size s.

With pi the primes of s, the classifier first compares pi with the primes
of |G/Z(G)|. When pi is smaller the group should be N H with N a normal
Hall pi-subgroup and H an abelian complement, either as a direct product
(DirectFactor) or with G/Z(G) Frobenius with kernel NZ/Z of order s
(FrobeniusQuotient). When pi is everything, an abelian pi'-direct factor
is split off first and the rest should be a p-group (PGroup), a group
with a nilpotent normal p-complement (NormalPComplement), or the two-prime
Frobenius shape (TwoPrimeFrobenius). Every sub-condition is recorded so a
group that fits nowhere is reported with the checks it failed.
"""

from dataclasses import dataclass, field
from itertools import permutations
from typing import Any, Dict, List, Optional, Tuple

from core.consts import CaseLabels
from groups.arith import (
    is_prime_power,
    p_part,
    pi_part,
    pi_prime_part,
    prime_power_base,
    prime_set,
    sorted_primes,
)
from groups.classes import conjugacy_classes
from groups.finite_group import FiniteGroup
from groups.subgroups import (
    Subgroup,
    center,
    centralizer,
    closure,
    commuting_members,
    intersection,
    quotient,
    trivial_subgroup,
    whole_group,
)
from models.data_models import CheckResult
from structure.complements import hall_complement, normal_hall_subgroup
from structure.frobenius import (
    FrobeniusWitness,
    acts_fixed_point_freely,
    is_frobenius_with_kernel,
)
from structure.series import is_supersolvable
from structure.sylow import fitting_subgroup, is_nilpotent, is_p_group, p_core, sylow_subgroup
from utils.i18n import _
from utils.vcs_logger import logger
from vanishing.profile import VanishingProfile, vanishing_profile
from vanishing.same_size import members_abelian


@dataclass(eq=False)
class ClassificationResult:
    """Case label plus witnesses; subgroups live in `group`."""

    case_label: str
    s: Optional[int] = None
    pi: Tuple[int, ...] = ()
    group: Optional[FiniteGroup] = None
    normal_subgroup: Optional[Subgroup] = None
    complement: Optional[Subgroup] = None
    frobenius: Optional[FrobeniusWitness] = None
    prime: Optional[int] = None
    stripped_factor_order: int = 1
    checks: List[CheckResult] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    def failed_checks(self) -> List[str]:
        return [c.name for c in self.checks if not c.passed]


class _Checks:
    def __init__(self, prefix: str):
        self.prefix = prefix
        self.results: List[CheckResult] = []

    def add(self, name: str, passed: bool, **details) -> bool:
        self.results.append(CheckResult(f"{self.prefix}.{name}", bool(passed), details))
        return bool(passed)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.results)


def subgroup_center(G: FiniteGroup, S: Subgroup) -> Subgroup:
    return centralizer(G, S.generators, within=S)


def _centralizes(G: FiniteGroup, A: Subgroup, B: Subgroup) -> bool:
    return commuting_members(G, A.members, B.generators).size == A.order


def _local_classes(S: Subgroup) -> List[int]:
    return conjugacy_classes(S.as_group).class_sizes()


def _in_parent(S: Subgroup, local: Subgroup) -> Subgroup:
    """A subgroup of S.as_group as a subgroup of S's parent."""
    return closure(S.parent, S.from_local[list(local.generators)].tolist())


def _element_conditions(
    G: FiniteGroup,
    N: Subgroup,
    outer: Subgroup,
    excluded: Subgroup,
    index: int,
    checks: _Checks,
) -> None:
    """|N:C_N(x)| = index and C_N(x) = C_N(C_outer(x)) abelian for x in outer \\ excluded."""
    index_ok, agree_ok, abelian_ok = True, True, True
    for x in outer.members[~excluded.mask[outer.members]].tolist():
        C_N = commuting_members(G, N.members, [x])
        index_ok = index_ok and N.order // C_N.size == index
        C_outer = commuting_members(G, outer.members, [x])
        agree_ok = agree_ok and commuting_members(G, C_N, C_outer.tolist()).size == C_N.size
        abelian_ok = abelian_ok and members_abelian(G, C_N)
    checks.add("normal_index", index_ok, expected=index)
    checks.add("centralizers_agree", agree_ok)
    checks.add("centralizers_abelian", abelian_ok)


# --- pi smaller than pi(G/Z(G)) ------------------------------------------


def _classify_hall_pair(
    G: FiniteGroup, profile: VanishingProfile, s: int, pi: Tuple[int, ...], seed: int
) -> ClassificationResult:
    result = ClassificationResult(CaseLabels.UNCLASSIFIED, s=s, pi=pi, group=G)
    checks = _Checks("hall_pair")
    N = normal_hall_subgroup(G, pi)
    if not checks.add("normal_hall_subgroup", N is not None):
        result.checks = checks.results
        return result
    H = hall_complement(G, N, seed=seed)
    checks.add("abelian_complement", H.is_abelian())
    result.normal_subgroup, result.complement = N, H

    direct = _Checks("direct_factor")
    direct.add("prime_power", is_prime_power(s))
    direct.add("direct_product", _centralizes(G, N, H))
    direct.add("normal_class_sizes", _local_classes(N) == [1, s])
    if checks.passed and direct.passed:
        result.case_label = CaseLabels.DIRECT_FACTOR
        result.checks = checks.results + direct.results
        return result

    frobenius = _Checks("frobenius_quotient")
    Z = center(G)
    Q, phi = quotient(G, Z)
    K = phi.image(N)
    witness = None
    if frobenius.add("kernel_order", K.order == s, found=K.order):
        witness = is_frobenius_with_kernel(Q, K, seed=seed)
    frobenius.add("frobenius", witness is not None)
    HZ = phi.image(H)
    frobenius.add(
        "complement",
        witness is not None
        and HZ.order * K.order == Q.order
        and acts_fixed_point_freely(Q, K, HZ),
    )
    frobenius.add("normal_subgroup_nonvanishing", not profile.vanishes_on(N))
    result.frobenius = witness
    if checks.passed and frobenius.passed:
        result.case_label = CaseLabels.FROBENIUS_QUOTIENT
        result.checks = checks.results + frobenius.results
        result.details["quotient_order"] = Q.order
        return result

    result.checks = checks.results + direct.results + frobenius.results
    return result


# --- pi equal to pi(G/Z(G)) ------------------------------------------------


def _strip_direct_factor(
    G: FiniteGroup, pi: Tuple[int, ...]
) -> Tuple[FiniteGroup, int]:
    """G0 with G = G0 x A, A the central Hall pi'-subgroup, when it splits."""
    a = pi_prime_part(G.order, pi)
    if a == 1:
        return G, 1
    if pi_prime_part(center(G).order, pi) != a:
        return G, 1
    N = normal_hall_subgroup(G, pi)
    if N is None:
        return G, 1
    return N.as_group, a


def _p_group_case(
    G: FiniteGroup, profile: VanishingProfile, s: int
) -> Optional[List[CheckResult]]:
    checks = _Checks("p_group")
    p = prime_power_base(G.order)
    checks.add("p_group", is_p_group(G))
    checks.add("prime_power_size", p != 0 and prime_power_base(s) == p)
    checks.add("class_sizes", profile.cs == [1, s], found=profile.cs)
    return checks.results if checks.passed else None


def _normal_p_complement_case(
    G: FiniteGroup, profile: VanishingProfile, s: int, p: int
) -> Tuple[bool, List[CheckResult], Dict[str, Any], Optional[Subgroup], Optional[Subgroup]]:
    checks = _Checks(f"normal_p_complement[{p}]")
    details: Dict[str, Any] = {}
    others = prime_set(G.order) - {p}
    N = normal_hall_subgroup(G, others) if others else None
    if not checks.add("normal_complement", N is not None and N.order > 1):
        return False, checks.results, details, None, None
    checks.add("nilpotent_complement", is_nilpotent(N.as_group))
    P = sylow_subgroup(G, p)
    s_p = p_part(s, p)
    checks.add("sylow_class_sizes", _local_classes(P) == [1, s_p], expected=[1, s_p])

    Z = center(G)
    ZP = subgroup_center(G, P)
    CPN = centralizer(G, N.generators, within=P)
    ZGP = intersection(Z, P)
    checks.add("sylow_center", ZP.same_as(CPN) and ZP.same_as(ZGP))
    checks.add(
        "central_quotient_exponent",
        all(ZP.mask[G.power(x, p)] for x in P.members.tolist()),
    )
    _element_conditions(G, N, P, ZP, s // s_p, checks)
    CNP = centralizer(G, P.generators, within=N)
    checks.add("fixed_points_central", CNP.same_as(intersection(N, Z)))
    checks.add("normal_subgroup_nonvanishing", not profile.vanishes_on(N))
    checks.add("normal_center_nonvanishing", not profile.vanishes_on(subgroup_center(G, N)))
    if is_supersolvable(G):
        checks.add("supersolvable_abelian_complement", N.is_abelian())
        checks.add(
            "supersolvable_elementary_quotient",
            all(
                ZP.mask[G.commutator(a, b)]
                for a in P.generators
                for b in P.generators
            ),
        )
    details["normal_abelian"] = N.is_abelian()
    return checks.passed, checks.results, details, N, P


def _two_prime_case(
    G: FiniteGroup, profile: VanishingProfile, s: int, p: int, q: int, seed: int
) -> Tuple[bool, List[CheckResult], Optional[Subgroup], Optional[Subgroup]]:
    checks = _Checks(f"two_prime_frobenius[{p},{q}]")
    others = prime_set(G.order) - {p, q}
    N = normal_hall_subgroup(G, others) if others else trivial_subgroup(G)
    if not checks.add("normal_complement", N is not None):
        return False, checks.results, None, None
    checks.add("nilpotent_complement", is_nilpotent(N.as_group))
    H = whole_group(G) if N.order == 1 else hall_complement(G, N, seed=seed)
    Hg = H.as_group
    checks.add("hall_not_supersolvable", not is_supersolvable(Hg))
    s_pq = pi_part(s, (p, q))
    checks.add("hall_vcs", vanishing_profile(Hg).vcs == [s_pq], expected=[s_pq])
    checks.add("q_squared_divides", s % (q * q) == 0)

    F_local = fitting_subgroup(Hg)
    Q_bar, phi = quotient(Hg, F_local)
    K_bar = normal_hall_subgroup(Q_bar, [p]) if Q_bar.order > 1 else None
    frobenius_ok = (
        K_bar is not None
        and Q_bar.order // K_bar.order == q
        and all(o in (1, p) for o in conjugacy_classes(K_bar.as_group).orders.tolist())
        and is_frobenius_with_kernel(Q_bar, K_bar, seed=seed) is not None
    )
    checks.add("fitting_quotient_frobenius", frobenius_ok)

    F_H = _in_parent(H, F_local)
    checks.add("hall_fitting", F_H.same_as(intersection(fitting_subgroup(G), H)))
    P_local = sylow_subgroup(Hg, p)
    Q_local = sylow_subgroup(Hg, q)
    checks.add(
        "fitting_contains_sylow_centers",
        subgroup_center(Hg, P_local).issubset(F_local)
        and subgroup_center(Hg, Q_local).issubset(F_local),
    )
    _element_conditions(G, N, H, F_H, s // s_pq, checks)
    CNH = centralizer(G, H.generators, within=N)
    checks.add("fixed_points_central", CNH.same_as(intersection(N, center(G))))
    NOp = closure(G, p_core(G, p).generators, start=N)
    checks.add("normal_core_nonvanishing", not profile.vanishes_on(NOp))
    return checks.passed, checks.results, N, H


def _classify_full_prime_set(
    G: FiniteGroup, profile: VanishingProfile, s: int, pi: Tuple[int, ...], seed: int
) -> ClassificationResult:
    G0, stripped = _strip_direct_factor(G, pi)
    result = ClassificationResult(
        CaseLabels.UNCLASSIFIED, s=s, pi=pi, group=G0, stripped_factor_order=stripped
    )
    profile0 = vanishing_profile(G0) if stripped > 1 else profile
    strip_checks = _Checks("direct_factor_strip")
    if stripped > 1:
        strip_checks.add("vcs_preserved", profile0.vcs == [s], found=profile0.vcs)

    p_group = _p_group_case(G0, profile0, s)
    if p_group is not None:
        result.case_label = CaseLabels.P_GROUP
        result.prime = prime_power_base(G0.order)
        result.checks = strip_checks.results + p_group
        return result

    attempts: List[CheckResult] = []
    for p in pi:
        ok, checks, details, N, P = _normal_p_complement_case(G0, profile0, s, p)
        if ok:
            result.case_label = CaseLabels.NORMAL_P_COMPLEMENT
            result.prime = p
            result.normal_subgroup, result.complement = N, P
            result.checks = strip_checks.results + checks
            result.details.update(details)
            return result
        attempts.extend(checks)

    for p, q in permutations(pi, 2):
        ok, checks, N, H = _two_prime_case(G0, profile0, s, p, q, seed)
        if ok:
            result.case_label = CaseLabels.TWO_PRIME_FROBENIUS
            result.prime = p
            result.normal_subgroup, result.complement = N, H
            result.checks = strip_checks.results + checks
            result.details["q"] = q
            return result
        attempts.extend(checks)

    result.checks = strip_checks.results + attempts
    return result


def classify_single_vcs(G: FiniteGroup, seed: int = 0) -> ClassificationResult:
    profile = vanishing_profile(G)
    s = profile.s
    if s is None:
        return ClassificationResult(CaseLabels.NOT_SINGLE_VCS, group=G)

    pi = profile.pi
    quotient_primes = sorted_primes(prime_set(G.order // center(G).order))
    if pi != quotient_primes:
        result = _classify_hall_pair(G, profile, s, pi, seed)
    else:
        result = _classify_full_prime_set(G, profile, s, pi, seed)

    if result.case_label == CaseLabels.UNCLASSIFIED:
        logger.warning(
            _("Single vanishing class size {} but no known shape fits; failed: {}").format(
                s, ", ".join(result.failed_checks())
            )
        )
    else:
        logger.info(_("Classified as {} with s = {}").format(result.case_label, s))
    return result


def nilpotent_hall(G: FiniteGroup, pi: Tuple[int, ...]) -> Optional[bool]:
    """Whether the normal Hall pi-subgroup is nilpotent; None when there is none."""
    N = normal_hall_subgroup(G, pi)
    return None if N is None else is_nilpotent(N.as_group)