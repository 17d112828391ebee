"""
Invariant checks relating vanishing elements to group structure.

Each check runs only when its hypotheses hold for the group at hand and
reports a CheckResult; a failing check carries the offending data in its
details.
"""

from math import gcd
from typing import Iterable, List, Optional, Tuple

import numpy as np

from chartab.table import character_table, verify_orthogonality
from core.consts import CaseLabels, CheckNames, PrimeOrderKinds
from groups.arith import (
    is_squarefree,
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
    commutator_subgroup,
    intersection,
    is_normal,
    join,
    quotient,
)
from models.data_models import CheckResult
from structure.complements import hall_complement, normal_hall_subgroup
from structure.frobenius import is_frobenius_with_kernel, prime_order_classification
from structure.series import (
    is_solvable,
    is_supersolvable,
    minimal_normal_subgroups,
    order_modulo,
)
from structure.sylow import fitting_subgroup, is_nilpotent, sylow_subgroup
from vanishing.classify import (
    ClassificationResult,
    classify_single_vcs,
    nilpotent_hall,
    subgroup_center,
)
from vanishing.profile import VanishingProfile, vanishing_profile
from vanishing.same_size import check_same_size_conditions

# quotients G/M checked for lifting of vanishing classes
MAX_LIFT_QUOTIENTS = 4
# offending elements reported per failed check
WITNESS_LIMIT = 8


def _witnesses(mask: np.ndarray) -> List[int]:
    return np.flatnonzero(mask)[:WITNESS_LIMIT].tolist()


def conjugation_closure(G: FiniteGroup, mask: np.ndarray, conjugators: Iterable[int]) -> np.ndarray:
    """Union of the conjugates of a set under the group generated by conjugators."""
    mask = mask.copy()
    perms = [G.conjugate_all(np.arange(G.order, dtype=np.intp), c) for c in conjugators]
    while True:
        before = int(np.count_nonzero(mask))
        for perm in perms:
            mask[perm[mask]] = True
        if int(np.count_nonzero(mask)) == before:
            return mask


def core_mask(G: FiniteGroup, mask: np.ndarray, conjugators: Iterable[int]) -> np.ndarray:
    """Intersection of the conjugates of a set under the group generated by conjugators."""
    mask = mask.copy()
    perms = [G.conjugate_all(np.arange(G.order, dtype=np.intp), c) for c in conjugators]
    while True:
        before = int(np.count_nonzero(mask))
        for perm in perms:
            mask &= mask[perm]
        if int(np.count_nonzero(mask)) == before:
            return mask


def _local_zero_elements(S: Subgroup) -> Tuple[np.ndarray, np.ndarray]:
    """Zero mask of Irr(S) per (character, element of S), in parent order, with degrees."""
    local = S.as_group
    if local.is_abelian():
        return np.zeros((0, S.parent.order), dtype=bool), np.zeros(0, dtype=np.int64)
    table = character_table(local)
    cd = conjugacy_classes(local)
    zeros = np.zeros((table.k, S.parent.order), dtype=bool)
    zeros[:, S.from_local] = table.zero_mask()[:, cd.class_of]
    return zeros, np.array(table.degrees, dtype=np.int64)


class _Suite:
    def __init__(self):
        self.results: List[CheckResult] = []

    def add(self, name: str, passed: bool, **details) -> None:
        self.results.append(CheckResult(name, bool(passed), details))


def _table_checks(G: FiniteGroup, suite: _Suite) -> None:
    if G.is_abelian():
        return
    table = character_table(G)
    zeros = table.zero_mask()
    burnside = all(zeros[r].any() for r, d in enumerate(table.degrees) if d > 1)
    divides = all(G.order % d == 0 for d in table.degrees)
    degree_sum = sum(d * d for d in table.degrees) == G.order
    suite.add(
        CheckNames.CHARACTER_TABLE_ORTHOGONALITY,
        verify_orthogonality(table) and burnside and divides and degree_sum,
        burnside_zeros=burnside,
        degrees_divide_order=divides,
        degree_square_sum=degree_sum,
    )


def _hall_pair_checks(
    G: FiniteGroup, profile: VanishingProfile, seed: int, suite: _Suite
) -> Optional[Tuple[Subgroup, Subgroup]]:
    pi = sorted_primes(p for s in profile.vcs for p in prime_set(s))
    N = normal_hall_subgroup(G, pi)
    H = hall_complement(G, N, seed=seed) if N is not None else None
    suite.add(
        CheckNames.NORMAL_HALL_WITH_ABELIAN_COMPLEMENT,
        H is not None and H.is_abelian(),
        pi=list(pi),
        normal_order=None if N is None else N.order,
    )
    if H is None:
        return None

    vanishing = profile.element_mask()
    fixed = centralizer(G, H.generators, within=N)
    reachable = conjugation_closure(G, fixed.mask, N.generators)
    stray = vanishing & N.mask & ~reachable
    suite.add(
        CheckNames.VANISHING_HALL_ELEMENTS_IN_FIXED_POINTS,
        not stray.any(),
        witnesses=_witnesses(stray),
    )
    return N, H


def _normal_hall_checks(
    G: FiniteGroup, profile: VanishingProfile, N: Subgroup, H: Subgroup, suite: _Suite
) -> None:
    Z = center(G)
    ZN = intersection(Z, N)
    fixed = centralizer(G, H.generators, within=N)
    center_n = subgroup_center(G, N)
    ok = intersection(fixed, center_n).same_as(ZN)
    if fixed.is_abelian():
        ok = ok and np.array_equal(core_mask(G, fixed.mask, N.generators), ZN.mask)
    suite.add(CheckNames.CENTRAL_HALL_INTERSECTION, ok, fixed_point_order=fixed.order)

    if H.is_abelian():
        kernel = centralizer(G, N.generators, within=H)
        ok = kernel.same_as(intersection(Z, H))
        if ok and kernel.order > 1:
            Q, phi = quotient(G, kernel)
            cd, qcd = conjugacy_classes(G), conjugacy_classes(Q)
            same_sizes = all(
                int(qcd.sizes[qcd.class_of[phi(x)]]) == int(cd.sizes[i])
                for i, x in enumerate(cd.reps.tolist())
            )
            ok = same_sizes and set(vanishing_profile(Q).vcs) <= set(profile.vcs)
        suite.add(CheckNames.CENTRAL_COMPLEMENT_PART, ok, kernel_order=kernel.order)

    zeros, degrees = _local_zero_elements(N)
    if zeros.size:
        lifted = zeros[:, fixed.members].any(axis=0)
        missing = fixed.members[lifted & ~profile.element_mask()[fixed.members]]
        suite.add(
            CheckNames.FIXED_POINT_ZEROS_LIFT, missing.size == 0, witnesses=missing[:WITNESS_LIMIT].tolist()
        )


def _same_size_checks(
    G: FiniteGroup, N: Subgroup, H: Subgroup, seed: int, suite: _Suite
) -> None:
    report = check_same_size_conditions(G, N, H)
    suite.add(CheckNames.SAME_SIZE_CONDITIONS, report.consistent, **report.to_dict())
    if report.degenerate or not H.is_abelian():
        return

    fixed = centralizer(G, H.generators, within=N)
    kernel = centralizer(G, N.generators, within=H)
    agree = all(
        centralizer(G, [h], within=N).same_as(fixed)
        for h in H.members[~kernel.mask[H.members]].tolist()
    )
    simplified = agree and fixed.is_abelian()
    ok = simplified == report.constant_outside
    if ok and simplified and is_normal(G, fixed, conjugators=list(N.generators)):
        Z = center(G)
        Q, phi = quotient(G, Z)
        ok = is_frobenius_with_kernel(Q, phi.image(N), seed=seed) is not None
    suite.add(CheckNames.CONSTANT_SIZE_ABELIAN_COMPLEMENT, ok, simplified=simplified)


def _nonlinear_checks(G: FiniteGroup, N: Subgroup, H: Subgroup, suite: _Suite) -> None:
    kernel = centralizer(G, N.generators, within=H)
    if kernel.order == H.order or not is_nilpotent(N.as_group):
        return
    zeros, degrees = _local_zero_elements(N)
    if not zeros.size:
        return
    fixed = centralizer(G, H.generators, within=N)
    reachable = conjugation_closure(G, fixed.mask, N.generators)
    outside = N.mask & ~reachable
    failing = [r for r, d in enumerate(degrees.tolist()) if d > 1 and not (zeros[r] & outside).any()]
    suite.add(CheckNames.NONLINEAR_VANISH_OUTSIDE_FIXED_POINTS, not failing, characters=failing)


def _solvable_checks(G: FiniteGroup, profile: VanishingProfile, suite: _Suite) -> None:
    F = fitting_subgroup(G)
    nonvanishing = ~profile.element_mask()
    if is_supersolvable(G):
        stray = nonvanishing & ~subgroup_center(G, F).mask
        suite.add(
            CheckNames.NONVANISHING_IN_FITTING_CENTER, not stray.any(), witnesses=_witnesses(stray)
        )
    if is_solvable(G):
        cd = conjugacy_classes(G)
        bad = [
            int(x)
            for i, x in enumerate(cd.reps.tolist())
            if not profile.vanishing[i] and not _is_two_power(order_modulo(G, int(x), F))
        ]
        suite.add(CheckNames.NONVANISHING_TWO_POWER_MOD_FITTING, not bad, witnesses=bad[:WITNESS_LIMIT])
    if profile.vcs and all(is_squarefree(s) for s in profile.vcs):
        suite.add(CheckNames.SQUARE_FREE_SIZES_SUPERSOLVABLE, is_supersolvable(G), vcs=profile.vcs)


def _is_two_power(n: int) -> bool:
    return n & (n - 1) == 0


def _normal_complement_checks(G: FiniteGroup, profile: VanishingProfile, suite: _Suite) -> None:
    vanishing = profile.element_mask()
    primes = prime_set(G.order)
    stray_total = []
    applied = False
    for p in sorted(primes):
        others = primes - {p}
        if not others or normal_hall_subgroup(G, others) is None:
            continue
        applied = True
        P = sylow_subgroup(G, p)
        outside = P.mask & ~subgroup_center(G, P).mask
        stray_total.extend(_witnesses(outside & ~vanishing))
    if applied:
        suite.add(CheckNames.COMPLEMENT_NONCENTRAL_VANISH, not stray_total, witnesses=stray_total)


def _single_size_checks(
    G: FiniteGroup,
    profile: VanishingProfile,
    classification: ClassificationResult,
    seed: int,
    suite: _Suite,
) -> None:
    s = profile.s
    pi = profile.pi
    vanishing = profile.element_mask()
    F = fitting_subgroup(G)

    if bool(np.all(vanishing[~F.mask])):
        ok = all(
            subgroup_center(G, sylow_subgroup(G, p)).issubset(subgroup_center(G, F)) for p in pi
        )
        if F.order < G.order:
            Q, _ = quotient(G, F)
            cyclic = int(conjugacy_classes(Q).orders.max()) == Q.order
            prime_orders = prime_order_classification(Q).kind != PrimeOrderKinds.NOT_ALL_PRIME_ORDER
            ok = ok and ((cyclic and gcd(Q.order, s) == 1) or prime_orders)
        suite.add(CheckNames.FITTING_QUOTIENT_DICHOTOMY, ok)

    if is_squarefree(s) and set(pi) == set(prime_set(G.order)):
        suite.add(
            CheckNames.SQUARE_FREE_FULL_PRIME_SET,
            len(pi) == 1 and prime_power_base(G.order) == s and profile.cs == [1, s],
            s=s,
        )

    quotient_primes = prime_set(G.order // center(G).order)
    if set(pi) < set(quotient_primes) and (
        is_supersolvable(G) or (G.order // F.order) % 2 == 1
    ):
        suite.add(CheckNames.HALL_SUBGROUP_NILPOTENT, bool(nilpotent_hall(G, pi)))

    minimal = minimal_normal_subgroups(G)
    nonabelian = [M.order for M in minimal if not M.is_abelian()]
    suite.add(CheckNames.MINIMAL_NORMAL_SUBGROUPS_ABELIAN, not nonabelian, orders=nonabelian)

    if classification.case_label == CaseLabels.FROBENIUS_QUOTIENT:
        suite.add(CheckNames.FROBENIUS_QUOTIENT_SPLITTING, _frobenius_splitting(G, classification, seed))


def _frobenius_splitting(G: FiniteGroup, result: ClassificationResult, seed: int) -> bool:
    """G = C_N(H) x [N,H]H with |[N,H]| = s and [N,H]H / C_H(N) Frobenius."""
    N, H = result.normal_subgroup, result.complement
    fixed = centralizer(G, H.generators, within=N)
    B = commutator_subgroup(G, N, H)
    BH = join(B, H)
    if not (
        intersection(fixed, BH).is_trivial()
        and fixed.order * BH.order == G.order
        and centralizer(G, BH.generators, within=fixed).order == fixed.order
        and B.order == result.s
    ):
        return False
    local = BH.as_group
    kernel = closure(local, BH.to_local(list(centralizer(G, N.generators, within=H).generators)))
    Q, phi = quotient(local, kernel)
    K = phi.image(closure(local, BH.to_local(list(B.generators))))
    return is_frobenius_with_kernel(Q, K, seed=seed) is not None


def _quotient_lift_checks(G: FiniteGroup, profile: VanishingProfile, suite: _Suite) -> None:
    candidates = [center(G)] + minimal_normal_subgroups(G)
    chosen: List[Subgroup] = []
    for M in candidates:
        if 1 < M.order < G.order and not any(M.same_as(C) for C in chosen):
            chosen.append(M)
        if len(chosen) == MAX_LIFT_QUOTIENTS:
            break
    if not chosen:
        return
    vanishing = profile.element_mask()
    failures = []
    for M in chosen:
        Q, phi = quotient(G, M)
        lifted = vanishing_profile(Q).element_mask()[phi.image_of]
        if (lifted & ~vanishing).any():
            failures.append(M.order)
    suite.add(
        CheckNames.QUOTIENT_VANISHING_LIFT,
        not failures,
        quotient_kernels=[M.order for M in chosen],
        failing_kernels=failures,
    )


def verify_vanishing_invariants(
    G: FiniteGroup,
    seed: int = 0,
    classification: Optional[ClassificationResult] = None,
) -> List[CheckResult]:
    profile = vanishing_profile(G)
    suite = _Suite()

    suite.add(
        CheckNames.VANISHING_SIZES_ARE_CLASS_SIZES,
        set(profile.vcs) <= set(profile.cs) - {1},
        vcs=profile.vcs,
    )
    suite.add(CheckNames.VANISHING_FREE_IFF_ABELIAN, (not profile.vcs) == G.is_abelian())
    _table_checks(G, suite)

    if profile.vcs:
        pair = _hall_pair_checks(G, profile, seed, suite)
        if pair is not None and 1 < pair[0].order < G.order:
            N, H = pair
            _normal_hall_checks(G, profile, N, H, suite)
            _same_size_checks(G, N, H, seed, suite)
            _nonlinear_checks(G, N, H, suite)

    _solvable_checks(G, profile, suite)
    _normal_complement_checks(G, profile, suite)

    if profile.s is not None:
        if classification is None:
            classification = classify_single_vcs(G, seed=seed)
        _single_size_checks(G, profile, classification, seed, suite)

    _quotient_lift_checks(G, profile, suite)
    return suite.results
