"""
Frobenius kernels and groups whose nontrivial elements all have prime order.
"""

from dataclasses import dataclass
from math import gcd
from typing import Optional, Tuple

import numpy as np
from sympy import isprime

from core.consts import PrimeOrderKinds
from groups.arith import p_part, prime_set
from groups.classes import conjugacy_classes
from groups.finite_group import FiniteGroup
from groups.subgroups import Subgroup, is_normal
from structure.complements import hall_complement
from structure.series import is_simple, is_solvable
from structure.sylow import is_nilpotent, p_core
from utils.i18n import _
from utils.vcs_logger import logger


@dataclass(frozen=True, eq=False)
class FrobeniusWitness:
    kernel: Subgroup
    complement: Subgroup
    fixed_point_free: bool


@dataclass(frozen=True)
class PrimeOrderClass:
    kind: str
    primes: Tuple[int, ...] = ()


def centralizer_inside(G: FiniteGroup, x: int, K: Subgroup) -> bool:
    everything = np.arange(G.order, dtype=np.intp)
    commuting = G.right_multiply(everything, x) == G.left_multiply(everything, x)
    return bool(np.all(K.mask[commuting]))


def acts_fixed_point_freely(G: FiniteGroup, K: Subgroup, H: Subgroup) -> bool:
    """C_K(h) = 1 for every nontrivial h in H."""
    for h in H.members[1:].tolist():
        fixed = G.right_multiply(K.members, h) == G.left_multiply(K.members, h)
        if int(np.count_nonzero(fixed)) != 1:
            return False
    return True


def is_frobenius_with_kernel(
    G: FiniteGroup, K: Subgroup, seed: int = 0
) -> Optional[FrobeniusWitness]:
    if not 1 < K.order < G.order or not is_normal(G, K):
        return None

    cd = conjugacy_classes(G)
    for i, x in enumerate(cd.reps.tolist()):
        if x == 0 or not K.mask[x]:
            continue
        if G.order // int(cd.sizes[i]) > K.order or not centralizer_inside(G, x, K):
            return None

    if gcd(K.order, G.order // K.order) != 1:
        return None
    H = hall_complement(G, K, seed=seed)
    if not acts_fixed_point_freely(G, K, H):
        return None
    return FrobeniusWitness(kernel=K, complement=H, fixed_point_free=True)


def prime_order_classification(G: FiniteGroup) -> PrimeOrderClass:
    cd = conjugacy_classes(G)
    if G.order == 1 or not all(isprime(int(o)) for o in cd.orders[1:]):
        return PrimeOrderClass(PrimeOrderKinds.NOT_ALL_PRIME_ORDER)

    primes = sorted(prime_set(G.order))
    if is_nilpotent(G):
        return PrimeOrderClass(PrimeOrderKinds.P_GROUP_EXPONENT_P, (primes[0],))
    if is_solvable(G):
        for p in primes:
            if p_core(G, p).order == p_part(G.order, p):
                q = next(r for r in primes if r != p)
                return PrimeOrderClass(PrimeOrderKinds.FROBENIUS_PQ, (p, q))
    if G.order == 60 and is_simple(G):
        return PrimeOrderClass(PrimeOrderKinds.ALT5, tuple(primes))

    logger.warning(_("Prime-order group of order {} fits no known shape").format(G.order))
    return PrimeOrderClass(PrimeOrderKinds.NOT_ALL_PRIME_ORDER, tuple(primes))
