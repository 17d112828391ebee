"""
Normal Hall subgroups and their complements.
"""

import random
from itertools import combinations
from math import gcd
from typing import Iterable, Optional

import numpy as np

from core.errors import NotCoprime, SearchExhausted
from groups.arith import is_pi_number, pi_part
from groups.classes import conjugacy_classes
from groups.finite_group import FiniteGroup
from groups.subgroups import Subgroup, closure, normal_closure, trivial_subgroup
from utils.vcs_logger import logger

DEFAULT_ROUNDS = 1000
DEFAULT_MAX_GENERATORS = 3

_limits = {"rounds": DEFAULT_ROUNDS, "max_generators": DEFAULT_MAX_GENERATORS}


def set_search_limits(rounds: int, max_generators: int) -> None:
    """Defaults for hall_complement, taken from the hall section of the configuration."""
    _limits["rounds"] = rounds
    _limits["max_generators"] = max_generators


def normal_hall_subgroup(G: FiniteGroup, primes: Iterable[int]) -> Optional[Subgroup]:
    """The normal Hall pi-subgroup, or None when G has none."""
    primes = set(primes)
    cd = conjugacy_classes(G)
    pi_reps = [
        int(x)
        for i, x in enumerate(cd.reps.tolist())
        if cd.orders[i] > 1 and is_pi_number(int(cd.orders[i]), primes)
    ]
    N = normal_closure(G, pi_reps)
    return N if N.order == pi_part(G.order, primes) else None


def hall_complement(
    G: FiniteGroup,
    N: Subgroup,
    seed: int = 0,
    rounds: Optional[int] = None,
    max_generators: Optional[int] = None,
) -> Subgroup:
    """A complement of the normal subgroup N, which must have coprime index.

    Random growth first: draw elements of order coprime to |N| and keep each
    one whose closure with the current subgroup stays of coprime order. After
    `rounds` failed rounds, subgroups generated by at most `max_generators`
    coprime class representatives are tried exhaustively.
    """
    m = G.order // N.order
    if gcd(N.order, m) != 1:
        raise NotCoprime(
            "normal subgroup order and index are not coprime",
            {"order": N.order, "index": m},
        )
    if m == 1:
        return trivial_subgroup(G)

    rounds = _limits["rounds"] if rounds is None else rounds
    max_generators = _limits["max_generators"] if max_generators is None else max_generators

    orders = conjugacy_classes(G).element_orders()
    candidates = np.flatnonzero((orders > 1) & (m % orders == 0)).tolist()

    rng = random.Random(seed)
    draws = 4 * max_generators
    for _ in range(rounds):
        H = trivial_subgroup(G)
        for _ in range(draws):
            x = rng.choice(candidates)
            if H.mask[x]:
                continue
            grown = closure(G, [x], start=H, limit=m)
            if grown is not None and m % grown.order == 0:
                H = grown
                if H.order == m:
                    return H

    logger.warning(
        f"random complement search failed after {rounds} rounds, trying class representatives"
    )
    cd = conjugacy_classes(G)
    reps = [
        int(x)
        for i, x in enumerate(cd.reps.tolist())
        if 1 < cd.orders[i] and m % cd.orders[i] == 0
    ]
    for size in range(1, max_generators + 1):
        for subset in combinations(reps, size):
            H = closure(G, subset, limit=m)
            if H is not None and H.order == m:
                return H
    raise SearchExhausted("no complement found", {"order": N.order, "index": m})
