"""
Chief series, supersolvability, solvability and minimal normal subgroups.
"""

from dataclasses import dataclass
from typing import List, Optional

from sympy import isprime

from groups.arith import is_prime_power
from groups.classes import conjugacy_classes
from groups.finite_group import FiniteGroup, memoize_on_group
from groups.subgroups import Subgroup, normal_closure, trivial_subgroup


@dataclass(eq=False)
class ChiefSeries:
    terms: List[Subgroup]  # G first, trivial last
    factor_orders: List[int]


def order_modulo(G: FiniteGroup, x: int, K: Subgroup) -> int:
    """Smallest j >= 1 with x^j in K."""
    j, y = 1, x
    while not K.mask[y]:
        y = G.product(y, x)
        j += 1
    return j


def minimal_normal_over(G: FiniteGroup, K: Subgroup) -> Optional[Subgroup]:
    """M normal in G with M/K a minimal normal subgroup of G/K (K normal, K < G)."""
    cd = conjugacy_classes(G)
    candidates = sorted(
        (int(cd.sizes[i]), int(x))
        for i, x in enumerate(cd.reps.tolist())
        if not K.mask[x] and isprime(order_modulo(G, x, K))
    )
    M = None
    for _, x in candidates:
        if M is not None and not M.mask[x]:
            continue
        C = normal_closure(G, [x], start=K)
        if M is None or C.order < M.order:
            M = C
    return M


@memoize_on_group
def chief_series(G: FiniteGroup) -> ChiefSeries:
    ascending = [trivial_subgroup(G)]
    while ascending[-1].order < G.order:
        ascending.append(minimal_normal_over(G, ascending[-1]))
    terms = ascending[::-1]
    factor_orders = [upper.order // lower.order for upper, lower in zip(terms, terms[1:])]
    return ChiefSeries(terms=terms, factor_orders=factor_orders)


def is_supersolvable(G: FiniteGroup) -> bool:
    return all(isprime(f) for f in chief_series(G).factor_orders)


def is_solvable(G: FiniteGroup) -> bool:
    return all(is_prime_power(f) for f in chief_series(G).factor_orders)


def _smallest_prime(n: int) -> int:
    p = 2
    while n % p:
        p += 1
    return p


@memoize_on_group
def minimal_normal_subgroups(G: FiniteGroup) -> List[Subgroup]:
    """Minimal normal subgroups, sorted by order then member set."""
    cd = conjugacy_classes(G)
    candidates = sorted(
        (int(cd.sizes[i]), int(x))
        for i, x in enumerate(cd.reps.tolist())
        if isprime(int(cd.orders[i]))
    )
    found: List[Subgroup] = []
    for size, x in candidates:
        # a proper normal subgroup of C holding x's class would be too small
        if any(
            C.mask[x] and size + 1 > C.order // _smallest_prime(C.order) for C in found
        ):
            continue
        C = normal_closure(G, [x])
        if not any(C.same_as(D) for D in found):
            found.append(C)

    minimal = [
        C for C in found
        if not any(D.order < C.order and D.issubset(C) for D in found)
    ]
    return sorted(minimal, key=lambda C: (C.order, tuple(C.members.tolist())))


def is_simple(G: FiniteGroup) -> bool:
    if G.order == 1:
        return False
    minimal = minimal_normal_subgroups(G)
    return len(minimal) == 1 and minimal[0].order == G.order
