"""
Normalizers, Sylow subgroups, p-cores and the Fitting subgroup.
"""

import numpy as np

from groups.arith import p_part, prime_power_base, prime_set
from groups.classes import conjugacy_classes, orbit_labels
from groups.finite_group import FiniteGroup, memoize_on_group
from groups.subgroups import (
    Subgroup,
    closure,
    subgroup_from_mask,
    trivial_subgroup,
)


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    """N_G(H) by a scan over all of G: g normalizes H iff Hg = gH."""
    labels = orbit_labels(G.order, [G.right_mult_array(h) for h in H.generators])
    everything = np.arange(G.order, dtype=np.intp)
    mask = np.ones(G.order, dtype=bool)
    for h in H.generators:
        mask &= labels[G.left_multiply(everything, h)] == labels
    return subgroup_from_mask(G, mask)


def p_element_mask(G: FiniteGroup, p: int) -> np.ndarray:
    cd = conjugacy_classes(G)
    class_ok = np.array(
        [o == 1 or prime_power_base(int(o)) == p for o in cd.orders], dtype=bool
    )
    return class_ok[cd.class_of]


@memoize_on_group
def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown one factor p at a time inside normalizers."""
    target = p_part(G.order, p)
    P = trivial_subgroup(G)
    if target == 1:
        return P
    p_elements = p_element_mask(G, p)
    while P.order < target:
        N = normalizer(G, P)
        candidates = np.flatnonzero(N.mask & p_elements & ~P.mask)
        z = int(candidates[0])
        # z^p in P makes <P, z> exactly p times larger
        while True:
            zp = G.power(z, p)
            if P.mask[zp]:
                break
            z = zp
        P = closure(G, [z], start=P)
    return P


@memoize_on_group
def p_core(G: FiniteGroup, p: int) -> Subgroup:
    """O_p(G): the intersection of the conjugates of a Sylow p-subgroup."""
    mask = sylow_subgroup(G, p).mask.copy()
    conj = G.conjugation_arrays()
    while True:
        previous = int(np.count_nonzero(mask))
        for c in conj:
            # x survives if its conjugate under gen_g is still in the core
            mask &= mask[c]
        if int(np.count_nonzero(mask)) == previous:
            return subgroup_from_mask(G, mask)


@memoize_on_group
def fitting_subgroup(G: FiniteGroup) -> Subgroup:
    gens = []
    for p in sorted(prime_set(G.order)):
        gens.extend(p_core(G, p).generators)
    return closure(G, gens)


def is_nilpotent(G: FiniteGroup) -> bool:
    return fitting_subgroup(G).order == G.order


def is_p_group(G: FiniteGroup) -> bool:
    return prime_power_base(G.order) != 0
