"""
Subgroups, homomorphisms and quotients of enumerated groups.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from core.errors import NotNormal
from groups.classes import orbit_labels
from groups.domains import CosetDomain, ParentIndexDomain
from groups.finite_group import FiniteGroup, enumerate_elements, memoize_on_group


@dataclass(eq=False)
class Subgroup:
    parent: FiniteGroup
    members: np.ndarray
    generators: Tuple[int, ...] = field(default_factory=tuple)

    @cached_property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.parent.order, dtype=bool)
        mask[self.members] = True
        return mask

    @property
    def order(self) -> int:
        return int(self.members.size)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __contains__(self, x: int) -> bool:
        return bool(self.mask[x])

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, of={self.parent!r})"

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def same_as(self, other: "Subgroup") -> bool:
        return np.array_equal(self.members, other.members)

    def issubset(self, other: "Subgroup") -> bool:
        return bool(np.all(other.mask[self.members]))

    def is_abelian(self) -> bool:
        G = self.parent
        gens = list(self.generators)
        return all(
            G.product(a, b) == G.product(b, a)
            for i, a in enumerate(gens)
            for b in gens[i + 1:]
        )

    @cached_property
    def as_group(self) -> FiniteGroup:
        """The subgroup as a group in its own right, indexed by its generators."""
        return enumerate_elements(
            [(g,) for g in self.generators],
            ParentIndexDomain(self.parent),
            bound=self.parent.bound,
            name=f"sub({self.parent.name})",
        )

    @cached_property
    def from_local(self) -> np.ndarray:
        return np.array([e[0] for e in self.as_group.elements], dtype=np.intp)

    @cached_property
    def _to_local(self) -> np.ndarray:
        local = np.full(self.parent.order, -1, dtype=np.intp)
        local[self.from_local] = np.arange(self.order)
        return local

    def to_local(self, indices) -> np.ndarray:
        return self._to_local[indices]


@dataclass(eq=False)
class Homomorphism:
    source: FiniteGroup
    target: FiniteGroup
    image_of: np.ndarray

    def __call__(self, x: int) -> int:
        return int(self.image_of[x])

    def kernel(self) -> Subgroup:
        return subgroup_from_mask(self.source, self.image_of == 0)

    def image(self, S: Optional[Subgroup] = None) -> Subgroup:
        gens = self.source.generators if S is None else S.generators
        return closure(self.target, [int(self.image_of[g]) for g in gens])

    def preimage(self, T: Subgroup) -> Subgroup:
        return subgroup_from_mask(self.source, T.mask[self.image_of])


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, np.zeros(1, dtype=np.intp), ())


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, np.arange(G.order, dtype=np.intp), tuple(G.generators))


def closure(
    G: FiniteGroup,
    generators: Iterable[int],
    start: Optional[Subgroup] = None,
    limit: Optional[int] = None,
) -> Optional[Subgroup]:
    """Subgroup generated by start (if given) and generators.

    With a limit, returns None as soon as the closure has more than limit
    elements.
    """
    mask = np.zeros(G.order, dtype=bool)
    if start is None:
        mask[0] = True
        members = np.zeros(1, dtype=np.intp)
        kept: List[int] = []
    else:
        mask[start.members] = True
        members = start.members
        kept = list(start.generators)

    new_gens: List[int] = []
    for g in generators:
        g = int(g)
        if not mask[g] and g not in new_gens:
            new_gens.append(g)
    if not new_gens:
        if start is not None:
            return start
        return trivial_subgroup(G)

    all_gens = kept + new_gens
    frontier = members
    step_gens = new_gens
    while frontier.size:
        reached = np.concatenate([G.right_multiply(frontier, g) for g in step_gens])
        reached = np.unique(reached[~mask[reached]])
        mask[reached] = True
        frontier = reached
        step_gens = all_gens
        if limit is not None and np.count_nonzero(mask) > limit:
            return None

    return Subgroup(G, np.flatnonzero(mask), tuple(all_gens))


def subgroup_from_mask(G: FiniteGroup, mask: np.ndarray) -> Subgroup:
    """Subgroup with the given member set; generators picked greedily."""
    if np.all(mask):
        return whole_group(G)
    H = trivial_subgroup(G)
    for x in np.flatnonzero(mask).tolist():
        if not H.mask[x]:
            H = closure(G, [x], start=H)
    if H.order != int(np.count_nonzero(mask)):
        raise ValueError("member set is not a subgroup")
    return H


def intersection(A: Subgroup, B: Subgroup) -> Subgroup:
    return subgroup_from_mask(A.parent, A.mask & B.mask)


def join(A: Subgroup, B: Subgroup) -> Subgroup:
    return closure(A.parent, B.generators, start=A)


@memoize_on_group
def center(G: FiniteGroup) -> Subgroup:
    mask = np.ones(G.order, dtype=bool)
    for r, l in zip(G.rmul, G.lmul):
        mask &= r == l
    return subgroup_from_mask(G, mask)


def commuting_members(G: FiniteGroup, candidates: np.ndarray, xs: Iterable[int]) -> np.ndarray:
    """The candidates that commute with every x in xs."""
    keep = np.ones(candidates.size, dtype=bool)
    for x in xs:
        keep &= G.right_multiply(candidates, int(x)) == G.left_multiply(candidates, int(x))
    return candidates[keep]


def centralizer(
    G: FiniteGroup, xs: Iterable[int], within: Optional[Subgroup] = None
) -> Subgroup:
    """C_G(xs), or C_within(xs) when within is given."""
    candidates = (
        np.arange(G.order, dtype=np.intp) if within is None else within.members
    )
    mask = np.zeros(G.order, dtype=bool)
    mask[commuting_members(G, candidates, xs)] = True
    return subgroup_from_mask(G, mask)


def is_normal(G: FiniteGroup, H: Subgroup, conjugators: Optional[Sequence[int]] = None) -> bool:
    """H is normalized by conjugators (G's generators by default)."""
    if conjugators is None:
        conj = G.conjugation_arrays()
        return all(bool(np.all(H.mask[c[list(H.generators)]])) for c in conj)
    gens = np.array(H.generators, dtype=np.intp)
    return all(bool(np.all(H.mask[G.conjugate_all(gens, c)])) for c in conjugators)


def normal_closure(
    G: FiniteGroup,
    S: Iterable[int],
    conjugators: Optional[Sequence[int]] = None,
    start: Optional[Subgroup] = None,
) -> Subgroup:
    """Smallest subgroup containing S (and start) normalized by conjugators."""
    conjugators = list(G.generators if conjugators is None else conjugators)
    H = closure(G, S, start=start)
    changed = True
    while changed:
        changed = False
        for c in conjugators:
            images = G.conjugate_all(np.array(H.generators, dtype=np.intp), c)
            missing = [int(y) for y in images if not H.mask[y]]
            if missing:
                H = closure(G, missing[:1], start=H)
                changed = True
    return H


@memoize_on_group
def derived_subgroup(G: FiniteGroup) -> Subgroup:
    gens = G.generators
    commutators = [
        G.commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]
    ]
    return normal_closure(G, commutators)


def commutator_subgroup(G: FiniteGroup, A: Subgroup, B: Subgroup) -> Subgroup:
    """[A, B], normal in <A, B>."""
    commutators = [G.commutator(a, b) for a in A.generators for b in B.generators]
    return normal_closure(G, commutators, list(A.generators) + list(B.generators))


def coset_labels(G: FiniteGroup, N: Subgroup) -> np.ndarray:
    """Label each element by the smallest member index of its coset xN."""
    return orbit_labels(G.order, [G.right_mult_array(n) for n in N.generators])


def quotient(G: FiniteGroup, N: Subgroup) -> Tuple[FiniteGroup, Homomorphism]:
    """G/N with its natural epimorphism; cosets are named by their minimal member."""
    if not is_normal(G, N):
        raise NotNormal("subgroup is not normal", {"order": N.order})
    labels = coset_labels(G, N)
    gens = []
    for g in G.generators:
        label = (int(labels[g]),)
        if label[0] != 0 and label not in gens:
            gens.append(label)
    Q = enumerate_elements(
        gens, CosetDomain(G, labels), bound=G.bound, name=f"{G.name}/N"
    )
    slot = np.full(G.order, -1, dtype=np.intp)
    for i, (label,) in enumerate(Q.elements):
        slot[label] = i
    return Q, Homomorphism(G, Q, slot[labels])
