"""
Class sizes and vanishing class sizes.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from chartab.table import character_table
from groups.arith import sorted_primes, prime_set
from groups.classes import ClassData, conjugacy_classes
from groups.finite_group import FiniteGroup, memoize_on_group
from groups.subgroups import Subgroup


@dataclass(eq=False)
class VanishingProfile:
    """vanishing[i] is True iff some irreducible character is zero on class i."""

    class_data: ClassData
    vanishing: np.ndarray

    @property
    def cs(self) -> List[int]:
        return self.class_data.class_sizes()

    @property
    def vcs(self) -> List[int]:
        return sorted({int(h) for h in self.class_data.sizes[self.vanishing]})

    @property
    def vanishing_classes(self) -> List[int]:
        return np.flatnonzero(self.vanishing).tolist()

    @property
    def nonvanishing_classes(self) -> List[int]:
        return np.flatnonzero(~self.vanishing).tolist()

    @property
    def s(self) -> Optional[int]:
        vcs = self.vcs
        return vcs[0] if len(vcs) == 1 else None

    @property
    def pi(self) -> Tuple[int, ...]:
        return sorted_primes(prime_set(self.s)) if self.s else ()

    def element_mask(self) -> np.ndarray:
        return self.vanishing[self.class_data.class_of]

    def vanishes_on(self, S: Subgroup) -> bool:
        """True iff S holds a vanishing element."""
        return bool(np.any(self.element_mask()[S.members]))


@memoize_on_group
def vanishing_profile(G: FiniteGroup) -> VanishingProfile:
    cd = conjugacy_classes(G)
    if G.is_abelian():
        # linear characters never vanish
        return VanishingProfile(cd, np.zeros(cd.k, dtype=bool))
    table = character_table(G)
    return VanishingProfile(cd, table.zero_mask().any(axis=0))
