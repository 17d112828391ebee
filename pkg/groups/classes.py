"""
Conjugacy classes and power maps.
"""

from dataclasses import dataclass
from math import lcm
from typing import List

import numpy as np

from groups.finite_group import FiniteGroup, inverse_permutation, memoize_on_group


def orbit_labels(n: int, perms: List[np.ndarray]) -> np.ndarray:
    """Label each point of 0..n-1 by the smallest point of its orbit under perms."""
    labels = np.arange(n, dtype=np.intp)
    if not perms:
        return labels
    inverses = [inverse_permutation(p) for p in perms]
    while True:
        new = labels.copy()
        for p, q in zip(perms, inverses):
            np.minimum(new, new[p], out=new)
            np.minimum(new, new[q], out=new)
        new = new[new]
        if np.array_equal(new, labels):
            return labels
        labels = new


@dataclass(eq=False)
class ClassData:
    """Conjugacy classes of a group; class 0 is the identity class.

    power_map[i, j] is the class of rep_i ** j for 0 <= j < exponent.
    """

    reps: np.ndarray
    sizes: np.ndarray
    class_of: np.ndarray
    orders: np.ndarray
    power_map: np.ndarray
    exponent: int

    @property
    def k(self) -> int:
        return len(self.reps)

    @property
    def inverse_classes(self) -> np.ndarray:
        return self.power_map[:, self.exponent - 1]

    def power(self, i: int, j: int) -> int:
        return int(self.power_map[i, j % self.exponent])

    def members(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.class_of == i)

    def element_orders(self) -> np.ndarray:
        return self.orders[self.class_of]

    def class_sizes(self) -> List[int]:
        """cs(G) as a sorted list."""
        return sorted({int(h) for h in self.sizes})


@memoize_on_group
def conjugacy_classes(G: FiniteGroup) -> ClassData:
    labels = orbit_labels(G.order, list(G.conjugation_arrays()))
    reps = np.unique(labels)
    class_of = np.searchsorted(reps, labels)
    sizes = np.bincount(class_of, minlength=len(reps))

    powers = []
    for r in reps.tolist():
        seq = [0]
        x = r
        while x != 0:
            seq.append(x)
            x = G.product(x, r)
        powers.append(seq)
    orders = np.array([len(seq) for seq in powers], dtype=np.intp)
    exponent = lcm(*orders.tolist()) if len(orders) else 1

    power_map = np.empty((len(reps), exponent), dtype=np.intp)
    for i, seq in enumerate(powers):
        power_map[i] = class_of[np.array(seq)[np.arange(exponent) % len(seq)]]

    return ClassData(
        reps=reps,
        sizes=sizes,
        class_of=class_of,
        orders=orders,
        power_map=power_map,
        exponent=exponent,
    )
