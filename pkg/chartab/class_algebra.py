"""
Structure constants of the class algebra.
"""

from typing import Dict

import numpy as np

from groups.classes import ClassData
from groups.finite_group import FiniteGroup


class ClassAlgebra:
    """Class multiplication matrices M_i with M_i[j, t] = a_ijt.

    a_ijt = #{x in K_i : x^-1 z_t in K_j} for the fixed representative z_t of
    K_t. Matrices are built on request, since large groups have too many
    classes to keep all of them.
    """

    def __init__(self, G: FiniteGroup, classes: ClassData, keep: int = 8):
        self.group = G
        self.classes = classes
        self.k = classes.k
        self.sizes = classes.sizes
        self.exponent = classes.exponent
        self._order = np.argsort(classes.class_of, kind="stable")
        self._offsets = np.concatenate(([0], np.cumsum(classes.sizes)))
        self._keep = keep
        self._matrices: Dict[int, np.ndarray] = {}

    def members(self, i: int) -> np.ndarray:
        return self._order[self._offsets[i]: self._offsets[i + 1]]

    def matrix(self, i: int) -> np.ndarray:
        if i in self._matrices:
            return self._matrices[i]
        G, cd, k = self.group, self.classes, self.k
        inverses = G.inv[self.members(i)]
        M = np.zeros((k, k), dtype=np.int64)
        if inverses.size <= k:
            targets = np.arange(k)
            for y in inverses.tolist():
                np.add.at(M, (cd.class_of[G.left_multiply(cd.reps, y)], targets), 1)
        else:
            for t, z in enumerate(cd.reps.tolist()):
                M[:, t] = np.bincount(
                    cd.class_of[G.right_multiply(inverses, z)], minlength=k
                )
        if len(self._matrices) >= self._keep:
            self._matrices.pop(next(iter(self._matrices)))
        self._matrices[i] = M
        return M

    def constant(self, i: int, j: int, t: int) -> int:
        return int(self.matrix(i)[j, t])


def class_structure_constants(G: FiniteGroup, classes: ClassData) -> ClassAlgebra:
    return ClassAlgebra(G, classes)
