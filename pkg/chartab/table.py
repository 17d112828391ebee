"""
Exact character tables and their orthogonality check.
"""

from dataclasses import dataclass
from math import gcd
from typing import Any, Dict, List, Optional

import numpy as np
from sympy import isprime, primitive_root, totient

from chartab.class_algebra import class_structure_constants
from chartab.cyclotomic import CyclotomicValue, power_reduction_matrix
from chartab.dixon import choose_dixon_prime, lift_to_cyclotomic, modular_character_table
from chartab.modular import mod_matmul
from core.errors import BadParams, LiftInconsistent
from groups.classes import ClassData, conjugacy_classes
from groups.finite_group import FiniteGroup, memoize_on_group
from utils.i18n import _
from utils.vcs_logger import logger

# orthogonality is checked modulo primes = 1 mod e from here upwards
CHECK_PRIME_START = 2**20
MAX_PRIME = 2**31


@dataclass(eq=False)
class CharacterTable:
    """Rows are irreducible characters, columns the classes of class_data.

    coeffs[r, c] is the coefficient vector of chi_r(g_c) in Z[zeta_e]/Phi_e.
    """

    coeffs: np.ndarray
    degrees: List[int]
    dixon_prime: int
    exponent: int
    class_data: ClassData
    group_order: int

    @property
    def k(self) -> int:
        return len(self.degrees)

    def value(self, r: int, c: int) -> CyclotomicValue:
        return CyclotomicValue.from_vector(self.exponent, self.coeffs[r, c])

    def row(self, r: int) -> List[CyclotomicValue]:
        return [self.value(r, c) for c in range(self.k)]

    def zero_mask(self) -> np.ndarray:
        """zero_mask()[r, c] is True iff chi_r vanishes on class c."""
        return ~self.coeffs.any(axis=2)

    def vanishing_classes(self) -> np.ndarray:
        return np.flatnonzero(self.zero_mask().any(axis=0))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "conductor": self.exponent,
            "dixon_prime": self.dixon_prime,
            "class_sizes": [int(h) for h in self.class_data.sizes],
            "rows": [
                {"degree": d, "values": self.coeffs[r].tolist()}
                for r, d in enumerate(self.degrees)
            ],
        }


def _check_primes(e: int, bound: int) -> List[int]:
    primes, product = [], 1
    q = CHECK_PRIME_START - (CHECK_PRIME_START - 1) % e
    while product <= 2 * bound:
        if isprime(q):
            primes.append(q)
            product *= q
        q += e
    return primes


def _embedding(coeffs: np.ndarray, e: int, root: int, q: int) -> np.ndarray:
    """Values of all entries under zeta -> root, modulo q."""
    phi = coeffs.shape[-1]
    powers = np.array([pow(root, i, q) for i in range(phi)], dtype=np.int64)
    k = coeffs.shape[0]
    flat = np.mod(coeffs.reshape(-1, phi), q)
    return mod_matmul(flat, powers[:, None], q).reshape(k, k)


def verify_orthogonality(table: CharacterTable) -> bool:
    """Exact row and column orthogonality.

    Every product sum is a cyclotomic integer with coefficients bounded by
    `bound`. It vanishes iff its images under all embeddings Z[zeta_e] -> F_q
    vanish for enough primes q = 1 mod e to exceed 2 * bound.
    """
    k, e, n = table.k, table.exponent, table.group_order
    if k == 0 or table.coeffs.shape[:2] != (k, k):
        return False
    sizes = table.class_data.sizes.astype(np.int64)
    if sum(d * d for d in table.degrees) != n:
        return False

    phi = int(totient(e))
    R = power_reduction_matrix(e)
    c_e = int(np.abs(R).sum(axis=0).max())
    n_max = int(np.abs(table.coeffs).max())
    bound = 2 * max(n, k) * phi * c_e * c_e * n_max * n_max + n

    embeddings = [a for a in range(1, e + 1) if gcd(a, e) == 1]
    for q in _check_primes(e, bound):
        zeta = pow(primitive_root(q), (q - 1) // e, q)
        images = {a % e: _embedding(table.coeffs, e, pow(zeta, a, q), q) for a in embeddings}
        weights = np.mod(sizes, q)
        expected_rows = np.mod(n * np.eye(k, dtype=np.int64), q)
        expected_cols = np.diag(np.mod(n // sizes, q)).astype(np.int64)
        for a in embeddings:
            X = images[a % e]
            X_bar = images[(e - a) % e]
            rows = mod_matmul(np.mod(X * weights[None, :], q), X_bar.T.copy(), q)
            if not np.array_equal(rows, expected_rows):
                return False
            cols = mod_matmul(X_bar.T.copy(), X, q)
            if not np.array_equal(cols, expected_cols):
                return False
    return True


@memoize_on_group
def character_table(G: FiniteGroup, prime: Optional[int] = None) -> CharacterTable:
    """Exact character table; prime overrides the Dixon prime."""
    cd = conjugacy_classes(G)
    algebra = class_structure_constants(G, cd)
    p = prime or choose_dixon_prime(G.order, cd.exponent)
    if p >= MAX_PRIME:
        raise BadParams("Dixon prime out of range", {"prime": p})
    logger.info(
        _("Character table: order {}, {} classes, exponent {}, prime {}").format(
            G.order, cd.k, cd.exponent, p
        )
    )
    modular = modular_character_table(algebra, p)
    coeffs, degrees = lift_to_cyclotomic(modular, cd.power_map, p, cd.exponent)
    table = CharacterTable(
        coeffs=coeffs,
        degrees=degrees,
        dixon_prime=p,
        exponent=cd.exponent,
        class_data=cd,
        group_order=G.order,
    )
    if not verify_orthogonality(table):
        raise LiftInconsistent("character table fails orthogonality", {"prime": p})
    return table
