"""
Modular character tables by common eigenspace splitting, and their lift to
exact cyclotomic values.
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from sympy import isprime, primitive_root, sqrt_mod

from chartab.class_algebra import ClassAlgebra
from chartab.cyclotomic import power_reduction_matrix
from chartab.modular import charpoly, distinct_roots, identity, mod_matmul, nullspace, rref
from core.errors import LiftInconsistent, SplittingIncomplete
from utils.vcs_logger import logger


def choose_dixon_prime(group_order: int, e: int) -> int:
    """Smallest prime p = 1 mod e with p > 2 sqrt(group_order)."""
    return dixon_primes(group_order, e, 1)[0]


def dixon_primes(group_order: int, e: int, count: int) -> List[int]:
    primes = []
    p = e + 1
    while len(primes) < count:
        if p * p > 4 * group_order and isprime(p):
            primes.append(p)
        p += e
    return primes


@dataclass(eq=False)
class ModularTable:
    prime: int
    values: np.ndarray  # characters x classes, in F_p
    omegas: np.ndarray  # central character values omega_chi(K_t)
    degrees: List[int]


def split_common_eigenspaces(algebra: ClassAlgebra, p: int) -> List[np.ndarray]:
    """Common eigenvectors of the M_i as rows, one per irreducible character."""
    k = algebra.k
    spaces: List[Tuple[np.ndarray, List[int]]] = [(identity(k), list(range(k)))]
    order = sorted(range(1, k), key=lambda i: (int(algebra.sizes[i]), i))
    for i in order:
        if all(B.shape[0] == 1 for B, _ in spaces):
            break
        Mt = np.mod(algebra.matrix(i).T, p)
        refined = []
        for B, pivots in spaces:
            d = B.shape[0]
            if d == 1:
                refined.append((B, pivots))
                continue
            # B M_i^T = Y B on the row space spanned by B
            Y = mod_matmul(B, Mt, p)[:, pivots]
            roots = distinct_roots(charpoly(Y, p), p)
            if len(roots) <= 1:
                refined.append((B, pivots))
                continue
            for lam in roots:
                C = nullspace(np.mod(Y.T - lam * identity(d), p), p)
                refined.append(rref(mod_matmul(C, B, p), p))
        spaces = refined
        logger.debug(f"class {i}: {len(spaces)} of {k} eigenspaces")

    if len(spaces) != k or any(B.shape[0] != 1 for B, _ in spaces):
        raise SplittingIncomplete(
            "class algebra did not split into one-dimensional spaces",
            {"prime": p, "spaces": len(spaces), "classes": k},
        )
    return [B[0] for B, _ in spaces]


def modular_character_table(algebra: ClassAlgebra, p: int) -> ModularTable:
    n = int(algebra.sizes.sum())
    sizes = np.mod(algebra.sizes.astype(np.int64), p)
    inv_sizes = np.array([pow(int(h), -1, p) for h in sizes], dtype=np.int64)
    star = algebra.classes.inverse_classes

    rows, omegas, degrees = [], [], []
    for w in split_common_eigenspaces(algebra, p):
        w = np.mod(w * pow(int(w[0]), -1, p), p)
        norm = int(np.sum(np.mod(w * w[star] % p * inv_sizes, p)) % p)
        d_squared = n * pow(norm, -1, p) % p
        root = sqrt_mod(d_squared, p)
        if root is None:
            raise SplittingIncomplete(
                "degree square is not a square mod p", {"prime": p, "value": d_squared}
            )
        d = min(int(root), p - int(root))
        omegas.append(w)
        rows.append(np.mod(w * d % p * inv_sizes, p))
        degrees.append(d)
    return ModularTable(
        prime=p, values=np.array(rows), omegas=np.array(omegas), degrees=degrees
    )


def lift_row(
    values: np.ndarray, degree: int, power_map: np.ndarray, p: int, e: int
) -> np.ndarray:
    """Exact values of one character: (classes, phi(e)) coefficient array.

    The eigenvalue multiplicities m_t = e^-1 sum_j chi(g^j) w^(-jt) are read
    off in F_p; they are true integers in [0, degree] summing to degree.
    """
    w = pow(primitive_root(p), (p - 1) // e, p) if e > 1 else 1
    e_inv = pow(e, -1, p)
    j = np.arange(e)
    exponents = (-np.outer(j, j)) % e
    W = np.array([pow(w, int(x), p) * e_inv % p for x in range(e)], dtype=np.int64)[exponents]
    multiplicities = mod_matmul(values[power_map], W, p)
    if np.any(multiplicities > degree) or np.any(multiplicities.sum(axis=1) != degree):
        raise LiftInconsistent(
            "eigenvalue multiplicities are not consistent with the degree",
            {"prime": p, "degree": degree},
        )
    return multiplicities @ power_reduction_matrix(e)


def lift_to_cyclotomic(
    table: ModularTable, power_map: np.ndarray, p: int, e: int
) -> Tuple[np.ndarray, List[int]]:
    """Rows in canonical order as a (characters, classes, phi(e)) array."""
    lifted = [
        lift_row(values, degree, power_map, p, e)
        for values, degree in zip(table.values, table.degrees)
    ]
    order = sorted(
        range(len(lifted)),
        key=lambda r: (table.degrees[r], tuple(lifted[r].ravel().tolist())),
    )
    coeffs = np.stack([lifted[r] for r in order]) if lifted else np.zeros((0, 0, 0), dtype=np.int64)
    return coeffs, [table.degrees[r] for r in order]
