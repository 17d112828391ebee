"""
Linear algebra and polynomial roots over F_p on int64 numpy arrays.

Entries are always kept reduced to [0, p) with p < 2^31, so a product of
two entries fits in 64 bits.
"""

from typing import List, Optional, Tuple

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_edf_zassenhaus, gf_gcd, gf_pow_mod, gf_sub

FLOAT_EXACT = 2**53
INT_EXACT = 2**63
SPLIT_BITS = 15


def mod_matmul(A: np.ndarray, B: np.ndarray, p: int, b_max: Optional[int] = None) -> np.ndarray:
    """(A @ B) mod p, exact for reduced inputs; b_max bounds the entries of B."""
    inner = A.shape[-1]
    b_max = p - 1 if b_max is None else b_max
    bound = inner * (p - 1) * b_max
    if bound < FLOAT_EXACT:
        product = A.astype(np.float64) @ B.astype(np.float64)
        return np.mod(np.rint(product).astype(np.int64), p)
    if bound < INT_EXACT:
        return np.mod(A.astype(np.int64) @ B.astype(np.int64), p)
    low = np.bitwise_and(B, (1 << SPLIT_BITS) - 1)
    high = np.right_shift(B, SPLIT_BITS)
    out = np.mod(mod_matmul(A, high, p, b_max >> SPLIT_BITS) << SPLIT_BITS, p)
    return np.mod(out + mod_matmul(A, low, p, (1 << SPLIT_BITS) - 1), p)


def rref(A: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form with zero rows dropped, plus pivot columns."""
    R = np.mod(np.array(A, dtype=np.int64), p)
    rows, cols = R.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.flatnonzero(R[r:, c])
        if nonzero.size == 0:
            continue
        s = r + int(nonzero[0])
        if s != r:
            R[[r, s]] = R[[s, r]]
        R[r] = np.mod(R[r] * pow(int(R[r, c]), -1, p), p)
        factors = R[:, c].copy()
        factors[r] = 0
        touched = np.flatnonzero(factors)
        if touched.size:
            R[touched] = np.mod(R[touched] - np.outer(factors[touched], R[r]) % p, p)
        pivots.append(c)
        r += 1
    return R[:r], pivots


def nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Row basis of {v : A v = 0}."""
    R, pivots = rref(A, p)
    cols = A.shape[1]
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, c in enumerate(pivots):
            basis[i, c] = (-R[row, f]) % p
    return basis


def hessenberg(A: np.ndarray, p: int) -> np.ndarray:
    """A similar upper Hessenberg matrix."""
    H = np.mod(np.array(A, dtype=np.int64), p)
    n = H.shape[0]
    for m in range(1, n - 1):
        nonzero = np.flatnonzero(H[m:, m - 1])
        if nonzero.size == 0:
            continue
        i = m + int(nonzero[0])
        if i != m:
            H[[i, m]] = H[[m, i]]
            H[:, [i, m]] = H[:, [m, i]]
        inv = pow(int(H[m, m - 1]), -1, p)
        u = np.mod(H[m + 1:, m - 1] * inv, p)
        if not u.any():
            continue
        # row_i -= u_i row_m, then col_m += sum_i u_i col_i
        H[m + 1:] = np.mod(H[m + 1:] - np.outer(u, H[m]) % p, p)
        H[:, m] = np.mod(H[:, m] + mod_matmul(H[:, m + 1:], u[:, None], p)[:, 0], p)
    return H


def charpoly(A: np.ndarray, p: int) -> List[int]:
    """Monic characteristic polynomial, highest degree first."""
    n = A.shape[0]
    if n == 0:
        return [1]
    H = hessenberg(A, p)
    # P[m] holds the charpoly of the leading m x m block, lowest degree first
    P = np.zeros((n + 1, n + 1), dtype=np.int64)
    P[0, 0] = 1
    for m in range(1, n + 1):
        prev = P[m - 1]
        current = np.zeros(n + 1, dtype=np.int64)
        current[1:] = prev[:-1]
        current = np.mod(current - int(H[m - 1, m - 1]) * prev, p)
        if m > 1:
            weights = np.zeros(m - 1, dtype=np.int64)
            running = 1
            for i in range(m - 1, 0, -1):
                running = running * int(H[i, i - 1]) % p
                weights[i - 1] = running * int(H[i - 1, m - 1]) % p
            if weights.any():
                tail = mod_matmul(weights[None, :], P[: m - 1], p)[0]
                current = np.mod(current - tail, p)
        P[m] = current
    return [int(c) for c in P[n][::-1]]


def distinct_roots(poly: List[int], p: int) -> List[int]:
    """Sorted distinct roots in F_p of a monic polynomial (highest degree first)."""
    f = [ZZ(c % p) for c in poly]
    if len(f) <= 1:
        return []
    x_p = gf_pow_mod([ZZ(1), ZZ(0)], p, f, p, ZZ)
    split = gf_gcd(f, gf_sub(x_p, [ZZ(1), ZZ(0)], p, ZZ), p, ZZ)
    if len(split) <= 1:
        return []
    if len(split) == 2:
        factors = [split]
    else:
        factors = gf_edf_zassenhaus(split, 1, p, ZZ)
    return sorted(int(-factor[1]) % p for factor in factors)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)
