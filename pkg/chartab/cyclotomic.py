"""
Exact elements of Z[zeta_e], stored as coefficient vectors modulo Phi_e.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np
from sympy import Symbol, cyclotomic_poly, totient

_x = Symbol("x")


@lru_cache(maxsize=None)
def cyclotomic_coeffs(e: int) -> Tuple[int, ...]:
    """Phi_e, lowest degree first."""
    return tuple(int(c) for c in reversed(cyclotomic_poly(e, _x, polys=True).all_coeffs()))


@lru_cache(maxsize=None)
def power_reduction_matrix(e: int) -> np.ndarray:
    """Row t holds x^t mod Phi_e, for 0 <= t < e."""
    phi = int(totient(e))
    modulus = np.array(cyclotomic_coeffs(e)[:-1], dtype=np.int64)
    R = np.zeros((e, phi), dtype=np.int64)
    row = np.zeros(phi, dtype=np.int64)
    row[0] = 1
    for t in range(e):
        R[t] = row
        top = row[-1]
        row = np.concatenate(([0], row[:-1]))
        # x^phi = -(lower terms of Phi_e), Phi_e being monic
        row = row - top * modulus
    R.setflags(write=False)
    return R


def reduce_exponents(e: int, coeffs_by_power: np.ndarray) -> np.ndarray:
    """Reduce sum_j c_j x^j (any length) modulo Phi_e."""
    folded = np.zeros(e, dtype=np.int64)
    np.add.at(folded, np.arange(coeffs_by_power.size) % e, coeffs_by_power)
    return folded @ power_reduction_matrix(e)


@dataclass(frozen=True)
class CyclotomicValue:
    e: int
    coeffs: Tuple[int, ...]

    @classmethod
    def from_vector(cls, e: int, vector: Sequence[int]) -> CyclotomicValue:
        return cls(e, tuple(int(c) for c in vector))

    @classmethod
    def from_int(cls, e: int, n: int) -> CyclotomicValue:
        phi = int(totient(e))
        return cls(e, (int(n),) + (0,) * (phi - 1))

    @classmethod
    def zeta(cls, e: int, t: int = 1) -> CyclotomicValue:
        return cls.from_vector(e, power_reduction_matrix(e)[t % e])

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)

    def _check(self, other: CyclotomicValue) -> None:
        if other.e != self.e:
            raise ValueError(f"conductor mismatch: {self.e} vs {other.e}")

    def __add__(self, other: CyclotomicValue) -> CyclotomicValue:
        self._check(other)
        return CyclotomicValue.from_vector(self.e, self.vector + other.vector)

    def __sub__(self, other: CyclotomicValue) -> CyclotomicValue:
        self._check(other)
        return CyclotomicValue.from_vector(self.e, self.vector - other.vector)

    def __neg__(self) -> CyclotomicValue:
        return CyclotomicValue.from_vector(self.e, -self.vector)

    def __mul__(self, other) -> CyclotomicValue:
        if isinstance(other, int):
            return CyclotomicValue.from_vector(self.e, other * self.vector)
        self._check(other)
        product = np.convolve(self.vector, other.vector)
        return CyclotomicValue.from_vector(self.e, reduce_exponents(self.e, product))

    __rmul__ = __mul__

    def galois(self, a: int) -> CyclotomicValue:
        """Image under zeta -> zeta^a."""
        spread = np.zeros(self.e, dtype=np.int64)
        np.add.at(spread, (a * np.arange(len(self.coeffs))) % self.e, self.vector)
        return CyclotomicValue.from_vector(self.e, spread @ power_reduction_matrix(self.e))

    def conjugate(self) -> CyclotomicValue:
        return self.galois(self.e - 1)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_int(self) -> int:
        """The value as an integer; ValueError when it is not rational."""
        if any(self.coeffs[1:]):
            raise ValueError("value is not an integer")
        return self.coeffs[0]

    def to_complex(self) -> complex:
        z = np.exp(2j * np.pi / self.e)
        return complex(sum(c * z**i for i, c in enumerate(self.coeffs)))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                base = f"z{self.e}" if i == 1 else f"z{self.e}^{i}"
                terms.append(base if c == 1 else f"-{base}" if c == -1 else f"{c}*{base}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def cyclotomic_is_zero(v: CyclotomicValue) -> bool:
    return v.is_zero()
