"""
The field F_8 = F_2[x]/(x^3 + x + 1), elements as 3-bit integers.
"""

from __future__ import annotations

MODULUS = 0b1011
ORDER = 8


class F8Element:
    __slots__ = ("bits",)

    def __init__(self, bits: int):
        if isinstance(bits, F8Element):
            bits = bits.bits
        if not 0 <= bits < ORDER:
            raise ValueError(f"not an F8 element: {bits}")
        self.bits = bits

    def __add__(self, other: F8Element) -> F8Element:
        return F8Element(self.bits ^ F8Element(other).bits)

    __sub__ = __add__
    __radd__ = __add__

    def __neg__(self) -> F8Element:
        return self

    def __mul__(self, other: F8Element) -> F8Element:
        a, b = self.bits, F8Element(other).bits
        product = 0
        while b:
            if b & 1:
                product ^= a
            b >>= 1
            a <<= 1
            if a & ORDER:
                a ^= MODULUS
        return F8Element(product)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> F8Element:
        if self.bits == 0:
            if k <= 0:
                raise ZeroDivisionError("0 has no inverse in F8")
            return self
        result, base = F8Element(1), self
        k %= ORDER - 1
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> F8Element:
        return self ** -1

    def __truediv__(self, other: F8Element) -> F8Element:
        return self * F8Element(other).inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.bits == other
        return isinstance(other, F8Element) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __int__(self) -> int:
        return self.bits

    def __repr__(self) -> str:
        return f"F8({self.bits})"

    @classmethod
    def zero(cls) -> F8Element:
        return cls(0)

    @classmethod
    def one(cls) -> F8Element:
        return cls(1)

    @classmethod
    def elements(cls):
        return [cls(b) for b in range(ORDER)]


def frobenius_twist(a: F8Element) -> F8Element:
    """a -> a^4, whose square is the Frobenius a -> a^2."""
    return a ** 4
