"""
Integer helpers on prime sets, built on sympy's number theory.
"""

from math import gcd
from typing import FrozenSet, Iterable, Tuple

from sympy import factorint, primefactors


def prime_set(n: int) -> FrozenSet[int]:
    """pi(n): the primes dividing n."""
    if n <= 1:
        return frozenset()
    return frozenset(primefactors(n))


def pi_part(n: int, primes: Iterable[int]) -> int:
    """n_pi: the largest divisor of n whose prime divisors lie in primes."""
    primes = set(primes)
    part = 1
    for p, k in factorint(n).items():
        if p in primes:
            part *= p**k
    return part


def pi_prime_part(n: int, primes: Iterable[int]) -> int:
    return n // pi_part(n, primes)


def p_part(n: int, p: int) -> int:
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def is_prime_power(n: int) -> bool:
    return n > 1 and len(factorint(n)) == 1


def prime_power_base(n: int) -> int:
    """p for n = p^k, 0 otherwise."""
    factors = factorint(n)
    return next(iter(factors)) if n > 1 and len(factors) == 1 else 0


def is_squarefree(n: int) -> bool:
    return n >= 1 and all(k == 1 for k in factorint(n).values())


def is_pi_number(n: int, primes: Iterable[int]) -> bool:
    return pi_part(n, primes) == n


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1


def sorted_primes(primes: Iterable[int]) -> Tuple[int, ...]:
    return tuple(sorted(set(primes)))
