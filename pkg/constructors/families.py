"""
Base group families: abelian groups, dihedral, Q8, extraspecial groups of
order p^3, SL(2,3), A5 and the symmetric and alternating groups.
"""

from itertools import product
from typing import List, Sequence

from sympy import isprime

from core.consts import Families
from core.errors import BadParams
from groups.domains import AdditiveDomain, PermutationDomain
from groups.finite_group import DEFAULT_BOUND, FiniteGroup, enumerate_elements

Matrix = Sequence[Sequence[int]]


def _require(condition: bool, message: str, **details) -> None:
    if not condition:
        raise BadParams(message, details)


def _cycle(degree: int, points: Sequence[int]) -> tuple:
    images = list(range(degree))
    for a, b in zip(points, list(points[1:]) + [points[0]]):
        images[a] = b
    return tuple(images)


def permutation_group(degree: int, generators: List[tuple], name: str, bound: int) -> FiniteGroup:
    return enumerate_elements(generators, PermutationDomain(degree), bound=bound, name=name)


def nonzero_vectors(q: int) -> List[tuple]:
    return [v for v in product(range(q), repeat=2) if any(v)]


def matrix_permutation(M: Matrix, q: int) -> tuple:
    """The action v -> M v on the nonzero vectors of F_q^2."""
    points = nonzero_vectors(q)
    index = {v: i for i, v in enumerate(points)}
    return tuple(
        index[((M[0][0] * x + M[0][1] * y) % q, (M[1][0] * x + M[1][1] * y) % q)]
        for x, y in points
    )


def cyclic(n: int, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    _require(n >= 1, "cyclic order must be positive", n=n)
    gens = [(1,)] if n > 1 else []
    return enumerate_elements(gens, AdditiveDomain([n]), bound=bound, name=f"C({n})")


def homocyclic(m: int, k: int, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    _require(m >= 2 and k >= 1, "homocyclic needs m >= 2 and k >= 1", m=m, k=k)
    gens = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    return enumerate_elements(
        gens, AdditiveDomain([m] * k), bound=bound, name=f"Homocyclic({m},{k})"
    )


def elementary_abelian(p: int, k: int, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    _require(isprime(p), "elementary abelian groups need a prime", p=p)
    G = homocyclic(p, k, bound)
    G.name = f"EA({p},{k})"
    return G


def dihedral(n: int, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""
    _require(n >= 3, "dihedral groups need n >= 3", n=n)
    rotation = tuple((i + 1) % n for i in range(n))
    reflection = tuple((-i) % n for i in range(n))
    return permutation_group(n, [rotation, reflection], f"D({n})", bound)


def quaternion8(bound: int = DEFAULT_BOUND) -> FiniteGroup:
    gens = [matrix_permutation([[0, 2], [1, 0]], 3), matrix_permutation([[1, 1], [1, 2]], 3)]
    return permutation_group(8, gens, "Q8", bound)


def sl23(bound: int = DEFAULT_BOUND) -> FiniteGroup:
    """SL(2,3) acting on the 8 nonzero vectors of F_3^2."""
    gens = [matrix_permutation([[1, 1], [0, 1]], 3), matrix_permutation([[1, 0], [1, 1]], 3)]
    return permutation_group(8, gens, "SL23", bound)


def extraspecial(p: int, sign: str, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    """Extraspecial group of order p^3 for p in {2, 3}.

    For p = 2, + is D8 and - is Q8. For p = 3, + has exponent 3 (affine
    maps of F_3^2) and - has exponent 9 (x -> ax + b on Z_9, a = 1 mod 3).
    """
    _require(p in (2, 3) and sign in ("+", "-"), "extraspecial needs p in {2,3}", p=p, sign=sign)
    name = f"ES({p},{sign})"
    if p == 2:
        G = dihedral(4, bound) if sign == "+" else quaternion8(bound)
        G.name = name
        return G
    if sign == "+":
        points = list(product(range(3), repeat=2))
        index = {v: i for i, v in enumerate(points)}
        shear = tuple(index[((x + y) % 3, y)] for x, y in points)
        shift = tuple(index[(x, (y + 1) % 3)] for x, y in points)
        return permutation_group(9, [shear, shift], name, bound)
    translation = tuple((x + 1) % 9 for x in range(9))
    scaling = tuple((4 * x) % 9 for x in range(9))
    return permutation_group(9, [translation, scaling], name, bound)


def symmetric(n: int, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    _require(n >= 1, "symmetric groups need n >= 1", n=n)
    gens = []
    if n >= 2:
        gens = [_cycle(n, list(range(n))), _cycle(n, [0, 1])]
    return permutation_group(n, gens, f"Sym({n})", bound)


def alternating(n: int, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    _require(n >= 1, "alternating groups need n >= 1", n=n)
    gens = [_cycle(n, [0, 1, i]) for i in range(2, n)]
    return permutation_group(n, gens, f"Alt({n})", bound)


def alt5(bound: int = DEFAULT_BOUND) -> FiniteGroup:
    gens = [_cycle(5, [0, 1, 2, 3, 4]), _cycle(5, [0, 1, 2])]
    return permutation_group(5, gens, "A5", bound)


def build_base(name: str, params: Sequence[int] = (), bound: int = DEFAULT_BOUND) -> FiniteGroup:
    """Build a base family member by tag."""
    builders = {
        Families.CYCLIC: (1, cyclic),
        Families.ELEMENTARY_ABELIAN: (2, elementary_abelian),
        Families.HOMOCYCLIC: (2, homocyclic),
        Families.DIHEDRAL: (1, dihedral),
        Families.QUATERNION8: (0, quaternion8),
        Families.SL23: (0, sl23),
        Families.ALT5: (0, alt5),
        Families.SYMMETRIC: (1, symmetric),
        Families.ALTERNATING: (1, alternating),
    }
    if name not in builders:
        raise BadParams(f"unknown family: {name}", {"family": name})
    arity, builder = builders[name]
    _require(len(params) == arity, f"{name} takes {arity} parameters", params=list(params))
    return builder(*params, bound=bound)
