"""
The normalizer of a Sylow 2-subgroup of Sz(8): (F8 x F8) x| F8*.
"""

import numpy as np

from constructors.gf8 import F8Element, frobenius_twist
from core.consts import Families
from core.errors import InvalidGenerator
from groups.domains import Element, ElementDomain
from groups.finite_group import DEFAULT_BOUND, FiniteGroup, enumerate_elements
from groups.subgroups import Subgroup, subgroup_from_mask


def _q_product(a: F8Element, b: F8Element, c: F8Element, d: F8Element):
    """(a, b)(c, d) = (a + c, b + d + a^theta c) in the Suzuki 2-group."""
    return a + c, b + d + frobenius_twist(a) * c


def _act(lam: F8Element, c: F8Element, d: F8Element):
    """lambda . (c, d) = (lambda c, lambda^5 d)."""
    return lam * c, lam ** 5 * d


class SuzukiBorelDomain(ElementDomain):
    """Triples (a, b, lambda) with a, b in F8 and lambda in F8*."""

    backing = "suzuki"

    def identity(self) -> Element:
        return (0, 0, 1)

    def multiply(self, x: Element, y: Element) -> Element:
        a, b, lam = (F8Element(v) for v in x)
        c, d, mu = (F8Element(v) for v in y)
        c, d = _act(lam, c, d)
        a, b = _q_product(a, b, c, d)
        return (int(a), int(b), int(lam * mu))

    def inverse(self, x: Element) -> Element:
        a, b, lam = (F8Element(v) for v in x)
        lam_inv = lam.inverse()
        # (a, b)^-1 = (a, b + a^5) in characteristic 2
        a, b = _act(lam_inv, a, b + a ** 5)
        return (int(a), int(b), int(lam_inv))

    def validate(self, x: Element) -> None:
        if len(x) != 3 or not all(0 <= v < 8 for v in x) or x[2] == 0:
            raise InvalidGenerator(f"not a Suzuki Borel element: {x!r}", {"element": list(x)})


def sz8_borel(bound: int = DEFAULT_BOUND) -> FiniteGroup:
    """Order 448 = 2^6 * 7, Frobenius with kernel the Suzuki 2-group."""
    return enumerate_elements(
        [(1, 0, 1), (0, 0, 2)], SuzukiBorelDomain(), bound=bound, name=Families.SZ8_BOREL
    )


def suzuki_kernel(G: FiniteGroup) -> Subgroup:
    """The normal Sylow 2-subgroup {(a, b, 1)}."""
    mask = np.array([element[2] == 1 for element in G.elements], dtype=bool)
    return subgroup_from_mask(G, mask)
