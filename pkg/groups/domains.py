"""
Multiplication domains: the backing representations groups are enumerated in.

Elements are tuples of ints so they hash straight into the element index.
"""

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Sequence, Tuple

import numpy as np

from core.errors import InvalidGenerator

if TYPE_CHECKING:
    from groups.finite_group import FiniteGroup

Element = Tuple[int, ...]


class ElementDomain(ABC):
    """Multiplication, inverse and identity oracles on encoded elements."""

    backing = "abstract"

    @abstractmethod
    def identity(self) -> Element: ...

    @abstractmethod
    def multiply(self, a: Element, b: Element) -> Element: ...

    @abstractmethod
    def inverse(self, a: Element) -> Element: ...

    @abstractmethod
    def validate(self, a: Element) -> None:
        """Raise InvalidGenerator when a is not an encoding of this domain."""


class PermutationDomain(ElementDomain):
    """Permutations of 0..degree-1 as image tuples; (ab)(i) = b[a[i]]."""

    backing = "permutation"

    def __init__(self, degree: int):
        self.degree = degree

    def identity(self) -> Element:
        return tuple(range(self.degree))

    def multiply(self, a: Element, b: Element) -> Element:
        return tuple(b[i] for i in a)

    def inverse(self, a: Element) -> Element:
        inv = [0] * self.degree
        for i, image in enumerate(a):
            inv[image] = i
        return tuple(inv)

    def validate(self, a: Element) -> None:
        if len(a) != self.degree or sorted(a) != list(range(self.degree)):
            raise InvalidGenerator(
                f"not a permutation of {self.degree} points: {a!r}",
                {"element": list(a)},
            )


class AdditiveDomain(ElementDomain):
    """Z_{m_1} x ... x Z_{m_r} written additively as residue tuples."""

    backing = "additive"

    def __init__(self, moduli: Sequence[int]):
        self.moduli = tuple(int(m) for m in moduli)

    def identity(self) -> Element:
        return (0,) * len(self.moduli)

    def multiply(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def inverse(self, a: Element) -> Element:
        return tuple((-x) % m for x, m in zip(a, self.moduli))

    def validate(self, a: Element) -> None:
        if len(a) != len(self.moduli) or any(
            not 0 <= x < m for x, m in zip(a, self.moduli)
        ):
            raise InvalidGenerator(
                f"not a residue vector for moduli {self.moduli}: {a!r}",
                {"element": list(a)},
            )


class SemidirectDomain(ElementDomain):
    """Pairs (n, h) of indices into a normal group and an acting group.

    (n1, h1)(n2, h2) = (n1 * aut[h1][n2], h1 h2), where aut[h] is the
    automorphism of the normal group attached to h (as an index array).
    """

    backing = "semidirect"

    def __init__(self, normal: "FiniteGroup", actor: "FiniteGroup", aut: np.ndarray):
        if aut.shape != (actor.order, normal.order):
            raise InvalidGenerator(
                "automorphism table has the wrong shape",
                {"shape": list(aut.shape)},
            )
        self.normal = normal
        self.actor = actor
        self.aut = aut

    def identity(self) -> Element:
        return (0, 0)

    def multiply(self, a: Element, b: Element) -> Element:
        n1, h1 = a
        n2, h2 = b
        return (
            self.normal.product(n1, int(self.aut[h1, n2])),
            self.actor.product(h1, h2),
        )

    def inverse(self, a: Element) -> Element:
        n, h = a
        h_inv = self.actor.inverse(h)
        return (int(self.aut[h_inv, self.normal.inverse(n)]), h_inv)

    def validate(self, a: Element) -> None:
        if (
            len(a) != 2
            or not 0 <= a[0] < self.normal.order
            or not 0 <= a[1] < self.actor.order
        ):
            raise InvalidGenerator(f"not a semidirect pair: {a!r}", {"element": list(a)})


class CosetDomain(ElementDomain):
    """Cosets of a normal subgroup, each named by its minimal member index."""

    backing = "coset"

    def __init__(self, group: "FiniteGroup", labels: np.ndarray):
        self.group = group
        self.labels = labels

    def identity(self) -> Element:
        return (0,)

    def multiply(self, a: Element, b: Element) -> Element:
        return (int(self.labels[self.group.product(a[0], b[0])]),)

    def inverse(self, a: Element) -> Element:
        return (int(self.labels[self.group.inverse(a[0])]),)

    def validate(self, a: Element) -> None:
        if len(a) != 1 or not 0 <= a[0] < self.group.order or self.labels[a[0]] != a[0]:
            raise InvalidGenerator(f"not a coset label: {a!r}", {"element": list(a)})


class ParentIndexDomain(ElementDomain):
    """Elements of a parent group addressed by their parent index."""

    backing = "subgroup"

    def __init__(self, parent: "FiniteGroup"):
        self.parent = parent

    def identity(self) -> Element:
        return (0,)

    def multiply(self, a: Element, b: Element) -> Element:
        return (self.parent.product(a[0], b[0]),)

    def inverse(self, a: Element) -> Element:
        return (self.parent.inverse(a[0]),)

    def validate(self, a: Element) -> None:
        if len(a) != 1 or not 0 <= a[0] < self.parent.order:
            raise InvalidGenerator(f"not a parent index: {a!r}", {"element": list(a)})
