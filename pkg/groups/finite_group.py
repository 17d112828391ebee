"""
Enumerated finite groups.

A group is closed breadth-first from its generators, in generator order, so
the same generator list always yields the same indexing. Every element then
carries a word in the generators (through its BFS parent), which is how
products are computed when no multiplication table is kept.
"""

import functools
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np

from core.errors import BoundExceeded, InvalidGenerator
from groups.domains import Element, ElementDomain

# groups up to this order keep a full multiplication table
TABLE_LIMIT = 4096

DEFAULT_BOUND = 200000


def inverse_permutation(perm: np.ndarray) -> np.ndarray:
    inv = np.empty_like(perm)
    inv[perm] = np.arange(perm.size, dtype=perm.dtype)
    return inv


class FiniteGroup:
    """A fully enumerated finite group with index-level product oracles.

    The identity is index 0. `rmul[g][x]` is the index of x * gen_g and
    `lmul[g][x]` the index of gen_g * x.
    """

    def __init__(
        self,
        domain: ElementDomain,
        elements: List[Element],
        generator_elements: Sequence[Element],
        rmul: np.ndarray,
        parent: np.ndarray,
        parent_gen: np.ndarray,
        bound: int,
        name: str = "",
    ):
        self.domain = domain
        self.elements = elements
        self.generator_elements = tuple(generator_elements)
        self.order = len(elements)
        self.rmul = rmul
        self.parent = parent
        self.parent_gen = parent_gen
        self.bound = bound
        self.name = name
        self.cache: Dict[Any, Any] = {}

        self._index = {element: i for i, element in enumerate(elements)}
        self.generators = [int(r[0]) for r in rmul]
        self.lmul = self._left_multiplication()
        self.inv = self._inverses()
        self.table = self._table() if self.order <= TABLE_LIMIT else None
        self._conj: Optional[np.ndarray] = None

    @property
    def backing(self) -> str:
        return self.domain.backing

    def __repr__(self) -> str:
        label = self.name or self.backing
        return f"FiniteGroup({label}, order={self.order})"

    # --- construction helpers -------------------------------------------

    def _left_multiplication(self) -> np.ndarray:
        # x = parent(x) * h  =>  g x = (g parent(x)) h
        lmul = np.empty_like(self.rmul)
        parent = self.parent.tolist()
        parent_gen = self.parent_gen.tolist()
        rmul_rows = [row.tolist() for row in self.rmul]
        for g in range(len(self.rmul)):
            row = [0] * self.order
            row[0] = rmul_rows[g][0]
            for x in range(1, self.order):
                row[x] = rmul_rows[parent_gen[x]][row[parent[x]]]
            lmul[g] = row
        return lmul

    def _inverses(self) -> np.ndarray:
        inv = np.empty(self.order, dtype=np.intp)
        try:
            for i, element in enumerate(self.elements):
                inv[i] = self._index[self.domain.inverse(element)]
        except KeyError as e:
            raise InvalidGenerator(
                "element set is not closed under inverses", {"element": list(e.args[0])}
            ) from e
        return inv

    def _table(self) -> np.ndarray:
        n = self.order
        table = np.empty((n, n), dtype=np.int32)
        table[:, 0] = np.arange(n)
        for y in range(1, n):
            table[:, y] = self.rmul[self.parent_gen[y]][table[:, self.parent[y]]]
        return table

    # --- element access -------------------------------------------------

    def index_of(self, element: Element) -> int:
        try:
            return self._index[tuple(element)]
        except KeyError:
            raise InvalidGenerator(
                "element does not belong to the group", {"element": list(element)}
            )

    def element(self, index: int) -> Element:
        return self.elements[index]

    def word(self, x: int) -> List[int]:
        """Generator positions whose product, left to right, is element x."""
        word = []
        while x != 0:
            word.append(int(self.parent_gen[x]))
            x = int(self.parent[x])
        word.reverse()
        return word

    # --- products -------------------------------------------------------

    def product(self, a: int, b: int) -> int:
        if self.table is not None:
            return int(self.table[a, b])
        for g in self.word(b):
            a = self.rmul[g][a]
        return int(a)

    def inverse(self, x: int) -> int:
        return int(self.inv[x])

    def conjugate(self, x: int, y: int) -> int:
        """x^y = y^-1 x y."""
        return self.product(self.product(self.inverse(y), x), y)

    def commutator(self, x: int, y: int) -> int:
        """[x, y] = x^-1 y^-1 x y."""
        return self.product(self.inverse(x), self.conjugate(x, y))

    def power(self, x: int, k: int) -> int:
        result = 0
        for _ in range(k):
            result = self.product(result, x)
        return result

    def right_multiply(self, indices: np.ndarray, x: int) -> np.ndarray:
        """Indices of s * x for every s in indices."""
        if self.table is not None:
            return self.table[indices, x].astype(np.intp)
        out = np.asarray(indices, dtype=np.intp)
        for g in self.word(x):
            out = self.rmul[g][out]
        return out

    def left_multiply(self, indices: np.ndarray, x: int) -> np.ndarray:
        """Indices of x * s for every s in indices."""
        if self.table is not None:
            return self.table[x, indices].astype(np.intp)
        out = np.asarray(indices, dtype=np.intp)
        for g in reversed(self.word(x)):
            out = self.lmul[g][out]
        return out

    def right_mult_array(self, x: int) -> np.ndarray:
        return self.right_multiply(np.arange(self.order, dtype=np.intp), x)

    def conjugation_arrays(self) -> np.ndarray:
        """Row g maps x to gen_g^-1 x gen_g."""
        if self._conj is None:
            conj = np.empty_like(self.rmul)
            for g in range(len(self.rmul)):
                conj[g] = self.rmul[g][inverse_permutation(self.lmul[g])]
            self._conj = conj
        return self._conj

    def conjugate_all(self, indices: np.ndarray, y: int) -> np.ndarray:
        """Indices of y^-1 s y for every s in indices."""
        return self.right_multiply(self.left_multiply(indices, self.inverse(y)), y)

    def is_abelian(self) -> bool:
        return all(np.array_equal(r, l) for r, l in zip(self.rmul, self.lmul))


def memoize_on_group(func: Callable) -> Callable:
    """Cache func(G, *args) in G.cache; args must be hashable."""

    @functools.wraps(func)
    def wrapper(G: FiniteGroup, *args, **kwargs):
        key = (func.__qualname__,) + args + tuple(sorted(kwargs.items()))
        if key not in G.cache:
            G.cache[key] = func(G, *args, **kwargs)
        return G.cache[key]

    return wrapper


def enumerate_elements(
    generators: Sequence[Element],
    domain: ElementDomain,
    bound: int = DEFAULT_BOUND,
    name: str = "",
) -> FiniteGroup:
    """Close generators under multiplication in domain.

    Raises BoundExceeded as soon as the closure passes bound elements and
    InvalidGenerator when a generator is not an element of the domain.
    """
    gens = [tuple(int(c) for c in g) for g in generators]
    for g in gens:
        domain.validate(g)

    identity = domain.identity()
    elements = [identity]
    index = {identity: 0}
    parent = [-1]
    parent_gen = [-1]
    rmul: List[List[int]] = [[] for _ in gens]

    i = 0
    while i < len(elements):
        x = elements[i]
        for gi, g in enumerate(gens):
            y = domain.multiply(x, g)
            j = index.get(y)
            if j is None:
                j = len(elements)
                if j >= bound:
                    raise BoundExceeded(bound)
                index[y] = j
                elements.append(y)
                parent.append(i)
                parent_gen.append(gi)
            rmul[gi].append(j)
        i += 1

    n = len(elements)
    rmul_arr = np.array(rmul, dtype=np.intp).reshape(len(gens), n)
    for gi, row in enumerate(rmul_arr):
        if not np.all(np.bincount(row, minlength=n) == 1):
            raise InvalidGenerator(
                "generator does not act as a permutation of the closure",
                {"generator": list(gens[gi])},
            )

    return FiniteGroup(
        domain,
        elements,
        gens,
        rmul_arr,
        np.array(parent, dtype=np.intp),
        np.array(parent_gen, dtype=np.intp),
        bound,
        name,
    )
