"""
Semidirect products N x| P with a right-action convention:

    (n1, h1)(n2, h2) = (n1 * aut[h1](n2), h1 h2),   aut[h1 h2] = aut[h1] o aut[h2].

Abelian modules are given as ModuleSpecs with matrix actions; arbitrary
normal groups take explicit automorphisms of their generators.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Sequence, Tuple, Union

import numpy as np
from sympy import Matrix, Poly, Symbol, n_order

from core.errors import (
    ActionNotHomomorphism,
    BadParams,
    BoundExceeded,
    FactorCountMismatch,
)
from groups.arith import coprime, prime_power_base
from groups.domains import AdditiveDomain, SemidirectDomain
from groups.finite_group import DEFAULT_BOUND, FiniteGroup, enumerate_elements
from groups.subgroups import (
    Homomorphism,
    Subgroup,
    closure,
    coset_labels,
    normal_closure,
)

_x = Symbol("x")

IntMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class ModuleSpec:
    """C_{m_1}^{r_1} x ... ; each (m, r) factor is acted on as one block."""

    factors: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        for m, r in self.factors:
            if m < 2 or r < 1:
                raise BadParams("module factors need m >= 2 and r >= 1", {"factor": [m, r]})

    @property
    def order(self) -> int:
        order = 1
        for m, r in self.factors:
            order *= m**r
        return order

    @property
    def moduli(self) -> List[int]:
        return [m for m, r in self.factors for _ in range(r)]


@dataclass(frozen=True)
class MaximalKernels:
    """Factor i is acted on through P/M_i, M_i the i-th maximal subgroup of P."""


@dataclass(frozen=True)
class ExplicitMatrices:
    """blocks[i][j] is the matrix of actor generator j on factor i."""

    blocks: Tuple[Tuple[IntMatrix, ...], ...] = field(default_factory=tuple)


ActionSpec = Union[MaximalKernels, ExplicitMatrices]


def module_group(module: ModuleSpec, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    moduli = module.moduli
    gens = [tuple(int(i == j) for j in range(len(moduli))) for i in range(len(moduli))]
    return enumerate_elements(gens, AdditiveDomain(moduli), bound=bound, name="module")


def _radix_lookup(
    N: FiniteGroup, moduli: Sequence[int]
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    vectors = np.array(N.elements, dtype=np.int64).reshape(N.order, len(moduli))
    radix = np.cumprod([1] + list(moduli[:-1])).astype(np.int64)
    lookup = np.empty(int(np.prod(moduli)) if moduli else 1, dtype=np.intp)
    lookup[vectors @ radix] = np.arange(N.order)
    return vectors, radix, lookup


def _matrix_automorphism(
    N: FiniteGroup, module: ModuleSpec, blocks: Sequence[np.ndarray]
) -> np.ndarray:
    """Index permutation of the block-diagonal action v -> A v."""
    moduli = module.moduli
    vectors, radix, lookup = _radix_lookup(N, moduli)
    images = np.empty_like(vectors)
    start = 0
    for (m, r), A in zip(module.factors, blocks):
        images[:, start:start + r] = np.mod(vectors[:, start:start + r] @ A.T, m)
        start += r
    return lookup[images @ radix]


def _check_invertible(A: np.ndarray, m: int) -> None:
    det = int(Matrix(A.tolist()).det()) % m
    if not coprime(det, m):
        raise BadParams("action matrix is not invertible", {"modulus": m, "matrix": A.tolist()})


def extend_action(K: FiniteGroup, L: FiniteGroup, gen_auts: Sequence[np.ndarray]) -> np.ndarray:
    """aut[h] for every h in L from the automorphisms of L's generators.

    Raises ActionNotHomomorphism when a generator map is not an automorphism
    of K or the generator maps do not respect L's relations.
    """
    for j, a in enumerate(gen_auts):
        if not np.all(np.bincount(a, minlength=K.order) == 1):
            raise ActionNotHomomorphism("generator map is not bijective", {"generator": j})
        for g_index, g in enumerate(K.generators):
            if not np.array_equal(a[K.rmul[g_index]], K.right_multiply(a, int(a[g]))):
                raise ActionNotHomomorphism(
                    "generator map is not an automorphism", {"generator": j}
                )

    aut = np.empty((L.order, K.order), dtype=np.intp)
    aut[0] = np.arange(K.order)
    for x in range(1, L.order):
        aut[x] = aut[L.parent[x]][gen_auts[L.parent_gen[x]]]
    for j, a in enumerate(gen_auts):
        if not np.array_equal(aut[L.rmul[j]], aut[:, a]):
            raise ActionNotHomomorphism(
                "action does not respect the relations of the acting group", {"generator": j}
            )
    return aut


def frattini_subgroup(P: FiniteGroup) -> Subgroup:
    """P' P^p for a p-group P."""
    p = prime_power_base(P.order)
    gens = P.generators
    relators = [P.commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    relators += [P.power(g, p) for g in gens]
    return normal_closure(P, relators)


def maximal_subgroups(P: FiniteGroup) -> List[Subgroup]:
    """Maximal subgroups of a p-group, sorted by member set."""
    p = prime_power_base(P.order)
    if p == 0:
        raise BadParams("maximal kernels need a p-group", {"order": P.order})
    frattini = frattini_subgroup(P)
    reps = sorted(set(coset_labels(P, frattini).tolist()) - {0})
    rank = 0
    while p ** (rank + 1) <= P.order // frattini.order:
        rank += 1
    found: List[Subgroup] = []
    for subset in combinations(reps, rank - 1):
        M = closure(P, subset, start=frattini)
        if M.order * p == P.order and not any(M.same_as(F) for F in found):
            found.append(M)
    return sorted(found, key=lambda M: tuple(M.members.tolist()))


def quotient_exponents(P: FiniteGroup, M: Subgroup) -> np.ndarray:
    """phi(x) = k with x in t^k M, t the smallest element outside M (|P:M| = p)."""
    p = P.order // M.order
    labels = coset_labels(P, M)
    t = int(np.flatnonzero(~M.mask)[0])
    exponent_of_label = {}
    y = 0
    for k in range(p):
        exponent_of_label[int(labels[y])] = k
        y = P.product(y, t)
    return np.array([exponent_of_label[int(c)] for c in labels], dtype=np.int64)


def canonical_unit(m: int, p: int) -> int:
    """Smallest unit of multiplicative order p modulo m."""
    for a in range(2, m):
        if coprime(a, m) and n_order(a, m) == p:
            return a
    raise BadParams(f"no unit of order {p} modulo {m}", {"modulus": m, "order": p})


def canonical_companion(ell: int, r: int, p: int) -> np.ndarray:
    """Companion matrix of the lexicographically smallest degree-r factor of x^p - 1 over F_ell."""
    _, factors = Poly(_x**p - 1, _x, modulus=ell).factor_list()
    candidates = sorted(
        tuple(int(c) % ell for c in f.all_coeffs())
        for f, _ in factors
        if f.degree() == r
    )
    if not candidates:
        raise BadParams(
            f"x^{p} - 1 has no factor of degree {r} over F_{ell}", {"prime": ell, "rank": r}
        )
    coeffs = candidates[0]  # monic, highest degree first
    C = np.zeros((r, r), dtype=np.int64)
    C[1:, :-1] = np.eye(r - 1, dtype=np.int64)
    C[:, -1] = [(-c) % ell for c in reversed(coeffs[1:])]
    return C


def _maximal_kernel_blocks(P: FiniteGroup, module: ModuleSpec) -> List[List[np.ndarray]]:
    """blocks[j][i]: matrix of actor generator j on factor i."""
    maximal = maximal_subgroups(P)
    if len(maximal) != len(module.factors):
        raise FactorCountMismatch(len(maximal), len(module.factors))
    p = prime_power_base(P.order)
    per_factor = []
    for (m, r), M in zip(module.factors, maximal):
        base = (
            np.array([[canonical_unit(m, p)]], dtype=np.int64)
            if r == 1
            else canonical_companion(m, r, p)
        )
        exponents = quotient_exponents(P, M)
        per_factor.append(
            [_matrix_power(base, int(exponents[g]), m) for g in P.generators]
        )
    return [list(row) for row in zip(*per_factor)] if per_factor else [[] for _ in P.generators]


def _matrix_power(A: np.ndarray, k: int, m: int) -> np.ndarray:
    result = np.eye(A.shape[0], dtype=np.int64)
    for _ in range(k):
        result = np.mod(result @ A, m)
    return result


def _explicit_blocks(P: FiniteGroup, module: ModuleSpec, action: ExplicitMatrices) -> List[List[np.ndarray]]:
    if len(action.blocks) != len(module.factors):
        raise FactorCountMismatch(len(module.factors), len(action.blocks))
    per_factor = []
    for (m, r), mats in zip(module.factors, action.blocks):
        if len(mats) != len(P.generators):
            raise BadParams(
                "one matrix per acting generator is needed",
                {"expected": len(P.generators), "found": len(mats)},
            )
        arrays = []
        for mat in mats:
            A = np.mod(np.array(mat, dtype=np.int64), m)
            if A.shape != (r, r):
                raise BadParams("matrix has the wrong size", {"rank": r, "matrix": A.tolist()})
            _check_invertible(A, m)
            arrays.append(A)
        per_factor.append(arrays)
    return [list(row) for row in zip(*per_factor)] if per_factor else [[] for _ in P.generators]


def semidirect_product(
    module: ModuleSpec,
    P: FiniteGroup,
    action: ActionSpec,
    bound: int = DEFAULT_BOUND,
    name: str = "",
) -> FiniteGroup:
    if module.order * P.order > bound:
        raise BoundExceeded(bound)
    N = module_group(module, bound)
    if isinstance(action, MaximalKernels):
        blocks = _maximal_kernel_blocks(P, module)
    else:
        blocks = _explicit_blocks(P, module, action)
    gen_auts = [_matrix_automorphism(N, module, row) for row in blocks]
    aut = extend_action(N, P, gen_auts)
    return _build(N, P, aut, bound, name)


def group_semidirect(
    K: FiniteGroup,
    L: FiniteGroup,
    images: Sequence[Sequence[int]],
    bound: int = DEFAULT_BOUND,
    name: str = "",
) -> FiniteGroup:
    """K x| L where generator j of L sends generator i of K to images[j][i]."""
    if K.order * L.order > bound:
        raise BoundExceeded(bound)
    if len(images) != len(L.generators):
        raise BadParams(
            "one automorphism per acting generator is needed",
            {"expected": len(L.generators), "found": len(images)},
        )
    gen_auts = []
    for j, targets in enumerate(images):
        if len(targets) != len(K.generators) or not all(0 <= t < K.order for t in targets):
            raise BadParams("bad automorphism images", {"generator": j, "images": list(targets)})
        a = np.zeros(K.order, dtype=np.intp)
        for x in range(1, K.order):
            a[x] = K.product(int(a[K.parent[x]]), int(targets[K.parent_gen[x]]))
        gen_auts.append(a)
    aut = extend_action(K, L, gen_auts)
    return _build(K, L, aut, bound, name)


def direct_product(A: FiniteGroup, B: FiniteGroup, bound: int = DEFAULT_BOUND, name: str = "") -> FiniteGroup:
    if A.order * B.order > bound:
        raise BoundExceeded(bound)
    aut = np.tile(np.arange(A.order, dtype=np.intp), (B.order, 1))
    return _build(A, B, aut, bound, name)


def _build(K: FiniteGroup, L: FiniteGroup, aut: np.ndarray, bound: int, name: str) -> FiniteGroup:
    gens = [(g, 0) for g in K.generators] + [(0, h) for h in L.generators]
    return enumerate_elements(gens, SemidirectDomain(K, L, aut), bound=bound, name=name)


def semidirect_parts(G: FiniteGroup) -> Tuple[Homomorphism, Homomorphism]:
    """Projection G -> L and embedding K -> G of a semidirect product."""
    domain = G.domain
    if not isinstance(domain, SemidirectDomain):
        raise BadParams("not a semidirect product", {"backing": G.backing})
    projection = Homomorphism(
        G, domain.actor, np.array([e[1] for e in G.elements], dtype=np.intp)
    )
    embedding = Homomorphism(
        domain.normal,
        G,
        np.array([G.index_of((n, 0)) for n in range(domain.normal.order)], dtype=np.intp),
    )
    return projection, embedding
