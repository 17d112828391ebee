import numpy as np
import pytest

from constructors.families import (
    alt5,
    alternating,
    cyclic,
    dihedral,
    elementary_abelian,
    quaternion8,
    sl23,
    symmetric,
)
from constructors.semidirect import direct_product
from constructors.suzuki import sz8_borel
from dsl.builder import build
from groups.finite_group import FiniteGroup


@pytest.fixture(autouse=True)
def _isolated_cwd(tmp_path, monkeypatch):
    # log files and the default flags file are resolved against the cwd
    monkeypatch.chdir(tmp_path)


@pytest.fixture(scope="session")
def s3() -> FiniteGroup:
    return symmetric(3)


@pytest.fixture(scope="session")
def a4() -> FiniteGroup:
    return alternating(4)


@pytest.fixture(scope="session")
def a5() -> FiniteGroup:
    return alt5()


@pytest.fixture(scope="session")
def q8() -> FiniteGroup:
    return quaternion8()


@pytest.fixture(scope="session")
def d8() -> FiniteGroup:
    return dihedral(4)


@pytest.fixture(scope="session")
def klein() -> FiniteGroup:
    return elementary_abelian(2, 2)


@pytest.fixture(scope="session")
def c6() -> FiniteGroup:
    return cyclic(6)


@pytest.fixture(scope="session")
def sl() -> FiniteGroup:
    return sl23()


@pytest.fixture(scope="session")
def d8_c3() -> FiniteGroup:
    return direct_product(dihedral(4), cyclic(3), name="D(4)*C(3)")


@pytest.fixture(scope="session")
def borel() -> FiniteGroup:
    return sz8_borel()


@pytest.fixture(scope="session", params=["+", "-"])
def order216(request) -> FiniteGroup:
    return build(f"sdp(3^3,ES(2,{request.param}),maxker)")


def element_of_order(G: FiniteGroup, n: int) -> int:
    """Smallest element index of order exactly n."""
    for x in range(1, G.order):
        if G.power(x, n) == 0 and all(G.power(x, d) != 0 for d in range(1, n)):
            return x
    raise AssertionError(f"no element of order {n} in {G!r}")


def element_orders(G: FiniteGroup) -> list:
    from groups.classes import conjugacy_classes

    return sorted(conjugacy_classes(G).element_orders().tolist())


def is_associative_sample(G: FiniteGroup, samples: int, seed: int = 0) -> bool:
    rng = np.random.default_rng(seed)
    triples = rng.integers(0, G.order, size=(samples, 3))
    return all(
        G.product(G.product(int(a), int(b)), int(c)) == G.product(int(a), G.product(int(b), int(c)))
        for a, b, c in triples
    )
