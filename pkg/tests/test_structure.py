import pytest

from constructors.suzuki import suzuki_kernel
from core.consts import PrimeOrderKinds
from core.errors import NotCoprime
from groups.subgroups import center, intersection, is_normal
from structure.complements import hall_complement, normal_hall_subgroup
from structure.frobenius import (
    acts_fixed_point_freely,
    is_frobenius_with_kernel,
    prime_order_classification,
)
from structure.series import (
    chief_series,
    is_simple,
    is_solvable,
    is_supersolvable,
    minimal_normal_subgroups,
)
from structure.sylow import fitting_subgroup, is_nilpotent, normalizer, p_core, sylow_subgroup


class TestSylow:
    def test_sylow_orders(self, s3, sl, borel):
        assert sylow_subgroup(s3, 3).order == 3
        assert sylow_subgroup(s3, 5).is_trivial()
        assert sylow_subgroup(borel, 2).order == 64

    def test_sl23_sylow_two_is_quaternion(self, sl):
        P = sylow_subgroup(sl, 2)
        assert P.order == 8
        assert not P.is_abelian()
        assert center(P.as_group).order == 2

    def test_normalizer_of_a_normal_sylow_is_everything(self, sl):
        assert normalizer(sl, sylow_subgroup(sl, 2)).is_whole()

    def test_self_normalizing_sylow(self, s3):
        assert normalizer(s3, sylow_subgroup(s3, 2)).order == 2

    def test_p_cores(self, sl, s3, a4):
        assert p_core(sl, 2).order == 8
        assert p_core(s3, 2).is_trivial()
        assert p_core(a4, 2).order == 4
        assert p_core(a4, 3).is_trivial()

    def test_fitting_subgroups(self, s3, q8, borel):
        assert fitting_subgroup(s3).order == 3
        assert fitting_subgroup(q8).is_whole()
        assert fitting_subgroup(borel).same_as(suzuki_kernel(borel))

    def test_nilpotency(self, q8, s3, borel, d8_c3):
        assert is_nilpotent(q8)
        assert is_nilpotent(d8_c3)
        assert not is_nilpotent(s3)
        assert not is_nilpotent(borel)


class TestSeries:
    def test_chief_factor_orders(self, a4):
        series = chief_series(a4)
        assert sorted(series.factor_orders) == [3, 4]
        assert series.terms[0].is_whole() and series.terms[-1].is_trivial()

    def test_supersolvability(self, s3, a4, sl):
        assert is_supersolvable(s3)
        assert not is_supersolvable(a4)
        assert not is_supersolvable(sl)
        assert is_solvable(sl)

    def test_order216_is_supersolvable(self, order216):
        assert is_supersolvable(order216)

    def test_a5_is_simple(self, a5):
        assert is_simple(a5)
        assert not is_solvable(a5)

    def test_minimal_normal_subgroups_of_a_prime_cyclic_group(self):
        from constructors.families import cyclic

        G = cyclic(5)
        minimal = minimal_normal_subgroups(G)
        assert len(minimal) == 1 and minimal[0].is_whole()

    def test_a4_has_the_klein_group_as_only_minimal_normal(self, a4):
        minimal = minimal_normal_subgroups(a4)
        assert [M.order for M in minimal] == [4]

    def test_order216_minimal_normals_include_three_module_factors(self, order216):
        minimal = minimal_normal_subgroups(order216)
        assert sum(1 for M in minimal if M.order == 3) == 3
        assert all(M.is_abelian() for M in minimal)
        assert all(is_normal(order216, M) for M in minimal)


class TestHallComplements:
    def test_normal_hall_subgroups(self, s3, sl, a4):
        assert normal_hall_subgroup(s3, [3]).order == 3
        assert normal_hall_subgroup(s3, [2]) is None
        assert normal_hall_subgroup(sl, [2]).order == 8
        assert normal_hall_subgroup(a4, [2]).order == 4

    @pytest.mark.parametrize("fixture, primes, complement_order", [
        ("s3", [3], 2),
        ("sl", [2], 3),
        ("borel", [2], 7),
    ])
    def test_complements(self, request, fixture, primes, complement_order):
        G = request.getfixturevalue(fixture)
        N = normal_hall_subgroup(G, primes)
        H = hall_complement(G, N, seed=5)
        assert H.order == complement_order
        assert intersection(N, H).is_trivial()

    def test_complement_needs_coprime_index(self, q8):
        with pytest.raises(NotCoprime):
            hall_complement(q8, center(q8))

    def test_exhaustive_fallback(self, sl):
        N = normal_hall_subgroup(sl, [2])
        assert hall_complement(sl, N, rounds=1, max_generators=1).order == 3


class TestFrobenius:
    def test_s3(self, s3):
        witness = is_frobenius_with_kernel(s3, normal_hall_subgroup(s3, [3]))
        assert witness is not None
        assert witness.complement.order == 2

    def test_sl23_over_q8_is_not_frobenius(self, sl):
        assert is_frobenius_with_kernel(sl, sylow_subgroup(sl, 2)) is None

    def test_sz8_borel(self, borel):
        Q = suzuki_kernel(borel)
        witness = is_frobenius_with_kernel(borel, Q)
        assert witness is not None
        assert witness.kernel.order == 64
        assert witness.complement.order == 7
        assert acts_fixed_point_freely(borel, Q, witness.complement)

    def test_trivial_kernel_is_rejected(self, s3):
        assert is_frobenius_with_kernel(s3, center(s3)) is None


class TestPrimeOrderClassification:
    def test_elementary_abelian(self, klein):
        result = prime_order_classification(klein)
        assert result.kind == PrimeOrderKinds.P_GROUP_EXPONENT_P
        assert result.primes == (2,)

    def test_s3(self, s3):
        result = prime_order_classification(s3)
        assert result.kind == PrimeOrderKinds.FROBENIUS_PQ
        assert result.primes == (3, 2)

    def test_a5(self, a5):
        assert prime_order_classification(a5).kind == PrimeOrderKinds.ALT5

    def test_element_of_order_four(self, q8):
        assert prime_order_classification(q8).kind == PrimeOrderKinds.NOT_ALL_PRIME_ORDER
