import numpy as np
import pytest

from conftest import element_of_order
from constructors.families import cyclic, permutation_group
from core.errors import BoundExceeded, InvalidGenerator, NotNormal
from groups.arith import is_prime_power, is_squarefree, pi_part, prime_power_base, prime_set
from groups.classes import conjugacy_classes
from groups.domains import PermutationDomain
from groups.finite_group import enumerate_elements
from groups.subgroups import (
    center,
    centralizer,
    closure,
    derived_subgroup,
    is_normal,
    normal_closure,
    quotient,
    trivial_subgroup,
    whole_group,
)
from structure.sylow import sylow_subgroup


class TestArith:
    def test_prime_sets_and_parts(self):
        assert prime_set(18) == {2, 3}
        assert prime_set(1) == frozenset()
        assert pi_part(360, [2, 5]) == 40

    def test_prime_powers_and_square_free(self):
        assert is_prime_power(64) and prime_power_base(64) == 2
        assert not is_prime_power(18) and prime_power_base(18) == 0
        assert is_squarefree(30)
        assert not is_squarefree(18)


class TestEnumeration:
    def test_s3_from_a_transposition_and_a_three_cycle(self):
        G = permutation_group(3, [(1, 0, 2), (1, 2, 0)], "S3", bound=100)
        assert G.order == 6
        assert G.backing == PermutationDomain(3).backing

    def test_q8_order(self, q8):
        assert q8.order == 8

    def test_sz8_borel_order(self, borel):
        assert borel.order == 448

    def test_identity_is_index_zero(self, s3):
        assert all(s3.product(0, x) == x == s3.product(x, 0) for x in range(s3.order))
        assert all(s3.product(x, s3.inverse(x)) == 0 for x in range(s3.order))

    def test_bound_is_enforced(self):
        with pytest.raises(BoundExceeded) as excinfo:
            cyclic(50, bound=10)
        assert excinfo.value.bound == 10

    def test_generator_outside_domain_is_rejected(self):
        with pytest.raises(InvalidGenerator):
            enumerate_elements([(0, 0, 1)], PermutationDomain(3))


class TestConjugacyClasses:
    def test_abelian_group_has_singleton_classes(self, c6):
        cd = conjugacy_classes(c6)
        assert cd.k == 6
        assert cd.class_sizes() == [1]

    def test_s3_class_sizes(self, s3):
        assert sorted(conjugacy_classes(s3).sizes.tolist()) == [1, 2, 3]

    def test_sl23_class_sizes(self, sl):
        cd = conjugacy_classes(sl)
        assert cd.k == 7
        assert sorted(cd.sizes.tolist()) == [1, 1, 4, 4, 4, 4, 6]

    def test_class_zero_is_the_identity(self, sl):
        cd = conjugacy_classes(sl)
        assert cd.class_of[0] == 0 and cd.sizes[0] == 1

    def test_power_map_matches_element_powers(self, sl):
        cd = conjugacy_classes(sl)
        for i, rep in enumerate(cd.reps.tolist()):
            for j in range(1, cd.exponent):
                assert cd.power(i, j) == cd.class_of[sl.power(rep, j)]

    def test_sizes_sum_to_order(self, borel):
        assert int(conjugacy_classes(borel).sizes.sum()) == 448


class TestSubgroups:
    def test_center_orders(self, q8, sl, s3):
        assert center(q8).order == 2
        assert center(sl).order == 2
        assert center(s3).is_trivial()

    def test_normal_closure_of_the_identity(self, s3):
        assert normal_closure(s3, [0]).is_trivial()

    def test_normal_closure_of_a_transposition(self, s3):
        assert normal_closure(s3, [element_of_order(s3, 2)]).is_whole()

    def test_normal_closure_of_an_order_four_element(self, sl):
        N = normal_closure(sl, [element_of_order(sl, 4)])
        assert N.same_as(sylow_subgroup(sl, 2))

    def test_derived_subgroups(self, s3, q8, c6):
        assert derived_subgroup(s3).order == 3
        assert derived_subgroup(q8).same_as(center(q8))
        assert derived_subgroup(c6).is_trivial()

    def test_centralizer_of_a_transposition(self, s3):
        t = element_of_order(s3, 2)
        C = centralizer(s3, [t])
        assert C.order == 2 and t in C

    def test_closure_with_limit(self, sl):
        x = element_of_order(sl, 3)
        assert closure(sl, [x], limit=2) is None
        assert closure(sl, [x]).order == 3

    def test_is_normal(self, s3):
        assert is_normal(s3, derived_subgroup(s3))
        assert not is_normal(s3, closure(s3, [element_of_order(s3, 2)]))


class TestQuotient:
    def test_by_the_whole_group(self, s3):
        Q, phi = quotient(s3, whole_group(s3))
        assert Q.order == 1
        assert phi.kernel().is_whole()

    def test_q8_mod_center_is_klein(self, q8):
        Q, phi = quotient(q8, center(q8))
        assert Q.order == 4
        assert Q.is_abelian()
        assert all(Q.power(x, 2) == 0 for x in range(Q.order))
        assert phi.kernel().same_as(center(q8))

    def test_sl23_mod_center_has_a_kernel_of_order_four(self, sl):
        Q, phi = quotient(sl, center(sl))
        assert Q.order == 12
        assert phi.image(sylow_subgroup(sl, 2)).order == 4

    def test_projection_is_a_homomorphism(self, sl):
        Q, phi = quotient(sl, center(sl))
        rng = np.random.default_rng(3)
        for a, b in rng.integers(0, sl.order, size=(50, 2)).tolist():
            assert phi(sl.product(a, b)) == Q.product(phi(a), phi(b))

    def test_non_normal_subgroup_is_rejected(self, s3):
        with pytest.raises(NotNormal):
            quotient(s3, closure(s3, [element_of_order(s3, 2)]))

    def test_trivial_quotient_keeps_the_order(self, s3):
        Q, _ = quotient(s3, trivial_subgroup(s3))
        assert Q.order == 6

    def test_preimage_of_the_image(self, sl):
        Q, phi = quotient(sl, center(sl))
        P = sylow_subgroup(sl, 2)
        assert phi.preimage(phi.image(P)).same_as(P)
        assert phi.preimage(trivial_subgroup(Q)).same_as(center(sl))
