import pytest

from conftest import element_orders, is_associative_sample
from constructors.families import build_base, cyclic, extraspecial, homocyclic, sl23
from constructors.gf8 import F8Element, frobenius_twist
from constructors.semidirect import (
    ExplicitMatrices,
    MaximalKernels,
    ModuleSpec,
    direct_product,
    group_semidirect,
    maximal_subgroups,
    semidirect_parts,
    semidirect_product,
)
from constructors.suzuki import suzuki_kernel
from core.consts import Families
from core.errors import ActionNotHomomorphism, BadParams, BoundExceeded, FactorCountMismatch
from groups.classes import conjugacy_classes
from groups.subgroups import center, derived_subgroup, is_normal
from structure.sylow import fitting_subgroup


class TestBaseFamilies:
    def test_cyclic(self):
        G = build_base(Families.CYCLIC, [6])
        assert G.order == 6 and G.is_abelian()

    def test_sl23(self):
        G = sl23()
        assert G.order == 24
        assert center(G).order == 2

    def test_homocyclic(self):
        G = homocyclic(9, 3)
        assert G.order == 729
        assert conjugacy_classes(G).exponent == 9

    def test_alternating_and_symmetric(self):
        assert build_base(Families.ALT5).order == 60
        assert build_base(Families.SYMMETRIC, [4]).order == 24
        assert build_base(Families.ALTERNATING, [4]).order == 12

    @pytest.mark.parametrize("family, params", [
        (Families.CYCLIC, [0]),
        (Families.DIHEDRAL, [2]),
        (Families.ELEMENTARY_ABELIAN, [4, 2]),
        (Families.CYCLIC, []),
        ("Monster", []),
    ])
    def test_bad_params(self, family, params):
        with pytest.raises(BadParams):
            build_base(family, params)


class TestExtraspecial:
    def test_d8_type_class_sizes(self):
        G = extraspecial(2, "+")
        assert sorted(conjugacy_classes(G).sizes.tolist()) == [1, 1, 2, 2, 2]

    def test_the_two_order_eight_types_differ(self):
        assert element_orders(extraspecial(2, "+")) != element_orders(extraspecial(2, "-"))

    def test_exponents_for_p3(self):
        assert conjugacy_classes(extraspecial(3, "+")).exponent == 3
        assert conjugacy_classes(extraspecial(3, "-")).exponent == 9

    @pytest.mark.parametrize("p, sign", [(2, "+"), (2, "-"), (3, "+"), (3, "-")])
    def test_center_and_derived_subgroup_have_order_p(self, p, sign):
        G = extraspecial(p, sign)
        assert G.order == p**3
        assert center(G).order == p
        assert derived_subgroup(G).same_as(center(G))

    def test_unsupported_prime(self):
        with pytest.raises(BadParams):
            extraspecial(5, "+")


class TestGF8:
    def test_multiplicative_group_is_cyclic_of_order_seven(self):
        x = F8Element(0b010)
        powers = {(x ** k).bits for k in range(7)}
        assert powers == set(range(1, 8))
        assert x ** 7 == 1

    def test_inverses(self):
        assert all(a * a.inverse() == 1 for a in F8Element.elements()[1:])

    def test_twist_squared_is_squaring(self):
        assert all(frobenius_twist(frobenius_twist(a)) == a * a for a in F8Element.elements())

    def test_twist_is_additive(self):
        elements = F8Element.elements()
        assert all(
            frobenius_twist(a + b) == frobenius_twist(a) + frobenius_twist(b)
            for a in elements
            for b in elements
        )


class TestSuzukiBorel:
    def test_order_and_kernel(self, borel):
        Q = suzuki_kernel(borel)
        assert borel.order == 448
        assert Q.order == 64
        assert is_normal(borel, Q)
        assert fitting_subgroup(borel).same_as(Q)

    def test_kernel_exponent_and_center(self, borel):
        Q = suzuki_kernel(borel).as_group
        assert conjugacy_classes(Q).exponent == 4
        assert center(Q).order == 8

    def test_associativity_sample(self, borel):
        assert is_associative_sample(borel, 2000, seed=11)


class TestSemidirect:
    def test_trivial_action_is_a_direct_product(self):
        module = ModuleSpec(((3, 1),))
        P = cyclic(2)
        G = semidirect_product(module, P, ExplicitMatrices(((((1,),),),)))
        assert G.order == 6
        assert G.is_abelian()

    def test_explicit_inversion_gives_s3(self):
        G = semidirect_product(ModuleSpec(((3, 1),)), cyclic(2), ExplicitMatrices(((((2,),),),)))
        assert G.order == 6
        assert not G.is_abelian()
        assert center(G).is_trivial()

    def test_maximal_subgroup_counts(self):
        assert len(maximal_subgroups(extraspecial(2, "+"))) == 3
        assert len(maximal_subgroups(extraspecial(2, "-"))) == 3
        assert len(maximal_subgroups(extraspecial(3, "+"))) == 4

    def test_order216_construction(self, order216):
        assert order216.order == 216
        assert center(order216).order == 2

    def test_maximal_kernels_act_through_the_listed_subgroups(self):
        P = extraspecial(2, "+")
        G = semidirect_product(ModuleSpec(((3, 1),) * 3), P, MaximalKernels())
        projection, embedding = semidirect_parts(G)
        module = embedding.image()
        for i, M in enumerate(maximal_subgroups(P)):
            factor_gen = G.index_of((embedding.source.generators[i], 0))
            fixers = [
                h for h in range(P.order)
                if G.conjugate(factor_gen, G.index_of((0, h))) == factor_gen
            ]
            assert sorted(fixers) == M.members.tolist()
        assert module.order == 27
        assert all(projection(x) == 0 for x in module.members.tolist())

    def test_factor_count_must_match(self):
        with pytest.raises(FactorCountMismatch):
            semidirect_product(ModuleSpec(((3, 1),) * 2), extraspecial(2, "+"), MaximalKernels())

    def test_non_invertible_matrix(self):
        with pytest.raises(BadParams):
            semidirect_product(ModuleSpec(((3, 1),)), cyclic(2), ExplicitMatrices(((((0,),),),)))

    def test_action_must_respect_relations(self):
        # an element of order 2 cannot act with order 4
        with pytest.raises(ActionNotHomomorphism):
            semidirect_product(ModuleSpec(((5, 1),)), cyclic(2), ExplicitMatrices(((((2,),),),)))

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            semidirect_product(ModuleSpec(((7, 1),) * 4), extraspecial(3, "+"), MaximalKernels(), bound=1000)

    def test_group_semidirect_from_generator_images(self):
        K = cyclic(3)
        inverse = K.index_of((2,))
        G = group_semidirect(K, cyclic(2), [[inverse]])
        assert G.order == 6
        assert not G.is_abelian()

    def test_direct_product(self, d8_c3):
        assert d8_c3.order == 24
        assert center(d8_c3).order == 6
        C6 = direct_product(cyclic(2), cyclic(3))
        assert C6.is_abelian()
        assert conjugacy_classes(C6).exponent == 6

    def test_semidirect_parts_rejects_other_backings(self, s3):
        with pytest.raises(BadParams):
            semidirect_parts(s3)

    @pytest.mark.parametrize("module, actor", [
        (((2, 2),) * 4, (3, "+")),
        (((9, 1),) * 3, (2, "-")),
    ])
    def test_constructions_are_associative(self, module, actor):
        G = semidirect_product(ModuleSpec(module), extraspecial(*actor), MaximalKernels())
        assert is_associative_sample(G, 500)
