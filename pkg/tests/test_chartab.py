import dataclasses

import numpy as np
import pytest

from chartab.class_algebra import class_structure_constants
from chartab.cyclotomic import CyclotomicValue, cyclotomic_is_zero
from chartab.dixon import choose_dixon_prime, dixon_primes, modular_character_table
from chartab.modular import charpoly, distinct_roots, mod_matmul, nullspace, rref
from chartab.table import character_table, verify_orthogonality
from constructors.families import cyclic
from groups.classes import conjugacy_classes


class TestCyclotomic:
    def test_one_plus_minus_one(self):
        v = CyclotomicValue.from_int(2, 1) + CyclotomicValue.zeta(2)
        assert cyclotomic_is_zero(v)

    def test_cube_roots_of_unity_sum_to_zero(self):
        v = CyclotomicValue.from_int(3, 1) + CyclotomicValue.zeta(3, 1) + CyclotomicValue.zeta(3, 2)
        assert cyclotomic_is_zero(v)

    def test_golden_ratio_is_not_zero(self):
        v = CyclotomicValue.zeta(5, 1) + CyclotomicValue.zeta(5, 4)
        assert not cyclotomic_is_zero(v)
        assert v.to_complex() == pytest.approx(0.6180339887, abs=1e-9)

    def test_zeta_to_the_conductor_is_one(self):
        z = CyclotomicValue.zeta(12)
        power = CyclotomicValue.from_int(12, 1)
        for _ in range(12):
            power = power * z
        assert power == CyclotomicValue.from_int(12, 1)

    def test_complex_conjugate(self):
        z = CyclotomicValue.zeta(7, 3)
        assert z.conjugate() == CyclotomicValue.zeta(7, 4)
        assert (z * z.conjugate()).as_int() == 1

    def test_as_int_rejects_irrational_values(self):
        with pytest.raises(ValueError):
            CyclotomicValue.zeta(4).as_int()


class TestModularLinearAlgebra:
    def test_mod_matmul_matches_exact_product(self):
        p = 2**31 - 1
        rng = np.random.default_rng(0)
        A = rng.integers(0, p, size=(4, 5), dtype=np.int64)
        B = rng.integers(0, p, size=(5, 3), dtype=np.int64)
        exact = (A.astype(object) @ B.astype(object)) % p
        assert mod_matmul(A, B, p).tolist() == exact.tolist()

    def test_rref_and_nullspace(self):
        A = np.array([[1, 2, 3], [2, 4, 6]], dtype=np.int64)
        R, pivots = rref(A, 7)
        assert pivots == [0]
        N = nullspace(A, 7)
        assert N.shape == (2, 3)
        assert not np.any(mod_matmul(A, N.T.copy(), 7))

    def test_distinct_roots_of_a_split_polynomial(self):
        A = np.diag(np.array([2, 3, 3], dtype=np.int64))
        assert sorted(distinct_roots(charpoly(A, 11), 11)) == [2, 3]


class TestDixon:
    @pytest.mark.parametrize("order, exponent, prime", [(6, 6, 7), (24, 12, 13), (448, 28, 113)])
    def test_choose_dixon_prime(self, order, exponent, prime):
        assert choose_dixon_prime(order, exponent) == prime

    def test_dixon_primes_are_increasing(self):
        primes = dixon_primes(24, 12, 3)
        assert primes[0] == 13 and primes == sorted(primes) and len(set(primes)) == 3
        assert all(p % 12 == 1 for p in primes)

    def test_trivial_group(self):
        G = cyclic(1)
        cd = conjugacy_classes(G)
        table = modular_character_table(class_structure_constants(G, cd), 3)
        assert table.degrees == [1]

    def test_s3_modulo_seven(self, s3):
        table = modular_character_table(class_structure_constants(s3, conjugacy_classes(s3)), 7)
        assert sorted(table.degrees) == [1, 1, 2]

    def test_class_algebra_counts(self, s3):
        cd = conjugacy_classes(s3)
        algebra = class_structure_constants(s3, cd)
        t = int(np.flatnonzero(cd.sizes == 3)[0])
        # a transposition squared is the identity in three ways
        assert algebra.constant(t, t, 0) == 3


def _int_rows(table):
    return [[table.value(r, c).as_int() for c in range(table.k)] for r in range(table.k)]


class TestCharacterTable:
    def test_c2(self):
        assert _int_rows(character_table(cyclic(2))) == [[1, 1], [1, -1]]

    def test_q8(self, q8):
        table = character_table(q8)
        assert table.degrees == [1, 1, 1, 1, 2]
        sizes = table.class_data.sizes
        zeros = set(np.flatnonzero(table.zero_mask()[4]).tolist())
        assert zeros == set(np.flatnonzero(sizes == 2).tolist())

    def test_sl23_degrees(self, sl):
        assert character_table(sl).degrees == [1, 1, 1, 2, 2, 2, 3]

    def test_s3_values_on_transpositions(self, s3):
        table = character_table(s3)
        t = int(np.flatnonzero(table.class_data.sizes == 3)[0])
        assert table.degrees == [1, 1, 2]
        # sign sorts before trivial: -1 < 1 in the first column where they differ
        assert table.value(0, t).as_int() == -1
        assert table.value(1, t).as_int() == 1
        assert cyclotomic_is_zero(table.value(2, t))

    def test_rows_sorted_by_degree_then_coefficients(self, borel):
        table = character_table(borel)
        keys = [(d, tuple(table.coeffs[r].ravel().tolist())) for r, d in enumerate(table.degrees)]
        assert keys == sorted(keys)
        ones = np.zeros_like(table.coeffs[0])
        ones[:, 0] = 1
        assert sum(bool((table.coeffs[r] == ones).all()) for r in range(table.k)) == 1

    @pytest.mark.parametrize("fixture", ["s3", "q8", "sl", "a4", "a5", "d8_c3", "borel"])
    def test_table_properties(self, request, fixture):
        G = request.getfixturevalue(fixture)
        table = character_table(G)
        assert verify_orthogonality(table)
        assert sum(d * d for d in table.degrees) == G.order
        assert all(G.order % d == 0 for d in table.degrees)
        zeros = table.zero_mask()
        assert all(zeros[r].any() for r, d in enumerate(table.degrees) if d > 1)

    def test_centralizer_orders_from_column_orthogonality(self, sl):
        table = character_table(sl)
        for c in range(table.k):
            total = CyclotomicValue.from_int(table.exponent, 0)
            for r in range(table.k):
                total = total + table.value(r, c) * table.value(r, c).conjugate()
            assert total.as_int() == sl.order // int(table.class_data.sizes[c])

    @pytest.mark.parametrize("fixture", ["s3", "sl", "a5"])
    def test_prime_independence(self, request, fixture):
        G = request.getfixturevalue(fixture)
        first = character_table(G)
        second_prime = dixon_primes(G.order, first.exponent, 2)[1]
        second = character_table(G, second_prime)
        assert second.dixon_prime == second_prime
        assert np.array_equal(first.coeffs, second.coeffs)
        assert first.degrees == second.degrees

    def test_perturbed_table_fails_orthogonality(self, s3):
        table = character_table(s3)
        coeffs = table.coeffs.copy()
        coeffs[1, 1, 0] += 1
        assert not verify_orthogonality(dataclasses.replace(table, coeffs=coeffs))

    def test_to_dict(self, q8):
        data = character_table(q8).to_dict()
        assert list(data) == ["conductor", "dixon_prime", "class_sizes", "rows"]
        assert data["conductor"] == 4
        assert sorted(data["class_sizes"]) == [1, 1, 2, 2, 2]
        assert [row["degree"] for row in data["rows"]] == [1, 1, 1, 1, 2]
