"""Matrix coalgebra: comultiplication, counit, coideals, annihilator duality."""

import random
from fractions import Fraction

import pytest

from matalg.algebra import (
    Composition,
    parabolic_subalgebra,
    upper_triangular_algebra,
)
from matalg.coalgebra import (
    CoalgebraElement,
    Coideal,
    CoidealRejection,
    comultiply,
    counit,
    is_coideal,
    parabolic_coideal,
    perp,
)
from matalg.exactlin import Matrix, random_subspace, rref_basis, zero_space


def unit_span(n, positions):
    return rref_basis([Matrix.unit(n, i, j).flatten() for i, j in positions], n * n)


class TestComultiplication:
    def test_unit_formula_n2(self):
        # e_{0,1} splits as e_{0,0} (x) e_{0,1} + e_{0,1} (x) e_{1,1}
        tensor, eps = comultiply(CoalgebraElement.from_matrix(Matrix.unit(2, 0, 1)))
        nonzero = {i: v for i, v in enumerate(tensor) if v}
        assert nonzero == {1: Fraction(1), 7: Fraction(1)}
        assert eps == 0

    def test_unit_formula_general(self):
        n = 3
        tensor, eps = comultiply(CoalgebraElement.from_matrix(Matrix.unit(n, 1, 2)))
        expected = {}
        for k in range(n):
            expected[(1 * n + k) * n * n + (k * n + 2)] = Fraction(1)
        assert {i: v for i, v in enumerate(tensor) if v} == expected
        assert eps == 0

    def test_counit_is_trace(self):
        assert counit(CoalgebraElement.from_matrix(Matrix.unit(2, 0, 0))) == 1
        assert counit(CoalgebraElement.from_matrix(Matrix.unit(2, 0, 1))) == 0
        m = CoalgebraElement.from_matrix(Matrix([[1, 2], [3, 4]]))
        assert counit(m) == 5

    def test_counit_axiom_left(self):
        # contracting the left tensor factor with the counit gives back x
        n = 3
        rng = random.Random(8)
        for _ in range(5):
            coeffs = tuple(Fraction(rng.randint(-4, 4)) for _ in range(n * n))
            x = CoalgebraElement(n, coeffs)
            tensor, _ = comultiply(x)
            contracted = [Fraction(0)] * (n * n)
            for left in range(n * n):
                # counit of e_left is 1 exactly on diagonal units
                if left // n == left % n:
                    for right in range(n * n):
                        contracted[right] += tensor[left * n * n + right]
            assert tuple(contracted) == coeffs

    def test_counit_axiom_right(self):
        n = 3
        rng = random.Random(9)
        for _ in range(5):
            coeffs = tuple(Fraction(rng.randint(-4, 4)) for _ in range(n * n))
            tensor, _ = comultiply(CoalgebraElement(n, coeffs))
            contracted = [Fraction(0)] * (n * n)
            for right in range(n * n):
                if right // n == right % n:
                    for left in range(n * n):
                        contracted[left] += tensor[left * n * n + right]
            assert tuple(contracted) == coeffs

    def test_element_roundtrip(self):
        m = Matrix([[1, 2], [3, 4]])
        assert CoalgebraElement.from_matrix(m).to_matrix() == m

    def test_element_validation(self):
        with pytest.raises(ValueError):
            CoalgebraElement(2, (Fraction(1),))


class TestCoidealCheck:
    def test_zero_space_certifies(self):
        result = is_coideal(zero_space(9))
        assert isinstance(result, Coideal)
        assert result.certified and result.dimension == 0

    def test_single_lower_unit_n2(self):
        result = is_coideal(unit_span(2, [(1, 0)]))
        assert isinstance(result, Coideal)

    def test_single_lower_unit_n3_rejected(self):
        # the same corner unit fails at n = 3: its middle comultiplication
        # term e_{1,0} (x) e_{0,0} + ... escapes X (x) C + C (x) X
        result = is_coideal(unit_span(3, [(1, 0)]))
        assert isinstance(result, CoidealRejection)
        assert result.axiom == "comultiplication"
        assert result.element is not None

    def test_diagonal_unit_fails_counit(self):
        result = is_coideal(unit_span(2, [(0, 0)]))
        assert isinstance(result, CoidealRejection)
        assert result.axiom == "counit"
        # the offending element is reported
        assert counit(CoalgebraElement(2, result.element)) != 0

    def test_traceless_but_not_coideal(self):
        # span{e_{0,1} + e_{1,0}} at n = 2: counit fine, comultiplication not
        m = Matrix.unit(2, 0, 1) + Matrix.unit(2, 1, 0)
        result = is_coideal(rref_basis([m.flatten()], 4))
        assert isinstance(result, CoidealRejection)
        assert result.axiom == "comultiplication"

    def test_full_lower_corner_certifies(self):
        result = is_coideal(unit_span(3, [(1, 0), (2, 0)]))
        assert isinstance(result, Coideal)

    def test_rejection_element_lies_in_space(self):
        s = unit_span(3, [(1, 0)])
        result = is_coideal(s)
        assert s.contains(result.element)


class TestPerp:
    def test_upper_triangular_annihilator(self):
        p = perp(upper_triangular_algebra(2).space)
        assert p == unit_span(2, [(1, 0)])

    def test_zero_and_full(self):
        assert perp(zero_space(4)).dimension == 4
        assert perp(rref_basis([Matrix.unit(2, i, j).flatten() for i in range(2) for j in range(2)], 4)).dimension == 0

    def test_involution(self):
        rng = random.Random(13)
        for _ in range(10):
            dim = rng.randint(0, 9)
            s = random_subspace(rng, 9, dim)
            assert perp(perp(s)) == s

    def test_dimension_complement(self):
        rng = random.Random(14)
        for _ in range(10):
            dim = rng.randint(0, 9)
            s = random_subspace(rng, 9, dim)
            assert perp(s).dimension == 9 - dim

    def test_algebra_annihilators_are_coideals(self):
        for parts in ((1, 2), (2, 1), (1, 1, 1), (3,)):
            a = parabolic_subalgebra(Composition(parts))
            assert is_coideal(perp(a.space)).certified

    def test_non_coideal_annihilator_of_non_algebra(self):
        # perp of a span that is no algebra need not certify
        s = unit_span(3, [(0, 1), (1, 2)])
        result = is_coideal(perp(s))
        assert isinstance(result, CoidealRejection)


class TestParabolicCoideal:
    def test_type_1_2_is_lower_corner(self):
        c = parabolic_coideal(Composition((1, 2)))
        assert isinstance(c, Coideal)
        assert c.space == unit_span(3, [(1, 0), (2, 0)])

    def test_dimension_series(self):
        for n in range(2, 7):
            c = parabolic_coideal(Composition((1, n - 1)))
            assert c.dimension == n - 1

    def test_duality_with_parabolic_algebra(self):
        for parts in ((1, 2), (2, 1), (1, 1, 1), (2, 2)):
            comp = Composition(parts)
            c = parabolic_coideal(comp)
            a = parabolic_subalgebra(comp)
            assert c.space == perp(a.space)
            assert perp(c.space) == a.space

    def test_one_block_type_gives_zero_coideal(self):
        assert parabolic_coideal(Composition((3,))).dimension == 0

    def test_general_dimension(self):
        # complement of the block pattern: (n^2 - sum n_i^2)/2
        for parts in ((2, 2), (1, 1, 2), (3, 1)):
            comp = Composition(parts)
            expected = (comp.n**2 - sum(p * p for p in parts)) // 2
            assert parabolic_coideal(comp).dimension == expected
