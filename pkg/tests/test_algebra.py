"""Subalgebra structure: closures, radicals, blocks, flags, block types."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matalg.algebra import (
    Composition,
    MatrixAlgebra,
    absorption_probe,
    algebra_from_basis,
    closure,
    compositions,
    conjugate,
    conjugate_space,
    flag_stabilizer,
    invariant_flag,
    is_parabolic,
    multiply_spaces,
    optimal_composition,
    parabolic_dimension,
    parabolic_subalgebra,
    radical,
    schur_commutative_check,
    semisimple_blocks,
    upper_triangular_algebra,
)
from matalg.exactlin import (
    Matrix,
    random_invertible,
    random_matrix,
    rref_basis,
    subspace_contains,
)


def full_algebra(n):
    units = [Matrix.unit(n, i, j) for i in range(n) for j in range(n)]
    return algebra_from_basis(n, units)


def diagonal_algebra(n):
    return algebra_from_basis(n, [Matrix.unit(n, i, i) for i in range(n)])


class TestComposition:
    def test_parts_and_blocks(self):
        comp = Composition((1, 2))
        assert comp.n == 3
        assert [comp.block_of(i) for i in range(3)] == [0, 1, 1]

    def test_rejects_nonpositive_parts(self):
        with pytest.raises(ValueError):
            Composition((1, 0))
        with pytest.raises(ValueError):
            Composition(())

    def test_enumeration_count(self):
        # compositions of n are in bijection with subsets of n-1 cut points
        for n in range(1, 7):
            assert len(list(compositions(n))) == 2 ** (n - 1)

    def test_enumeration_proper_only(self):
        assert all(len(c.parts) >= 2 for c in compositions(4, min_parts=2))
        assert len(list(compositions(4, min_parts=2))) == 7

    def test_dimension_formula_value(self):
        assert parabolic_dimension(Composition((1, 2))) == 7
        assert parabolic_dimension(Composition((2, 2))) == 12
        assert parabolic_dimension(Composition((1, 1, 1))) == 6
        assert parabolic_dimension(Composition((4,))) == 16


class TestClosure:
    def test_single_nilpotent_generator(self):
        # closure of e_{0,1} is span{I, e_{0,1}}
        a = closure(2, [Matrix.unit(2, 0, 1)])
        assert a.dimension == 2
        assert a.contains(Matrix.identity(2))
        assert a.contains(Matrix.unit(2, 0, 1))

    def test_two_units_generate_everything(self):
        a = closure(2, [Matrix.unit(2, 0, 1), Matrix.unit(2, 1, 0)])
        assert a.dimension == 4

    def test_rotation_generator(self):
        # J with J^2 = -I generates a 2-dimensional commutative algebra
        j = Matrix([[0, -1], [1, 0]])
        a = closure(2, [j])
        assert a.dimension == 2
        assert schur_commutative_check(a)[0] is True

    def test_closure_is_idempotent(self):
        rng = random.Random(11)
        gens = [random_matrix(rng, 3) for _ in range(2)]
        a = closure(3, gens)
        again = closure(3, a.basis_matrices())
        assert again.space == a.space

    def test_closure_contains_products(self):
        rng = random.Random(5)
        x, y = random_matrix(rng, 3), random_matrix(rng, 3)
        a = closure(3, [x, y])
        assert a.contains(x * y * x)
        assert a.contains(y * y)

    def test_algebra_from_basis_rejects_open_span(self):
        # span{I, e_{0,1}, e_{1,0}} misses the diagonal products
        with pytest.raises(ValueError):
            algebra_from_basis(
                2, [Matrix.identity(2), Matrix.unit(2, 0, 1), Matrix.unit(2, 1, 0)]
            )

    def test_algebra_from_basis_requires_identity(self):
        with pytest.raises(ValueError):
            algebra_from_basis(2, [Matrix.unit(2, 0, 1)])

    def test_multiply_spaces(self):
        left = rref_basis([Matrix.unit(2, 0, 1).flatten()], 4)
        right = rref_basis([Matrix.unit(2, 1, 0).flatten()], 4)
        prod = multiply_spaces(left, right, 2)
        assert prod == rref_basis([Matrix.unit(2, 0, 0).flatten()], 4)


class TestConjugation:
    def test_swap_turns_upper_into_lower(self):
        swap = Matrix([[0, 1], [1, 0]])
        upper = upper_triangular_algebra(2)
        moved = conjugate(upper, swap)
        lower = algebra_from_basis(
            2, [Matrix.unit(2, 0, 0), Matrix.unit(2, 1, 1), Matrix.unit(2, 1, 0)]
        )
        assert moved.space == lower.space

    def test_conjugation_preserves_dimension(self):
        rng = random.Random(3)
        a = parabolic_subalgebra(Composition((2, 1)))
        c = random_invertible(rng, 3)
        assert conjugate(a, c).dimension == a.dimension

    def test_conjugate_space_roundtrip(self):
        rng = random.Random(4)
        a = upper_triangular_algebra(3)
        c = random_invertible(rng, 3)
        moved = conjugate_space(a.space, c)
        assert conjugate_space(moved, c.inverse()) == a.space


class TestRadical:
    def test_full_algebra_has_zero_radical(self):
        for n in (2, 3):
            assert radical(full_algebra(n)).dimension == 0

    def test_upper_triangular_radical_is_strict_part(self):
        r = radical(upper_triangular_algebra(2))
        assert r == rref_basis([Matrix.unit(2, 0, 1).flatten()], 4)

    def test_parabolic_radical_is_off_block_part(self):
        r = radical(parabolic_subalgebra(Composition((1, 2))))
        expected = rref_basis(
            [Matrix.unit(3, 0, 1).flatten(), Matrix.unit(3, 0, 2).flatten()], 9
        )
        assert r == expected

    def test_diagonal_is_semisimple(self):
        assert radical(diagonal_algebra(3)).dimension == 0

    def test_radical_is_conjugation_invariant(self):
        rng = random.Random(9)
        a = parabolic_subalgebra(Composition((1, 2)))
        c = random_invertible(rng, 3)
        moved = conjugate(a, c)
        assert radical(moved) == conjugate_space(radical(a), c)


class TestSemisimpleBlocks:
    def test_full_algebra_single_block(self):
        data = semisimple_blocks(full_algebra(3))
        assert data.split and data.block_sizes == (3,)
        assert data.radical_dim == 0 and data.semisimple_dim == 9

    def test_diagonal_blocks(self):
        assert semisimple_blocks(diagonal_algebra(3)).block_sizes == (1, 1, 1)

    def test_parabolic_blocks_match_type(self):
        data = semisimple_blocks(parabolic_subalgebra(Composition((1, 2))))
        assert data.block_sizes == (1, 2)
        assert data.radical_dim == 2

    def test_upper_triangular_blocks(self):
        data = semisimple_blocks(upper_triangular_algebra(2))
        assert data.block_sizes == (1, 1)
        assert data.radical_dim == 1

    def test_wedderburn_dimension_identity(self):
        for comp in compositions(4):
            a = parabolic_subalgebra(comp)
            data = semisimple_blocks(a)
            assert data.radical_dim + sum(s * s for s in data.block_sizes) == a.dimension

    def test_rotation_algebra_does_not_split(self):
        data = semisimple_blocks(closure(2, [Matrix([[0, -1], [1, 0]])]))
        assert data.split is False
        assert data.block_sizes is None
        assert data.semisimple_dim == 2

    def test_blocks_are_conjugation_invariant(self):
        rng = random.Random(21)
        a = parabolic_subalgebra(Composition((2, 1, 1)))
        c = random_invertible(rng, 4)
        assert semisimple_blocks(conjugate(a, c)).block_sizes == (1, 1, 2)


class TestFlags:
    def test_full_algebra_flag_is_trivial(self):
        f = invariant_flag(full_algebra(3))
        assert f.dims == (3,)

    def test_upper_triangular_full_flag(self):
        f = invariant_flag(upper_triangular_algebra(3))
        assert f.dims == (1, 2, 3)
        # the chain consists of the coordinate subspaces
        assert f.subspaces[0] == rref_basis([(1, 0, 0)], 3)
        assert f.subspaces[1] == rref_basis([(1, 0, 0), (0, 1, 0)], 3)

    def test_parabolic_flag_matches_type(self):
        f = invariant_flag(parabolic_subalgebra(Composition((1, 2))))
        assert f.dims == (1, 3)

    def test_flag_members_are_invariant(self):
        a = parabolic_subalgebra(Composition((2, 2)))
        f = invariant_flag(a)
        for member in f.subspaces:
            for b in a.basis_matrices():
                for v in member.basis:
                    image = tuple(
                        sum(b[i, j] * v[j] for j in range(4)) for i in range(4)
                    )
                    assert subspace_contains(member, image)

    def test_stabilizer_of_parabolic_flag(self):
        a = parabolic_subalgebra(Composition((1, 2)))
        stab = flag_stabilizer(invariant_flag(a))
        assert stab.space == a.space

    def test_stabilizer_of_diagonal_flag_is_larger(self):
        # the diagonal algebra stabilizes only its invariant flag's chain;
        # the stabilizer of that chain is the bigger block algebra
        a = diagonal_algebra(2)
        stab = flag_stabilizer(invariant_flag(a))
        assert stab.dimension > a.dimension


class TestParabolicRecognition:
    def test_standard_parabolic_recognized_with_identity_witness(self):
        a = parabolic_subalgebra(Composition((1, 2)))
        ok, comp, witness = is_parabolic(a)
        assert ok and comp == Composition((1, 2))
        assert witness == Matrix.identity(3)

    def test_full_algebra_is_the_one_block_type(self):
        ok, comp, _ = is_parabolic(full_algebra(3))
        assert ok and comp == Composition((3,))

    def test_borel_is_finest_type(self):
        ok, comp, _ = is_parabolic(upper_triangular_algebra(4))
        assert ok and comp == Composition((1, 1, 1, 1))

    def test_diagonal_is_not_parabolic(self):
        ok, comp, witness = is_parabolic(diagonal_algebra(3))
        assert not ok and comp is None and witness is None

    def test_lower_triangular_is_conjugate_parabolic(self):
        lower = algebra_from_basis(
            2, [Matrix.unit(2, 0, 0), Matrix.unit(2, 1, 1), Matrix.unit(2, 1, 0)]
        )
        ok, comp, witness = is_parabolic(lower)
        assert ok and comp == Composition((1, 1))
        assert conjugate(lower, witness).space == upper_triangular_algebra(2).space

    @pytest.mark.parametrize("parts", [(1, 2), (2, 1), (1, 1, 1), (3,)])
    def test_random_conjugates_recognized(self, parts):
        comp = Composition(parts)
        standard = parabolic_subalgebra(comp)
        rng = random.Random(hash(parts) & 0xFFFF)
        for _ in range(3):
            c = random_invertible(rng, comp.n)
            moved = conjugate(standard, c)
            ok, found, witness = is_parabolic(moved)
            assert ok and found == comp
            assert conjugate(moved, witness).space == standard.space

    def test_proper_nonparabolic_subalgebra(self):
        # commutative span{I, e_{0,1}} has a 1-dim invariant flag step but
        # is far smaller than the stabilizer
        a = algebra_from_basis(2, [Matrix.identity(2), Matrix.unit(2, 0, 1)])
        assert is_parabolic(a)[0] is False


class TestMaximalityAndOptimal:
    def test_absorbing_outside_element_reaches_full(self):
        a = parabolic_subalgebra(Composition((1, 2)))
        probe = absorption_probe(a, Matrix.unit(3, 1, 0))
        assert probe.dimension == 9

    def test_absorbing_inside_element_changes_nothing(self):
        a = parabolic_subalgebra(Composition((1, 2)))
        probe = absorption_probe(a, Matrix.unit(3, 0, 1))
        assert probe.space == a.space

    def test_absorption_random_probes(self):
        rng = random.Random(17)
        for n, parts in ((3, (1, 2)), (4, (2, 2))):
            a = parabolic_subalgebra(Composition(parts))
            for _ in range(10):
                x = random_matrix(rng, n)
                while a.contains(x):
                    x = random_matrix(rng, n)
                assert absorption_probe(a, x).dimension == n * n

    def test_optimal_composition_small_cases(self):
        argmax, best = optimal_composition(2)
        assert best == 3 and {c.parts for c in argmax} == {(1, 1)}
        argmax, best = optimal_composition(3)
        assert best == 7 and {c.parts for c in argmax} == {(1, 2), (2, 1)}

    def test_optimal_composition_matches_brute_force(self):
        for n in range(2, 9):
            argmax, best = optimal_composition(n)
            dims = {
                comp: parabolic_dimension(comp) for comp in compositions(n, min_parts=2)
            }
            brute_best = max(dims.values())
            assert best == brute_best == n * n - n + 1
            assert {c for c, d in dims.items() if d == brute_best} == argmax

    def test_optimal_composition_rejects_tiny_n(self):
        with pytest.raises(ValueError):
            optimal_composition(1)


class TestSchur:
    def test_diagonal_bound(self):
        commutative, bound_ok = schur_commutative_check(diagonal_algebra(3))
        assert commutative and bound_ok
        # diagonal hits the bound only at n <= 3: floor(9/4)+1 = 3

    def test_noncommutative_reports_none(self):
        commutative, bound_ok = schur_commutative_check(upper_triangular_algebra(2))
        assert not commutative and bound_ok is None

    def test_extremal_commutative_at_n4(self):
        mats = [Matrix.identity(4)] + [
            Matrix.unit(4, i, j) for i in (0, 1) for j in (2, 3)
        ]
        a = algebra_from_basis(4, mats)
        commutative, bound_ok = schur_commutative_check(a)
        assert commutative and bound_ok
        assert a.dimension == 4 * 4 // 4 + 1


@st.composite
def compositions_strategy(draw):
    n = draw(st.integers(min_value=1, max_value=6))
    parts = []
    left = n
    while left:
        p = draw(st.integers(min_value=1, max_value=left))
        parts.append(p)
        left -= p
    return Composition(tuple(parts))


class TestParabolicProperties:
    @given(compositions_strategy())
    @settings(max_examples=40, deadline=None)
    def test_dimension_matches_formula(self, comp):
        assert parabolic_subalgebra(comp).dimension == parabolic_dimension(comp)

    @given(compositions_strategy())
    @settings(max_examples=20, deadline=None)
    def test_block_pattern_is_closed(self, comp):
        a = parabolic_subalgebra(comp)
        mats = a.basis_matrices()
        for x in mats[:6]:
            for y in mats[:6]:
                assert a.contains(x * y)
