import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from schurhopf.errors import (
    SingularDenominatorError,
    StableRangeError,
    UnsupportedGroupError,
)
from schurhopf.evaluate import (
    EigenvalueSpec,
    GaussianRational,
    coerce_value,
    eval_character,
    eval_schur_bialternant,
    eval_schur_tableaux,
    verify_cauchy,
)
from schurhopf.partition import Partition, partitions_up_to

P = Partition
F = Fraction
i = GaussianRational(0, 1)


class TestGaussianRational:
    def test_arithmetic(self):
        a = GaussianRational(F(1, 2), F(3))
        b = GaussianRational(F(2), F(-1))
        assert a + b == GaussianRational(F(5, 2), F(2))
        assert a - b == GaussianRational(F(-3, 2), F(4))
        assert a * b == GaussianRational(F(4), F(11, 2))
        assert (a / b) * b == a

    def test_division_uses_conjugate(self):
        one_plus = GaussianRational(1, 1)
        one_minus = GaussianRational(1, -1)
        assert one_plus / one_minus == i

    def test_pow(self):
        assert i ** 2 == GaussianRational(-1, 0)
        assert i ** 3 == GaussianRational(0, -1)
        assert i ** 0 == GaussianRational(1, 0)
        z = GaussianRational(F(1, 2), F(1, 3))
        assert z ** 5 == z * z * z * z * z

    def test_mixed_with_fraction(self):
        z = GaussianRational(1, 2)
        assert z + F(1, 2) == GaussianRational(F(3, 2), 2)
        assert F(2) * z == GaussianRational(2, 4)
        assert 1 - z == GaussianRational(0, -2)

    def test_hash_matches_fraction_when_real(self):
        assert hash(GaussianRational(F(3, 4), 0)) == hash(F(3, 4))
        assert GaussianRational(F(3, 4), 0) == F(3, 4)
        assert {GaussianRational(2, 0), F(2)} == {F(2)}

    def test_bool_and_conjugate(self):
        assert not GaussianRational(0, 0)
        assert GaussianRational(0, 1)
        assert i.conjugate() == -i

    def test_rejects_float(self):
        with pytest.raises(TypeError):
            GaussianRational(0.5, 0)


def test_coerce_value():
    assert coerce_value(3) == F(3)
    assert coerce_value(F(1, 3)) == F(1, 3)
    assert coerce_value(i) is i
    with pytest.raises(TypeError):
        coerce_value(0.5)
    with pytest.raises(TypeError):
        coerce_value(True)
    with pytest.raises(TypeError):
        coerce_value(1 + 2j)


class TestEigenvalueSpec:
    def test_parse_and_counts(self):
        spec = EigenvalueSpec("GL(3)", [1, 2, 3])
        assert spec.group_name == "GL(3)"
        assert spec.rank == 3
        assert spec.character_basis.value == "GL"
        assert spec.eigenvalues() == (F(1), F(2), F(3))

    def test_case_insensitive(self):
        assert EigenvalueSpec("gl(2)", [1, 2]).group_name == "GL(2)"
        assert EigenvalueSpec("sp(4)", [1, 2]).group_name == "Sp(4)"

    def test_sl_constraint(self):
        spec = EigenvalueSpec("SL(2)", [2, F(1, 2)])
        assert spec.eigenvalues() == (F(2), F(1, 2))
        with pytest.raises(ValueError):
            EigenvalueSpec("SL(2)", [2, 3])

    def test_sp_even(self):
        spec = EigenvalueSpec("Sp(4)", [2, 3])
        assert spec.rank == 2
        assert spec.character_basis.value == "Sp"
        assert spec.eigenvalues() == (F(2), F(3), F(1, 2), F(1, 3))

    def test_so_odd(self):
        spec = EigenvalueSpec("SO(5)", [2, 3])
        assert spec.eigenvalues() == (F(2), F(3), F(1, 2), F(1, 3), F(1))
        assert spec.rank == 2
        assert spec.character_basis.value == "O"

    def test_so_even(self):
        spec = EigenvalueSpec("SO(4)", [2, 3])
        assert spec.eigenvalues() == (F(2), F(3), F(1, 2), F(1, 3))

    def test_o_minus_odd(self):
        spec = EigenvalueSpec("O-(5)", [2, 3])
        assert spec.eigenvalues() == (F(2), F(3), F(1, 2), F(1, 3), F(-1))

    def test_o_minus_even(self):
        spec = EigenvalueSpec("O-(4)", [2])
        assert spec.eigenvalues() == (F(2), F(1, 2), F(1), F(-1))

    def test_sp_odd_values(self):
        spec = EigenvalueSpec("Sp(5)", [2, 3, 4])
        assert spec.eigenvalues() == (F(2), F(3), F(1, 2), F(1, 3), F(4))
        assert spec.rank == 2

    def test_wrong_count(self):
        with pytest.raises(ValueError):
            EigenvalueSpec("GL(3)", [1, 2])
        with pytest.raises(ValueError):
            EigenvalueSpec("SO(5)", [1, 2, 3])

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            EigenvalueSpec("GL(2)", [0, 1])

    def test_unknown_group(self):
        with pytest.raises(UnsupportedGroupError):
            EigenvalueSpec("SU(2)", [1])
        with pytest.raises(UnsupportedGroupError):
            EigenvalueSpec("GL", [1])


class TestSchurEvaluation:
    def test_known_values(self):
        assert eval_schur_tableaux(P((2, 1)), [1, 1, 1]) == 8
        assert eval_schur_tableaux(P((2,)), [F(1, 2), 2]) == F(21, 4)
        assert eval_schur_tableaux(P((1, 1)), [3, 4]) == 12
        assert eval_schur_tableaux(P(()), [5]) == 1

    def test_too_few_variables(self):
        assert eval_schur_tableaux(P((1, 1, 1)), [1, 2]) == 0
        assert eval_schur_bialternant(P((1, 1, 1)), [1, 2]) == 0

    def test_bialternant_known(self):
        # e1*e2 - e3 at (1, 2, 3): 6*11 - 6
        assert eval_schur_bialternant(P((2, 1)), [1, 2, 3]) == 60
        assert eval_schur_bialternant(P((2, 1)), [2, 3, 5]) == eval_schur_tableaux(
            P((2, 1)), [2, 3, 5]
        )

    def test_bialternant_repeated_point_rejected(self):
        with pytest.raises(SingularDenominatorError):
            eval_schur_bialternant(P((2,)), [2, 2])

    def test_methods_agree_random_points(self):
        rng = random.Random(20260814)
        shapes = [p for p in partitions_up_to(6)]
        for _ in range(100):
            lam = rng.choice(shapes)
            n = rng.randint(1, 4)
            xs = rng.sample(range(-30, 31), n)
            while 0 in xs:
                xs = rng.sample(range(-30, 31), n)
            assert eval_schur_tableaux(lam, xs) == eval_schur_bialternant(lam, xs)

    def test_rational_and_gaussian_points(self):
        xs = [F(1, 2), F(-2, 3), 3]
        assert eval_schur_tableaux(P((2, 1)), xs) == eval_schur_bialternant(P((2, 1)), xs)
        zs = [i, GaussianRational(1, 1)]
        assert eval_schur_tableaux(P((2,)), zs) == eval_schur_bialternant(P((2,)), zs)

    @given(
        st.lists(
            st.fractions(min_value=-4, max_value=4).filter(bool),
            min_size=1,
            max_size=4,
        ),
        st.permutations(range(4)),
    )
    @settings(max_examples=40, deadline=None)
    def test_symmetry_under_permutation(self, xs, perm):
        lam = P((2, 1))
        shuffled = [xs[j] for j in perm if j < len(xs)]
        assert eval_schur_tableaux(lam, shuffled) == eval_schur_tableaux(lam, xs)

    def test_stability_append_zero_keeps_value(self):
        # appending a zero variable changes nothing since columns cap at n
        lam = P((3, 1))
        xs = [2, F(1, 3)]
        with_zero = eval_schur_tableaux(lam, xs + [0])
        assert with_zero == eval_schur_tableaux(lam, xs)

    def test_multiplicativity_against_expansion(self):
        from schurhopf.lr import lr_expand_product

        xs = [2, 3, F(1, 2)]
        a, b = P((2, 1)), P((2,))
        prod = lr_expand_product(a, b)
        direct = eval_schur_tableaux(a, xs) * eval_schur_tableaux(b, xs)
        expanded = sum(c * eval_schur_tableaux(p, xs) for p, c in prod.items())
        assert direct == expanded


class TestEvalCharacter:
    def test_gl_example(self):
        spec = EigenvalueSpec("GL(2)", [F(1, 2), 2])
        assert eval_character(P((2,)), spec) == F(21, 4)

    def test_sp2_su2_dimension(self):
        spec = EigenvalueSpec("Sp(2)", [1])
        assert eval_character(P((3,)), spec) == 4

    def test_sp2_values(self):
        spec = EigenvalueSpec("Sp(2)", [F(3, 2)])
        assert eval_character(P((1,)), spec) == F(13, 6)
        # <2> converts to {2} alone since (2)/(1,1) vanishes
        assert eval_character(P((2,)), spec) == F(133, 36)

    def test_so5_values(self):
        spec = EigenvalueSpec("SO(5)", [2, 3])
        assert eval_character(P((1,)), spec) == F(41, 6)
        assert eval_character(P((1, 1)), spec) == F(97, 6)

    def test_o_minus_values(self):
        spec = EigenvalueSpec("O-(5)", [2, 3])
        assert eval_character(P((1,)), spec) == F(29, 6)
        assert eval_character(P((1, 1)), spec) == F(9, 2)

    def test_o_minus_even_vanishing(self):
        spec = EigenvalueSpec("O-(4)", [2])
        assert eval_character(P((1, 1)), spec) == 0

    def test_so3_at_i(self):
        spec = EigenvalueSpec("SO(3)", [i])
        assert eval_character(P((1,)), spec) == 1

    def test_so_odd_dimensions(self):
        spec = EigenvalueSpec("SO(7)", [1, 1, 1])
        assert eval_character(P((1,)), spec) == 7
        assert eval_character(P((1, 1)), spec) == 21
        assert eval_character(P((2,)), spec) == 27

    def test_sp_dimensions(self):
        spec = EigenvalueSpec("Sp(6)", [1, 1, 1])
        assert eval_character(P((1,)), spec) == 6
        assert eval_character(P((1, 1)), spec) == 14
        assert eval_character(P((2,)), spec) == 21

    def test_odd_symplectic_rejected(self):
        spec = EigenvalueSpec("Sp(5)", [2, 3, 4])
        with pytest.raises(UnsupportedGroupError):
            eval_character(P((1,)), spec)

    def test_stable_range_guard(self):
        spec = EigenvalueSpec("SO(5)", [2, 3])
        with pytest.raises(StableRangeError):
            eval_character(P((1, 1, 1)), spec)
        spec = EigenvalueSpec("Sp(4)", [2, 3])
        with pytest.raises(StableRangeError):
            eval_character(P((1, 1, 1)), spec)

    def test_gl_has_no_stable_range_guard(self):
        spec = EigenvalueSpec("GL(2)", [2, 3])
        assert eval_character(P((1, 1, 1)), spec) == 0


def test_verify_cauchy():
    assert verify_cauchy(1, 1, 4)
    assert verify_cauchy(2, 2, 4)
    assert verify_cauchy(3, 2, 4)
    assert verify_cauchy(0, 2, 3)
