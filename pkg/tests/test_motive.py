from itertools import product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modulimotives import (
    BiPoly,
    GenusMismatch,
    IntPoly,
    MotiveClass,
    from_tate_poly,
    jacobian,
    projective_space,
    sym_curve,
    sym_h1,
    sym_h1_hodge_poly,
    tate,
    unit,
    zero,
)


def L(*coeffs: int) -> IntPoly:
    return IntPoly(coeffs)


class TestSymH1Reduction:
    @pytest.mark.parametrize("g", range(1, 7))
    def test_identity_at_g(self, g):
        assert sym_h1(g, g) == MotiveClass(g, {(g,): IntPoly.one()})

    @pytest.mark.parametrize("g", range(1, 7))
    def test_top_index_is_tate(self, g):
        assert sym_h1(g, 2 * g) == tate(g, g)

    @pytest.mark.parametrize("g", range(1, 7))
    def test_vanishing_above_two_g(self, g):
        assert sym_h1(g, 2 * g + 1).is_zero()
        assert sym_h1(g, 3 * g + 2).is_zero()

    def test_reflection(self):
        # S_b -> S_(2g-b) * L^(b-g) for g < b <= 2g
        assert sym_h1(3, 4) == MotiveClass(3, {(2,): L(0, 1)})
        assert sym_h1(3, 5) == MotiveClass(3, {(1,): L(0, 0, 1)})

    def test_index_zero_is_unit(self):
        assert sym_h1(4, 0) == unit(4)


class TestSymCurve:
    def test_zeroth_power(self):
        assert sym_curve(3, 0) == unit(3)

    @pytest.mark.parametrize("g", range(1, 5))
    def test_curve_itself(self, g):
        assert sym_curve(g, 1) == MotiveClass(
            g, {(): L(1, 1), (1,): IntPoly.one()}
        )

    def test_third_power_genus_two_against_composition_oracle(self):
        # enumerate a+b+c=3, reduce indices above g by hand
        g, j = 2, 3
        expected = zero(g)
        for a, b, c in product(range(j + 1), repeat=3):
            if a + b + c == j:
                expected = expected + sym_h1(g, b) * IntPoly.monomial(c)
        assert expected == MotiveClass(
            g, {(): L(1, 1, 1, 1), (1,): L(1, 2, 1), (2,): L(1, 1)}
        )
        assert sym_curve(g, j) == expected

    def test_third_power_genus_two_is_line_bundle_over_jacobian(self):
        # C^(3) at g=2 is a projective-line bundle over the Jacobian
        assert sym_curve(2, 3) == jacobian(2) * projective_space(2, 1)


class TestJacobian:
    def test_genus_one(self):
        assert jacobian(1) == MotiveClass(1, {(): L(1, 1), (1,): IntPoly.one()})

    def test_genus_two(self):
        assert jacobian(2) == MotiveClass(
            2, {(): L(1, 0, 1), (1,): L(1, 1), (2,): IntPoly.one()}
        )

    @pytest.mark.parametrize("g", range(1, 5))
    def test_total_betti_number(self, g):
        assert jacobian(g).hodge_realization().evaluate(1, 1) == 2 ** (2 * g)

    @pytest.mark.parametrize("g", range(1, 5))
    def test_poincare_polynomial(self, g):
        assert jacobian(g).poincare_polynomial() == IntPoly(
            [comb(2 * g, k) for k in range(2 * g + 1)]
        )


class TestProjectiveSpace:
    def test_examples(self):
        assert projective_space(2, 0) == unit(2)
        assert projective_space(2, 2) == from_tate_poly(2, L(1, 1, 1))
        # dimension e+g-2 with e=3, g=2
        assert projective_space(2, 3) == from_tate_poly(2, L(1, 1, 1, 1))

    @pytest.mark.parametrize("n", range(4))
    def test_poincare_polynomial(self, n):
        expected = [0] * (2 * n + 1)
        expected[0::2] = [1] * (n + 1)
        assert projective_space(2, n).poincare_polynomial() == IntPoly(expected)

    def test_rejects_negative_dimension(self):
        with pytest.raises(ValueError):
            projective_space(2, -1)


class TestRingOperations:
    def test_tate_twist_of_unit(self):
        assert unit(2).tate_twist(3) == tate(2, 3)
        assert tate(2, 2) * tate(2, 5) == tate(2, 7)

    def test_multiply_generator_by_tate_poly(self):
        assert sym_h1(2, 1) * L(1, 1) == MotiveClass(2, {(1,): L(1, 1)})

    def test_jacobian_square_monomials(self):
        square = jacobian(2) * jacobian(2)
        assert square.monomials() == [(), (1,), (1, 1), (1, 2), (2,), (2, 2)]

    def test_genus_mismatch_raises(self):
        with pytest.raises(GenusMismatch):
            jacobian(2) + jacobian(3)
        with pytest.raises(GenusMismatch):
            jacobian(2) * unit(3)

    def test_subtraction_and_effectivity(self):
        diff = jacobian(2) - unit(2)
        assert diff.is_effective()
        assert not (unit(2) - jacobian(2)).is_effective()
        assert (jacobian(2) - jacobian(2)).is_zero()


class TestHodgeRealization:
    def test_weight_one_part_genus_two(self):
        assert sym_h1(2, 1).hodge_realization() == BiPoly({(1, 0): 2, (0, 1): 2})

    def test_second_symmetric_power_genus_two_binomials(self):
        expected = BiPoly({(p, 2 - p): comb(2, p) * comb(2, 2 - p) for p in range(3)})
        assert expected == BiPoly({(2, 0): 1, (1, 1): 4, (0, 2): 1})
        assert sym_h1(2, 2).hodge_realization() == expected

    @pytest.mark.parametrize("g", range(1, 9))
    def test_realization_commutes_with_reduction(self, g):
        # the closed Hodge formula, extended beyond index g, agrees with the
        # realization of the reduced class
        for b in range(0, 2 * g + 3):
            assert sym_h1_hodge_poly(g, b) == sym_h1(g, b).hodge_realization()

    def test_tate_class_realizes_on_diagonal(self):
        assert tate(3, 4).hodge_realization() == BiPoly({(4, 4): 1})


def _classes_strategy(g):
    monos = st.lists(st.integers(1, g), min_size=0, max_size=2).map(
        lambda ix: tuple(sorted(ix))
    )
    polys = st.lists(st.integers(-4, 4), max_size=5).map(IntPoly)
    return st.dictionaries(monos, polys, max_size=3).map(
        lambda terms: MotiveClass(g, terms)
    )


genus_and_classes = st.integers(2, 4).flatmap(
    lambda g: st.tuples(st.just(g), _classes_strategy(g), _classes_strategy(g))
)


class TestRingProperties:
    @given(genus_and_classes)
    def test_hodge_realization_is_ring_homomorphism(self, data):
        _, a, b = data
        assert (a * b).hodge_realization() == a.hodge_realization() * b.hodge_realization()
        assert (a + b).hodge_realization() == a.hodge_realization() + b.hodge_realization()

    @given(genus_and_classes)
    def test_ring_laws(self, data):
        _, a, b = data
        assert a * b == b * a
        assert a + b == b + a

    @given(st.integers(2, 4), st.lists(st.integers(0, 12), min_size=1, max_size=3))
    def test_normal_form_is_idempotent(self, g, raw_indices):
        # build a class from raw indices up to 3g, then push its stored
        # monomials through the reduction again: nothing may change
        built = unit(g)
        for b in raw_indices:
            built = built * sym_h1(g, b)
        rebuilt = zero(g)
        for mono, poly in built.items():
            term = from_tate_poly(g, poly)
            for b in mono:
                term = term * sym_h1(g, b)
            rebuilt = rebuilt + term
        assert rebuilt == built


class TestSymmetricPowerReduction:
    @pytest.mark.parametrize("g", range(2, 6))
    def test_identity_in_normal_form(self, g):
        # for g <= j <= 2g-2 the j-th symmetric power splits off a Jacobian
        # times projective-space part, dual to the (2g-2-j)-th power
        for j in range(g, 2 * g - 1):
            assert sym_curve(g, j) == sym_curve(g, 2 * g - 2 - j).tate_twist(
                j + 1 - g
            ) + jacobian(g) * projective_space(g, j - g)


class TestSerialization:
    def test_canonical_order_and_round_trip(self):
        cls = jacobian(2) * sym_curve(2, 2)
        data = cls.to_json_dict()
        monos = [tuple(entry["mono"]) for entry in data["terms"]]
        assert monos == sorted(monos)
        assert MotiveClass.from_json_dict(data) == cls

    def test_zero_class(self):
        assert zero(3).to_json_dict() == {"genus": 3, "terms": []}
        assert MotiveClass.from_json_dict({"genus": 3, "terms": []}) == zero(3)
