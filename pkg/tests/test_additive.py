import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rittlab.additive import (SkewPoly, all_complete_skew_factorizations,
                              from_additive, is_irreducible, is_right_factor,
                              monic_right_factors, right_divide, skew_mul,
                              to_additive, verify_ore_invariance)
from rittlab.errors import CapExceeded, NotAdditive
from rittlab.fields import GF, GF2, GF4
from rittlab.polyfield import Poly, compose


def sp(field, *coeffs):
    return SkewPoly.make(field, list(coeffs))


skew_f4 = st.lists(st.integers(0, 3), min_size=0, max_size=4).map(
    lambda cs: SkewPoly.make(GF4, [GF4.from_int(c) for c in cs]))


class TestSkewRing:
    def test_twist_rule_f2(self):
        # tau * (tau + 1) = tau^2 + tau over F2
        assert skew_mul(sp(GF2, 0, 1), sp(GF2, 1, 1)) == sp(GF2, 0, 1, 1)

    def test_twist_rule_f4(self):
        w = GF4.from_int(2)
        tau = sp(GF4, GF4.zero, GF4.one)
        const = SkewPoly.make(GF4, [w])
        assert skew_mul(tau, const) == SkewPoly.make(GF4, [GF4.zero, w * w])
        assert skew_mul(const, tau) == SkewPoly.make(GF4, [GF4.zero, w])
        assert skew_mul(tau, const) != skew_mul(const, tau)

    def test_identity(self):
        u = sp(GF2, 1, 0, 1)
        assert skew_mul(u, sp(GF2, 1)) == u
        assert skew_mul(sp(GF2, 1), u) == u

    @given(skew_f4, skew_f4, skew_f4)
    @settings(max_examples=40)
    def test_associative(self, a, b, c):
        assert skew_mul(skew_mul(a, b), c) == skew_mul(a, skew_mul(b, c))

    @given(skew_f4, skew_f4, skew_f4)
    @settings(max_examples=40)
    def test_left_distributive(self, a, b, c):
        assert skew_mul(a, b + c) == skew_mul(a, b) + skew_mul(a, c)


class TestAdditiveCorrespondence:
    def test_to_additive(self):
        assert to_additive(sp(GF2, 0, 1, 1)) == Poly.from_terms(GF2, {4: 1, 2: 1})

    def test_round_trip(self):
        f = sp(GF4, GF4.from_int(3), GF4.from_int(2), GF4.one)
        assert from_additive(to_additive(f)) == f

    def test_from_additive_rejects_bad_exponent(self):
        with pytest.raises(NotAdditive):
            from_additive(Poly.from_terms(GF2, {3: 1, 1: 1}))

    def test_degree_compatibility(self):
        for coeffs in ([1, 1], [0, 1, 1], [1, 0, 0, 1]):
            f = sp(GF2, *coeffs)
            assert to_additive(f).degree == 2 ** f.tau_degree

    @given(skew_f4, skew_f4)
    @settings(max_examples=30)
    def test_mul_is_composition(self, u, v):
        if u.is_zero() or v.is_zero():
            return
        assert to_additive(skew_mul(u, v)) == compose(to_additive(u),
                                                      to_additive(v))


class TestRightDivide:
    def test_spec_examples(self):
        f = sp(GF2, 0, 1, 1)
        q, r = right_divide(f, sp(GF2, 0, 1))
        assert q == sp(GF2, 1, 1) and r.is_zero()
        q, r = right_divide(f, sp(GF2, 1, 1))
        assert q == sp(GF2, 0, 1) and r.is_zero()
        _, r = right_divide(sp(GF2, 0, 0, 1), sp(GF2, 1, 1))
        assert not r.is_zero()

    @given(skew_f4, skew_f4)
    @settings(max_examples=40)
    def test_division_identity(self, f, d):
        if d.is_zero():
            return
        q, r = right_divide(f, d)
        assert skew_mul(q, d) + r == f
        assert r.is_zero() or r.tau_degree < d.tau_degree

    def test_uniqueness(self):
        f, d = sp(GF2, 1, 1, 0, 1), sp(GF2, 1, 0, 1)
        q, r = right_divide(f, d)
        for q2coeffs in itertools.product(range(2), repeat=2):
            q2 = sp(GF2, *q2coeffs)
            r2 = f - skew_mul(q2, d)
            if (r2.is_zero() or r2.tau_degree < d.tau_degree) and q2 != q:
                pytest.fail("non-unique right division")


class TestFactorizations:
    def test_tau2_plus_tau(self):
        facts = all_complete_skew_factorizations(sp(GF2, 0, 1, 1))
        assert len(facts) == 2
        as_sets = {tuple(d.terms_string() for d in seq) for seq in facts}
        assert as_sets == {("1:1", "1:1 0:1"), ("1:1 0:1", "1:1")}

    def test_tau2_plus_tau_plus_1_irreducible(self):
        f = sp(GF2, 1, 1, 1)
        assert is_irreducible(f)
        facts = all_complete_skew_factorizations(f)
        assert facts == ((f,),)

    def test_tau_squared(self):
        facts = all_complete_skew_factorizations(sp(GF2, 0, 0, 1))
        assert facts == (((sp(GF2, 0, 1)), sp(GF2, 0, 1)),)

    def test_products_reconstruct(self):
        for f in (sp(GF2, 0, 1, 1), sp(GF2, 0, 0, 1), sp(GF2, 1, 0, 1),
                  sp(GF4, GF4.zero, GF4.from_int(2), GF4.one)):
            for seq in all_complete_skew_factorizations(f):
                prod = seq[0]
                for d in seq[1:]:
                    prod = skew_mul(prod, d)
                assert prod == f.monic()

    def test_monic_right_factors_divide(self):
        f = sp(GF4, GF4.zero, GF4.from_int(2), GF4.one)
        for e in (1,):
            for d in monic_right_factors(f, e):
                assert is_right_factor(f, d)

    def test_cap_enforced(self):
        with pytest.raises(CapExceeded):
            all_complete_skew_factorizations(sp(GF2, *([1] * 8)))


class TestOreInvariance:
    def test_spec_cases(self):
        rep = verify_ore_invariance(sp(GF2, 0, 1, 1))
        assert rep.n_factorizations == 2
        assert rep.length == 2 and rep.tau_degree_multiset == (1, 1)
        # the general search found right factors and they were all additive
        assert rep.general_right_factor_degrees == (2, 2)

        rep = verify_ore_invariance(sp(GF2, 1, 1, 1))
        assert rep.n_factorizations == 1
        assert rep.general_right_factor_degrees == ()

    def test_f4_example(self):
        rep = verify_ore_invariance(
            sp(GF4, GF4.zero, GF4.from_int(2), GF4.one))
        assert rep.n_factorizations == 2
        assert rep.tau_degree_multiset == (1, 1)

    def test_general_oracle_finds_nothing_for_irreducible(self):
        # X^4 + X^2 + X has no degree-2 right factor at all
        from rittlab.polyfield import brute_force_right_factors

        A = to_additive(sp(GF2, 1, 1, 1))
        assert A == Poly.from_terms(GF2, {4: 1, 2: 1, 1: 1})
        assert brute_force_right_factors(A, 2) == []

    @pytest.mark.parametrize("field", [GF2, GF4], ids=["F2", "F4"])
    def test_exhaustive_sweep_tau_degree_up_to_3(self, field):
        count = 0
        for deg in (1, 2, 3):
            for coeffs in itertools.product(range(field.order),
                                            repeat=deg + 1):
                if coeffs[-1] == 0:
                    continue
                f = SkewPoly.make(field, [field.from_int(c) for c in coeffs])
                rep = verify_ore_invariance(f)
                assert rep.n_factorizations >= 1
                count += 1
        assert count == sum((field.order - 1) * field.order ** d
                            for d in (1, 2, 3))
