import pytest

from rittlab.errors import (BadPrime, DegenerateResult,
                            NotAPolynomialComposite)
from rittlab.fields import GF, QQ
from rittlab.polyfield import Poly, power, x_poly
from rittlab.ratfunc import (INF, MobiusMap, RationalFunction, aut_search,
                             compose, mobius_apply,
                             normalize_poly_decomposition, divisibility_counterexample)

F7 = GF(7)


def rf(field, num_terms, den_terms):
    return RationalFunction.make(Poly.from_terms(field, num_terms),
                                 Poly.from_terms(field, den_terms))


class TestRationalFunction:
    def test_reduction_and_monic_denominator(self):
        f = rf(QQ, {3: 2, 2: 2}, {2: 4})  # (ents 2X^3+2X^2) / 4X^2
        assert f.num == Poly.from_terms(QQ, {1: "1/2", 0: "1/2"})
        assert f.den == Poly.make(QQ, [1])

    def test_compose_spec_example(self):
        f = rf(QQ, {2: 1, 0: 1}, {1: 1})    # X + 1/X
        g = RationalFunction.from_poly(power(QQ, 3))
        fg = compose(f, g)
        assert fg == rf(QQ, {6: 1, 0: 1}, {3: 1})

    def test_compose_identity(self):
        f = rf(QQ, {4: 1, 1: -2}, {2: 1, 0: 1})
        assert compose(f, RationalFunction.from_poly(x_poly(QQ))) == f

    def test_degenerate_composition(self):
        # composing X with a constant collapses
        const = RationalFunction.from_poly(Poly.make(QQ, [5]))
        with pytest.raises(DegenerateResult):
            compose(rf(QQ, {2: 1}, {0: 1}), const)

    def test_evaluation_with_infinity(self):
        f = rf(F7, {2: 1, 0: 1}, {1: 1})    # X + 1/X
        assert f(INF) is INF
        assert f(F7.coerce(0)) is INF
        assert f(F7.coerce(2)) == F7.coerce(2) + F7.coerce(2).inverse()


class TestMobius:
    def test_apply_inverse_of_x(self):
        inv = MobiusMap.make(F7, 0, 1, 1, 0)  # 1/X
        assert inv(F7.coerce(0)) is INF
        assert mobius_apply(inv, INF) == F7.coerce(0)
        assert inv(F7.coerce(2)) == F7.coerce(4)

    def test_group_laws(self):
        a = MobiusMap.make(F7, 2, 1, 0, 1)
        b = MobiusMap.make(F7, 0, 1, 1, 3)
        ident = MobiusMap.identity(F7)
        assert a * a.inverse() == ident
        assert (a * b).inverse() == b.inverse() * a.inverse()
        pt = F7.coerce(5)
        assert (a * b)(pt) == a(b(pt))

    def test_canonical_scaling(self):
        assert MobiusMap.make(F7, 2, 4, 0, 2) == MobiusMap.make(F7, 1, 2, 0, 1)

    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            MobiusMap.make(F7, 1, 2, 2, 4)


class TestAutSearch:
    def test_x_plus_inverse(self):
        auts = aut_search(rf(F7, {2: 1, 0: 1}, {1: 1}))
        assert len(auts) == 2
        kinds = {m.pretty() for m in auts}
        assert kinds == {"X", "(1) / (X)"}

    def test_x3_minus_3x(self):
        auts = aut_search(RationalFunction.from_poly(
            Poly.from_terms(F7, {3: 1, 1: -3})))
        assert len(auts) == 1

    def test_x3_plus_x_minus_3_order_6(self):
        f = rf(F7, {6: 1, 0: 1}, {3: 1})    # X^3 + X^-3
        auts = aut_search(f)
        assert len(auts) == 6
        scalings = {m for m in auts if m.c == F7.zero and m.b == F7.zero}
        flips = {m for m in auts if m.a == F7.zero}
        assert len(scalings) == 3 and len(flips) == 3

    def test_closure_under_composition(self):
        f = rf(F7, {6: 1, 0: 1}, {3: 1})
        auts = aut_search(f)
        for m1 in auts:
            assert m1.inverse() in auts
            for m2 in auts:
                assert m1 * m2 in auts

    def test_polynomial_auts_fix_infinity(self):
        for f in (power(F7, 4), Poly.from_terms(F7, {6: 1, 2: 3})):
            for m in aut_search(RationalFunction.from_poly(f)):
                assert m(INF) is INF
                assert m.is_polynomial_map()

    def test_prime_cap(self):
        with pytest.raises(ValueError):
            aut_search(RationalFunction.from_poly(power(GF(37), 2)))


class TestNormalize:
    def test_inverse_squares(self):
        inv2 = rf(QQ, {0: 1}, {2: 1})  # 1/X^2
        out = normalize_poly_decomposition(power(QQ, 4), [inv2, inv2])
        assert [p.terms_string() for p in out] == ["2:1", "2:1"]

    def test_already_polynomial_unchanged_up_to_canonical(self):
        factors = [RationalFunction.from_poly(power(QQ, 3)),
                   RationalFunction.from_poly(power(QQ, 2))]
        out = normalize_poly_decomposition(power(QQ, 6), factors)
        assert [p.terms_string() for p in out] == ["3:1", "2:1"]

    def test_moebius_twisted_chebyshev(self):
        # twist D6 = D2 o D3 by a Moebius junction: (D2 o m) o (m^-1 o D3)
        from rittlab.polyfield import compose as pcompose, dickson

        d2 = RationalFunction.from_poly(dickson(QQ, 2, 1))
        d3 = RationalFunction.from_poly(dickson(QQ, 3, 1))
        m = MobiusMap.make(QQ, 0, 1, 1, 0)  # 1/X
        left = compose(d2, m.as_rational())
        right = compose(m.inverse().as_rational(), d3)
        f = pcompose(dickson(QQ, 2, 1), dickson(QQ, 3, 1))
        out = normalize_poly_decomposition(f, [left, right])
        recomposed = out[0]
        for p in out[1:]:
            recomposed = pcompose(recomposed, p)
        assert recomposed == f
        assert [p.degree for p in out] == [2, 3]

    def test_wrong_composite_rejected(self):
        with pytest.raises(NotAPolynomialComposite):
            normalize_poly_decomposition(
                power(QQ, 4),
                [RationalFunction.from_poly(power(QQ, 2)),
                 RationalFunction.from_poly(Poly.from_terms(QQ, {2: 1, 0: 1}))])

    def test_single_rational_factor(self):
        out = normalize_poly_decomposition(
            power(QQ, 2), [RationalFunction.from_poly(power(QQ, 2))])
        assert out == (power(QQ, 2),)


class TestDivisibilityCounterexample:
    def test_p7(self):
        rep = divisibility_counterexample(7)
        assert (rep.aut_f, rep.aut_outer, rep.aut_inner) == (6, 1, 2)
        assert not rep.divides

    def test_p13(self):
        rep = divisibility_counterexample(13)
        assert (rep.aut_f, rep.aut_outer, rep.aut_inner) == (6, 1, 2)
        assert not rep.divides

    def test_p5_rejected(self):
        with pytest.raises(BadPrime):
            divisibility_counterexample(5)

    def test_non_prime_rejected(self):
        with pytest.raises(BadPrime):
            divisibility_counterexample(21)

    def test_composition_identity_checked(self):
        rep = divisibility_counterexample(7)
        assert rep.f == rf(F7, {6: 1, 0: 1}, {3: 1})

    def test_custom_pair(self):
        # a benign user-supplied pair: X^2 o X^2 = X^4; divisibility holds
        outer = RationalFunction.from_poly(power(F7, 2))
        rep = divisibility_counterexample(7, outer=outer, inner=outer)
        # over F7 only a = +-1 satisfies a^4 = 1, so |Aut(X^4)| = 2
        assert rep.aut_f == 2 and rep.aut_outer == rep.aut_inner == 2
        assert rep.divides
