"""Reduced rational functions, Moebius maps, and two jobs built on them:
pulling a rational decomposition of a polynomial back into polynomial
form, and the automorphism-divisibility counterexample X^3 + X^-3.

A rational function is stored as a coprime numerator/denominator pair
with monic denominator, which makes equality plain field equality.
Points of the projective line are field elements or the sentinel INF.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import (BadPrime, DegenerateResult, NotAPolynomialComposite,
                     TheoremViolated)
from .fields import FFElement, Field, FiniteField
from .polyfield import (LinearPoly, Poly, canonicalize, compose as poly_compose,
                        gcd_poly, x_poly)


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"


INF = _Infinity()
Point = Union[FFElement, _Infinity, "int"]


@dataclass(frozen=True)
class RationalFunction:
    num: Poly
    den: Poly

    @staticmethod
    def make(num: Poly, den: Poly) -> "RationalFunction":
        num._match(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = gcd_poly(num, den)
        if not g.is_zero() and g.degree > 0:
            num = num.quot_rem(g)[0]
            den = den.quot_rem(g)[0]
        lc_inv = den.field.one / den.lc()
        return RationalFunction(num.scale(lc_inv), den.scale(lc_inv))

    @staticmethod
    def from_poly(p: Poly) -> "RationalFunction":
        return RationalFunction(p, Poly.make(p.field, [1]))

    @property
    def field(self) -> Field:
        return self.num.field

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"{self!r} is not a polynomial")
        return self.num

    def __call__(self, pt: Point) -> Point:
        if pt is INF:
            dn, dd = self.num.degree, self.den.degree
            if dn > dd:
                return INF
            if dn < dd:
                return self.field.zero
            return self.num.lc() / self.den.lc()
        pt = self.field.coerce(pt)
        dv = self.den(pt)
        if not dv:
            return INF  # numerator is nonzero there by coprimality
        return self.num(pt) / dv

    def pretty(self) -> str:
        if self.is_polynomial():
            return self.num.pretty()
        return f"({self.num.pretty()}) / ({self.den.pretty()})"

    def __repr__(self):
        return f"RationalFunction[{self.field}]({self.pretty()})"


def compose(f: RationalFunction, g: RationalFunction) -> RationalFunction:
    """f(g(X)) as a reduced fraction; DegenerateResult if it collapses to
    a constant."""
    if f.field != g.field:
        f.num._match(g.num)
    P, Q = g.num, g.den
    m = max(f.num.degree, f.den.degree)
    powP = [Poly.make(P.field, [1])]
    powQ = [Poly.make(P.field, [1])]
    for _ in range(m):
        powP.append(powP[-1] * P)
        powQ.append(powQ[-1] * Q)

    def expand(poly: Poly) -> Poly:
        acc = Poly(P.field, ())
        for i in range(poly.degree + 1):
            c = poly.coeff(i)
            if c != P.field.zero:
                acc = acc + (powP[i] * powQ[m - i]).scale(c)
        return acc

    A, B = expand(f.num), expand(f.den)
    if B.is_zero():
        raise DegenerateResult("denominator collapsed under composition")
    result = RationalFunction.make(A, B)
    if result.degree == 0:
        raise DegenerateResult("composition collapsed to a constant")
    return result


@dataclass(frozen=True)
class MobiusMap:
    """(a X + b) / (c X + d) with ad - bc != 0, scaled so the first
    nonzero entry of (a, b, c, d) is 1."""

    field: Field
    a: object
    b: object
    c: object
    d: object

    @staticmethod
    def make(field: Field, a, b, c, d) -> "MobiusMap":
        a, b, c, d = (field.coerce(v) for v in (a, b, c, d))
        if a * d - b * c == field.zero:
            raise ValueError("singular Moebius matrix")
        for lead in (a, b, c, d):
            if lead != field.zero:
                inv = field.one / lead
                return MobiusMap(field, a * inv, b * inv, c * inv, d * inv)
        raise ValueError("zero matrix")

    @staticmethod
    def identity(field: Field) -> "MobiusMap":
        return MobiusMap.make(field, 1, 0, 0, 1)

    def __mul__(self, other: "MobiusMap") -> "MobiusMap":
        """Composition self o other (matrix product)."""
        return MobiusMap.make(
            self.field,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d)

    def inverse(self) -> "MobiusMap":
        return MobiusMap.make(self.field, self.d, -self.b, -self.c, self.a)

    def __call__(self, pt: Point) -> Point:
        z = self.field.zero
        if pt is INF:
            return INF if self.c == z else self.a / self.c
        pt = self.field.coerce(pt)
        den = self.c * pt + self.d
        if den == z:
            return INF
        return (self.a * pt + self.b) / den

    def as_rational(self) -> RationalFunction:
        return RationalFunction.make(Poly.make(self.field, [self.b, self.a]),
                                     Poly.make(self.field, [self.d, self.c]))

    def is_polynomial_map(self) -> bool:
        return self.c == self.field.zero

    def pretty(self) -> str:
        return self.as_rational().pretty()


def mobius_apply(mu: MobiusMap, pt: Point) -> Point:
    return mu(pt)


def _pgl2(field: FiniteField):
    """Canonical representatives of PGL_2(F_q), deterministic order."""
    one = field.one
    zero = field.zero
    # first nonzero coordinate = 1: either a = 1, or a = 0 and b = 1
    for b, c, d in itertools.product(field.elements(), repeat=3):
        if one * d - b * c != zero:
            yield MobiusMap(field, one, b, c, d)
    for c, d in itertools.product(field.elements(), repeat=2):
        if c:  # a = 0, b = 1: determinant is -c
            yield MobiusMap(field, zero, one, c, d)


MAX_AUT_PRIME = 31


def aut_search(f: RationalFunction) -> tuple[MobiusMap, ...]:
    """All Moebius mu with f o mu = f, by full scan of PGL_2(F_p).

    Cross-multiplied comparison (no reduction step): with f = N/D and
    mu = (aX+b)/(cX+d), f o mu = A/B and the test is A*D == B*N.
    """
    field = f.field
    if not isinstance(field, FiniteField) or field.k != 1:
        raise ValueError("aut_search scans PGL_2 over a prime field")
    if field.p > MAX_AUT_PRIME:
        raise ValueError(f"prime {field.p} exceeds scan cap {MAX_AUT_PRIME}")
    N, D = f.num, f.den
    m = max(N.degree, D.degree)
    one = Poly.make(field, [1])
    pow_cache: dict[tuple, list[Poly]] = {}

    def powers(lin0, lin1) -> list[Poly]:
        key = (lin0, lin1)
        table = pow_cache.get(key)
        if table is None:
            base = Poly.make(field, [lin0, lin1])
            table = [one]
            for _ in range(m):
                table.append(table[-1] * base)
            pow_cache[key] = table
        return table

    found = []
    for mu in _pgl2(field):
        powP = powers(mu.b, mu.a)
        powQ = powers(mu.d, mu.c)
        A = Poly(field, ())
        B = Poly(field, ())
        for i in range(m + 1):
            cn, cd = N.coeff(i), D.coeff(i)
            term = powP[i] * powQ[m - i]
            if cn != field.zero:
                A = A + term.scale(cn)
            if cd != field.zero:
                B = B + term.scale(cd)
        if A * D == B * N:
            found.append(mu)
    if len(found) > f.degree:
        raise TheoremViolated(
            f"|Aut| = {len(found)} exceeds deg = {f.degree} for {f!r}")
    return tuple(sorted(found, key=lambda mu: tuple(
        v.to_int() for v in (mu.a, mu.b, mu.c, mu.d))))


def normalize_poly_decomposition(f: Poly, factors: Sequence[RationalFunction]
                                 ) -> tuple[Poly, ...]:
    """Given rational factors composing to the polynomial f, produce the
    equivalent canonical decomposition into polynomials.

    Walking outward from the innermost factor, infinity has a unique
    preimage at every junction (it is the image of infinity under the
    inner part); conjugating each junction by a Moebius map parking that
    point at infinity turns every factor into a polynomial, and a final
    linear cleanup yields the canonical form.
    """
    if f.degree < 2:
        raise ValueError("need deg f >= 2")
    try:
        acc = factors[-1]
        for g in reversed(factors[:-1]):
            acc = compose(g, acc)
    except DegenerateResult as exc:
        raise NotAPolynomialComposite(str(exc)) from exc
    if acc != RationalFunction.from_poly(f):
        raise NotAPolynomialComposite(
            f"factors compose to {acc!r}, not to {f!r}")

    n = len(factors)
    field = f.field
    # z_j = image of infinity under the innermost j factors (j = 0..n-1);
    # this is the unique infinity-preimage of the outer part above it
    z_bottom_up: list[Point] = [INF]
    pt: Point = INF
    for g in reversed(factors[1:]):  # f_1, ..., f_{n-1}, innermost first
        pt = g(pt)
        z_bottom_up.append(pt)

    def mu_for(point: Point) -> MobiusMap:
        if point is INF:
            return MobiusMap.identity(field)
        return MobiusMap.make(field, point, 1, 1, 0)  # (zX + 1)/X: INF -> z

    mu = [mu_for(zj) for zj in z_bottom_up]  # mu_0 .. mu_{n-1}
    mu.append(MobiusMap.identity(field))     # mu_n (outermost end)

    polys: list[Poly] = []
    for i, g in enumerate(factors):  # g is factor number k = n - i
        k = n - i
        conj = compose(compose(mu[k].inverse().as_rational(), g),
                       mu[k - 1].as_rational())
        if not conj.is_polynomial():
            raise NotAPolynomialComposite(
                f"factor {i} does not become a polynomial; infinity has "
                f"several preimages at that stage")
        polys.append(conj.as_poly())
    decomp = canonicalize(polys)
    if decomp.compose_all() != f:
        raise NotAPolynomialComposite("normalized factors fail to recompose")
    return decomp.factors


@dataclass
class CounterexampleReport:
    prime: int
    f: RationalFunction
    outer: RationalFunction
    inner: RationalFunction
    aut_f: int
    aut_outer: int
    aut_inner: int
    divides: bool


def divisibility_counterexample(p: int,
                     outer: Optional[RationalFunction] = None,
                     inner: Optional[RationalFunction] = None
                     ) -> CounterexampleReport:
    """The divisibility-conjecture counterexample: f = X^3 + X^-3 factors
    as (X^3 - 3X) o (X + 1/X), yet |Aut(f)| = 6 does not divide
    |Aut(outer)| * |Aut(inner)| = 1 * 2.

    Verified over F_p with p = 1 (mod 3), where the six maps aX and a/X
    (a a cube root of unity) exist just as they do over the complex
    numbers.  Custom (outer, inner) pairs are accepted but only the
    shipped instance is asserted to fail divisibility.
    """
    if not _is_prime(p):
        raise BadPrime(f"{p} is not prime")
    if p % 3 != 1 or p in (2, 3):
        raise BadPrime(f"need p = 1 (mod 3) and p coprime to 6, got {p}")
    from .fields import GF

    field = GF(p)
    default = outer is None and inner is None
    if default:
        inner = RationalFunction.make(Poly.from_terms(field, {2: 1, 0: 1}),
                                      x_poly(field))           # X + 1/X
        outer = RationalFunction.from_poly(
            Poly.from_terms(field, {3: 1, 1: -3}))             # X^3 - 3X
    f = compose(outer, inner)
    if default:
        expected = RationalFunction.make(Poly.from_terms(field, {6: 1, 0: 1}),
                                         Poly.from_terms(field, {3: 1}))
        if f != expected:
            raise TheoremViolated("X^3 - 3X composed with X + 1/X is not "
                                  "X^3 + X^-3")
    aut_f = len(aut_search(f))
    aut_outer = len(aut_search(outer))
    aut_inner = len(aut_search(inner))
    divides = (aut_outer * aut_inner) % aut_f == 0
    if default and (aut_f, aut_outer, aut_inner, divides) != (6, 1, 2, False):
        raise TheoremViolated(
            f"expected (6, 1, 2, non-dividing), got "
            f"({aut_f}, {aut_outer}, {aut_inner}, divides={divides})")
    return CounterexampleReport(prime=p, f=f, outer=outer, inner=inner,
                                aut_f=aut_f, aut_outer=aut_outer,
                                aut_inner=aut_inner, divides=divides)


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))
