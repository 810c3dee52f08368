"""Dense univariate polynomials over Q or F_{p^k}, and their tame
compositional structure.

The decomposition machinery works with *canonical* forms: a polynomial is
canonicalized to be monic with zero constant term, and in a canonical
decomposition every factor except the leftmost (outermost) is of that
shape.  With those normalizations each equivalence class of decompositions
contains exactly one canonical representative, so equivalence testing is
plain equality.

Everything here assumes the tame case char(K) does not divide deg(f);
wild (additive) decompositions live in :mod:`rittlab.additive`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (FieldMismatch, InternalInconsistency, TheoremViolated,
                     WildCharacteristic)
from .fields import Field, FiniteField, Scalar, same_field


@dataclass(frozen=True, slots=True)
class Poly:
    """Coefficients low-to-high, trailing zeros stripped; zero is ()."""

    field: Field
    coeffs: tuple

    @staticmethod
    def make(field: Field, coeffs: Sequence) -> "Poly":
        cs = [field.coerce(c) for c in coeffs]
        while cs and cs[-1] == field.zero:
            cs.pop()
        return Poly(field, tuple(cs))

    @staticmethod
    def from_terms(field: Field, terms: dict) -> "Poly":
        if not terms:
            return Poly(field, ())
        coeffs = [0] * (max(terms) + 1)
        for deg, c in terms.items():
            coeffs[deg] = c
        return Poly.make(field, coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Scalar:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, deg: int) -> Scalar:
        if 0 <= deg < len(self.coeffs):
            return self.coeffs[deg]
        return self.field.zero

    def _match(self, other: "Poly"):
        if not same_field(self.field, other.field):
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Poly") -> "Poly":
        self._match(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly.make(self.field,
                         [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._match(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.field, ())
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == self.field.zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly.make(self.field, out)

    def scale(self, c) -> "Poly":
        c = self.field.coerce(c)
        return Poly.make(self.field, [c * a for a in self.coeffs])

    def shift_const(self, c) -> "Poly":
        """self + c for a scalar c."""
        c = self.field.coerce(c)
        if self.is_zero():
            return Poly.make(self.field, [c])
        return Poly.make(self.field,
                         (self.coeffs[0] + c,) + self.coeffs[1:])

    def __pow__(self, n: int) -> "Poly":
        result = Poly.make(self.field, [1])
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, x):
        """Evaluate at a scalar by Horner's rule."""
        x = self.field.coerce(x)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly.make(self.field,
                         [self.field.coerce(i) * c
                          for i, c in enumerate(self.coeffs)][1:])

    def quot_rem(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._match(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(self.field, ()), self
        inv_lc = self.field.one / other.lc()
        quot = [self.field.zero] * (dq + 1)
        for i in range(dq, -1, -1):
            c = rem[i + other.degree] * inv_lc
            quot[i] = c
            if c != self.field.zero:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = rem[i + j] - c * b
        return Poly.make(self.field, quot), Poly.make(self.field, rem)

    def monic(self) -> "Poly":
        return self.scale(self.field.one / self.lc())

    def terms(self) -> list[tuple[int, Scalar]]:
        """Nonzero (degree, coefficient) pairs, high degree first."""
        return [(i, c) for i, c in reversed(list(enumerate(self.coeffs)))
                if c != self.field.zero]

    def terms_string(self) -> str:
        if self.is_zero():
            return "0:0"
        return " ".join(f"{d}:{self.field.format(c)}" for d, c in self.terms())

    def pretty(self, var: str = "X") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for d, c in self.terms():
            cs = self.field.format(c)
            if d == 0:
                parts.append(cs)
            else:
                xs = var if d == 1 else f"{var}^{d}"
                parts.append(xs if cs == "1" else f"{cs}*{xs}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly[{self.field}]({self.pretty()})"


def x_poly(field: Field) -> Poly:
    return Poly.make(field, [0, 1])


def compose(g: Poly, h: Poly) -> Poly:
    """g(h(X)), exact, by Horner's rule over polynomials."""
    g._match(h)
    acc = Poly(g.field, ())
    for c in reversed(g.coeffs):
        acc = acc * h + Poly.make(g.field, [c])
    return acc


def gcd_poly(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a.quot_rem(b)[1]
    if a.is_zero():
        return a
    return a.monic()


@dataclass(frozen=True)
class LinearPoly:
    """aX + b with a != 0: the units of the composition monoid."""

    field: Field
    a: Scalar
    b: Scalar

    @staticmethod
    def make(field: Field, a, b) -> "LinearPoly":
        a, b = field.coerce(a), field.coerce(b)
        if a == field.zero:
            raise ValueError("degree-one map needs a != 0")
        return LinearPoly(field, a, b)

    @staticmethod
    def identity(field: Field) -> "LinearPoly":
        return LinearPoly.make(field, 1, 0)

    def as_poly(self) -> Poly:
        return Poly.make(self.field, [self.b, self.a])

    def inverse(self) -> "LinearPoly":
        inv = self.field.one / self.a
        return LinearPoly(self.field, inv, -self.b * inv)

    def __mul__(self, other: "LinearPoly") -> "LinearPoly":
        """Composition self o other."""
        return LinearPoly(self.field, self.a * other.a,
                          self.a * other.b + self.b)

    def apply_outer(self, f: Poly) -> Poly:
        """self o f = a*f + b."""
        return f.scale(self.a).shift_const(self.b)

    def apply_inner(self, f: Poly) -> Poly:
        """f o self = f(aX + b)."""
        return compose(f, self.as_poly())

    def is_identity(self) -> bool:
        return self.a == self.field.one and self.b == self.field.zero

    def sort_key(self):
        return _scalar_key(self.a), _scalar_key(self.b)

    def __repr__(self):
        return f"LinearPoly({self.as_poly().pretty()})"


def _scalar_key(c):
    from fractions import Fraction

    if isinstance(c, Fraction):
        return (c.numerator, c.denominator)
    return c.to_int()


def canonical_form(f: Poly) -> tuple[LinearPoly, Poly]:
    """Write f = lin o fc with fc monic and fc(0) = 0."""
    lin = LinearPoly.make(f.field, f.lc(), f.coeff(0))
    fc = lin.inverse().apply_outer(f)
    return lin, fc


@dataclass(frozen=True)
class Decomposition:
    """factors[0] is the outermost map: f = factors[0] o ... o factors[-1].

    Canonical: every factor except factors[0] is monic with zero constant
    term, and every factor has degree >= 2.
    """

    factors: tuple[Poly, ...]

    def degrees(self) -> tuple[int, ...]:
        return tuple(p.degree for p in self.factors)

    def compose_all(self) -> Poly:
        acc = self.factors[-1]
        for g in reversed(self.factors[:-1]):
            acc = compose(g, acc)
        return acc

    def is_canonical(self) -> bool:
        for i, p in enumerate(self.factors):
            if p.degree < 2:
                return False
            if i > 0 and (p.lc() != p.field.one or p.coeff(0) != p.field.zero):
                return False
        return True

    def sort_key(self):
        return tuple((p.degree, tuple(_scalar_key(c) for c in p.coeffs))
                     for p in self.factors)


def canonicalize(factors: Sequence[Poly]) -> Decomposition:
    """The canonical representative of the equivalence class of the given
    decomposition: linear junction maps are pushed outward until every
    factor but the outermost is monic with zero constant term."""
    inner_first = list(reversed(factors))
    out: list[Poly] = []
    carry = LinearPoly.identity(inner_first[0].field)
    for p in inner_first[:-1]:
        lin, pc = canonical_form(carry.apply_inner(p))
        out.append(pc)
        carry = lin
    out.append(carry.apply_inner(inner_first[-1]))
    return Decomposition(tuple(reversed(out)))


def _check_tame(f: Poly):
    if f.degree < 2:
        raise ValueError("need degree >= 2")
    if f.field.char and f.degree % f.field.char == 0:
        raise WildCharacteristic(
            f"char {f.field.char} divides deg {f.degree}; "
            "route additive polynomials through rittlab.additive")


def base_h_digits(f: Poly, h: Poly) -> list[Poly]:
    """Digits of f written in base h: f = sum d_i h^i with deg d_i < deg h."""
    digits = []
    while not f.is_zero():
        f, r = f.quot_rem(h)
        digits.append(r)
    return digits or [Poly(h.field, ())]


def _digits_to_outer(digits: Sequence[Poly], field: Field) -> Optional[Poly]:
    """If every base-h digit is a constant, assemble g with f = g o h."""
    consts = []
    for d in digits:
        if d.degree > 0:
            return None
        consts.append(d.coeff(0))
    return Poly.make(field, consts)


def right_factor(f: Poly, r: int) -> Optional[tuple[Poly, Poly]]:
    """The canonical decomposition f = g o h with deg h = r, if one exists.

    h is the degree-r approximate s-th root of f (s = deg f / r): its
    coefficients below X^r are forced one at a time by the top coefficients
    of f, each step dividing by s (invertible by tameness).  g is then read
    off the base-h digits of f; a non-constant digit means no such
    decomposition exists.
    """
    _check_tame(f)
    n = f.degree
    if r < 2 or n % r != 0 or n // r < 2:
        raise ValueError(f"r = {r} is not a proper divisor shape for deg {n}")
    s = n // r
    lin, fc = canonical_form(f)
    field = f.field
    s_inv = field.one / field.coerce(s)

    h_coeffs = [field.zero] * r + [field.one]
    for j in range(1, r):
        h = Poly.make(field, h_coeffs)
        delta = fc.coeff(n - j) - (h ** s).coeff(n - j)
        h_coeffs[r - j] = delta * s_inv
    h = Poly.make(field, h_coeffs)

    g_tail = _digits_to_outer(base_h_digits(fc, h), field)
    if g_tail is None:
        return None
    if compose(g_tail, h) != fc:
        raise InternalInconsistency("base-h expansion lost exactness")
    return lin.apply_outer(g_tail), h


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def is_right_component(inner: Poly, outer: Poly) -> bool:
    """Whether outer = u o inner for some polynomial u (both canonical)."""
    if outer.degree % inner.degree or outer.degree == inner.degree:
        return outer == inner
    return _digits_to_outer(base_h_digits(outer, inner), inner.field) is not None


def _chain_to_decomposition(chain: Sequence[Poly], lin: LinearPoly) -> Decomposition:
    """Turn X = h_0 < h_1 < ... < h_k = fc into canonical factors."""
    factors = []
    for low, high in zip(chain, chain[1:]):
        u = _digits_to_outer(base_h_digits(high, low), low.field)
        if u is None:
            raise InternalInconsistency("poset edge without polynomial quotient")
        factors.append(u)
    factors[-1] = lin.apply_outer(factors[-1])
    return Decomposition(tuple(reversed(factors)))


def complete_right_factors(f: Poly) -> dict[int, Poly]:
    """The canonical proper right factor for each degree at which one
    exists (tame polynomials have at most one per degree; the brute-force
    oracles in the test suite guard that uniqueness)."""
    _check_tame(f)
    n = f.degree
    found = {}
    for r in _divisors(n):
        if r == 1 or r == n:
            continue
        gh = right_factor(f, r)
        if gh is not None:
            found[r] = gh[1]
    return found


def all_complete_decompositions(f: Poly) -> tuple[Decomposition, ...]:
    """All complete decompositions of f, one canonical representative per
    equivalence class.

    The canonical right factors of f (plus X and f itself) are ordered by
    "is a right component of"; maximal chains of that poset are exactly
    the complete decompositions.
    """
    _check_tame(f)
    lin, fc = canonical_form(f)
    nodes = [x_poly(f.field)] + [h for _, h in sorted(complete_right_factors(f).items())]
    nodes.append(fc)

    below: dict[int, list[int]] = {}
    for i, j in itertools.permutations(range(len(nodes)), 2):
        if nodes[i].degree < nodes[j].degree and is_right_component(nodes[i], nodes[j]):
            below.setdefault(j, []).append(i)

    def covers(j: int) -> list[int]:
        cands = below.get(j, [])
        return [i for i in cands
                if not any(i in below.get(k, ()) for k in cands if k != i)]

    top = len(nodes) - 1
    chains: list[list[Poly]] = []

    def descend(j: int, acc: list[int]):
        if nodes[j].degree == 1:
            chains.append([nodes[k] for k in reversed(acc + [j])])
            return
        for i in covers(j):
            descend(i, acc + [j])

    descend(top, [])
    decomps = [_chain_to_decomposition(chain, lin) for chain in chains]
    for d in decomps:
        if d.compose_all() != f:
            raise InternalInconsistency("decomposition does not recompose to f")
    return tuple(sorted(decomps, key=Decomposition.sort_key))


def aut_group(f: Poly) -> tuple[LinearPoly, ...]:
    """All degree-one mu with f o mu = f.

    Over a finite field this is an exhaustive (a, b) scan (filtered by
    a^n = 1); over Q only a = +-1 can occur (the rational roots of unity),
    with b pinned by the X^(n-1) coefficient.
    """
    if f.degree < 2:
        raise ValueError("need degree >= 2")
    field = f.field
    n = f.degree
    found = []
    if isinstance(field, FiniteField):
        for a in field.elements():
            if not a or a ** n != field.one:
                continue
            for b in field.elements():
                mu = LinearPoly(field, a, b)
                if mu.apply_inner(f) == f:
                    found.append(mu)
    else:
        n_lc = field.coerce(n) * f.lc()
        for a_int in (1, -1):
            a = field.coerce(a_int)
            if a ** n != field.one:
                continue
            # X^(n-1) coefficient of f(aX+b) is a^(n-1) (f_{n-1} + n lc b)
            b = (f.coeff(n - 1) / a ** (n - 1) - f.coeff(n - 1)) / n_lc
            mu = LinearPoly(field, a, b)
            if mu.apply_inner(f) == f:
                found.append(mu)
    return tuple(sorted(found, key=LinearPoly.sort_key))


def gamma_order(f: Poly) -> Optional[int]:
    """Order of the group of degree-one mu admitting a degree-one nu with
    nu o f o mu = f; None means the group is infinite.

    Conjugating by the shift that kills the X^(n-1) term (and discarding
    the constant term, which the outer map absorbs), the order is the gcd
    of the gaps between exponents of the surviving terms; if only X^n
    survives, f is a linear twist of X^n and the group is infinite.
    """
    _check_tame(f)
    n = f.degree
    c = f.coeff(n - 1) / (f.field.coerce(n) * f.lc())
    shift = LinearPoly.make(f.field, 1, -c)
    fhat = shift.apply_inner(f)  # f(X - c); constant term is irrelevant
    exps = [d for d, _ in fhat.terms() if d >= 1]
    if exps == [n]:
        return None
    return math.gcd(*(n - e for e in exps))


def gamma_group(f: Poly) -> tuple[LinearPoly, ...]:
    """Over a finite field the twist-symmetry group behind gamma_order is
    small enough to enumerate: all degree-one mu for which some degree-one
    nu satisfies nu o f o mu = f.  (Over Q its elements generally involve
    roots of unity outside the field, so only the order is computed.)"""
    if not isinstance(f.field, FiniteField):
        raise TypeError("gamma_group enumerates over finite fields only")
    if f.degree < 2:
        raise ValueError("need degree >= 2")
    field = f.field
    found = []
    for a in field.elements():
        if not a:
            continue
        for b in field.elements():
            mu = LinearPoly(field, a, b)
            g = mu.apply_inner(f)
            scale = g.lc() / f.lc()
            shift = g.coeff(0) - scale * f.coeff(0)
            if LinearPoly.make(field, scale, shift).apply_outer(f) == g:
                found.append(mu)
    return tuple(sorted(found, key=LinearPoly.sort_key))


def factorable_core(f: Poly) -> tuple[Poly, Poly]:
    """f = g o h where h generates the invariants of Aut(f): the canonical
    form of the orbit product prod_{mu in Aut(f)} mu(X).  deg h = |Aut(f)|."""
    auts = aut_group(f)
    if len(auts) == 1:
        return f, x_poly(f.field)
    prod = Poly.make(f.field, [1])
    for mu in auts:
        prod = prod * mu.as_poly()
    _, h = canonical_form(prod)
    g = _digits_to_outer(base_h_digits(f, h), f.field)
    if g is None or compose(g, h) != f:
        raise InternalInconsistency("Aut-orbit product is not a right factor")
    return g, h


MAX_BIVARIATE_DEGREE = 64


def is_factorable(f: Poly) -> bool:
    """Whether f(X) - f(Y) = lc(f) * prod_{mu in Aut(f)} (X - mu(Y)),
    verified by full bivariate expansion."""
    if f.degree > MAX_BIVARIATE_DEGREE:
        raise ValueError(f"degree {f.degree} exceeds bivariate cap")
    auts = aut_group(f)
    if len(auts) != f.degree:
        return False
    field = f.field
    zero = field.zero
    # left side, as {(i, j): coeff} for X^i Y^j
    lhs: dict[tuple[int, int], Scalar] = {}
    for d, c in f.terms():
        lhs[(d, 0)] = lhs.get((d, 0), zero) + c
        lhs[(0, d)] = lhs.get((0, d), zero) - c
    rhs: dict[tuple[int, int], Scalar] = {(0, 0): f.lc()}
    for mu in auts:
        nxt: dict[tuple[int, int], Scalar] = {}
        for (i, j), c in rhs.items():
            for key, factor in (((i + 1, j), field.one),
                                ((i, j + 1), -mu.a),
                                ((i, j), -mu.b)):
                nxt[key] = nxt.get(key, zero) + c * factor
        rhs = nxt
    lhs = {k: v for k, v in lhs.items() if v != zero}
    rhs = {k: v for k, v in rhs.items() if v != zero}
    return lhs == rhs


@dataclass(frozen=True)
class PolyTheoremReport:
    poly: Poly
    n_decompositions: int
    length: int
    degree_multiset: tuple[int, ...]
    degree_aut_multiset: tuple[tuple[int, int], ...]


def verify_poly_theorems(f: Poly) -> PolyTheoremReport:
    """Check the uniqueness invariants across all complete decompositions
    of f: common length, common degree multiset, and common multiset of
    (degree, |Aut|) pairs.  Raises TheoremViolated with a witness pair if
    any of them differ."""
    decomps = all_complete_decompositions(f)
    profiles = []
    for d in decomps:
        degs = tuple(sorted(d.degrees()))
        pairs = tuple(sorted((p.degree, len(aut_group(p))) for p in d.factors))
        profiles.append((len(d.factors), degs, pairs))
    first = profiles[0]
    for d, prof in zip(decomps, profiles):
        if prof != first:
            raise TheoremViolated(
                f"decomposition invariants differ for {f!r}: "
                f"{decomps[0].degrees()} vs {d.degrees()} "
                f"(profiles {first} vs {prof})")
    return PolyTheoremReport(poly=f, n_decompositions=len(decomps),
                             length=first[0], degree_multiset=first[1],
                             degree_aut_multiset=first[2])


def power(field: Field, n: int) -> Poly:
    return Poly.from_terms(field, {n: 1})


def dickson(field: Field, n: int, a) -> Poly:
    """D_n with D_0 = 2, D_1 = X, D_n = X D_{n-1} - a D_{n-2}."""
    a = field.coerce(a)
    if n == 0:
        return Poly.make(field, [2])
    prev, cur = Poly.make(field, [2]), x_poly(field)
    for _ in range(n - 1):
        prev, cur = cur, x_poly(field) * cur - prev.scale(a)
    return cur


def chebyshev_normalized(field: Field, n: int) -> Poly:
    """The monic Chebyshev-like polynomial with T(2cos t) = 2cos(nt):
    the Dickson polynomial with parameter 1."""
    return dickson(field, n, 1)


def brute_force_right_factors(f: Poly, r: int,
                              max_candidates: int = 2_000_000
                              ) -> list[tuple[Poly, Poly]]:
    """Exhaustive reference search for canonical right factors of degree r
    over a finite field: try every monic h with h(0) = 0 and keep those
    whose base-h digits are constants.

    Independent of the approximate-root route (and valid in wild
    characteristic), so it serves as the oracle for both the tame engine
    and the additive/skew factorization checks.
    """
    field = f.field
    if not isinstance(field, FiniteField):
        raise TypeError("exhaustive scan needs a finite field")
    n = f.degree
    if r < 2 or n % r or n // r < 2:
        raise ValueError(f"r = {r} is not a proper divisor shape for deg {n}")
    if field.order ** (r - 1) > max_candidates:
        raise ValueError("search space too large")
    lin, fc = canonical_form(f)
    results = []
    for mid in itertools.product(field.elements(), repeat=r - 1):
        h = Poly.make(field, (field.zero,) + mid + (field.one,))
        g_tail = _digits_to_outer(base_h_digits(fc, h), field)
        if g_tail is not None:
            results.append((lin.apply_outer(g_tail), h))
    return results
