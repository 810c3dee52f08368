"""Additive polynomials over F_{p^k} as twisted tau-polynomials.

A sum a_i X^(p^i) composes like the skew polynomial sum a_i tau^i, where
tau is the p-power map and multiplication twists past coefficients:
tau * c = c^p * tau.  Decomposing an additive polynomial into additive
factors is exactly factoring its skew form, and at desk scale the
irreducible right factors can be enumerated outright.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import CapExceeded, FieldMismatch, NotAdditive, TheoremViolated
from .fields import FFElement, FiniteField
from .polyfield import Poly, brute_force_right_factors

MAX_FIELD = 9
MAX_TAU_DEGREE = 5


@dataclass(frozen=True)
class SkewPoly:
    """Coefficients of tau^0, tau^1, ... (low to high, trailing zeros
    stripped)."""

    field: FiniteField
    coeffs: tuple[FFElement, ...]

    @staticmethod
    def make(field: FiniteField, coeffs: Sequence) -> "SkewPoly":
        cs = [field.coerce(c) if not isinstance(c, FFElement) else c
              for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        return SkewPoly(field, tuple(cs))

    @property
    def tau_degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> FFElement:
        if self.is_zero():
            raise ValueError("zero skew polynomial")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return not self.is_zero() and self.lc() == self.field.one

    def coeff(self, i: int) -> FFElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def _match(self, other: "SkewPoly"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._match(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly.make(self.field,
                             [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self) -> "SkewPoly":
        return SkewPoly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return self + (-other)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        """Twisted product: tau^i * c = c^(p^i) * tau^i."""
        self._match(other)
        if self.is_zero() or other.is_zero():
            return SkewPoly(self.field, ())
        p = self.field.p
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            q = p ** i
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b ** q
        return SkewPoly.make(self.field, out)

    def monic(self) -> "SkewPoly":
        """Left-normalize to leading coefficient 1 (u * self for a unit u)."""
        inv = self.lc().inverse()
        return SkewPoly.make(self.field,
                             [inv * c for c in self.coeffs])

    def terms_string(self) -> str:
        if self.is_zero():
            return "0:0"
        return " ".join(f"{i}:{self.field.format(c)}"
                        for i in range(self.tau_degree, -1, -1)
                        if (c := self.coeff(i)))

    def sort_key(self):
        return (self.tau_degree, tuple(c.to_int() for c in self.coeffs))

    def __repr__(self):
        return f"SkewPoly[{self.field}]({self.terms_string()})"


def skew_mul(u: SkewPoly, v: SkewPoly) -> SkewPoly:
    return u * v


def to_additive(f: SkewPoly) -> Poly:
    """sum a_i tau^i  ->  sum a_i X^(p^i)."""
    return Poly.from_terms(f.field,
                           {f.field.p ** i: c for i, c in enumerate(f.coeffs) if c})


def from_additive(f: Poly) -> SkewPoly:
    if not isinstance(f.field, FiniteField):
        raise NotAdditive("additive polynomials live over finite fields")
    p = f.field.p
    coeffs: dict[int, FFElement] = {}
    for deg, c in f.terms():
        i = 0
        d = deg
        while d > 1 and d % p == 0:
            d //= p
            i += 1
        if d != 1:
            raise NotAdditive(f"exponent {deg} is not a power of {p}")
        coeffs[i] = c
    return SkewPoly.make(f.field,
                         [coeffs.get(i, f.field.zero)
                          for i in range(max(coeffs, default=0) + 1)])


def right_divide(f: SkewPoly, d: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Unique (q, r) with f = q * d + r and tau-deg r < tau-deg d."""
    if d.is_zero():
        raise ZeroDivisionError("skew division by zero")
    f._match(d)
    field = f.field
    p = field.p
    rem = list(f.coeffs)
    m = d.tau_degree
    quot = [field.zero] * max(len(rem) - m, 0)
    for k in range(len(rem) - m - 1, -1, -1):
        # leading term of q_k tau^k * d is q_k * d_m^(p^k) tau^(k+m)
        c = rem[k + m] / d.lc() ** (p ** k)
        quot[k] = c
        if c:
            for j, b in enumerate(d.coeffs):
                rem[k + j] = rem[k + j] - c * b ** (p ** k)
    return SkewPoly.make(field, quot), SkewPoly.make(field, rem)


def is_right_factor(f: SkewPoly, d: SkewPoly) -> bool:
    return right_divide(f, d)[1].is_zero()


def _check_caps(f: SkewPoly):
    if f.field.order > MAX_FIELD or f.tau_degree > MAX_TAU_DEGREE:
        raise CapExceeded(
            f"skew factorization capped at field order {MAX_FIELD} and "
            f"tau-degree {MAX_TAU_DEGREE}")


def _monic_candidates(field: FiniteField, e: int):
    for low in itertools.product(field.elements(), repeat=e):
        yield SkewPoly(field, tuple(low) + (field.one,))


def monic_right_factors(f: SkewPoly, e: int) -> list[SkewPoly]:
    """All monic right factors of tau-degree e, by exhaustive scan."""
    return [d for d in _monic_candidates(f.field, e) if is_right_factor(f, d)]


def is_irreducible(f: SkewPoly) -> bool:
    """No proper monic right factor of tau-degree in 1..deg-1."""
    if f.tau_degree < 1:
        return False
    return not any(monic_right_factors(f, e)
                   for e in range(1, f.tau_degree))


def all_complete_skew_factorizations(f: SkewPoly
                                     ) -> tuple[tuple[SkewPoly, ...], ...]:
    """Every factorization of f into irreducible monic skew factors,
    listed outermost-first (f = unit * seq[0] * ... * seq[-1]).

    Recursion: peel every irreducible monic right factor and factor the
    quotient.  Deterministic order via coefficient encodings.
    """
    _check_caps(f)
    if f.is_zero() or f.tau_degree < 1:
        raise ValueError("need tau-degree >= 1")

    def rec(g: SkewPoly) -> list[tuple[SkewPoly, ...]]:
        if is_irreducible(g):
            return [(g.monic(),)]
        out = []
        for e in range(1, g.tau_degree):
            for d in monic_right_factors(g, e):
                if not is_irreducible(d):
                    continue
                q, _ = right_divide(g, d)
                for seq in rec(q):
                    out.append(seq + (d,))
        return out

    seqs = {seq for seq in rec(f.monic())}
    return tuple(sorted(seqs, key=lambda s: tuple(p.sort_key() for p in s)))


@dataclass
class OreReport:
    skew: SkewPoly
    n_factorizations: int
    length: int
    tau_degree_multiset: tuple[int, ...]
    general_right_factor_degrees: tuple[int, ...]


GENERAL_ORACLE_MAX_FIELD = 4
GENERAL_ORACLE_MAX_DEGREE = 16


def verify_ore_invariance(f: SkewPoly) -> OreReport:
    """All complete skew factorizations of f share length and tau-degree
    multiset.  At very small sizes the general (non-additive) exhaustive
    right-factor search is run on the X-form as well, and every right
    factor it finds must match an additive one: the classical fact that
    decompositions of additive polynomials are equivalent to additive
    decompositions."""
    facts = all_complete_skew_factorizations(f)
    profiles = {(len(seq), tuple(sorted(d.tau_degree for d in seq)))
                for seq in facts}
    if len(profiles) != 1:
        raise TheoremViolated(
            f"skew factorizations of {f!r} disagree: {sorted(profiles)}")
    (length, multiset), = profiles

    general_degrees: list[int] = []
    A = to_additive(f.monic())
    if (f.field.order <= GENERAL_ORACLE_MAX_FIELD
            and A.degree <= GENERAL_ORACLE_MAX_DEGREE and f.tau_degree >= 2):
        p = f.field.p
        for i in range(1, f.tau_degree):
            r = p ** i
            general = brute_force_right_factors(A, r)
            skew_side = {to_additive(d.monic())
                         for d in monic_right_factors(f, i)}
            for _, h in general:
                general_degrees.append(h.degree)
                if h not in skew_side:
                    raise TheoremViolated(
                        f"general right factor {h!r} of {A!r} has no "
                        f"additive counterpart")
            for h in skew_side:
                if h not in {hh for _, hh in general}:
                    raise TheoremViolated(
                        f"additive right factor {h!r} missed by the "
                        f"general search")
    return OreReport(skew=f, n_factorizations=len(facts), length=length,
                     tau_degree_multiset=multiset,
                     general_right_factor_degrees=tuple(sorted(general_degrees)))
