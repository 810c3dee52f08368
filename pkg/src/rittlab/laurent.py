"""Branch expansions at infinity and the induced cycle on branches.

For a degree-n polynomial f over F_p with p not dividing n and n | p - 1,
the equation f(x) = s^n has exactly n solutions of the form
x_c = c s + a_0 + a_{-1} s^{-1} + ..., one for each c with c^n = lc(f).
Substituting s -> theta s for a primitive n-th root of unity theta
permutes the branches by c -> theta c, a single n-cycle: an explicit
transitive cyclic subgroup of the monodromy group.

All series here have finite support, so the arithmetic is exact; the
precision M only bounds how far the tails are solved.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadLeadingCoefficient, InternalInconsistency, WildCharacteristic
from .fields import FFElement, FiniteField
from .permgroup import Permutation
from .polyfield import Poly


@dataclass(frozen=True)
class LaurentPoly:
    """Finite-support Laurent polynomial in s over a finite field."""

    field: FiniteField
    coeffs: tuple[tuple[int, FFElement], ...]  # (exponent, coeff), descending

    @staticmethod
    def make(field: FiniteField, terms: dict) -> "LaurentPoly":
        items = tuple(sorted(((e, c) for e, c in terms.items() if c),
                             key=lambda t: -t[0]))
        return LaurentPoly(field, items)

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def coeff(self, e: int) -> FFElement:
        for ee, c in self.coeffs:
            if ee == e:
                return c
        return self.field.zero

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = self.as_dict()
        for e, c in other.coeffs:
            s = out.get(e, self.field.zero) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(self.field,
                           tuple(sorted(out.items(), key=lambda t: -t[0])))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.field, tuple((e, -c) for e, c in self.coeffs))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, FFElement] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                e = e1 + e2
                s = out.get(e, self.field.zero) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly(self.field,
                           tuple(sorted(out.items(), key=lambda t: -t[0])))

    def scale(self, c: FFElement) -> "LaurentPoly":
        if not c:
            return LaurentPoly(self.field, ())
        return LaurentPoly(self.field,
                           tuple((e, c * a) for e, a in self.coeffs))

    def substitute_scaled_s(self, theta: FFElement) -> "LaurentPoly":
        """s -> theta * s."""
        return LaurentPoly(self.field,
                           tuple((e, c * theta ** e) for e, c in self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "LaurentPoly(0)"
        return ("LaurentPoly(" +
                " + ".join(f"{c}*s^{e}" for e, c in self.coeffs) + ")")


def _eval_poly_at(f: Poly, x: LaurentPoly) -> LaurentPoly:
    acc = LaurentPoly(x.field, ())
    one = LaurentPoly.make(x.field, {0: x.field.one})
    for c in reversed(f.coeffs):
        acc = acc * x + one.scale(c)
    return acc


@dataclass(frozen=True)
class LaurentBranch:
    """x_c = c s + sum_{i=0..M} a_{-i} s^{-i}, with f(x_c) = s^n up to the
    checked precision."""

    poly: Poly
    c: FFElement
    precision: int
    tail: tuple[FFElement, ...]  # a_0, a_{-1}, ..., a_{-M}

    @property
    def field(self) -> FiniteField:
        return self.poly.field

    def series(self) -> LaurentPoly:
        terms = {1: self.c}
        for i, a in enumerate(self.tail):
            if a:
                terms[-i] = a
        return LaurentPoly.make(self.field, terms)

    def defect(self) -> LaurentPoly:
        """f(x_c) - s^n, which must vanish at degrees n-1 .. n-1-M."""
        n = self.poly.degree
        s_n = LaurentPoly.make(self.field, {n: self.field.one})
        return _eval_poly_at(self.poly, self.series()) - s_n

    def verify(self) -> bool:
        n = self.poly.degree
        d = self.defect()
        return all(not d.coeff(n - 1 - i) for i in range(self.precision + 1))


def _check_branch_field(f: Poly) -> FiniteField:
    field = f.field
    if not isinstance(field, FiniteField) or field.k != 1:
        raise ValueError("branch expansion works over prime fields F_p")
    n = f.degree
    if n % field.p == 0:
        raise WildCharacteristic(f"p = {field.p} divides deg f = {n}")
    if (field.p - 1) % n:
        raise ValueError(f"need n | p - 1 for the roots of unity "
                         f"(n = {n}, p = {field.p})")
    return field


def solve_branch(f: Poly, c: FFElement, precision: int) -> LaurentBranch:
    """Determine the tail of x_c term by term.

    The coefficient of s^(n-1-i) in f(x_c) - s^n is linear in a_{-i} with
    slope n * lc(f) * c^(n-1), nonzero by tameness, so each step is a
    single exact division.
    """
    field = _check_branch_field(f)
    n = f.degree
    c = field.coerce(c)
    if c ** n != f.lc():
        raise BadLeadingCoefficient(f"c^{n} = {c ** n} != lc = {f.lc()}")
    slope = field.coerce(n) * f.lc() * c ** (n - 1)
    slope_inv = slope.inverse()
    tail: list[FFElement] = []
    x = LaurentPoly.make(field, {1: c})
    s_n = LaurentPoly.make(field, {n: field.one})
    for i in range(precision + 1):
        defect = _eval_poly_at(f, x) - s_n
        a = -defect.coeff(n - 1 - i) * slope_inv
        tail.append(a)
        if a:
            x = x + LaurentPoly.make(field, {-i: a})
    branch = LaurentBranch(poly=f, c=c, precision=precision, tail=tuple(tail))
    if not branch.verify():
        raise InternalInconsistency("branch iteration failed to verify")
    return branch


def branch_leading_coefficients(f: Poly) -> tuple[FFElement, ...]:
    """All c in F_p with c^n = lc(f), in integer order; there are exactly
    n of them when lc(f) is an n-th power, otherwise none."""
    field = _check_branch_field(f)
    n = f.degree
    roots = tuple(c for c in field.elements() if c and c ** n == f.lc())
    if len(roots) != n:
        raise BadLeadingCoefficient(
            f"lc = {f.lc()} has {len(roots)} n-th roots in {field}, "
            f"need {n} (lc must be an n-th power)")
    return roots


def primitive_root_of_unity(field: FiniteField, n: int) -> FFElement:
    """The least element (by integer encoding) of multiplicative order
    exactly n."""
    for t in field.elements():
        if t and t.multiplicative_order() == n:
            return t
    raise ValueError(f"no element of order {n} in {field}")


@dataclass
class BranchSystem:
    poly: Poly
    precision: int
    theta: FFElement
    branches: tuple[LaurentBranch, ...]
    cycle: Permutation  # on branch indices, induced by s -> theta s


def monodromy_at_infinity(f: Poly, precision: int) -> BranchSystem:
    """Solve all n branches and read off the permutation induced by
    s -> theta s.

    The substituted series x_c(theta s) starts with (theta c) s, and by
    uniqueness of branch tails must equal x_{theta c}(s); this identity is
    checked coefficient by coefficient, and the resulting permutation
    c -> theta c is verified to be a single n-cycle.
    """
    field = _check_branch_field(f)
    n = f.degree
    roots = branch_leading_coefficients(f)
    theta = primitive_root_of_unity(field, n)
    branches = tuple(solve_branch(f, c, precision) for c in roots)
    index_of = {b.c: i for i, b in enumerate(branches)}
    images = []
    for i, b in enumerate(branches):
        target = index_of[theta * b.c]
        moved = b.series().substitute_scaled_s(theta)
        if moved != branches[target].series():
            raise InternalInconsistency(
                "substituted branch does not match the branch of theta*c")
        images.append(target)
    cycle = Permutation(tuple(images))
    if len(cycle.cycles()) != 1 or len(cycle.cycles()[0]) != n:
        raise InternalInconsistency("branch permutation is not an n-cycle")
    return BranchSystem(poly=f, precision=precision, theta=theta,
                        branches=branches, cycle=cycle)
