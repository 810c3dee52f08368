"""Parsers and renderers for the text file formats.

All formats are line based: ``key: value`` pairs, blank lines and lines
starting with ``#`` ignored.  Cycle notation is 0-indexed, the identity is
written ``()``.  Polynomial-style values are sparse ``degree:coefficient``
terms separated by spaces; rational coefficients may be ``num/den``, and
finite-field coefficients are nonnegative integer encodings (a negative
integer is read as the additive inverse of its absolute value).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional

from .additive import SkewPoly
from .chains import ChainContext
from .errors import FormatError
from .fields import GF, QQ, Field, FiniteField, Rationals
from .permgroup import Permutation, PermutationGroup, close, point_stabilizer
from .polyfield import Poly
from .ratfunc import RationalFunction

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    text = text.strip()
    if not text:
        raise FormatError("empty permutation")
    stripped = _CYCLE_RE.sub("", text).strip()
    if stripped:
        raise FormatError(f"stray characters in permutation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        body = body.strip()
        if not body:
            continue
        try:
            cycles.append([int(tok) for tok in body.split()])
        except ValueError as exc:
            raise FormatError(f"bad cycle {body!r}") from exc
    try:
        return Permutation.from_cycles(degree, cycles)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def parse_perm_list(text: str, degree: int) -> list[Permutation]:
    return [parse_cycles(part, degree) for part in text.split(",")]


def _key_value_lines(text: str) -> list[tuple[str, str]]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise FormatError(f"expected 'key: value', got {line!r}")
        key, value = line.split(":", 1)
        out.append((key.strip().lower(), value.strip()))
    return out


def parse_group_file(text: str) -> PermutationGroup:
    """degree: <n> / generators: <cycles>, <cycles>, ..."""
    degree: Optional[int] = None
    gens: Optional[list[Permutation]] = None
    for key, value in _key_value_lines(text):
        if key == "degree":
            degree = int(value)
        elif key == "generators":
            if degree is None:
                raise FormatError("degree must come before generators")
            gens = parse_perm_list(value, degree)
        else:
            raise FormatError(f"unknown key {key!r} in group file")
    if degree is None or gens is None:
        raise FormatError("group file needs degree and generators")
    return close(degree, tuple(gens))


def render_group_file(G: PermutationGroup) -> str:
    return f"degree: {G.degree}\ngenerators: {G.generator_string()}\n"


def parse_context_file(text: str, name: str = "context") -> ChainContext:
    """Group file plus 'H: stabilizer <pt>' or 'H: generators <cycles>'
    and an optional 'A: generators <cycles>'."""
    degree: Optional[int] = None
    gens = None
    h_spec = None
    a_spec = None
    for key, value in _key_value_lines(text):
        if key == "degree":
            degree = int(value)
        elif key == "generators":
            if degree is None:
                raise FormatError("degree must come before generators")
            gens = parse_perm_list(value, degree)
        elif key == "h":
            h_spec = value
        elif key == "a":
            a_spec = value
        else:
            raise FormatError(f"unknown key {key!r} in context file")
    if degree is None or gens is None or h_spec is None:
        raise FormatError("context file needs degree, generators and H")
    G = close(degree, tuple(gens))

    def subgroup_from(spec: str) -> PermutationGroup:
        words = spec.split(None, 1)
        if not words:
            raise FormatError("empty subgroup spec")
        if words[0] == "stabilizer":
            try:
                pt = int(words[1])
            except (IndexError, ValueError) as exc:
                raise FormatError(f"bad stabilizer spec {spec!r}") from exc
            return point_stabilizer(G, pt)
        if words[0] == "generators":
            if len(words) < 2:
                raise FormatError(f"bad generators spec {spec!r}")
            sub = close(degree, tuple(parse_perm_list(words[1], degree)))
            if not sub.is_subgroup_of(G):
                raise FormatError("specified subgroup is not inside G")
            return sub
        raise FormatError(f"subgroup spec must start with 'stabilizer' or "
                          f"'generators': {spec!r}")

    H = subgroup_from(h_spec)
    A = subgroup_from(a_spec) if a_spec is not None else None
    try:
        return ChainContext(G, H, A, name=name)
    except ValueError as exc:
        raise FormatError(f"invalid context: {exc}") from exc


_FIELD_RE = re.compile(r"^F(\d+)(?:\^(\d+))?$")


def parse_field(token: str, modulus_terms: Optional[str] = None) -> Field:
    token = token.strip()
    if token == "Q":
        return QQ
    m = _FIELD_RE.match(token)
    if not m:
        raise FormatError(f"unknown field {token!r}")
    p = int(m.group(1))
    k = int(m.group(2)) if m.group(2) else 1
    try:
        if modulus_terms is None:
            return GF(p, k)
        terms = {}
        for tok in modulus_terms.split():
            d, c = _split_term(tok)
            terms[int(d)] = int(c)
        mod = [0] * (max(terms) + 1)
        for d, c in terms.items():
            mod[d] = c
        return GF(p, k, tuple(mod))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def _split_term(tok: str) -> tuple[str, str]:
    if ":" not in tok:
        raise FormatError(f"term {tok!r} is not 'degree:coefficient'")
    d, c = tok.split(":", 1)
    return d, c


def parse_field_line(value: str) -> Field:
    """'Q' or 'F7' or 'F2^2 mod 2:1 1:1 0:1'."""
    if " mod " in value:
        token, modulus = value.split(" mod ", 1)
        return parse_field(token, modulus)
    return parse_field(value)


def render_field(field: Field) -> str:
    if isinstance(field, Rationals):
        return "Q"
    if field.k == 1:
        return f"F{field.p}"
    mod = " ".join(f"{d}:{c}" for d, c in
                   sorted(enumerate(field.modulus), key=lambda t: -t[0]) if c)
    return f"F{field.p}^{field.k} mod {mod}"


def _parse_scalar(field: Field, text: str):
    text = text.strip()
    try:
        if isinstance(field, Rationals):
            return Fraction(text)
        n = int(text)
    except ValueError as exc:
        raise FormatError(f"bad coefficient {text!r}") from exc
    if n < 0:
        return field.coerce(n)
    return field.from_int(n)


def parse_terms(field: Field, text: str) -> dict:
    terms: dict[int, object] = {}
    for tok in text.split():
        d, c = _split_term(tok)
        try:
            deg = int(d)
        except ValueError as exc:
            raise FormatError(f"bad degree in {tok!r}") from exc
        if deg < 0:
            raise FormatError(f"negative degree in {tok!r}")
        if deg in terms:
            raise FormatError(f"degree {deg} repeated")
        terms[deg] = _parse_scalar(field, c)
    return terms


def parse_poly_file(text: str) -> Poly:
    """field: <field> / poly: <deg>:<coeff> ..."""
    field: Optional[Field] = None
    poly: Optional[Poly] = None
    for key, value in _key_value_lines(text):
        if key == "field":
            field = parse_field_line(value)
        elif key == "poly":
            if field is None:
                raise FormatError("field must come before poly")
            poly = Poly.from_terms(field, parse_terms(field, value))
        else:
            raise FormatError(f"unknown key {key!r} in polynomial file")
    if poly is None:
        raise FormatError("polynomial file needs field and poly lines")
    return poly


def render_poly_file(f: Poly) -> str:
    return f"field: {render_field(f.field)}\npoly: {f.terms_string()}\n"


def parse_skew_file(text: str) -> SkewPoly:
    """field: F<p>[^k] / skew: <i>:<coeff> ... (coefficients of tau^i)."""
    field = None
    skew = None
    for key, value in _key_value_lines(text):
        if key == "field":
            field = parse_field_line(value)
            if not isinstance(field, FiniteField):
                raise FormatError("skew polynomials need a finite field")
        elif key == "skew":
            if field is None:
                raise FormatError("field must come before skew")
            terms = parse_terms(field, value)
            coeffs = [field.zero] * (max(terms) + 1)
            for i, c in terms.items():
                coeffs[i] = c
            skew = SkewPoly.make(field, coeffs)
        else:
            raise FormatError(f"unknown key {key!r} in skew file")
    if skew is None:
        raise FormatError("skew file needs field and skew lines")
    return skew


def parse_rational_file(text: str) -> RationalFunction:
    """field: <field> / num: <terms> / den: <terms>."""
    field = None
    num = None
    den = None
    for key, value in _key_value_lines(text):
        if key == "field":
            field = parse_field_line(value)
        elif key in ("num", "den"):
            if field is None:
                raise FormatError("field must come before num/den")
            poly = Poly.from_terms(field, parse_terms(field, value))
            if key == "num":
                num = poly
            else:
                den = poly
        else:
            raise FormatError(f"unknown key {key!r} in rational file")
    if field is None or num is None or den is None:
        raise FormatError("rational file needs field, num and den lines")
    if den.is_zero():
        raise FormatError("zero denominator")
    return RationalFunction.make(num, den)
