from fractions import Fraction

import pytest

from rittlab.errors import FormatError
from rittlab.fields import GF, GF4, QQ
from rittlab.fixtures import FIXTURE_NAMES, fixture_text, load_fixture
from rittlab.formats import (parse_context_file, parse_cycles, parse_field_line,
                             parse_group_file, parse_poly_file,
                             parse_rational_file, parse_skew_file,
                             render_field, render_group_file, render_poly_file)
from rittlab.permgroup import Permutation
from rittlab.polyfield import Poly


class TestCycles:
    def test_multi_cycle(self):
        p = parse_cycles("(0 1 2 3 4 5)(7 8)", 9)
        assert p(5) == 0 and p(7) == 8 and p(6) == 6

    def test_identity(self):
        assert parse_cycles("()", 4).is_identity()

    def test_round_trip(self):
        p = Permutation.from_cycles(6, [(0, 3), (1, 4), (2, 5)])
        assert parse_cycles(p.cycle_string(), 6) == p

    def test_bad_input(self):
        with pytest.raises(FormatError):
            parse_cycles("(0 1) junk", 3)
        with pytest.raises(FormatError):
            parse_cycles("(0 9)", 3)
        with pytest.raises(FormatError):
            parse_cycles("(0 1)(1 2)", 3)


class TestGroupFile:
    def test_parse(self):
        G = parse_group_file("degree: 6\n"
                             "generators: (0 1 2 3 4 5), (1 5)(2 4)\n")
        assert G.order == 12

    def test_comments_and_blanks(self):
        G = parse_group_file("# dihedral\n\ndegree: 3\ngenerators: (0 1 2)\n")
        assert G.order == 3

    def test_render_round_trip(self):
        G = parse_group_file("degree: 4\ngenerators: (0 1 2 3), (0 1)\n")
        assert parse_group_file(render_group_file(G)) == G

    def test_missing_degree(self):
        with pytest.raises(FormatError):
            parse_group_file("generators: (0 1)\n")


class TestContextFile:
    def test_stabilizer_spec(self):
        ctx = parse_context_file(
            "degree: 3\ngenerators: (0 1 2), (0 1)\nH: stabilizer 0\n")
        assert ctx.H.order == 2 and ctx.A is None

    def test_generators_spec(self):
        ctx = parse_context_file(
            "degree: 6\ngenerators: (0 1 2 3 4 5), (1 5)(2 4)\n"
            "H: generators (1 5)(2 4)\nA: generators (0 1 2 3 4 5)\n")
        assert ctx.H.order == 2 and ctx.A.order == 6

    def test_all_fixture_files_parse(self):
        for name in FIXTURE_NAMES:
            ctx = load_fixture(name)
            assert ctx.name == name
            assert ctx.G.order % ctx.H.order == 0

    def test_fixture_text_is_stable(self):
        assert "degree: 6" in fixture_text("d6_x6")

    def test_invalid_context_rejected(self):
        with pytest.raises(FormatError):
            parse_context_file(
                "degree: 4\ngenerators: (0 1)\nH: stabilizer 0\n")


class TestFieldLine:
    def test_q(self):
        assert parse_field_line("Q") is QQ

    def test_prime(self):
        assert parse_field_line("F7") == GF(7)

    def test_extension_with_modulus(self):
        field = parse_field_line("F2^2 mod 2:1 1:1 0:1")
        assert field == GF4

    def test_builtin_extension(self):
        assert parse_field_line("F2^2") == GF4

    def test_render_round_trip(self):
        for field in (QQ, GF(7), GF4, GF(3, 2)):
            assert parse_field_line(render_field(field)) == field

    def test_unknown(self):
        with pytest.raises(FormatError):
            parse_field_line("R")


class TestPolyFile:
    def test_rational_poly(self):
        f = parse_poly_file("field: Q\npoly: 6:1 4:-6 2:9 0:-2\n")
        assert f == Poly.from_terms(QQ, {6: 1, 4: -6, 2: 9, 0: -2})

    def test_fraction_coefficients(self):
        f = parse_poly_file("field: Q\npoly: 2:1/2 0:-3/4\n")
        assert f.coeff(2) == Fraction(1, 2) and f.coeff(0) == Fraction(-3, 4)

    def test_finite_field_encodings(self):
        f = parse_poly_file("field: F2^2 mod 2:1 1:1 0:1\npoly: 1:2 0:3\n")
        assert f.coeff(1) == GF4.from_int(2)

    def test_negative_coefficient_is_additive_inverse(self):
        f = parse_poly_file("field: F7\npoly: 1:-1\n")
        assert f.coeff(1) == GF(7).coerce(6)

    def test_render_round_trip(self):
        f = Poly.from_terms(QQ, {5: Fraction(2, 3), 1: -4})
        assert parse_poly_file(render_poly_file(f)) == f

    def test_repeated_degree_rejected(self):
        with pytest.raises(FormatError):
            parse_poly_file("field: Q\npoly: 2:1 2:3\n")


class TestSkewAndRationalFiles:
    def test_skew(self):
        f = parse_skew_file("field: F2\nskew: 2:1 1:1\n")
        assert f.tau_degree == 2 and f.coeff(0) == GF(2).zero

    def test_skew_needs_finite_field(self):
        with pytest.raises(FormatError):
            parse_skew_file("field: Q\nskew: 1:1\n")

    def test_rational(self):
        f = parse_rational_file("field: F7\nnum: 2:1 0:1\nden: 1:1\n")
        assert f.num.degree == 2 and f.den.degree == 1

    def test_rational_reduces(self):
        f = parse_rational_file("field: Q\nnum: 2:2\nden: 1:2\n")
        assert f.num.terms_string() == "1:1" and f.den.terms_string() == "0:1"
