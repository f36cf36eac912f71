from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lefkit.errors import NonPrimeModulus, NotHomogeneous, ParseError
from lefkit.fields import GF, QQ
from lefkit.parsing import parse_generators, parse_poly, parse_ring, split_top_level
from lefkit.polyring import Form, monomial_basis


def test_parse_ring():
    R = parse_ring("QQ[x,y,z]")
    assert R.num_vars == 3 and R.field == QQ and R.var_names == ("x", "y", "z")
    G = parse_ring("GF(2)[x1,x2,x3]")
    assert G.field == GF(2)
    with pytest.raises(NonPrimeModulus):
        parse_ring("GF(4)[x]")


@pytest.mark.parametrize("text", ["QQ[x,x]", "ZZ[x]", "QQ[x,1y]", "QQ[x"])
def test_parse_ring_errors(text):
    with pytest.raises(ParseError):
        parse_ring(text)


def test_parse_poly_examples():
    R = parse_ring("QQ[x1,x2,x3]")
    f = parse_poly(R, "x1^2*x2^2 + x1^2*x3^2")
    assert f.degree == 4 and len(f.terms) == 2
    assert parse_poly(R, "2 x1 x2") == parse_poly(R, "2*x1*x2")
    assert parse_poly(R, "(x1 + x2)^2") == parse_poly(R, "x1^2 + 2*x1*x2 + x2^2")
    assert parse_poly(R, "x1/2").coefficient((1, 0, 0)) == Fraction(1, 2)
    assert parse_poly(R, "3/4*x1").coefficient((1, 0, 0)) == Fraction(3, 4)


def test_not_homogeneous():
    R = parse_ring("QQ[x,y,z]")
    with pytest.raises(NotHomogeneous):
        parse_poly(R, "x + x^2")


def test_sign_in_char_two():
    G = parse_ring("GF(2)[x,y,z]")
    assert parse_poly(G, "-x*y") == parse_poly(G, "x*y")


def test_parse_error_position():
    R = parse_ring("QQ[x,y]")
    with pytest.raises(ParseError) as info:
        parse_poly(R, "x + w")
    assert info.value.position == 4
    assert "^" in str(info.value)


def test_split_top_level():
    assert split_top_level("x^2, (x+y)*(x, y)") == ["x^2", "(x+y)*(x, y)"]
    R = parse_ring("QQ[x,y]")
    assert len(parse_generators(R, "x^2, y^2, (x+y)^2")) == 3


coeffs = st.integers(-20, 20) | st.fractions(max_denominator=9).filter(lambda q: abs(q) < 20)


@given(st.lists(st.tuples(st.sampled_from(monomial_basis(3, 3)), coeffs), min_size=1, max_size=6))
@settings(max_examples=60)
def test_print_parse_roundtrip(pairs):
    R = parse_ring("QQ[x1,x2,x3]")
    terms = {}
    for m, c in pairs:
        terms[m] = terms.get(m, 0) + c
    f = Form(R, 3, terms)
    if not f:
        return
    text = str(f)
    assert parse_poly(R, text) == f
    assert str(parse_poly(R, text)) == text
