from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qreflect.errors import ParseError
from qreflect.expr import parse_assignment, parse_constant, parse_scalar, tokenize
from qreflect.field import GaussianRational, Monomial, Scalar, SymbolicDomain
from qreflect.rmatrix import b_entry, c_entry

D = SymbolicDomain()


def test_tokens():
    assert [t[1] for t in tokenize("u*q^-1")] == ["u", "*", "q", "^", "-", 1, None]


def test_kernel_entries():
    u = Monomial.var("u")
    assert parse_scalar("(u - 1/u)/(u*q - 1/(u*q))") == b_entry(u, D)
    assert parse_scalar("(q-q^-1)/(u*q-1/(u*q))") == c_entry(u, D)


def test_precedence():
    assert parse_scalar("-u^2") == -(D.var("u") ** 2)
    assert parse_scalar("2*3+4") == 10
    assert parse_scalar("1/2/2") == Fraction(1, 4)
    assert parse_scalar("--3") == 3


def test_constants():
    assert parse_constant("3/7") == Fraction(3, 7)
    assert parse_constant("-2+i") == GaussianRational(-2, 1)
    assert parse_constant("(5/3)^-2") == Fraction(9, 25)
    assert parse_constant("i^2") == -1


def test_assignment():
    assert parse_assignment("u = 3/7") == ("u", Fraction(3, 7))
    assert parse_assignment("kp=2") == ("kp", 2)


@pytest.mark.parametrize(
    "text",
    ["", "   ", "u +", "u ** 2", "u^v", "u^(2)", "1/0", "0^-1", "(u", "u)", "3 $ 4", "u^2.5"],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_scalar(text)


@pytest.mark.parametrize("text", ["u=1/u", "3=4", "i=2", "u", "u=v"])
def test_assignment_errors(text):
    with pytest.raises(ParseError):
        parse_assignment(text)


@st.composite
def scalars(draw):
    s = Scalar.zero()
    for _ in range(draw(st.integers(1, 3))):
        c = GaussianRational(draw(st.integers(-5, 5)), draw(st.integers(-2, 2)))
        m = Scalar.one()
        for v in ("u", "q"):
            m = m * Scalar.var(v) ** draw(st.integers(-2, 2))
        s = s + m * c
    if draw(st.booleans()):
        s = s / (Scalar.var("u") + draw(st.integers(1, 3)))
    return s


@given(scalars())
def test_printed_scalars_parse_back(s):
    assert parse_scalar(str(s)) == s
