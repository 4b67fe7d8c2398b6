import pytest
from hypothesis import given
from hypothesis import strategies as st

from qreflect.errors import MissingRule, NonConfluent, StepLimitExceeded
from qreflect.field import Monomial, SymbolicDomain
from qreflect.ncalg import (
    NCPoly,
    Rewriter,
    RuleBook,
    check_confluence,
    generator_matrix,
    relation_FZ,
    relation_sides,
    sym,
    word_str,
)
from qreflect.prefactor import Prefactor
from qreflect.report import FAIL, PASS
from qreflect.rmatrix import b_entry, c_entry, corrupted_kernel

D = SymbolicDomain()
u, v, w = (Monomial.var(n) for n in ("u", "v", "w"))


@pytest.fixture(scope="module")
def fz():
    return RuleBook([relation_FZ()], D, name="FZ")


def phi(sign, arg, leg=0):
    return sym("Phi", 1 if sign == "+" else 2, 0, arg, leg)


def test_word_rendering():
    assert word_str((phi("+", v), phi("-", u))) == "Phi+(v) Phi-(u)"
    assert word_str(()) == "1"
    assert word_str((sym("Lp", 1, 2, u, leg=2),)) == "Lp12(u)@2"


def test_fz_rule_same_components(fz):
    out = Rewriter(fz).reduce(NCPoly.word((phi("+", v), phi("+", u))))
    f = Prefactor.f_of(u / v).key
    assert out == NCPoly.word((phi("+", u), phi("+", v)), 1, f)


def test_fz_rule_mixed_components(fz):
    out = Rewriter(fz).reduce(NCPoly.word((phi("-", v), phi("+", u))))
    f = Prefactor.f_of(u / v).key
    x = u / v
    expected = NCPoly.word((phi("+", u), phi("-", v)), b_entry(x, D), f) + NCPoly.word(
        (phi("-", u), phi("+", v)), c_entry(x, D), f
    )
    assert out == expected


def test_normal_word_is_fixed(fz):
    p = NCPoly.word((phi("+", u), phi("-", v)))
    assert Rewriter(fz).reduce(p) == p


def test_inverse_pair_contracts():
    book = RuleBook([], D)
    p = NCPoly.word((sym("Lp", 1, 1, u), sym("LpInv", 1, 1, u))) + NCPoly.word(
        (sym("Lp", 1, 2, u), sym("LpInv", 2, 1, u))
    )
    assert Rewriter(book).reduce(p) == NCPoly.const(1)
    off = NCPoly.word((sym("Lp", 1, 1, u), sym("LpInv", 1, 2, u))) + NCPoly.word(
        (sym("Lp", 1, 2, u), sym("LpInv", 2, 2, u))
    )
    assert Rewriter(book).reduce(off).is_zero()


def test_missing_rule():
    book = RuleBook([], D)
    with pytest.raises(MissingRule):
        Rewriter(book).reduce(NCPoly.word((sym("Lp", 1, 1, v), sym("Lm", 1, 1, u))))


def test_step_limit(fz):
    word = (phi("+", w), phi("+", v), phi("-", u))
    with pytest.raises(StepLimitExceeded):
        Rewriter(fz, max_steps=1).reduce(NCPoly.word(word))


def test_unknown_strategy(fz):
    with pytest.raises(ValueError):
        Rewriter(fz, "middle")


def test_legs_commute():
    a, b = phi("+", v, leg=2), phi("+", u, leg=1)
    prod = NCPoly.symbol(a) * NCPoly.symbol(b)
    assert prod == NCPoly.symbol(b) * NCPoly.symbol(a)
    assert prod == NCPoly.word((b, a))


def test_two_leg_word_reduces_per_leg(fz):
    left = NCPoly.word((phi("+", v, 1), phi("-", u, 1)))
    right = NCPoly.word((phi("-", v, 2), phi("+", u, 2)))
    rw = Rewriter(fz)
    assert rw.reduce(left * right) == rw.reduce(left) * rw.reduce(right)


def test_derived_rule_satisfies_its_relation(fz):
    realize = lambda slot, fam, arg, space: generator_matrix(fam, arg, space)
    lhs, rhs = relation_sides(relation_FZ(), {"u": u, "v": v}, realize, D)
    rw = Rewriter(fz)
    for _, _, p in (lhs - rhs).entries():
        assert rw.reduce(p).is_zero()


def test_confluence():
    rep = check_confluence()
    assert rep.passed
    assert rep.checks[0].info["words"] == 8


def test_confluence_needs_three_arguments():
    with pytest.raises(ValueError):
        check_confluence(2)


def test_confluence_mutation():
    c = check_confluence(kernel=corrupted_kernel).checks[0]
    assert c.status == FAIL
    assert "Phi+(w) Phi+(v) Phi-(u)" in c.residual["witnesses"]
    with pytest.raises(NonConfluent):
        check_confluence(kernel=corrupted_kernel, strict=True)


def test_dump_is_deterministic(fz):
    out = Rewriter(fz).reduce(NCPoly.word((phi("-", v), phi("+", u))))
    assert out.dump() == (
        "Phi+(u) Phi-(v) | f(u*v^-1)^1 | (u^2*q - v^2*q)/(u^2*q^2 - v^2)\n"
        "Phi-(u) Phi+(v) | f(u*v^-1)^1 | (u*v*q^2 - u*v)/(u^2*q^2 - v^2)"
    )


@given(st.lists(st.sampled_from("+-"), min_size=4, max_size=4), st.permutations([u, v, w, u * v]))
def test_length4_words_are_confluent(signs, args):
    book = RuleBook([relation_FZ()], D)
    word = tuple(phi(s, a) for s, a in zip(signs, args))
    left = Rewriter(book, "leftmost").reduce(NCPoly.word(word))
    right = Rewriter(book, "rightmost").reduce(NCPoly.word(word))
    assert left == right
