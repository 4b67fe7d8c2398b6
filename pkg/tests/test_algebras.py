import pytest
from hypothesis import given
from hypothesis import strategies as st

from qreflect.algebras import (
    KINDS,
    RELATION_SETS,
    TYPO_NOTE,
    AlgebraParams,
    Realization,
    compare_B_TB_under_crossing,
    is_homogeneous,
    list_relations,
    relation_QCRE,
    relations_Aq_ext,
    relations_Bq_ext,
    relations_re,
    relations_TBq_ext,
    residual_summary,
    swap_signs,
    tb_transform,
    verify_relation_set,
)
from qreflect.errors import ConfigError, MissingRealization, MissingRule
from qreflect.field import Monomial
from qreflect.ncalg import NCMat, NCPoly, sym
from qreflect.report import FAIL, PASS
from qreflect.sampling import Strategy

B = relations_Bq_ext()


def test_relation_counts():
    assert len(B) == 16
    assert len(relations_TBq_ext()) == 16
    assert len(relations_Aq_ext()) == 4
    assert len(relation_QCRE()) == 1
    assert sorted(RELATION_SETS) == sorted(
        ["ybe", "ybalg", "rll", "re", "re2", "ext-b", "ext-b-literal", "ext-tb", "qcre", "qcre-printed"]
    )


def test_every_family_pair_appears_once():
    pairs = [r.families for r in B]
    assert len(set(pairs)) == 16
    assert {f for p in pairs for f in p} == set(KINDS)


def test_labels_and_rendering():
    assert B.labels()[:2] == ["(++,++)", "(++,+-)"]
    assert B.get("(++,+-)").render() == (
        "(++,+-): R~12(u*v^-1*g^-1) Kpp_1(u) R~21(u*v*g) Kpm_2(v) = Kpm_2(v) R~12(u*v*g^-1) Kpp_1(u) R~21(u*v^-1*g)"
    )
    with pytest.raises(KeyError):
        B.get("(00,00)")
    assert TYPO_NOTE in B.render()


def test_literal_variant_keeps_untilded_factor():
    lit = relations_Bq_ext(literal=True).get("(++,--)").render()
    assert " R12(u*v*g^2) " in lit
    assert " R12(" not in B.get("(++,--)").render()


def test_quantization_substitutes_g():
    rs = relations_Bq_ext(AlgebraParams(k=1))
    assert "g" not in rs.get("(++,+-)").render().replace("Kpp", "")
    assert "q^-1" in rs.get("(++,+-)").render()
    assert AlgebraParams(k=0).g_value() == Monomial.one()


def test_qcre_forms():
    assert relation_QCRE().order == "family"
    assert "gamma^4" in relation_QCRE(form="printed").relations[0].render()
    with pytest.raises(ConfigError):
        relation_QCRE(form="other")


def test_list_relations():
    assert list_relations("rll").name == "Aq_ext"
    with pytest.raises(ConfigError):
        list_relations("nope")


@given(st.sampled_from(B.relations))
def test_swap_signs_is_an_involution(rel):
    assert swap_signs(swap_signs(rel)) == rel
    assert swap_signs(rel).label in B.labels()


@given(st.sampled_from(B.relations))
def test_tb_transform_is_an_involution_on_crossed_factors(rel):
    once = tb_transform(rel)
    assert tb_transform(tb_transform(once)) == once
    assert is_homogeneous(once)
    # TB relations only use R12, possibly partially transposed
    for side in (once.lhs, once.rhs):
        assert all(f.spaces == (1, 2) for f in side if hasattr(f, "kind"))


def test_tb_relations_are_transformed_b_relations():
    assert [tb_transform(r) for r in B] == list(relations_TBq_ext())


def test_residual_summary():
    u = Monomial.var("u")
    w = (sym("Kpp", 1, 1, u),)
    assert residual_summary([NCPoly()]) == {}
    s = residual_summary([NCPoly.word(w, 1, (("f", u, 1),)) + NCPoly.word(w, 1, ())])
    assert s["irreducible_prefactor"] is True
    assert s["nonzero_terms"] == 2
    assert s["prefactor_classes"] == ["1", "f(u)^1"]


def test_identity_solves_simple_reflection():
    ident = Realization({"K0": lambda arg, space, d: NCMat.identity((space,), d.one)})
    rep = verify_relation_set(relations_re("kernel"), ident)
    assert rep.passed


def test_missing_realization():
    with pytest.raises(MissingRealization):
        verify_relation_set(relations_re("kernel"), Realization({}))


def test_generic_realization_needs_rules():
    with pytest.raises(MissingRule):
        verify_relation_set(relations_re("kernel"), Realization({}, generic=("K0",)), strategy=Strategy.sampled(0, 1))


def test_b_and_tb_agree_under_crossing():
    rep = compare_B_TB_under_crossing(Strategy.sampled(5, 2))
    assert rep.status == PASS
    assert len(rep.checks) == 16


def test_b_and_tb_differ_without_crossing():
    rep = compare_B_TB_under_crossing(Strategy.sampled(5, 1), crossing=False)
    assert all(c.status == FAIL for c in rep.checks)
