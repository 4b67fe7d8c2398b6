import pytest

from qreflect.algebras import AlgebraParams
from qreflect.constructions import (
    OnsagerParams,
    coaction_delta,
    coaction_matches_dressing,
    coaction_oracle,
    dress_K,
    dressing_oracle,
    miki_identification,
    miki_K,
    miki_onsager_crosscheck,
    onsager_currents,
    onsager_relations,
    quantum_current,
    transfer_commutator,
    transfer_function,
    verify_coaction,
    verify_dressing,
    verify_miki_extension,
    verify_miki_scalar_RE,
    verify_onsager_realization,
    verify_qcurrent,
)
from qreflect.field import Monomial, SymbolicDomain
from qreflect.ncalg import NCPoly, sym
from qreflect.report import FAIL, PASS, REPORTED
from qreflect.rmatrix import corrupted_kernel
from qreflect.sampling import Strategy
from qreflect.suites import parse_kinds
from qreflect.tensor import Mat

D = SymbolicDomain()
u, a, q, w = (Monomial.var(n) for n in ("u", "a", "q", "w"))
S = Strategy.sampled(7, 2)
ALL = parse_kinds("all")


def failing(rep):
    return [c.name for c in rep.checks if c.status == FAIL]


def phi(sign, arg):
    return sym("Phi", 1 if sign == "+" else 2, 0, arg)


# -- Miki-type K ------------------------------------------------------------


def test_miki_entries():
    K = miki_K(u, domain=D)
    left, right = u * a, a / (u * q)
    assert K[0, 1] == NCPoly.word((phi("+", left), phi("+", right)), D.i)
    assert K[0, 0] == NCPoly.word((phi("+", left), phi("-", right)), -D.i)
    assert K[1, 0] == NCPoly.word((phi("-", left), phi("-", right)), -D.i)


def test_miki_scalar_reflection():
    assert verify_miki_scalar_RE().status == PASS
    assert verify_miki_scalar_RE(S).status == PASS


def test_miki_scalar_reflection_needs_M():
    assert verify_miki_scalar_RE(S, use_M=False).status == FAIL
    assert verify_miki_scalar_RE(S, kernel=corrupted_kernel).status == FAIL


def test_identifications():
    ids = miki_identification(AlgebraParams(k=1))
    assert ids == {"Kpp": w / q, "Kmm": w * q, "Kpm": w, "Kmp": w}
    printed = miki_identification(AlgebraParams(k=1), identification="printed")
    assert printed["Kpp"] == w * q


@pytest.mark.parametrize("k", [1, 2])
def test_extension_with_quantized_g(k):
    rep = verify_miki_extension(k, S)
    assert rep.status == PASS
    assert len(rep.checks) == 16


def test_extension_printed_identification_fails():
    bad = failing(verify_miki_extension(1, S, "printed"))
    assert len(bad) == 10
    assert "(++,++)" not in bad and "(++,+-)" in bad


def test_extension_free_g_is_irreducible():
    rep = verify_miki_extension(None, Strategy.symbolic())
    assert rep.status == FAIL
    first = rep.check("(++,+-)")
    assert first.residual["irreducible_prefactor"] is True
    assert len(first.residual["prefactor_classes"]) == 2


# -- q-Onsager currents -----------------------------------------------------


def test_onsager_relation_count_and_order():
    labels = [r.label for r in onsager_relations()]
    assert len(labels) == 18
    assert labels[:3] == ["ec1+", "ec1-", "ec3"]
    assert labels[-1] == "ec16"


def test_onsager_current_shapes():
    cur = onsager_currents(domain=D)
    assert sorted(cur) == ["G+", "G-", "W+", "W-"]
    word = (phi("+", u * a), phi("+", a / (u * q)))
    km, qq = D.var("km"), D.var("q")
    assert cur["G+"].terms[(word, ())] == D.i * km * (qq + 1 / qq)
    rho = D.var("kp") * km * (qq + 1 / qq) ** 2
    assert cur["G+"].terms[((), ())] == -rho / (qq - 1 / qq)


def test_onsager_realization():
    assert verify_onsager_realization(strategy=S).status == PASS
    assert verify_onsager_realization().status == PASS


@pytest.mark.parametrize("params", [OnsagerParams(rho="rho"), OnsagerParams(kp_sign=-1)], ids=["rho", "kp_sign"])
def test_onsager_coupling_controls(params):
    assert failing(verify_onsager_realization(params, S)) == ["ec4+", "ec4-", "ec5+", "ec5-"]


def test_miki_onsager_crosscheck():
    assert miki_onsager_crosscheck().status == PASS
    assert miki_onsager_crosscheck(OnsagerParams(kp_sign=-1)).status == FAIL


# -- dressing, quantum current, coaction ------------------------------------


def test_dressed_matrix_is_a_two_by_two_of_words():
    K = dress_K("Kpp", u, domain=D)
    assert K.legs == (1,)
    assert all(not p.is_zero() for _, _, p in K.entries())


def test_dressing_default_pairs():
    rep = verify_dressing(strategy=Strategy.symbolic())
    assert rep.status == PASS and len(rep.checks) == 2


def test_dressing_all_pairs_sampled():
    assert verify_dressing(ALL, strategy=Strategy.sampled(3, 1)).status == PASS


def test_dressing_with_nontrivial_seed():
    def K0(arg, space, d):
        x, xi = d.mono(arg), d.var("a")
        return Mat((space,), [[xi * x - 1 / (xi * x), d.zero], [d.zero, xi / x - x / xi]])

    assert verify_dressing(K0=K0, strategy=S).status == PASS


def test_dressing_controls():
    assert failing(verify_dressing(strategy=S, mutate="shift")) == ["(++,++)", "(++,+-)"]


def test_dressing_oracle():
    rep = dressing_oracle(Strategy.sampled(0, 3))
    assert rep.status == PASS
    assert dressing_oracle(Strategy.sampled(0, 1), corrupted_kernel).status == FAIL


def test_quantum_current():
    assert quantum_current(u, domain=D).legs == (1,)
    assert verify_qcurrent(strategy=S).status == PASS
    assert verify_qcurrent("printed", S).status == FAIL
    assert verify_qcurrent(strategy=S, kernel=corrupted_kernel).status == FAIL


def test_coaction_default_pair():
    rep = verify_coaction(strategy=S)
    assert rep.status == PASS


def test_coaction_mixed_pairs_sampled():
    pairs = parse_kinds("pp-pm,pm-mp,mm-pp")
    for variant in ("B", "TB"):
        assert verify_coaction(pairs, variant, Strategy.sampled(2, 1)).status == PASS


def test_coaction_printed_shift_fails():
    pairs = parse_kinds("pp-pm,pp-pp")
    assert failing(verify_coaction(pairs, "B", Strategy.sampled(2, 1), mixed_shift="printed")) == ["(++,+-)"]


def test_coaction_controls():
    assert verify_coaction(strategy=S, mutate="shift").status == FAIL
    assert coaction_oracle(Strategy.sampled(0, 1), corrupted_kernel).status == FAIL


def test_coaction_delta_legs():
    m = coaction_delta("Kpp", u, domain=D)
    assert m.legs == (1,)
    words = {wd for _, _, p in m.entries() for wd, _ in p.terms}
    assert {s[0] for wd in words for s in wd} == {1, 2}


def test_coaction_specializes_to_dressing():
    assert coaction_matches_dressing().status == PASS
    assert coaction_oracle(Strategy.sampled(0, 1)).status == PASS


# -- transfer -------------------------------------------------------------------


def test_transfer_report_is_exploratory():
    rep = transfer_commutator(strategy=S)
    statuses = {c.name: (c.status, c.asserted) for c in rep.checks}
    assert statuses["[t(u),t(v)] trace"] == (REPORTED, False)
    assert statuses["[t(u),t(u)] M-trace"] == (PASS, True)
    assert rep.passed


def test_transfer_report_is_deterministic():
    one = transfer_commutator(strategy=S).to_json(timings=False)
    two = transfer_commutator(strategy=S).to_json(timings=False)
    assert one == two


def test_transfer_function_is_a_trace():
    t = transfer_function("trace", u, D)
    K = miki_K(u, domain=D)
    assert t == K[0, 0] + K[1, 1]
