"""Acceptance criteria, one line each in the terminal summary.

Two criteria are stated for forms of a relation that do not hold: the sign of
the central shift in the Miki-type identification, and the sandwich arguments
of the quantum-current exchange relation.  Each runs twice.  The literal form
is a strict xfail and prints a FAIL line.  The corrected form must pass.
"""

import time

import pytest

from conftest import ACCEPTANCE_LINES
from qreflect.algebras import compare_B_TB_under_crossing
from qreflect.constructions import (
    OnsagerParams,
    coaction_matches_dressing,
    dressing_oracle,
    transfer_commutator,
    verify_coaction,
    verify_dressing,
    verify_miki_extension,
    verify_miki_scalar_RE,
    verify_onsager_realization,
    verify_qcurrent,
)
from qreflect.ncalg import check_confluence
from qreflect.report import FAIL, PASS
from qreflect.rmatrix import check_crossing, check_ratios, check_unitarity, check_weak_crossing, check_ybe
from qreflect.sampling import Strategy
from qreflect.suites import ASSERTED, MUTATIONS, RunConfig, run_suite
from qreflect.uqsl2 import check_dj_relations, check_intertwiner

SYM = Strategy.symbolic()


class Criterion:
    def __init__(self, n, title, limit):
        self.n, self.title, self.limit = n, title, limit
        self.notes = []

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def note(self, text):
        self.notes.append(text)

    def __exit__(self, exc_type, exc, tb):
        dt = time.perf_counter() - self.t0
        ok = exc_type is None and dt < self.limit
        if exc_type is None and not ok:
            self.note(f"over the {self.limit:g}s limit")
        if exc_type is AssertionError and str(exc):
            self.note(str(exc).splitlines()[0][:120])
        extra = f"; {'; '.join(self.notes)}" if self.notes else ""
        line = f"criterion {self.n:>2} {self.title:<44} {'PASS' if ok else 'FAIL'} ({dt:.1f}s{extra})"
        ACCEPTANCE_LINES.append((f"{self.n:02d}{self.title}", line))
        print(line)
        if exc_type is None:
            assert ok, line
        return False


def test_criterion_01_ybe():
    with Criterion(1, "Yang-Baxter equation", 5) as c:
        assert check_ybe(SYM).status == PASS
        sampled = check_ybe(Strategy.sampled(0, 20))
        assert sampled.status == PASS and sampled.info["evaluations"] == 20
        c.note("symbolic and 20 points")


def test_criterion_02_unitarity():
    with Criterion(2, "unitarity and inverse", 1):
        checks = {ch.name: ch.status for ch in check_unitarity(SYM)}
        assert checks["unitarity"] == PASS and checks["inverse"] == PASS


def test_criterion_03_intertwiner():
    with Criterion(3, "intertwiner", 5):
        assert check_intertwiner(SYM).status == PASS


def test_criterion_04_drinfeld_jimbo():
    with Criterion(4, "Drinfeld-Jimbo relations", 1):
        assert check_dj_relations(SYM).status == PASS


def test_criterion_05_crossing():
    with Criterion(5, "crossing, weak crossing, ratios", 5) as c:
        cr = check_crossing(SYM)
        assert cr.status == PASS
        assert cr.info["cofactor_matches_f_relation"] and cr.info["prefactor_ratio_reduces"]
        assert check_weak_crossing(SYM).status == PASS
        ratios = check_ratios(4)
        assert ratios.status == PASS and ratios.info["n"] == [1, 2, 3, 4]
        c.note(f"transpose {cr.info['resolved_transpose']}")


def test_criterion_06_confluence():
    with Criterion(6, "confluence of length-3 words", 30) as c:
        rep = check_confluence(3)
        assert rep.passed
        c.note(f"{rep.checks[0].info['words']} words")


def test_criterion_07_miki_scalar_reflection():
    with Criterion(7, "Miki-type K, scalar reflection equation", 65):
        t0 = time.perf_counter()
        assert verify_miki_scalar_RE(SYM).passed
        assert time.perf_counter() - t0 < 60
        t0 = time.perf_counter()
        assert verify_miki_scalar_RE(Strategy.sampled(0, 3)).passed
        assert time.perf_counter() - t0 < 5


@pytest.mark.xfail(strict=True, reason="the shift sign as literally stated fails 10 of 16 relations")
def test_criterion_08_extension_literal():
    with Criterion(8, "central extension, literal identification", 600):
        for k in (1, 2):
            rep = verify_miki_extension(k, SYM, identification="printed")
            bad = [ch.name for ch in rep.checks if ch.status == FAIL]
            assert not bad, f"k={k}: {len(bad)} of 16 relations fail"


def test_criterion_08_extension_corrected():
    with Criterion(8, "central extension, corrected identification", 600) as c:
        for k in (1, 2):
            rep = verify_miki_extension(k, SYM)
            assert rep.passed and len(rep.checks) == 16
        control = verify_miki_extension(None, SYM)
        assert control.status == FAIL
        assert any(ch.residual.get("irreducible_prefactor") for ch in control.checks)
        c.note("k=1,2; free g irreducible")


def test_criterion_09_onsager():
    with Criterion(9, "q-Onsager realization", 600) as c:
        rep = verify_onsager_realization(OnsagerParams(), SYM)
        assert rep.passed and len(rep.checks) == 18
        bad = verify_onsager_realization(OnsagerParams(rho="rho"), SYM)
        assert bad.status == FAIL
        c.note("independent rho fails " + ",".join(ch.name for ch in bad.checks if ch.status == FAIL))


def test_criterion_10_dressing():
    with Criterion(10, "dressing", 600) as c:
        assert verify_dressing(strategy=SYM).passed
        oracle = dressing_oracle(Strategy.sampled(0, 10))
        assert oracle.passed
        c.note("oracle at 10 points")


def test_criterion_11_coaction():
    with Criterion(11, "coaction", 600):
        assert verify_coaction((("Kpp", "Kpp"),), "B", SYM).passed
        assert coaction_matches_dressing().status == PASS


@pytest.mark.xfail(strict=True, reason="the relation as literally stated does not hold for the quantum current")
def test_criterion_12_qcurrent_literal():
    with Criterion(12, "quantum current, literal relation", 120):
        assert verify_qcurrent("printed", SYM).passed, "literal relation has a nonzero residual"


def test_criterion_12_qcurrent_derived():
    with Criterion(12, "quantum current, derived relation", 120):
        assert verify_qcurrent("derived", SYM).passed


def test_criterion_13_b_vs_tb():
    with Criterion(13, "B and TB related by crossing", 60) as c:
        rep = compare_B_TB_under_crossing(SYM)
        assert rep.passed and len(rep.checks) == 16
        c.note("f-normalized, relation by relation")


def test_criterion_14_transfer_report():
    with Criterion(14, "transfer report determinism", 60):
        strat = Strategy.sampled(0, 3)
        first = transfer_commutator(strategy=strat)
        second = transfer_commutator(strategy=strat)
        assert first.to_json(timings=False) == second.to_json(timings=False)
        assert {"[t(u),t(v)] trace", "[t(u),t(v)] M-trace"} <= {ch.name for ch in first.checks}


def test_criterion_15_mutations():
    with Criterion(15, "mutation controls", 600) as c:
        count = 0
        survivors = []
        for name in ASSERTED:
            for mutation in MUTATIONS[name]:
                rep = run_suite(RunConfig(name, Strategy.sampled(42, 2), mutate=mutation))
                count += 1
                if rep.passed:
                    survivors.append(f"{name}:{mutation}")
        assert not survivors, f"mutations not caught: {survivors}"
        c.note(f"{count} mutations over {len(ASSERTED)} suites")
