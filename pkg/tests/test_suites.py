import pytest

from qreflect.errors import ConfigError
from qreflect.report import PASS
from qreflect.sampling import Strategy
from qreflect.suites import ASSERTED, MUTATIONS, SUITES, RunConfig, parse_kinds, run_all, run_suite

SAMPLED = Strategy.sampled(42, 2)


def test_parse_kinds():
    assert parse_kinds("pp-pm, mm-mp") == [("Kpp", "Kpm"), ("Kmm", "Kmp")]
    assert len(parse_kinds("all")) == 16
    assert parse_kinds(None) is None
    with pytest.raises(ConfigError):
        parse_kinds("pp+pm")
    with pytest.raises(ConfigError):
        parse_kinds("pp-zz")


def test_registry():
    assert set(SUITES) == set(MUTATIONS)
    assert "transfer-commute" not in ASSERTED
    # every asserted suite has at least one deliberate corruption
    assert all(MUTATIONS[name] for name in ASSERTED)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_sampled(name):
    rep = run_suite(RunConfig(name, SAMPLED))
    assert rep.status == PASS, rep.to_text()
    assert rep.config["command"] == name


def test_unknown_suite_and_mutation():
    with pytest.raises(ConfigError):
        run_suite(RunConfig("check-nothing"))
    with pytest.raises(ConfigError):
        run_suite(RunConfig("check-ybe", mutate="coupling"))


def test_options_reach_the_suite():
    rep = run_suite(RunConfig("verify-qcurrent", SAMPLED, options={"form": "printed"}))
    assert rep.status != PASS
    assert rep.config["form"] == "printed"
    rep = run_suite(RunConfig("verify-ext-b", SAMPLED, k=2))
    assert rep.passed and rep.config["k"] == 2


def test_run_all_prefixes_checks():
    rep = run_all(RunConfig("run-all", Strategy.sampled(1, 1)))
    assert rep.passed
    suites = {c.name.split(" / ")[0] for c in rep.checks}
    assert suites == set(ASSERTED)
