from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qreflect.errors import ConfigError, SamplerExhausted
from qreflect.field import GaussianRational, PointDomain, SymbolicDomain
from qreflect.sampling import LOW, HIGH, SAMPLED_VARIABLES, Strategy, for_each_domain, sample_point

GOLDEN = {
    "a": "45/53",
    "g": "1775/1424",
    "gamma": "37/159",
    "km": "1571/3786",
    "kp": "1076/897",
    "q": "27815076/519841",
    "rho": "9221/5971",
    "s": "5274/721",
    "u": "5169/4216",
    "v": "4647/2638",
    "w": "8526/955",
}


def test_golden_point():
    point, attempt = sample_point(42, 0)
    assert attempt == 0
    assert {k: str(v) for k, v in point.items()} == GOLDEN


def test_assign_overrides():
    point, _ = sample_point(42, 0, assign={"u": Fraction(2)})
    assert point["u"] == 2
    point, _ = sample_point(42, 0, assign={"q": Fraction(3)})
    assert point["q"] == 3 and "s" not in point


def test_excluded_assignment_exhausts():
    with pytest.raises(SamplerExhausted):
        sample_point(1, 0, assign={"u": Fraction(1)})
    with pytest.raises(SamplerExhausted):
        sample_point(1, 0, assign={"u": Fraction(2), "v": Fraction(1, 2)})


@given(st.integers(0, 10**6), st.integers(0, 50))
def test_points_are_admissible_and_deterministic(seed, index):
    p, a = sample_point(seed, index)
    assert (p, a) == sample_point(seed, index)
    assert p["q"] == p["s"] ** 2
    for name in SAMPLED_VARIABLES:
        x = Fraction(p[name].re)
        assert p[name].im == 0 and x > 0
        if name != "s":
            assert Fraction(1, HIGH) * LOW <= x <= Fraction(HIGH, LOW)
    u, v = p["u"], p["v"]
    for bad in (u - 1, v - 1, u - v, u * v - 1, p["q"] ** 2 - 1):
        assert bad != 0


def test_strategy_validation():
    with pytest.raises(ConfigError):
        Strategy("numeric")
    with pytest.raises(ConfigError):
        Strategy.sampled(0, 0)
    assert Strategy.symbolic().describe() == {"strategy": "symbolic"}
    d = Strategy.sampled(3, 2).describe()
    assert d["seed"] == 3 and d["trials"] == 2 and "u=+-1" in d["excluded_loci"]


def test_for_each_domain():
    out = for_each_domain(Strategy.symbolic(), lambda d: d.var("u"))
    assert isinstance(out[0][0], SymbolicDomain)
    out = for_each_domain(Strategy.sampled(1, 4), lambda d: d.var("u"))
    assert len(out) == 4
    assert all(isinstance(d, PointDomain) and isinstance(x, GaussianRational) for d, x in out)


def test_poles_move_to_next_attempt():
    seen = []

    def fn(d):
        seen.append(d.var("u"))
        if len(seen) == 1:
            raise ZeroDivisionError
        return d.var("u")

    out = for_each_domain(Strategy.sampled(9, 1), fn)
    assert len(seen) == 2 and seen[0] != seen[1]
    assert out[0][1] == seen[1]


def test_every_attempt_a_pole():
    def fn(d):
        raise ZeroDivisionError

    with pytest.raises(SamplerExhausted):
        for_each_domain(Strategy.sampled(0, 1), fn)
