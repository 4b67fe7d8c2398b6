"""Currents of the q-Onsager current algebra realized by ZF operators, and their relations.

The relations are polynomial identities in the currents rather than matrix
relations, so they are kept here as labelled builders: each instance returns
the NCPoly ``lhs - rhs`` (with the ``U - V`` factor multiplied through where
the relation carries one).
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from ..algebras import residual_summary
from ..errors import ConfigError
from ..field import Monomial, SymbolicDomain
from ..ncalg import NCPoly, Rewriter, sym
from ..report import FAIL, PASS, Check, Report
from ..rmatrix import build_R
from ..sampling import Strategy, for_each_domain
from .miki import fz_rules, miki_K

__all__ = [
    "OnsagerParams",
    "UVar",
    "onsager_currents",
    "OnsagerRelation",
    "onsager_relations",
    "verify_onsager_realization",
    "miki_onsager_crosscheck",
    "CURRENTS",
]

U = Monomial.var("u")
V = Monomial.var("v")
Q = Monomial.var("q")
CURRENTS = ("W+", "W-", "G+", "G-")
_OTHER = {"+": "-", "-": "+"}


@dataclass(frozen=True)
class OnsagerParams:
    """Couplings ``kp``, ``km``, the shift ``a`` and ``rho``.

    ``rho=None`` means the identified value ``kp km (q + 1/q)^2``; any other
    name makes rho an independent variable (the negative control).
    ``kp_sign=-1`` flips the coupling in ``G-`` (a second mutation).
    """

    kplus: str = "kp"
    kminus: str = "km"
    a: Monomial = Monomial.var("a")
    rho: str | None = None
    kp_sign: int = 1

    def rho_value(self, d):
        if self.rho is None:
            q = d.var("q")
            return d.var(self.kplus) * d.var(self.kminus) * (q + 1 / q) ** 2
        return d.var(self.rho)


@dataclass(frozen=True)
class UVar:
    base: Monomial

    def render(self) -> str:
        return f"(q*{self.base}^2 + q^-1*{self.base}^-2)/(q + q^-1)"

    def value(self, d):
        q, x = d.var("q"), d.mono(self.base)
        return (q * x**2 + 1 / (q * x**2)) / (q + 1 / q)


def onsager_currents(params: OnsagerParams = OnsagerParams(), x: Monomial = U, domain=None) -> dict:
    """The four currents at spectral argument ``x`` as NCPoly in Phi(a x), Phi(a / (q x))."""
    d = domain or SymbolicDomain()
    q, i = d.var("q"), d.i
    kp, km = d.var(params.kplus) * params.kp_sign, d.var(params.kminus)
    rho = params.rho_value(d)
    xm = d.mono(x)
    x1, x2 = x * params.a, params.a / (x * Q)

    def pp(e1, e2):
        return NCPoly.symbol(sym("Phi", e1, 0, x1), d.one) * NCPoly.symbol(sym("Phi", e2, 0, x2), d.one)

    den = xm**2 * q**2 - 1 / (xm**2 * q**2)
    const = NCPoly.const(rho / (q - 1 / q))
    return {
        "W+": (pp(1, 2).scale(q * xm) - pp(2, 1).scale(1 / (q * xm))).scale(-i / den),
        "W-": (pp(2, 1).scale(q * xm) - pp(1, 2).scale(1 / (q * xm))).scale(i / den),
        "G+": pp(1, 1).scale(i * km * (q + 1 / q)) - const,
        "G-": pp(2, 2).scale(-i * kp * (q + 1 / q)) - const,
    }


@dataclass(frozen=True)
class OnsagerRelation:
    label: str
    family: str
    text: str
    build: object  # (currents_u, currents_v, ctx) -> NCPoly

    def render(self) -> str:
        return f"{self.label}: {self.text}"


def _comm(x, y):
    return x * y - y * x


class _Ctx:
    def __init__(self, d, rho):
        self.q = d.var("q")
        self.U = UVar(U).value(d)
        self.V = UVar(V).value(d)
        self.rho = rho

    def qcomm(self, x, y):
        return (x * y).scale(self.q) - (y * x).scale(1 / self.q)


def _instances():
    out = []
    for s in "+-":
        out.append(OnsagerRelation(f"ec1{s}", "ec1", f"[W{s}(u), W{s}(v)] = 0",
                                   lambda a, b, c, s=s: _comm(a["W" + s], b["W" + s])))
    out.append(OnsagerRelation("ec3", "ec3", "[W+(u), W-(v)] + [W-(u), W+(v)] = 0",
                               lambda a, b, c: _comm(a["W+"], b["W-"]) + _comm(a["W-"], b["W+"])))
    for s in "+-":
        t = _OTHER[s]

        def ec4(a, b, c, s=s, t=t):
            q = c.q
            lhs = _comm(a["W" + s], b["W" + t]).scale(c.U - c.V)
            quad = a["G" + s] * b["G" + t] - b["G" + s] * a["G" + t]
            lin = a["G" + s] - a["G" + t] + b["G" + t] - b["G" + s]
            return lhs - quad.scale((q - 1 / q) / (c.rho * (q + 1 / q))) - lin.scale(1 / (q + 1 / q))

        out.append(OnsagerRelation(
            f"ec4{s}", "ec4",
            f"(U-V)[W{s}(u), W{t}(v)] = (q-q^-1)/(rho(q+q^-1)) (G{s}(u)G{t}(v) - G{s}(v)G{t}(u))"
            f" + (G{s}(u) - G{t}(u) + G{t}(v) - G{s}(v))/(q+q^-1)", ec4))

        def ec5(a, b, c, s=s, t=t):
            q = c.q
            head = a["W" + s] * b["W" + s] - a["W" + t] * b["W" + t]
            head = head + _comm(a["G" + s], b["G" + t]).scale(1 / (c.rho * (q**2 - 1 / q**2)))
            tail = a["W" + s] * b["W" + t] - b["W" + s] * a["W" + t]
            return head.scale(c.U - c.V) + tail.scale(1 - c.U * c.V)

        out.append(OnsagerRelation(
            f"ec5{s}", "ec5",
            f"(U-V)(W{s}(u)W{s}(v) - W{t}(u)W{t}(v) + [G{s}(u), G{t}(v)]/(rho(q^2-q^-2)))"
            f" + (1-UV)(W{s}(u)W{t}(v) - W{s}(v)W{t}(u)) = 0", ec5))

        def ec6(a, b, c, s=s, t=t):
            q = c.q
            e = c.qcomm(b["G" + t], a["W" + s]).scale(c.U) - c.qcomm(a["G" + t], b["W" + s]).scale(c.V)
            e = e - (a["W" + t] * b["G" + t] - b["W" + t] * a["G" + t]).scale(q - 1 / q)
            return e + (a["W" + s].scale(c.U) - b["W" + s].scale(c.V) - a["W" + t] + b["W" + t]).scale(c.rho)

        out.append(OnsagerRelation(
            f"ec6{s}", "ec6",
            f"U[G{t}(v), W{s}(u)]_q - V[G{t}(u), W{s}(v)]_q - (q-q^-1)(W{t}(u)G{t}(v) - W{t}(v)G{t}(u))"
            f" + rho(U W{s}(u) - V W{s}(v) - W{t}(u) + W{t}(v)) = 0", ec6))

        def ec7(a, b, c, s=s, t=t):
            q = c.q
            e = c.qcomm(a["W" + t], b["G" + t]).scale(c.U) - c.qcomm(b["W" + t], a["G" + t]).scale(c.V)
            e = e - (a["W" + s] * b["G" + t] - b["W" + s] * a["G" + t]).scale(q - 1 / q)
            return e + (a["W" + t].scale(c.U) - b["W" + t].scale(c.V) - a["W" + s] + b["W" + s]).scale(c.rho)

        out.append(OnsagerRelation(
            f"ec7{s}", "ec7",
            f"U[W{t}(u), G{t}(v)]_q - V[W{t}(v), G{t}(u)]_q - (q-q^-1)(W{s}(u)G{t}(v) - W{s}(v)G{t}(u))"
            f" + rho(U W{t}(u) - V W{t}(v) - W{s}(u) + W{s}(v)) = 0", ec7))

        for e in "+-":
            out.append(OnsagerRelation(
                f"ec8{s}{e}", "ec8", f"[G{e}(u), W{s}(v)] + [W{s}(u), G{e}(v)] = 0",
                lambda a, b, c, s=s, e=e: _comm(a["G" + e], b["W" + s]) + _comm(a["W" + s], b["G" + e])))
        out.append(OnsagerRelation(f"ec9{s}", "ec9", f"[G{s}(u), G{s}(v)] = 0",
                                   lambda a, b, c, s=s: _comm(a["G" + s], b["G" + s])))
    out.append(OnsagerRelation("ec16", "ec16", "[G+(u), G-(v)] + [G-(u), G+(v)] = 0",
                               lambda a, b, c: _comm(a["G+"], b["G-"]) + _comm(a["G-"], b["G+"])))
    order = ["ec1", "ec3", "ec4", "ec5", "ec6", "ec7", "ec8", "ec9", "ec16"]
    return tuple(sorted(out, key=lambda r: (order.index(r.family), r.label)))


_RELATIONS = _instances()


def onsager_relations():
    """All 18 concrete instances (9 labelled families, signs expanded)."""
    return _RELATIONS


def verify_onsager_realization(
    params: OnsagerParams = OnsagerParams(), strategy=None, labels=None, kernel=build_R, max_steps=None
) -> Report:
    strategy = strategy or Strategy.symbolic()
    rels = _RELATIONS if labels is None else tuple(r for r in _RELATIONS if r.label in set(labels))
    if labels is not None and len(rels) != len(set(labels)):
        raise ConfigError(f"unknown relation label in {sorted(labels)}")
    mutated = params.rho is not None or params.kp_sign != 1
    rep = Report(
        "onsager" + ("[mutated]" if mutated else ""),
        config=dict(strategy.describe(), rho=params.rho or "kp*km*(q+q^-1)^2", kp_sign=params.kp_sign),
    )
    rules = fz_rules(kernel)
    for rel in rels:
        t0 = time.perf_counter()

        def run(d, rel=rel):
            rw = Rewriter(rules(d), max_steps=max_steps)
            cu = onsager_currents(params, U, d)
            cv = onsager_currents(params, V, d)
            ctx = _Ctx(d, params.rho_value(d))
            return rw.reduce(rel.build(cu, cv, ctx)), rw.steps

        res = for_each_domain(strategy, run)
        summary = residual_summary([p for _, (p, _) in res])
        rep.add(Check(
            rel.label,
            FAIL if summary else PASS,
            residual=summary,
            info={"relation": rel.text, "rewrite_steps": sum(s for _, (_, s) in res)},
            seconds=time.perf_counter() - t0,
        ))
    return rep


def miki_onsager_crosscheck(params: OnsagerParams = OnsagerParams(), domain=None) -> Check:
    """K12(u; a) and K21(u; a) against the quadratic parts of G+(u) and G-(u).

    Expected: G+ + rho/(q-q^-1) = km (q+q^-1) K12 and G- + rho/(q-q^-1) = kp (q+q^-1) K21.
    """
    d = domain or SymbolicDomain()
    t0 = time.perf_counter()
    q = d.var("q")
    K = miki_K(U, params.a, d)
    cur = onsager_currents(params, U, d)
    shift = NCPoly.const(params.rho_value(d) / (q - 1 / q))
    kp, km = d.var(params.kplus), d.var(params.kminus)
    bad = []
    if cur["G+"] + shift != K[0, 1].scale(km * (q + 1 / q)):
        bad.append("G+ vs K12")
    if cur["G-"] + shift != K[1, 0].scale(kp * (q + 1 / q)):
        bad.append("G- vs K21")
    return Check(
        "miki_onsager_crosscheck",
        FAIL if bad else PASS,
        residual={"mismatch": bad} if bad else {},
        info={"ratios": {"G+/K12": "km*(q+q^-1)", "G-/K21": "kp*(q+q^-1)"}},
        seconds=time.perf_counter() - t0,
    )
