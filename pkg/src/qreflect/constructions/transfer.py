"""Exploratory: do traces of the Miki-type K-operator commute at different arguments?

No generating function is fixed by the construction, so two natural
candidates are tried and the outcome is reported, never asserted.
"""

from __future__ import annotations

import time

from ..algebras import residual_summary
from ..errors import ConfigError
from ..field import Monomial
from ..ncalg import NCPoly, Rewriter
from ..report import PASS, REPORTED, Check, Report
from ..rmatrix import build_R, crossing_M
from ..sampling import Strategy, for_each_domain
from .miki import A, fz_rules, miki_K

__all__ = ["transfer_function", "transfer_commutator", "CANDIDATES"]

U = Monomial.var("u")
V = Monomial.var("v")
CANDIDATES = ("trace", "M-trace")


def transfer_function(candidate: str, x: Monomial, d, a: Monomial = A) -> NCPoly:
    if candidate not in CANDIDATES:
        raise ConfigError(f"unknown transfer candidate {candidate!r}")
    K = miki_K(x, a, d)
    if candidate == "M-trace":
        K = crossing_M(d, (1,)) @ K
    return K[0, 0] + K[1, 1]


def transfer_commutator(candidates=CANDIDATES, strategy=None, a: Monomial = A, kernel=build_R) -> Report:
    """Normal-ordered [t(u), t(v)] for each candidate, plus the trivial [t(u), t(u)] = 0."""
    strategy = strategy or Strategy.symbolic()
    rep = Report("transfer", config=dict(strategy.describe(), candidates=list(candidates)))
    rules = fz_rules(kernel)
    for cand in candidates:
        t0 = time.perf_counter()

        def run(d, cand=cand):
            rw = Rewriter(rules(d))
            tu, tv = transfer_function(cand, U, d, a), transfer_function(cand, V, d, a)
            return rw.reduce(tu * tv - tv * tu), rw.reduce(tu * tu - tu * tu)

        res = for_each_domain(strategy, run)
        summary = residual_summary([p for _, (p, _) in res])
        rep.add(Check(
            f"[t(u),t(v)] {cand}",
            REPORTED,
            asserted=False,
            residual=summary,
            info={"vanishes": not summary, "evaluations": len(res)},
            seconds=time.perf_counter() - t0,
        ))
        self_comm = residual_summary([q for _, (_, q) in res])
        rep.add(Check(f"[t(u),t(u)] {cand}", PASS if not self_comm else "fail", residual=self_comm))
    return rep
