"""Evaluation strategies: exact symbolic arithmetic, or exact arithmetic at random rational points.

Sampled points are drawn deterministically from ``(seed, index)``.  Each
variable gets a positive rational ``n/d`` with ``n, d`` uniform in
``[2, 10**4]`` and ``n != d``; ``q`` is always ``s**2`` so that square roots of
``q`` exist.  A point is rejected when it lies on an excluded locus
(``u = +-1``, ``v = +-1``, ``u = +-v``, ``uv = +-1``, ``q**2 = 1``) and the next
attempt ``(seed, index, attempt)`` is drawn; after ``MAX_ATTEMPTS`` rejections
:class:`SamplerExhausted` is raised.  Checks that hit a pole of some derived
quantity (:class:`PoleAtPoint`, :class:`SingularMatrix`) also move on to the
next attempt.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigError, PoleAtPoint, SamplerExhausted, SingularMatrix
from .field import GaussianRational, PointDomain, SymbolicDomain

__all__ = ["Strategy", "sample_point", "SAMPLED_VARIABLES", "EXCLUDED_LOCI", "MAX_ATTEMPTS", "for_each_domain"]

SAMPLED_VARIABLES = ("u", "v", "w", "a", "gamma", "g", "s", "kp", "km", "rho")
EXCLUDED_LOCI = ("u=+-1", "v=+-1", "u=+-v", "u*v=+-1", "q^2=1")
LOW, HIGH = 2, 10**4
MAX_ATTEMPTS = 64


def _excluded(p) -> bool:
    u, v, q = (Fraction(p[k].re) if isinstance(p[k], GaussianRational) else p[k] for k in ("u", "v", "q"))
    return (
        abs(u) == 1
        or abs(v) == 1
        or abs(u) == abs(v)
        or abs(u * v) == 1
        or q * q == 1
    )


def _draw(rng):
    while True:
        n = rng.randint(LOW, HIGH)
        d = rng.randint(LOW, HIGH)
        if n != d:
            return Fraction(n, d)


def sample_point(seed: int, index: int, extra=(), attempt_start: int = 0, assign=None):
    """Deterministic admissible point for ``(seed, index)``; returns ``(point, attempt)``."""
    for attempt in range(attempt_start, MAX_ATTEMPTS):
        rng = random.Random(f"{seed}:{index}:{attempt}")
        p = {}
        for name in SAMPLED_VARIABLES + tuple(extra):
            p[name] = _draw(rng)
        p["q"] = p["s"] ** 2
        if assign:
            p.update(assign)
            if "q" in assign and "s" not in assign:
                p.pop("s")
        if not _excluded(p):
            return {k: GaussianRational(v) if not isinstance(v, GaussianRational) else v for k, v in p.items()}, attempt
    raise SamplerExhausted(f"no admissible point for seed={seed} index={index} after {MAX_ATTEMPTS} attempts")


@dataclass(frozen=True)
class Strategy:
    kind: str = "symbolic"
    seed: int = 0
    trials: int = 8
    assign: tuple = ()

    def __post_init__(self):
        if self.kind not in ("symbolic", "sampled"):
            raise ConfigError(f"unknown strategy {self.kind!r}")
        if self.kind == "sampled" and self.trials < 1:
            raise ConfigError("trials must be at least 1")

    @classmethod
    def symbolic(cls):
        return cls("symbolic")

    @classmethod
    def sampled(cls, seed=0, trials=8, assign=None):
        return cls("sampled", int(seed), int(trials), tuple(sorted((assign or {}).items())))

    def describe(self) -> dict:
        if self.kind == "symbolic":
            return {"strategy": "symbolic"}
        return {
            "strategy": "sampled",
            "seed": self.seed,
            "trials": self.trials,
            "excluded_loci": list(EXCLUDED_LOCI),
            "range": [LOW, HIGH],
        }


def for_each_domain(strategy: Strategy, fn, extra=()):
    """Run ``fn(domain)`` once (symbolic) or once per trial (sampled).

    Returns a list of ``(domain, result)``.  In sampled mode a trial whose
    evaluation meets a pole is retried at the next attempt for the same index.
    """
    if strategy.kind == "symbolic":
        d = SymbolicDomain()
        return [(d, fn(d))]
    out = []
    assign = dict(strategy.assign)
    for index in range(strategy.trials):
        attempt = 0
        while True:
            point, attempt = sample_point(strategy.seed, index, extra, attempt, assign)
            d = PointDomain(point)
            try:
                out.append((d, fn(d)))
                break
            except (PoleAtPoint, SingularMatrix, ZeroDivisionError):
                attempt += 1
                if attempt >= MAX_ATTEMPTS:
                    raise SamplerExhausted(f"every attempt for trial {index} hit a pole") from None
    return out
