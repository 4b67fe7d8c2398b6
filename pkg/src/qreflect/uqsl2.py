"""Chevalley generators of affine U_q(sl2) in the two-dimensional evaluation representation.

Half powers of ``q`` are written with ``s`` (``q = s**2``).  Images at spectral
parameter ``u``::

    E1 -> u s sigma+     E0 -> u s sigma-
    F1 -> sigma- / (u s) F0 -> sigma+ / (u s)
    q^H1 -> diag(q, 1/q) q^H0 -> diag(1/q, q)

The coproduct is ``Delta(X) = X (x) q^(-H/2) + q^(H/2) (x) X`` for ``X = E_i, F_i``
and ``Delta(q^H) = q^H (x) q^H``.
"""

from __future__ import annotations

import time

from .field import Monomial, SubstitutionDomain, SymbolicDomain
from .report import FAIL, PASS, Check, Report
from .rmatrix import build_R
from .sampling import Strategy, for_each_domain
from .tensor import Mat

__all__ = [
    "GENERATORS",
    "CHEVALLEY",
    "eval_image",
    "coproduct_image",
    "check_intertwiner",
    "check_dj_relations",
    "check_hopf",
    "uqsl2_report",
]

GENERATORS = ("E0", "E1", "F0", "F1", "qH0", "qH1", "qH0inv", "qH1inv")
CHEVALLEY = ("E0", "E1", "F0", "F1", "qH0", "qH1")
CARTAN = {(0, 0): 2, (1, 1): 2, (0, 1): -2, (1, 0): -2}

U = Monomial.var("u")
V = Monomial.var("v")


def _dom(domain):
    domain = domain or SymbolicDomain()
    if isinstance(domain, SubstitutionDomain):
        return domain
    return SubstitutionDomain(domain, {"q": Monomial.var("s", 2)})


def eval_image(g: str, u=U, domain=None, leg=1) -> Mat:
    """2x2 image of a generator (or of ``qH0half``/``qH1half`` and their inverses)."""
    d = _dom(domain)
    z, one = d.zero, d.one
    us = d.mono(u * Monomial.var("s")) if isinstance(u, Monomial) else u * d.var("s")
    q, s = d.var("q"), d.var("s")
    table = {
        "E1": [[z, us], [z, z]],
        "E0": [[z, z], [us, z]],
        "F1": [[z, z], [1 / us, z]],
        "F0": [[z, 1 / us], [z, z]],
        "qH1": [[q, z], [z, 1 / q]],
        "qH0": [[1 / q, z], [z, q]],
        "qH1inv": [[1 / q, z], [z, q]],
        "qH0inv": [[q, z], [z, 1 / q]],
        "qH1half": [[s, z], [z, 1 / s]],
        "qH0half": [[1 / s, z], [z, s]],
        "qH1halfinv": [[1 / s, z], [z, s]],
        "qH0halfinv": [[s, z], [z, 1 / s]],
        "one": [[one, z], [z, one]],
    }
    if g not in table:
        raise KeyError(f"unknown generator {g!r}")
    return Mat((leg,), table[g])


def _idx(g):
    return int(g[-1])


def coproduct_image(g: str, u=U, v=V, domain=None):
    """Images of Delta(g) and of the opposite coproduct under pi_u (x) pi_v (legs 1, 2)."""
    d = _dom(domain)
    if g.startswith("qH"):
        a = eval_image(g, u, d, 1).kron(eval_image(g, v, d, 2))
        return a, a
    i = _idx(g)
    half, halfinv = f"qH{i}half", f"qH{i}halfinv"
    X = lambda w, leg: eval_image(g, w, d, leg)
    H = lambda name, w, leg: eval_image(name, w, d, leg)
    delta = X(u, 1).kron(H(halfinv, v, 2)) + H(half, u, 1).kron(X(v, 2))
    opposite = H(halfinv, u, 1).kron(X(v, 2)) + X(u, 1).kron(H(half, v, 2))
    return delta, opposite


def check_intertwiner(strategy=None, kernel=build_R) -> Check:
    """R(u/v) Delta(x) == Delta'(x) R(u/v) in pi_u (x) pi_v for every Chevalley generator."""
    strategy = strategy or Strategy.symbolic()

    def run(base):
        d = _dom(base)
        R = kernel(U / V, d)
        out = []
        for g in CHEVALLEY:
            delta, opp = coproduct_image(g, U, V, d)
            out.append((g, R @ delta - opp @ R))
        return out

    t0 = time.perf_counter()
    res = for_each_domain(strategy, run)
    failed = sorted({g for _, mats in res for g, m in mats if not m.is_zero()})
    return Check(
        "intertwiner",
        FAIL if failed else PASS,
        residual={"generators": failed} if failed else {},
        info={"strategy": strategy.describe(), "generators": list(CHEVALLEY), "evaluations": len(res)},
        seconds=time.perf_counter() - t0,
    )


def _comm(a, b):
    return a @ b - b @ a


def _qcomm(a, b, qq):
    return (a @ b).scale(qq) - (b @ a).scale(1 / qq)


def check_dj_relations(strategy=None, mutate=False) -> Check:
    """``mutate=True`` rescales the image of E1 by q (a control that must fail)."""
    strategy = strategy or Strategy.symbolic()

    def run(base):
        d = _dom(base)
        q = d.var("q")

        def img(g):
            m = eval_image(g, U, d)
            return m.scale(q) if mutate and g == "E1" else m
        zero = Mat.zeros((1,), d)
        out = []
        for i in (0, 1):
            for j in (0, 1):
                lhs = _comm(img(f"E{i}"), img(f"F{j}"))
                rhs = (img(f"qH{i}") - img(f"qH{i}inv")).scale(1 / (q - 1 / q)) if i == j else zero
                out.append((f"[E{i},F{j}]", lhs - rhs))
                a = CARTAN[(i, j)]
                K, Kinv = img(f"qH{i}"), img(f"qH{i}inv")
                out.append((f"qH{i} E{j} qH{i}^-1", K @ img(f"E{j}") @ Kinv - img(f"E{j}").scale(q**a)))
                out.append((f"qH{i} F{j} qH{i}^-1", K @ img(f"F{j}") @ Kinv - img(f"F{j}").scale(q**-a)))
        for i, j in ((0, 1), (1, 0)):
            for X in ("E", "F"):
                A, B = img(f"{X}{i}"), img(f"{X}{j}")
                inner = _qcomm(A, B, q)
                mid = _qcomm(A, inner, 1 / q)
                out.append((f"q-Serre {X}{i}{X}{j}", _comm(A, mid)))
        out.append(("central qH0 qH1 = 1", img("qH0") @ img("qH1") - img("one")))
        return out

    t0 = time.perf_counter()
    res = for_each_domain(strategy, run)
    names = [n for n, _ in res[0][1]]
    failed = sorted({n for _, mats in res for n, m in mats if not m.is_zero()})
    return Check(
        "drinfeld_jimbo",
        FAIL if failed else PASS,
        residual={"relations": failed} if failed else {},
        info={"strategy": strategy.describe(), "relations": names},
        seconds=time.perf_counter() - t0,
    )


def check_hopf(strategy=None) -> Check:
    """m o (S (x) id) o Delta == counit on the Chevalley generators, with S(E)=-E/q, S(F)=-qF."""
    strategy = strategy or Strategy.symbolic()

    def run(base):
        d = _dom(base)
        q = d.var("q")
        img = lambda g: eval_image(g, U, d)
        out = []
        for i in (0, 1):
            half, halfinv = img(f"qH{i}half"), img(f"qH{i}halfinv")
            E, F = img(f"E{i}"), img(f"F{i}")
            out.append((f"E{i}", E.scale(-1 / q) @ halfinv + halfinv @ E))
            out.append((f"F{i}", F.scale(-q) @ halfinv + halfinv @ F))
            out.append((f"qH{i}", img(f"qH{i}inv") @ img(f"qH{i}") - img("one")))
        return out

    t0 = time.perf_counter()
    res = for_each_domain(strategy, run)
    failed = sorted({n for _, mats in res for n, m in mats if not m.is_zero()})
    return Check(
        "antipode_counit",
        FAIL if failed else PASS,
        residual={"generators": failed} if failed else {},
        info={"antipode": "S(E)=-q^-1 E, S(F)=-q F, S(q^H)=q^-H", "counit": "0 on E, F; 1 on q^H"},
        seconds=time.perf_counter() - t0,
    )


def uqsl2_report(strategy=None, kernel=build_R) -> Report:
    rep = Report("uqsl2", config=(strategy or Strategy.symbolic()).describe())
    rep.add(check_intertwiner(strategy, kernel))
    rep.add(check_dj_relations(strategy))
    rep.add(check_hopf(strategy))
    return rep
