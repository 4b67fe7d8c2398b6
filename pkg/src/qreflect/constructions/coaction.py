"""The left coaction of the extended reflection algebra on two legs.

Leg 1 carries the L-symbols of the extended Yang-Baxter algebra, leg 2 the
K-symbols of the reflection algebra; symbols on different legs commute.  The
image of gamma-tilde is gamma (x) gamma-tilde, so the delta-images must
satisfy the extended relations with ``g`` (gamma-tilde squared) replaced by
``gamma^2 g``.
"""

from __future__ import annotations

import time

from ..algebras import AlgebraParams, Realization, relations_Bq_ext, relations_TBq_ext, verify_relation_set
from ..errors import ConfigError
from ..field import Monomial, SymbolicDomain
from ..ncalg import NCMat, NCPoly, generator_matrix
from ..report import FAIL, PASS, Check, Report
from ..rmatrix import build_R
from ..sampling import Strategy, for_each_domain
from .dressing import GAMMA, _oracle_K, dress_K, rll_rules

__all__ = ["coaction_delta", "verify_coaction", "coaction_matches_dressing", "coaction_oracle", "VARIANTS"]

U = Monomial.var("u")
V = Monomial.var("v")
G = Monomial.var("g")
VARIANTS = ("B", "TB")
L_LEG, K_LEG = 1, 2

# family -> (L family, gamma exponent, gamma-tilde^2 exponent, right family)
_SHAPE = {
    "Kpp": ("Lp", -1, -1, "LpInv"),
    "Kmm": ("Lm", 1, 1, "LmInv"),
    "Kpm": ("Lp", 1, 0, "LmInv"),
    "Kmp": ("Lm", -1, 0, "LpInv"),
}
# gamma^2 exponent in the K argument of the mixed families
_MIXED_SHIFT = {"corrected": {"Kpm": 1, "Kmp": -1}, "printed": {"Kpm": -1, "Kmp": 1}}


def coaction_delta(kind: str, x: Monomial, space=1, domain=None, gamma: Monomial = GAMMA, g: Monomial = G,
                   variant="B", mixed_shift="corrected", mutate=None) -> NCMat:
    """delta(K(kind)(x)) as an NCMat over legs 1 (L) and 2 (K).

    ``variant='TB'`` replaces the antipode factor by the transpose of the L
    of the same family as the left factor's partner.  ``mutate='shift'``
    flips the gamma power of the left L (a control).
    """
    if kind not in _SHAPE:
        raise ConfigError(f"unknown K family {kind!r}")
    if variant not in VARIANTS:
        raise ConfigError(f"unknown coaction variant {variant!r}")
    one = domain.one if domain is not None else 1
    fam, eg, eg2, right = _SHAPE[kind]
    left_eg = -eg if mutate == "shift" else eg
    shift = gamma**eg * g**eg2
    karg = x * gamma ** (2 * _MIXED_SHIFT[mixed_shift].get(kind, 0))
    left = generator_matrix(fam, x * gamma**left_eg * g**eg2, space, L_LEG, one)
    mid = generator_matrix(kind, karg, space, K_LEG, one)
    rarg = x.inverse() * (shift if eg2 else gamma**-eg)
    if variant == "TB":
        tail = generator_matrix(right[:-3], rarg, space, L_LEG, one).transpose()
    else:
        tail = generator_matrix(right, rarg, space, L_LEG, one)
    return left @ mid @ tail


def verify_coaction(kinds=(("Kpp", "Kpp"),), variant="B", strategy=None, gamma: Monomial = GAMMA,
                    mixed_shift="corrected", kernel=build_R, max_steps=None, scale_central=True, mutate=None) -> Report:
    """Homomorphism property of delta on the given family pairs.

    ``scale_central=False`` checks against the unscaled relations (gamma-tilde
    mapped to itself), a mutation control.
    """
    base = relations_Bq_ext() if variant == "B" else relations_TBq_ext()
    target = base.substitute({"g": G * gamma**2}) if scale_central else base
    wanted = {tuple(k) for k in kinds}
    rs = target.select([r.label for r in target if r.families in wanted])
    fams = {f for pair in wanted for f in pair}
    table = {
        f: (lambda arg, space, d, f=f: coaction_delta(f, arg, space, d, gamma, G, variant, mixed_shift, mutate))
        for f in fams
    }
    rep = verify_relation_set(
        rs, Realization(table), rll_rules(AlgebraParams(gamma=gamma), kernel, extra=base.relations),
        strategy, kernel, suite=f"coaction[{variant}" + (",printed shift" if mixed_shift == "printed" else "")
        + ("" if scale_central else ",unscaled") + (f",{mutate}" if mutate else "") + "]",
        max_steps=max_steps,
    )
    rep.config.update({"variant": variant, "kinds": sorted(wanted), "mixed_shift": mixed_shift,
                       "central_scaling": "gamma (x) gamma-tilde" if scale_central else "none"})
    return rep


def coaction_matches_dressing(kinds=("Kpp", "Kmm", "Kpm", "Kmp")) -> Check:
    """At gamma = gamma-tilde = 1 with the K leg set to the identity, delta(K) is the dressed K0 = 1."""
    d = SymbolicDomain()
    t0 = time.perf_counter()
    one = Monomial.one()
    bad = []
    for kind in kinds:
        delta = coaction_delta(kind, U, 1, d, one, one)
        collapsed = NCMat(delta.legs, [[NCPoly() for _ in row] for row in delta.rows])
        for i, row in enumerate(delta.rows):
            for j, p in enumerate(row):
                acc = collapsed.rows[i][j]
                for (w, k), c in p.terms.items():
                    # K_ab on leg 2 -> delta_ab
                    kk = [s for s in w if s[0] == K_LEG]
                    if kk[0][2] != kk[0][3]:
                        continue
                    rest = tuple((0,) + s[1:] for s in w if s[0] == L_LEG)
                    acc.terms[(rest, k)] = acc.terms.get((rest, k), 0) + c
        dressed = dress_K(kind, U, 1, d, gamma=one)
        if any(a != b for (_, _, a), (_, _, b) in zip(collapsed.entries(), dressed.entries())):
            bad.append(kind)
    return Check(
        "coaction_gamma1_is_dressing",
        FAIL if bad else PASS,
        residual={"families": bad} if bad else {},
        info={"families": list(kinds)},
        seconds=time.perf_counter() - t0,
    )


def coaction_oracle(strategy=None, kernel=build_R) -> Report:
    """Zero central charges: delta(K)(u) = R_1a(u/w) K_b(u) R_1a(1/(uw))^-1 with K_b the dressing oracle."""
    strategy = strategy or Strategy.sampled(0, 10)
    rep = Report("coaction_oracle", config=strategy.describe())
    t0 = time.perf_counter()
    W1, W2 = Monomial.var("w"), Monomial.var("a")
    legs = (1, 2, 3, 4)

    def K(x, space, d):
        inner = _oracle_K(x, space, 4, W2, d, kernel).embed((space, 3, 4))
        L = kernel(x / W1, d, (space, 3)).embed((space, 3, 4))
        S = kernel(x.inverse() / W1, d, (space, 3)).inverse().embed((space, 3, 4))
        return (L @ inner @ S).embed(legs)

    def run(d):
        K1, K2 = K(U, 1, d), K(V, 2, d)
        R12 = lambda x: kernel(x, d, (1, 2)).embed(legs)
        R21 = lambda x: kernel(x, d, (2, 1)).embed(legs)
        lhs = R12(U / V) @ K1 @ R21(U * V) @ K2
        rhs = K2 @ R12(U * V) @ K1 @ R21(U / V)
        return (lhs - rhs).is_zero()

    res = for_each_domain(strategy, run)
    bad = sum(1 for _, ok in res if not ok)
    rep.add(Check(
        "reflection_16x16",
        FAIL if bad else PASS,
        residual={"failing_points": bad} if bad else {},
        info={"points": len(res)},
        seconds=time.perf_counter() - t0,
    ))
    return rep
