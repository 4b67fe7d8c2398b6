"""The Miki-type K-operator built from Zamolodchikov-Faddeev operators.

``K(u; a)`` is the matrix of quadratic words ``Phi_e1(u a) Phi_e2(a / (u q))``
right-multiplied by ``M``.  Its entries commute past each other only through
the FZ exchange rules, so every relation check is a normal-ordering problem.
"""

from __future__ import annotations

from ..algebras import (
    AlgebraParams,
    Realization,
    relations_Bq_ext,
    relations_re,
    verify_relation_set,
)
from ..errors import ConfigError
from ..field import Monomial, SymbolicDomain
from ..ncalg import NCMat, NCPoly, RuleBook, relation_FZ, sym
from ..rmatrix import build_R, crossing_M

__all__ = [
    "miki_K",
    "fz_rules",
    "miki_identification",
    "verify_miki_scalar_RE",
    "verify_miki_extension",
    "IDENTIFICATIONS",
]

A = Monomial.var("a")
W = Monomial.var("w")
Q = Monomial.var("q")
IDENTIFICATIONS = ("corrected", "printed")


def miki_K(u: Monomial, a: Monomial = A, domain=None, space=1, use_M=True) -> NCMat:
    """K(u; a) on auxiliary ``space``; ``use_M=False`` drops the crossing matrix (a mutation)."""
    d = domain or SymbolicDomain()
    x1, x2 = u * a, a / (u * Q)
    phi = lambda e, arg: NCPoly.symbol(sym("Phi", e, 0, arg), d.one)
    m = NCMat((space,), [[phi(i, x1) * phi(j, x2) for j in (1, 2)] for i in (1, 2)])
    return m @ crossing_M(d, (space,)) if use_M else m


def fz_rules(kernel=build_R):
    return lambda d: RuleBook([relation_FZ()], d, kernel, name="FZ")


def verify_miki_scalar_RE(strategy=None, a: Monomial = A, use_M=True, kernel=build_R, max_steps=None):
    """K(u; a) against R12(u/v) K1(u) R21(uv) K2(v) = K2(v) R12(uv) K1(u) R21(u/v)."""
    real = Realization({"K0": lambda arg, space, d: miki_K(arg, a, d, space, use_M)})
    suite = "miki_scalar_re" if use_M else "miki_scalar_re[no M]"
    return verify_relation_set(
        relations_re("kernel"), real, fz_rules(kernel), strategy, kernel, suite=suite, max_steps=max_steps
    )


def miki_identification(params: AlgebraParams, w: Monomial = W, identification="corrected") -> dict:
    """The parameter ``a`` for each of the four families; ``g`` is gamma-tilde squared.

    ``printed``: ``a(++) = g w``, ``a(--) = w / g``.  ``corrected``: the
    inverse assignment, which is what the FZ exchange rule forces (see README).
    Mixed kinds always take ``a = w``.
    """
    if identification not in IDENTIFICATIONS:
        raise ConfigError(f"unknown identification {identification!r}")
    g = params.g_value()
    up, down = (w / g, w * g) if identification == "corrected" else (w * g, w / g)
    return {"Kpp": up, "Kmm": down, "Kpm": w, "Kmp": w}


def verify_miki_extension(
    k: int | None = 1,
    strategy=None,
    identification="corrected",
    literal=False,
    w: Monomial = W,
    kernel=build_R,
    max_steps=None,
):
    """All sixteen extended reflection relations under ``K(eps1 eps2)(u) = K(u; a_eps1eps2)``.

    ``k=None`` leaves gamma-tilde squared as an independent variable ``g``;
    the quantization condition then shows up as residual terms whose words
    carry more than one irreducible prefactor class.
    """
    params = AlgebraParams(k=k)
    avals = miki_identification(params, w, identification)
    table = {fam: (lambda arg, space, d, a=a: miki_K(arg, a, d, space)) for fam, a in avals.items()}
    rs = relations_Bq_ext(params, literal=literal)
    kname = "g" if k is None else str(k)
    rep = verify_relation_set(
        rs,
        Realization(table),
        fz_rules(kernel),
        strategy,
        kernel,
        suite=f"miki_extension[k={kname},{identification}{',literal' if literal else ''}]",
        max_steps=max_steps,
    )
    rep.config.update({"k": k, "identification": identification, "literal": literal})
    if rs.note:
        rep.config["note"] = rs.note
    return rep
