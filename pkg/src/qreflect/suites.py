"""Named verification suites with their configuration and mutation controls.

Each suite maps a :class:`RunConfig` to a :class:`~qreflect.report.Report`.
``mutate`` names a deliberate corruption (``kernel``, ``M`` or ``coupling``)
that the suite must detect; :data:`MUTATIONS` lists what each suite supports.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import algebras, ncalg, rmatrix, uqsl2
from .constructions import coaction, dressing, miki, onsager, transfer
from .errors import ConfigError
from .field import Monomial, SubstitutionDomain
from .ncalg import NCMat
from .report import Report
from .rmatrix import build_R, corrupted_kernel, crossing_M
from .sampling import Strategy
from .tensor import Mat

__all__ = ["RunConfig", "SUITES", "MUTATIONS", "ASSERTED", "run_suite", "run_all", "parse_kinds"]

_KIND_CODES = {"pp": "Kpp", "pm": "Kpm", "mp": "Kmp", "mm": "Kmm"}


@dataclass
class RunConfig:
    command: str = "run-all"
    strategy: Strategy = field(default_factory=Strategy.symbolic)
    k: int | None = 1
    max_steps: int | None = None
    max_degree: int = 512
    output: str = "text"
    timings: bool = True
    mutate: str | None = None
    options: dict = field(default_factory=dict)

    def kernel(self):
        return corrupted_kernel if self.mutate == "kernel" else build_R

    def opt(self, name, default=None):
        v = self.options.get(name)
        return default if v is None else v

    def echo(self) -> dict:
        out = {"command": self.command, "k": self.k, "max_degree": self.max_degree}
        out.update(self.strategy.describe())
        if self.max_steps is not None:
            out["max_steps"] = self.max_steps
        if self.mutate:
            out["mutate"] = self.mutate
        if self.strategy.assign:
            out["assign"] = {k: str(v) for k, v in self.strategy.assign}
        out.update({k: v for k, v in sorted(self.options.items()) if v is not None})
        return out


def parse_kinds(text):
    """``'pp-pp,pp-pm'`` or ``'all'`` -> list of family pairs."""
    if text in (None, ""):
        return None
    if text == "all":
        fams = list(_KIND_CODES.values())
        return [(a, b) for a in fams for b in fams]
    out = []
    for item in text.split(","):
        try:
            a, b = item.strip().split("-")
            out.append((_KIND_CODES[a], _KIND_CODES[b]))
        except (ValueError, KeyError):
            raise ConfigError(f"bad family pair {item!r}; use e.g. pp-pm (codes pp, pm, mp, mm) or 'all'") from None
    return out


def _oracle_strategy(cfg: RunConfig) -> Strategy:
    s = cfg.strategy
    trials = max(10, s.trials) if s.kind == "sampled" else 10
    return Strategy.sampled(s.seed, trials)


def _report(name, cfg, checks):
    rep = Report(name, config=cfg.echo())
    for c in checks:
        rep.add(c)
    return rep


def _merge(name, cfg, reports):
    rep = Report(name, config=cfg.echo())
    for r in reports:
        for c in r.checks:
            c.name = f"{r.suite}: {c.name}"
            rep.add(c)
    return rep


# -- R-matrix and quantum group --------------------------------------------


def s_ybe(cfg):
    return _report("ybe", cfg, [rmatrix.check_ybe(cfg.strategy, cfg.kernel())])


def s_unitarity(cfg):
    return _report("unitarity", cfg, rmatrix.check_unitarity(cfg.strategy, cfg.kernel()))


def s_crossing(cfg):
    M = (lambda d: Mat.identity((1,), d)) if cfg.mutate == "M" else None
    return _report("crossing", cfg, [rmatrix.check_crossing(cfg.strategy, cfg.kernel(), M), rmatrix.check_ratios()])


def s_weak_crossing(cfg):
    return _report("weak_crossing", cfg, [rmatrix.check_weak_crossing(cfg.strategy, cfg.kernel())])


def s_intertwiner(cfg):
    return _report("intertwiner", cfg, [uqsl2.check_intertwiner(cfg.strategy, cfg.kernel())])


def s_dj(cfg):
    return _report("drinfeld_jimbo", cfg, [uqsl2.check_dj_relations(cfg.strategy, cfg.mutate == "coupling"),
                                           uqsl2.check_hopf(cfg.strategy)])


def s_confluence(cfg):
    rep = ncalg.check_confluence(kernel=cfg.kernel())
    rep.config = cfg.echo()
    return rep


# -- reflection equations ----------------------------------------------------


def _const(m_fn):
    return lambda arg, space, d: NCMat.from_mat(m_fn(d, space))


def _s_wrap(d):
    return d if isinstance(d, SubstitutionDomain) else SubstitutionDomain(d, {"q": Monomial.var("s", 2)})


def s_re(cfg):
    ident = algebras.Realization({"K0": lambda arg, space, d: NCMat.identity((space,), d.one)})
    r1 = algebras.verify_relation_set(algebras.relations_re("kernel"), ident, None, cfg.strategy, cfg.kernel(),
                                      suite="K=identity", max_steps=cfg.max_steps)
    r2 = miki.verify_miki_scalar_RE(cfg.strategy, use_M=cfg.mutate != "M", kernel=cfg.kernel(), max_steps=cfg.max_steps)
    return _merge("reflection", cfg, [r1, r2])


def s_tb_re(cfg):
    """The second reflection equation: K = M, and K(u) = Kmiki(u q^-1/2) M."""
    kern = cfg.kernel()
    s_inv = Monomial.var("s", -1)
    use_M = cfg.mutate != "M"
    Mreal = algebras.Realization({"K0": _const(lambda d, sp: crossing_M(d, (sp,)))})

    def miki_tb(arg, space, d):
        k = miki.miki_K(arg * s_inv, domain=d, space=space)
        return k @ crossing_M(d, (space,)) if use_M else k

    rs = algebras.relations_re2("kernel")
    r1 = algebras.verify_relation_set(rs, Mreal, None, cfg.strategy, kern, suite="K=M", domain_wrap=_s_wrap,
                                      max_steps=cfg.max_steps)
    r2 = algebras.verify_relation_set(rs, algebras.Realization({"K0": miki_tb}), miki.fz_rules(kern), cfg.strategy,
                                      kern, suite="K=miki(u q^-1/2) M", domain_wrap=_s_wrap, max_steps=cfg.max_steps)
    return _merge("reflection2", cfg, [r1, r2])


def s_ext_b(cfg):
    k = None if (cfg.opt("gamma_free") or cfg.mutate == "coupling") else cfg.k
    rep = miki.verify_miki_extension(
        k, cfg.strategy, cfg.opt("identification", "corrected"), bool(cfg.opt("literal")),
        kernel=cfg.kernel(), max_steps=cfg.max_steps,
    )
    rep.config = dict(cfg.echo(), **{"k": k, "identification": cfg.opt("identification", "corrected")})
    if not cfg.opt("literal"):
        rep.config["note"] = algebras.TYPO_NOTE
    return rep


def s_miki(cfg):
    if cfg.opt("extended"):
        return s_ext_b(cfg)
    rep = miki.verify_miki_scalar_RE(cfg.strategy, use_M=cfg.mutate != "M", kernel=cfg.kernel(),
                                     max_steps=cfg.max_steps)
    coupling = onsager.OnsagerParams(kp_sign=-1 if cfg.mutate == "coupling" else 1)
    rep.add(onsager.miki_onsager_crosscheck(coupling))
    rep.config = cfg.echo()
    return rep


def s_onsager(cfg):
    rho = "rho" if (cfg.opt("rho_independent") or cfg.mutate == "coupling") else None
    params = onsager.OnsagerParams(rho=rho)
    rep = onsager.verify_onsager_realization(params, cfg.strategy, kernel=cfg.kernel(), max_steps=cfg.max_steps)
    rep.add(onsager.miki_onsager_crosscheck(params))
    rep.config = dict(cfg.echo(), rho=rho or "kp*km*(q+q^-1)^2")
    return rep


def s_dressing(cfg):
    kinds = parse_kinds(cfg.opt("kinds")) or list(dressing.DRESSING_KINDS)
    mut = "shift" if cfg.mutate == "coupling" else None
    r1 = dressing.verify_dressing(kinds, None, cfg.strategy, kernel=cfg.kernel(), max_steps=cfg.max_steps, mutate=mut)
    r2 = dressing.dressing_oracle(_oracle_strategy(cfg), cfg.kernel())
    return _merge("dressing", cfg, [r1, r2])


def s_coaction(cfg):
    kinds = parse_kinds(cfg.opt("kinds")) or [("Kpp", "Kpp")]
    variants = [cfg.opt("variant")] if cfg.opt("variant") else list(coaction.VARIANTS)
    mut = "shift" if cfg.mutate == "coupling" else None
    reps = [
        coaction.verify_coaction(kinds, v, cfg.strategy, mixed_shift=cfg.opt("mixed_shift", "corrected"),
                                 kernel=cfg.kernel(), max_steps=cfg.max_steps, mutate=mut)
        for v in variants
    ]
    extra = Report("gamma=1", checks=[coaction.coaction_matches_dressing()])
    reps.append(extra)
    reps.append(coaction.coaction_oracle(_oracle_strategy(cfg), cfg.kernel()))
    return _merge("coaction", cfg, reps)


def s_qcurrent(cfg):
    rep = dressing.verify_qcurrent(cfg.opt("form", "derived"), cfg.strategy, kernel=cfg.kernel(),
                                   max_steps=cfg.max_steps)
    rep.config = dict(cfg.echo(), form=cfg.opt("form", "derived"))
    return rep


def s_compare(cfg):
    rep = algebras.compare_B_TB_under_crossing(cfg.strategy, crossing=cfg.mutate != "M")
    rep.config = dict(cfg.echo(), crossing=cfg.mutate != "M")
    return rep


def s_transfer(cfg):
    rep = transfer.transfer_commutator(strategy=cfg.strategy, kernel=cfg.kernel())
    rep.config = cfg.echo()
    return rep


SUITES = {
    "check-ybe": s_ybe,
    "check-unitarity": s_unitarity,
    "check-crossing": s_crossing,
    "check-weak-crossing": s_weak_crossing,
    "check-intertwiner": s_intertwiner,
    "check-dj": s_dj,
    "check-confluence": s_confluence,
    "verify-re": s_re,
    "verify-tb-re": s_tb_re,
    "verify-ext-b": s_ext_b,
    "verify-miki": s_miki,
    "verify-onsager": s_onsager,
    "verify-dressing": s_dressing,
    "verify-coaction": s_coaction,
    "verify-qcurrent": s_qcurrent,
    "compare-b-tb": s_compare,
    "transfer-commute": s_transfer,
}

MUTATIONS = {
    "check-ybe": ("kernel",),
    "check-unitarity": ("kernel",),
    "check-crossing": ("kernel", "M"),
    "check-weak-crossing": ("kernel",),
    "check-intertwiner": ("kernel",),
    "check-dj": ("coupling",),
    "check-confluence": ("kernel",),
    "verify-re": ("kernel", "M"),
    "verify-tb-re": ("kernel", "M"),
    "verify-ext-b": ("kernel", "coupling"),
    "verify-miki": ("kernel", "M", "coupling"),
    "verify-onsager": ("coupling",),
    "verify-dressing": ("kernel", "coupling"),
    "verify-coaction": ("kernel", "coupling"),
    "verify-qcurrent": ("kernel",),
    "compare-b-tb": ("M",),
    "transfer-commute": (),
}

# run-all covers the suites whose checks are asserted (the transfer report is exploratory)
ASSERTED = tuple(name for name in SUITES if name != "transfer-commute")


def run_suite(cfg: RunConfig) -> Report:
    if cfg.command not in SUITES:
        raise ConfigError(f"unknown suite {cfg.command!r}")
    if cfg.mutate and cfg.mutate not in MUTATIONS[cfg.command]:
        raise ConfigError(f"{cfg.command} supports mutations {list(MUTATIONS[cfg.command])}, not {cfg.mutate!r}")
    return SUITES[cfg.command](cfg)


def run_all(cfg: RunConfig) -> Report:
    rep = Report("run-all", config=cfg.echo())
    for name in ASSERTED:
        sub = run_suite(RunConfig(name, cfg.strategy, cfg.k, cfg.max_steps, cfg.max_degree, cfg.output, cfg.timings))
        for c in sub.checks:
            c.name = f"{name} / {c.name}"
            rep.add(c)
    return rep
