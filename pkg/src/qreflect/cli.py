"""``qreflect``: run verification suites and print text or JSON reports.

Exit status: 0 when every asserted check passes, 1 on a verification
failure, 2 on a configuration error, 3 when a resource limit (rewriting
steps, polynomial degree, sampler retries) aborts the run.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .algebras import RELATION_SETS, list_relations
from .errors import (
    ConfigError,
    DegreeLimitExceeded,
    ParseError,
    QReflectError,
    SamplerExhausted,
    StepLimitExceeded,
    UnboundVariable,
)
from .expr import parse_assignment
from .field import degree_limit
from .sampling import Strategy, sample_point
from .suites import MUTATIONS, RunConfig, run_all, run_suite

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_RESOURCE = 0, 1, 2, 3

# global option -> (type, default)
_GLOBAL = {
    "strategy": (str, "symbolic"),
    "seed": (int, 0),
    "trials": (int, 8),
    "k": (int, 1),
    "max_steps": (int, None),
    "max_degree": (int, 512),
    "output": (str, "text"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("run options")
    g.add_argument("--strategy", choices=("symbolic", "sampled"))
    g.add_argument("--seed", type=int)
    g.add_argument("--trials", type=int)
    g.add_argument("--k", type=int, help="gamma-tilde squared = q^k")
    g.add_argument("--max-steps", type=int, dest="max_steps")
    g.add_argument("--max-degree", type=int, dest="max_degree")
    g.add_argument("--output", choices=("text", "json"))
    g.add_argument("--assign", action="append", default=[], metavar="NAME=EXPR",
                   help="fix a variable in sampled mode (repeatable)")
    g.add_argument("--config", metavar="FILE", help="key=value file; command-line flags win")
    g.add_argument("--no-timings", action="store_true", default=None, dest="no_timings")
    g.add_argument("--mutate", choices=("kernel", "M", "coupling"), help="deliberately corrupt the suite")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="qreflect", description="Exact verification of R-matrix and reflection algebra identities.")
    parser.add_argument("--version", action="version", version=f"qreflect {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True
    helps = {
        "check-ybe": "Yang-Baxter equation for the kernel",
        "check-unitarity": "unitarity and inverse of the kernel",
        "check-crossing": "crossing symmetry of the f-normalized R and the ratio identity",
        "check-weak-crossing": "weak crossing of the r-normalized R",
        "check-intertwiner": "R intertwines the coproduct in the evaluation representation",
        "check-dj": "Drinfeld-Jimbo relations in the evaluation representation",
        "check-confluence": "confluence of the ZF exchange rules on length-3 words",
        "verify-re": "reflection equation: K = identity and the Miki-type K",
        "verify-tb-re": "second reflection equation: K = M and the shifted Miki-type K",
        "verify-ext-b": "extended reflection algebra realized by the Miki-type K",
        "verify-miki": "Miki-type K: scalar reflection equation or extended algebra",
        "verify-onsager": "q-Onsager current relations under the ZF realization",
        "verify-dressing": "dressed K-matrices from the extended Yang-Baxter algebra",
        "verify-coaction": "homomorphism property of the coaction",
        "verify-qcurrent": "exchange relation of the quantum current",
        "compare-b-tb": "map the TB relations onto the B relations through crossing",
        "transfer-commute": "exploratory: commutator of trace candidates",
        "run-all": "every asserted suite",
    }
    parsers = {}
    for name, text in helps.items():
        parsers[name] = sub.add_parser(name, parents=[common], help=text, description=text)
    lr = sub.add_parser("list-relations", parents=[common], help="print a relation set")
    lr.add_argument("name", nargs="?", choices=sorted(RELATION_SETS))
    for name in ("verify-ext-b", "verify-miki"):
        p = parsers[name]
        p.add_argument("--gamma-free", action="store_true", default=None, dest="gamma_free",
                       help="leave gamma-tilde squared independent (expected to fail)")
        p.add_argument("--literal", action="store_true", default=None, help="untilded factors as printed")
        p.add_argument("--identification", choices=("corrected", "printed"))
    mode = parsers["verify-miki"].add_mutually_exclusive_group()
    mode.add_argument("--scalar", action="store_true", default=None)
    mode.add_argument("--extended", action="store_true", default=None)
    parsers["verify-onsager"].add_argument("--rho-independent", action="store_true", default=None,
                                           dest="rho_independent")
    for name in ("verify-dressing", "verify-coaction"):
        parsers[name].add_argument("--kinds", help="family pairs, e.g. pp-pp,pp-pm, or 'all'")
    parsers["verify-coaction"].add_argument("--variant", choices=("B", "TB"))
    parsers["verify-coaction"].add_argument("--mixed-shift", choices=("corrected", "printed"), dest="mixed_shift")
    parsers["verify-qcurrent"].add_argument("--form", choices=("derived", "printed"))
    return parser


def read_config_file(path: str) -> dict:
    out = {"assign": []}
    try:
        lines = open(path, encoding="utf-8").read().splitlines()
    except OSError as e:
        raise ConfigError(f"cannot read config file: {e}") from None
    for n, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{n}: expected key=value")
        key, val = (t.strip() for t in line.split("=", 1))
        key = key.replace("-", "_")
        if key == "assign":
            out["assign"].append(val)
        elif key in _GLOBAL:
            typ = _GLOBAL[key][0]
            try:
                out[key] = typ(val)
            except ValueError:
                raise ConfigError(f"{path}:{n}: bad value for {key}: {val!r}") from None
        elif key == "no_timings":
            out[key] = val.lower() in ("1", "true", "yes")
        else:
            raise ConfigError(f"{path}:{n}: unknown key {key!r}")
    return out


def make_config(args) -> RunConfig:
    filecfg = read_config_file(args.config) if getattr(args, "config", None) else {"assign": []}
    vals = {}
    for key, (_, default) in _GLOBAL.items():
        v = getattr(args, key, None)
        vals[key] = v if v is not None else filecfg.get(key, default)
    timings = not (args.no_timings if args.no_timings is not None else filecfg.get("no_timings", False))
    assigns = {}
    for text in filecfg["assign"] + list(args.assign or []):
        name, value = parse_assignment(text)
        assigns[name] = value
    if vals["trials"] < 1:
        raise ConfigError("--trials must be at least 1")
    if vals["max_steps"] is not None and vals["max_steps"] < 1:
        raise ConfigError("--max-steps must be positive")
    if vals["max_degree"] < 1:
        raise ConfigError("--max-degree must be positive")
    if vals["strategy"] == "sampled":
        strategy = Strategy.sampled(vals["seed"], vals["trials"], assigns)
        if assigns:
            try:
                sample_point(vals["seed"], 0, assign=assigns)
            except SamplerExhausted:
                raise ConfigError("assignment lies on an excluded locus (u=+-1, v=+-1, u=+-v, uv=+-1, q^2=1)") from None
    elif vals["strategy"] == "symbolic":
        if assigns:
            raise ConfigError("--assign requires --strategy sampled")
        strategy = Strategy.symbolic()
    else:
        raise ConfigError(f"unknown strategy {vals['strategy']!r}")
    options = {}
    for key in ("gamma_free", "literal", "identification", "scalar", "extended", "rho_independent", "kinds",
                "variant", "mixed_shift", "form"):
        v = getattr(args, key, None)
        if v is not None:
            options[key] = v
    if options.get("gamma_free") and options.get("extended") is None and args.command == "verify-miki":
        options["extended"] = True
    return RunConfig(
        command=args.command,
        strategy=strategy,
        k=vals["k"],
        max_steps=vals["max_steps"],
        max_degree=vals["max_degree"],
        output=vals["output"],
        timings=timings,
        mutate=getattr(args, "mutate", None),
        options=options,
    )


def _emit_error(exc, code, output):
    if output == "json":
        print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc), "exit_code": code}},
                         indent=2, sort_keys=True))
    else:
        print(f"qreflect: error: {exc}", file=sys.stderr)
    return code


def _list_relations(cfg, name):
    if name is None:
        names = sorted(RELATION_SETS)
        if cfg.output == "json":
            print(json.dumps({"relation_sets": names}, indent=2))
        else:
            print("\n".join(names))
        return EXIT_OK
    rs = list_relations(name)
    if cfg.output == "json":
        print(json.dumps({"name": rs.name, "relations": [r.render() for r in rs], "note": rs.note,
                          "order": rs.order}, indent=2, sort_keys=True))
    else:
        print(rs.render())
    return EXIT_OK


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    output = "json" if "json" in argv and "--output" in argv else "text"
    try:
        args = build_parser().parse_args(argv)
        cfg = make_config(args)
        output = cfg.output
        if cfg.command == "list-relations":
            return _list_relations(cfg, args.name)
        if cfg.mutate and cfg.command != "run-all" and cfg.mutate not in MUTATIONS[cfg.command]:
            raise ConfigError(f"{cfg.command} supports mutations {list(MUTATIONS[cfg.command])}")
        if cfg.mutate and cfg.command == "run-all":
            raise ConfigError("run-all does not take --mutate")
        with degree_limit(cfg.max_degree):
            report = run_all(cfg) if cfg.command == "run-all" else run_suite(cfg)
    except (ConfigError, ParseError, UnboundVariable) as e:
        return _emit_error(e, EXIT_CONFIG, output)
    except (StepLimitExceeded, DegreeLimitExceeded, SamplerExhausted, MemoryError) as e:
        return _emit_error(e, EXIT_RESOURCE, output)
    except QReflectError as e:
        return _emit_error(e, EXIT_FAIL, output)
    if cfg.output == "json":
        print(report.to_json(timings=cfg.timings))
    else:
        print(report.to_text(timings=cfg.timings))
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
