import json
import subprocess
import sys

import pytest

from qreflect.cli import main, read_config_file
from qreflect.errors import ConfigError
from qreflect.report import Report

GOLDEN_YBE = {
    "checks": [
        {
            "asserted": True,
            "info": {"evaluations": 1, "strategy": {"strategy": "symbolic"}},
            "name": "ybe",
            "residual": {},
            "status": "pass",
        }
    ],
    "config": {"command": "check-ybe", "k": 1, "max_degree": 512, "strategy": "symbolic"},
    "residuals": {},
    "status": "pass",
    "suite": "ybe",
    "version": "0.1.0",
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_ybe_text(capsys):
    code, out, _ = run(capsys, "check-ybe")
    assert code == 0
    assert out.startswith("suite ybe: PASS")


def test_json_golden(capsys):
    code, out, _ = run(capsys, "check-ybe", "--output", "json", "--no-timings")
    assert code == 0
    assert json.loads(out) == GOLDEN_YBE


def test_json_is_deterministic(capsys):
    argv = ("verify-miki", "--strategy", "sampled", "--seed", "4", "--trials", "2", "--output", "json", "--no-timings")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    rep = Report.from_json(first)
    assert rep.passed and rep.config["seed"] == 4


def test_extended_miki_sampled(capsys):
    code, out, _ = run(capsys, "verify-miki", "--extended", "--k", "1", "--strategy", "sampled", "--trials", "2")
    assert code == 0
    assert "(--,--)" in out


def test_gamma_free_fails_with_diagnostic(capsys):
    code, out, _ = run(capsys, "verify-ext-b", "--gamma-free", "--strategy", "sampled", "--trials", "1")
    assert code == 1
    assert "residual.irreducible_prefactor: true" in out


def test_mutation_fails(capsys):
    code, out, _ = run(capsys, "check-ybe", "--mutate", "kernel")
    assert code == 1
    assert "FAIL" in out


def test_unsupported_mutation(capsys):
    code, _, err = run(capsys, "check-dj", "--mutate", "M")
    assert code == 2
    assert "supports mutations" in err


def test_step_limit_exit_code(capsys):
    code, _, err = run(capsys, "verify-miki", "--max-steps", "3")
    assert code == 3
    assert "steps" in err


def test_degree_limit_exit_code(capsys):
    code, _, _ = run(capsys, "verify-ext-b", "--max-degree", "3")
    assert code == 3


def test_json_error_object(capsys):
    code, out, _ = run(capsys, "check-ybe", "--output", "json", "--assign", "u=2")
    assert code == 2
    err = json.loads(out)["error"]
    assert err["type"] == "ConfigError" and err["exit_code"] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("check-ybe", "--strategy", "sampled", "--assign", "u=1"),
        ("check-ybe", "--strategy", "sampled", "--assign", "u=1/"),
        ("check-ybe", "--strategy", "sampled", "--assign", "u=v"),
        ("check-ybe", "--trials", "0", "--strategy", "sampled"),
        ("check-ybe", "--bogus"),
        ("no-such-command",),
        ("run-all", "--mutate", "kernel"),
    ],
)
def test_config_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_assign_pins_a_variable(capsys):
    code, out, _ = run(
        capsys, "check-ybe", "--strategy", "sampled", "--trials", "1", "--assign", "u=3/7", "--output", "json"
    )
    assert code == 0
    assert json.loads(out)["config"]["assign"] == {"u": "3/7"}


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# sampled run\nstrategy = sampled\ntrials = 2\nseed = 11\nassign = u=5/3\nno_timings = yes\n")
    assert read_config_file(str(cfg))["assign"] == ["u=5/3"]
    code, out, _ = run(capsys, "check-ybe", "--config", str(cfg), "--seed", "12", "--output", "json")
    assert code == 0
    conf = json.loads(out)["config"]
    assert conf["seed"] == 12 and conf["trials"] == 2
    assert "seconds" not in out


def test_bad_config_file(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("colour = blue\n")
    with pytest.raises(ConfigError):
        read_config_file(str(cfg))
    with pytest.raises(ConfigError):
        read_config_file(str(tmp_path / "missing.cfg"))


def test_list_relations(capsys):
    code, out, _ = run(capsys, "list-relations")
    assert code == 0 and "ext-b" in out.split()
    code, out, _ = run(capsys, "list-relations", "ext-b", "--output", "json")
    data = json.loads(out)
    assert len(data["relations"]) == 16 and data["note"]


def test_transfer_is_not_asserted(capsys):
    code, out, _ = run(capsys, "transfer-commute", "--strategy", "sampled", "--trials", "1")
    assert code == 0
    assert "(not asserted)" in out


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "qreflect.cli", "check-unitarity", "--no-timings"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "suite unitarity: PASS" in proc.stdout
