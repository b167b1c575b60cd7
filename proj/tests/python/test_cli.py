import json
import os
import subprocess

import jsonschema
import pytest
from referencing import Registry, Resource


def run(cli, *args, env=None):
    full_env = {k: v for k, v in os.environ.items() if not k.startswith("EXRINGS_")}
    full_env.update(env or {})
    return subprocess.run([cli, *args], capture_output=True, text=True, env=full_env, timeout=900)


@pytest.fixture(scope="module")
def validator(schema_dir):
    verdict = json.loads((schema_dir / "verdict.schema.json").read_text())
    report = json.loads((schema_dir / "report.schema.json").read_text())
    registry = Registry().with_resource("verdict.schema.json", Resource.from_contents(verdict))
    return jsonschema.Draft202012Validator(report, registry=registry)


def test_verify_exhaustive_gf2(cli):
    res = run(cli, "verify", "--theorem", "thm16", "--ring", "m2-gf2")
    assert res.returncode == 0
    assert "PASS thm16 [m2-gf2] ProvedExhaustive" in res.stdout


def test_verify_json_validates(cli, validator):
    res = run(cli, "verify", "--theorem", "ex3", "--degree", "8", "--format", "json")
    assert res.returncode == 0
    report = json.loads(res.stdout)
    validator.validate(report)
    assert report["verdicts"][0]["theorem"] == "ex3"
    assert report["verdicts"][0]["cases_failed"] == 0


def test_full_report_validates(cli, validator):
    res = run(cli, "verify", "--theorem", "all", "--samples", "20", "--degree", "6", "--format", "json")
    assert res.returncode == 0, res.stdout[-2000:]
    report = json.loads(res.stdout)
    validator.validate(report)
    assert report["all_passed"]


def test_exit_codes(cli):
    assert run(cli, "verify", "--theorem", "bogus").returncode == 2
    assert run(cli, "verify", "--theorem", "thm16", "--ring", "m2-poly2").returncode == 2
    assert run(cli, "verify", "--theorem", "thm16", "--ring", "m2-nothing").returncode == 2
    assert run(cli, "verify", "--format", "yaml").returncode == 2
    assert run(cli, "frobnicate").returncode == 2


def test_failure_exits_one(cli):
    # Two samples cannot exercise both directions of the randomized checkers.
    res = run(cli, "verify", "--theorem", "thm36", "--ring", "m2-poly2", "--samples", "2")
    assert res.returncode == 1
    assert "FAIL thm36" in res.stdout


def test_env_overrides(cli):
    res = run(cli, "verify", "--format", "json", env={"EXRINGS_THEOREM": "ex2", "EXRINGS_SEED": "5", "EXRINGS_SAMPLES": "30"})
    assert res.returncode == 0
    report = json.loads(res.stdout)
    assert [v["theorem"] for v in report["verdicts"]] == ["ex2"]
    assert report["config"] == {"degree": 8, "seed": 5, "samples": 30}


def test_reports_are_byte_stable(cli):
    args = ("verify", "--theorem", "thm29,lem17,thm32", "--seed", "42", "--samples", "100", "--format", "json")
    a = run(cli, *args, "--jobs", "1")
    b = run(cli, *args, "--jobs", "4")
    assert a.returncode == 0
    assert a.stdout == b.stdout


def test_classify(cli, data_dir):
    res = run(cli, "classify", str(data_dir / "type2.gens"))
    assert res.returncode == 0
    assert res.stdout.splitlines()[0] == "TypeII, LC = RC (dim 4)"
    res = run(cli, "classify", str(data_dir / "central.gens"))
    assert res.stdout.startswith("Central")
    res = run(cli, "classify", str(data_dir / "e12.gens"))
    assert res.returncode == 0
    assert res.stdout.startswith("not a Lie ideal")
    assert "witness:" in res.stdout
    assert run(cli, "classify", str(data_dir / "missing.gens")).returncode == 2


def test_list(cli):
    res = run(cli, "list")
    assert "m2-gf2 (exhaustive), m2-gf4 (exhaustive)" in res.stdout
    entries = json.loads(run(cli, "list", "--format", "json").stdout)
    assert len(entries) == 31


def test_derivation(cli):
    res = run(cli, "derivation", "sum(dt, inner e11)", "--apply", "[[t,0],[0,1]]", "--format", "json")
    assert res.returncode == 0
    out = json.loads(res.stdout)
    assert out["x_inner"] is False
    assert out["images"][0]["d(x)"] == "[[1,0],[0,0]]"
    assert run(cli, "derivation", "integrate").returncode == 2
