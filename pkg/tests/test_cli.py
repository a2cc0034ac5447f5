import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

from braidband.cli import run

SCHEMAS = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def _registry():
    pairs = []
    for p in SCHEMAS.glob("*.schema.json"):
        data = json.loads(p.read_text())
        pairs.append((data["$id"], Resource.from_contents(data)))
    return Registry().with_resources(pairs)


REGISTRY = _registry()


def validate(name, data):
    schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    Draft202012Validator(schema, registry=REGISTRY).validate(data)


def call(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    old = dict(os.environ)
    if env:
        os.environ.update(env)
    try:
        code = run(list(argv), out, err)
    finally:
        os.environ.clear()
        os.environ.update(old)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call("--format", "json", *argv)
    return code, json.loads(out) if out else None


@pytest.fixture
def pierced_file(tmp_path):
    p = tmp_path / "pierced.json"
    p.write_text(json.dumps({"strands": 4, "bands": [{"sign": 1, "conjugator": [-3, 2]}]}))
    return str(p)


@pytest.fixture
def profile_file(tmp_path):
    p = tmp_path / "profile.json"
    p.write_text(json.dumps({"strands": 2, "points": [[0, 1, -1, 1], [1, 1, 1, 1]]}))
    return str(p)


def test_schemas_are_valid():
    for p in SCHEMAS.glob("*.schema.json"):
        Draft202012Validator.check_schema(json.loads(p.read_text()))


def test_inputs_match_schemas(pierced_file, profile_file):
    validate("band_presentation", json.loads(Path(pierced_file).read_text()))
    validate("profile", json.loads(Path(profile_file).read_text()))
    validate("word_input", {"strands": 3, "word": "1 -2"})
    validate("word_input", {"strands": 3, "word": [1, -2]})


def test_equal_text():
    code, out, _ = call("equal", "--n", "3", "--word", "1 2 1", "--word2", "2 1 2")
    assert code == 0 and out.strip() == "equal"
    code, out, _ = call("equal", "--n", "3", "--word", "1 2", "--word2", "2 1")
    assert code == 0 and out.strip() == "not equal"


def test_is_band_pierced_example():
    code, out, _ = call("is-band", "--n", "4", "--word", "-3 2 1 -2 3")
    assert code == 0 and out.strip() == "positive band"
    code, data = call_json("is-band", "--n", "3", "--word", "1 1")
    assert data["band"] == "not a band"
    validate("is_band_output", data)


def test_surface_pierced_example(pierced_file):
    code, data = call_json("surface", "--file", pierced_file)
    assert code == 0
    validate("surface_output", data)
    assert data["bands"][0]["attach"] == [1, 4]
    assert data["bands"][0]["singularities"] == [3]
    code, out, _ = call("surface", "--file", pierced_file)
    assert "D1 - D4" in out


@pytest.mark.parametrize(
    "schema,argv",
    [
        ("normal_form_output", ["normal-form", "--n", "3", "--word", "1 2 1 -2"]),
        ("normal_form_output", ["normal-form", "--n", "3", "--word", ""]),
        ("equal_output", ["equal", "--n", "3", "--word", "1 2 1", "--word2", "2 1 2"]),
        ("conjugate_output", ["conjugate", "--n", "3", "--word", "1", "--word2", "2"]),
        ("conjugate_output", ["conjugate", "--n", "3", "--word", "1", "--word2", "-2"]),
        ("band_search_output", ["band-search", "--n", "4", "--word", "1 2 3"]),
        ("obstruct_output", ["obstruct", "--n", "3", "--word", "1 2"]),
        ("obstruct_output", ["obstruct", "--n", "2", "--word", "1 1 1", "--phi", "endpoint", "--s", "2"]),
        ("slice_check_output", ["slice-check", "--n", "2", "--word", "1 1 1"]),
    ],
)
def test_json_outputs_validate(schema, argv):
    code, data = call_json(*argv)
    assert code == 0
    validate(schema, data)


def test_conjugate_witness():
    code, data = call_json("conjugate", "--n", "3", "--word", "1", "--word2", "2")
    assert data["conjugate"] is True and data["witness"] is not None
    code, data = call_json("conjugate", "--n", "3", "--word", "1", "--word2", "-2")
    assert data["conjugate"] is False and data["witness"] is None


def test_profile_check(profile_file):
    code, data = call_json("profile-check", "--file", profile_file)
    assert code == 0
    validate("profile_check_output", data)
    assert data["max_gap"] == 1 and data["max_gap_at"] == 0 and data["endpoint_max"] is True


def test_obstruct_with_profile(profile_file):
    code, data = call_json("obstruct", "--n", "2", "--word", "1", "--phi", "profile", "--profile", profile_file)
    assert code == 0 and data["verdict"] == "no obstruction"
    validate("obstruct_output", data)


def test_slice_check_trefoil():
    code, data = call_json("slice-check", "--n", "2", "--word", "1 1 1", "--q-max", "2")
    assert data["violations"] == [0] and data["verdict"] == "not slice"


def test_word_from_file(tmp_path):
    p = tmp_path / "w.json"
    p.write_text(json.dumps({"strands": 3, "word": [1, 2, 1]}))
    code, data = call_json("normal-form", "--file", str(p))
    assert code == 0 and data["braid"] == "1 2 1"


def test_domain_errors(tmp_path):
    assert call("normal-form", "--n", "3", "--word", "1 5")[0] == 1
    assert call("obstruct", "--n", "2", "--word", "1 1")[0] == 1  # two components
    assert call("obstruct", "--n", "2", "--word", "1", "--phi", "writhe")[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"strands": 2, "points": [[0, 1, -1, 1], [1, 1, 2, 1]]}))
    assert call("profile-check", "--file", str(bad))[0] == 1


def test_budget_exit():
    code, _, err = call("conjugate", "--n", "4", "--word", "1 2 3 -1 2", "--word2", "3 2 1 -3 2",
                        "--orbit-budget", "1")
    assert code == 2 and "budget" in err
    code, data = call_json("band-search", "--n", "3", "--word", "1 1 2 2 -1", "--max-bands", "1")
    assert code == 2 and data["exact"] is False


def test_config_file(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"garside": {"orbit_budget": 1}}))
    code, _, _ = call("--config", str(cfg), "conjugate", "--n", "4", "--word", "1 2 3 -1 2",
                      "--word2", "3 2 1 -3 2")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["equal", "--word", "1"],
        ["equal", "--n", "2", "--word", "1"],
        ["normal-form", "--n", "3"],
        ["normal-form", "--n", "x", "--word", "1"],
        ["surface"],
        ["obstruct", "--n", "2", "--word", "1", "--phi", "endpoint"],
        ["obstruct", "--n", "2", "--word", "1", "--phi", "endpoint", "--s", "abc"],
        ["surface", "--file", "/nonexistent/x.json"],
    ],
)
def test_usage_errors(argv):
    code, _, err = call(*argv)
    assert code == 64 and err


def test_thread_variable():
    assert call("equal", "--n", "2", "--word", "1", "--word2", "1", env={"BRAIDBAND_THREADS": "4"})[0] == 0
    assert call("equal", "--n", "2", "--word", "1", "--word2", "1", env={"BRAIDBAND_THREADS": "0"})[0] == 64


def test_deterministic_subprocess(pierced_file):
    argv = [sys.executable, "-m", "braidband", "--format", "json", "band-search", "--n", "4", "--word", "1 -2 3 2"]
    a = subprocess.run(argv, capture_output=True, check=False)
    b = subprocess.run(argv, capture_output=True, check=False)
    assert a.returncode == b.returncode and a.stdout == b.stdout and a.stdout
    argv = [sys.executable, "-m", "braidband", "surface", "--file", pierced_file]
    assert subprocess.run(argv, capture_output=True).stdout == subprocess.run(argv, capture_output=True).stdout
