from __future__ import annotations

import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from fivebundles.cli import (
    EXIT_COMPUTATION,
    EXIT_DATA,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VALIDATION,
    complex_hash,
    load_complex,
    parse_class,
    render_text,
    run,
)
from fivebundles.cohomology import Ring, class_to_json, coordinates
from fivebundles.complex_store import SimplicialComplex, fixture, serialize_complex
from fivebundles.errors import ParseError, ValidationError
from fivebundles.framed_loops import example_s5_divisor

SCHEMA = json.loads(resources.files("fivebundles").joinpath("report.schema.json").read_text())


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code, report = run(list(argv), stdout=out, stderr=err)
    return code, report, out.getvalue(), err.getvalue()


def _json(*argv):
    code, report, out, err = _run(*argv, "--json")
    assert code == EXIT_OK, err
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return doc


FAST_VERBS = [
    ("homology", "fixtures:s5"),
    ("cohomology", "fixtures:cp2"),
    ("wu", "fixtures:cp2"),
    ("sw", "fixtures:cp2"),
    ("spin-check", "fixtures:s2xs3"),
    ("kervaire", "fixtures:s1xs4"),
    ("conditions", "fixtures:s5"),
    ("pi4", "fixtures:s5"),
    ("enumerate-bundles", "fixtures:s5"),
    ("classify", "fixtures:s1xs4"),
    ("verdict", "fixtures:s2xs3"),
]


@pytest.mark.parametrize("verb,target", FAST_VERBS)
def test_verbs_emit_schema_valid_json(verb, target):
    doc = _json(verb, target)
    assert doc["command"] == verb
    assert doc["inputs"]["sha256"] == complex_hash(load_complex(target))
    assert doc["timing"]["seconds"] >= 0


@pytest.mark.parametrize("verb,target", FAST_VERBS)
def test_human_and_json_results_agree(verb, target):
    doc = _json(verb, target)
    code, _, text, _ = _run(verb, target)
    assert code == EXIT_OK
    assert sorted(text.strip().splitlines()) == sorted(render_text(doc).splitlines())
    lines = [ln for ln in text.splitlines() if not ln.startswith("citation: ")]
    pairs = dict(ln.split(": ", 1) for ln in lines)
    flat = {}

    def walk(prefix, v):
        if isinstance(v, dict):
            for k, x in v.items():
                walk(f"{prefix}.{k}" if prefix else k, x)
        else:
            flat[prefix] = v

    walk("", doc["results"])
    assert set(pairs) == set(flat)
    for key, value in flat.items():
        shown = pairs[key]
        assert (shown if isinstance(value, str) else json.loads(shown)) == value


def test_classify_s5():
    r = _json("classify", "fixtures:s5")["results"]
    assert r["W1_count"] == 2 and r["W2_count"] == 0 and r["W2"] == "empty"


def test_kervaire_s1xs4():
    assert _json("kervaire", "fixtures:s1xs4")["results"]["k"] == 0


def test_gamma_check_cp2_tangent_triple():
    assert _json("gamma-check", "fixtures:cp2", "--a", "x", "--b", "x2", "--c", "3*x2")["results"]["realizable"] is True
    assert _json("gamma-check", "fixtures:cp2", "--a", "0", "--b", "0", "--c", "x^2")["results"]["realizable"] is False
    # the printed H^4(Z) generator is -x^2 on this triangulation
    assert _json("cohomology", "fixtures:cp2", "--ring", "Z", "--basis")["results"]["basis"]["4"][0]["name"] == "g1"
    assert _json("gamma-check", "fixtures:cp2", "--a", "g1", "--b", "g1", "--c=-3*g1")["results"]["realizable"] is True
    assert _json("gamma-check", "fixtures:cp2", "--a", "g1", "--b", "g1", "--c", "3*g1")["results"]["realizable"] is False


def test_conditions_on_torsion_lists():
    assert _json("conditions", "--torsion", "2,2")["results"]["condition_A"] is True
    assert _json("conditions", "--torsion", "4")["results"]["condition_A"] is False
    assert _json("conditions", "--torsion", "")["results"]["condition_A"] is True


def test_pi4_and_verdict_reports():
    p = _json("pi4", "fixtures:s1xs4")["results"]
    assert p["group"] == "Z + Z2" and p["split_reason"] == "spin"
    v = _json("verdict", "fixtures:s5", "--stably-parallelizable")["results"]
    assert v["verdict"] == "tangent_iso_pullback_TS5" and v["kervaire"] == 1
    v = _json("verdict", "fixtures:s1xs4", "--stably-parallelizable")["results"]
    assert v["verdict"] == "parallelizable"


def test_cohomology_basis_listing():
    r = _json("cohomology", "fixtures:cp2", "--ring", "Z", "--basis")["results"]
    assert [g["name"] for g in r["basis"]["2"]] == ["g1"]
    assert r["table"] == ["Z", "0", "Z", "0", "Z"]


def test_fixtures_listing_and_export(tmp_path):
    r = _json("fixtures")["results"]
    assert r["fixtures"]["s5"] == "available"
    out = tmp_path / "cp2.scx"
    _json("fixtures", "cp2", "--out", str(out))
    assert load_complex(str(out)).facets == fixture("cp2").facets


@pytest.mark.parametrize("name", ["s5", "cp2", "s2xs3", "s1xs4", "rp4"])
def test_round_trip_reports_identical(tmp_path, name):
    path = tmp_path / f"{name}.scx"
    path.write_text(serialize_complex(fixture(name)))
    verbs = ["homology", "spin-check"] + (["kervaire"] if fixture(name).dim == 5 else [])
    for verb in verbs:
        a = _json(verb, f"fixtures:{name}")
        b = _json(verb, str(path))
        assert a["results"] == b["results"] and a["citations"] == b["citations"]
        assert a["inputs"]["sha256"] == b["inputs"]["sha256"]


def test_kappa_loop_example_and_file(tmp_path):
    r = _json("kappa-loop", "--example", "s5")["results"]
    assert r["kappa"] == 1 and r["samples"] == 256
    assert _json("kappa-loop", "--example", "s5", "--framing", "bounding", "--samples", "128")["results"]["kappa"] == 0
    path = tmp_path / "loop.json"
    path.write_text(json.dumps(example_s5_divisor(128).to_json()))
    assert _json("kappa-loop", str(path))["results"]["kappa"] == 1


def test_exit_codes(tmp_path):
    assert _run("frobnicate")[0] == EXIT_USAGE
    assert _run()[0] == EXIT_USAGE
    assert _run("conditions")[0] == EXIT_USAGE
    bad = tmp_path / "bad.scx"
    bad.write_text("dim 2\nfacet 0 1\n")
    assert _run("homology", str(bad))[0] == EXIT_DATA
    bad.write_text("dim 2\nf 0 1\n")
    assert _run("homology", str(bad))[0] == EXIT_VALIDATION
    assert _run("homology", str(tmp_path / "missing.scx"))[0] == EXIT_DATA
    assert _run("homology", "fixtures:nope")[0] == EXIT_VALIDATION
    assert _run("gamma-check", "fixtures:cp2", "--a", "g7")[0] == EXIT_VALIDATION
    assert _run("gamma-check", "fixtures:cp2", "--a", "x?")[0] == EXIT_DATA
    assert _run("kervaire", "fixtures:cp2")[0] == EXIT_VALIDATION
    assert _run("enumerate-bundles", "fixtures:rp5")[0] == EXIT_VALIDATION
    wedge = tmp_path / "wedge.scx"
    s5 = fixture("s5").facets
    wedge.write_text(serialize_complex(SimplicialComplex.from_facets(list(s5) + [tuple(v + 6 for v in f) for f in s5])))
    assert _run("pi4", str(wedge))[0] == EXIT_COMPUTATION
    loop = tmp_path / "loop.json"
    loop.write_text("{")
    assert _run("kappa-loop", str(loop))[0] == EXIT_DATA


def test_parse_class_forms(tmp_path):
    K = fixture("cp2")
    x = parse_class("x", K, Ring.Z, 2)
    assert coordinates(x) == (1,)
    assert coordinates(parse_class("-2*g1 + 5*g1", K, Ring.Z, 4)) == (3,)
    path = tmp_path / "c.json"
    path.write_text(json.dumps(class_to_json(x)))
    assert coordinates(parse_class(f"@{path}", K, Ring.Z, 2)) == (1,)
    with pytest.raises(ValidationError):
        parse_class(f"@{path}", K, Ring.Z2, 2)
    with pytest.raises(ValidationError):
        parse_class("x", K, Ring.Z, 4)
    with pytest.raises(ParseError):
        parse_class("@/nonexistent/file", K, Ring.Z, 2)


def test_deterministic_reports():
    a = _json("classify", "fixtures:s1xs4")
    b = _json("classify", "fixtures:s1xs4")
    a.pop("timing"), b.pop("timing")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fivebundles", "spin-check", "fixtures:s5", "--json"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"] == {"orientable": True, "spin": True}
    proc = subprocess.run([sys.executable, "-m", "fivebundles", "nope"], capture_output=True, text=True)
    assert proc.returncode == EXIT_USAGE
