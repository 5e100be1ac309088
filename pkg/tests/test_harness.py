import json

import pytest

from koszul_depth.harness.cli import cli_main
from koszul_depth.harness.families import UnknownFamily, generate_instances
from koszul_depth.harness.instance import Instance, InstanceError, load_instances
from koszul_depth.harness.suites import SUITES, UnknownSuite, run_suite
from koszul_depth.homology.extended import ext

QXYZ = {"field": "Q", "vars": ["x", "y", "z"], "order": "grevlex", "ideal": []}
FREE = {"window": [0, 0], "ranks": {"0": 1}, "diffs": {}, "grading": {"0": [0]}}


def small_instance(**over):
    data = {
        "name": "small",
        "ring": QXYZ,
        "ideals": {"m": ["x", "y", "z"]},
        "complexes": {"R": FREE},
        "primes": {},
        "suites": ["theorem-I"],
        "caps": {},
        "expect": {"depth[m,R]": {"value": 3, "tag": "derived"}},
    }
    data.update(over)
    return data


def write(tmp_path, data, name="inst.json"):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


def test_regular_sequence_family():
    (inst,) = generate_instances("regular-sequence", v=3)
    assert inst.ring.variables == ("x", "y", "z")
    assert inst.ideals["m"] == ["x", "y", "z"]


def test_example_family():
    (inst,) = generate_instances("example-2.6", window=5)
    assert inst.ring.variables == ("t",)
    assert all(inst.ideal(f"a{n}") == [inst.ring.parse(f"t-{n}")] for n in range(6))
    assert inst.complex("M").is_rule() and inst.complex("M").tail.kind == "parametric"


def test_frobenius_singular_family():
    (inst,) = generate_instances("frobenius-singular", p=2)
    assert inst.ring.characteristic == 2
    assert [str(g) for g in inst.ring.ideal] == ["x^2"]


def test_unknown_family():
    with pytest.raises(UnknownFamily):
        generate_instances("no-such-family")


def test_generation_is_deterministic():
    a = [i.to_json() for i in generate_instances("theorem-i", seed=7, count=4)]
    b = [i.to_json() for i in generate_instances("theorem-i", seed=7, count=4)]
    c = [i.to_json() for i in generate_instances("theorem-i", seed=8, count=4)]
    assert a == b and a != c


def test_instance_validation():
    with pytest.raises(InstanceError):
        Instance.from_json(small_instance(caps={"resolution_length": 0}))
    with pytest.raises(InstanceError):
        Instance.from_json(small_instance(expect={"depth[m,R]": {"value": 3, "tag": "guess"}}))
    with pytest.raises(InstanceError):
        Instance.from_json(small_instance(params={"pairs": [["m", "missing"]]}))
    with pytest.raises(InstanceError):
        Instance.from_json({"ideals": {}})


def test_instance_roundtrip(tmp_path):
    inst = Instance.from_json(small_instance())
    path = write(tmp_path, inst.to_json())
    (back,) = load_instances(path)
    assert back.to_json() == inst.to_json()


def test_theorem_i_on_regular_sequence():
    (inst,) = generate_instances("regular-sequence", v=3)
    inst.params["pairs"] = [["m", "R"]]
    rep = run_suite(inst, "theorem-I")
    assert rep.status == "pass"
    (check,) = rep.checks
    assert set(check.values[k] for k in ("koszul", "koszul_cohomology", "ext", "local_cohomology")) == {ext(3)}


def test_zero_complex_gives_infinite_depth():
    zero = {"window": [0, -1], "ranks": {}, "diffs": {}}
    inst = Instance.from_json(small_instance(complexes={"Z": zero}, expect={}))
    rep = run_suite(inst, "theorem-I")
    assert rep.status == "pass"
    assert all(v == "+inf" for k, v in rep.checks[0].to_json()["values"].items() if k != "certainty")


def test_frobenius_singular_suite():
    (inst,) = generate_instances("frobenius-singular", p=2)
    rep = run_suite(inst, "theorem-V")
    assert rep.status == "pass"
    assert any("not finite at cap" in c.name for c in rep.checks)


def test_hypothesis_violation_is_not_failure():
    (inst,) = generate_instances("example-2.6", window=2)
    inst.params["pairs"] = [["a1", "M"]]
    rep = run_suite(inst, "koszul-bounds")
    assert rep.status == "pass"
    assert rep.checks[0].status == "hypothesis" and not rep.checks[0].mandatory


def test_unknown_suite():
    (inst,) = generate_instances("regular-sequence", v=2)
    with pytest.raises(UnknownSuite):
        run_suite(inst, "nope")
    assert "theorem-I" in SUITES


def test_report_is_deterministic():
    (inst,) = generate_instances("regular-sequence", v=2)
    a = run_suite(inst, "theorem-I").to_json()
    (inst,) = generate_instances("regular-sequence", v=2)
    b = run_suite(inst, "theorem-I").to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


# -- command line ----------------------------------------------------------------

def test_cli_depth_all_methods(tmp_path, capsys):
    path = write(tmp_path, small_instance())
    assert cli_main(["depth", "--instance", path, "--ideal", "m", "--complex", "R", "--method", "all"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert len([l for l in out if l.startswith("depth[m,R]")]) == 4
    assert all(l.split()[2] == "3" for l in out if l.startswith("depth[m,R]"))


def test_cli_homology_table(tmp_path, capsys):
    (inst,) = generate_instances("regular-sequence", v=3)
    path = write(tmp_path, inst.to_json())
    out_json = tmp_path / "h.json"
    assert cli_main(["homology", "--instance", path, "--complex", "Q1", "--range", "-2:5",
                     "--json-out", str(out_json)]) == 0
    rows = json.loads(out_json.read_text())["rows"]
    assert [r["degree"] for r in rows] == list(range(-2, 6))
    assert rows[2]["hilbert"] == [1, 2, 3, 4, 5]


def test_cli_other_commands(tmp_path, capsys):
    (inst,) = generate_instances("regular-sequence", v=3)
    path = write(tmp_path, inst.to_json())
    assert cli_main(["amp", "--instance", path, "--complex", "K"]) == 0
    assert cli_main(["fd", "--instance", path, "--complex", "Q2"]) == 0
    assert cli_main(["resolve", "--instance", path, "--complex", "Q2"]) == 0
    assert cli_main(["tor", "--instance", path, "--a", "Q2", "--b", "Q2", "--index", "2"]) == 0
    assert cli_main(["ext", "--instance", path, "--a", "Q2", "--b", "R", "--index", "2"]) == 0
    assert cli_main(["width", "--instance", path, "--ideal", "m", "--complex", "Q1"]) == 0
    out = capsys.readouterr().out
    assert "fd Q2 = 2" in out
    assert "Ext^2(Q2,R)" in out


def test_cli_fd_frobenius(tmp_path, capsys):
    (inst,) = generate_instances("frobenius-singular", p=2)
    path = write(tmp_path, inst.to_json())
    assert cli_main(["fd", "--instance", path, "--frobenius", "1"]) == 0
    assert "not finite at cap" in capsys.readouterr().out


def test_cli_usage_errors(tmp_path, capsys):
    assert cli_main([]) == 2
    assert cli_main(["bogus"]) == 2
    assert cli_main(["depth", "--complex", "R"]) == 2
    assert cli_main(["verify", "--family", "regular-sequence", "--caps", "{\"nope\": 1}"]) == 2
    assert cli_main(["verify", "--suite", "nope", "--family", "regular-sequence"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli_main(["amp", "--instance", str(bad), "--complex", "R"]) == 2


def test_cli_exit_code_on_failure(tmp_path):
    data = small_instance(expect={"depth[m,R]": {"value": 2, "tag": "trivial"}})
    assert cli_main(["verify", "--instance", write(tmp_path, data)]) == 1


def test_cli_exit_code_inconclusive_only(tmp_path):
    # the Ext route needs Ext^3 but may only resolve to length 1
    data = small_instance(caps={"resolution_length": 1}, expect={})
    assert cli_main(["verify", "--instance", write(tmp_path, data)]) == 3


def test_cli_verify_and_generate(tmp_path):
    out = tmp_path / "gen.json"
    assert cli_main(["generate", "--family", "fd-chain", "--seed", "3", "--out", str(out)]) == 0
    report = tmp_path / "report.json"
    assert cli_main(["verify", "--instance", str(out), "--json-out", str(report)]) == 0
    data = json.loads(report.read_text())
    assert data["summary"] == {"pass": len(data["reports"])}
    assert "timings" in data and all("timings" not in r for r in data["reports"])


def test_cli_caps_file_and_oracle_bound(tmp_path):
    caps = tmp_path / "caps.json"
    caps.write_text(json.dumps({"lc_n_max": 5}))
    report = tmp_path / "r.json"
    assert cli_main(["verify", "--family", "regular-sequence", "--suite", "oracle", "--caps", str(caps),
                     "--oracle-bound", "9", "--json-out", str(report)]) == 0
    checks = json.loads(report.read_text())["reports"][0]["checks"]
    assert all(c["values"]["bound"] == 9 for c in checks)
