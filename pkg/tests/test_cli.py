import json

import pytest

from centress.cli import Report, ingest_ring, main
from centress.constructions import TwistedConfig
from centress.errors import AlgebraAxiomError, SchemaError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_informational_checks_do_not_fail(capsys):
    code, out, _ = run(capsys, "check", "--build", "group:q8,p=2", "--check", "ce,local,commutative")
    assert code == 0
    verdicts = {c["property"]: c["verdict"] for c in json.loads(out)["certificates"]}
    assert verdicts == {"centrally_essential": "true", "local": "true", "commutative": "false"}


@pytest.mark.parametrize("assertion,code", [("commutative=false", 0), ("commutative=true", 1),
                                            ("ce=true,local=true", 0)])
def test_assertions_drive_exit_code(capsys, assertion, code):
    got, out, _ = run(capsys, "check", "--build", "group:q8,p=2", "--assert", assertion)
    assert got == code
    assert json.loads(out)["overall"] == ("true" if code == 0 else "false")


def test_ring_file_round_trip(capsys, tmp_path):
    path = tmp_path / "m2f2.json"
    assert run(capsys, "build", "--build", "matrix:p=2,N=2", "--out", str(path))[0] == 0
    code, out, _ = run(capsys, "check", "--ring", str(path), "--check", "ce", "--assert", "ce=false",
                       "--format", "text")
    assert code == 0
    assert "centrally_essential: false" in out and "witness:" in out


def test_tampered_q8_file_names_the_triple(capsys, tmp_path):
    path = tmp_path / "q8.json"
    run(capsys, "build", "--build", "group:q8,p=2", "--out", str(path))
    data = json.loads(path.read_text())
    data["mul"][1][2] = data["mul"][2][1]        # i*j := j*i
    path.write_text(json.dumps(data))
    code, _, err = run(capsys, "check", "--ring", str(path), "--check", "ce")
    assert code == 2 and "(i,j,k)=" in err
    with pytest.raises(AlgebraAxiomError) as info:
        ingest_ring(path)
    assert len(info.value.triple) == 3


def test_bad_inputs_exit_2(capsys, tmp_path):
    empty = tmp_path / "zero.json"
    empty.write_text(json.dumps({"p": 2, "dim": 0, "one": [], "mul": []}))
    assert run(capsys, "check", "--ring", str(empty), "--check", "ce")[0] == 2
    garbage = tmp_path / "bad.json"
    garbage.write_text("{not json")
    with pytest.raises(SchemaError):
        ingest_ring(garbage)
    assert run(capsys, "check", "--ring", str(garbage), "--check", "ce")[0] == 2
    assert run(capsys, "check", "--build", "group:q8,p=2", "--check", "nope")[0] == 2
    assert run(capsys, "check", "--build", "group:q8,p=2", "--assert", "ce=maybe")[0] == 2
    assert run(capsys, "check", "--build", "group:q8,p=2")[0] == 2
    assert run(capsys, "check", "--ring", str(empty), "--build", "group:q8,p=2",
               "--check", "ce")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["check", "--format", "xml"])
    assert info.value.code == 2


def test_budget_flag_and_environment(capsys, monkeypatch):
    code, _, err = run(capsys, "check", "--build", "group:q8,p=2", "--check", "ce_exhaustive",
                       "--budget", "10")
    assert code == 2 and "budget" in err
    monkeypatch.setenv("CENTRESS_BUDGET", "10")
    code, _, err = run(capsys, "check", "--build", "group:q8,p=2", "--check", "ce_exhaustive")
    assert code == 2 and "exhaustive" in err
    code, _, _ = run(capsys, "check", "--build", "group:q8,p=2", "--check", "ce_exhaustive",
                     "--budget", "1000")
    assert code == 0


def test_reports_are_reproducible_and_round_trip(capsys):
    argv = ("suite", "--build", "truncpoly:p=3,n=3", "--no-timings")
    first, second = run(capsys, *argv)[1], run(capsys, *argv)[1]
    assert first == second
    data = json.loads(first)
    assert Report.from_json(data).to_json() == data


def test_suite_excludes_not_applicable(capsys):
    code, out, _ = run(capsys, "suite", "--build", "matrix:p=2,N=2")
    data = json.loads(out)
    assert {c["verdict"] for c in data["certificates"]} == {"not-applicable"}
    assert code == 0 and data["overall"] == "true"


def test_unknown_verdict_exits_1():
    from centress.finalg import Certificate, Method, Verdict
    r = Report("check", "x", [Certificate("a", Verdict.TRUE, Method.SOCLE),
                              Certificate("b", Verdict.UNKNOWN, Method.SOCLE)])
    assert r.overall is Verdict.UNKNOWN and r.exit_code == 1


def test_prop29_command(capsys, tmp_path):
    out = tmp_path / "report.json"
    code, _, _ = run(capsys, "prop29", "--p", "3", "--n", "2", "--samples", "10", "--seed", "1",
                     "--out", str(out))
    assert code == 0
    data = json.loads(out.read_text())
    assert data["input"] == "prop29:p=3,n=2"
    assert all(c["verdict"] == "true" for c in data["certificates"])
    assert {c["samples"] for c in data["certificates"] if c["method"] == "randomized"} == {10}


def test_twisted_checks_via_build_spec(capsys, tmp_path):
    code, out, _ = run(capsys, "build", "--build", "prop29:p=5,n=3")
    assert json.loads(out) == {"kind": "prop29", "p": 5, "n": 3}
    path = tmp_path / "prop29.json"
    path.write_text(out)
    assert ingest_ring(path) == TwistedConfig(5, 3)
    code, out, _ = run(capsys, "check", "--ring", str(path), "--check", "units,chain_left",
                       "--assert", "ce=true", "--samples", "10")
    assert code == 0


def test_acceptance_command(capsys):
    code, out, err = run(capsys, "verify-paper", "--samples", "10", "--progress", "--no-timings")
    data = json.loads(out)
    assert code == 0 and data["overall"] == "true"
    assert [c["number"] for c in data["criteria"]] == list(range(1, 9))
    assert err.count("[PASS]") == 8
