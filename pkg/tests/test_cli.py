import io
import json

import pytest

from garside import cli, verify
from garside.families import build_beta
from garside.normal_form import from_json


def call(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def as_json(*argv, **kw):
    code, out, err = call(*argv, "--format", "json", **kw)
    assert code == 0, err
    return json.loads(out)


BETA = "B5: 1 2 1 2 1 2 1 2 4 4 4 4 4"


def test_nf_json_and_text():
    data = as_json("nf", BETA)
    assert data == build_beta(3, 1).to_json()
    code, out, _ = call("nf", "B3: 1 2")
    assert code == 0 and "inf 0  sup 1  length 1" in out


def test_nf_accepts_json_and_bare_words():
    data = as_json("nf", "B4: 1 -2 3")
    assert as_json("nf", json.dumps(data)) == data
    assert as_json("nf", "1 -2 3", "--n", "4") == data


def test_nf_from_stdin_and_file(monkeypatch, tmp_path):
    assert as_json("nf", stdin="B3: 1 2\n", monkeypatch=monkeypatch)["factors"] == [[3, 1, 2]]
    assert as_json("nf", "-", stdin="B3: 2", monkeypatch=monkeypatch)["factors"] == [[1, 3, 2]]
    path = tmp_path / "braid.txt"
    path.write_text("B3: 1 2")
    assert as_json("nf", "--input", str(path))["factors"] == [[3, 1, 2]]


def test_slide_and_circuit():
    data = as_json("slide", "B3: 1 2")
    assert data["prefix"]["word"] == [1]
    assert data["result"]["factors"] == [[2, 3, 1]]
    data = as_json("circuit", "B3: -2 -2 1 2 2 2")
    assert len(data["circuit"]) == 2 and data["tail"]


def test_scset():
    data = as_json("scset", "B3: 1 2", "--members")
    assert data["summary"]["size"] == 2
    assert [from_json(m) for m in data["members"]]
    data = as_json("scset", BETA)
    assert data["summary"] == {"inf": 0, "period_histogram": {"2": 6}, "size": 12, "sup": 5}


def test_conj():
    assert as_json("conj", "B3: 1", "B3: 2")["conjugate"] is True
    assert as_json("conj", "B3: 1", "B3: -1") == {"conjugate": False, "conjugator": None}


def test_subbraid_component_decompose():
    assert as_json("subbraid", "B4: 1 2 3", "--strands", "1,3") == {"factors": [], "inf": 1, "n": 2}
    rot = "B6: 1 2 3 4 5 1 2 3 4 5"
    data = as_json("component", rot, "--family", "[(1,2),(3,4),(5,6)]")
    assert data["curve"] == "boundary" and data["normal_form"]["factors"] == [[3, 1, 2]]
    data = as_json("decompose", BETA, "--family", "[(1,3),(4,5)]")
    comps = {json.dumps(c["curve"]): c["normal_form"] for c in data["components"]}
    assert comps['"boundary"'] == {"factors": [], "inf": 0, "n": 2}
    assert comps["[4, 5]"] == {"factors": [], "inf": 5, "n": 2}


def test_inv_families_and_standardize():
    rot = "B6: 1 2 3 4 5 1 2 3 4 5"
    assert as_json("inv-families", rot) == {"families": [[[1, 2], [3, 4], [5, 6]]]}
    data = as_json("standardize", "--family", "[(1,2),(3,4)]", "--by", "B4: -2", "--n", "4")
    assert data["word"] == [2] and data["image"] == [[1, 2], [3, 4]]


def test_family_commands():
    assert as_json("family", "beta", "--n", "3") == build_beta(3, 1).to_json()
    data = as_json("family", "delta-conj", "--n", "4")
    assert len(data["conjugates"]) == 4
    data = as_json("family", "x", "--n", "4", "--indices", "1,3,2")
    assert data["inf"] == -2 and len(data["factors"]) == 5


def test_experiment():
    code, out, _ = call("experiment", "sc", "--n", "3", "--full-sc")
    assert code == 0
    header, row = out.strip().splitlines()[:2]
    assert header.split()[:2] == ["n", "k"]
    data = as_json("experiment", "sc", "--n", "3", "--full-sc")
    assert data["rows"][0]["sc_size"] == 12
    assert data["rows"][0]["witnesses_in_sc"] == 4


@pytest.mark.parametrize("argv,code", [
    (["nf", "B3: 1 7"], 1),
    (["nf", "1 2"], 1),
    (["nf", "--bogus"], 1),
    (["nf", '{"n": 3, "inf": 0, "factors": [[1, 1, 2]]}'], 1),
    (["component", "B3: 1", "--family", "[(1,2) junk]"], 1),
    (["verify", "--suite", "nope"], 1),
    (["standardize", "--family", "[(1,2)]"], 1),
    (["family", "beta"], 1),
    (["scset", BETA, "--max-members", "3"], 2),
    (["component", "B3: 1", "--family", "[(2,3)]"], 3),
    (["decompose", "B3: 1 2", "--family", "[(1,2)]"], 3),
    (["conj", "B3: 1", "B4: 1"], 3),
    (["family", "x", "--n", "4", "--indices", "3,1"], 3),
])
def test_exit_codes(argv, code):
    got, out, err = call(*argv)
    assert got == code
    assert err and not out


def test_verify_pass_and_fail(monkeypatch):
    code, out, _ = call("verify", "--suite", "lattice")
    assert code == 0 and out.startswith("PASS lattice")

    def broken(names, quick=True):
        r = verify.SuiteResult("fake")
        r.check(False, "forced failure")
        return [r]

    monkeypatch.setattr(verify, "run_suites", broken)
    code, out, _ = call("verify", "--suite", "lattice")
    assert code == 4 and "FAIL fake" in out and "forced failure" in out


def test_output_is_deterministic():
    runs = [call("scset", BETA, "--members", "--format", "json")[1] for _ in range(2)]
    assert runs[0] == runs[1]
