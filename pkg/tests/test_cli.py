import json
import subprocess
import sys

import pytest

from hyperenc.cli import main
from hyperenc.curves import curve_from_dict


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_encode_hessian(capsys):
    code, out, _ = run(capsys, "encode", "--family", "hessian", "--q", "5", "--d", "3", "--t", "1")
    assert code == 0
    assert json.loads(out) == {"x": "1", "y": "4"}


def test_encode_not_encodable(capsys):
    code, out, _ = run(capsys, "encode", "--family", "quasiquadratic", "--q", "5", "--d", "3", "--a", "1", "--t", "3")
    assert code == 2
    assert json.loads(out) == {"error": "not_encodable", "stage": "t=1/2"}


@pytest.mark.parametrize("argv", [
    ("encode", "--family", "hessian", "--q", "5", "--d", "3", "--t", "xyz"),
    ("encode", "--family", "hessian", "--q", "5", "--d", "3", "--t", "5"),
    ("encode", "--family", "hessian", "--q", "5", "--d", "1", "--t", "1"),
    ("encode", "--family", "hessian", "--q", "9", "--d", "3", "--t", "1"),
    ("encode", "--family", "hessian", "--q", "7", "--d", "3", "--t", "1"),
    ("encode", "--family", "hessian", "--d", "3", "--t", "1"),
    ("encode", "--family", "nope", "--q", "5", "--t", "1"),
    ("bogus",),
    (),
])
def test_invalid_input_exits_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert "error" in json.loads(err.strip().splitlines()[-1])


def test_spec_file_and_output(tmp_path, capsys):
    spec = tmp_path / "c.json"
    spec.write_text(json.dumps({"family": "demoivre", "q": "17", "d": 5, "a": "1", "b": "1"}))
    out = tmp_path / "o.json"
    code, stdout, _ = run(capsys, "encode", "--spec", str(spec), "--t", "2", "--output", str(out))
    assert code == 0 and stdout == ""
    p = json.loads(out.read_text())
    c = curve_from_dict(json.loads(spec.read_text()))
    assert c.is_on_curve(c.point(int(p["x"], 16), int(p["y"], 16)))


def test_hash_is_deterministic(capsys):
    argv = ("hash", "--family", "genus2type1", "--q", "101", "--a", "3", "--b", "5", "--message", "hello")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    doc = json.loads(first)
    c = curve_from_dict({"family": "genus2type1", "q": "101", "a": "3", "b": "5"})
    assert c.is_on_curve(c.point(int(doc["point"]["x"], 16), int(doc["point"]["y"], 16)))


def test_hash_digest_choice_and_unknown_digest(capsys):
    base = ("hash", "--family", "hessian", "--q", "11", "--d", "4", "--message", "m")
    c = curve_from_dict({"family": "hessian", "q": "11", "d": "4"})
    ts = set()
    for digest in ("sha256", "sha3_256", "blake2b", "sha512"):
        code, out, _ = run(capsys, *base, "--digest", digest)
        assert code == 0
        doc = json.loads(out)
        assert c.is_on_curve(c.point(int(doc["point"]["x"], 16), int(doc["point"]["y"], 16)))
        ts.add(doc["t"])
    assert len(ts) > 1
    for bad in ("nope", "shake_128"):
        code, _, _ = run(capsys, *base, "--digest", bad)
        assert code == 1


def test_hash_reads_stdin():
    cmd = [sys.executable, "-m", "hyperenc", "hash", "--family", "hessian", "--q", "11", "--d", "4", "--message", "-"]
    a = subprocess.run(cmd, input=b"abc", capture_output=True, check=True)
    b = subprocess.run(cmd[:-1] + ["abc"], capture_output=True, check=True)
    assert a.stdout == b.stdout


def test_divisor(capsys):
    code, out, _ = run(capsys, "divisor", "--family", "demoivre", "--q", "17", "--d", "5", "--a", "1", "--b", "1",
                       "--message", "anything")
    assert code == 0
    doc = json.loads(out)
    assert 1 <= doc["r"] <= 2
    assert doc["r"] == len(doc["points"])
    c = curve_from_dict({"family": "demoivre", "q": "17", "d": 5, "a": "1", "b": "1"})
    for p in doc["points"]:
        assert c.is_on_curve(c.point(int(p["x"], 16), int(p["y"], 16)))


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "--family", "genus2type2", "--q", "251", "--lambda", "1", "--mu", "1",
                       "--a", "1", "--v", "2", "--w", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["locus_residual"] == "0" and set(doc["igusa"]) == {"J2", "J4", "J6", "J8", "J10"}
    code, out, _ = run(capsys, "invariants", "--family", "hessian", "--q", "5", "--d", "2")
    assert json.loads(out)["j"] == "2"
    code, _, _ = run(capsys, "invariants", "--family", "quasiquadratic", "--q", "5", "--d", "3", "--a", "1")
    assert code == 1


def test_census_family(capsys):
    code, out, _ = run(capsys, "census", "--family", "hessian", "--q", "5")
    assert code == 0
    doc = json.loads(out)
    sizes = {r["params"]["d"]: r["image_size"] for r in doc["reports"]}
    assert sizes["0"] == 2
    assert doc["passed"]


def test_census_single_curve_with_image(capsys):
    code, out, _ = run(capsys, "census", "--family", "hessian", "--q", "5", "--d", "0", "--show-image")
    doc = json.loads(out)
    assert code == 0
    assert doc["image"] == [{"x": "0", "y": "4"}, {"x": "1", "y": "2"}]


def test_census_cap(capsys):
    code, _, err = run(capsys, "census", "--family", "quasiquadratic", "--q", "1048583")
    assert code == 1
    assert json.loads(err)["error"] == "FieldTooLarge"


def test_census_failure_exit_code(capsys, monkeypatch):
    import hyperenc.census as census
    monkeypatch.setitem(census.BOUNDS, "hessian", census.FamilyBounds(0, 2, exact=True))
    code, out, _ = run(capsys, "census", "--family", "hessian", "--q", "5")
    assert code == 3
    assert not json.loads(out)["passed"]


def test_census_seeded_sampling(capsys):
    argv = ("census", "--family", "genus2type1", "--q", "23", "--trials", "3", "--seed", "4")
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    strip = lambda d: [r["params"] for r in json.loads(d)["reports"]]
    assert strip(a) == strip(b)


def test_console_script_entry_point():
    r = subprocess.run([sys.executable, "-m", "hyperenc", "encode", "--family", "hessian", "--q", "5",
                        "--d", "0", "--t", "0"], capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout) == {"x": "1", "y": "2"}
