import json

from statedskein import cli
from statedskein.oq import OqElement, nf


def run(capsys, *args):
    code = cli.main(list(args))
    return code, capsys.readouterr()


def test_nf(capsys):
    code, out = run(capsys, "nf", "ba")
    assert code == 0 and out.out.strip() == "(q^2)*ab"


def test_nf_parse_error(capsys):
    code, out = run(capsys, "nf", "abz")
    assert code == 2 and "position 2" in out.err


def test_jw(capsys):
    code, out = run(capsys, "jw", "1")
    assert code == 0 and "1 terms" in out.out
    code, out = run(capsys, "--ring", "cyclo:16", "jw", "2")
    assert code == 1 and "vanishes" in out.out


def test_hopf_and_hh0(capsys, tmp_path):
    code, out = run(capsys, "hopf", "coproduct", "a")
    assert code == 0 and "a(x)a" in out.out
    code, out = run(capsys, "hh0", "ab")
    assert out.out.startswith("Nonzero")
    elem = nf("ab").to_json()
    path = tmp_path / "r.json"
    code, out = run(capsys, "--json", str(path), "hh0", json.dumps(elem))
    data = json.loads(path.read_text())
    assert data["verdict"] == "Nonzero"


def test_cut(capsys):
    diagram = json.dumps({"word": [], "width": 1, "left": "+", "right": "+"})
    code, out = run(capsys, "cut", diagram, "0")
    assert code == 0 and "b(x)c" in out.out


def test_verify_selection(capsys, tmp_path):
    path = tmp_path / "rep.json"
    code, out = run(capsys, "--json", str(path), "verify", "disk", "catalan")
    assert code == 0
    lines = out.out.splitlines()
    assert lines[0].startswith("catalan") and lines[1].startswith("disk")
    rep = json.loads(path.read_text())
    assert rep["passed"] and set(rep["checks"]) == {"catalan", "disk"}


def test_verify_frobenius_N(capsys):
    code, out = run(capsys, "verify", "frobenius", "--N", "3")
    assert code == 0 and "witness_S_{N-1}" in out.out


def test_verify_cyclotomic(capsys):
    code, out = run(capsys, "--ring", "cyclo:24", "verify", "vanishing_chain", "jones_wenzl", "hoste_przytycki")
    assert code == 0, out.out


def test_element_round_trip():
    for text in ["ab + 2*bc", "1 + -d", "a*b"]:
        x = cli.parse_element(text)
        assert cli.parse_element(json.dumps(x.to_json())) == x
    assert cli.parse_element("ab + 2*bc") == nf("ab") + nf("bc").scale(2)
    assert cli.parse_element("1") == OqElement.one()
