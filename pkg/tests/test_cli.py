import json

import jsonschema
import pytest

from tautcert.certifier import gallery
from tautcert.cli import main
from tautcert.fileio import (
    InputFileError,
    format_presentation,
    format_representation,
    parse_presentation,
    parse_representation,
    read_presentation,
)
from tautcert.reports import report_schema
from tautcert.words import Alphabet


@pytest.fixture
def files(tmp_path):
    out = {}
    for name in ("genus3-derived2", "gen2-multisuture", "product-2", "product-3", "product-5", "solvable-3"):
        path = tmp_path / f"{name}.txt"
        assert main(["gallery", name, "--out", str(path), "--rep-out", str(tmp_path / f"{name}.rep")]) == 0
        out[name] = path
    out["beta"] = tmp_path / "genus3-derived2.rep"
    triv = tmp_path / "trivial.rep"
    triv.write_text("dim: 1\nfield: Q\nx: [[1]]\ny: [[1]]\n")
    out["trivial"] = triv
    return out


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_certify_genus3(files, capsys):
    code, out, _ = run(capsys, "certify", files["genus3-derived2"], files["beta"])
    assert code == 0 and "det: 32" in out and "verdict: certified" in out


def test_certify_gen2_trivial(files, capsys):
    code, out, _ = run(capsys, "certify", files["gen2-multisuture"], files["trivial"])
    assert code == 1 and "det: 0" in out


def test_certify_malformed_word(tmp_path, files, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("genus: 2\ngenerators: x y\nrplus: x^ | y\n")
    code, _, err = run(capsys, "certify", bad, files["trivial"])
    assert code == 2
    assert "bad.txt:3" in err and "position" in err


def test_certify1d(files, capsys):
    assert run(capsys, "certify1d", files["gen2-multisuture"])[:2] == (0, "1 - t_x t_y\nverdict: generically certified\n")
    code, out, _ = run(capsys, "certify1d", files["product-3"])
    assert code == 0 and out.splitlines()[0] == "1"
    code, out, _ = run(capsys, "certify1d", files["genus3-derived2"])
    assert code == 1 and out.splitlines()[0] == "0"


def test_random(files, capsys):
    code, out, _ = run(capsys, "random", files["gen2-multisuture"], "--dim", 1, "--prime", 5, "--trials", 10, "--seed", 1)
    assert code == 0 and "WITNESS" in out
    code, out, _ = run(capsys, "random", files["genus3-derived2"], "--dim", 1, "--prime", 7, "--trials", 100)
    assert code == 3 and "failures: 100" in out
    code, _, _ = run(capsys, "random", files["product-2"], "--dim", 2, "--prime", 11, "--trials", 1)
    assert code == 0
    code, _, err = run(capsys, "random", files["product-2"], "--prime", 15)
    assert code == 2 and "prime" in err


def test_obstruct(files, capsys):
    code, out, _ = run(capsys, "obstruct", files["genus3-derived2"])
    assert code == 0
    assert "a1 depth 2" in out
    assert "no solvable representation of degree <= 1 certifies" in out
    code, out, _ = run(capsys, "obstruct", files["product-5"])
    assert code == 0 and "obstruction degree D*: 0" in out
    assert all(f"a{j} depth 0" in out for j in range(1, 6))
    code, out, _ = run(capsys, "obstruct", files["solvable-3"], "--json")
    assert code == 0 and json.loads(out)["obstruction_degree"] == 3


def test_obstruct_budget(files, capsys):
    code, out, err = run(capsys, "obstruct", files["solvable-3"], "--max-word-length", 20, "--json")
    assert code == 4 and "budget" in err
    report = json.loads(out)
    assert report["complete"] is False
    jsonschema.validate(report, report_schema())


def test_tools(capsys, tmp_path):
    assert run(capsys, "fox", "[x,y]")[1] == "d/dx: 1 - x y x^-1 ; d/dy: x - x y x^-1 y^-1\n"
    out = run(capsys, "hall", "--rank", 2, "--weight", 3)[1]
    assert "k=3: [x1,[x1,x2]], [x2,[x1,x2]]" in out
    assert run(capsys, "magnus", "[x,y]", "--cutoff", 2)[1] == "1 + XY - YX\n"
    assert run(capsys, "lcs-weight", "[x,[x,y]]")[1] == "3\n"
    assert run(capsys, "lcs-weight", "[x,y][x,y]^-1")[1] == "inf\n"
    assert run(capsys, "lcs-weight", "[[x,y],[x^-1,y]]", "--cutoff", 3)[1] == ">=4\n"
    assert run(capsys, "collect", "x y x^-1", "--weight", 2)[1] == "y [x,y]\n"
    assert run(capsys, "fox", "x^")[0] == 2
    assert run(capsys, "hall", "--rank", 0, "--weight", 2)[0] == 2
    path = tmp_path / "p2.txt"
    assert run(capsys, "gallery", "product-2", "--out", path)[0] == 0
    text = path.read_text()
    assert "generators: x1 x2" in text and "rplus: x1 | x2" in text
    assert run(capsys, "gallery", "nope")[0] == 2


def test_bad_arguments_exit_2(capsys):
    assert run(capsys, "random")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "certify1d", "/nonexistent/file.txt")[0] == 2


@pytest.mark.parametrize(
    "name", ["product-1", "product-4", "gen2-multisuture", "genus3-derived2", "genus3-plus-handles-5", "solvable-2"]
)
def test_gallery_file_round_trip(tmp_path, name):
    entry = gallery(name)
    path = tmp_path / "p.txt"
    main(["gallery", name, "--out", str(path)])
    again = read_presentation(path)
    assert again == entry.presentation
    if entry.representation is not None:
        rep = parse_representation(format_representation(entry.representation), again.alphabet)
        assert rep.same_as(entry.representation)


def test_presentation_file_errors():
    with pytest.raises(InputFileError, match="genus 3"):
        parse_presentation("genus: 3\ngenerators: x y\nrplus: x | y\n")
    with pytest.raises(InputFileError, match="missing"):
        parse_presentation("generators: x y\n")
    with pytest.raises(InputFileError, match="unknown field"):
        parse_presentation("generators: x\nrplus: x\ncolour: red\n")
    with pytest.raises(InputFileError, match="unbalanced"):
        parse_presentation("generators: x y\nrplus: x\n")
    p = parse_presentation("# comment\ngenerators: x y  # trailing\nrplus: [x,y] x | y\nsutures: a | b\n")
    assert p.suture_metadata == ("a", "b")


def test_representation_file_errors():
    a = Alphabet(("x", "y"))
    with pytest.raises(InputFileError, match="shape"):
        parse_representation("dim: 2\nfield: Q\nx: [[1]]\ny: [[1]]\n", a)
    with pytest.raises(InputFileError, match="not invertible"):
        parse_representation("dim: 1\nfield: Q\nx: [[0]]\ny: [[1]]\n", a)
    with pytest.raises(InputFileError, match="no matrix"):
        parse_representation("dim: 1\nfield: Q\nx: [[1]]\n", a)
    with pytest.raises(InputFileError):
        parse_representation("dim: 1\nfield: Fp:9\nx: [[1]]\ny: [[1]]\n", a)
    rep = parse_representation("dim: 1\nfield: QI\nx: [[1+2 i]]\ny: [[i]]\n", a)
    text = format_representation(rep)
    assert text == "dim: 1\nfield: QI\nx: [[1+2 i]]\ny: [[1 i]]\n"
    assert parse_representation(text, a).same_as(rep)


def test_reports_validate_and_are_deterministic(files, capsys):
    commands = [
        ("certify", files["genus3-derived2"], files["beta"], "--json"),
        ("certify", files["gen2-multisuture"], files["trivial"], "--json"),
        ("certify1d", files["gen2-multisuture"], "--json"),
        ("random", files["gen2-multisuture"], "--dim", 2, "--prime", 7, "--trials", 5, "--seed", 3, "--json"),
        ("random", files["genus3-derived2"], "--dim", 1, "--prime", 7, "--trials", 5, "--json"),
        ("obstruct", files["genus3-derived2"], "--json"),
    ]
    for argv in commands:
        code1, out1, _ = run(capsys, *argv)
        code2, out2, _ = run(capsys, *argv)
        assert out1 == out2 and code1 == code2
        jsonschema.validate(json.loads(out1), report_schema())
        text_code, _, _ = run(capsys, *argv[:-1])
        assert text_code == code1
