import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from helpers import OCTAHEDRON, example2, octahedron
from nagata_cw import NagataInput, ValidationError
from nagata_cw import monomials as mono
from nagata_cw.cli import jsonable, main, run
from nagata_cw.parsing import ParseError, parse, parse_expression, to_expression, to_json_document

EX2_TEXT = "x0^2*u1*u2 + x1^2*u1^2 + x2^2*u2*u3"


def test_parse_example2():
    assert parse(EX2_TEXT) == example2(2)


def test_parse_octahedron_json():
    doc = {"schema_version": "nagata-cw/1", "d1": 1, "m": 6, "g": [list(g) for g in OCTAHEDRON]}
    assert parse(json.dumps(doc)) == octahedron(1)


def test_parse_errors():
    with pytest.raises(ParseError, match="mixed d1") as exc:
        parse("x0^2*u1*u2 + x1^3*u1^2")
    assert exc.value.position == 13
    with pytest.raises(ParseError) as exc:
        parse("x0^2*u1*u2 + ")
    assert "end of input" in str(exc.value) and exc.value.position == 13
    with pytest.raises(ParseError, match="unexpected character"):
        parse("x0^2*u1*v2")
    with pytest.raises(ValidationError, match="coincide"):
        parse("x0*u1*u2 + x1*u2*u1")
    with pytest.raises(ValidationError, match="d2 must be at least 2"):
        parse("x0*u1 + x1*u2")
    with pytest.raises(ParseError, match="two terms"):
        parse("x0*u1^2 + x0*u2^2")
    with pytest.raises(ValidationError, match="x indices"):
        parse("x0*u1^2 + x2*u2^2")
    # four facets on two variables of degree two cannot all be distinct
    with pytest.raises(ValidationError, match="coincide"):
        parse(json.dumps({"d1": 1, "m": 2, "g": [[2, 0], [1, 1], [0, 2], [2, 0]]}))


@st.composite
def inputs(draw):
    m = draw(st.integers(1, 4))
    d2 = draw(st.integers(2, 3))
    allm = mono.enumerate_monomials(m, d2)
    facets = draw(st.lists(st.sampled_from(allm), min_size=1, max_size=min(5, len(allm)), unique=True))
    d1 = draw(st.integers(1, 4))
    action = draw(st.sampled_from(["contraction", "differentiation"]))
    return NagataInput(d1, m, facets, action)


@given(inputs())
def test_round_trip(inp):
    assert parse(json.dumps(to_json_document(inp))) == inp
    assert parse_expression(to_expression(inp), m=inp.m, action=inp.action) == inp


def test_jsonable_big_ints():
    assert jsonable({"a": [2**53 - 1, 2**53, -(2**60)]}) == {"a": [2**53 - 1, str(2**53), str(-(2**60))]}


def test_run_hilbert_general_d():
    doc, status = run("hilbert", octahedron(5))
    assert status == 0
    assert doc["hilbert"]["vector"] == [1, 14, 44, 64, 64, 64, 44, 14, 1]
    doc, _ = run("hilbert", octahedron(4))
    assert doc["hilbert"]["vector"] == [1, 14, 44, 64, 64, 44, 14, 1]


def test_run_check_note():
    doc, status = run("check", octahedron(1))
    assert status == 0
    c = doc["check"]
    assert c["equal"] and c["annihilator"]["complete"] and c["annihilator"]["sound"]
    assert c["vector"][2] == 24
    assert "h_2 = 36" in c["paper_note"]
    doc, _ = run("check", example2(2))
    assert doc["check"]["paper_note"] is None


def test_run_ann_minimal():
    doc, status = run("ann", example2(2), minimal=True)
    g = doc["ann"]["generators"]
    assert status == 0 and doc["ann"]["minimalized"]
    assert set(g["6"]) == {"X0^2*U2 - X1^2*U1", "X0^2*U1 - X2^2*U3"}
    assert set(g["3"]) == {"U2^2", "U3^2", "U1*U3"}
    assert doc["ann"]["verification"]["ok"]
    doc, _ = run("ann", example2(2))
    assert doc["ann"]["generators"]["2"] == ["(U1,U2,U3)^3"]


def test_run_hasse_and_lefschetz():
    doc, _ = run("hasse", example2(2))
    assert doc["hasse"]["nodes"] == 7 and doc["hasse"]["edges"] == 8
    doc, _ = run("lefschetz", example2(3), trials=2, seed=0)
    assert doc["lefschetz"]["wlp"]["verdict"]


def _cli(args, stdin):
    proc = subprocess.run([sys.executable, "-m", "nagata_cw", *args], input=stdin,
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_cli_exit_codes_and_error_json():
    code, out, err = _cli(["check"], EX2_TEXT)
    assert code == 0 and json.loads(out)["check"]["equal"]
    code, out, err = _cli(["hilbert", "--format", "json"], "x0^2*u1*u2 + x1^3*u1^2")
    assert code == 1 and out == ""
    e = json.loads(err)["error"]
    assert e["type"] == "ParseError" and e["position"] == 13


def test_cli_dot_file(tmp_path, capsys, monkeypatch):
    src = tmp_path / "f.txt"
    src.write_text(EX2_TEXT)
    dot = tmp_path / "h.dot"
    assert main(["hasse", "-i", str(src), "--dot", str(dot), "--format", "text"]) == 0
    assert dot.read_text().count("->") == 8
    assert "digraph" in capsys.readouterr().out


def test_cli_action_flag(tmp_path, capsys):
    src = tmp_path / "f.txt"
    src.write_text(EX2_TEXT)
    assert main(["ann", "-i", str(src), "--action", "differentiation"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ann"]["generators"]["6"][0] == "2*X0^2*U2 - X1^2*U1"


def test_cli_deterministic():
    a = _cli(["check", "--seed", "0"], EX2_TEXT)
    b = _cli(["check", "--seed", "0"], EX2_TEXT)
    assert a == b and a[0] == 0
