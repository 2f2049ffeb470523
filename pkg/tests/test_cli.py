import json
from fractions import Fraction
import subprocess
import sys

import pytest

from magmahopf.cli import main
from magmahopf.hausdorff import hausdorff_component
from magmahopf.parsing import format_poly, parse


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _poly(doc):
    total = parse("0")
    for t in doc["terms"]:
        total = total + parse(t["monomial"]).scale(Fraction(t["coeff"]))
    return total


def test_primitive_check(capsys):
    code, out, _ = run(capsys, "primitive-check", "x^2*x - x*x^2")
    assert code == 0 and out.endswith("\n")
    doc = json.loads(out)
    assert doc["primitive"] is True and doc["degree"] == 3 and "deviation" not in doc
    code, out, _ = run(capsys, "primitive-check", "x*x")
    doc = json.loads(out)
    assert doc["primitive"] is False
    assert doc["deviation"] == [{"left": "x", "right": "x", "coeff": "2"}]


def test_hausdorff(capsys):
    code, out, _ = run(capsys, "hausdorff", "--degree", "3")
    doc = json.loads(out)
    assert code == 0 and [c["degree"] for c in doc["components"]] == [1, 2, 3]
    assert all(c["primitive"] for c in doc["components"])
    assert _poly(doc["components"][2]) == hausdorff_component(3)


def test_deterministic(capsys):
    _, a, _ = run(capsys, "hausdorff", "--degree", "4")
    _, b, _ = run(capsys, "hausdorff", "--degree", "4")
    assert a == b
    monos = [parse(t["monomial"]).items()[0][0] for t in json.loads(a)["components"][3]["terms"]]
    assert monos == sorted(monos)


def test_constants_basis(capsys):
    _, out, _ = run(capsys, "constants-basis", "--degree", "5")
    assert json.loads(out)["dimension"] == 9
    _, out, _ = run(capsys, "constants-basis", "--degree", "3", "--vars", "2")
    assert json.loads(out)["dimension"] == 10


def test_exp_log(capsys):
    _, out, _ = run(capsys, "exp", "--degree", "3")
    assert format_poly(_poly(json.loads(out))) == "x + 1/2*(x x) + 1/12*(x (x x)) + 1/12*((x x) x)"
    _, out, _ = run(capsys, "log", "--degree", "2")
    assert _poly(json.loads(out)) == parse("x - 1/2*(x*x)")


def test_taylor(capsys):
    _, out, _ = run(capsys, "taylor", "x^2*x")
    doc = json.loads(out)
    assert [c["index"] for c in doc["coefficients"]] == [3, 0]
    assert _poly(doc["coefficients"][1]) == parse("x^2*x - x*x^2")
    _, out, _ = run(capsys, "taylor", "y*(x*y)", "--total", "--vars", "x,y")
    doc = json.loads(out)
    a00 = [c for c in doc["coefficients"] if c["index"] == [0, 0]][0]
    assert _poly(a00) == parse("2*(y*(x*y)) - x*y^2 - y*(y*x)")


def test_generators(capsys):
    _, out, _ = run(capsys, "generators", "--max-degree", "6", "--primitivize")
    doc = json.loads(out)
    assert all(g["primitive"] for g in doc["generators"])
    z64 = [g for g in doc["generators"] if g["leading"] == "((x (x (x x))) (x x))"][0]
    assert z64["correction"] == [{"product": "(y_3,1 y_3,1)", "coeff": "6"}]
    _, out, _ = run(capsys, "generators", "--max-degree", "6")
    assert not all(g["primitive"] for g in json.loads(out)["generators"])


def test_antipode_delta(capsys):
    _, out, _ = run(capsys, "antipode", "x^2*x")
    assert _poly(json.loads(out)) == parse("3*(x*x^2) - 4*(x^2*x)")
    _, out, _ = run(capsys, "delta", "x*x")
    assert len(json.loads(out)["terms"]) == 3


def test_bch_crosscheck(capsys):
    code, out, _ = run(capsys, "bch-crosscheck", "--degree", "4")
    doc = json.loads(out)
    assert code == 0 and doc["all_match"] and len(doc["words"]) >= 2 + 2 + 4


@pytest.mark.parametrize("argv", [
    ["hausdorff"],
    ["hausdorff", "--degree", "0"],
    ["hausdorff", "--degree", "two"],
    ["taylor", "x", "--vars", "x,y"],
    ["constants-basis", "--degree", "3", "--vars", "3"],
    ["generators", "--max-degree", "2"],
    ["primitive-check", "x*y*z"],
    ["taylor", "x", "--var", "w"],
    ["frobnicate"],
    [],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err


def test_computation_error(capsys):
    code, _, err = run(capsys, "taylor", "x*y", "--total", "--vars", "x")
    assert code == 2 and "not in order" in err


def test_console_entry():
    r = subprocess.run([sys.executable, "-m", "magmahopf.cli", "primitive-check", "x*y - y*x"],
                       capture_output=True, text=True, check=True)
    assert json.loads(r.stdout)["primitive"] is True
