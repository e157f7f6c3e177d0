from __future__ import annotations

import io
import json

import pytest

from hpoly.cli import main
from hpoly.fixtures import fixture_path
from hpoly.poly import Poly


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def g6(tmp_path):
    def path(name):
        target = tmp_path / f"{name}.g6"
        target.write_text(fixture_path(name + ".g6").read_text())
        return str(target)
    return path


def test_hpoly_prints_path_polynomial(g6):
    code, out = run("hpoly", "--graph", g6("t1"), "--pattern", "P2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "3k^7 - 23k^6 + 72k^5 - 118k^4 + 107k^3 - 51k^2 + 10k"
    assert lines[1] == "k\tvalue" and len(lines) == 8


def test_distinguish(g6):
    code, out = run("distinguish", "--a", g6("g1"), "--b", g6("g2"), "--patterns", "N1,P2,C4")
    assert code == 0
    assert out.strip() == "N1: equal, P2: equal, C4: differ at k=5 (24540 vs 24360)"


def test_oracle_dot_export(tmp_path):
    dot = tmp_path / "out.dot"
    code, out = run("oracle", "--graph", "fixture:p3", "--k", "3", "--export-dot", str(dot))
    assert code == 0
    assert out.splitlines()[1].split("\t")[:3] == ["3", "12", "15"]
    assert dot.read_text().count("label=") == 12


def test_json_round_trip():
    code, out = run("pairs", "--graph", "fixture:r2", "--json")
    assert code == 0
    doc = json.loads(out)
    p = Poly.from_json(doc["coefficients"])
    assert p.to_text() == doc["polynomial"]
    assert doc["values"]["1"] == "0"


def test_repeatable_output():
    first = run("c4", "--graph", "fixture:g1", "--k-range", "1..8")
    second = run("c4", "--graph", "fixture:g1", "--k-range", "1..8")
    assert first == second and first[0] == 0


@pytest.mark.parametrize("argv", [
    ("chromatic", "--graph", "fixture:g2", "--k", "4"),
    ("clique", "--graph", "fixture:r1", "--t", "3"),
    ("c6", "--graph", "fixture:p3"),
    ("c6", "--graph", "fixture:p3", "--rows", "printed"),
    ("invariants", "--graph", "fixture:t3", "--json"),
    ("hypercube", "--graph", "fixture:t3", "--s-max", "4", "--k-range", "1..4"),
])
def test_other_subcommands(argv):
    code, out = run(*argv)
    assert code == 0 and out


def test_dump_generators(tmp_path):
    dump = tmp_path / "gens.json"
    code, _ = run("hpoly", "--graph", "fixture:p3", "--pattern", "C4", "--dump-generators", str(dump))
    assert code == 0
    gens = json.loads(dump.read_text())
    assert all(set(x) == {"u", "colorings", "kappa"} for x in gens)


def test_exit_codes(tmp_path, capsys):
    assert run("pairs", "--graph", str(tmp_path / "missing.el"))[0] == 1
    bad = tmp_path / "bad.el"
    bad.write_text("3 2\n0 1\n")
    assert run("pairs", "--graph", str(bad))[0] == 1
    assert run("hpoly", "--graph", "fixture:g1", "--pattern", "C6", "--budget-nodes", "10")[0] == 2
    assert run("frobnicate")[0] == 64
    assert run("pairs")[0] == 64
    assert run("pairs", "--graph", "fixture:p3", "--k-range", "zz")[0] == 64
    assert run()[0] == 64
    err = capsys.readouterr().err
    assert "budget" in err
