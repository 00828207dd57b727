import json
import subprocess
import sys
from pathlib import Path

import pytest

from hocolab.catalog import CATEGORIES, SPACES, write_data
from hocolab.cli import data_dir, run
from hocolab.diagram_files import write_diagram
from hocolab.fincat import Diagram, span
from hocolab.sset import boundary, collapse_map, point

SHIPPED = sorted(p.name for p in data_dir().iterdir())


def call(capsys, *argv):
    code = run(list(map(str, argv)))
    out = capsys.readouterr().out.strip().splitlines()
    return code, json.loads(out[-1])


def test_homology_of_the_shipped_sphere(capsys):
    run(["hom", "examples/sphere2.sset"])
    assert capsys.readouterr().out == '{"betti":[1,0,1],"torsion":[[],[],[]]}\n'


@pytest.mark.parametrize("name", SHIPPED)
def test_every_shipped_file_validates(capsys, name):
    code, rep = call(capsys, "info", name)
    assert code == 0
    assert rep["kind"] == Path(name).suffix[1:]


def test_shipped_files_match_the_generator(tmp_path):
    written = write_data(tmp_path)
    assert sorted(p.name for p in written) == SHIPPED
    assert len(SHIPPED) == len(SPACES) + len(CATEGORIES)
    for p in written:
        assert p.read_text() == (data_dir() / p.name).read_text()


def test_usage_errors_exit_one(capsys):
    assert run([]) == 1
    assert run(["nope"]) == 1
    assert run(["hom"]) == 1
    assert run(["verify", "no-such-suite"]) == 1
    assert '"usage"' in capsys.readouterr().out


def test_validation_errors_exit_two(capsys, tmp_path):
    bad = tmp_path / "bad.sset"
    bad.write_text("simplex v 0\nsimplex e 1\nfaces e = v w\n")
    assert run(["hom", str(bad)]) == 2
    assert run(["hom", str(tmp_path / "missing.sset")]) == 2
    out = capsys.readouterr().out
    assert '"validation"' in out


def test_unstable_truncation_exits_three(capsys):
    code, rep = call(capsys, "map", "delta0.sset", "delta0.sset", "--depth", "0")
    assert code == 3 and rep["error"] == "truncation"


def test_failing_suite_exits_four(capsys, monkeypatch):
    import hocolab.suites as S
    monkeypatch.setitem(S.SUITES, "base-change", lambda rng: False)
    code, rep = call(capsys, "verify", "base-change", "--trials", "2")
    assert code == 4 and not rep["pass"]


def test_verify_reports_are_seeded_and_byte_identical():
    cmd = [sys.executable, "-m", "hocolab.cli", "verify", "reduced-equiv", "--trials", "10", "--seed", "3"]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == 0 and a.stdout == b.stdout
    rep = json.loads(a.stdout)
    assert rep["pass"] and rep["trials"] == 10 and rep["seed"] == 3


def test_product_and_output_file(capsys, tmp_path):
    out = tmp_path / "cyl.sset"
    code, rep = call(capsys, "product", "circle.sset", "delta1.sset", "--out", out)
    assert code == 0 and rep["betti"] == [1, 1, 0]
    code, rep2 = call(capsys, "hom", out)
    assert rep2["betti"] == [1, 1, 0]


def test_maps_pushout_and_reduced(capsys, tmp_path):
    p = tmp_path / "end.smap"
    p.write_text("map end : delta0.sset -> delta1.sset\nsend v0 -> v0\n")
    code, rep = call(capsys, "info", p)
    assert code == 0 and rep["mono"]
    code, rep = call(capsys, "pushout", p, p)
    assert rep["betti"][:2] == [1, 0] and rep["census"][0] == 3
    code, rep = call(capsys, "reduced", p)
    assert code == 0 and rep["agree"]


def test_ocolim_with_audit(capsys):
    code, rep = call(capsys, "ocolim", "quotient_d2.sset", "--audit")
    assert code == 0 and rep["betti"][:2] == [1, 0] and rep["audit"]["pass"]


def test_hocolim_from_a_diagram_directory(capsys, tmp_path):
    I = span()
    S0 = boundary(1)
    write_diagram(Diagram(I, {"01": S0, "0": point(), "1": point()},
                          {"p0": collapse_map(S0), "p1": collapse_map(S0)}), tmp_path / "d")
    code, rep = call(capsys, "hocolim", "span.fcat", tmp_path / "d", "--oracle")
    assert code == 0 and rep["betti"][:2] == [1, 1] and rep["agree"]


def test_left_tensors(capsys):
    code, rep = call(capsys, "tensorl", "span.fcat", "circle.sset")
    assert code == 0 and rep["betti"][:2] == [1, 1]
    code, rep = call(capsys, "tensorl", "circle.sset", "delta0.sset")
    assert code == 0 and rep["stable_below_depth"]


def test_mapping_space_counts(capsys, tmp_path):
    two = tmp_path / "two.sset"
    two.write_text("simplex a 0\nsimplex b 0\n")
    code, rep = call(capsys, "map", "boundary1.sset", two)
    assert code == 0 and rep["pi0"] == rep["set_maps_pi0_to_target"] == 4
    code, rep = call(capsys, "map", "circle.sset", "circle.sset")
    assert code == 2
