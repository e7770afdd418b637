"""CLI subcommands: behaviour, exit codes, JSON stability."""

import io
import json
import pathlib

import pytest

from infgon.cli import run_command

FIXTURES = pathlib.Path(__file__).parent / "fixtures"
FOUNTAIN = str(FIXTURES / "fountain.arcs")
LEAPFROG = str(FIXTURES / "leapfrog.arcs")
SPLIT = str(FIXTURES / "split.arcs")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    rc = run_command(list(argv), out, err)
    return rc, out.getvalue(), err.getvalue()


def test_validate():
    rc, out, _ = run("validate", FOUNTAIN)
    assert rc == 0 and out.strip() == "valid"


def test_validate_crossing_family(tmp_path):
    bad = tmp_path / "bad.arcs"
    bad.write_text("arc 0 2\narc 1 3\n")
    rc, out, err = run("validate", str(bad))
    assert rc == 1
    rc, out, _ = run("validate", str(bad), "--json")
    assert rc == 1
    payload = json.loads(out)
    assert payload["valid"] is False and payload["kind"] == "self_crossing"


def test_validate_syntax_error_is_usage(tmp_path):
    bad = tmp_path / "bad.arcs"
    bad.write_text("arc zero 2\n")
    rc, _, err = run("validate", str(bad))
    assert rc == 2 and "line 1" in err


def test_classify():
    rc, out, _ = run("classify", SPLIT)
    assert rc == 0
    assert "left fountains: [0]" in out and "right fountains: [1]" in out
    rc, out, _ = run("classify", LEAPFROG, "--json")
    assert json.loads(out)["locally_finite"] is True


def test_maximal_window_and_global():
    rc, out, _ = run("maximal", FOUNTAIN, "--window=-6:6")
    assert rc == 0 and "maximal" in out
    rc, out, _ = run("maximal", FOUNTAIN)
    assert rc == 0 and "certified" in out
    rc, out, _ = run("maximal", FOUNTAIN, "--json")
    assert json.loads(out)["certified"] is True


def test_maximal_refuted(tmp_path):
    doc = tmp_path / "one.arcs"
    doc.write_text("arc 0 2\n")
    rc, out, _ = run("maximal", str(doc), "--json")
    assert rc == 1
    payload = json.loads(out)
    assert payload == {
        "certified": False,
        "kind": "refuted",
        "witness": [-2, 0],
    }


def test_ff():
    rc, out, _ = run("ff", FOUNTAIN)
    assert rc == 0 and "fountain at 0" in out
    rc, out, _ = run("ff", LEAPFROG)
    assert rc == 0 and "locally finite" in out
    rc, out, _ = run("ff", SPLIT)
    assert rc == 1 and "split fountains" in out
    rc, out, _ = run("ff", SPLIT, "--json")
    assert rc == 1
    assert json.loads(out)["reason"]["kind"] == "split_fountains"


def test_hom():
    rc, out, _ = run("hom", "--x", "0,2", "--y", "0,3")
    assert rc == 0 and out.strip() == "1"
    rc, out, _ = run("hom", "--x", "0,2", "--y", "1,3")
    assert rc == 0 and out.strip() == "0"
    rc, out, _ = run("hom", "--x", "0,2", "--y", "0,3", "--json")
    payload = json.loads(out)
    assert payload["hom"] == 1 and payload["kind"] == "forward"
    assert payload["reverse"] == 0


def test_hom_usage_error():
    rc, _, err = run("hom", "--x", "0;2", "--y", "0,3")
    assert rc == 2 and "error" in err


def test_mutate_stdout_and_file(tmp_path):
    rc, out, _ = run("mutate", FOUNTAIN, "--arc", "0,2")
    assert rc == 0
    assert "arc 1 3" in out and "remove 0 2" in out
    target = tmp_path / "out.arcs"
    rc, out, _ = run("mutate", FOUNTAIN, "--arc", "0,2", "-o", str(target))
    assert rc == 0 and out == ""
    assert "arc 1 3" in target.read_text()


def test_mutate_not_mutable(tmp_path):
    doc = tmp_path / "pair.arcs"
    doc.write_text("arc 0 2\narc 0 3\n")
    rc, _, err = run("mutate", str(doc), "--arc", "0,3")
    assert rc == 1 and "not mutable" in err
    rc, out, _ = run("mutate", str(doc), "--arc", "0,3", "--json")
    assert rc == 1 and json.loads(out)["kind"] == "NotMutable"


def test_quiver_text_dot_json():
    rc, out, _ = run("quiver", LEAPFROG, "--window=-4:4")
    assert rc == 0 and "7 vertices, 6 arrows" in out
    rc, out, _ = run("quiver", LEAPFROG, "--window=-4:4", "--dot")
    assert out.startswith("digraph")
    rc, out, _ = run("quiver", LEAPFROG, "--window=-4:4", "--json")
    payload = json.loads(out)
    assert len(payload["vertices"]) == 7 and len(payload["arrows"]) == 6


def test_render(tmp_path):
    target = tmp_path / "out.svg"
    rc, _, _ = run("render", FOUNTAIN, "--window=-3:3", "-o", str(target))
    assert rc == 0
    svg = target.read_text()
    assert svg.count('class="arc"') == 4 and svg.count('class="tick"') == 7
    target2 = tmp_path / "quiver.svg"
    rc, _, _ = run(
        "render", LEAPFROG, "--window=-4:4", "-o", str(target2), "--subject", "quiver"
    )
    assert rc == 0 and target2.read_text().count('class="vertex"') == 7


def test_json_outputs_byte_stable():
    for argv in (
        ["classify", FOUNTAIN, "--json"],
        ["maximal", FOUNTAIN, "--json"],
        ["quiver", LEAPFROG, "--window=-4:4", "--json"],
        ["hom", "--x", "0,2", "--y", "0,3", "--json"],
        ["mutate", FOUNTAIN, "--arc", "0,2", "--json"],
    ):
        first = run(*argv)
        second = run(*argv)
        assert first == second and first[0] == 0


def test_oracle_cli(monkeypatch):
    rc, out, _ = run("oracle", "--vertices", "5")
    assert rc == 0 and "PASS" in out and "FAIL" not in out
    monkeypatch.setenv("INFGON_ORACLE_LIMIT", "6")
    rc, _, err = run("oracle", "--vertices", "7")
    assert rc == 2 and "exceeds the limit" in err


def test_unknown_command_is_usage_error():
    rc, _, _ = run("frobnicate")
    assert rc == 2


def test_missing_file_is_usage_error():
    rc, _, err = run("classify", "no-such-file.arcs")
    assert rc == 2
