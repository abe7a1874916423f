import json
from pathlib import Path

import pytest

from origami_engine.cli.main import main, protect_negative_literals
from origami_engine.utils.io import corpus_dir

FIXTURES = Path(__file__).parent / "fixtures"


# test the Delian cubic prints cbrt(2) with its decimal enclosure
def test_solve_cubic_delian(capsys):
    assert main(["solve-cubic", "0", "-2"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("root: cbrt(2) ≈ 1.259921049894873")
    assert out.count("root:") == 1


def test_solve_cubic_general_and_digits(capsys):
    assert main(["solve-cubic", "1", "-6", "11", "-6", "--digits", "5"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["root: 1 ≈ 1", "root: 2 ≈ 2", "root: 3 ≈ 3"]


# test trisection prints three sorted roots
def test_trisect(capsys):
    assert main(["trisect", "-1/2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3  # noqa: PLR2004
    values = [float(line.split("≈ ")[1]) for line in lines]
    assert values == sorted(values)


def test_solve_quartic(capsys):
    assert main(["solve-quartic", "-5", "0", "4"]) == 0
    assert capsys.readouterr().out.count("root:") == 4  # noqa: PLR2004
    assert main(["solve-quartic", "1", "0", "1"]) == 0
    assert capsys.readouterr().out.strip() == "no real roots"


# test ngon names the failing prime
def test_ngon(capsys):
    assert main(["ngon", "11"]) == 0
    out = capsys.readouterr().out
    assert "not constructible: 11 − 1 = 2·5" in out
    assert main(["ngon", "9"]) == 0
    assert capsys.readouterr().out.startswith("constructible")


def test_classify(capsys):
    assert main(["classify", "thalian", "0", "2"]) == 0
    assert capsys.readouterr().out.startswith("NonThalian")
    assert main(["classify", "root-of-unity", "8"]) == 0
    assert capsys.readouterr().out.strip() == "Thalian"
    assert main(["classify", "totally-real", "2", "2", "2"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("NotTotallyReal")
    assert "conjugate_radicand_sign: -1" in out
    assert main(["classify", "degree", "1", "0", "0", "-2"]) == 0
    assert capsys.readouterr().out.startswith("DegreeConditionPass")


def test_dual_and_tangents(capsys):
    assert main(["dual", "1/2", "0", "0", "0", "-1", "0"]) == 0
    assert capsys.readouterr().out.startswith("dual: (")
    parabola = ["1/2", "0", "0", "0", "-1", "0"]
    sideways = ["0", "0", "1", "-1/4", "3/4", "9/64"]
    assert main(["tangents", *parabola, *sideways]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 4  # noqa: PLR2004
    assert lines[-1] == "tangent: line at infinity"


# test the exit-code contract on the fixture scripts
@pytest.mark.parametrize(
    "fixture, code",
    [
        ("good.ori", 0),
        ("bad_syntax.ori", 2),
        ("level_gate.ori", 3),
        ("assert_fail.ori", 4),
        ("precision_fail.ori", 5),
    ],
)
def test_run_exit_codes(fixture, code, capsys):
    assert main(["run", str(FIXTURES / fixture)]) == code
    captured = capsys.readouterr()
    if code == 2:  # noqa: PLR2004
        assert "3:15" in captured.err
    if code == 4:  # noqa: PLR2004
        assert "FAILED" in captured.out
        assert "2 assertions, 1 failed (thalian level)" in captured.out


# test usage errors map to 64
def test_usage_errors(capsys, tmp_path):
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 64  # noqa: PLR2004
    assert main(["run", str(tmp_path / "missing.ori")]) == 64  # noqa: PLR2004
    assert main(["solve-cubic", "1", "2", "3"]) == 64  # noqa: PLR2004
    assert main(["ngon", "1/2"]) == 64  # noqa: PLR2004
    assert main(["trisect", "x$"]) == 64  # noqa: PLR2004
    assert main(["ngon", "7", "--digits", "0"]) == 64  # noqa: PLR2004
    capsys.readouterr()


# test --level overrides the script's level
def test_run_level_override(capsys):
    assert main(["run", str(FIXTURES / "good.ori"), "--level", "origami"]) == 0
    assert "(origami level)" in capsys.readouterr().out


# test the trace of the Delian script holds a single O6 step
def test_run_writes_trace(tmp_path, capsys):
    trace_path = tmp_path / "delian.json"
    assert main(["run", str(corpus_dir() / "delian.ori"), "--trace", str(trace_path)]) == 0
    data = json.loads(trace_path.read_text(encoding="utf-8"))
    assert [step["op"] for step in data["steps"]].count("O6") == 1
    assert data["names"]["f"] in {int(k) for k in data["objects"]}
    capsys.readouterr()


# test the 9-gon figure has both parabolas and the fold lines
def test_run_writes_svg(tmp_path, capsys):
    svg_path = tmp_path / "ninegon.svg"
    argv = ["run", str(corpus_dir() / "ninegon.ori"), "--svg", str(svg_path), "--viewport", "-2,-2,2,2"]
    assert main(argv) == 0
    svg = svg_path.read_text(encoding="utf-8")
    assert svg.startswith("<?xml")
    assert svg.count("<polyline") >= 5  # noqa: PLR2004
    assert ">P</text>" in svg
    capsys.readouterr()


# test negative literals are kept away from option parsing
def test_protect_negative_literals():
    assert protect_negative_literals(["-1/2", "-sqrt(2)", "--digits", "-v", "3"]) == [
        " -1/2",
        " -sqrt(2)",
        "--digits",
        "-v",
        "3",
    ]
