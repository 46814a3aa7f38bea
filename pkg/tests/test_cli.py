import json

import pytest

from hexlat.cli import main, parse_offset


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_synth_then_classify(tmp_path, capsys):
    f = tmp_path / "d4.hexlat.json"
    assert run(capsys, "synth", "--family", "D", "--degree", "4", "-o", str(f))[0] == 0
    code, out, _ = run(capsys, "classify", str(f))
    assert code == 0
    assert out.strip() == "Family(D,4), b=16, g=3"
    code, out, _ = run(capsys, "classify", str(f), "--json")
    assert json.loads(out)["invariants"]["b"] == 16


def test_verify_appendix(tmp_path, capsys):
    csv = tmp_path / "rows.csv"
    code, out, _ = run(capsys, "verify-appendix", "--range", "25", "--csv", str(csv))
    assert code == 0
    assert out.strip() == "32 surviving parametric types, 8 classes: MATCH"
    assert csv.read_text().startswith("case,")


def test_variety_verify(capsys):
    code, out, _ = run(capsys, "variety", "--kind", "v", "--degree", "3", "--verify")
    assert code == 0
    assert "equivalent to (A)_3: yes" in out


def test_smooth_and_failure(tmp_path, capsys):
    d1 = tmp_path / "d1.hexlat.json"
    run(capsys, "synth", "--family", "D", "--degree", "1", "-o", str(d1))
    out = tmp_path / "d2.hexlat.json"
    code, text, _ = run(capsys, "smooth", str(d1), str(d1), "--offset", "1/13,1/13", "-o", str(out))
    assert code == 0 and "2 crossings" in text
    code, _, err = run(capsys, "smooth", str(d1), str(d1), "--offset", "0,0", "-o", str(out))
    assert code == 2 and "shared bridge point" in err


def test_recursion(tmp_path, capsys):
    f = tmp_path / "g4.hexlat.json"
    code, out, _ = run(capsys, "recursion", "--family", "G", "--degree", "4", "-o", str(f))
    assert code == 0 and "equivalent to (G)_4: yes" in out
    code, out, _ = run(capsys, "classify", str(f))
    assert out.startswith("Family(G,4)")


def test_render(tmp_path, capsys):
    f = tmp_path / "a3.hexlat.json"
    run(capsys, "synth", "--family", "A", "--degree", "3", "-o", str(f))
    svg = tmp_path / "a3.svg"
    assert run(capsys, "render", str(f), "-o", str(svg), "--domain", "hexagon")[0] == 0
    assert svg.read_bytes().startswith(b"<?xml")


@pytest.mark.parametrize("argv", [
    ["numeric", "arc", "--t", "2"],
    ["numeric", "rd-slice", "--d", "3", "--s", "0.5"],
    ["numeric", "sigma", "--d", "3"],
    ["numeric", "trace", "--d", "3"],
    ["numeric", "smoothness", "--d", "3", "--samples", "300"],
    ["numeric", "cone", "--d", "3", "--grid", "6"],
])
def test_numeric(capsys, argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    json.loads(out)


def test_numeric_trace_outputs(tmp_path, capsys):
    pytest.importorskip("matplotlib")
    csv, png = tmp_path / "t.csv", tmp_path / "t.png"
    code, _, _ = run(capsys, "numeric", "trace", "--d", "4", "--csv", str(csv), "--plot", str(png))
    assert code == 0
    assert csv.read_text().startswith("j,sample")
    assert png.stat().st_size > 0


def test_seed_is_deterministic(capsys):
    a = run(capsys, "numeric", "smoothness", "--d", "4", "--samples", "200", "--seed", "7")[1]
    b = run(capsys, "numeric", "smoothness", "--d", "4", "--samples", "200", "--seed", "7")[1]
    assert a == b


def test_exit_codes(tmp_path, capsys):
    assert run(capsys, "nonsense")[0] == 1
    assert run(capsys, "synth", "--family", "B", "--degree", "1", "-o", str(tmp_path / "x"))[0] == 1
    assert run(capsys, "classify", str(tmp_path / "missing.json"))[0] == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "classify", str(bad))[0] == 3


def test_parse_offset():
    from fractions import Fraction as F
    assert parse_offset("1/13,-2/7") == (F(1, 13), F(-2, 7))
    with pytest.raises(Exception):
        parse_offset("1/2")
