import json
import math
import os
import re

import numpy as np
import pytest

from voigtft import lut as lutmod
from voigtft.cli import _float, main


def read_csv(path):
    lines = open(path).read().splitlines()
    return lines[0].split(","), [line.split(",") for line in lines[1:]]


def summary_values(text):
    return {m.group(1): float(m.group(2))
            for m in re.finditer(r"summary curve=(\S+) max_abs_diff=(\S+)", text)}


def test_float_accepts_pi_multiples():
    assert _float("2pi") == 2 * math.pi
    assert _float("-2*pi") == -2 * math.pi
    assert _float("pi") == math.pi
    assert _float("0.25") == 0.25


def test_build_lut_default_grid(tmp_path, capsys):
    out = tmp_path / "t.vlut"
    assert main(["build-lut", "--h", "0.02", "--c", "0.025", "--N", "25",
                 "--nu-min=-2pi", "--nu-max", "2pi", "--nu-step", "0.1", "--out", str(out)]) == 0
    assert "25x126" in capsys.readouterr().out
    assert lutmod.load(out).shape == (25, 126)


def test_build_lut_csv_dump(tmp_path):
    assert main(["build-lut", "--N", "3", "--out", str(tmp_path / "t.vlut"),
                 "--csv", str(tmp_path / "t.csv")]) == 0
    header, rows = read_csv(tmp_path / "t.csv")
    assert header == ["nu", "vk_1", "vk_2", "vk_3", "vl_1", "vl_2", "vl_3"]
    assert len(rows) == 126


@pytest.mark.parametrize("args", [
    ["build-lut", "--N", "0", "--out", "x.vlut"],
    ["build-lut", "--h", "-1", "--out", "x.vlut"],
    ["transform", "--builtin", "rect", "--nu-step", "0"],
    ["transform", "--builtin", "rect", "--nu-min", "3", "--nu-max", "1"],
    ["transform", "--builtin", "square"],
    ["transform"],
    ["report", "--builtin", "uFn"],
    ["transform", "--builtin", "rect", "--variant", "trig", "--lut", "x.vlut"],
])
def test_config_errors_exit_2(args, tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    assert main(args) == 2
    assert "error" in capsys.readouterr().err


def test_n_zero_message_names_invariant(tmp_path, capsys):
    main(["build-lut", "--N", "0", "--out", str(tmp_path / "x")])
    assert "N must be an integer >= 1" in capsys.readouterr().err


def test_argparse_rejects_unknown_variant():
    with pytest.raises(SystemExit) as exc:
        main(["transform", "--builtin", "rect", "--variant", "fast"])
    assert exc.value.code == 2


def test_unwritable_path_exit_3(tmp_path):
    bad = tmp_path / "missing" / "dir" / "t.vlut"
    assert main(["build-lut", "--N", "3", "--out", str(bad)]) == 3
    assert main(["transform", "--builtin", "rect", "--variant", "trig", "--out", str(bad)]) == 3
    assert main(["transform", "--input", str(tmp_path / "nope.txt"), "--variant", "trig"]) == 3


def test_mismatched_lut_exit_4(tmp_path):
    path = tmp_path / "t.vlut"
    assert main(["build-lut", "--N", "10", "--out", str(path)]) == 0
    assert main(["transform", "--builtin", "rect", "--N", "11", "--lut", str(path),
                 "--out", str(tmp_path / "o.csv")]) == 4
    assert main(["transform", "--builtin", "rect", "--N", "10", "--lut", str(path),
                 "--nu-max", "9", "--out", str(tmp_path / "o.csv")]) == 4
    assert main(["transform", "--builtin", "rect", "--N", "10", "--lut", str(path),
                 "--out", str(tmp_path / "o.csv")]) == 0


def test_unparsable_input_exit_5(tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    assert main(["transform", "--input", str(empty)]) == 5
    junk = tmp_path / "junk.txt"
    junk.write_text("0 1\nabc def\n")
    assert main(["transform", "--input", str(junk)]) == 5
    corrupt = tmp_path / "c.vlut"
    assert main(["build-lut", "--N", "4", "--out", str(corrupt)]) == 0
    data = bytearray(corrupt.read_bytes())
    data[100] ^= 0xFF
    corrupt.write_bytes(bytes(data))
    assert main(["transform", "--builtin", "rect", "--N", "4", "--lut", str(corrupt)]) == 5


def test_tabulated_input(tmp_path):
    src = tmp_path / "rect.txt"
    t = np.linspace(-1, 1, 2001)
    body = "# t, f\n" + "\n".join(f"{a:.6f}, {1.0 if abs(a) < 0.5 else 0.0}" for a in t)
    src.write_text(body + "\n")
    out = tmp_path / "o.csv"
    assert main(["transform", "--input", str(src), "--variant", "trig", "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert header == ["nu", "re", "im"]
    vals = np.array(rows, dtype=float)
    mid = np.argmin(np.abs(vals[:, 0]))
    assert abs(vals[mid, 1] - 1) < 0.05


def test_transform_deterministic(tmp_path):
    outs = []
    for k in range(2):
        out = tmp_path / f"o{k}.csv"
        assert main(["transform", "--builtin", "rectApprox+sawtoothApprox",
                     "--variant", "half", "--out", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_half_and_trig_agree(tmp_path):
    frames = {}
    for variant in ("half", "trig"):
        out = tmp_path / f"{variant}.csv"
        assert main(["transform", "--builtin", "rectApprox+sawtoothApprox",
                     "--variant", variant, "--out", str(out)]) == 0
        frames[variant] = np.array(read_csv(out)[1], dtype=float)
    assert np.max(np.abs(frames["half"] - frames["trig"])) <= 1e-6


def test_fig3_transform_combined(tmp_path):
    out = tmp_path / "fig3.csv"
    assert main(["transform", "--builtin", "rect+sawtooth", "--variant", "combined",
                 "--h", "0.02", "--c", "0.025", "--N", "25", "--out", str(out)]) == 0
    vals = np.array(read_csv(out)[1], dtype=float)
    x = np.pi * vals[:, 0]
    assert np.max(np.abs(vals[:, 1] - np.sin(x) / x)) < 0.02
    assert np.max(np.abs(vals[:, 2] - (x * np.cos(x) - np.sin(x)) / (2 * x * x))) < 0.01


def test_densify(tmp_path):
    out = tmp_path / "d.csv"
    assert main(["transform", "--builtin", "gEven", "--variant", "trig", "--densify", "4",
                 "--nu-min", "0", "--nu-max", "1", "--nu-step", "0.5", "--out", str(out)]) == 0
    vals = np.array(read_csv(out)[1], dtype=float)
    np.testing.assert_allclose(vals[:, 0], np.arange(9) * 0.125, atol=1e-15)
    assert vals[2, 1] == pytest.approx(0.5 * (vals[0, 1] + vals[4, 1]), rel=1e-12)


def test_json_output(tmp_path, capsys):
    assert main(["transform", "--builtin", "rect", "--variant", "trig", "--format", "json",
                 "--nu-min", "0", "--nu-max", "1", "--nu-step", "0.5"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["columns"] == ["nu", "re", "im"]
    assert len(doc["rows"]) == 3


@pytest.mark.parametrize("preset,bounds", [
    ("fig6", {"gEven": (None, 3.5e-4), "gOdd": (None, 5e-4)}),
    ("fig7", {"c=0.001": (None, 1.1e-4), "c=0.002": (1.4e-4, None)}),
    ("fig9", {"u": (None, 6e-4)}),
])
def test_preset_summaries(preset, bounds, tmp_path, capsys):
    out = tmp_path / f"{preset}.csv"
    assert main(["report", "--preset", preset, "--out", str(out)]) == 0
    got = summary_values(capsys.readouterr().out)
    assert set(got) == set(bounds)
    for name, (lo, hi) in bounds.items():
        if lo is not None:
            assert got[name] >= lo
        if hi is not None:
            assert got[name] <= hi


def test_fig10_blank_undefined_cells(tmp_path):
    out = tmp_path / "fig10.csv"
    assert main(["report", "--preset", "fig10", "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert header[-1] == "relerr"
    blanks = [r for r in rows if r[-1] == ""]
    assert [(r[0], float(r[1])) for r in blanks] == [("odd", 0.0)]


def test_report_builtin_with_lut(tmp_path, capsys):
    path = tmp_path / "t.vlut"
    assert main(["build-lut", "--out", str(path)]) == 0
    capsys.readouterr()
    assert main(["report", "--builtin", "rect", "--lut", str(path)]) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith("curve,x,approx,reference,absdiff")
    assert summary_values(captured.err)["rect"] < 0.02


def test_module_entry_point(tmp_path):
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "voigtft", "report", "--preset", "fig3"],
                          capture_output=True, text=True, env={**os.environ})
    assert proc.returncode == 0
    assert "summary curve=rect" in proc.stderr


def test_reproduce_script(tmp_path, capsys):
    import importlib.util
    from pathlib import Path

    path = Path(__file__).parents[1] / "scripts" / "reproduce_figures.py"
    spec = importlib.util.spec_from_file_location("reproduce_figures", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert mod.main(["--out", str(tmp_path), "--only", "fig3", "fig9"]) == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == ["fig3.csv", "fig9.csv"]
    assert "summary curve=u" in capsys.readouterr().out
