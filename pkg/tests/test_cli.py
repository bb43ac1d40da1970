import csv
import io
import json
import math
import pathlib
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from golden_cases import GOLDEN_CASES
from zetakit import cli, zeta_engine
from zetakit.errors import NonConvergenceError

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def _num_close(a: float, b: float) -> bool:
    if math.isnan(a) or math.isnan(b):
        return math.isnan(a) and math.isnan(b)
    return abs(a - b) <= max(1e-9 * abs(b), 1e-12)


def _json_match(got, want) -> bool:
    if isinstance(want, dict):
        return isinstance(got, dict) and got.keys() == want.keys() and all(_json_match(got[k], want[k]) for k in want)
    if isinstance(want, list):
        return isinstance(got, list) and len(got) == len(want) and all(map(_json_match, got, want))
    if isinstance(want, float) and isinstance(got, (int, float)):
        return _num_close(float(got), want)
    return got == want


def _cell_match(got: str, want: str) -> bool:
    try:
        return _num_close(float(got), float(want))
    except ValueError:
        return got == want


# ---------------------------------------------------------------- goldens


@pytest.fixture(scope="module")
def outputs():
    cache = {}

    def get(name, fmt):
        key = (name, fmt)
        if key not in cache:
            buf = io.StringIO()
            saved = sys.stdout
            sys.stdout = buf
            try:
                code = cli.main(GOLDEN_CASES[name] + ["--format", fmt])
            finally:
                sys.stdout = saved
            assert code == 0
            cache[key] = buf.getvalue()
        return cache[key]

    return get


@pytest.mark.parametrize("name", list(GOLDEN_CASES))
def test_golden_json(name, outputs):
    want = json.loads((GOLDEN / f"{name}.json").read_text())
    assert _json_match(json.loads(outputs(name, "json")), want)


@pytest.mark.parametrize("name", list(GOLDEN_CASES))
def test_golden_csv(name, outputs):
    want = list(csv.reader(io.StringIO((GOLDEN / f"{name}.csv").read_text())))
    got = list(csv.reader(io.StringIO(outputs(name, "csv"))))
    assert got[0] == want[0]
    assert len(got) == len(want)
    for g, w in zip(got[1:], want[1:]):
        assert len(g) == len(w)
        assert all(_cell_match(a, b) for a, b in zip(g, w))


@pytest.mark.parametrize("name", list(GOLDEN_CASES))
def test_json_round_trip_exact(name, outputs):
    text = outputs(name, "json")
    assert json.dumps(json.loads(text), indent=1, allow_nan=False) + "\n" == text


def _records(text):
    body = json.loads(text)
    return body if isinstance(body, list) else [body]


@pytest.mark.parametrize("name", ["zeta_trace", "compare"])
def test_json_trace_resums(name, outputs):
    for rec in _records(outputs(name, "json")):
        acc = 0j
        for row in rec["rows"]:
            acc = acc + complex(row["term"]["re"], row["term"]["im"])
            assert complex(row["partial"]["re"], row["partial"]["im"]) == acc


def _flatten_json_row(row):
    flat = {}
    for k, v in row.items():
        if isinstance(v, dict):
            flat[f"{k}_re"], flat[f"{k}_im"] = v["re"], v["im"]
        else:
            flat[k] = v
    return flat


@pytest.mark.parametrize("name", list(GOLDEN_CASES))
def test_csv_and_json_carry_identical_numbers(name, outputs):
    json_rows = [_flatten_json_row(r) for rec in _records(outputs(name, "json")) for r in rec["rows"]]
    csv_rows = list(csv.DictReader(io.StringIO(outputs(name, "csv"))))
    assert len(json_rows) == len(csv_rows)
    for j, c in zip(json_rows, csv_rows):
        for key, val in j.items():
            cell = c[key]
            if val is None:
                assert cell in ("", "nan")
            elif isinstance(val, (int, float)) and not isinstance(val, bool):
                assert float(cell) == val
            else:
                assert cell == str(val)


def test_record_schema(outputs):
    rec = json.loads(outputs("polylog_dilog", "json"))
    assert rec["schema_version"] == "1"
    assert rec["command"] == "polylog"
    assert rec["inputs"] == {"s": "2+0i", "x": "-1+0i", "method": "auto"}


def test_compare_emits_one_record_per_kind(outputs):
    recs = _records(outputs("compare", "json"))
    assert [r["inputs"]["series"] for r in recs] == list(zeta_engine.SERIES_KINDS)


# ---------------------------------------------------------------- documented examples


def _value(out):
    row = json.loads(out)["rows"][0]
    key = "z" if "z" in row else "value"
    return complex(row[key]["re"], row[key]["im"])


class TestExamples:
    def test_zeta_two(self, capsys):
        code, out, _ = run(["zeta", "--s", "2+0i", "--series", "this_paper", "--format", "json"], capsys)
        assert code == 0 and abs(_value(out) - math.pi ** 2 / 6) < 1e-10

    def test_zeta_at_zero(self, capsys):
        argv = ["zeta", "--s", "0.5+14.134725i", "--series", "hasse", "--tol", "1e-6", "--format", "json"]
        code, out, _ = run(argv, capsys)
        assert code == 0 and abs(_value(out)) < 1e-4

    def test_polylog_values(self, capsys):
        code, out, _ = run(["polylog", "--s", "2+0i", "--x", "-1+0i", "--format", "json"], capsys)
        assert code == 0 and abs(_value(out) + math.pi ** 2 / 12) < 1e-12
        code, out, _ = run(["polylog", "--s", "1+0i", "--x", "0.5+0i", "--format", "json"], capsys)
        assert code == 0 and abs(_value(out) - math.log(2)) < 1e-14

    @pytest.mark.parametrize("argv, expected", [
        (["zee", "--s", "0+0i", "--x", "0.5"], 0.125),
        (["zee", "--s", "-2+0i", "--x", "1.0"], 0.0),
        (["zee", "--s", "2+0i", "--x", "1.0", "--method", "integral"], math.pi ** 2 / 6),
    ])
    def test_zee(self, capsys, argv, expected):
        code, out, _ = run(argv + ["--format", "json"], capsys)
        assert code == 0 and abs(_value(out) - expected) < 1e-10

    def test_ratio_scan_full_schedule(self, capsys):
        argv = ["ratio-scan", "--s0", "0.5+14.134725i", "--k-range", "2:8", "--format", "json"]
        code, out, _ = run(argv, capsys)
        rows = json.loads(out)["rows"]
        assert code == 0 and len(rows) == 7
        assert all(abs(r["ratio"] - 1) < 1e-10 for r in rows)

    def test_compare_knopp_geometric(self, outputs):
        knopp = [r for r in _records(outputs("compare", "json")) if r["inputs"]["series"] == "knopp"][0]
        mags = [r["abs_term"] for r in knopp["rows"]]
        assert all(abs(b / a - 0.5) < 0.05 for a, b in zip(mags[-5:], mags[-4:]))


# ---------------------------------------------------------------- exit codes


@pytest.mark.parametrize("argv", [
    [],
    ["nonsense"],
    ["zeta"],
    ["zeta", "--s", "2+"],
    ["zeta", "--s", "2", "--series", "euler"],
    ["zeta", "--s", "2", "--terms", "0"],
    ["zeta", "--s", "2", "--tol", "-1"],
    ["zeta", "--s", "2", "--format", "xml"],
    ["polylog", "--s", "2"],
    ["zee", "--s", "2"],
    ["zee", "--s", "2", "--x", "0.5", "--x-grid", "0:1:3"],
    ["zee", "--s", "2", "--x-grid", "0:1"],
    ["ratio-scan", "--s0", "0.5+14.134725i", "--k-range", "2:20"],
    ["ratio-scan", "--s0", "0.5+14.134725i", "--k-range", "5:2"],
    ["compare", "--s", "abc"],
    ["zeta", "--s", "2", "--config", "/nonexistent/zetakit.cfg"],
])
def test_usage_errors_exit_2(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == cli.EXIT_USAGE
    assert out == ""


@pytest.mark.parametrize("argv, fragment", [
    (["zeta", "--s", "1+0i"], "pole"),
    (["polylog", "--s", "0.7+0i", "--x", "2+0i"], "cut"),
    (["polylog", "--s", "-1.5", "--x", "0.95"], "method"),
    (["zee", "--s", "0.5", "--x", "1.5", "--method", "series"], "|x| < 1"),
    (["ratio-scan", "--s0", "1.5+3i"], "Re(s0)"),
    (["compare", "--s", "1+0i"], "pole"),
])
def test_domain_errors_exit_3(argv, fragment, capsys):
    code, out, err = run(argv, capsys)
    assert code == cli.EXIT_DOMAIN
    assert out == ""
    assert fragment in err


def test_nonconvergence_exit_4(capsys, monkeypatch):
    def stuck(*_a, **_k):
        raise NonConvergenceError("quadrature budget exhausted")

    monkeypatch.setattr(zeta_engine, "zeta_via_series", stuck)
    code, out, err = run(["zeta", "--s", "2"], capsys)
    assert code == cli.EXIT_NONCONVERGENCE
    assert "budget" in err and out == ""


def test_success_exit_0(capsys):
    code, out, _ = run(["polylog", "--s", "2", "--x", "0.5"], capsys)
    assert code == cli.EXIT_OK and out.startswith("s_re,")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zetakit", "polylog", "--s", "2+0i", "--x", "-1+0i", "--format", "json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert abs(_value(proc.stdout) + math.pi ** 2 / 12) < 1e-12
    bad = subprocess.run([sys.executable, "-m", "zetakit", "zeta", "--s", "1"], capture_output=True, text=True)
    assert bad.returncode == 3


# ---------------------------------------------------------------- config and threads


def test_config_presets_and_flags_win(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults\nseries = hasse\nterms = 20\nformat = json\n")
    code, out, _ = run(["zeta", "--s", "3", "--config", str(cfg)], capsys)
    assert code == 0
    rec = json.loads(out)
    assert rec["inputs"]["series"] == "hasse" and rec["inputs"]["terms"] == "20"
    code, out, _ = run(["zeta", "--s", "3", "--config", str(cfg), "--series", "knopp"], capsys)
    assert json.loads(out)["inputs"]["series"] == "knopp"


def test_config_malformed(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("series hasse\n")
    code, _, err = run(["zeta", "--s", "3", "--config", str(cfg)], capsys)
    assert code == cli.EXIT_USAGE and "key=value" in err


@pytest.mark.parametrize("argv", [
    ["zee", "--s", "0.5+3i", "--x-grid", "0.1:0.9:6"],
    ["compare", "--s", "0.5+3i", "--terms", "8"],
])
def test_threads_do_not_change_output(argv, capsys, monkeypatch):
    monkeypatch.setenv("ZETAKIT_THREADS", "1")
    _, serial, _ = run(argv, capsys)
    monkeypatch.setenv("ZETAKIT_THREADS", "4")
    _, parallel, _ = run(argv, capsys)
    assert serial == parallel


def test_negative_values_after_flags(capsys):
    code, out, _ = run(["polylog", "--s", "2", "--x", "-1", "--format", "json"], capsys)
    assert code == 0 and abs(_value(out) + math.pi ** 2 / 12) < 1e-12


# ---------------------------------------------------------------- literals


@pytest.mark.parametrize("text, value", [
    ("2", 2 + 0j),
    ("2+0i", 2 + 0j),
    ("0.5-14.1i", 0.5 - 14.1j),
    ("-1e-3+2E2j", -1e-3 + 200j),
    ("3i", 3j),
    ("-i", -1j),
    ("+.5", 0.5 + 0j),
    (" 1-i ", 1 - 1j),
])
def test_parse_complex(text, value):
    assert cli.parse_complex(text) == value


@pytest.mark.parametrize("text", ["", "1+", "i2", "1+2", "1++2i", "abc", "2i+1"])
def test_parse_complex_rejects(text):
    with pytest.raises(cli.UsageError):
        cli.parse_complex(text)


_finite = st.floats(allow_nan=False, allow_infinity=False)


@given(_finite, _finite)
def test_format_parse_round_trip(re_part, im_part):
    z = complex(re_part, im_part)
    back = cli.parse_complex(cli.format_complex(z))
    assert back == z
    assert math.copysign(1.0, back.imag) == math.copysign(1.0, z.imag)
