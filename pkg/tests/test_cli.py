"""Command-line interface: exit codes, output formats, byte stability."""

import json

from click.testing import CliRunner

from padic_hyperg.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_verify_ok_and_report(tmp_path):
    out = tmp_path / "r.json"
    res = run("verify", "--id", "thm-1.1", "--p-min", "5", "--p-max", "11",
              "--out", str(out), "--no-cache")
    assert res.exit_code == 0, res.output
    body = json.loads(out.read_text())
    assert body["identity"] == "thm-1.1"
    assert body["summary"]["failed"] == 0
    assert body["summary"]["checked"] > 0


def test_verify_unknown_id():
    res = run("verify", "--id", "nope")
    assert res.exit_code == 2


def test_verify_bad_range():
    res = run("verify", "--id", "thm-1.1", "--p-min", "11", "--p-max", "7")
    assert res.exit_code == 2


def test_verify_bad_infinity():
    res = run("verify", "--id", "thm-1.5", "--infinity", "7")
    assert res.exit_code == 2


def test_verify_nonzero_on_failures(tmp_path):
    # the displayed form of thm-1.2 fails; the exit code must say so
    res = run("verify", "--id", "thm-1.2", "--p-min", "5", "--p-max", "7",
              "--no-cache")
    assert res.exit_code == 1
    assert "FAILURES" in res.output


def test_verify_csv_format(tmp_path):
    out = tmp_path / "r.csv"
    res = run("verify", "--id", "thm-1.1", "--p-min", "5", "--p-max", "7",
              "--format", "csv", "--out", str(out), "--no-cache")
    assert res.exit_code == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("identity,p,params")
    assert len(lines) > 1


def test_report_byte_stability(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        res = run("verify", "--id", "thm-1.6-corrected", "--p-min", "5",
                  "--p-max", "11", "--out", str(path), "--no-cache")
        assert res.exit_code == 0
    assert a.read_bytes() == b.read_bytes()


def test_gfun_matches_library():
    res = run("gfun", "--p", "7", "--top", "1/4,3/4", "--bot", "1/3,2/3",
              "--t", "2", "--no-cache")
    assert res.exit_code == 0
    from fractions import Fraction
    from padic_hyperg.hyperg import HyperParams, nGn
    from padic_hyperg.padics import PadicContext
    want = nGn(HyperParams((Fraction(1, 4), Fraction(3, 4)),
                           (Fraction(1, 3), Fraction(2, 3)), 2),
               PadicContext(7, 3)).value
    assert res.output.strip() == repr(want)


def test_gfun_rejects_bad_denominator():
    res = run("gfun", "--p", "7", "--top", "1/7,3/4", "--bot", "1/3,2/3",
              "--t", "2")
    assert res.exit_code == 2


def test_count_pinned():
    res = run("count", "--family", "dik", "--p", "5", "--lam", "2")
    assert res.exit_code == 0
    assert "trace=0" in res.output
    res = run("count", "--family", "weierstrass", "--p", "5",
              "--a2", "2", "--a4", "2", "--a6", "0")
    assert "trace=-2" in res.output


def test_count_singular_exit_4():
    res = run("count", "--family", "dik", "--p", "5", "--lam", "0")
    assert res.exit_code == 4


def test_gauss_ok_and_cap():
    res = run("gauss", "--p", "7", "--no-cache")
    assert res.exit_code == 0
    assert "FAIL" not in res.output
    res = run("gauss", "--p", "53")
    assert res.exit_code == 4


def test_cache_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("PADIC_HYPER_CACHE", str(tmp_path))
    res = run("gfun", "--p", "11", "--top", "1/2,1/2", "--bot", "1/4,3/4",
              "--t", "3")
    assert res.exit_code == 0
    assert list(tmp_path.iterdir()), "cache directory was not populated"
