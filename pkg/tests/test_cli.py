# ┌──────────────────────────────┐
# │ rj-satotate-toolkit          │
# │ Created: Mon Oct 19 2026     │
# └──────────────────────────────┘

import json
import logging
from pathlib import Path

import pytest

from rj_satotate_toolkit.cli import (
    CommandRegistry,
    RunConfig,
    compute_records_parallel,
    default_registry,
    load_config_file,
    main,
)
from rj_satotate_toolkit.cli.commands import cg_sample_points
from rj_satotate_toolkit.cli.run_config import parse_eta_factors
from rj_satotate_toolkit.exceptions import DataIOError, InputError
from rj_satotate_toolkit.forms import CurveBackend, EllipticCurve, cache_read
from rj_satotate_toolkit.numtheory import sieve_primes

CURVE = "0,-1,1,-10,-20"


@pytest.fixture
def run(tmp_path, capsys):
    """在临时目录里运行 CLI，返回 (退出码, stdout 去掉空白)"""
    def _run(*argv, cache="cache", out="out"):
        args = list(argv) + ["--cache-dir", str(tmp_path / cache), "--out", str(tmp_path / out)]
        code = main(args)
        return code, capsys.readouterr().out.strip()
    return _run


def load_json(path: str) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def test_eigen_writes_cache(run):
    code, out = run("eigen", "--curve", CURVE, "--X", "1000")
    assert code == 0
    records = cache_read(out)
    assert len(records) == 167
    assert records[0].p == 2 and records[0].exact_integer == -2
    assert all(r.p != 11 for r in records)


def test_eigen_summary_logged_at_info(run, caplog):
    with caplog.at_level(logging.INFO, logger="rj_satotate_toolkit.cli.commands"):
        assert run("eigen", "--curve", CURVE, "--X", "100")[0] == 0
    summary = [r for r in caplog.records if r.name == "rj_satotate_toolkit.cli.commands" and "Ramanujan" in r.getMessage()]
    assert len(summary) == 1
    assert summary[0].levelno == logging.INFO


def test_eigen_eta_product(run):
    code, out = run("eigen", "--eta", "1:2,11:2", "--level", "11", "--X", "200")
    assert code == 0
    records = {r.p: r.exact_integer for r in cache_read(out)}
    assert records[2] == -2 and records[3] == -1 and records[13] == 4


def test_cache_dir_from_environment(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("SATOTATE_CACHE_DIR", str(tmp_path / "env_cache"))
    code = main(["eigen", "--curve", CURVE, "--X", "100", "--out", str(tmp_path / "out")])
    assert code == 0
    assert Path(capsys.readouterr().out.strip()).parent == tmp_path / "env_cache"


def test_usage_errors(run, tmp_path):
    assert run("density", "--X", "100")[0] == 2
    assert run("density", "--curve", CURVE, "--label", "11.2.a.a")[0] == 2
    assert run("eigen", "--eta", "1:2,11:2")[0] == 2
    assert run("eigen", "--curve", CURVE, "--X", "abc")[0] == 2
    assert run("eigen", "--curve", CURVE, "--X", "1")[0] == 2
    assert run("eigen", "--curve", "0,0,0,-1,0", "--X", "100")[0] == 2
    assert run("eigen", "--curve", CURVE, "--config", str(tmp_path / "missing.cfg"))[0] == 3


def test_no_command_prints_usage(capsys):
    assert main([]) == 2
    assert "usage" in capsys.readouterr().err


def test_list_commands(capsys):
    assert main(["--list-commands"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 7
    assert lines[0].startswith("eigen")


def test_equidist_outputs(run, tmp_path):
    code, out = run("equidist", "--curve", CURVE, "--X", "3000", "--b-max", "4")
    assert code == 0
    report = load_json(out)
    assert report["class_count"] == 429
    assert set(report["weyl"]) == {f"0,{b}" for b in range(5)}
    assert report["fiber_freq"] == {"0": 1.0}
    assert report["ks_pooled"] < 0.15
    assert "workers" not in report["config"]
    stem = Path(out).stem
    hist = tmp_path / "out" / f"{stem}_hist.dat"
    assert hist.read_text(encoding="utf-8").startswith("# theta,count")
    assert (tmp_path / "out" / f"{stem}_classes.csv").exists()


def test_equidist_haar_baseline_follows_seed(run):
    _, first = run("equidist", "--curve", CURVE, "--X", "1000", "--b-max", "2", "--seed", "3", out="s3")
    _, again = run("equidist", "--curve", CURVE, "--X", "1000", "--b-max", "2", "--seed", "3", out="s3b")
    _, other = run("equidist", "--curve", CURVE, "--X", "1000", "--b-max", "2", "--seed", "4", out="s4")
    assert Path(first).read_bytes() == Path(again).read_bytes()
    first, other = load_json(first), load_json(other)
    assert set(first["haar_baseline"]) == {"0,0", "0,1", "0,2"}
    assert first["weyl"] == other["weyl"]
    assert first["haar_baseline"] != other["haar_baseline"]
    assert run("equidist", "--curve", CURVE, "--X", "1000", "--seed", "-1")[0] == 2


@pytest.mark.parametrize("argv", [
    ("equidist", "--curve", CURVE, "--X", "300"),
    ("density", "--curve", CURVE, "--X", "300"),
    ("lfunc", "--curve", CURVE, "--X", "300", "--t-max", "1", "--t-step", "0.5"),
])
def test_reports_written_atomically(run, monkeypatch, tmp_path, argv):
    from rj_satotate_toolkit.cli import commands

    written = []
    original = commands.atomic_write_text

    def spy(path, text):
        written.append(Path(path))
        original(path, text)

    monkeypatch.setattr(commands, "atomic_write_text", spy)
    code, out = run(*argv)
    assert code == 0
    assert written == [Path(out)]
    assert not list((tmp_path / "out").glob("*.tmp"))


def test_density_report(run):
    code, out = run("density", "--curve", CURVE, "--X", "1000")
    assert code == 0
    report = load_json(out)
    assert report["non_ordinary"][:3] == [2, 19, 29]
    assert report["ordinary_count"] + len(report["non_ordinary"]) == 167


def test_tset_report(run):
    code, out = run("tset", "--degree", "1")
    assert code == 0
    report = load_json(out)
    assert report["count"] == 5
    assert report["elements"] == [[1, -2], [1, -1], [1, 0], [1, 1], [1, 2]]
    assert report["conventions"]["normalization"] == "arithmetic"


def test_weightlat_report(run):
    code, out = run("weightlat", "--n", "3", "--t", "2,1,0", "--b", "2,1,0")
    assert code == 0
    report = load_json(out)
    assert report["monomial_count"] == 9
    assert report["weyl_dimension"] == 8
    assert report["min_twisted"] == 0
    assert report["zero_twisted"] == [report["lowest_weight"]]
    assert report["u_element"] == [2, 1, 0]
    assert report["ul_identity"] == 0


def test_lfunc_scan(run):
    code, out = run("lfunc", "--curve", CURVE, "--X", "500", "--a", "0", "--b", "2",
                    "--sigma", "2.5", "--t-max", "2", "--t-step", "0.5")
    assert code == 0
    report = load_json(out)
    assert report["sigma"] == 2.5
    assert report["t_grid"][0] == 0.0
    assert report["min_modulus"] > 0.0


def test_cgcheck_passes(run):
    code, out = run("cgcheck", "--curve", CURVE, "--X", "200", "--b-max", "2")
    assert code == 0
    report = load_json(out)
    assert report["failures"] == []
    assert report["checked"] == 45 * 2 * 1 * 5


def test_config_file_with_cli_override(run, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(f"# 11a1\ncurve = {CURVE}\nX = 1000\n", encoding="utf-8")
    code, out = run("density", "--config", str(cfg), "--X", "300")
    assert code == 0
    assert load_json(out)["prime_bound"] == 300


def test_reports_identical_across_workers(run):
    _, serial = run("equidist", "--curve", CURVE, "--X", "2000", "--workers", "1",
                    cache="c1", out="o1")
    _, parallel = run("equidist", "--curve", CURVE, "--X", "2000", "--workers", "2",
                      cache="c2", out="o2")
    assert Path(serial).read_bytes() == Path(parallel).read_bytes()


def test_compute_records_parallel_matches_serial():
    backend = CurveBackend(EllipticCurve.from_coefficients((0, -1, 1, -10, -20)))
    primes = sieve_primes(2, 1500)
    serial = compute_records_parallel(backend, primes, workers=1)
    parallel = compute_records_parallel(backend, primes, workers=3)
    assert [(r.p, r.exact_integer) for r in serial] == [(r.p, r.exact_integer) for r in parallel]


def test_load_config_file(tmp_path):
    cfg = tmp_path / "a.cfg"
    cfg.write_text("\n# comment\nt-max = 5\nlevel=11\n", encoding="utf-8")
    assert load_config_file(cfg) == {"t_max": "5", "level": "11"}
    cfg.write_text("no equals sign\n", encoding="utf-8")
    with pytest.raises(InputError):
        load_config_file(cfg)
    with pytest.raises(DataIOError):
        load_config_file(tmp_path / "missing.cfg")


def test_run_config_parsing():
    config = RunConfig.from_mapping("lfunc", {
        "eta": "1:2, 11:2",
        "level": "11",
        "sigma": "2.25",
        "workers": "4",
        "unknown": "ignored"
    })
    assert config.eta == ((1, 2), (11, 2))
    assert config.form_kind == "eta"
    assert config.sigma == 2.25
    assert "workers" not in config.to_dict()
    with pytest.raises(InputError):
        parse_eta_factors("1-2")
    with pytest.raises(InputError):
        RunConfig(command="eigen", curve=(0, 1), workers=0)
    with pytest.raises(InputError):
        RunConfig(command="tset", timeout=0)
    assert RunConfig(command="tset").form_kind is None


def test_cg_sample_points_right_of_abscissa():
    for b in range(1, 5):
        for k in (2, 3):
            points = cg_sample_points(b, k)
            assert len(points) == 5
            assert min(s.real for s in points) > 1 + (b + 1) * (k - 1) / 2


def test_registry():
    registry = default_registry()
    assert registry.has("weightlat")
    assert [c["command_id"] for c in registry.list_commands(category="ordinarity")] == ["density", "tset"]
    assert registry.list_commands(category="forms")[0]["description"].startswith("计算并缓存")
    with pytest.raises(ValueError):
        registry.register("eigen", lambda config: None)
    with pytest.raises(KeyError):
        registry.get("plot")

    fresh = CommandRegistry()
    with pytest.raises(TypeError):
        fresh.register("x", "not callable")
    fresh.register("x", lambda config: "a", description="first")
    fresh.register("x", lambda config: "b", description="second", update=True)
    assert fresh.get("x")(None) == "b"
    assert fresh.list_commands() == [{"command_id": "x", "description": "second", "category": ""}]
