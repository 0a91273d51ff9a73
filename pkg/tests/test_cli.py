import json

import pytest

from spinlag.cli import EXIT_FAIL, EXIT_IO, EXIT_PASS, EXIT_USAGE, main, parse_sextic
from spinlag.cli import UsageError


def run_json(tmp_path, *args):
    out = tmp_path / "report.json"
    code = main(["verify", *args, "--out", str(out)])
    return code, json.loads(out.read_text(encoding="utf-8")), out


def test_passing_suite_exits_zero(tmp_path):
    code, report, _ = run_json(tmp_path, "kummer")
    assert code == EXIT_PASS
    assert report["status"] == "pass"
    assert [r["name"] for r in report["results"]] == ["incidence_16_6"]


def test_failing_suite_exits_one(tmp_path):
    code, report, _ = run_json(tmp_path, "trope", "--trials", "5")
    assert code == EXIT_FAIL
    status = {r["name"]: r["status"] for r in report["results"]}
    assert status["sextic_anchors"] == "fail"
    assert status["harmonicity"] == "pass"


def test_report_is_sorted_utf8_json_without_timings(tmp_path):
    _, report, out = run_json(tmp_path, "exotic", "--trials", "5")
    text = out.read_text(encoding="utf-8")
    assert text == json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    assert "wall_time_ms" not in text
    _, timed, _ = run_json(tmp_path, "exotic", "--trials", "5", "--timings")
    assert all("wall_time_ms" in r for r in timed["results"])


def test_same_seed_gives_identical_bytes(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        main(["verify", "moment", "--seed", "7", "--trials", "8", "--out", str(path)])
    assert a.read_bytes() == b.read_bytes()
    main(["verify", "moment", "--seed", "8", "--trials", "8", "--out", str(b)])
    assert a.read_bytes() != b.read_bytes()


def test_m_restricts_moment_suite(tmp_path):
    code, report, _ = run_json(tmp_path, "moment", "--m", "3", "--trials", "4")
    assert code == EXIT_PASS
    status = {r["name"]: r["status"] for r in report["results"]}
    assert status["m1_identity"] == "skip"
    assert status["m3_discriminant"] == "pass"


def test_config_file_with_flag_override(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"seed": 3, "trials": 4, "format": "text"}))
    out = tmp_path / "r.txt"
    assert main(["verify", "exotic", "--config", str(cfg), "--out", str(out)]) == EXIT_PASS
    assert out.read_text().splitlines()[-1] == "overall: pass"
    main(["verify", "exotic", "--config", str(cfg), "--format", "json", "--out", str(out)])
    report = json.loads(out.read_text())
    assert report["config"]["seed"] == 3 and report["config"]["trials"] == 4


@pytest.mark.parametrize("args", [
    ["verify", "moment", "--m", "4"],
    ["verify", "trope", "--sextic", "1,2,3"],
    ["verify", "trope", "--sextic", "1,0,0,0,0,0,0"],
    ["verify", "exotic", "--trials", "0"],
    ["verify", "exotic", "--precision", "16"],
])
def test_usage_errors(args, capsys):
    assert main(args) == EXIT_USAGE
    assert "error" in capsys.readouterr().err


def test_bad_config_is_usage_error(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"colour": "red"}))
    assert main(["verify", "exotic", "--config", str(cfg)]) == EXIT_USAGE
    cfg.write_text("{not json")
    assert main(["verify", "exotic", "--config", str(cfg)]) == EXIT_USAGE


def test_argparse_rejects_unknown_suite():
    with pytest.raises(SystemExit) as err:
        main(["verify", "nonsense"])
    assert err.value.code == EXIT_USAGE


def test_io_errors(tmp_path):
    assert main(["verify", "kummer", "--out", str(tmp_path / "missing" / "r.json")]) == EXIT_IO
    assert main(["verify", "kummer", "--config", str(tmp_path / "absent.json")]) == EXIT_IO


def test_parse_sextic():
    assert parse_sextic("1, 0, 0, 0, 0, 0, -1/2") == (1, 0, 0, 0, 0, 0, -0.5)
    with pytest.raises(UsageError):
        parse_sextic("a,b")


def test_plot_writes_svg(tmp_path, capsys):
    out = tmp_path / "slice.svg"
    code = main(["plot", "--sextic=-1,0,0,0,0,0,1", "--curve", "both", "--out", str(out)])
    assert code == EXIT_PASS
    text = out.read_text()
    assert text.lstrip().startswith("<?xml") and "<svg" in text
    assert "conic" in capsys.readouterr().out


def test_plot_is_deterministic(tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for path in (a, b):
        main(["plot", "--sextic", "1,2,0,-1,0,3,1", "--chart", "xi1", "--curve", "conic",
              "--out", str(path)])
    assert a.read_bytes() == b.read_bytes()
