import json
import math

import pytest

from dilaton_gme import VerificationCheck, VerificationReport, cli
from dilaton_gme.cli import main


def test_no_command_is_a_usage_error(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == 0
    assert "sweep" in capsys.readouterr().out


def test_sweep_stdout_format(capsys):
    code = main(
        ["sweep", "--n-horizon", "2", "--accessible", "--theta", "0.5", "--steps", "4"]
    )
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "D,alpha,beta,E_analytic"
    assert len(lines) == 5
    first = lines[1].split(",")
    assert first[0] == "0"
    assert float(first[1]) == pytest.approx(0.9999999999939192)
    # final grid point lands exactly on d-max = mass
    assert lines[-1].split(",")[0] == "1"


def test_sweep_oracle_column_consistent(capsys):
    code = main(
        [
            "sweep", "--n-horizon", "2", "--p", "1", "--theta", "0.7",
            "--steps", "5", "--oracle", "--n-parties", "4",
        ]
    )
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "D,alpha,beta,E_analytic,E_oracle"
    for line in lines[1:]:
        fields = line.split(",")
        assert float(fields[4]) == pytest.approx(float(fields[3]), abs=1e-10)


def test_sweep_reruns_are_byte_identical(tmp_path):
    args = [
        "sweep", "--n-horizon", "3", "--q", "1", "--theta", "0.9",
        "--d-min", "0.2", "--d-max", "0.8", "--steps", "11",
    ]
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    assert main(args + ["--output", str(first)]) == 0
    assert main(args + ["--output", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


@pytest.mark.parametrize(
    "argv",
    [
        ["sweep", "--n-horizon", "2"],                                  # no split chosen
        ["sweep", "--n-horizon", "2", "--accessible", "--p", "1"],      # conflicting split
        ["sweep", "--n-horizon", "2", "--p", "1", "--q", "2"],          # p + q != n
        ["sweep", "--n-horizon", "2", "--p", "1", "--steps", "1"],
        ["sweep", "--n-horizon", "2", "--p", "1", "--d-min", "0.9", "--d-max", "0.1"],
        ["sweep", "--n-horizon", "2", "--p", "1", "--oracle"],          # missing n-parties
        ["state", "--n-parties", "3", "--n-horizon", "4", "--accessible"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    capsys.readouterr()


def test_domain_errors_exit_2(capsys):
    # dilaton beyond the mass is a parameter error, not a crash
    code = main(
        ["state", "--n-parties", "3", "--n-horizon", "1", "--accessible", "--dilaton", "2.0"]
    )
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_state_dump(capsys):
    code = main(
        [
            "state", "--n-parties", "2", "--n-horizon", "1", "--accessible",
            "--theta", str(math.pi / 4), "--dilaton", "1.0",
        ]
    )
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "# modes: F1,O1"
    assert lines[1] == "row,col,value"
    rows = {tuple(l.split(",")[:2]): float(l.split(",")[2]) for l in lines[2:]}
    assert rows[("0", "0")] == pytest.approx(0.25)
    assert rows[("0", "3")] == pytest.approx(0.125**0.5)
    assert rows[("3", "3")] == pytest.approx(0.5)


def test_state_dump_diagonal_at_theta_zero(capsys):
    code = main(
        ["state", "--n-parties", "3", "--n-horizon", "2", "--p", "1",
         "--theta", "0", "--dilaton", "0.6"]
    )
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    data = [l.split(",") for l in lines[2:]]
    assert len(data) == 4  # 2**n diagonal populations
    assert all(r == c for r, c, _ in data)


def test_figures_written_and_deterministic(tmp_path, capsys):
    dir_a = tmp_path / "a"
    dir_b = tmp_path / "b"
    for target in (dir_a, dir_b):
        assert main(["figures", "--output-dir", str(target), "--steps", "9"]) == 0
        capsys.readouterr()
    for stem in ("fig1", "fig2", "fig3"):
        csv_a = (dir_a / f"{stem}.csv").read_bytes()
        csv_b = (dir_b / f"{stem}.csv").read_bytes()
        assert csv_a == csv_b
    header = (dir_a / "fig1.csv").read_text().splitlines()[0]
    assert header == "D,E_n5_pi6,E_n20_pi6,E_n80_pi6,E_n5_pi4,E_n20_pi4,E_n80_pi4"
    header2 = (dir_a / "fig2.csv").read_text().splitlines()[0]
    assert header2 == "D,E_n8_pi6,E_n10_pi6,E_n12_pi6,E_n8_pi4,E_n10_pi4,E_n12_pi4"
    header3 = (dir_a / "fig3.csv").read_text().splitlines()[0]
    assert header3.startswith("D,E_p8_q4_pi12,E_p8_q4_pi6,E_p8_q4_pi4,E_p32_q2_pi12")


def test_figures_svg(tmp_path, capsys):
    assert main(["figures", "--output-dir", str(tmp_path), "--steps", "5", "--svg"]) == 0
    out = capsys.readouterr().out
    for stem in ("fig1", "fig2", "fig3"):
        path = tmp_path / f"{stem}.svg"
        assert str(path) in out
        assert path.read_text().startswith("<svg")


def test_verify_small_grid(tmp_path):
    out = tmp_path / "report.json"
    code = main(["verify", "--grid", "small", "--steps", "101", "--output", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    names = [item["name"] for item in payload]
    assert "oracle-vs-analytic" in names
    assert "dual-construction" in names
    assert "monotonicity-p8-q4" in names
    assert all(item["status"] == "pass" for item in payload)
    for item in payload:
        assert list(item) == [
            "name", "grid-size", "max-abs-error", "tolerance", "status",
            "worst-case-inputs",
        ]


def test_verify_failure_sets_exit_code(monkeypatch, capsys):
    failing = VerificationReport(
        (VerificationCheck("forced", 1, 1.0, 0.0, "fail", None),)
    )
    monkeypatch.setattr(cli, "oracle_compare", lambda grid: failing)
    monkeypatch.setattr(cli, "relationship_suite", lambda grid: VerificationReport(()))
    monkeypatch.setattr(
        cli, "monotonicity_scan", lambda p, q, steps: VerificationReport(())
    )
    assert main(["verify", "--grid", "small"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload[0]["status"] == "fail"
