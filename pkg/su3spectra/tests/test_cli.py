# su3spectra/tests/test_cli.py
import json

import pytest

from su3spectra.main import app

QUIET = ["--log-level", "WARNING"]


def invoke(runner, *args):
    return runner.invoke(app, [*QUIET, *args])


@pytest.mark.parametrize(
    "kind, expected",
    [
        ("graphs", {"E8", "E24", "Dstar(n)", "A(n)"}),
        ("groups", {"A(p,q)", "C(n)", "D(n)", "E", "F", "G", "H", "I", "J", "K", "L"}),
        ("measures", {"product", "d", "dd", "dnk"}),
    ],
)
def test_list(runner, kind, expected):
    result = invoke(runner, "list", kind, "--json")
    assert result.exit_code == 0, result.output
    names = {entry["name"] for entry in json.loads(result.stdout)}
    assert expected <= names


def test_list_unknown_kind(runner):
    result = invoke(runner, "list", "lattices")
    assert result.exit_code == 2


def test_list_table(runner):
    result = invoke(runner, "list", "measures")
    assert result.exit_code == 0
    assert "dnk" in result.stdout


def test_measure_graph_json(runner, tmp_path):
    out = tmp_path / "e8.json"
    result = invoke(runner, "measure", "--graph", "E8", "--out", str(out))
    assert result.exit_code == 0, result.output
    export = json.loads(out.read_text())
    assert export["subject"] == "E8"
    assert export["support_size"] == 72
    assert len(export["atoms"]) == 72
    assert export["total_mass"] == pytest.approx(1.0)
    assert set(export["atoms"][0]) == {"theta1", "theta2", "weight", "z"}


def test_measure_family_csv(runner, tmp_path):
    out = tmp_path / "dnk.csv"
    result = invoke(
        runner, "measure", "--family", "dnk", "--n", "8", "--k", "1/12", "--format", "csv", "--out", str(out)
    )
    assert result.exit_code == 0, result.output
    lines = out.read_text().splitlines()
    assert lines[0] == "theta1,theta2,weight,z_re,z_im"
    assert len(lines) == 37


def test_measure_group(runner, tmp_path):
    out = tmp_path / "h.json"
    result = invoke(runner, "measure", "--group", "H", "--out", str(out))
    assert result.exit_code == 0, result.output
    export = json.loads(out.read_text())
    assert export["subject"] == "H"
    assert export["total_mass"] == pytest.approx(1.0)


def test_measure_theorem_form(runner, tmp_path):
    out = tmp_path / "e4.json"
    result = invoke(
        runner, "measure", "--graph", "E4_12", "--theorem", "--form", "corrected", "--out", str(out)
    )
    assert result.exit_code == 0, result.output
    assert json.loads(out.read_text())["subject"] == "E4_12:corrected"


def test_measure_export_is_deterministic_and_round_trips(runner, tmp_path):
    first, second, parsed = tmp_path / "a.json", tmp_path / "b.json", tmp_path / "c.json"
    for out in (first, second):
        result = invoke(runner, "measure", "--family", "dd", "--n", "8/3", "--out", str(out))
        assert result.exit_code == 0, result.output
    assert first.read_bytes() == second.read_bytes()

    result = invoke(runner, "measure", "--parse", str(first), "--out", str(parsed))
    assert result.exit_code == 0, result.output
    assert parsed.read_bytes() == first.read_bytes()


@pytest.mark.parametrize(
    "args",
    [
        ["measure"],
        ["measure", "--graph", "E8", "--group", "H"],
        ["measure", "--graph", "E7"],
        ["measure", "--family", "dnk", "--n", "8"],
        ["measure", "--family", "dnk", "--n", "8", "--k", "1/4"],
        ["measure", "--family", "d", "--n", "5/2"],
        ["measure", "--family", "d", "--n", "3", "--format", "xml"],
    ],
)
def test_measure_bad_input_exits_2(runner, args):
    result = invoke(runner, *args)
    assert result.exit_code == 2, result.output


def test_measure_parse_rejects_garbage(runner, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{\"atoms\": 3}")
    result = invoke(runner, "measure", "--parse", str(bad))
    assert result.exit_code == 2


def test_verify_relations_persists_reports(runner, cli_settings):
    result = invoke(runner, "verify", "relations")
    assert result.exit_code == 0, result.output
    (run_dir,) = list(cli_settings.OUTPUT_DIR.iterdir())
    names = sorted(p.name for p in run_dir.iterdir())
    assert "summary.json" in names
    assert "relation_dd2.json" in names
    report = json.loads((run_dir / "relation_dd4_j2_d4.json").read_text())
    assert report["pass"] is True
    summary = json.loads((run_dir / "summary.json").read_text())
    assert summary["total"] == summary["passed"] == 4


def test_verify_graph(runner, cli_settings):
    result = invoke(runner, "verify", "graph", "E1_12", "--max-moment", "6", "--no-persist")
    assert result.exit_code == 0, result.output
    assert not cli_settings.OUTPUT_DIR.exists()


def test_verify_graph_reports_the_erratum(runner, cli_settings, tmp_path):
    out_dir = tmp_path / "custom"
    result = invoke(runner, "verify", "graph", "E4_12", "--out-dir", str(out_dir))
    assert result.exit_code == 0, result.output
    (run_dir,) = list(out_dir.iterdir())
    report = json.loads((run_dir / "graph_E4_12.json").read_text())
    assert report["form"] == "corrected"
    assert any(note.startswith("erratum:") for note in report["notes"])


def test_verify_group_and_oracle(runner, cli_settings):
    assert invoke(runner, "verify", "group", "C(3)", "--no-persist").exit_code == 0
    assert invoke(runner, "verify", "oracle", "5", "--no-persist").exit_code == 0


def test_verify_failure_exits_1(runner, cli_settings):
    result = invoke(runner, "verify", "graph", "E4_12", "--tol", "0", "--no-persist")
    assert result.exit_code == 1


@pytest.mark.parametrize(
    "args", [["verify", "graph", "E7"], ["verify", "group", "M"], ["verify", "oracle", "3"]]
)
def test_verify_bad_input_exits_2(runner, cli_settings, args):
    assert invoke(runner, *args).exit_code == 2


def test_verify_all(runner, cli_settings):
    result = invoke(runner, "verify", "all")
    assert result.exit_code == 0, result.output
    (run_dir,) = list(cli_settings.OUTPUT_DIR.iterdir())
    summary = json.loads((run_dir / "summary.json").read_text())
    assert summary["failed"] == []
    assert "graph:E4_12" in summary["corrected"]
    assert summary["total"] == len(list(run_dir.glob("*.json"))) - 1


def test_dims(runner):
    result = invoke(runner, "dims", "--max-k", "4", "--oracle", "--json")
    assert result.exit_code == 0, result.output
    rows = json.loads(result.stdout)
    assert [row["dim_su3"] for row in rows] == [1, 1, 2, 6, 23]
    assert [row["dim_torus"] for row in rows[:3]] == [1, 3, 15]
    assert all(row["fusion_oracle"] == row["dim_su3"] == row["kuperberg"] for row in rows)
    assert rows[0] == {
        "k": 0,
        "dim_torus": 1,
        "dim_su3": 1,
        "torus_oracle": 1,
        "fusion_oracle": 1,
        "kuperberg": 1,
    }


def test_dims_table(runner):
    assert invoke(runner, "dims", "--max-k", "2").exit_code == 0


def test_dims_cap(runner):
    assert invoke(runner, "dims", "--max-k", "9").exit_code == 2


def test_sample_discoid(runner, tmp_path):
    out = tmp_path / "grid.csv"
    result = invoke(runner, "sample-discoid", "--grid", "2", "--out", str(out))
    assert result.exit_code == 0, result.output
    lines = out.read_text().splitlines()
    assert lines[0] == "re,im,abs_j"
    assert len(lines) == 5
    assert lines[1] == "3,0,0"


def test_sample_discoid_centre_row(runner, tmp_path):
    out = tmp_path / "grid.csv"
    assert invoke(runner, "sample-discoid", "--grid", "3", "--out", str(out)).exit_code == 0
    rows = [line.split(",") for line in out.read_text().splitlines()[1:]]
    # theta = (1/3, 0) is the fourth grid point
    re, im, abs_j = map(float, rows[3])
    assert abs(complex(re, im)) < 1e-12
    assert abs_j == pytest.approx(2 * 3.141592653589793**2 * 27**0.5)


def test_sample_discoid_needs_two_points(runner):
    assert invoke(runner, "sample-discoid", "--grid", "1").exit_code == 2
