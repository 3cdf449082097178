import io
import json

import pandas as pd
import pytest
from pydantic import ValidationError

from cli.main import main, parse_config
from cli.schemas import RunConfig
from cli.utils_cli import load_envelope

TABLE1_N40 = [
    1.16905371, 1.16905371, 2.04397477, 2.04397477, 2.76025891,
    2.76025891, 3.32773734, 3.72378306, 5.05683113, 6.44321061,
]


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _error(err: str) -> dict:
    return json.loads(err.strip().splitlines()[-1])


# ========== Successful Runs ==========

def test_two_level_evolve_at_time_zero_echoes_state(capsys):
    code, out, _ = _run(capsys, "two-level", "evolve", "--mu", "1", "--psi0", "1,0", "--t", "0", "--format", "json")
    assert code == 0
    row = load_envelope(out).data[0]
    assert row["t"] == 0.0
    assert (row["psi1_re"], row["psi1_im"]) == pytest.approx((1.0, 0.0))
    assert (row["psi2_re"], row["psi2_im"]) == pytest.approx((0.0, 0.0))
    assert row["norm"] == pytest.approx(1.0)


def test_confined_spectrum_csv(capsys):
    code, out, _ = _run(capsys, "confined", "spectrum", "--T", "12", "--mu", "1", "--N", "40")
    assert code == 0
    assert "\r" not in out
    frame = pd.read_csv(io.StringIO(out))
    assert list(frame.columns) == ["index", "re", "im", "label", "partner", "eps_re", "eps_im"]
    assert len(frame) == 80
    assert frame["re"].iloc[:10].tolist() == pytest.approx(TABLE1_N40, abs=1e-5)
    assert frame["label"].iloc[:6].tolist() == ["pair"] * 6
    assert frame["partner"].iloc[:2].tolist() == [2, 1]


def test_table_command(capsys):
    code, out, _ = _run(capsys, "table", "1")
    assert code == 0
    frame = pd.read_csv(io.StringIO(out))
    assert frame["within_tol"].all()
    assert set(frame["column"]) == {"N=10", "N=12", "N=20", "N=40"}


def test_json_envelope_echoes_config(capsys):
    code, out, _ = _run(capsys, "two-level", "eig", "--mu", "0.5,1,2", "--format", "json")
    assert code == 0
    envelope = load_envelope(out)
    assert envelope.meta["config"]["command"] == "two-level"
    assert envelope.meta["config"]["mu"] == [0.5, 1.0, 2.0]
    assert "version" in envelope.meta
    assert [row["regime"] for row in envelope.data] == ["complex", "exceptional", "real"]


def test_repeated_runs_are_byte_identical(capsys):
    argv = ("confined", "spectrum", "--T", "6", "--N", "10", "--format", "json")
    _, first, _ = _run(capsys, *argv)
    _, second, _ = _run(capsys, *argv)
    assert first == second


def test_output_file(capsys, tmp_path):
    target = tmp_path / "eig.csv"
    code, out, _ = _run(capsys, "two-level", "eig", "--mu", "0.6", "--out", str(target))
    assert code == 0 and out == ""
    frame = pd.read_csv(target)
    assert frame["lambda1_im"].iloc[0] == pytest.approx(0.8)


def test_sweep_command(capsys):
    code, out, _ = _run(capsys, "sweep", "--T", "12,13", "--N", "40")
    assert code == 0
    frame = pd.read_csv(io.StringIO(out))
    assert frame.groupby("T")["pair_count"].first().to_dict() == {12.0: 3, 13.0: 4}


def test_asymptotics_command(capsys):
    code, out, _ = _run(capsys, "asymptotics", "--m", "1,3", "--x", "4,8")
    assert code == 0
    frame = pd.read_csv(io.StringIO(out))
    assert frame["consistent"].tolist() == [False, True]
    assert list(frame.columns)[-2:] == ["residual_x4", "residual_x8"]


def test_shoot_command(capsys):
    code, out, _ = _run(capsys, "shoot", "--N", "20", "--count", "2")
    assert code == 0
    frame = pd.read_csv(io.StringIO(out))
    assert len(frame) == 2
    assert (frame["shift"] < 1e-6).all()


# ========== Failures ==========

def test_usage_error(capsys):
    code, _, err = _run(capsys, "two-level", "bogus")
    assert code == 2
    assert _error(err)["error"] == "UsageError"


def test_negative_box_length(capsys):
    code, _, err = _run(capsys, "confined", "spectrum", "--T", "-1")
    assert code == 2
    assert _error(err)["error"] == "ValidationError"


def test_metric_at_exceptional_point(capsys):
    code, _, err = _run(capsys, "two-level", "metric", "--mu", "1", "--t", "0,1")
    assert code == 1
    assert _error(err)["error"] == "ExceptionalInput"


def test_unwritable_output(capsys, tmp_path):
    code, _, err = _run(capsys, "two-level", "eig", "--out", str(tmp_path / "missing" / "eig.csv"))
    assert code == 1
    assert _error(err)["error"] == "EmitError"


def test_parse_config_defaults():
    run, log_level = parse_config(["two-level", "metric", "--mu", "0.5", "--t", "0,2"])
    assert run.tau_or_default == 2.0
    assert run.coupling.value == "full"
    assert log_level == "WARNING"


def test_run_config_rejects_unknown_keys():
    with pytest.raises(ValidationError):
        RunConfig(command="sweep", colour="blue")
    with pytest.raises(ValidationError):
        RunConfig(command="table", action="4")
    with pytest.raises(ValidationError):
        RunConfig(command="asymptotics", m=[2])
