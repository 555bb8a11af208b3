"""
CLI Tests
Subcommands end to end through main(), records, files and checkpoints
"""

import io
import json
import os
import sys
from pathlib import Path

import pandas as pd
import pytest

# Add parent directory to path to import modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from cli import Checkpoint, RecordWriter, format_coloring, parse_coloring, read_coloring, resolve_coloring
from coloring import CheckpointError, DomainError, GroundSet
from constructions import mod3_interval, mod5_schur_cyclic
from main import main


def run(capsys, *argv):
    """Run the CLI and return (exit code, parsed stdout records, stderr)"""
    code = main(list(argv))
    out, err = capsys.readouterr()
    records = [json.loads(line) for line in out.splitlines() if line.startswith("{")]
    return code, records, err


def test_count_cyclic_mod3(capsys):
    code, records, _ = run(capsys, "count", "--eq", "1,1,2", "--cyclic", "-n", "9", "--coloring", "mod3-cyclic")
    assert code == 0
    [record] = records
    assert record["schema"] == "count"
    assert record["version"] == 1
    assert (record["rainbow"], record["total"]) == (54, 81)
    assert record["rb"]["fraction"] == "2/3"
    assert record["baselines"]["rainbow_random"]["fraction"] == "2/9"


def test_count_schur(capsys):
    code, records, _ = run(capsys, "count", "--eq", "1,1,1", "--cyclic", "-n", "25", "--coloring", "mod5-schur")
    assert code == 0
    assert records[0]["mono"] == 25
    assert records[0]["mono_prop"]["fraction"] == "1/25"


def test_count_interval_has_no_dichromatic(capsys):
    code, records, _ = run(capsys, "count", "--interval", "-n", "9", "--coloring", "mod3-interval")
    assert code == 0
    assert records[0]["dichromatic"] == 0
    assert records[0]["total"] == 41


@pytest.mark.parametrize("argv", [
    ["count", "--cyclic", "-n", "9", "--coloring", "mod7"],
    ["count", "--cyclic", "-n", "9", "--coloring", "mod3-interval"],
    ["count", "--cyclic", "-n", "9", "--coloring", "periodic:11"],
    ["count", "--cyclic", "-n", "9"],
    ["count", "-n", "9", "--coloring", "mod3-cyclic"],
    ["count", "--eq", "1,1", "--cyclic", "-n", "9", "--coloring", "mod3-cyclic"],
])
def test_invalid_input_exits_with_usage_code(capsys, argv):
    code, records, err = run(capsys, *argv)
    assert code == 2
    assert records == []
    assert err.startswith("❌")


def test_count_timing_fields(capsys):
    code, records, _ = run(capsys, "count", "--cyclic", "-n", "30", "--coloring", "mod3-cyclic", "--timing")
    assert code == 0
    assert records[0]["oracle_seconds"] >= 0
    assert records[0]["fast_seconds"] >= 0

    _, plain, _ = run(capsys, "count", "--cyclic", "-n", "30", "--coloring", "mod3-cyclic")
    assert "oracle_seconds" not in plain[0]


def test_common_factor_warns_over_cyclic_groups(capsys):
    code, records, err = run(capsys, "count", "--eq", "2,2,4", "--cyclic", "-n", "10", "--coloring", "mod3-cyclic")
    assert code == 0
    assert "⚠️" in err and "common factor 2" in err
    assert records[0]["eq"] == "1,1,2"
    assert records[0]["total"] == 100

    _, _, err = run(capsys, "count", "--eq", "2,2,4", "--interval", "-n", "10", "--coloring", "mod3-interval")
    assert "common factor" not in err


def test_exhaustive_search_record(capsys):
    code, records, _ = run(capsys, "search", "--mode", "exhaustive", "--cyclic", "-n", "3")
    assert code == 0
    final = records[-1]
    assert final["schema"] == "search"
    assert final["best_value"] == 6
    assert final["complete"] is True
    assert final["proportion"]["fraction"] == "2/3"
    assert all(r["schema"] == "improvement" for r in records[:-1])


def test_exhaustive_guard(capsys):
    code, _, err = run(capsys, "search", "--cyclic", "-n", "20")
    assert code == 2
    assert "override" in err


def test_local_search_is_byte_stable(capsys):
    argv = ["search", "--mode", "local", "--interval", "-n", "24", "--seed", "42",
            "--restarts", "3", "--budget", "300"]
    main(argv)
    first = capsys.readouterr().out
    main(argv + ["--threads", "2"])
    second = capsys.readouterr().out
    assert first == second


def test_local_search_resumes_from_truncated_checkpoint(capsys, tmp_path):
    argv = ["search", "--mode", "local", "--cyclic", "-n", "20", "--seed", "5",
            "--restarts", "4", "--budget", "200"]
    full_log = tmp_path / "full.ckpt"
    code, records, _ = run(capsys, *argv, "--checkpoint", str(full_log))
    assert code == 0
    uninterrupted = records[-1]

    lines = full_log.read_text(encoding="utf-8").splitlines()
    # header plus two finished restarts, then half a line
    partial = tmp_path / "partial.ckpt"
    partial.write_text("\n".join(lines[:3]) + "\n" + lines[3][: len(lines[3]) // 2], encoding="utf-8")
    code, records, err = run(capsys, *argv, "--checkpoint", str(partial))
    assert code == 0
    assert "Resuming" in err
    assert records[-1] == uninterrupted
    assert partial.read_text(encoding="utf-8").splitlines() == lines


def test_exhaustive_resume(capsys, tmp_path):
    argv = ["search", "--cyclic", "-n", "9"]
    log = tmp_path / "exhaustive.ckpt"
    _, records, _ = run(capsys, *argv, "--checkpoint", str(log))
    lines = log.read_text(encoding="utf-8").splitlines()
    log.write_text("\n".join(lines[:4]) + "\n", encoding="utf-8")
    _, resumed, _ = run(capsys, *argv, "--checkpoint", str(log))
    assert resumed[-1] == records[-1]


def test_corrupt_checkpoint(capsys, tmp_path):
    argv = ["search", "--mode", "local", "--cyclic", "-n", "12", "--restarts", "2", "--budget", "50"]
    log = tmp_path / "run.ckpt"
    run(capsys, *argv, "--checkpoint", str(log))
    lines = log.read_text(encoding="utf-8").splitlines()
    log.write_text("\n".join([lines[0], "{not json", *lines[1:]]) + "\n", encoding="utf-8")
    code, _, err = run(capsys, *argv, "--checkpoint", str(log))
    assert code == 2
    assert "corrupt" in err


def test_checkpoint_for_other_search(capsys, tmp_path):
    log = tmp_path / "run.ckpt"
    run(capsys, "search", "--mode", "local", "--cyclic", "-n", "12", "--restarts", "1", "--budget", "50",
        "--checkpoint", str(log))
    code, _, err = run(capsys, "search", "--mode", "local", "--cyclic", "-n", "13", "--restarts", "1",
                       "--budget", "50", "--checkpoint", str(log))
    assert code == 2
    assert "different search parameters" in err


@pytest.mark.parametrize("argv", [
    ["search", "--mode", "local", "--cyclic", "-n", "12", "--restarts", "2", "--budget", "50"],
    ["search", "--cyclic", "-n", "6"],
])
def test_incomplete_checkpoint_entry(capsys, tmp_path, argv):
    log = tmp_path / "run.ckpt"
    run(capsys, *argv, "--checkpoint", str(log))
    header = log.read_text(encoding="utf-8").splitlines()[0]
    log.write_text(header + "\n" + '{"index": 0}' + "\n", encoding="utf-8")
    code, records, err = run(capsys, *argv, "--checkpoint", str(log))
    assert code == 2
    assert records == []
    assert err.startswith("❌")
    assert "line 2" in err


def test_verify_suites(capsys):
    code, records, err = run(capsys, "verify", "--suite", "schur", "--max-n", "60")
    assert code == 0
    assert [r["check"] for r in records] == ["schur"]
    assert records[0]["passed"] is True
    assert "✅" in err

    code, records, _ = run(capsys, "verify", "--suite", "main-theorem", "--max-n", "120")
    assert code == 0
    assert records[0]["passed"] is True


def test_verify_failure_exit_code(capsys, monkeypatch):
    from config import config

    # an error budget of zero cannot absorb the boundary terms
    monkeypatch.setattr(config, "ERROR_BUDGET_K", 0)
    code, records, err = run(capsys, "verify", "--suite", "figure1", "--max-n", "20")
    assert code == 1
    assert records[0]["passed"] is False
    assert err.startswith("❌")


def test_sweep_csv(capsys, tmp_path):
    out = tmp_path / "sweep.csv"
    code, records, _ = run(capsys, "sweep", "--cyclic", "--coloring", "mod3-cyclic",
                           "--n-min", "3", "--n-max", "30", "-o", str(out))
    assert code == 0
    assert records[0]["rows"] == 28
    df = pd.read_csv(out, dtype={"rb_fraction": str})
    assert list(df.columns) == ["n", "total", "rainbow", "mono", "dichromatic", "rb_decimal", "rb_fraction"]
    assert (df.loc[df["n"] % 3 == 0, "rb_fraction"] == "2/3").all()
    assert (df["total"] == df["n"] ** 2).all()


def test_sweep_default_start_skips_tiny_n(capsys, tmp_path):
    out = tmp_path / "default.csv"
    code, records, _ = run(capsys, "sweep", "--cyclic", "--coloring", "mod3-cyclic", "--n-max", "9", "-o", str(out))
    assert code == 0
    assert records[0]["rows"] == 7
    assert pd.read_csv(out)["n"].tolist() == list(range(3, 10))


def test_sweep_schur_multiples_of_five(capsys, tmp_path):
    out = tmp_path / "schur.csv"
    run(capsys, "sweep", "--eq", "1,1,1", "--cyclic", "--coloring", "mod5-schur",
        "--n-min", "5", "--n-max", "50", "-o", str(out))
    df = pd.read_csv(out)
    fives = df[df["n"] % 5 == 0]
    assert (fives["mono"] * 25 == fives["total"]).all()


def test_empty_sweep_writes_header_only(capsys, tmp_path):
    out = tmp_path / "empty.csv"
    code, _, _ = run(capsys, "sweep", "--cyclic", "--coloring", "mod3-cyclic",
                     "--n-min", "10", "--n-max", "9", "-o", str(out))
    assert code == 0
    assert out.read_text().strip() == "n,total,rainbow,mono,dichromatic,rb_decimal,rb_fraction"


def test_sweep_unwritable_output(capsys, tmp_path):
    out = tmp_path / "missing" / "sweep.csv"
    code, _, err = run(capsys, "sweep", "--cyclic", "--coloring", "mod3-cyclic",
                       "--n-min", "3", "--n-max", "5", "-o", str(out))
    assert code == 2
    assert err.startswith("❌")


def test_construct_round_trips_through_count(capsys, tmp_path):
    path = tmp_path / "schur.col"
    code, _, _ = run(capsys, "construct", "mod5-schur", "-n", "10", "-o", str(path))
    assert code == 0
    assert path.read_text() == "cyclic 10\n1 2 3 3 2 1 2 3 3 2\n"
    assert read_coloring(str(path)) == mod5_schur_cyclic(10)

    code, records, _ = run(capsys, "count", "--eq", "1,1,1", "--cyclic", "-n", "10",
                           "--coloring", f"file:{path}")
    assert code == 0
    assert records[0]["coloring"] == f"file:{path}"


def test_construct_to_stdout(capsys):
    code = main(["construct", "mod3-interval", "-n", "4"])
    assert code == 0
    assert capsys.readouterr().out == "interval 4\n1 2 3 1\n"


def test_config_command(capsys):
    code, records, err = run(capsys, "config")
    assert code == 0
    assert records == []
    assert "RAINBOW_ERROR_BUDGET_K" in err


def test_coloring_format_round_trip():
    coloring = mod3_interval(7)
    assert parse_coloring(format_coloring(coloring)) == coloring
    for bad in ["cyclic 3", "torus 3\n1 2 3", "cyclic 3\n1 2", "cyclic x\n1 2 3", "cyclic 3\n1 two 3"]:
        with pytest.raises(DomainError):
            parse_coloring(bad)


def test_resolve_coloring_specs():
    ground = GroundSet.cyclic(9)
    assert resolve_coloring("periodic:123", ground) == resolve_coloring("mod3-cyclic", ground)
    assert resolve_coloring("random:4", ground) == resolve_coloring("random:4", ground)
    with pytest.raises(DomainError):
        resolve_coloring("random:abc", ground)
    with pytest.raises(DomainError):
        resolve_coloring("file:", ground)


def test_record_writer_sorts_keys():
    stream = io.StringIO()
    line = RecordWriter(stream).emit("demo", {"b": 1, "a": 2})
    assert line == '{"a": 2, "b": 1, "schema": "demo", "version": 1}'
    assert stream.getvalue() == line + "\n"


def test_checkpoint_rejects_malformed_entry(tmp_path):
    path = tmp_path / "bad.ckpt"
    checkpoint = Checkpoint(str(path), {"mode": "local"})
    assert checkpoint.load() == []
    checkpoint.append({"no_index": True})
    with pytest.raises(CheckpointError):
        Checkpoint(str(path), {"mode": "local"}).load()
    assert Path(path).exists()


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
