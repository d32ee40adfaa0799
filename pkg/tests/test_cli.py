"""Command-line contract: configs, flags, schemas, serialization identity."""

import csv
import io
import json

import pytest

from accessgame.cli import SCHEMA_VERSION, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_config(tmp_path, payload, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


BASE_GAME = {"cost_spec": {"kind": "homogeneous", "cost": 1.0, "n": 3}}


def test_equilibria_json_round_trip(tmp_path, capsys):
    cfg = write_config(tmp_path, {**BASE_GAME, "enumerate_supports": True})
    code, out, err = run_cli(capsys, "equilibria", "--config", cfg)
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["schema_version"] == SCHEMA_VERSION
    assert doc["command"] == "equilibria"
    assert json.loads(json.dumps(doc)) == doc
    labels = [row["label"] for row in doc["rows"]]
    assert labels.count("fully-mixed") == 1
    assert sum(1 for l in labels if l.startswith("pure:")) == 3
    assert sum(1 for l in labels if l.startswith("mixed:")) == 3
    assert all(row["exists"] for row in doc["rows"])


def test_nonexistence_is_data_not_failure(tmp_path, capsys):
    cfg = write_config(tmp_path, {"cost_spec": {"kind": "explicit", "costs": [9.0, 9.0, 1.0 / 9.0]}})
    code, out, _ = run_cli(capsys, "equilibria", "--config", cfg)
    assert code == 0
    fmne = [r for r in json.loads(out)["rows"] if r["label"] == "fully-mixed"]
    assert fmne[0]["exists"] is False
    assert "node=2" in fmne[0]["violations"]


def test_csv_and_json_values_are_identical(tmp_path, capsys):
    payload = {**BASE_GAME, "n_grid": [10, 50, 100]}
    cfg = write_config(tmp_path, payload)
    code, json_out, _ = run_cli(capsys, "distance", "--config", cfg, "--format", "json")
    assert code == 0
    code, csv_out, _ = run_cli(capsys, "distance", "--config", cfg, "--format", "csv")
    assert code == 0

    doc = json.loads(json_out)
    reader = csv.DictReader(io.StringIO(csv_out))
    csv_rows = list(reader)
    assert reader.fieldnames == doc["columns"]
    assert len(csv_rows) == len(doc["rows"])
    for jrow, crow in zip(doc["rows"], csv_rows):
        for col in doc["columns"]:
            jval = jrow[col]
            cval = crow[col]
            if jval is None:
                assert cval == ""
            elif isinstance(jval, bool):
                assert cval == ("true" if jval else "false")
            elif isinstance(jval, float):
                assert cval == repr(jval)  # shortest round-trip text, not rounded
            else:
                assert cval == str(jval)


def test_limit_command_reports_mixture_and_diagnostics(tmp_path, capsys):
    cfg = write_config(tmp_path, {
        "cost_spec": {"kind": "unit_tail", "head_costs": [1.5, 2.0]},
        "n_grid": [10, 100, 1000],
    })
    code, out, _ = run_cli(capsys, "limit", "--config", cfg)
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [r["n"] for r in rows] == [10, 100, 1000]
    assert all(r["limit_source"] == "closed_form" for r in rows)
    assert rows[-1]["verdict"] == "converges"
    assert rows[-1]["bernoullis"].count(";") == 1


def test_limit_recipe_source_for_explicit_costs(tmp_path, capsys):
    cfg = write_config(tmp_path, {
        "cost_spec": {"kind": "sequence", "rule": "geometric_decay", "params": [1.0, 0.5, 0.5]},
        "n_grid": [10, 100],
        "epsilon": 0.05,
    })
    code, out, _ = run_cli(capsys, "limit", "--config", cfg)
    assert code == 0
    rows = json.loads(out)["rows"]
    assert all(r["limit_source"] == "recipe" for r in rows)
    assert rows[0]["cut_index"] >= 1
    assert rows[0]["epsilon"] == 0.05


def test_simulate_requires_seed(tmp_path, capsys):
    cfg = write_config(tmp_path, {**BASE_GAME, "trials": 1000})
    code, out, err = run_cli(capsys, "simulate", "--config", cfg)
    assert code == 1
    assert "config.seed" in err
    code, out, err = run_cli(capsys, "simulate", "--config", cfg, "--seed", "7")
    assert code == 0


def test_simulate_flags_override_config(tmp_path, capsys):
    cfg = write_config(tmp_path, {**BASE_GAME, "trials": 1000, "seed": 1})
    code, out, _ = run_cli(capsys, "simulate", "--config", cfg, "--seed", "2", "--trials", "500")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert row["seed"] == 2
    assert row["trials"] == 500


def test_simulate_is_reproducible_and_can_compare(tmp_path, capsys):
    cfg = write_config(tmp_path, {
        **BASE_GAME, "trials": 20000, "seed": 12, "workers": 3, "reference": "exact",
    })
    code, first, _ = run_cli(capsys, "simulate", "--config", cfg)
    assert code == 0
    code, second, _ = run_cli(capsys, "simulate", "--config", cfg)
    assert first == second
    row = json.loads(first)["rows"][0]
    assert row["rng_id"] == "philox-keyed-blocks-v1"
    assert row["distance"] is not None
    assert row["reference"].startswith("exact")


def test_sweep_emits_cartesian_product(tmp_path, capsys):
    cfg = write_config(tmp_path, {"cost_values": [0.5, 1.0], "n_values": [4, 8, 16]})
    code, out, _ = run_cli(capsys, "sweep", "--config", cfg)
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 6
    assert [(r["cost"], r["n"]) for r in rows] == [
        (0.5, 4), (0.5, 8), (0.5, 16), (1.0, 4), (1.0, 8), (1.0, 16)]
    # distance to the limiting Poisson law shrinks along n for each cost
    for c in (0.5, 1.0):
        ds = [r["distance"] for r in rows if r["cost"] == c]
        assert ds == sorted(ds, reverse=True)


def test_out_flag_writes_file(tmp_path, capsys):
    cfg = write_config(tmp_path, {**BASE_GAME})
    target = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "equilibria", "--config", cfg, "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["command"] == "equilibria"


def test_schema_flag_documents_columns(capsys):
    code, out, _ = run_cli(capsys, "distance", "--schema")
    assert code == 0
    for col in ("schema_version", "n", "distance", "uncertainty", "reference"):
        assert col in out


def test_missing_config_flag(capsys):
    code, _, err = run_cli(capsys, "limit")
    assert code == 2
    assert "--config" in err


def test_unreadable_config(capsys, tmp_path):
    code, _, err = run_cli(capsys, "limit", "--config", str(tmp_path / "absent.json"))
    assert code == 1
    assert "cannot read config" in err


def test_malformed_json_config(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "limit", "--config", str(path))
    assert code == 1
    assert "not valid JSON" in err


def test_field_level_validation_messages(tmp_path, capsys):
    cases = [
        ({}, "config.cost_spec: required"),
        ({"cost_spec": {"kind": "nope"}}, "cost_spec.kind"),
        ({"cost_spec": {"kind": "homogeneous", "n": 3}}, "cost_spec.cost: required"),
        ({"cost_spec": {"kind": "homogeneous", "cost": 1.0, "n": 3}}, "config.n_grid: required"),
        ({"cost_spec": {"kind": "homogeneous", "cost": 1.0, "n": 3},
          "n_grid": [50, 10]}, "config.n_grid"),
    ]
    for payload, fragment in cases:
        cfg = write_config(tmp_path, payload)
        code, _, err = run_cli(capsys, "limit", "--config", cfg)
        assert code == 1
        assert fragment in err


def test_enumeration_cap_is_a_config_error(tmp_path, capsys):
    cfg = write_config(tmp_path, {
        "cost_spec": {"kind": "homogeneous", "cost": 1.0, "n": 25},
        "enumerate_supports": True,
    })
    code, _, err = run_cli(capsys, "equilibria", "--config", cfg)
    assert code == 1
    assert "enumerate_supports" in err


def test_supports_key_requests_specific_supports(tmp_path, capsys):
    cfg = write_config(tmp_path, {**BASE_GAME, "supports": [[0, 1], [1, 2]]})
    code, out, _ = run_cli(capsys, "equilibria", "--config", cfg)
    assert code == 0
    labels = [r["label"] for r in json.loads(out)["rows"]]
    assert "mixed:0;1" in labels and "mixed:1;2" in labels
