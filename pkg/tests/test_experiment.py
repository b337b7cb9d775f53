import csv
import io

import pytest

from rvcolor.experiment import COLUMNS, UsageError, load_config, run_experiment, run_to_string, strip_timing
from rvcolor.generators import caro_chain
from rvcolor.graph import diameter


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_empty_family_list_gives_header_only():
    text = run_to_string(load_config(""))
    assert text == ",".join(COLUMNS) + "\n"


def test_config_parsing():
    cfg = load_config(
        "# sweep\nfamilies = caro, random\ncaro_delta = 3..5\ncaro_m = 1, 3\ntrials = 2\n",
        ["base_seed = 7", "caro_m = 2"],
    )
    assert cfg.families == ["caro", "random"]
    assert cfg.caro_delta == [3, 4, 5]
    assert cfg.caro_m == [2]
    assert (cfg.trials, cfg.base_seed) == (2, 7)


@pytest.mark.parametrize(
    "text",
    ["families caro", "nonsense = 1", "families = planar", "trials = many", "caro_m = 1..x", "strategies = best"],
)
def test_malformed_config(text):
    with pytest.raises(UsageError):
        load_config(text)


def test_random_grid_must_be_feasible():
    cfg = load_config("families = random\nrandom_n = 10\nrandom_delta = 12")
    with pytest.raises(UsageError):
        run_to_string(cfg)


def test_caro_grid_is_bracketed():
    cfg = load_config("families = caro\ncaro_delta = 3..6\ncaro_m = 1..4")
    rows = _rows(run_to_string(cfg))
    assert len(rows) == 16
    for row in rows:
        assert row["verified"] == "true"
        assert float(row["lower_bound"]) <= int(row["colors_used"]) <= float(row["theorem_bound"])
        g = caro_chain(int(row["delta"]), (int(row["n"]) - 2) // (int(row["delta"]) + 1) - 2)
        assert int(row["colors_used"]) >= max(1, diameter(g) - 1)


def test_trial_seeds_and_lower_bound_column():
    cfg = load_config("families = random, classic\nrandom_n = 40\nrandom_delta = 5\nclassic = petersen\ntrials = 3\nbase_seed = 10")
    rows = _rows(run_to_string(cfg))
    assert [r["seed"] for r in rows] == ["10", "11", "12", "10", "11", "12"]
    assert all(r["lower_bound"] == "" for r in rows)
    assert all(r["verified"] == "true" for r in rows)


def test_inapplicable_strategies_emit_no_row():
    cfg = load_config("families = classic\nclassic = cycle:12\nstrategies = high, tree")
    rows = _rows(run_to_string(cfg))
    assert [r["strategy"] for r in rows] == ["tree"]


def test_unverified_rows_are_dropped(monkeypatch):
    import rvcolor.experiment as experiment

    real = experiment.run_strategy

    def unverified(*args, **kwargs):
        from dataclasses import replace

        return replace(real(*args, **kwargs), verified=False)

    monkeypatch.setattr(experiment, "run_strategy", unverified)
    cfg = load_config("families = classic\nclassic = petersen")
    out = io.StringIO()
    result = run_experiment(cfg, out)
    assert result.unverified == 1 and result.rows == []
    cfg.allow_unverified = True
    out = io.StringIO()
    result = run_experiment(cfg, out)
    assert len(result.rows) == 1 and result.rows[0]["verified"] == "false"


def test_reruns_and_threads_reproduce_the_csv():
    cfg = load_config("families = caro, random\ncaro_delta = 3, 7\ncaro_m = 0, 2\nrandom_n = 50\nrandom_delta = 6\ntrials = 3")
    first = run_to_string(cfg)
    again = run_to_string(cfg)
    threaded = run_to_string(cfg, threads=3)
    assert strip_timing(first) == strip_timing(again) == strip_timing(threaded)
    assert first.splitlines()[0] == ",".join(COLUMNS)
