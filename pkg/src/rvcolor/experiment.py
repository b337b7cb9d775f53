"""Batch sweeps comparing achieved colorings with the closed-form bounds.

Config files are flat ``key = value`` text; ``#`` starts a comment.
Recognised keys::

    families     = caro, random, classic
    caro_delta   = 3..6          # ranges 'a..b' or comma lists
    caro_m       = 1..4
    random_n     = 290
    random_delta = 17
    classic      = petersen, cycle:6, complete_bipartite:3:3
    trials       = 10            # per-trial seed = base_seed + trial index
    base_seed    = 0
    strategies   = auto          # auto, high, split, tree, maxdeg
    allow_unverified = false
"""
from __future__ import annotations

import csv
import io
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, TextIO

from .bounds import h_family_lower_bound
from .colorizer import STRATEGIES, run_strategy
from .errors import RVCError, StrategyInapplicable
from .generators import caro_chain, classic, random_min_degree
from .graph import Graph, min_degree

log = logging.getLogger(__name__)

COLUMNS = (
    "family",
    "n",
    "delta",
    "seed",
    "strategy",
    "regime",
    "s_size",
    "d1_size",
    "fringe_palette",
    "resamples",
    "escalations",
    "colors_used",
    "theorem_bound",
    "lower_bound",
    "bound_met",
    "verified",
    "wall_millis",
)
FAMILIES = ("caro", "random", "classic")


class UsageError(RVCError):
    """Malformed experiment configuration."""


@dataclass
class ExperimentConfig:
    families: list[str] = field(default_factory=list)
    caro_delta: list[int] = field(default_factory=list)
    caro_m: list[int] = field(default_factory=list)
    random_n: list[int] = field(default_factory=list)
    random_delta: list[int] = field(default_factory=list)
    classic: list[str] = field(default_factory=list)
    trials: int = 1
    base_seed: int = 0
    strategies: list[str] = field(default_factory=lambda: ["auto"])
    allow_unverified: bool = False


def _int_list(key: str, value: str) -> list[int]:
    out = []
    try:
        for part in filter(None, (p.strip() for p in value.split(","))):
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"{key}: expected integers or ranges, got {value!r}") from None
    return out


def _str_list(value: str) -> list[str]:
    return [p.strip() for p in value.split(",") if p.strip()]


def _bool(key: str, value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise UsageError(f"{key}: expected a boolean, got {value!r}")


def parse_assignments(lines: Iterable[str]) -> dict[str, str]:
    values = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"line {lineno}: expected 'key = value'")
        key, value = line.split("=", 1)
        values[key.strip()] = value.strip()
    return values


def build_config(values: dict[str, str]) -> ExperimentConfig:
    cfg = ExperimentConfig()
    for key, value in values.items():
        if key in ("caro_delta", "caro_m", "random_n", "random_delta"):
            setattr(cfg, key, _int_list(key, value))
        elif key in ("families", "classic", "strategies"):
            setattr(cfg, key, _str_list(value))
        elif key in ("trials", "base_seed"):
            try:
                setattr(cfg, key, int(value))
            except ValueError:
                raise UsageError(f"{key}: expected an integer, got {value!r}") from None
        elif key == "allow_unverified":
            cfg.allow_unverified = _bool(key, value)
        else:
            raise UsageError(f"unknown config key {key!r}")
    unknown = set(cfg.families) - set(FAMILIES)
    if unknown:
        raise UsageError(f"unknown families {sorted(unknown)}")
    bad = set(cfg.strategies) - set(STRATEGIES) - {"auto"}
    if bad:
        raise UsageError(f"unknown strategies {sorted(bad)}")
    if cfg.trials < 0:
        raise UsageError("trials must be non-negative")
    return cfg


def load_config(text: str, overrides: Iterable[str] = ()) -> ExperimentConfig:
    values = parse_assignments(text.splitlines())
    values.update(parse_assignments(overrides))
    return build_config(values)


@dataclass(frozen=True)
class Task:
    family: str
    params: tuple
    seed: int
    strategy: str


def _tasks(cfg: ExperimentConfig) -> list[Task]:
    tasks = []
    for family in cfg.families:
        if family == "caro":
            instances = [(d, m) for d in cfg.caro_delta for m in cfg.caro_m]
        elif family == "random":
            instances = [(n, d) for n in cfg.random_n for d in cfg.random_delta]
            for n, d in instances:
                if not 2 <= d < n:
                    raise UsageError(f"random family needs 2 <= delta < n, got n={n}, delta={d}")
        else:
            instances = [tuple(item.split(":")) for item in cfg.classic]
        for params in instances:
            for trial in range(cfg.trials):
                for strategy in cfg.strategies:
                    tasks.append(Task(family, params, cfg.base_seed + trial, strategy))
    return tasks


def _instance(task: Task) -> tuple[Graph, int]:
    if task.family == "caro":
        delta, m = task.params
        return caro_chain(delta, m), delta
    if task.family == "random":
        n, delta = task.params
        return random_min_degree(n, delta, task.seed), delta
    name, *args = task.params
    try:
        g = classic(name, *(int(a) for a in args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return g, min_degree(g)


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def run_task(task: Task) -> dict | None:
    g, delta = _instance(task)
    started = time.perf_counter()
    try:
        report = run_strategy(g, task.strategy, delta, task.seed)
    except StrategyInapplicable as exc:
        log.info("skipping %s on %s%s: %s", task.strategy, task.family, task.params, exc)
        return None
    elapsed = round((time.perf_counter() - started) * 1000)
    lower = ""
    if task.family == "caro":
        lower = _fmt(h_family_lower_bound(g.n, delta))
    return {
        "family": task.family,
        "n": g.n,
        "delta": delta,
        "seed": task.seed,
        "strategy": report.strategy if task.strategy != "auto" else f"auto:{report.strategy}",
        "regime": report.regime.tag,
        "s_size": report.s_size,
        "d1_size": report.d1_size,
        "fringe_palette": report.fringe_palette,
        "resamples": report.resample_count,
        "escalations": report.escalations,
        "colors_used": report.colors_used,
        "theorem_bound": _fmt(report.bound_value),
        "lower_bound": lower,
        "bound_met": str(report.bound_met).lower(),
        "verified": str(report.verified).lower(),
        "wall_millis": elapsed,
    }


@dataclass
class ExperimentResult:
    rows: list[dict]
    unverified: int


def run_experiment(cfg: ExperimentConfig, out: TextIO, threads: int = 1) -> ExperimentResult:
    """Write one CSV row per (instance, trial, strategy), in task order."""
    tasks = _tasks(cfg)
    writer = csv.DictWriter(out, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_task, tasks))
    else:
        results = [run_task(t) for t in tasks]
    rows = []
    unverified = 0
    for row in results:
        if row is None:
            continue
        if row["verified"] != "true":
            unverified += 1
            if not cfg.allow_unverified:
                log.error("dropping unverified row: %s", row)
                continue
        writer.writerow(row)
        rows.append(row)
    return ExperimentResult(rows, unverified)


def run_to_string(cfg: ExperimentConfig, threads: int = 1) -> str:
    buffer = io.StringIO()
    run_experiment(cfg, buffer, threads)
    return buffer.getvalue()


def strip_timing(csv_text: str) -> str:
    """CSV text with the wall_millis column removed, for reproducibility checks."""
    reader = csv.DictReader(io.StringIO(csv_text))
    buffer = io.StringIO()
    columns = [c for c in COLUMNS if c != "wall_millis"]
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in reader:
        writer.writerow(row)
    return buffer.getvalue()
