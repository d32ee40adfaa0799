"""Command-line surface for the random-access game toolkit.

Subcommands orchestrate the library and emit machine-readable tables:

  equilibria  pure equilibria, requested mixed supports, and the fully mixed
              equilibrium of one game, each with verification results
  limit       the family's limiting arrival law plus convergence diagnostics
              along an n-grid
  distance    variational distance between the exact equilibrium arrival law
              and a reference law, per grid point
  simulate    seeded Monte Carlo at an equilibrium (or a given profile)
  sweep       cartesian product of homogeneous cost values and player counts,
              long-format rows for plotting

Every command reads a JSON config file; the --seed/--trials/--format/--out
flags override the matching config fields.  Outputs are JSON or CSV with the
same numeric values to full precision: every float is rendered with its
shortest round-trip representation in both formats.  Exit status is 0 unless
the config or an IO operation fails; mathematical outcomes such as a
nonexistent equilibrium are reported as data.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from .asymptotics import arrival_mean_sequence, homogeneous_limit, limit_recipe, unit_tail_limit
from .distribution import (
    DEFAULT_TAIL_THRESHOLD,
    MixtureLimit,
    Pmf,
    mixture_pmf,
    poisson_binomial,
    poisson_pmf,
    variational_distance,
)
from .equilibrium import (
    MAX_ENUMERATION_PLAYERS,
    enumerate_mixed_equilibria,
    fully_mixed_equilibrium,
    mixed_equilibrium,
    pure_equilibria,
    verify_equilibrium,
)
from .game import CostProfile, CostSpec, StrategyProfile
from .montecarlo import empirical_distance, simulate

SCHEMA_VERSION = 1

__all__ = ["main", "SCHEMA_VERSION"]


class ConfigError(Exception):
    """Config rejected; the message names the offending field."""


# ---------------------------------------------------------------------------
# config access with field-level error messages

def _require(cfg: dict, key: str, path: str) -> Any:
    if key not in cfg:
        raise ConfigError(f"{path}.{key}: required")
    return cfg[key]


def _get_number(cfg: dict, key: str, path: str, *, required: bool = False, default=None) -> float | None:
    if key not in cfg:
        if required:
            raise ConfigError(f"{path}.{key}: required")
        return default
    v = cfg[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(f"{path}.{key}: expected a number, got {v!r}")
    return float(v)


def _get_int(cfg: dict, key: str, path: str, *, required: bool = False, default=None) -> int | None:
    if key not in cfg:
        if required:
            raise ConfigError(f"{path}.{key}: required")
        return default
    v = cfg[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise ConfigError(f"{path}.{key}: expected an integer, got {v!r}")
    return v


def _get_bool(cfg: dict, key: str, path: str, *, default: bool = False) -> bool:
    v = cfg.get(key, default)
    if not isinstance(v, bool):
        raise ConfigError(f"{path}.{key}: expected true or false, got {v!r}")
    return v


def _get_str(cfg: dict, key: str, path: str, *, required: bool = False, default=None, choices=None) -> str | None:
    if key not in cfg:
        if required:
            raise ConfigError(f"{path}.{key}: required")
        return default
    v = cfg[key]
    if not isinstance(v, str):
        raise ConfigError(f"{path}.{key}: expected a string, got {v!r}")
    if choices is not None and v not in choices:
        raise ConfigError(f"{path}.{key}: expected one of {sorted(choices)}, got {v!r}")
    return v


def _num_list(cfg: dict, key: str, path: str, *, required: bool = False, min_len: int = 1) -> list[float] | None:
    if key not in cfg:
        if required:
            raise ConfigError(f"{path}.{key}: required")
        return None
    v = cfg[key]
    if not isinstance(v, list) or len(v) < min_len:
        raise ConfigError(f"{path}.{key}: expected a list of at least {min_len} numbers")
    out = []
    for k, x in enumerate(v):
        if isinstance(x, bool) or not isinstance(x, (int, float)):
            raise ConfigError(f"{path}.{key}[{k}]: expected a number, got {x!r}")
        out.append(float(x))
    return out


def _int_list(cfg: dict, key: str, path: str, *, required: bool = False, min_len: int = 1) -> list[int] | None:
    if key not in cfg:
        if required:
            raise ConfigError(f"{path}.{key}: required")
        return None
    v = cfg[key]
    if not isinstance(v, list) or len(v) < min_len:
        raise ConfigError(f"{path}.{key}: expected a list of at least {min_len} integers")
    out = []
    for k, x in enumerate(v):
        if isinstance(x, bool) or not isinstance(x, int):
            raise ConfigError(f"{path}.{key}[{k}]: expected an integer, got {x!r}")
        out.append(x)
    return out


def _parse_cost_spec(cfg: dict, path: str = "cost_spec") -> CostSpec:
    obj = _require(cfg, "cost_spec", "config") if path == "cost_spec" else cfg
    if not isinstance(obj, dict):
        raise ConfigError(f"{path}: expected an object")
    kind = _get_str(obj, "kind", path, required=True,
                    choices={"explicit", "homogeneous", "unit_tail", "sequence"})
    try:
        if kind == "explicit":
            return CostSpec.explicit(_num_list(obj, "costs", path, required=True, min_len=2))
        if kind == "homogeneous":
            return CostSpec.homogeneous(
                _get_number(obj, "cost", path, required=True),
                _get_int(obj, "n", path),
            )
        if kind == "unit_tail":
            return CostSpec.unit_tail(
                _num_list(obj, "head_costs", path, required=True),
                _get_int(obj, "n", path),
            )
        return CostSpec.sequence(
            _get_str(obj, "rule", path, required=True),
            _num_list(obj, "params", path, required=True),
            _get_int(obj, "n", path),
        )
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from exc


def _built_profile(spec: CostSpec, path: str = "cost_spec") -> CostProfile:
    try:
        return spec.build()
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from exc


def _grid(cfg: dict) -> tuple[int, ...]:
    grid = _int_list(cfg, "n_grid", "config", required=True)
    if any(n < 2 for n in grid) or any(b <= a for a, b in zip(grid, grid[1:])):
        raise ConfigError("config.n_grid: expected strictly increasing integers >= 2")
    return tuple(grid)


# ---------------------------------------------------------------------------
# output model: every command emits one table

def _join_floats(xs) -> str:
    return ";".join(repr(float(x)) for x in xs)


def _join_ints(xs) -> str:
    return ";".join(str(int(x)) for x in xs)


def _csv_cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _render(command: str, columns: Sequence[str], rows: list[dict], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(row.get(col)) for col in columns])
        return buf.getvalue()
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "columns": list(columns),
        "rows": [{col: row.get(col) for col in columns} for row in rows],
    }
    return json.dumps(doc, indent=2) + "\n"


def _base_row(command: str) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command}


# ---------------------------------------------------------------------------
# column documentation, printed by --schema

_COMMON_COLS = [
    ("schema_version", "output schema version (currently 1)"),
    ("command", "subcommand that produced the row"),
]

SCHEMAS: dict[str, list[tuple[str, str]]] = {
    "equilibria": _COMMON_COLS + [
        ("label", "pure:<k>, mixed:<i;j;...>, or fully-mixed"),
        ("exists", "whether the candidate is a Nash equilibrium"),
        ("kind", "profile classification: pure, mixed, or fully-mixed"),
        ("support", "semicolon-joined indices of transmitting nodes"),
        ("probs", "semicolon-joined per-node transmission probabilities"),
        ("support_idle_prob", "common factor of a mixed candidate; equals the probability the whole support backs off"),
        ("max_deviation_gain", "largest single-node expected-utility gain from deviating"),
        ("boundary", "true when nonexistence was decided within the strictness margin"),
        ("violations", "semicolon-joined 'node=<i> <reason>' entries for failed conditions"),
    ],
    "limit": _COMMON_COLS + [
        ("n", "grid point (player count)"),
        ("mean_arrivals", "expected total transmissions at the fully mixed equilibrium"),
        ("idle_prob", "probability that no node transmits at that equilibrium"),
        ("geo_mean", "geometric mean of the cost ratios"),
        ("min_ratio", "smallest cost ratio"),
        ("fmne_exists", "whether the fully mixed equilibrium exists at this n"),
        ("verdict", "convergence verdict over the grid: converges, diverges, or inconclusive"),
        ("limit_source", "closed_form, recipe, or none"),
        ("poisson_mean", "Poisson mean of the limiting mixture"),
        ("bernoullis", "semicolon-joined Bernoulli success probabilities of the mixture"),
        ("cut_index", "1-based index of the first node folded into the Poisson part (recipe only)"),
        ("epsilon", "accuracy budget the recipe cut was chosen for (recipe only)"),
        ("note", "diagnostic message when no limit could be produced"),
    ],
    "distance": _COMMON_COLS + [
        ("n", "player count of the exact arrival law"),
        ("distance", "variational distance (sum of absolute pmf differences, range [0, 2])"),
        ("uncertainty", "combined truncated tail mass of both laws"),
        ("reference", "description of the reference law"),
        ("note", "diagnostic message when the exact law is unavailable"),
    ],
    "simulate": _COMMON_COLS + [
        ("n", "player count"),
        ("trials", "number of simulated slots"),
        ("seed", "root seed of the keyed counter-based generator"),
        ("rng_id", "generator/stream-layout identifier"),
        ("workers", "worker threads used (results are identical for any count)"),
        ("idle_rate", "fraction of slots with no transmission"),
        ("throughput", "fraction of slots with exactly one transmission"),
        ("collision_rate", "fraction of slots with two or more transmissions"),
        ("empirical_pmf", "semicolon-joined empirical arrival distribution"),
        ("mean_utilities", "semicolon-joined per-node empirical mean utilities"),
        ("distance", "variational distance to the reference law, if one was requested"),
        ("uncertainty", "tail mass of the reference law (the empirical law has none)"),
        ("reference", "description of the reference law, if any"),
        ("note", "diagnostic message when nothing could be simulated"),
    ],
    "sweep": _COMMON_COLS + [
        ("cost", "homogeneous failure cost"),
        ("n", "player count"),
        ("exists", "whether the fully mixed equilibrium exists"),
        ("prob", "per-node transmission probability at that equilibrium"),
        ("mean_arrivals", "expected total transmissions"),
        ("idle_prob", "probability that no node transmits"),
        ("distance", "variational distance between the exact law and the limiting Poisson law"),
        ("uncertainty", "combined truncated tail mass of both laws"),
    ],
}


def _print_schema(command: str) -> None:
    print(f"{command} output columns (schema_version {SCHEMA_VERSION}):")
    for name, desc in SCHEMAS[command]:
        print(f"  {name:18s} {desc}")
    print("Lists are semicolon-joined; floats use their shortest round-trip form in both JSON and CSV.")


# ---------------------------------------------------------------------------
# reference-law helpers shared by distance and simulate

def _describe_mixture(limit: MixtureLimit) -> str:
    if limit.bernoullis:
        return f"mixture(poisson={limit.poisson_mean!r},bernoullis={_join_floats(limit.bernoullis)})"
    return f"poisson({limit.poisson_mean!r})"


def _family_limit(spec: CostSpec, cfg: dict, n_for_recipe: int) -> tuple[MixtureLimit | None, str, str | None]:
    """Limiting law of a cost family: (limit, source, note)."""
    epsilon = _get_number(cfg, "epsilon", "config", default=0.05)
    if epsilon <= 0:
        raise ConfigError("config.epsilon: expected a positive number")
    try:
        if spec.kind == "homogeneous":
            return homogeneous_limit(spec.cost), "closed_form", None
        if spec.kind == "unit_tail":
            return unit_tail_limit(spec.head_costs), "closed_form", None
        recipe = limit_recipe(spec, epsilon, n_for_recipe)
        return recipe.mixture, "recipe", None
    except ValueError as exc:
        return None, "none", str(exc)


def _reference_law(cfg: dict, spec: CostSpec, n_for_recipe: int,
                   tail_threshold: float) -> tuple[Pmf | None, str, str | None]:
    """Reference pmf for distance rows: (pmf, description, note)."""
    kind = _get_str(cfg, "reference", "config", default="limit",
                    choices={"limit", "poisson", "mixture"})
    if kind == "poisson":
        mean = _get_number(cfg, "reference_mean", "config", required=True)
        if mean < 0:
            raise ConfigError("config.reference_mean: expected a nonnegative number")
        return poisson_pmf(mean, tail_threshold), f"poisson({mean!r})", None
    if kind == "mixture":
        mean = _get_number(cfg, "reference_mean", "config", required=True)
        bern = _num_list(cfg, "reference_bernoullis", "config", required=True)
        try:
            limit = MixtureLimit(mean, tuple(bern))
        except ValueError as exc:
            raise ConfigError(f"config.reference_bernoullis: {exc}") from exc
        return mixture_pmf(limit, tail_threshold), _describe_mixture(limit), None
    limit, _, note = _family_limit(spec, cfg, n_for_recipe)
    if limit is None:
        return None, "none", note
    return mixture_pmf(limit, tail_threshold), _describe_mixture(limit), None


def _tail_threshold(cfg: dict) -> float:
    thr = _get_number(cfg, "tail_threshold", "config", default=DEFAULT_TAIL_THRESHOLD)
    if not 0 < thr < 1:
        raise ConfigError("config.tail_threshold: expected a number in (0, 1)")
    return thr


# ---------------------------------------------------------------------------
# subcommands

def _report_row(command: str, label: str, report) -> dict:
    row = _base_row(command)
    profile = report.profile
    row.update(
        label=label,
        exists=report.exists,
        kind=profile.kind if profile is not None else None,
        support=_join_ints(sorted(profile.support)) if profile is not None
                else _join_ints(report.support or ()),
        probs=_join_floats(profile.probs) if profile is not None else None,
        support_idle_prob=report.support_idle_prob,
        max_deviation_gain=None if report.max_deviation_gain != report.max_deviation_gain
                           else report.max_deviation_gain,
        boundary=report.boundary,
        violations=";".join(f"node={i} {msg}" for i, msg in report.violated_conditions),
    )
    return row


def cmd_equilibria(cfg: dict) -> tuple[str, list[dict]]:
    spec = _parse_cost_spec(cfg)
    costs = _built_profile(spec)
    tol = _get_number(cfg, "tolerance", "config", default=None)
    kwargs = {} if tol is None else {"tol": tol}

    rows = []
    for k, profile in enumerate(pure_equilibria(costs)):
        rows.append(_report_row("equilibria", f"pure:{k}", verify_equilibrium(profile, costs, **kwargs)))

    supports = cfg.get("supports")
    if supports is not None:
        if not isinstance(supports, list):
            raise ConfigError("config.supports: expected a list of index lists")
        for k, sup in enumerate(supports):
            if not isinstance(sup, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in sup):
                raise ConfigError(f"config.supports[{k}]: expected a list of integers")
            try:
                report = mixed_equilibrium(costs, sup, **kwargs)
            except (ValueError, IndexError) as exc:
                raise ConfigError(f"config.supports[{k}]: {exc}") from exc
            rows.append(_report_row("equilibria", "mixed:" + _join_ints(sorted(sup)), report))

    if _get_bool(cfg, "enumerate_supports", "config"):
        if costs.n > MAX_ENUMERATION_PLAYERS:
            raise ConfigError(
                f"config.enumerate_supports: enumeration needs n <= {MAX_ENUMERATION_PLAYERS}, got {costs.n}")
        for report in enumerate_mixed_equilibria(costs, **kwargs):
            if len(report.support) == costs.n:
                continue  # reported as the fully-mixed row below
            rows.append(_report_row("equilibria", "mixed:" + _join_ints(report.support), report))

    rows.append(_report_row("equilibria", "fully-mixed", fully_mixed_equilibrium(costs, **kwargs)))
    return "equilibria", rows


def cmd_limit(cfg: dict) -> tuple[str, list[dict]]:
    spec = _parse_cost_spec(cfg)
    grid = _grid(cfg)
    diag = arrival_mean_sequence(spec, grid)
    limit, source, note = _family_limit(spec, cfg, grid[-1])

    recipe = None
    if source == "recipe":
        recipe = limit_recipe(spec, _get_number(cfg, "epsilon", "config", default=0.05), grid[-1])

    rows = []
    for k, n in enumerate(diag.n_grid):
        row = _base_row("limit")
        row.update(
            n=n,
            mean_arrivals=_none_if_nan(diag.mean_arrivals[k]),
            idle_prob=_none_if_nan(diag.idle_probs[k]),
            geo_mean=diag.geo_means[k],
            min_ratio=diag.min_ratios[k],
            fmne_exists=diag.fmne_exists[k],
            verdict=diag.verdict,
            limit_source=source,
            poisson_mean=None if limit is None else limit.poisson_mean,
            bernoullis=None if limit is None else _join_floats(limit.bernoullis),
            cut_index=None if recipe is None else recipe.cut_index,
            epsilon=None if recipe is None else recipe.epsilon,
            note=note,
        )
        rows.append(row)
    return "limit", rows


def cmd_distance(cfg: dict) -> tuple[str, list[dict]]:
    spec = _parse_cost_spec(cfg)
    grid = _grid(cfg)
    thr = _tail_threshold(cfg)
    reference, description, note = _reference_law(cfg, spec, grid[-1], thr)

    rows = []
    for n in grid:
        row = _base_row("distance")
        row.update(n=n, distance=None, uncertainty=None, reference=description, note=note)
        if reference is not None:
            try:
                costs = CostProfile(spec.costs_at(n))
            except ValueError as exc:
                raise ConfigError(f"config.n_grid: n={n}: {exc}") from exc
            report = fully_mixed_equilibrium(costs)
            if report.exists:
                dist = variational_distance(poisson_binomial(report.profile.probs), reference)
                row.update(distance=dist.value, uncertainty=dist.uncertainty)
            else:
                row.update(note="no fully mixed equilibrium at this n")
        rows.append(row)
    return "distance", rows


def cmd_simulate(cfg: dict) -> tuple[str, list[dict]]:
    spec = _parse_cost_spec(cfg)
    costs = _built_profile(spec)
    seed = _get_int(cfg, "seed", "config", required=True)
    trials = _get_int(cfg, "trials", "config", required=True)
    workers = _get_int(cfg, "workers", "config", default=1)
    thr = _tail_threshold(cfg)

    probs = _num_list(cfg, "probs", "config")
    row = _base_row("simulate")
    row.update(n=costs.n, trials=trials, seed=seed, workers=workers,
               rng_id=None, idle_rate=None, throughput=None, collision_rate=None,
               empirical_pmf=None, mean_utilities=None,
               distance=None, uncertainty=None, reference=None, note=None)

    if probs is not None:
        if len(probs) != costs.n:
            raise ConfigError(f"config.probs: expected {costs.n} entries, got {len(probs)}")
        try:
            strategy = StrategyProfile(tuple(probs))
        except ValueError as exc:
            raise ConfigError(f"config.probs: {exc}") from exc
    else:
        report = fully_mixed_equilibrium(costs)
        if not report.exists:
            row.update(note="no fully mixed equilibrium; nothing simulated")
            return "simulate", [row]
        strategy = report.profile

    try:
        sim = simulate(strategy, costs, trials=trials, seed=seed, workers=workers)
    except ValueError as exc:
        raise ConfigError(f"config: {exc}") from exc
    row.update(rng_id=sim.rng_id, idle_rate=sim.idle_rate, throughput=sim.throughput,
               collision_rate=sim.collision_rate,
               empirical_pmf=_join_floats(sim.empirical_pmf.mass),
               mean_utilities=_join_floats(sim.mean_utilities))

    ref_kind = _get_str(cfg, "reference", "config", default="none",
                        choices={"none", "exact", "limit"})
    if ref_kind == "exact":
        reference = poisson_binomial(strategy.probs)
        description = f"exact(n={costs.n})"
    elif ref_kind == "limit":
        limit, _, note = _family_limit(spec, cfg, costs.n)
        if limit is None:
            row.update(note=note)
            return "simulate", [row]
        reference = mixture_pmf(limit, thr)
        description = _describe_mixture(limit)
    else:
        return "simulate", [row]
    dist = empirical_distance(sim, reference)
    row.update(distance=dist.value, uncertainty=dist.uncertainty, reference=description)
    return "simulate", [row]


def cmd_sweep(cfg: dict) -> tuple[str, list[dict]]:
    costs_axis = _num_list(cfg, "cost_values", "config", required=True)
    n_axis = _int_list(cfg, "n_values", "config", required=True)
    if any(n < 2 for n in n_axis):
        raise ConfigError("config.n_values: every entry must be >= 2")
    if any(c <= 0 for c in costs_axis):
        raise ConfigError("config.cost_values: every entry must be positive")
    thr = _tail_threshold(cfg)

    rows = []
    for c in costs_axis:
        limit = homogeneous_limit(c)
        reference = poisson_pmf(limit.poisson_mean, thr)
        for n in n_axis:
            row = _base_row("sweep")
            report = fully_mixed_equilibrium(CostProfile((c,) * n))
            row.update(cost=c, n=n, exists=report.exists, prob=None,
                       mean_arrivals=None, idle_prob=None, distance=None, uncertainty=None)
            if report.exists:
                probs = report.profile.probs
                pmf = poisson_binomial(probs)
                dist = variational_distance(pmf, reference)
                row.update(prob=probs[0], mean_arrivals=pmf.mean(), idle_prob=float(pmf[0]),
                           distance=dist.value, uncertainty=dist.uncertainty)
            rows.append(row)
    return "sweep", rows


def _none_if_nan(x: float) -> float | None:
    return None if x != x else x


_COMMANDS = {
    "equilibria": cmd_equilibria,
    "limit": cmd_limit,
    "distance": cmd_distance,
    "simulate": cmd_simulate,
    "sweep": cmd_sweep,
}


# ---------------------------------------------------------------------------
# entry point

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="accessgame",
        description="Equilibria and arrival-law analysis of the selfish random-access game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name, help=f"run the {name} analysis")
        p.add_argument("--config", help="path to a JSON config file")
        p.add_argument("--seed", type=int, help="override config seed")
        p.add_argument("--trials", type=int, help="override config trial count")
        p.add_argument("--format", choices=["json", "csv"], help="override output format")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--schema", action="store_true", help="describe output columns and exit")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.schema:
        _print_schema(args.command)
        return 0
    if args.config is None:
        print("error: --config is required (or use --schema)", file=sys.stderr)
        return 2

    try:
        with open(args.config, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print(f"error: config is not valid JSON: {exc}", file=sys.stderr)
        return 1
    if not isinstance(cfg, dict):
        print("error: config: expected a JSON object at the top level", file=sys.stderr)
        return 1

    if args.seed is not None:
        cfg["seed"] = args.seed
    if args.trials is not None:
        cfg["trials"] = args.trials
    fmt = args.format or cfg.get("format", "json")
    if fmt not in ("json", "csv"):
        print(f"error: config.format: expected json or csv, got {fmt!r}", file=sys.stderr)
        return 1
    out_path = args.out or cfg.get("out")
    if out_path is not None and not isinstance(out_path, str):
        print("error: config.out: expected a path string", file=sys.stderr)
        return 1

    try:
        command, rows = _COMMANDS[args.command](cfg)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    text = _render(command, [name for name, _ in SCHEMAS[command]], rows, fmt)
    if out_path is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
