"""Batch experiment runner: solve, compare, cone queries, and property suites."""

from __future__ import annotations

import argparse
import csv
import logging
import os
import sys

import numpy as np

from . import sets
from .analysis import classify_stationarity, detect_apocalypse
from .core import Objective, Point, constant, least_squares, quartic
from .sets import (
    FeasibleSet,
    InfeasiblePointError,
    in_proximal_normal_witness,
    projected_translation_check,
    proximal_normal_witness,
)
from .solver import (
    AverageRule,
    BacktrackError,
    MaxRule,
    SolverConfig,
    Termination,
    Trace,
    p2gd,
    pgd,
)

_log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_SOLVER = 3
EXIT_SUITE = 4

_FLOAT_FMT = "%.17g"

_DEFAULTS = {
    "alpha_min": "1e-4",
    "alpha_max": "1.0",
    "beta": "0.5",
    "c": "1e-4",
    "rule": "max:l=0",
    "stat_tol": "1e-8",
    "max_iters": "1000",
    "max_backtracks": "60",
    "initial_step": "max",
    "algorithm": "pgd",
    "stationarity": "regular",
    "seed": "0",
}


class SpecError(ValueError):
    """An experiment spec field failed to parse."""


def _fmt(x: float) -> str:
    return _FLOAT_FMT % x


def _fmt_point(p: Point) -> str:
    return "(" + ", ".join(_fmt(c) for c in p.data) + ")"


# -- spec parsing -------------------------------------------------------------


def read_config_file(path: str) -> dict[str, str]:
    """Flat key=value file; '#' starts a comment, blank lines are skipped."""
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep or not key.strip():
                raise SpecError(f"{path}:{lineno}: expected key=value, got {line!r}")
            values[key.strip().replace("-", "_")] = value.strip()
    return values


def merge_spec(args: argparse.Namespace, fields: tuple[str, ...]) -> dict[str, str]:
    merged = dict(_DEFAULTS)
    if getattr(args, "config", None):
        merged.update(read_config_file(args.config))
    for name in fields:
        value = getattr(args, name, None)
        if value is not None:
            merged[name] = str(value)
    return merged


def parse_point_field(text: str, shape: tuple[int, ...], field: str) -> Point:
    try:
        coords = [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise SpecError(f"field {field!r}: expected comma-separated numbers, got {text!r}") from None
    want = 1
    for m in shape:
        want *= m
    if len(coords) != want:
        raise SpecError(f"field {field!r}: expected {want} coordinates for shape {shape}, got {len(coords)}")
    return Point(coords, shape)


def parse_objective_field(text: str, shape: tuple[int, ...]) -> Objective:
    kind, _, rest = text.strip().partition(":")
    kind = kind.strip()
    if kind == "least-squares":
        key, sep, value = rest.partition("=")
        if key.strip() != "target" or not sep:
            raise SpecError(f"field 'objective': least-squares needs target=<coords>, got {rest!r}")
        return least_squares(parse_point_field(value, shape, "objective.target"))
    if kind == "constant":
        if not rest:
            return constant()
        key, sep, value = rest.partition("=")
        if key.strip() != "value" or not sep:
            raise SpecError(f"field 'objective': constant takes value=<number>, got {rest!r}")
        try:
            return constant(float(value))
        except ValueError:
            raise SpecError(f"field 'objective': bad constant value {value!r}") from None
    if kind == "quartic":
        if rest:
            raise SpecError(f"field 'objective': quartic takes no parameters, got {rest!r}")
        return quartic()
    raise SpecError(f"field 'objective': unknown kind {kind!r} (expected least-squares, constant, quartic)")


def parse_rule_field(text: str) -> MaxRule | AverageRule:
    kind, _, rest = text.strip().partition(":")
    kind = kind.strip()
    if kind == "max":
        key, sep, value = rest.partition("=")
        if not rest:
            return MaxRule(0)
        if key.strip() != "l" or not sep:
            raise SpecError(f"field 'rule': max takes l=<int>, got {rest!r}")
        try:
            return MaxRule(int(value))
        except ValueError:
            raise SpecError(f"field 'rule': bad window {value!r}") from None
    if kind in ("avg", "average"):
        key, sep, value = rest.partition("=")
        if key.strip() != "p" or not sep:
            raise SpecError(f"field 'rule': {kind} takes p=<float>, got {rest!r}")
        try:
            return AverageRule(float(value))
        except ValueError:
            raise SpecError(f"field 'rule': bad weight {value!r}") from None
    raise SpecError(f"field 'rule': expected max:l=K or avg:p=P, got {text!r}")


def _float_field(merged: dict[str, str], name: str) -> float:
    try:
        return float(merged[name])
    except ValueError:
        raise SpecError(f"field {name!r}: expected a number, got {merged[name]!r}") from None


def _int_field(merged: dict[str, str], name: str) -> int:
    try:
        return int(merged[name])
    except ValueError:
        raise SpecError(f"field {name!r}: expected an integer, got {merged[name]!r}") from None


def build_solver_config(merged: dict[str, str]) -> SolverConfig:
    step_text = merged["initial_step"].strip()
    if step_text in ("max", "alpha-max"):
        step = None
    else:
        try:
            step = float(step_text)
        except ValueError:
            raise SpecError(f"field 'initial_step': expected a number or 'max', got {step_text!r}") from None
    try:
        return SolverConfig(
            alpha_min=_float_field(merged, "alpha_min"),
            alpha_max=_float_field(merged, "alpha_max"),
            beta=_float_field(merged, "beta"),
            c=_float_field(merged, "c"),
            rule=parse_rule_field(merged["rule"]),
            stat_tol=_float_field(merged, "stat_tol"),
            max_iters=_int_field(merged, "max_iters"),
            max_backtracks=_int_field(merged, "max_backtracks"),
            initial_step=step,
        )
    except (ValueError, TypeError) as err:
        raise SpecError(f"bad solver configuration: {err}") from None


def _require(merged: dict[str, str], name: str) -> str:
    if name not in merged or not merged[name]:
        raise SpecError(f"field {name!r} is required (flag --{name.replace('_', '-')} or config file)")
    return merged[name]


# -- CSV output ---------------------------------------------------------------


def trace_header(dim: int) -> list[str]:
    return (["iter", "f", "mu", "alpha", "backtracks", "stat_regular",
             "stat_proximal_witness"] + [f"x{i}" for i in range(dim)])


def write_trace_csv(fh, trace: Trace, witness_flags: list[int]):
    dim = trace.iterates[0].data.size
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(trace_header(dim))
    for i in range(len(trace)):
        row = [str(i), _fmt(trace.f_values[i]), _fmt(trace.mu_values[i]),
               _fmt(trace.alphas[i]), str(trace.backtrack_counts[i]),
               _fmt(trace.stat_measures[i]), str(witness_flags[i])]
        row.extend(_fmt(c) for c in trace.iterates[i].data)
        writer.writerow(row)


def read_trace_csv(path: str) -> dict[str, list]:
    """Parse an emitted trace back into columns of floats/ints."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        columns: dict[str, list] = {name: [] for name in header}
        for row in reader:
            for name, cell in zip(header, row):
                if name in ("iter", "backtracks", "stat_proximal_witness"):
                    columns[name].append(int(cell))
                else:
                    columns[name].append(float(cell))
    return columns


def _witness_flags(set_: FeasibleSet, obj: Objective, trace: Trace, tol: float) -> list[int]:
    flags = []
    for x in trace.iterates:
        ok = in_proximal_normal_witness(set_, x, -obj.grad(x), tol=tol)
        flags.append(1 if ok else 0)
    return flags


def _linesearch_targets(obj: Objective, trace: Trace) -> list[Point | None]:
    """Gradient-step target x_i - alpha*grad(x_i) using the next accepted alpha."""
    targets: list[Point | None] = []
    for i in range(len(trace)):
        if i + 1 < len(trace):
            alpha = trace.alphas[i + 1]
            targets.append(trace.iterates[i] - alpha * obj.grad(trace.iterates[i]))
        else:
            targets.append(None)
    return targets


def _extend_coords(row: list, p: Point | None, dim: int):
    if p is None:
        row.extend([""] * dim)
    else:
        row.extend(_fmt(c) for c in p.data)


def write_compare_csv(fh, obj: Objective, traces: dict[str, Trace]):
    dim = next(iter(traces.values())).iterates[0].data.size
    header = ["iter"]
    for name in traces:
        header += [f"{name}_f"]
        header += [f"{name}_x{i}" for i in range(dim)]
        header += [f"{name}_t{i}" for i in range(dim)]
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(header)
    targets = {name: _linesearch_targets(obj, tr) for name, tr in traces.items()}
    rows = max(len(tr) for tr in traces.values())
    for i in range(rows):
        row = [str(i)]
        for name, tr in traces.items():
            if i < len(tr):
                row.append(_fmt(tr.f_values[i]))
                _extend_coords(row, tr.iterates[i], dim)
                _extend_coords(row, targets[name][i], dim)
            else:
                row.extend([""] * (1 + 2 * dim))
        writer.writerow(row)


def write_plot_data_csv(fh, obj: Objective, traces: dict[str, Trace]):
    dim = next(iter(traces.values())).iterates[0].data.size
    header = (["algorithm", "iter"] + [f"x{i}" for i in range(dim)]
              + [f"target{i}" for i in range(dim)])
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(header)
    for name, tr in traces.items():
        targets = _linesearch_targets(obj, tr)
        for i in range(len(tr)):
            row = [name, str(i)]
            _extend_coords(row, tr.iterates[i], dim)
            _extend_coords(row, targets[i], dim)
            writer.writerow(row)


# -- commands -----------------------------------------------------------------

_SOLVE_FIELDS = ("set", "objective", "x0", "alpha_min", "alpha_max", "beta", "c",
                 "rule", "stat_tol", "max_iters", "max_backtracks", "initial_step",
                 "algorithm", "stationarity", "seed", "out", "emit_plot_data")


def _build_problem(merged: dict[str, str]):
    set_ = sets.from_spec(_require(merged, "set"))
    obj = parse_objective_field(_require(merged, "objective"), set_.ambient_shape)
    x0 = parse_point_field(_require(merged, "x0"), set_.ambient_shape, "x0")
    cfg = build_solver_config(merged)
    return set_, obj, x0, cfg


def _summary_line(name: str, set_: FeasibleSet, obj: Objective, trace: Trace,
                  classify_tol: float) -> str:
    report = classify_stationarity(set_, obj, trace.final(), tol=classify_tol)
    return (f"{name}: termination={trace.termination.value} steps={len(trace) - 1} "
            f"final-f={_fmt(trace.f_values[-1])} final-x={_fmt_point(trace.final())} "
            f"classification={report.classification} d-regular={_fmt(report.d_regular)}")


def cmd_solve(args: argparse.Namespace) -> int:
    merged = merge_spec(args, _SOLVE_FIELDS)
    set_, obj, x0, cfg = _build_problem(merged)
    if not set_.contains(x0):
        print(f"error: x0 is not on {set_!r}", file=sys.stderr)
        return EXIT_INFEASIBLE
    algorithm = merged["algorithm"]
    if algorithm == "pgd":
        trace = pgd(set_, obj, x0, cfg, stationarity=merged["stationarity"])
    elif algorithm == "p2gd":
        trace = p2gd(set_, obj, x0, cfg)
    else:
        raise SpecError(f"field 'algorithm': expected pgd or p2gd, got {algorithm!r}")
    classify_tol = 10.0 * cfg.stat_tol
    flags = _witness_flags(set_, obj, trace, classify_tol)
    out = merged.get("out")
    if out:
        with open(out, "w", newline="", encoding="utf-8") as fh:
            write_trace_csv(fh, trace, flags)
        _log.info("trace written to %s", out)
        print(_summary_line(algorithm, set_, obj, trace, classify_tol))
    else:
        write_trace_csv(sys.stdout, trace, flags)
        print(_summary_line(algorithm, set_, obj, trace, classify_tol), file=sys.stderr)
    plot_path = merged.get("emit_plot_data")
    if plot_path:
        with open(plot_path, "w", newline="", encoding="utf-8") as fh:
            write_plot_data_csv(fh, obj, {algorithm: trace})
    return EXIT_SOLVER if trace.termination is Termination.BACKTRACK_FAILURE else EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    merged = merge_spec(args, _SOLVE_FIELDS)
    set_, obj, x0, cfg = _build_problem(merged)
    if not set_.contains(x0):
        print(f"error: x0 is not on {set_!r}", file=sys.stderr)
        return EXIT_INFEASIBLE
    try:
        traces = {"pgd": pgd(set_, obj, x0, cfg, stationarity=merged["stationarity"]),
                  "p2gd": p2gd(set_, obj, x0, cfg)}
    except NotImplementedError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    classify_tol = 10.0 * cfg.stat_tol
    out = merged.get("out")
    if out:
        with open(out, "w", newline="", encoding="utf-8") as fh:
            write_compare_csv(fh, obj, traces)
    else:
        write_compare_csv(sys.stdout, obj, traces)
    plot_path = merged.get("emit_plot_data")
    if plot_path:
        with open(plot_path, "w", newline="", encoding="utf-8") as fh:
            write_plot_data_csv(fh, obj, traces)
    stream = sys.stdout if out else sys.stderr
    failed = False
    for name, trace in traces.items():
        print(_summary_line(name, set_, obj, trace, classify_tol), file=stream)
        flag = detect_apocalypse(set_, obj, trace, tol=classify_tol)
        note = f" note={flag.note!r}" if flag.note else ""
        print(f"apocalypse {name}: flagged={str(flag.flagged).lower()} "
              f"limit={_fmt_point(flag.limit_point)} "
              f"measure-at-limit={_fmt(flag.measure_at_limit)}{note}", file=stream)
        failed = failed or trace.termination is Termination.BACKTRACK_FAILURE
    return EXIT_SOLVER if failed else EXIT_OK


def cmd_cones(args: argparse.Namespace) -> int:
    set_ = sets.from_spec(args.set)
    x = parse_point_field(args.x, set_.ambient_shape, "x")
    v = parse_point_field(args.v, set_.ambient_shape, "v")
    if not set_.contains(x):
        print(f"error: x is not on {set_!r}", file=sys.stderr)
        return EXIT_INFEASIBLE
    print(f"set: {set_!r}")
    print(f"x: {_fmt_point(x)}  stratum: {set_.stratum_id(x)}")
    print(f"v: {_fmt_point(v)}")
    print(f"dist-regular-normal: {_fmt(set_.dist_regular_normal(x, v))}")
    print(f"dist-proximal-normal (infimum): {_fmt(set_.dist_proximal_normal(x, v))}")
    print(f"proximal-member (closed form): {str(set_.in_proximal_normal(x, v)).lower()}")
    alpha = proximal_normal_witness(set_, x, v)
    witness = f"alpha={_fmt(alpha)}" if alpha is not None else "none"
    print(f"proximal-witness: {witness}")
    print(f"in-general-normal: {str(set_.in_general_normal(x, v)).lower()}")
    try:
        print(f"tangent-projection: {_fmt_point(set_.project_tangent(x, v))}")
    except NotImplementedError:
        print("tangent-projection: unavailable")
    return EXIT_OK


# -- property suites ----------------------------------------------------------


def _suite_sets() -> list[FeasibleSet]:
    return [sets.SparseSet(6, 2), sets.NonnegSparseSet(6, 2),
            sets.LowRankSet(4, 4, 2), sets.PsdLowRankSet(4, 2),
            sets.CurveSet(), sets.EpigraphSet()]


def _reference_sets() -> list[FeasibleSet]:
    return [sets.SparseSet(6, 2), sets.NonnegSparseSet(6, 2),
            sets.LowRankSet(4, 4, 2), sets.PsdLowRankSet(4, 2)]


def suite_projected_translation(seed: int, trials: int) -> tuple[bool, list[str]]:
    rng = np.random.default_rng(seed)
    pool = _suite_sets()
    for t in range(trials):
        set_ = pool[t % len(pool)]
        x = set_.random_point(rng)
        scale = float(rng.choice([0.01, 0.3, 1.0, 3.0]))
        v = Point(scale * rng.standard_normal(x.data.size), x.shape)
        ok_dist, ok_ip = projected_translation_check(set_, x, v)
        if not (ok_dist and ok_ip):
            return False, [f"trial {t}: set={set_!r} x={_fmt_point(x)} v={_fmt_point(v)} "
                           f"dist-ok={ok_dist} ip-ok={ok_ip}"]
    return True, [f"{trials} trials across {len(pool)} sets"]


def suite_prox_equals_regular(seed: int, trials: int) -> tuple[bool, list[str]]:
    rng = np.random.default_rng(seed)
    points = max(1, trials)
    directions = 20
    checked = 0
    for set_ in _reference_sets():
        for stratum in set_.stratum_ids:
            for _ in range(points):
                x = set_.random_point(rng, stratum=stratum)
                for _ in range(directions):
                    v = set_.sample_regular_normal(x, rng)
                    if proximal_normal_witness(set_, x, v) is None:
                        return False, [f"set={set_!r} stratum={stratum} "
                                       f"x={_fmt_point(x)} v={_fmt_point(v)}"]
                    checked += 1
    return True, [f"{checked} regular-normal directions certified proximal"]


def suite_armijo_postcondition(seed: int, trials: int) -> tuple[bool, list[str]]:
    rng = np.random.default_rng(seed)
    pool = _reference_sets()
    rules = [MaxRule(0), MaxRule(2), MaxRule(5),
             AverageRule(0.1), AverageRule(0.5), AverageRule(1.0)]
    steps = 0
    for t in range(trials):
        set_ = pool[t % len(pool)]
        target = Point(rng.standard_normal(set_.random_point(rng).data.size),
                       set_.ambient_shape)
        obj = least_squares(target)
        x0 = set_.random_point(rng)
        alpha = float(rng.choice([0.3, 0.7, 1.0, 1.3]))
        cfg = SolverConfig(alpha_min=1e-4, alpha_max=alpha, beta=0.5,
                           c=float(rng.choice([1e-4, 0.1, 0.4])),
                           rule=rules[t % len(rules)], stat_tol=1e-8, max_iters=500)
        trace = pgd(set_, obj, x0, cfg)
        for i in range(1, len(trace)):
            x_prev, x_next = trace.iterates[i - 1], trace.iterates[i]
            gap = x_next - x_prev
            slack = 1e-10 * max(1.0, abs(trace.f_values[0]))
            rhs = trace.mu_values[i - 1] + cfg.c * float(np.dot(obj.grad(x_prev).data, gap.data))
            if trace.f_values[i] > rhs + slack:
                return False, [f"trial {t}: Armijo violated at step {i}"]
            decay = trace.mu_values[i - 1] - cfg.c / (2.0 * trace.alphas[i]) * float(np.dot(gap.data, gap.data))
            if trace.f_values[i] > decay + slack:
                return False, [f"trial {t}: sufficient decrease violated at step {i}"]
            if not set_.contains(x_next):
                return False, [f"trial {t}: infeasible iterate at step {i}"]
            steps += 1
    return True, [f"{trials} solves, {steps} accepted steps replayed"]


SUITES = {
    "projected-translation": (suite_projected_translation, 10000),
    "prox-equals-regular": (suite_prox_equals_regular, 100),
    "armijo-postcondition": (suite_armijo_postcondition, 100),
}


def cmd_check(args: argparse.Namespace) -> int:
    if args.suite not in SUITES:
        print(f"error: unknown suite {args.suite!r}; known: {', '.join(sorted(SUITES))}",
              file=sys.stderr)
        return EXIT_USAGE
    fn, default_trials = SUITES[args.suite]
    trials = args.trials if args.trials is not None else default_trials
    seed = args.seed if args.seed is not None else 0
    passed, detail = fn(seed, trials)
    status = "PASS" if passed else "FAIL"
    print(f"suite {args.suite}: {status} (seed={seed})")
    for line in detail:
        print(("  " if passed else "  counterexample: ") + line)
    return EXIT_OK if passed else EXIT_SUITE


# -- entry point --------------------------------------------------------------


def _add_solver_flags(p: argparse.ArgumentParser):
    p.add_argument("--config", help="flat key=value config file; flags override it")
    p.add_argument("--set", help="feasible set spec, e.g. sparse:n=2,s=1")
    p.add_argument("--objective", help="objective spec, e.g. least-squares:target=1,0")
    p.add_argument("--x0", help="starting point, comma-separated (row-major for matrices)")
    p.add_argument("--alpha-min", dest="alpha_min", type=float)
    p.add_argument("--alpha-max", dest="alpha_max", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--c", type=float)
    p.add_argument("--rule", help="max:l=K or avg:p=P")
    p.add_argument("--stat-tol", dest="stat_tol", type=float)
    p.add_argument("--max-iters", dest="max_iters", type=int)
    p.add_argument("--max-backtracks", dest="max_backtracks", type=int)
    p.add_argument("--initial-step", dest="initial_step",
                   help="initial line-search step: a number or 'max'")
    p.add_argument("--stationarity", choices=["regular", "proximal"])
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="write the CSV trace here instead of stdout")
    p.add_argument("--emit-plot-data", dest="emit_plot_data",
                   help="also write point/arrow series for plotting to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncpgd",
        description="Projected gradient descent on nonconvex closed sets, "
                    "with cone queries and stationarity certification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="run one algorithm and emit a CSV trace")
    _add_solver_flags(p_solve)
    p_solve.add_argument("--algorithm", choices=["pgd", "p2gd"])
    p_solve.set_defaults(fn=cmd_solve)

    p_cmp = sub.add_parser("compare", help="run pgd and p2gd side by side")
    _add_solver_flags(p_cmp)
    p_cmp.set_defaults(fn=cmd_compare)

    p_cones = sub.add_parser("cones", help="query the cones of a set at a point")
    p_cones.add_argument("--set", required=True)
    p_cones.add_argument("--x", required=True)
    p_cones.add_argument("--v", required=True)
    p_cones.set_defaults(fn=cmd_cones)

    p_check = sub.add_parser("check", help="run a randomized property suite")
    p_check.add_argument("--suite", required=True,
                         help=f"one of: {', '.join(sorted(SUITES))}")
    p_check.add_argument("--seed", type=int)
    p_check.add_argument("--trials", type=int,
                         help="trial count (for prox-equals-regular: points per stratum)")
    p_check.set_defaults(fn=cmd_check)

    return parser


def _configure_logging():
    level_name = os.environ.get("NCPGD_LOG", "info").strip().lower()
    levels = {"quiet": logging.WARNING, "info": logging.INFO, "debug": logging.DEBUG}
    level = levels.get(level_name)
    if level is None:
        level = logging.INFO
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(levelname)s %(name)s: %(message)s")
    if level_name not in levels:
        _log.warning("NCPGD_LOG=%r not in {quiet, info, debug}; using info", level_name)


def main(argv=None) -> int:
    _configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_USAGE if err.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except InfeasiblePointError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (SpecError, ValueError, NotImplementedError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except BacktrackError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_SOLVER
    except np.linalg.LinAlgError as err:
        print(f"error: decomposition failed: {err}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
