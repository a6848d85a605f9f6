"""Command-line front end.

Subcommands: bound (certificate per alpha), solve (trajectory CSV + plot
script), detect (blow-up time report), b-curve (B(lambda) CSV + plot
script), reproduce (the three benchmark tables plus all trajectory CSVs).

Exit codes: 0 success, 2 configuration error, 3 blow-up theorem not
applicable, 4 numeric failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

import numpy as np

from .bounds import (
    BoundCertificate,
    Branch,
    PowerLawParams,
    b_domain_lower,
    big_B,
    theorem_bound,
)
from .config import ScenarioConfig, load_config
from .detect import DetectionReport, NoCrossing, RefinementPolicy, detect
from .errors import (
    ConfigError,
    DomainError,
    FracburstError,
    NotApplicableError,
    OverflowRangeError,
)
from .scenarios import EXAMPLE_ALPHAS, EXAMPLE_NAMES, detection_scenario, system_spec
from .solver import (
    Completed,
    NonFinite,
    Overflowed,
    PowerLawRhs,
    SolverConfig,
    SystemSpec,
    Trajectory,
    solve,
)

__all__ = ["main", "cmd_bound", "cmd_solve", "cmd_detect", "cmd_b_curve", "cmd_reproduce"]

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NOT_APPLICABLE = 3
EXIT_NUMERIC = 4

_B_CURVE_POINTS = 400


def _params(cfg: ScenarioConfig, alpha: float) -> PowerLawParams:
    return PowerLawParams(alpha=alpha, q1=cfg.q1, q2=cfg.q2,
                          p11=cfg.p11, p12=cfg.p12, p21=cfg.p21, p22=cfg.p22,
                          x0=cfg.x0, y0=cfg.y0)


def _system(cfg: ScenarioConfig, alpha: float) -> SystemSpec:
    rhs = PowerLawRhs(q=np.array([cfg.q1, cfg.q2]),
                      exponents=np.array([[cfg.p11, cfg.p12],
                                          [cfg.p21, cfg.p22]]))
    return SystemSpec(alpha=alpha, dimension=2, rhs=rhs,
                      initial_state=np.array([cfg.x0, cfg.y0]))


def _solver_config(cfg: ScenarioConfig) -> SolverConfig:
    if cfg.T is None:
        raise ConfigError("this command needs a [solver] section with T")
    return SolverConfig(T=cfg.T, N=cfg.N, overflow_threshold=cfg.threshold)


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def _write_csv(path: Path, times: np.ndarray, states: np.ndarray) -> None:
    n = states.shape[1]
    header = "t," + ",".join(f"x{i + 1}" for i in range(n))
    lines = [header]
    for k in range(len(times)):
        row = [f"{times[k]:.11e}"] + [f"{states[k, i]:.11e}" for i in range(n)]
        lines.append(",".join(row))
    with open(path, "w", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def _write_trajectory_plot(csv_path: Path, n_components: int) -> Path:
    plot_path = csv_path.with_suffix(".plot")
    series = ", ".join(
        [f"'{csv_path.name}' using 1:2 with lines"]
        + [f"'' using 1:{i + 2} with lines" for i in range(1, n_components)]
    )
    script = "\n".join([
        "set datafile separator ','",
        "set key autotitle columnhead",
        "set xlabel 't'",
        f"plot {series}",
        "",
    ])
    with open(plot_path, "w", newline="") as fh:
        fh.write(script)
    return plot_path


def _write_b_curve_plot(csv_path: Path, lambda_m: float) -> Path:
    plot_path = csv_path.with_suffix(".plot")
    script = "\n".join([
        "set datafile separator ','",
        "set key autotitle columnhead",
        "set xlabel 'lambda'",
        f"set arrow from {lambda_m:.11e}, graph 0 to {lambda_m:.11e}, graph 1 nohead dashtype 2",
        f"plot '{csv_path.name}' using 1:2 with lines",
        "",
    ])
    with open(plot_path, "w", newline="") as fh:
        fh.write(script)
    return plot_path


def _print_certificate(cert: BoundCertificate) -> None:
    branch = cert.branch.name
    print(f"  branch   = {branch} (j = {cert.j})")
    print(f"  gamma_j  = {_fmt(cert.gamma_j)}")
    print(f"  p_j      = {_fmt(cert.p_j)}")
    print(f"  lambda_m = {_fmt(cert.scalar.lambda_m)}")
    print(f"  tau_ub   = {_fmt(cert.tau_ub)}")
    if cert.alternate is not None:
        alt = cert.alternate
        print(f"  alternate branch {alt.branch.name}: tau_ub = {_fmt(alt.tau_ub)}")


def cmd_bound(cfg: ScenarioConfig) -> int:
    code = EXIT_OK
    for alpha in cfg.alphas:
        print(f"alpha = {alpha:g}")
        try:
            cert = theorem_bound(_params(cfg, alpha))
        except NotApplicableError as exc:
            print(f"  not applicable: {exc}")
            for violation in exc.violations:
                print(f"    {violation}")
            code = EXIT_NOT_APPLICABLE
            continue
        except DomainError as exc:
            print(f"  not applicable: {exc}")
            code = EXIT_NOT_APPLICABLE
            continue
        _print_certificate(cert)
    return code


def _status_line(alpha: float, trajectory: Trajectory) -> str:
    status = trajectory.status
    rows = trajectory.states.shape[0]
    if isinstance(status, Completed):
        return (f"alpha={alpha:g}: completed, final t = {_fmt(trajectory.times[-1])}, "
                f"{rows} rows")
    if isinstance(status, Overflowed):
        return (f"alpha={alpha:g}: overflowed at t = {_fmt(trajectory.times[-1])} "
                f"(component {status.component + 1}), {rows} rows")
    return f"alpha={alpha:g}: non-finite at step {status.step}, {rows} rows"


def cmd_solve(cfg: ScenarioConfig, out_dir: Path = Path(".")) -> int:
    solver_cfg = _solver_config(cfg)
    for alpha in cfg.alphas:
        trajectory = solve(_system(cfg, alpha), solver_cfg)
        csv_path = out_dir / f"{cfg.name}_alpha{alpha:g}.csv"
        _write_csv(csv_path, trajectory.times, trajectory.states)
        _write_trajectory_plot(csv_path, trajectory.states.shape[1])
        print(_status_line(alpha, trajectory))
        print(f"  wrote {csv_path} and {csv_path.with_suffix('.plot')}")
    return EXIT_OK


def cmd_detect(cfg: ScenarioConfig) -> int:
    solver_cfg = _solver_config(cfg)
    policy = RefinementPolicy(budget=cfg.budget)
    for alpha in cfg.alphas:
        result = detect(_system(cfg, alpha), solver_cfg, policy)
        if isinstance(result, NoCrossing):
            print(f"alpha={alpha:g}: no crossing in [0, {solver_cfg.T:g}] "
                  f"at finest N = {result.finest_n}")
            continue
        state = "converged" if result.converged else "budget exhausted"
        print(f"alpha={alpha:g}: t_num = {_fmt(result.t_num)} "
              f"+/- {result.uncertainty:.3g} ({state})")
        for n, crossing in result.runs:
            label = "no crossing" if crossing is None else f"crossing t = {_fmt(crossing)}"
            print(f"  N={n}: {label}")
    return EXIT_OK


def cmd_b_curve(
    cfg: ScenarioConfig,
    lambda_min: Optional[float] = None,
    lambda_max: Optional[float] = None,
    out_dir: Path = Path("."),
) -> int:
    code = EXIT_OK
    for alpha in cfg.alphas:
        try:
            cert = theorem_bound(_params(cfg, alpha))
        except (NotApplicableError, DomainError) as exc:
            print(f"alpha={alpha:g}: not applicable: {exc}")
            code = EXIT_NOT_APPLICABLE
            continue
        pt, q = cert.p_tilde_j, cert.q_j
        lam_m = cert.scalar.lambda_m
        lo = b_domain_lower(alpha, pt, q)
        lmin = lambda_min if lambda_min is not None else lo + 1e-3 * max(1.0, abs(lo))
        lmax = lambda_max if lambda_max is not None else lam_m + 1.0
        if not (lo < lmin < lmax):
            raise DomainError(
                f"lambda range [{lmin}, {lmax}] must be increasing and above "
                f"the domain boundary {lo:.6g}"
            )
        grid = np.linspace(lmin, lmax, _B_CURVE_POINTS)
        values = []
        for lam in grid:
            try:
                values.append(big_B(float(lam), alpha, pt, q))
            except OverflowRangeError:
                values.append(float("inf"))
        csv_path = out_dir / f"{cfg.name}_alpha{alpha:g}_b.csv"
        lines = ["lambda,B"]
        for lam, val in zip(grid, values):
            lines.append(f"{lam:.11e},{val:.11e}")
        with open(csv_path, "w", newline="") as fh:
            fh.write("\n".join(lines) + "\n")
        _write_b_curve_plot(csv_path, lam_m)
        print(f"alpha={alpha:g}: lambda_m = {_fmt(lam_m)}, B_min = {_fmt(cert.scalar.B_min)}")
        print(f"  wrote {csv_path} and {csv_path.with_suffix('.plot')}")
    return code


@dataclass
class _ReproRow:
    example: int
    alpha: float
    lambda_m: Optional[float] = None
    t_num: Optional[float] = None
    tau_ub: Optional[float] = None
    no_crossing: bool = False
    error: Optional[str] = None


_FLAGGED_ROW = (1, 0.1)
_FLAG_NOTE = ("flagged: source table reads 0.085 but its figure reads 0.85; "
              "detected value shown, row excluded from the pass tally")


def _thread_count() -> int:
    raw = os.environ.get("FRACBURST_THREADS", "").strip()
    if raw:
        try:
            n = int(raw)
        except ValueError:
            raise ConfigError(f"FRACBURST_THREADS is not an integer: {raw!r}") from None
        if n < 1:
            raise ConfigError(f"FRACBURST_THREADS must be >= 1, got {n}")
        return n
    return os.cpu_count() or 1


def _reproduce_row(example: int, alpha: float, base_n: int, out_dir: Path) -> _ReproRow:
    row = _ReproRow(example=example, alpha=alpha)
    try:
        scenario = detection_scenario(example, alpha, base_n=base_n)
        row.tau_ub = scenario.certificate.tau_ub
        row.lambda_m = scenario.certificate.scalar.lambda_m
        spec = system_spec(scenario.params)
        result = detect(spec, scenario.base_config, RefinementPolicy(scenario.budget))
        if isinstance(result, NoCrossing):
            row.no_crossing = True
            finest_n = result.finest_n
        else:
            row.t_num = result.t_num
            finest_n = result.runs[-1][0]
        trajectory = solve(spec, replace(scenario.base_config, N=finest_n))
        csv_path = out_dir / f"{scenario.name}.csv"
        _write_csv(csv_path, trajectory.times, trajectory.states)
        _write_trajectory_plot(csv_path, trajectory.states.shape[1])
    except FracburstError as exc:
        row.error = f"{type(exc).__name__}: {exc}"
    return row


def cmd_reproduce(out_dir: Path = Path("."), base_n: int = 4096) -> int:
    out_dir.mkdir(parents=True, exist_ok=True)
    jobs = [(ex, alpha) for ex in (1, 2, 3) for alpha in EXAMPLE_ALPHAS]
    with ThreadPoolExecutor(max_workers=_thread_count()) as pool:
        rows = list(pool.map(
            lambda job: _reproduce_row(job[0], job[1], base_n, out_dir), jobs
        ))
    by_example: dict[int, list[_ReproRow]] = {1: [], 2: [], 3: []}
    for row in rows:
        by_example[row.example].append(row)

    any_error = False
    for example in (1, 2, 3):
        with_lambda = example == 1
        print(f"Example {example}")
        header = ["alpha"] + (["lambda_m"] if with_lambda else []) + ["t_num", "tau_ub", "t_num < tau_ub"]
        print("  " + "  ".join(f"{h:>14s}" for h in header))
        for row in by_example[example]:
            cells = [f"{row.alpha:g}"]
            if with_lambda:
                cells.append("-" if row.lambda_m is None else _fmt(row.lambda_m))
            if row.error is not None:
                cells += ["error", "-", "-"]
                any_error = True
            elif row.no_crossing:
                cells += ["no crossing", _fmt(row.tau_ub), "-"]
            else:
                sound = row.t_num < row.tau_ub
                cells += [_fmt(row.t_num), _fmt(row.tau_ub), "pass" if sound else "FAIL"]
            line = "  " + "  ".join(f"{c:>14s}" for c in cells)
            if (row.example, row.alpha) == _FLAGGED_ROW:
                line += "  *"
            print(line)
            if row.error is not None:
                print(f"    {row.error}")
        print()
    print(f"* {_FLAG_NOTE}")
    print(f"wrote trajectory CSVs and plot scripts to {out_dir}")
    return EXIT_NUMERIC if any_error else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracburst",
        description="Blow-up bounds and predictor-corrector solutions "
                    "for two-component Caputo power-law systems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="print the blow-up bound certificate")
    p_bound.add_argument("config")

    p_solve = sub.add_parser("solve", help="integrate and write trajectory CSVs")
    p_solve.add_argument("config")

    p_detect = sub.add_parser("detect", help="estimate the numerical blow-up time")
    p_detect.add_argument("config")

    p_curve = sub.add_parser("b-curve", help="sample the B(lambda) curve to CSV")
    p_curve.add_argument("config")
    p_curve.add_argument("--lambda-min", type=float, default=None)
    p_curve.add_argument("--lambda-max", type=float, default=None)

    p_repro = sub.add_parser("reproduce", help="rebuild the three benchmark tables")
    p_repro.add_argument("--out-dir", type=Path, default=Path("."))
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "reproduce":
            return cmd_reproduce(out_dir=args.out_dir)
        cfg = load_config(args.config)
        if args.command == "bound":
            return cmd_bound(cfg)
        if args.command == "solve":
            return cmd_solve(cfg)
        if args.command == "detect":
            return cmd_detect(cfg)
        return cmd_b_curve(cfg, args.lambda_min, args.lambda_max)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NotApplicableError as exc:
        print(f"not applicable: {exc}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    except DomainError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except FracburstError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
