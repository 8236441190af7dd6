"""Command-line interface.

Subcommands
-----------
scan        parameter sweep of the correlation measures over (r, gamma/Gamma, t)
death-time  sudden-death times of the selected measures
mc-verify   Monte-Carlo validation of the channel against the analytic evolution

All times are reported as the dimensionless Gamma*t (the damping rate is
normalized to 1).  Grids can come from flags or from a flat key=value
config file (repeated keys build grids); flags win over the file.
Exit codes: 0 success, 2 usage error, 3 numerical-contract violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

import numpy as np

from .channel import evolve_dephasing
from .closedform import closed_form, death_time
from .errors import ContractError
from .measures import optimize_bell_angles
from .noise import MARKOVIAN_RATIO, NoiseParams
from .pipeline import numeric_report
from .states import FAMILIES, PurityMix, make_state
from .trajectories import MAX_GAMMA_DT, MODES, TrajectoryConfig, ensemble_stats

MEASURES = ("N", "C", "D", "mabk", "svetlichny")

SCAN_COLUMNS = ("family", "r", "gamma_ratio", "Gt", "N", "C", "D",
                "mabk_minus_1", "svet_minus_4", "D_branch")
DEATH_COLUMNS = ("family", "measure", "r", "gamma_ratio", "Gt_death")

#: elements whose MC estimate has zero variance must match this closely.
_EXACT_TOL = 1e-12
_Z_LIMIT = 4.0
_MIN_TRAJ_FOR_VERDICT = 100


def _fmt(x) -> str:
    """12-significant-digit, locale-independent number formatting."""
    if x is None:
        return "none"
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    v = float(x)
    if v == 0.0:
        v = 0.0  # normalize -0.0
    return f"{v:.12g}"


def _jnum(x):
    return None if x is None else float(f"{float(x):.12g}")


def _read_config(path: str) -> dict:
    """Flat key=value file; repeated keys accumulate into lists."""
    conf: dict[str, list[str]] = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ContractError(f"malformed config line: {raw.strip()!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            conf.setdefault(key, []).append(value)
    return conf


def _floats(text: str) -> list[float]:
    return [float(part) for part in text.split(",") if part.strip()]


def _resolve(args, conf, key, default, *, is_list=False, cast=str):
    """Flag value if given, else config value(s), else default."""
    flag = getattr(args, key, None)
    if flag is not None:
        return _floats(flag) if is_list else flag
    if key in conf:
        values = conf[key]
        if is_list:
            out: list[float] = []
            for v in values:
                out.extend(_floats(v))
            return out
        return cast(values[-1])
    return default


def _add_common(sub):
    sub.add_argument("--family", choices=FAMILIES, default=None)
    sub.add_argument("--r", default=None, help="purity value or comma list")
    sub.add_argument("--gamma-ratio", dest="gamma_ratio", default=None,
                     help="gamma/Gamma value or comma list")
    sub.add_argument("--config", default=None, help="flat key=value config file")
    sub.add_argument("--out", default=None, help="output path (default stdout)")
    sub.add_argument("--format", choices=("csv", "json"), default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trideph",
        description="Quantum-correlation dynamics of three dephasing qubits "
                    "under Ornstein-Uhlenbeck noise.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    scan = sub.add_parser("scan", help="sweep measures over (r, gamma/Gamma, Gt)")
    _add_common(scan)
    scan.add_argument("--t-max", dest="t_max", default=None)
    scan.add_argument("--t-steps", dest="t_steps", default=None)
    scan.add_argument("--measures", default=None, help="comma subset of " + ",".join(MEASURES))
    scan.add_argument("--numeric", action="store_true", default=None,
                      help="use the numeric pipeline instead of closed forms")

    death = sub.add_parser("death-time", help="tabulate sudden-death times")
    _add_common(death)
    death.add_argument("--measures", default=None)

    mc = sub.add_parser("mc-verify", help="validate the channel by trajectory averaging")
    _add_common(mc)
    mc.add_argument("--t-max", dest="t_max", default=None)
    mc.add_argument("--t-steps", dest="t_steps", default=None)
    mc.add_argument("--traj", default=None, help="number of trajectories")
    mc.add_argument("--dt", default=None, help="ou-path integration step")
    mc.add_argument("--seed", default=None)
    mc.add_argument("--mode", choices=MODES, default=None)
    return parser


def _emit(lines_or_text, out_path):
    text = lines_or_text if isinstance(lines_or_text, str) else "\n".join(lines_or_text) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_out(rows, columns, fmt, out_path):
    if fmt == "json":
        payload = [dict(zip(columns, row)) for row in rows]
        _emit(json.dumps(payload, indent=2) + "\n", out_path)
    else:
        lines = [",".join(columns)]
        lines.extend(",".join(_fmt(cell) for cell in row) for row in rows)
        _emit(lines, out_path)


def _parse_measures(parser, text):
    if text is None:
        return list(MEASURES)
    chosen = [m.strip() for m in text.split(",") if m.strip()]
    for m in chosen:
        if m not in MEASURES:
            parser.error(f"unknown measure {m!r}; choose from {','.join(MEASURES)}")
    return chosen


def _grid_args(parser, args, conf):
    family = _resolve(args, conf, "family", None)
    if family is None:
        parser.error("--family is required (flag or config)")
    if family not in FAMILIES:
        parser.error(f"unknown family {family!r}")
    r_grid = _resolve(args, conf, "r", [0.98], is_list=True)
    ratio_grid = _resolve(args, conf, "gamma_ratio", [MARKOVIAN_RATIO], is_list=True)
    if any(not 0.0 <= r <= 1.0 for r in r_grid):
        parser.error("purity values must lie in [0, 1]")
    if any(g <= 0 for g in ratio_grid):
        parser.error("gamma-ratio values must be positive")
    return family, r_grid, ratio_grid


def _time_grid(parser, args, conf):
    t_max = float(_resolve(args, conf, "t_max", 5.0, cast=float))
    t_steps = int(_resolve(args, conf, "t_steps", 101, cast=int))
    if t_max < 0 or t_steps < 1:
        parser.error("need t-max >= 0 and t-steps >= 1")
    return np.linspace(0.0, t_max, t_steps)


def cmd_scan(parser, args) -> int:
    conf = _read_config(args.config) if args.config else {}
    family, r_grid, ratio_grid = _grid_args(parser, args, conf)
    t_grid = _time_grid(parser, args, conf)
    measures = _parse_measures(parser, _resolve(args, conf, "measures", None))
    numeric = args.numeric or str(_resolve(args, conf, "numeric", "0")) in ("1", "true", "yes")
    fmt = _resolve(args, conf, "format", "csv")
    out_path = _resolve(args, conf, "out", None)

    theta_mabk = optimize_bell_angles(family, "mabk").theta_bc
    theta_svet = optimize_bell_angles(family, "svetlichny").theta_bc

    rows = []
    for r in r_grid:
        for ratio in ratio_grid:
            noise = NoiseParams.from_ratio(ratio)
            for t in t_grid:
                if numeric:
                    rep = numeric_report(family, r, noise, float(t),
                                         theta_bc_mabk=theta_mabk,
                                         theta_bc_svet=theta_svet)
                else:
                    # each Bell expectation is taken at its own optimal angle
                    rep = closed_form(family, noise, r, float(t), theta_mabk)
                    svet = closed_form(family, noise, r, float(t), theta_svet).svetlichny
                    rep = replace(rep, svetlichny=svet)
                row = {
                    "family": family, "r": r, "gamma_ratio": ratio, "Gt": float(t),
                    "N": rep.N if "N" in measures else "",
                    "C": rep.C if "C" in measures else "",
                    "D": rep.D if "D" in measures else "",
                    "mabk_minus_1": rep.mabk - 1.0 if "mabk" in measures else "",
                    "svet_minus_4": rep.svetlichny - 4.0 if "svetlichny" in measures else "",
                    "D_branch": (rep.d_branch if rep.d_branch else "")
                                if "D" in measures else "",
                }
                rows.append(tuple(row[c] for c in SCAN_COLUMNS))

    if fmt == "json":
        payload = []
        for row in rows:
            entry = dict(zip(SCAN_COLUMNS, row))
            for key in ("r", "gamma_ratio", "Gt", "N", "C", "D",
                        "mabk_minus_1", "svet_minus_4"):
                if entry[key] != "":
                    entry[key] = _jnum(entry[key])
            payload.append(entry)
        _emit(json.dumps(payload, indent=2) + "\n", out_path)
    else:
        _rows_out(rows, SCAN_COLUMNS, "csv", out_path)
    return 0


def cmd_death_time(parser, args) -> int:
    conf = _read_config(args.config) if args.config else {}
    family, r_grid, ratio_grid = _grid_args(parser, args, conf)
    measures = _parse_measures(parser, _resolve(args, conf, "measures", None))
    fmt = _resolve(args, conf, "format", "csv")
    out_path = _resolve(args, conf, "out", None)

    rows = []
    for measure in measures:
        for r in r_grid:
            for ratio in ratio_grid:
                td = death_time(family, measure, NoiseParams.from_ratio(ratio), r)
                rows.append((family, measure, r, ratio, td))
    if fmt == "json":
        payload = [
            {"family": fam, "measure": meas, "r": _jnum(r), "gamma_ratio": _jnum(g),
             "Gt_death": _jnum(td)}
            for fam, meas, r, g, td in rows
        ]
        _emit(json.dumps(payload, indent=2) + "\n", out_path)
    else:
        _rows_out(rows, DEATH_COLUMNS, "csv", out_path)
    return 0


def cmd_mc_verify(parser, args) -> int:
    conf = _read_config(args.config) if args.config else {}
    family, r_grid, ratio_grid = _grid_args(parser, args, conf)
    t_grid = _time_grid(parser, args, conf) if (args.t_max or "t_max" in conf) \
        else np.linspace(0.0, 2.0, 5)
    n_traj = int(_resolve(args, conf, "traj", 10_000, cast=int))
    dt = float(_resolve(args, conf, "dt", 1e-3, cast=float))
    seed = int(_resolve(args, conf, "seed", 0, cast=int))
    mode = _resolve(args, conf, "mode", "exact-phase")
    if mode not in MODES:
        parser.error(f"unknown mode {mode!r}")
    out_path = _resolve(args, conf, "out", None)

    try:
        cfg = TrajectoryConfig(n_traj=n_traj, dt=dt, seed=seed, mode=mode)
    except ContractError as exc:
        parser.error(str(exc))
    if mode == "ou-path":
        for ratio in ratio_grid:
            if NoiseParams.from_ratio(ratio).bandwidth * dt > MAX_GAMMA_DT:
                parser.error(
                    f"ou-path needs gamma*dt <= {MAX_GAMMA_DT}; "
                    f"gamma/Gamma={ratio} with dt={dt} violates it"
                )

    points = []
    all_pass = True
    for r in r_grid:
        for ratio in ratio_grid:
            noise = NoiseParams.from_ratio(ratio)
            rho0 = make_state(PurityMix(family, r))
            for t in t_grid:
                stats = ensemble_stats(rho0, noise, float(t), cfg)
                exact = evolve_dephasing(rho0, noise, float(t))
                dev = stats.mean - exact
                z_parts = []
                exact_bad = 0
                for comp, se in ((dev.real, stats.se_real), (dev.imag, stats.se_imag)):
                    sampled = se > 0.0
                    if np.any(sampled):
                        z_parts.append(np.max(np.abs(comp[sampled]) / se[sampled]))
                    exact_bad += int(np.sum(np.abs(comp[~sampled]) > _EXACT_TOL))
                max_z = float(max(z_parts)) if z_parts else 0.0
                ok = max_z <= _Z_LIMIT and exact_bad == 0
                all_pass = all_pass and ok
                points.append({
                    "r": _jnum(r), "gamma_ratio": _jnum(ratio), "Gt": _jnum(t),
                    "max_z": _jnum(max_z), "exact_elements_off": exact_bad,
                    "pass": ok,
                })

    if n_traj < _MIN_TRAJ_FOR_VERDICT:
        status = "insufficient-statistics"
    else:
        status = "pass" if all_pass else "fail"
    report = {
        "family": family,
        "mode": mode,
        "n_traj": n_traj,
        "dt": _jnum(dt),
        "seed": seed,
        "z_limit": _Z_LIMIT,
        "points": points,
        "status": status,
    }
    _emit(json.dumps(report, indent=2) + "\n", out_path)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "scan":
            return cmd_scan(parser, args)
        if args.command == "death-time":
            return cmd_death_time(parser, args)
        return cmd_mc_verify(parser, args)
    except ContractError as exc:
        print(f"trideph: numerical contract violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
